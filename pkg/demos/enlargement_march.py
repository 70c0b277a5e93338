# The upper bounds all come from one mechanism: start a set at volume eps,
# grow it by the isoperimetric profile, and clock how long it takes the
# volume to reach 1/2. Two eps-sets both enlarged past 1/2 must overlap,
# so the distance between them is at most twice that time.
#
# delta_M = integral_eps^{1/2} dv / I(v)
#
# Below: the closed forms, adaptive quadrature, and a crude explicit Euler
# march all land on the same number.

from isodist import BodyFamily, delta_closed_form, make_profile, time_to_half

EPS = 0.1


def euler_march(profile, eps, step):
    v, s = eps, 0.0
    while v < 0.5:
        dv = profile(v) * step
        if v + dv >= 0.5:
            # linear interpolation inside the final step
            return s + step * (0.5 - v) / dv
        v += dv
        s += step
    return s


for fam in (BodyFamily.cube(), BodyFamily.ball(), BodyFamily.simplex(),
            BodyFamily.lp(1.5)):
    profile = make_profile(fam)
    closed = delta_closed_form(fam, EPS)
    quad = time_to_half(profile, EPS)
    print(f"{fam.label():8s} closed {closed:.8f}   quadrature {quad:.8f}"
          f"   (diff {abs(closed - quad):.2e})")

print()
print("Euler march on the cube, halving the step:")
profile = make_profile(BodyFamily.cube())
closed = delta_closed_form(BodyFamily.cube(), EPS)
for step in (1e-2, 5e-3, 2.5e-3, 1.25e-3):
    err = euler_march(profile, EPS, step) - closed
    print(f"  step {step:8.2e}  error {err:+.3e}")
# error halves with the step: first order, as it should be
