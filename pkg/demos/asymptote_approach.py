# How fast do the inverse profile functions reach their leading-order
# asymptotes? Slowly. The relative gap decays like 1/log(1/eps), so even
# at eps = 1e-12 the phi_inv asymptote is still ~6% off. Worth knowing
# before replacing the exact inverse with the asymptote anywhere.

from isodist import (phi_inv, phi_inv_asymptote, psi_p_inv,
                     psi_p_inv_asymptote)

print(f"{'eps':>8s} {'phi ratio':>10s} {'psi1 ratio':>11s} {'psi2 ratio':>11s}")
for k in range(2, 13):
    eps = 10.0 ** -k
    r_phi = phi_inv_asymptote(eps) / phi_inv(eps)
    r_p1 = psi_p_inv_asymptote(eps, 1.0) / psi_p_inv(eps, 1.0)
    r_p2 = psi_p_inv_asymptote(eps, 2.0) / psi_p_inv(eps, 2.0)
    print(f"{eps:8.0e} {r_phi:10.5f} {r_p1:11.5f} {r_p2:11.5f}")

print()
print("gaps shrink monotonically but take astronomically small eps to die:")
for k in (20, 50, 100):
    eps = 10.0 ** -k
    print(f"  eps=1e-{k:<3d} phi ratio {phi_inv_asymptote(eps) / phi_inv(eps):.5f}")
