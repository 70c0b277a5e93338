# Lower bounds need witnesses: two explicit regions of volume eps that are
# provably far apart. Each family has its own geometry.
#
#   ball / l_p   opposite caps along a coordinate axis
#   cube         slabs at the two ends of the main diagonal
#   simplex      corner homotheties at two vertices
#
# At n=30 the distances are already within a few percent of their
# dimension-free limits, and a Monte Carlo volume check agrees with the
# advertised eps.

from isodist import (BodyFamily, ball_caps_witness, cube_diagonal_witness,
                     estimate_cap_volume, lp_caps_witness,
                     simplex_corner_witness)

EPS, N = 0.1, 30

for name, wit in [
        ("ball", ball_caps_witness(N, EPS)),
        ("lp(1.5)", lp_caps_witness(N, 1.5, EPS)),
        ("cube", cube_diagonal_witness(N, EPS)),
        ("simplex", simplex_corner_witness(N, EPS))]:
    gap = wit.distance / wit.limit_value - 1.0
    print(f"{name:8s} distance {wit.distance:.5f}  limit {wit.limit_value:.5f}"
          f"  ({gap:+.2%})")
    print(f"         A = {wit.region_a}")
    print(f"         B = {wit.region_b}")

print()
wit = ball_caps_witness(200, EPS)
a = wit.region_a.params["threshold"]
est = estimate_cap_volume(BodyFamily.ball(), 200, a, 200_000, seed=11)
print(f"MC volume of the n=200 ball cap at threshold {a:.5f}: "
      f"{est.estimate:.4f} +- {est.half_width_95:.4f} (want {EPS})")
