"""Print the two-sided distance bounds for every body family.

For subsets of volume eps inside a unit-volume body, the farthest-apart
pair of such subsets sits at a distance that does not grow with the
dimension. The ball is the only family where the two sides meet exactly;
everywhere else there is a gap between the witness construction and the
enlargement argument.
"""

import math

from isodist import BodyFamily, bound_report

families = [BodyFamily.ball(), BodyFamily.cube(), BodyFamily.simplex(),
            BodyFamily.lp(1.0), BodyFamily.lp(1.5)]

print(f"{'family':10s} {'eps':>6s} {'lower':>10s} {'upper':>10s} {'ratio':>7s}")
for eps in (0.25, 0.1, 0.01, 0.001):
    for fam in families:
        rep = bound_report(fam, eps)
        print(f"{rep.family:10s} {eps:6g} {rep.lower:10.5f} {rep.upper:10.5f}"
              f" {rep.upper / rep.lower:7.3f}")
    print()

# the ball row is exact: -2 phi_inv(eps)/sqrt(e), no constants to chase
rep = bound_report(BodyFamily.ball(), 0.1)
assert rep.lower == rep.upper == rep.exact_limit
print("ball at eps=0.1 is exact:", rep.exact_limit)

# everything is O(sqrt(-log eps)) or O(-log eps); the cube upper bound at
# eps = 1e-12 is still only
print("cube upper bound at eps=1e-12:",
      round(bound_report(BodyFamily.cube(), 1e-12).upper, 4),
      "(sqrt(-log eps) growth, any dimension)")
print("simplex upper at eps=1e-12: ",
      round(bound_report(BodyFamily.simplex(), 1e-12).upper, 4),
      "(-log eps growth)")
print("ratio to sqrt(-ln eps):",
      round(bound_report(BodyFamily.cube(), 1e-12).upper
            / math.sqrt(-math.log(1e-12)), 4))
