"""Sections of the unit-volume l_p ball settle onto a fixed curve.

Slice the body with {x_1 = x}. As n grows, the (n-1)-volume of the slice
converges to psi_p(x) = e^{1/p} exp(-(2 Gamma(1+1/p) e^{1/p} x)^p) and the
volume past the slice converges to Psi_p(-x). The dimension disappears
from both. Same story for the cube (Irwin-Hall sums) and for coordinate
projections of the sphere, which flatten onto a Gaussian.
"""

import numpy as np

from isodist import (convergence_report, cube_sum_cdf, lp_section_area,
                     psi_p_density_limit, sphere_projection_cdf)

P = 1.5
grid = np.arange(0.0, 2.0001, 0.05)

print(f"x=0.1 section area of the l_{P} ball, by dimension:")
for n in (5, 25, 100, 400, 2000):
    print(f"  n={n:5d}  {lp_section_area(0.1, P, n):.6f}")
print(f"  limit   {psi_p_density_limit(0.1, P):.6f}")
print()

rep = convergence_report(P, [100, 200, 400], grid)
print("sup gap to the limit laws over x in [0, 2]:")
for n, gt, ga in zip(rep.n_list, rep.sup_gap_tail, rep.sup_gap_area):
    print(f"  n={n:3d}  tail {gt:.5f}  area {ga:.5f}")
print()

# cube version: P(S_n <= n/2 - a sqrt(n)) has a Gaussian limit in a
md = 15.0 - 0.34 * np.sqrt(30.0)
print("cube slab volume, exact Irwin-Hall at n=30:", round(cube_sum_cdf(30, md), 6))

# sphere version: at n=3 the projection is exactly uniform (Archimedes),
# by n=4000 it is Gaussian
print("sphere projection cdf at x=0.3:")
print("  n=3    ", sphere_projection_cdf(3, 0.3), " (uniform: (1+0.3/sqrt(3))/2 =",
      round((1 + 0.3 / np.sqrt(3)) / 2, 6), ")")
print("  n=4000 ", round(sphere_projection_cdf(4000, 0.3), 6))
