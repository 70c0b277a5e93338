"""Dimension-free distance bounds between small subsets of convex bodies.

Inside a unit-volume convex body, two subsets of volume eps < 1/2 can
never be too far apart, and the bound does not grow with the dimension.
This package computes the bounds, the extremal constructions that show
their sharpness, and the discrete and Monte Carlo checks around them:

    specfun      gaussian-type distribution functions, inverses, radii
    profiles     isoperimetric profiles of the body families
    enlargement  the ODE comparison bound 2 int_eps^{1/2} dt/I(t)
    sections     hyperplane sections and their n -> inf limit laws
    witness      explicit far-apart pairs and two-sided bound reports
    lattice      exact discrete analogue on small grids
    montecarlo   deterministic samplers and numerical lemma checks
    cli          the `isodist` command
"""

from .bodies import BodyFamily, validate_epsilon, validate_p
from .enlargement import (EnlargementResult, delta_closed_form,
                          distance_upper_bound, time_to_half)
from .errors import (BudgetExceededError, DimensionMismatchError, DomainError,
                     EmptySetError, IsodistError, NonConvergenceError,
                     RangeError)
from .lattice import (Cell, ExtremalCheck, Grid, SubsetHandle,
                      count_cells_sum_le, final_segment, initial_segment,
                      scaled_max_distance, set_distance, simplicial_cmp,
                      t_boundary, verify_extremal_pairs)
from .montecarlo import (AvgDistanceResult, CutoffCheck, EstimateWithCI,
                         ExpTailCheck, SampleBatch, TMapCheck, TransferCheck,
                         average_distance_experiment, cutoff_gradient_check,
                         cutoff_h1, cutoff_h2, cutoff_product_check,
                         estimate_cap_volume, exp_tail_check, gaussian_to_cube_map,
                         sample_gaussian, sample_uniform, t_map,
                         t_map_jacobian, t_map_lipschitz_check,
                         t_map_opnorm_bound, transfer_map_check)
from .profiles import (DEFAULT_CONSTANTS, ConstantsConfig, IsoProfile,
                       ball_profile_limit, cube_profile, exp_measure_profile,
                       lp_profile, make_exp_measure_profile, make_profile,
                       simplex_profile, xlog_power_derivative)
from .sections import (ConvergenceReport, OrthogonalBallGeometry, SectionCurve,
                       convergence_report, cube_sum_cdf, lp_section_area,
                       lp_tail_volume, orthogonal_ball_geometry,
                       psi_p_density_limit, section_curve,
                       sphere_projection_cdf)
from .specfun import (kappa, phi, phi_inv, phi_inv_asymptote, phi_p,
                      phi_p_inv, psi_p, psi_p_inv, psi_p_inv_asymptote,
                      unit_volume_radius)
from .witness import (BoundReport, RegionDescriptor, RegionPair,
                      ball_caps_witness, bound_report, cube_diagonal_witness,
                      general_symmetric_lower, lp_caps_witness,
                      simplex_corner_witness)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
