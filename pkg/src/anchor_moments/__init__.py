"""Expected power-displacement of uniform random sensors moved to anchors.

n sensors land uniformly at random on [0,1]; sensor i (the i-th smallest)
walks to the anchor (2i-1)/(2n), the unique layout covering the interval with
radius 1/(2n).  This package computes the expected total cost
sum_i E|X_i - t_i|^a exactly (rationals), in floating point (large n), and by
Monte Carlo, verifies the combinatorial and Beta-function identities the
closed forms rest on, and measures leading asymptotic constants on n-grids.
"""

__version__ = "0.1.0"

from .asymptotics import (
    AsymptoticReport,
    CoefficientSet,
    IdentityCheckResult,
    abel_anchor_sum,
    abel_anchor_sum_exact,
    diagonal_coefficients,
    leading_constant,
    remainder_diagnostic,
    vanishing_signed_sum,
    vanishing_tail_correction_sum,
    verify_diagonal_beta_identity,
)
from .combinatorics import (
    ExactRational,
    TriangleKind,
    TriangleTable,
    binomial,
    eulerian_second_order,
    expand_rising_to_powers,
    falling_factorial,
    finite_difference,
    rising_factorial,
    stirling_cycle,
    stirling_subset,
)
from .moments import (
    EXACT_N_GUARD,
    FloatMomentBreakdown,
    MomentBreakdown,
    MomentQuery,
    SensorMoment,
    SizeGuardError,
    anchor,
    folded_part_via_incomplete_beta,
    folded_split_via_incomplete_beta,
    per_sensor_moment_exact,
    total_moment_exact,
    total_moment_float,
)
from .simulation import SimulationConfig, SimulationResult, estimate, run_trial
from .special_functions import (
    HalfIntValue,
    IncompleteBetaQuery,
    beta_exact,
    gamma_half_int,
    incomplete_beta_float,
    incomplete_beta_regularized_exact,
    incomplete_beta_step_down,
    stirling_bounds,
)
