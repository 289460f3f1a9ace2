"""Verification and bound computation for mixed-level orthogonal arrays."""

from .alphabet import (ArrayMultiset, FormatError, MixedAlphabet, StrengthReport, check_strength,
                       format_levels, format_oa, full_factorial, is_simple, max_strength,
                       parse_levels, parse_oa, q_t_modulus, read_oa)
from .additive import (CheckMatrix, additive_audit, block_span, dual_partition_check,
                       multispread_check, null_space_array, one_weight_check, parse_check_matrix,
                       read_check_matrix)
from .bounds import (BoundReport, bf_mixed, bf_pure, diestelkamp, generic_design_bound,
                     rounded_bound, tightness_verdict)
from .design import FourierProfile, character_sum, fourier_profile, is_algebraic_design
from .multigraph import (CrReport, GuardError, MultigraphParams, check_cr1, eigenvalue,
                         graph_params, is_independent, weighted_neighbors)
from .polybound import (PolyBoundResult, cubic_alpha, cubic_closed_form, distance_poly_value,
                        eval_poly_bound, krawtchouk, lp_bound)

__version__ = "0.1.0"
