"""Low-degree Hermite osculatory splines on refined partitions.

C1 splines of degree ``phi(i)`` next to each vertex ``v_i``, with a normalized
B-spline-like basis and three families of quasi-interpolants.
"""

from .bb import (BernsteinPiece, Interval, MultiIndex, bernstein_derivative, bernstein_eval,
                 blossom, c1_join_ordinate, control_polynomial, partial_blossom, subdivide)
from .basis import (BSplineLikeBasis, ControlInterval, GammaTable, UnsupportedConfigurationError,
                    bspline_like, classical_hermite_basis, control_interval, control_polynomial_T,
                    gamma_table, hermite_to_bspline_coeffs, partition_of_unity_check)
from .experiment import (ExperimentConfig, ResultRow, data_count, estimate_error, nco,
                         run_experiment)
from .quasi import (CapabilityError, FunctionOracle, differential_functional,
                    point_value_functional, polarization_functional, qi_coefficient_blossom,
                    quasi_interpolate)
from .space import (RefinedPartition, Spline, alternating_phi, dimension, evaluate,
                    hermite_interpolate, smoothness_report, uniform_refined_partition)
from .testfuncs import test_function

__version__ = "0.1.0"
