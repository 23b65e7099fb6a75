"""Numerical radius, numerical range and Crawford number of complex matrices.

Lower bounds for w(A) built from the Cartesian decomposition, numerical
checks of their equality cases, and upper bounds for w(AB +/- BA).
"""

__version__ = "0.1.0"

from ._backend import BACKEND
from .bounds import (
    BoundsReport,
    CartesianData,
    FourthPowerBounds,
    bound_bp,
    bound_crawford,
    bound_fourth_power,
    bound_re_im_gap,
    bound_sq_gap,
    bounds_report,
    cartesian_data,
    classical_lower,
    crawford_excess,
    kittaneh_sq,
)
from .commutator import (
    CommutatorReport,
    bound_corth2,
    bound_corth3,
    bound_fong,
    bound_hk,
    bound_th2,
    commutator_report,
    nu,
)
from .diagnostics import (
    DiagnosticsReport,
    check_half_norm_equality,
    check_kittaneh_equality,
    circular_disk_report,
    crawford_witness,
    norm_additivity_check,
)
from .ensembles import KINDS, EnsembleSpec, jordan_shift, sample
from .linalg import (
    ConvergenceError,
    DimensionError,
    InvariantViolation,
    LinalgError,
    NotHermitianError,
    hermitian_eig,
    imag_part,
    operator_norm,
    real_part,
)
from .matrixfile import MatrixFileError, parse_matrix, write_matrix
from .numrange import (
    CrawfordResult,
    RadiusResult,
    SupportProfile,
    SupportSample,
    crawford_hermitian,
    crawford_number,
    is_origin_centered_disk,
    numerical_radius,
    range_boundary,
    support_sample,
)
