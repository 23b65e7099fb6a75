"""Default tolerances and grid sizes.

Every public function takes the relevant value as a keyword argument; these
constants are only the defaults.
"""

#: Jacobi stops once the off-diagonal Frobenius norm is below this times ||H||_F.
EIG_TOL = 1e-12
EIG_MAX_SWEEPS = 60

#: Largest entry change (relative to the largest entry) allowed when symmetrising.
HERMITIAN_TOL = 1e-10

RADIUS_GRID = 720
CRAWFORD_GRID = 720
BOUNDARY_POINTS = 360
DIAGNOSTIC_GRID = 360
#: Golden-section refinement stops when the bracket is narrower than this (radians).
GOLDEN_WIDTH = 1e-11
#: Number of best grid brackets refined when locating a maximum.
REFINE_BRACKETS = 3

#: Absolute spread of ||Re(e^{it} A)|| over t tolerated by the disk test.
DISK_TOL = 1e-6
#: Relative tolerance for deciding that a matrix sits in an equality case.
CHECK_TOL = 1e-8
#: Inequality chains accept lhs <= rhs + CHAIN_SLACK * max(1, rhs).
CHAIN_SLACK = 1e-9
#: A computed true radius may exceed an upper bound by at most this times max(1, bound).
SOUNDNESS_SLACK = 1e-8
#: Radicands in [-RADICAND_SLACK * max(1, scale), 0) are rounded to zero.
RADICAND_SLACK = 1e-9
#: Points within this distance (relative to max(1, scale)) of a hull edge count as inside.
HULL_EPS = 1e-10
