"""Upper bounds for w(AXB +/- BYA) and w(AB +/- BA)."""

import math
from dataclasses import dataclass, replace

from . import config
from .bounds import CartesianData, cartesian_data, crawford_excess, holds
from .linalg import DimensionError, InvariantViolation, as_matrix, operator_norm
from .numrange import numerical_radius

ROOT8 = 2.0 * math.sqrt(2.0)


def _clamped(value, scale, what):
    if value >= 0.0:
        return value
    if value >= -config.RADICAND_SLACK * max(1.0, scale):
        return 0.0
    raise InvariantViolation(f"{what} is negative ({value:.3e}); the lower bound it relies on failed")


def _same_dim(*mats):
    mats = [as_matrix(M) for M in mats]
    if len({M.shape for M in mats}) != 1:
        raise DimensionError("all matrices must have the same dimension")
    return mats


def _with_radius(A, data):
    if data is None:
        return cartesian_data(A, with_radius=True)
    if data.w is None:
        raise ValueError("cartesian data must include the numerical radius")
    return data


def nu(A):
    """The Crawford excess that the commutator bounds subtract from w(A)^2."""
    return crawford_excess(A if isinstance(A, CartesianData) else cartesian_data(A))


def _core(d):
    """sqrt(w^2(A) - nu(A))."""
    w2 = d.w**2
    return math.sqrt(_clamped(w2 - nu(d), w2, "w^2(A) - nu(A)"))


def _hk_radicand(d):
    w2 = d.w**2
    return _clamped(w2 - abs(d.re_norm**2 - d.im_norm**2) / 2.0, w2, "HK radicand")


def _corth3_radicands(d):
    w4 = d.w**4
    gap = abs(d.re_norm**4 - d.im_norm**4) / 2.0
    first = _clamped(w4 - d.c_re_sq_sq / 4.0 - gap, w4, "first fourth-power radicand")
    second = _clamped(w4 - gap, w4, "second fourth-power radicand")
    return first, second


def bound_th2(A, B, X, Y, *, data=None):
    """2 sqrt(2) ||B|| max(||X||, ||Y||) sqrt(w^2(A) - nu(A)); bounds w(AXB +/- BYA)."""
    A, B, X, Y = _same_dim(A, B, X, Y)
    d = _with_radius(A, data)
    return ROOT8 * operator_norm(B) * max(operator_norm(X), operator_norm(Y)) * _core(d)


def bound_corth2(A, B, *, data=None):
    """The X = Y = I case: 2 sqrt(2) ||B|| sqrt(w^2(A) - nu(A))."""
    A, B = _same_dim(A, B)
    return ROOT8 * operator_norm(B) * _core(_with_radius(A, data))


def bound_fong(A, B, *, data=None):
    """2 sqrt(2) ||B|| w(A)."""
    A, B = _same_dim(A, B)
    return ROOT8 * operator_norm(B) * _with_radius(A, data).w


def bound_hk(A, B, *, data=None):
    """2 sqrt(2) ||B|| sqrt(w^2(A) - | ||Re A||^2 - ||Im A||^2 | / 2)."""
    A, B = _same_dim(A, B)
    return ROOT8 * operator_norm(B) * math.sqrt(_hk_radicand(_with_radius(A, data)))


def bound_corth3(A, B, *, data=None):
    """Fourth-root bounds built on the w^4 lower bounds; returns (first, second)."""
    A, B = _same_dim(A, B)
    first, second = _corth3_radicands(_with_radius(A, data))
    b = ROOT8 * operator_norm(B)
    return b * first**0.25, b * second**0.25


@dataclass(frozen=True)
class CommutatorReport:
    """Commutator bounds for (A, B) next to the true radii they bound.

    ``w_true_plus`` and ``w_true_minus`` are w(AB + BA) and w(AB - BA). The
    ``w_th2_*`` fields are w(AXB +/- BYA) for the X, Y used in ``b_th2``
    (the identity when none were given).
    """

    nu: float
    w_true_plus: float
    w_true_minus: float
    w_th2_plus: float
    w_th2_minus: float
    b_th2: float
    b_corth2: float
    b_corth3_first: float
    b_corth3_second: float
    b_fong: float
    b_hk: float
    chain_ok: bool
    violations: tuple = ()

    def chain(self):
        """(name, lhs, rhs) triples; names starting with "w(" compare a true radius with a bound."""
        w_true = max(self.w_true_plus, self.w_true_minus)
        return [
            ("w(AXB+-BYA) <= b_th2", max(self.w_th2_plus, self.w_th2_minus), self.b_th2),
            ("w(AB+-BA) <= b_corth2", w_true, self.b_corth2),
            ("b_corth2 <= b_hk", self.b_corth2, self.b_hk),
            ("b_hk <= b_fong", self.b_hk, self.b_fong),
            ("w(AB+-BA) <= b_corth3_first", w_true, self.b_corth3_first),
            ("b_corth3_first <= b_corth3_second", self.b_corth3_first, self.b_corth3_second),
            ("b_corth3_second <= b_fong", self.b_corth3_second, self.b_fong),
        ]


def commutator_report(A, B, X=None, Y=None, *, grid=config.RADIUS_GRID, data=None,
                      slack=config.CHAIN_SLACK, soundness_slack=config.SOUNDNESS_SLACK):
    """All commutator bounds for (A, B), checked against numerically computed radii.

    Orderings between two bounds use ``slack``; a true radius against a
    bound uses ``soundness_slack``.
    """
    if (X is None) != (Y is None):
        raise ValueError("give both X and Y or neither")
    A, B = _same_dim(A, B)
    if data is None:
        data = cartesian_data(A, with_radius=True, grid=grid)
    d = _with_radius(A, data)
    AB, BA = A @ B, B @ A
    w_plus = numerical_radius(AB + BA, grid=grid).w
    w_minus = numerical_radius(AB - BA, grid=grid).w
    b = ROOT8 * operator_norm(B)
    core = _core(d)
    if X is None:
        w_th2_plus, w_th2_minus = w_plus, w_minus
        b_th2 = b * core
    else:
        A, B, X, Y = _same_dim(A, B, X, Y)
        AXB, BYA = A @ X @ B, B @ Y @ A
        w_th2_plus = numerical_radius(AXB + BYA, grid=grid).w
        w_th2_minus = numerical_radius(AXB - BYA, grid=grid).w
        b_th2 = b * max(operator_norm(X), operator_norm(Y)) * core
    first, second = _corth3_radicands(d)
    report = CommutatorReport(
        nu=nu(d),
        w_true_plus=w_plus,
        w_true_minus=w_minus,
        w_th2_plus=w_th2_plus,
        w_th2_minus=w_th2_minus,
        b_th2=b_th2,
        b_corth2=b * core,
        b_corth3_first=b * first**0.25,
        b_corth3_second=b * second**0.25,
        b_fong=b * d.w,
        b_hk=b * math.sqrt(_hk_radicand(d)),
        chain_ok=True,
    )
    bad = tuple(
        name for name, lhs, rhs in report.chain()
        if not holds(lhs, rhs, soundness_slack if name.startswith("w(") else slack)
    )
    return replace(report, chain_ok=not bad, violations=bad)
