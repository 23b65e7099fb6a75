"""Lower bounds for the numerical radius and the report that cross-checks them.

Squared and fourth-power bounds are kept in their natural power (they bound
w^2 or w^4) and are never square-rooted here.
"""

from dataclasses import dataclass, replace
from typing import NamedTuple

from . import config
from .linalg import as_matrix, hermitian_norm, imag_part, operator_norm, real_part
from .numrange import crawford_hermitian, numerical_radius


@dataclass(frozen=True)
class CartesianData:
    """Norms and Crawford numbers of A and its Cartesian parts.

    ``w`` is None unless the numerical radius was requested, since it is
    the only expensive field.
    """

    norm: float
    re_norm: float
    im_norm: float
    c_re: float
    c_im: float
    sum_norm: float  # ||A*A + AA*||
    diff_norm: float  # ||A*A - AA*||
    fourth_norm: float  # ||(A*A + AA*)^2 + 4 Re(A^2)^2||
    c_re_sq_sq: float  # c(Re(A^2)^2)
    w: float | None = None


def cartesian_data(A, *, with_radius=False, grid=config.RADIUS_GRID):
    A = as_matrix(A)
    R, I = real_part(A), imag_part(A)
    # Products are re-symmetrised since BLAS rounding breaks exact Hermitian symmetry.
    AhA, AAh = A.conj().T @ A, A @ A.conj().T
    S = real_part(AhA + AAh)
    R2 = real_part(A @ A)
    R2sq = real_part(R2 @ R2)
    return CartesianData(
        norm=operator_norm(A),
        re_norm=hermitian_norm(R),
        im_norm=hermitian_norm(I),
        c_re=crawford_hermitian(R),
        c_im=crawford_hermitian(I),
        sum_norm=hermitian_norm(S),
        diff_norm=hermitian_norm(real_part(AhA - AAh)),
        fourth_norm=hermitian_norm(real_part(S @ S + 4.0 * R2sq)),
        c_re_sq_sq=crawford_hermitian(R2sq),
        w=numerical_radius(A, grid=grid).w if with_radius else None,
    )


def _data(A):
    return A if isinstance(A, CartesianData) else cartesian_data(A)


def classical_lower(A):
    """||A|| / 2."""
    return _data(A).norm / 2.0


def bound_re_im_gap(A):
    """||A||/2 + | ||Re A|| - ||Im A|| | / 2, a lower bound for w(A)."""
    d = _data(A)
    return d.norm / 2.0 + abs(d.re_norm - d.im_norm) / 2.0


def kittaneh_sq(A):
    """||A*A + AA*|| / 4, a lower bound for w(A)^2."""
    return _data(A).sum_norm / 4.0


def bound_sq_gap(A):
    """Kittaneh's bound plus | ||Re A||^2 - ||Im A||^2 | / 2 (bounds w^2)."""
    d = _data(A)
    return d.sum_norm / 4.0 + abs(d.re_norm**2 - d.im_norm**2) / 2.0


def bound_bp(A):
    """Kittaneh's bound plus (c^2(Re A) + c^2(Im A)) / 2 (bounds w^2)."""
    d = _data(A)
    return d.sum_norm / 4.0 + (d.c_re**2 + d.c_im**2) / 2.0


def crawford_excess(A):
    """(c^2(Re A) + c^2(Im A))/2 + |(||Re A||^2 - ||Im A||^2)/2 + (c^2(Im A) - c^2(Re A))/2|.

    Both the Crawford-refined lower bound for w^2 and the commutator upper
    bounds subtract or add this quantity.
    """
    d = _data(A)
    cr2, ci2 = d.c_re**2, d.c_im**2
    return (cr2 + ci2) / 2.0 + abs((d.re_norm**2 - d.im_norm**2) / 2.0 + (ci2 - cr2) / 2.0)


def bound_crawford(A):
    """Kittaneh's bound plus :func:`crawford_excess` (bounds w^2)."""
    return _data(A).sum_norm / 4.0 + crawford_excess(A)


class FourthPowerBounds(NamedTuple):
    first: float
    second: float
    bag5: float
    bhunia: float


def bound_fourth_power(A):
    """Lower bounds for w(A)^4.

    ``first`` and ``second`` carry the | ||Re A||^4 - ||Im A||^4 | / 2 gap
    term. ``bhunia`` and ``bag5`` are the same expressions without it.
    """
    d = _data(A)
    gap = abs(d.re_norm**4 - d.im_norm**4) / 2.0
    bhunia = d.fourth_norm / 16.0
    bag5 = d.sum_norm**2 / 16.0 + d.c_re_sq_sq / 4.0
    return FourthPowerBounds(first=bhunia + gap, second=bag5 + gap, bag5=bag5, bhunia=bhunia)


def holds(lhs, rhs, slack=config.CHAIN_SLACK):
    return lhs <= rhs + slack * max(1.0, abs(rhs))


@dataclass(frozen=True)
class BoundsReport:
    norm: float
    w: float
    re_norm: float
    im_norm: float
    c_re: float
    c_im: float
    classical_lo: float
    b_gap: float
    kittaneh_sq: float
    b_sq_gap: float
    b_bp: float
    b_crawford: float
    b4_first: float
    b4_second: float
    b4_bag5: float
    b4_bhunia: float
    chain_ok: bool
    violations: tuple = ()

    def chain(self):
        """(name, lhs, rhs) for every ordering the report asserts."""
        w, w2, w4 = self.w, self.w**2, self.w**4
        rows = [
            ("norm/2 <= b_gap", self.classical_lo, self.b_gap),
            ("b_gap <= w", self.b_gap, w),
            ("w <= norm", w, self.norm),
            ("kittaneh_sq <= b_sq_gap", self.kittaneh_sq, self.b_sq_gap),
            ("b_sq_gap <= w^2", self.b_sq_gap, w2),
            ("kittaneh_sq <= b_bp", self.kittaneh_sq, self.b_bp),
            ("b_bp <= b_crawford", self.b_bp, self.b_crawford),
            ("b_crawford <= w^2", self.b_crawford, w2),
            ("b4_bag5 <= b4_bhunia", self.b4_bag5, self.b4_bhunia),
            ("b4_bhunia <= b4_first", self.b4_bhunia, self.b4_first),
            ("b4_second <= b4_first", self.b4_second, self.b4_first),
            ("b4_first <= w^4", self.b4_first, w4),
            ("b4_bag5 <= b4_second", self.b4_bag5, self.b4_second),
            ("b4_second <= w^4", self.b4_second, w4),
        ]
        if self.re_norm == 0.0 or self.im_norm == 0.0:
            # Hermitian or skew-Hermitian: the gap bound is attained.
            rows.append(("w <= b_gap (a Cartesian part vanishes)", w, self.b_gap))
        return rows


def bounds_report(A, *, grid=config.RADIUS_GRID, data=None, slack=config.CHAIN_SLACK):
    """Every lower bound for one matrix, with the inequality chain checked.

    Pass ``data`` (from :func:`cartesian_data` with ``with_radius=True``) to
    reuse work already done for the same matrix.
    """
    d = data if data is not None else cartesian_data(A, with_radius=True, grid=grid)
    if d.w is None:
        raise ValueError("cartesian data must include the numerical radius")
    b4 = bound_fourth_power(d)
    report = BoundsReport(
        norm=d.norm,
        w=d.w,
        re_norm=d.re_norm,
        im_norm=d.im_norm,
        c_re=d.c_re,
        c_im=d.c_im,
        classical_lo=classical_lower(d),
        b_gap=bound_re_im_gap(d),
        kittaneh_sq=kittaneh_sq(d),
        b_sq_gap=bound_sq_gap(d),
        b_bp=bound_bp(d),
        b_crawford=bound_crawford(d),
        b4_first=b4.first,
        b4_second=b4.second,
        b4_bag5=b4.bag5,
        b4_bhunia=b4.bhunia,
        chain_ok=True,
    )
    bad = tuple(name for name, lhs, rhs in report.chain() if not holds(lhs, rhs, slack))
    return replace(report, chain_ok=not bad, violations=bad)
