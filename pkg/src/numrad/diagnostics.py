"""Numerical checks of the equality cases w = ||A||/2 and w^2 = ||A*A + AA*||/4.

A matrix "is in" an equality case when the defining identity holds to
within ``tol`` (relative, floored at 1). Each check then verifies the stated
consequences with the looser slack ``10 * tol``. When the premise fails the
consequence flags are vacuously true. Converses that do not hold in
general are never asserted.

In finite dimensions the approximating unit-vector sequences of the
infinite-dimensional statements are replaced by exact witnesses, i.e. unit
vectors x with <Hx, x> = 0.
"""

from dataclasses import dataclass, replace
from typing import NamedTuple

import numpy as np

from . import config
from ._backend import kernels
from .bounds import cartesian_data
from .linalg import (
    ConvergenceError,
    InvariantViolation,
    LinalgError,
    as_matrix,
    hermitian_eig,
    hermitian_norm,
    imag_part,
    operator_norm,
    real_part,
)
from .numrange import (
    DiskTest,
    convex_hull,
    distance_to_hull,
    is_origin_centered_disk,
    numerical_radius,
    range_boundary,
    theta_grid,
)

DERIVED = 10.0


@dataclass(frozen=True)
class DiagnosticsReport:
    case_half_norm: bool
    case_kittaneh: bool
    theta_profile_ok: bool
    norms_match: bool
    norm_identity_ok: bool
    disk: DiskTest
    disk_ok: bool
    witnesses: tuple  # (x for Re A, y for Im A), entries None when c > 0
    witnesses_ok: bool
    tol: float

    @property
    def consistent(self):
        return (self.theta_profile_ok and self.norms_match and self.norm_identity_ok
                and self.disk_ok and self.witnesses_ok)


def _check_tol(tol):
    if not tol > 0:
        raise ValueError("tol must be positive")


def _close(a, b, tol, scale=1.0):
    return abs(a - b) <= tol * max(1.0, abs(scale))


def _part_norms(A, thetas):
    lmax, lmin, _, _, ok = kernels.sweep(A, np.asarray(thetas, dtype=np.float64),
                                         config.EIG_TOL, config.EIG_MAX_SWEEPS, False)
    if not ok:
        raise ConvergenceError(float("nan"), config.EIG_MAX_SWEEPS)
    return np.maximum(lmax, -lmin)


def crawford_witness(H, tol):
    """A unit vector x with |<Hx, x>| <= tol * max(1, ||H||), or None when c(H) > 0.

    Uses the eigenvector of the eigenvalue nearest 0 if that one is small
    enough. Otherwise it mixes the extreme eigenvectors v+ and v- (opposite
    signs) as x = cos(a) v+ + sin(a) v-, with tan^2(a) = lambda+ / -lambda-.
    """
    vals, vecs = hermitian_eig(H)
    scale = max(1.0, float(np.max(np.abs(vals))))
    k = int(np.argmin(np.abs(vals)))
    if abs(vals[k]) <= tol * scale:
        return vecs[:, k].copy()
    lo, hi = vals[0], vals[-1]
    if not (lo < 0.0 < hi):
        return None
    a = np.arctan(np.sqrt(hi / -lo))
    x = np.cos(a) * vecs[:, -1] + np.sin(a) * vecs[:, 0]
    return x / np.linalg.norm(x)


def _witness_ok(H, x, tol):
    if x is None:
        return False
    value = abs(np.vdot(x, np.asarray(H) @ x))
    return bool(value <= tol * max(1.0, hermitian_norm(H)))


def _diagnose(A, tol, theorem, grid, disk_tol):
    _check_tol(tol)
    A = as_matrix(A)
    rad = numerical_radius(A)
    d = replace(cartesian_data(A), w=rad.w)
    slack = DERIVED * tol
    w, norm = d.w, d.norm
    case_half = _close(w, norm / 2.0, tol, norm)
    case_k = _close(w**2, d.sum_norm / 4.0, tol, w**2)
    disk = is_origin_centered_disk(A, disk_tol)
    R, I = real_part(A), imag_part(A)
    witnesses = (crawford_witness(R, slack), crawford_witness(I, slack))

    premise = case_half if theorem == "half" else case_k
    if not premise:
        return DiagnosticsReport(case_half, case_k, True, True, True, disk, True, witnesses, True, tol)

    target = norm / 2.0 if theorem == "half" else np.sqrt(d.sum_norm) / 2.0
    # uniform grid plus the maximiser of the support function
    thetas = np.append(theta_grid(grid), rad.theta_star)
    re_pn = _part_norms(A, thetas)
    im_pn = _part_norms(A, thetas - np.pi / 2.0)

    norms_match = _close(d.re_norm, target, slack, target) and _close(d.im_norm, target, slack, target)
    if theorem == "half":
        profile_ok = (np.all(np.abs(re_pn - target) <= slack * max(1.0, target))
                      and np.all(np.abs(im_pn - target) <= slack * max(1.0, target))
                      and np.all(np.abs(re_pn + im_pn - norm) <= slack * max(1.0, norm)))
        n2 = norm**2
        identity_ok = _close(n2, d.sum_norm, slack, n2) and _close(n2, d.diff_norm, slack, n2)
    else:
        q = d.sum_norm / 4.0
        profile_ok = (np.all(np.abs(re_pn**2 - q) <= slack * max(1.0, q))
                      and np.all(np.abs(im_pn**2 - q) <= slack * max(1.0, q)))
        identity_ok = True
    disk_ok = disk.is_disk and _close(disk.radius, target, slack, target)
    witnesses_ok = _witness_ok(R, witnesses[0], slack) and _witness_ok(I, witnesses[1], slack)
    return DiagnosticsReport(
        case_half_norm=case_half,
        case_kittaneh=case_k,
        theta_profile_ok=bool(profile_ok),
        norms_match=bool(norms_match),
        norm_identity_ok=bool(identity_ok),
        disk=disk,
        disk_ok=bool(disk_ok),
        witnesses=witnesses,
        witnesses_ok=bool(witnesses_ok),
        tol=tol,
    )


def check_half_norm_equality(A, tol=config.CHECK_TOL, *, grid=config.DIAGNOSTIC_GRID,
                             disk_tol=config.DISK_TOL):
    """Detect w(A) = ||A||/2 and verify what it forces.

    Checked consequences: ||Re A|| = ||Im A|| = ||A||/2;
    ||Re(e^{it}A)|| = ||Im(e^{it}A)|| = ||A||/2 with sum ||A|| over the theta
    grid; ||A||^2 = ||A*A + AA*|| = ||A*A - AA*||; W(A) is the origin-centred
    disk of radius ||A||/2; Re A and Im A both have a null-direction witness.
    """
    return _diagnose(A, tol, "half", grid, disk_tol)


def check_kittaneh_equality(A, tol=config.CHECK_TOL, *, grid=config.DIAGNOSTIC_GRID,
                            disk_tol=config.DISK_TOL):
    """Detect w(A)^2 = ||A*A + AA*||/4 and verify what it forces.

    With r = sqrt(||A*A + AA*||)/2 the checks are: witnesses with
    <Re(A)x, x> = <Im(A)y, y> = 0; ||Re A|| = ||Im A|| = r;
    ||Re(e^{it}A)||^2 = ||Im(e^{it}A)||^2 = r^2 over the theta grid; W(A)
    is the origin-centred disk of radius r.
    """
    return _diagnose(A, tol, "kittaneh", grid, disk_tol)


class Additivity(NamedTuple):
    additive: bool
    membership: bool
    agree: bool


def norm_additivity_check(A, B, tol=config.CHECK_TOL, *, grid=config.CRAWFORD_GRID):
    """Compare ||A + B|| = ||A|| + ||B|| with ||A|| ||B|| lying in the closure of W(A* B)."""
    _check_tol(tol)
    A, B = as_matrix(A), as_matrix(B)
    if A.shape != B.shape:
        raise LinalgError("A and B must have the same dimension")
    na, nb = operator_norm(A), operator_norm(B)
    if na == 0.0 or nb == 0.0:
        raise LinalgError("A and B must be nonzero")
    additive = abs(operator_norm(A + B) - na - nb) <= tol * (na + nb)
    p = na * nb
    pts = range_boundary(A.conj().T @ B, grid).boundary_points
    dist = distance_to_hull(complex(p), convex_hull(pts))
    membership = dist <= tol * max(1.0, p)
    return Additivity(bool(additive), bool(membership), bool(additive) == bool(membership))


class DiskReport(NamedTuple):
    disk: bool
    radius: float
    matches_half_norm: bool
    matches_kittaneh: bool


def circular_disk_report(A, tol=config.CHECK_TOL, *, grid=config.RADIUS_GRID):
    """Disk test for W(A) against both radius lower bounds.

    Raises InvariantViolation if "W(A) is the origin-centred disk of radius
    ||A||/2" (respectively r = sqrt(||A*A + AA*||)/2) disagrees with the
    numerically detected equality w = ||A||/2 (respectively w = r). Each
    direction is tested with the other side loosened to 10 * tol.
    """
    _check_tol(tol)
    A = as_matrix(A)
    d = cartesian_data(A, with_radius=True, grid=grid)
    half, r = d.norm / 2.0, np.sqrt(d.sum_norm) / 2.0

    def evaluate(t):
        disk = is_origin_centered_disk(A, 2.0 * t * max(1.0, d.norm), grid=grid)
        m_half = disk.is_disk and _close(disk.radius, half, t, half)
        m_k = disk.is_disk and _close(disk.radius, r, t, r)
        case_half = _close(d.w, half, t, d.norm)
        case_k = _close(d.w**2, d.sum_norm / 4.0, t, d.w**2)
        return disk, m_half, m_k, case_half, case_k

    disk, m_half, m_k, case_half, case_k = evaluate(tol)
    _, m_half_loose, m_k_loose, case_half_loose, case_k_loose = evaluate(DERIVED * tol)
    problems = []
    if case_half and not m_half_loose:
        problems.append("w = ||A||/2 but W(A) is not the disk of radius ||A||/2")
    if m_half and not case_half_loose:
        problems.append("W(A) is the disk of radius ||A||/2 but w != ||A||/2")
    if case_k and not m_k_loose:
        problems.append("w = r but W(A) is not the disk of radius r")
    if m_k and not case_k_loose:
        problems.append("W(A) is the disk of radius r but w != r")
    if problems:
        raise InvariantViolation("; ".join(problems))
    return DiskReport(bool(disk.is_disk), float(disk.radius), bool(m_half), bool(m_k))
