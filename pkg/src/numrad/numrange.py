"""Numerical range W(A), numerical radius and Crawford number.

Everything is driven by the support function of W(A),

    h(theta) = lambda_max(Re(e^{i theta} A)),

sampled on a uniform theta grid. The numerical radius is the maximum of
``h``. The top eigenvector at ``theta`` gives the point of W(A) touched by
the supporting line with outward normal e^{-i theta}. Sweeping theta
traces the boundary of W(A), and the convex hull of those points is an
inscribed polygon of W(A).

Only half of an even grid is diagonalised, because
Re(e^{i(theta + pi)} A) = -Re(e^{i theta} A): the bottom eigenpair at theta
supplies the top eigenpair at theta + pi.
"""

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from . import config
from ._backend import kernels
from .linalg import (
    ConvergenceError,
    as_matrix,
    eigvals_extreme,
    hermitian_eig,
    is_hermitian,
    rotated_real_part,
)

TWO_PI = 2.0 * np.pi


@dataclass(frozen=True)
class SupportSample:
    theta: float
    lambda_max: float
    part_norm: float
    boundary_point: complex


@dataclass(frozen=True)
class SupportProfile:
    samples: tuple
    grid_size: int

    @property
    def thetas(self):
        return np.array([s.theta for s in self.samples])

    @property
    def lambda_max(self):
        return np.array([s.lambda_max for s in self.samples])

    @property
    def part_norms(self):
        return np.array([s.part_norm for s in self.samples])

    @property
    def boundary_points(self):
        return np.array([s.boundary_point for s in self.samples], dtype=np.complex128)


@dataclass(frozen=True)
class RadiusResult:
    w: float
    theta_star: float
    attaining_vector: np.ndarray


@dataclass(frozen=True)
class CrawfordResult:
    c: float
    origin_inside: bool


class DiskTest(NamedTuple):
    is_disk: bool
    radius: float


def theta_grid(size):
    if size < 1:
        raise ValueError("grid size must be positive")
    return TWO_PI * np.arange(size) / size


def _profile(A, grid, vectors=False, tol=config.EIG_TOL, max_sweeps=config.EIG_MAX_SWEEPS):
    """Extreme eigenpairs of Re(e^{i theta} A) over the uniform grid of ``grid`` angles.

    Returns ``(thetas, lam_max, lam_min, top_vectors)``.
    """
    thetas = theta_grid(grid)
    if grid % 2 == 0:
        half = grid // 2
        lmax, lmin, vmax, vmin, ok = kernels.sweep(A, thetas[:half], tol, max_sweeps, vectors)
        lam_max = np.concatenate([lmax, -lmin])
        lam_min = np.concatenate([lmin, -lmax])
        top = np.concatenate([vmax, vmin]) if vectors else None
    else:
        lam_max, lam_min, top, _, ok = kernels.sweep(A, thetas, tol, max_sweeps, vectors)
    if not ok:
        raise ConvergenceError(float("nan"), max_sweeps)
    return thetas, lam_max, lam_min, top


def _golden(A, lo, hi, objective, maximize, width, tol=config.EIG_TOL,
            max_sweeps=config.EIG_MAX_SWEEPS):
    theta, value, ok = kernels.golden(A, lo, hi, width, objective, maximize, tol, max_sweeps)
    if not ok:
        raise ConvergenceError(float("nan"), max_sweeps)
    return float(theta) % TWO_PI, float(value)


def support_sample(A, theta):
    """Support value, part norm and boundary point of W(A) at one angle."""
    A = as_matrix(A)
    vals, vecs = hermitian_eig(rotated_real_part(A, theta))
    x = vecs[:, -1]
    z = complex(np.vdot(x, A @ x))
    return SupportSample(
        theta=float(theta) % TWO_PI,
        lambda_max=float(vals[-1]),
        part_norm=float(max(vals[-1], -vals[0])),
        boundary_point=z,
    )


def _local_maxima(values):
    """Indices of circular local maxima, best value first, ties by index."""
    prev = np.empty_like(values)
    nxt = np.empty_like(values)
    prev[1:], prev[0] = values[:-1], values[-1]
    nxt[:-1], nxt[-1] = values[1:], values[0]
    cand = np.flatnonzero((values >= prev) & (values >= nxt))
    order = np.lexsort((cand, -values[cand]))
    return cand[order]


def numerical_radius(A, *, grid=config.RADIUS_GRID, width=config.GOLDEN_WIDTH,
                     brackets=config.REFINE_BRACKETS):
    """w(A) = max over theta of lambda_max(Re(e^{i theta} A)).

    The coarse grid picks the ``brackets`` best local maxima; each is refined
    by golden-section search on its two neighbouring grid cells until the
    bracket is narrower than ``width``. The largest value found wins; ties go
    to the smaller angle.
    """
    A = as_matrix(A)
    thetas, lam, _, _ = _profile(A, grid)
    k0 = int(np.argmax(lam))
    best_t, best_w = float(thetas[k0]), float(lam[k0])
    step = TWO_PI / grid
    # h is Lipschitz with constant w <= max(h)/cos(step/2), so a bracket whose
    # grid value trails the best by more than that rise cannot hold the maximum.
    reach = step * abs(best_w) / np.cos(step / 2.0) * (1.0 + 1e-9)
    for k in _local_maxima(lam)[:brackets]:
        if lam[k] + reach < best_w:
            continue
        t, v = _golden(A, thetas[k] - step, thetas[k] + step, 0, True, width)
        if v > best_w or (v == best_w and t < best_t):
            best_t, best_w = t, v
    vals, vecs = hermitian_eig(rotated_real_part(A, best_t))
    return RadiusResult(w=max(best_w, 0.0), theta_star=best_t, attaining_vector=vecs[:, -1].copy())


def range_boundary(A, n_points=config.BOUNDARY_POINTS):
    """Boundary samples of W(A) on a uniform grid of ``n_points`` directions."""
    if n_points < 16:
        raise ValueError("n_points must be at least 16")
    A = as_matrix(A)
    thetas, lam_max, lam_min, top = _profile(A, n_points, vectors=True)
    points = np.einsum("ki,ij,kj->k", top.conj(), A, top)
    part = np.maximum(lam_max, -lam_min)
    samples = tuple(
        SupportSample(float(t), float(lm), float(pn), complex(z))
        for t, lm, pn, z in zip(thetas, lam_max, part, points)
    )
    return SupportProfile(samples=samples, grid_size=n_points)


def crawford_hermitian(H):
    """c(H) for Hermitian H: zero if the spectrum straddles 0, else the smaller |endpoint|."""
    lo, hi = eigvals_extreme(H)
    if lo <= 0.0 <= hi:
        return 0.0
    return min(abs(lo), abs(hi))


def convex_hull(points):
    """Counter-clockwise hull vertices (as an (m, 2) array) of complex points.

    Collinear input collapses to its two endpoints, a single point to itself.
    """
    pts = np.column_stack([np.real(points), np.imag(points)]).astype(np.float64)
    pts = sorted(set(map(tuple, pts.tolist())))
    if len(pts) <= 2:
        return np.array(pts, dtype=np.float64).reshape(-1, 2)

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower = []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0.0:
            lower.pop()
        lower.append(p)
    upper = []
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0.0:
            upper.pop()
        upper.append(p)
    hull = lower[:-1] + upper[:-1]
    if len(hull) < 2:
        hull = [pts[0], pts[-1]]
    return np.array(hull, dtype=np.float64)


def _segment_distance(q, a, b):
    ab = b - a
    L2 = float(ab @ ab)
    if L2 == 0.0:
        return float(np.hypot(*(q - a)))
    t = min(max(float((q - a) @ ab) / L2, 0.0), 1.0)
    return float(np.hypot(*(q - (a + t * ab))))


def distance_to_hull(point, hull, eps=0.0):
    """Euclidean distance from a complex ``point`` to a hull from :func:`convex_hull`.

    Returns 0 when the point is inside or within ``eps`` of the boundary.
    """
    q = np.array([np.real(point), np.imag(point)], dtype=np.float64)
    m = len(hull)
    if m == 0:
        raise ValueError("empty hull")
    if m == 1:
        d = float(np.hypot(*(q - hull[0])))
        return 0.0 if d <= eps else d
    if m == 2:
        d = _segment_distance(q, hull[0], hull[1])
        return 0.0 if d <= eps else d
    inside = True
    for i in range(m):
        a, b = hull[i], hull[(i + 1) % m]
        e = b - a
        signed = (e[0] * (q[1] - a[1]) - e[1] * (q[0] - a[0])) / np.hypot(*e)
        if signed < -eps:
            inside = False
            break
    if inside:
        return 0.0
    d = min(_segment_distance(q, hull[i], hull[(i + 1) % m]) for i in range(m))
    return 0.0 if d <= eps else d


def crawford_number(A, *, grid=config.CRAWFORD_GRID):
    """c(A), the distance from the origin to W(A).

    Hermitian input is answered from its extreme eigenvalues. Otherwise
    W(A) is replaced by the hull of ``grid`` boundary samples. That hull is
    inscribed in W(A), so the result can only overestimate c(A), and only by
    the discretisation gap.
    """
    A = as_matrix(A)
    if is_hermitian(A):
        c = crawford_hermitian(A)
        return CrawfordResult(c=c, origin_inside=c == 0.0)
    pts = range_boundary(A, grid).boundary_points
    scale = max(1.0, float(np.max(np.abs(pts))))
    c = distance_to_hull(0.0, convex_hull(pts), eps=config.HULL_EPS * scale)
    return CrawfordResult(c=c, origin_inside=c == 0.0)


def part_norm_extremes(A, *, grid=config.RADIUS_GRID, width=config.GOLDEN_WIDTH):
    """(min, max, grid mean) of ||Re(e^{i theta} A)|| over theta, refined at both extremes."""
    A = as_matrix(A)
    thetas, lam_max, lam_min, _ = _profile(A, grid)
    part = np.maximum(lam_max, -lam_min)
    step = TWO_PI / grid
    kmax, kmin = int(np.argmax(part)), int(np.argmin(part))
    _, hi = _golden(A, thetas[kmax] - step, thetas[kmax] + step, 1, True, width)
    _, lo = _golden(A, thetas[kmin] - step, thetas[kmin] + step, 1, False, width)
    return min(lo, float(part.min())), max(hi, float(part.max())), float(part.mean())


def is_origin_centered_disk(A, tol=config.DISK_TOL, *, grid=config.RADIUS_GRID):
    """Whether W(A) is a disk centred at 0, judged by the spread of ||Re(e^{i theta} A)||.

    The radius is the mean part norm when the test passes and the maximum
    (i.e. w(A)) otherwise.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    lo, hi, mean = part_norm_extremes(A, grid=grid)
    if hi - lo <= tol:
        return DiskTest(True, mean)
    return DiskTest(False, hi)
