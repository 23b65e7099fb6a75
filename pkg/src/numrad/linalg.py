"""Dense complex matrices, Cartesian decomposition and a Jacobi eigensolver.

Matrices are plain ``numpy`` arrays of dtype ``complex128``. The helpers
here validate them (square, finite) and hand back read-only copies so that
nothing downstream can mutate an input in place.
"""

from typing import NamedTuple

import numpy as np

from . import config
from ._backend import kernels


class LinalgError(ValueError):
    """Invalid matrix input."""


class DimensionError(LinalgError):
    """Operands have incompatible shapes."""


class NotHermitianError(LinalgError):
    """Input is too far from Hermitian to be symmetrised silently."""


class ConvergenceError(ArithmeticError):
    """Jacobi iteration did not reach the requested off-diagonal norm."""

    def __init__(self, residual, sweeps):
        super().__init__(
            f"Jacobi eigensolver did not converge after {sweeps} sweeps "
            f"(off-diagonal Frobenius norm {residual:.3e})"
        )
        self.residual = residual
        self.sweeps = sweeps


class InvariantViolation(ArithmeticError):
    """A relation that must hold in exact arithmetic failed beyond rounding slack."""


class EigenSystem(NamedTuple):
    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


def _symmetrised(M):
    """(M + M*)/2 with an exactly real diagonal, as a fresh array."""
    S = 0.5 * (M + M.conj().T)
    S.flat[:: M.shape[0] + 1] = S.diagonal().real
    return S


def _frozen(a):
    a.flags.writeable = False
    return a


def as_matrix(A):
    """Validate ``A`` as a finite square complex matrix; return a read-only copy."""
    M = np.array(A, dtype=np.complex128, copy=True, order="C")
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise DimensionError(f"expected a square matrix, got shape {M.shape}")
    if M.shape[0] == 0:
        raise DimensionError("empty matrix")
    if not np.isfinite(M).all():
        raise LinalgError("matrix has non-finite entries")
    return _frozen(M)


def as_hermitian(H, tol=config.HERMITIAN_TOL):
    """Symmetrise ``H`` to (H + H*)/2, rejecting inputs that move by more than ``tol``.

    The tolerance is relative to the largest entry modulus. The returned
    matrix is exactly Hermitian with a real diagonal.
    """
    M = as_matrix(H)
    S = _symmetrised(M)
    gap = np.abs(S - M).max()
    if gap > 0.0:
        scale = np.abs(M).max()
        if gap > tol * scale:
            raise NotHermitianError(f"matrix is not Hermitian (asymmetry {gap:.3e}, scale {scale:.3e})")
    return _frozen(S)


def is_hermitian(A, tol=1e-13):
    A = np.asarray(A)
    return bool(np.max(np.abs(A - A.conj().T)) <= tol * max(np.max(np.abs(A)), 0.0))


def _check_same(*mats):
    shapes = {m.shape for m in mats}
    if len(shapes) != 1:
        raise DimensionError(f"dimension mismatch: {sorted(shapes)}")


def adjoint(A):
    return _frozen(np.ascontiguousarray(as_matrix(A).conj().T))


def real_part(A):
    """Hermitian part (A + A*)/2."""
    return _frozen(_symmetrised(as_matrix(A)))


def imag_part(A):
    """Skew part (A - A*)/(2i), returned as a Hermitian matrix."""
    A = as_matrix(A)
    H = -0.5j * (A - A.conj().T)
    H.flat[:: A.shape[0] + 1] = H.diagonal().real
    return _frozen(H)


def rotated_real_part(A, theta):
    """Re(e^{i theta} A)."""
    return real_part(np.exp(1j * theta) * as_matrix(A))


def matmul(A, B):
    A, B = as_matrix(A), as_matrix(B)
    _check_same(A, B)
    return _frozen(A @ B)


def add(A, B):
    A, B = as_matrix(A), as_matrix(B)
    _check_same(A, B)
    return _frozen(A + B)


def subtract(A, B):
    A, B = as_matrix(A), as_matrix(B)
    _check_same(A, B)
    return _frozen(A - B)


def scale(A, t):
    return _frozen(complex(t) * as_matrix(A))


def hermitian_eig(H, *, tol=config.EIG_TOL, max_sweeps=config.EIG_MAX_SWEEPS, vectors=True):
    """Eigen-decomposition of a Hermitian matrix by cyclic complex Jacobi.

    Eigenvalues come back ascending, with eigenvectors as the matching
    columns of a unitary matrix. ``vectors=False`` skips accumulating the
    rotations and leaves ``eigenvectors`` as None.

    Raises ConvergenceError when the off-diagonal Frobenius norm has not
    dropped below ``tol * ||H||_F`` after ``max_sweeps`` sweeps.
    """
    H = as_hermitian(H)
    values, vecs, sweeps, off = kernels.eigh(H, tol, max_sweeps, vectors)
    if sweeps < 0:
        raise ConvergenceError(off, max_sweeps)
    values = _frozen(np.asarray(values, dtype=np.float64))
    if vecs is not None:
        vecs = _frozen(np.asarray(vecs))
    return EigenSystem(values, vecs)


def eigvals_extreme(H, **kw):
    """(lambda_min, lambda_max) of a Hermitian matrix."""
    vals = hermitian_eig(H, vectors=False, **kw).eigenvalues
    return float(vals[0]), float(vals[-1])


def hermitian_norm(H, **kw):
    """Operator norm of a Hermitian matrix, max |lambda|."""
    lo, hi = eigvals_extreme(H, **kw)
    return max(abs(lo), abs(hi))


def operator_norm(A, **kw):
    """Largest singular value, sqrt(lambda_max(A* A))."""
    A = as_matrix(A)
    G = A.conj().T @ A
    G = 0.5 * (G + G.conj().T)
    _, top = eigvals_extreme(G, **kw)
    return float(np.sqrt(max(top, 0.0)))
