"""Pure numpy versions of the kernels in ``_kernels.pyx``.

The Jacobi iteration is vectorised across a stack of matrices, so a whole
theta grid is diagonalised together. Rotations are applied to every member
of the stack on every sweep until all members have converged; a member that
has already converged only sees rotations by angles at rounding level.
"""

import numpy as np

INV_PHI = (np.sqrt(5.0) - 1.0) / 2.0


def _off_norm(H):
    n = H.shape[-1]
    iu = np.triu_indices(n, 1)
    return np.sqrt(2.0 * np.sum(np.abs(H[:, iu[0], iu[1]]) ** 2, axis=1))


def jacobi_batch(H, tol, max_sweeps, want_vectors):
    """Cyclic Jacobi on a ``(m, n, n)`` stack of Hermitian matrices.

    Returns unsorted diagonals, the accumulated rotations (or None), a
    converged flag per member, the final off-diagonal norms and the number
    of sweeps run.
    """
    H = np.array(H, dtype=np.complex128, copy=True)
    m, n, _ = H.shape
    V = np.broadcast_to(np.eye(n, dtype=np.complex128), (m, n, n)).copy() if want_vectors else None
    thr = tol * np.sqrt(np.sum(np.abs(H) ** 2, axis=(1, 2)))
    rows = np.arange(m)
    off = _off_norm(H)
    sweeps = 0
    while np.any(off > thr) and sweeps < max_sweeps:
        sweeps += 1
        for p in range(n - 1):
            for q in range(p + 1, n):
                hpq = H[:, p, q]
                g2 = hpq.real**2 + hpq.imag**2
                active = g2 > 0.0
                hpp = H[:, p, p].real.copy()
                hqq = H[:, q, q].real.copy()
                d = hqq - hpp
                # same parametrisation as the compiled kernel: no sqrt of g needed
                denom = np.abs(d) + np.sqrt(d * d + 4.0 * g2)
                denom = np.where(active, denom, 1.0)
                inv = np.where(active, 1.0 / np.sqrt(denom * denom + 4.0 * g2), 0.0)
                sign = np.where(d < 0.0, -1.0, 1.0)
                c = np.where(active, denom * inv, 1.0)
                se = sign * 2.0 * inv * hpq  # s e^{i phi}
                tg = np.where(active, sign * 2.0 * g2 / denom, 0.0)
                # U = [[c, s e^{i phi}], [-s e^{-i phi}, c]] on the (p, q) plane
                u_pq = se[:, None]
                u_qp = -np.conj(se)[:, None]
                cc = c[:, None]
                colp = H[:, :, p].copy()
                colq = H[:, :, q].copy()
                H[:, :, p] = cc * colp + u_qp * colq
                H[:, :, q] = u_pq * colp + cc * colq
                H[:, p, :] = np.conj(H[:, :, p])
                H[:, q, :] = np.conj(H[:, :, q])
                H[rows, p, p] = hpp - tg
                H[rows, q, q] = hqq + tg
                H[:, p, q] = 0.0
                H[:, q, p] = 0.0
                if V is not None:
                    vp = V[:, :, p].copy()
                    vq = V[:, :, q].copy()
                    V[:, :, p] = cc * vp + u_qp * vq
                    V[:, :, q] = u_pq * vp + cc * vq
        off = _off_norm(H)
    diag = np.real(np.diagonal(H, axis1=1, axis2=2)).copy()
    return diag, V, off <= thr, off, sweeps


def eigh(H, tol, max_sweeps, want_vectors):
    """Same contract as ``_kernels.eigh``."""
    H = np.asarray(H, dtype=np.complex128)
    diag, V, converged, off, sweeps = jacobi_batch(H[None], tol, max_sweeps, want_vectors)
    order = np.argsort(diag[0], kind="stable")
    vecs = V[0][:, order] if want_vectors else None
    return diag[0][order], vecs, (sweeps if converged[0] else -1), float(off[0])


def rotated_parts(A, thetas):
    """Stack of (e^{i theta} A + e^{-i theta} A^*) / 2 over ``thetas``."""
    A = np.asarray(A, dtype=np.complex128)
    ph = np.exp(1j * np.asarray(thetas, dtype=np.float64))[:, None, None]
    M = ph * A[None]
    H = 0.5 * (M + np.conj(np.swapaxes(M, 1, 2)))
    n = A.shape[0]
    idx = np.arange(n)
    H[:, idx, idx] = H[:, idx, idx].real
    return H


def sweep(A, thetas, tol, max_sweeps, want_vectors):
    """Same contract as ``_kernels.sweep``."""
    thetas = np.asarray(thetas, dtype=np.float64)
    H = rotated_parts(A, thetas)
    diag, V, converged, _, _ = jacobi_batch(H, tol, max_sweeps, want_vectors)
    imax = np.argmax(diag, axis=1)
    imin = np.argmin(diag, axis=1)
    rows = np.arange(len(thetas))
    lmax = diag[rows, imax]
    lmin = diag[rows, imin]
    if want_vectors:
        return lmax, lmin, V[rows, :, imax], V[rows, :, imin], bool(np.all(converged))
    return lmax, lmin, None, None, bool(np.all(converged))


def _objective(A, theta, objective, tol, max_sweeps):
    lmax, lmin, _, _, ok = sweep(A, [theta], tol, max_sweeps, False)
    if objective == 0:
        return float(lmax[0]), ok
    return float(max(lmax[0], -lmin[0])), ok


def golden(A, lo, hi, width, objective, maximize, tol, max_sweeps):
    """Same contract as ``_kernels.golden``."""
    sign = 1.0 if maximize else -1.0
    ok = True

    def f(theta):
        nonlocal ok
        v, good = _objective(A, theta, objective, tol, max_sweeps)
        ok = ok and good
        return sign * v

    a, b = lo, hi
    c = b - INV_PHI * (b - a)
    d = a + INV_PHI * (b - a)
    fc, fd = f(c), f(d)
    best_t, best_f = (c, fc) if fc >= fd else (d, fd)
    while b - a > width:
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - INV_PHI * (b - a)
            fc = f(c)
            if fc > best_f or (fc == best_f and c < best_t):
                best_t, best_f = c, fc
        else:
            a, c, fc = c, d, fd
            d = a + INV_PHI * (b - a)
            fd = f(d)
            if fd > best_f or (fd == best_f and d < best_t):
                best_t, best_f = d, fd
    return float(best_t), float(sign * best_f), ok
