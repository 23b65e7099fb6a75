# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled hot loops: cyclic complex Jacobi and the rotated-Hermitian-part sweeps.

Matrices are held as split real/imaginary ``double`` buffers so that the
inner rotation loop never goes through C99 complex multiplication.
Every entry point mirrors a function of the same name in ``_fallback``.
"""

import numpy as np
cimport numpy as cnp
from libc.math cimport sqrt, fabs, cos, sin
from libc.stdlib cimport malloc, free

cnp.import_array()

cdef double INV_PHI = 0.6180339887498949


cdef int _jacobi(double* hr, double* hi, Py_ssize_t n, double* vr, double* vi,
                 bint want_v, double tol, int max_sweeps, double* off_out) noexcept nogil:
    """Diagonalise the Hermitian matrix in (hr, hi) in place.

    Only the upper triangle is read and updated; the strict lower triangle
    is left stale. Returns the number of sweeps performed, or -1 when the
    off-diagonal Frobenius norm is still above ``tol * ||H||_F`` after
    ``max_sweeps``.
    """
    cdef Py_ssize_t i, j, k, p, q
    cdef double fro2 = 0.0, off2, thr2
    cdef double ar, ai, g2, skip2, d, denom, inv, tg, c, sr, si
    cdef int sweep

    for i in range(n):
        fro2 += hr[i * n + i] * hr[i * n + i]
        for j in range(i + 1, n):
            fro2 += 2.0 * (hr[i * n + j] * hr[i * n + j] + hi[i * n + j] * hi[i * n + j])
    thr2 = tol * tol * fro2
    if want_v:
        for i in range(n * n):
            vr[i] = 0.0
            vi[i] = 0.0
        for i in range(n):
            vr[i * n + i] = 1.0

    sweep = 0
    while True:
        off2 = 0.0
        for i in range(n):
            for j in range(i + 1, n):
                off2 += hr[i * n + j] * hr[i * n + j] + hi[i * n + j] * hi[i * n + j]
        off2 *= 2.0
        off_out[0] = sqrt(off2)
        if off2 <= thr2:
            return sweep
        if sweep >= max_sweeps:
            return -1
        sweep += 1
        # an entry this small cannot keep the matrix above the threshold
        skip2 = thr2 / (n * (n - 1))
        for p in range(n - 1):
            for q in range(p + 1, n):
                ar = hr[p * n + q]
                ai = hi[p * n + q]
                g2 = ar * ar + ai * ai
                if g2 <= skip2:
                    continue
                # With t = sgn(d) 2g / D, D = |d| + sqrt(d^2 + 4g^2):
                # c = 1/sqrt(1 + t^2) = D / sqrt(D^2 + 4g^2), s e^{i phi} = t c h_pq / g
                # and t g = sgn(d) 2g^2 / D, so g itself is never needed.
                d = hr[q * n + q] - hr[p * n + p]
                denom = fabs(d) + sqrt(d * d + 4.0 * g2)
                inv = 1.0 / sqrt(denom * denom + 4.0 * g2)
                c = denom * inv
                sr = 2.0 * ar * inv
                si = 2.0 * ai * inv
                tg = 2.0 * g2 / denom
                if d < 0.0:
                    sr = -sr
                    si = -si
                    tg = -tg
                # H <- U^H H U with U = [[c, s e^{i phi}], [-s e^{-i phi}, c]].
                # Column pairs (H[k,p], H[k,q]) rotate by (c, s e^{i phi}); the
                # stored row pairs are their conjugates and rotate by the conjugate.
                for k in range(p):
                    _rot_pair(hr, hi, k * n + p, k * n + q, c, sr, si)
                for k in range(p + 1, q):
                    _rot_mixed(hr, hi, p * n + k, k * n + q, c, sr, si)
                for k in range(q + 1, n):
                    _rot_pair(hr, hi, p * n + k, q * n + k, c, sr, -si)
                hr[p * n + p] -= tg
                hr[q * n + q] += tg
                hr[p * n + q] = 0.0
                hi[p * n + q] = 0.0
                if want_v:
                    for k in range(n):
                        _rot_pair(vr, vi, k * n + p, k * n + q, c, sr, si)


cdef inline void _rot_mixed(double* xr, double* xi, Py_ssize_t ip, Py_ssize_t iq,
                            double c, double sr, double si) noexcept nogil:
    """Column rotation where the p entry is stored conjugated (as H[p,k])."""
    cdef double pr = xr[ip], pi = -xi[ip], qr = xr[iq], qi = xi[iq]
    xr[ip] = c * pr - (sr * qr + si * qi)
    xi[ip] = -(c * pi - (sr * qi - si * qr))
    xr[iq] = c * qr + (sr * pr - si * pi)
    xi[iq] = c * qi + (sr * pi + si * pr)


cdef inline void _rot_pair(double* xr, double* xi, Py_ssize_t ip, Py_ssize_t iq,
                           double c, double sr, double si) noexcept nogil:
    """(x_p, x_q) <- (c x_p - conj(s e^{i phi}) x_q, s e^{i phi} x_p + c x_q)."""
    cdef double pr = xr[ip], pi = xi[ip], qr = xr[iq], qi = xi[iq]
    xr[ip] = c * pr - (sr * qr + si * qi)
    xi[ip] = c * pi - (sr * qi - si * qr)
    xr[iq] = c * qr + (sr * pr - si * pi)
    xi[iq] = c * qi + (sr * pi + si * pr)


cdef void _rotated_part(const double* ar, const double* ai, Py_ssize_t n, double theta,
                        double* hr, double* hi) noexcept nogil:
    """Fill (hr, hi) with (e^{i theta} A + e^{-i theta} A^*) / 2, exactly Hermitian."""
    cdef double ct = cos(theta), st = sin(theta)
    cdef double xr, xi, yr, yi, re, im
    cdef Py_ssize_t i, j
    for i in range(n):
        hr[i * n + i] = ct * ar[i * n + i] - st * ai[i * n + i]
        hi[i * n + i] = 0.0
        for j in range(i + 1, n):
            xr = ar[i * n + j]
            xi = ai[i * n + j]
            yr = ar[j * n + i]
            yi = ai[j * n + i]
            re = 0.5 * ((ct * xr - st * xi) + (ct * yr - st * yi))
            im = 0.5 * ((ct * xi + st * xr) - (st * yr + ct * yi))
            hr[i * n + j] = re
            hi[i * n + j] = im
            hr[j * n + i] = re
            hi[j * n + i] = -im


cdef void _extremes(const double* hr, Py_ssize_t n, Py_ssize_t* imin, Py_ssize_t* imax) noexcept nogil:
    cdef Py_ssize_t i
    imin[0] = 0
    imax[0] = 0
    for i in range(1, n):
        if hr[i * n + i] < hr[imin[0] * n + imin[0]]:
            imin[0] = i
        if hr[i * n + i] > hr[imax[0] * n + imax[0]]:
            imax[0] = i


cdef class _Work:
    """Scratch buffers for one matrix dimension."""
    cdef double* ar
    cdef double* ai
    cdef double* hr
    cdef double* hi
    cdef double* vr
    cdef double* vi
    cdef Py_ssize_t n

    def __cinit__(self, Py_ssize_t n):
        self.n = n
        self.ar = <double*> malloc(6 * n * n * sizeof(double))
        if self.ar == NULL:
            raise MemoryError()
        self.ai = self.ar + n * n
        self.hr = self.ai + n * n
        self.hi = self.hr + n * n
        self.vr = self.hi + n * n
        self.vi = self.vr + n * n

    def __dealloc__(self):
        free(self.ar)

    cdef void load(self, const double complex[:, ::1] A):
        cdef Py_ssize_t i, j, n = self.n
        for i in range(n):
            for j in range(n):
                self.ar[i * n + j] = A[i, j].real
                self.ai[i * n + j] = A[i, j].imag


cdef double _objective(_Work w, double theta, int objective, double tol,
                       int max_sweeps, int* ok) noexcept nogil:
    cdef double off
    cdef Py_ssize_t imin, imax, n = w.n
    _rotated_part(w.ar, w.ai, n, theta, w.hr, w.hi)
    if _jacobi(w.hr, w.hi, n, NULL, NULL, False, tol, max_sweeps, &off) < 0:
        ok[0] = 0
    _extremes(w.hr, n, &imin, &imax)
    if objective == 0:
        return w.hr[imax * n + imax]
    return max(w.hr[imax * n + imax], -w.hr[imin * n + imin])


def eigh(const double complex[:, ::1] H, double tol, int max_sweeps, bint want_vectors):
    """Eigenvalues (ascending) and optionally eigenvectors of a Hermitian matrix.

    Returns ``(values, vectors_or_None, sweeps, off_norm)``; ``sweeps`` is -1
    on non-convergence.
    """
    cdef Py_ssize_t n = H.shape[0], i, j
    cdef _Work w = _Work(max(n, 1))
    cdef double off = 0.0
    cdef int sweeps
    for i in range(n):
        for j in range(n):
            w.hr[i * n + j] = H[i, j].real
            w.hi[i * n + j] = H[i, j].imag
    with nogil:
        sweeps = _jacobi(w.hr, w.hi, n, w.vr, w.vi, want_vectors, tol, max_sweeps, &off)
    vals = np.empty(n, dtype=np.float64)
    cdef double[::1] vv = vals
    for i in range(n):
        vv[i] = w.hr[i * n + i]
    order = np.argsort(vals, kind="stable")
    vecs = None
    if want_vectors:
        vecs = np.empty((n, n), dtype=np.complex128)
        for i in range(n):
            for j in range(n):
                vecs[i, j] = complex(w.vr[i * n + j], w.vi[i * n + j])
        vecs = vecs[:, order]
    return vals[order], vecs, sweeps, off


def sweep(const double complex[:, ::1] A, const double[::1] thetas, double tol,
          int max_sweeps, bint want_vectors):
    """Extreme eigenpairs of Re(e^{i theta} A) for every theta.

    Returns ``(lam_max, lam_min, vec_max, vec_min, ok)``; the vector arrays
    are ``None`` unless requested.
    """
    cdef Py_ssize_t n = A.shape[0], m = thetas.shape[0], t, k
    cdef Py_ssize_t imin, imax
    cdef _Work w = _Work(n)
    cdef double off
    cdef int ok = 1
    w.load(A)
    lmax = np.empty(m, dtype=np.float64)
    lmin = np.empty(m, dtype=np.float64)
    cdef double[::1] lmx = lmax
    cdef double[::1] lmn = lmin
    cdef double[:, ::1] vmax_r, vmax_i, vmin_r, vmin_i
    if want_vectors:
        vmax_r = np.empty((m, n))
        vmax_i = np.empty((m, n))
        vmin_r = np.empty((m, n))
        vmin_i = np.empty((m, n))
    with nogil:
        for t in range(m):
            _rotated_part(w.ar, w.ai, n, thetas[t], w.hr, w.hi)
            if _jacobi(w.hr, w.hi, n, w.vr, w.vi, want_vectors, tol, max_sweeps, &off) < 0:
                ok = 0
            _extremes(w.hr, n, &imin, &imax)
            lmx[t] = w.hr[imax * n + imax]
            lmn[t] = w.hr[imin * n + imin]
            if want_vectors:
                for k in range(n):
                    vmax_r[t, k] = w.vr[k * n + imax]
                    vmax_i[t, k] = w.vi[k * n + imax]
                    vmin_r[t, k] = w.vr[k * n + imin]
                    vmin_i[t, k] = w.vi[k * n + imin]
    if want_vectors:
        vmax = np.asarray(vmax_r) + 1j * np.asarray(vmax_i)
        vmin = np.asarray(vmin_r) + 1j * np.asarray(vmin_i)
        return lmax, lmin, vmax, vmin, bool(ok)
    return lmax, lmin, None, None, bool(ok)


def golden(const double complex[:, ::1] A, double lo, double hi, double width,
           int objective, bint maximize, double tol, int max_sweeps):
    """Golden-section search for an extremum of a theta-profile on [lo, hi].

    ``objective`` 0 is lambda_max(Re(e^{i theta} A)), 1 is ||Re(e^{i theta} A)||.
    Returns ``(theta, value, ok)`` for the best point evaluated; ties keep the
    smaller theta.
    """
    cdef Py_ssize_t n = A.shape[0]
    cdef _Work w = _Work(n)
    cdef double a = lo, b = hi, c, d, fc, fd, sign = 1.0 if maximize else -1.0
    cdef double best_t, best_f
    cdef int ok = 1
    w.load(A)
    with nogil:
        c = b - INV_PHI * (b - a)
        d = a + INV_PHI * (b - a)
        fc = sign * _objective(w, c, objective, tol, max_sweeps, &ok)
        fd = sign * _objective(w, d, objective, tol, max_sweeps, &ok)
        if fc >= fd:
            best_t = c
            best_f = fc
        else:
            best_t = d
            best_f = fd
        while b - a > width:
            if fc >= fd:
                b = d
                d = c
                fd = fc
                c = b - INV_PHI * (b - a)
                fc = sign * _objective(w, c, objective, tol, max_sweeps, &ok)
                if fc > best_f or (fc == best_f and c < best_t):
                    best_t = c
                    best_f = fc
            else:
                a = c
                c = d
                fc = fd
                d = a + INV_PHI * (b - a)
                fd = sign * _objective(w, d, objective, tol, max_sweeps, &ok)
                if fd > best_f or (fd == best_f and d < best_t):
                    best_t = d
                    best_f = fd
    return best_t, sign * best_f, bool(ok)
