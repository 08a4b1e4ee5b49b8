# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled implementations of the hot conjugation kernels.

Semantics mirror kstab._kernels_py (the pure-numpy fallback); results agree
to solver tolerance but are not required to be bit-identical.  Both are
deterministic for fixed inputs.
"""

import numpy as np

cimport numpy as cnp
from libc.math cimport fabs, isfinite, log, sqrt

cnp.import_array()

DEF MAXM = 64
DEF MAXN = 8

cdef double LFLOOR = 1e-290
cdef double ULOG_FLOOR = 1e-300
cdef double ARMIJO = 0.25
cdef double FTB = 0.95


cdef inline double _clip_log(double l) nogil:
    return log(l if l > ULOG_FLOOR else ULOG_FLOOR)


cdef inline double _u0_point(const double[:, ::1] normals, const double[::1] offsets,
                             double* y, int m, int n) nogil:
    cdef double s = 0.0
    cdef double l
    cdef int i, j
    for i in range(m):
        l = offsets[i]
        for j in range(n):
            l += normals[i, j] * y[j]
        s += l * _clip_log(l)
    return s


cdef inline bint _solve_spd(double* H, double* g, double* d, int n) nogil:
    """d = -H^{-1} g for small n; returns False when singular/non-finite."""
    cdef double det, inv
    cdef int i, j, k, p
    cdef double A[MAXN][MAXN + 1]
    cdef double piv, factor
    if n == 1:
        if H[0] <= 0 or not isfinite(H[0]):
            return False
        d[0] = -g[0] / H[0]
        return isfinite(d[0]) != 0
    if n == 2:
        det = H[0] * H[3] - H[1] * H[2]
        if det == 0 or not isfinite(det):
            return False
        d[0] = -(H[3] * g[0] - H[1] * g[1]) / det
        d[1] = -(H[0] * g[1] - H[2] * g[0]) / det
        return isfinite(d[0]) != 0 and isfinite(d[1]) != 0
    # generic Gaussian elimination with partial pivoting
    for i in range(n):
        for j in range(n):
            A[i][j] = H[i * n + j]
        A[i][n] = -g[i]
    for k in range(n):
        p = k
        for i in range(k + 1, n):
            if fabs(A[i][k]) > fabs(A[p][k]):
                p = i
        if A[p][k] == 0 or not isfinite(A[p][k]):
            return False
        if p != k:
            for j in range(n + 1):
                piv = A[k][j]
                A[k][j] = A[p][j]
                A[p][j] = piv
        for i in range(k + 1, n):
            factor = A[i][k] / A[k][k]
            for j in range(k, n + 1):
                A[i][j] -= factor * A[k][j]
    for k in range(n - 1, -1, -1):
        piv = A[k][n]
        for j in range(k + 1, n):
            piv -= A[k][j] * d[j]
        d[k] = piv / A[k][k]
        if not isfinite(d[k]):
            return False
    return True


def invert_gradient(normals_in, offsets_in, Z_in, Y0_in,
                    double tol=1e-13, int max_iter=80):
    """Solve grad u0(y) = z per row of Z; see the fallback for the contract."""
    cdef cnp.ndarray[cnp.float64_t, ndim=2] normals = \
        np.ascontiguousarray(normals_in, dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] offsets = \
        np.ascontiguousarray(offsets_in, dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=2] Z = \
        np.ascontiguousarray(Z_in, dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=2] Y = \
        np.array(Y0_in, dtype=np.float64, copy=True, order="C")
    cdef int m = normals.shape[0]
    cdef int n = normals.shape[1]
    cdef int k = Z.shape[0]
    if m > MAXM or n > MAXN:
        raise ValueError(f"kernel supports at most {MAXM} facets and {MAXN} dims")
    cdef cnp.ndarray[cnp.uint8_t, ndim=1] conv = np.zeros(k, dtype=np.uint8)
    cdef double[:, ::1] nv = normals
    cdef double[::1] off = offsets
    cdef double[:, ::1] zv = Z
    cdef double[:, ::1] yv = Y
    cdef cnp.uint8_t[::1] cv = conv

    cdef int p, it, i, j, a, bt
    cdef double y[MAXN]
    cdef double z[MAXN]
    cdef double g[MAXN]
    cdef double d[MAXN]
    cdef double trial[MAXN]
    cdef double H[MAXN * MAXN]
    cdef double L[MAXM]
    cdef double psi, psi_t, l, w, gd, alpha, ld, ratio, step, ynorm, gl
    cdef bint ok, moved

    with nogil:
        for p in range(k):
            for j in range(n):
                y[j] = yv[p, j]
                z[j] = zv[p, j]
            psi = _u0_point(nv, off, y, m, n)
            for j in range(n):
                psi -= z[j] * y[j]
            for it in range(max_iter):
                # gradient and Hessian of psi at y
                for j in range(n):
                    g[j] = -z[j]
                for i in range(n * n):
                    H[i] = 0.0
                for i in range(m):
                    l = off[i]
                    for j in range(n):
                        l += nv[i, j] * y[j]
                    if l < LFLOOR:
                        l = LFLOOR
                    L[i] = l
                    gl = _clip_log(l) + 1.0
                    w = 1.0 / l
                    for j in range(n):
                        g[j] += nv[i, j] * gl
                        for a in range(n):
                            H[j * n + a] += w * nv[i, j] * nv[i, a]
                ok = _solve_spd(H, g, d, n)
                gd = 0.0
                if ok:
                    for j in range(n):
                        gd += g[j] * d[j]
                if (not ok) or (not isfinite(gd)) or gd >= 0:
                    gd = 0.0
                    for j in range(n):
                        d[j] = -g[j]
                        gd -= g[j] * g[j]
                if -gd <= tol:
                    cv[p] = 1
                    break
                # fraction-to-boundary cap
                alpha = 1.0
                for i in range(m):
                    ld = 0.0
                    for j in range(n):
                        ld += nv[i, j] * d[j]
                    if ld < 0.0:
                        ratio = -L[i] / ld * FTB
                        if ratio < alpha:
                            alpha = ratio
                # Armijo backtracking (NaN-safe: accept only verified decrease)
                psi_t = 0.0
                for bt in range(60):
                    for j in range(n):
                        trial[j] = y[j] + alpha * d[j]
                    psi_t = _u0_point(nv, off, trial, m, n)
                    for j in range(n):
                        psi_t -= z[j] * trial[j]
                    if psi_t <= psi + ARMIJO * alpha * gd:
                        break
                    alpha *= 0.5
                moved = psi_t <= psi
                step = 0.0
                ynorm = 0.0
                for j in range(n):
                    step += d[j] * d[j]
                    ynorm += y[j] * y[j]
                step = alpha * sqrt(step)
                if moved:
                    for j in range(n):
                        y[j] = trial[j]
                    psi = psi_t
                if (not moved) or step <= 1e-15 * (1.0 + sqrt(ynorm)):
                    # no representable progress: value-converged at the wall
                    cv[p] = 1
                    break
            for j in range(n):
                yv[p, j] = y[j]
    return Y, conv.astype(bool)


def crease_solve(alpha_in, beta_in, double smax, T_in,
                 double tol=1e-12, int max_iter=100):
    """Solve sum_i beta_i (log(alpha_i + s beta_i) + 1) = T on [0, smax]."""
    cdef cnp.ndarray[cnp.float64_t, ndim=1] al = \
        np.ascontiguousarray(alpha_in, dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] be = \
        np.ascontiguousarray(beta_in, dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] T = \
        np.ascontiguousarray(T_in, dtype=np.float64)
    cdef int m = al.shape[0]
    cdef int k = T.shape[0]
    if m > MAXM:
        raise ValueError(f"kernel supports at most {MAXM} facets")
    cdef cnp.ndarray[cnp.float64_t, ndim=1] S = np.empty(k, dtype=np.float64)
    cdef double[::1] av = al
    cdef double[::1] bv = be
    cdef double[::1] tv = T
    cdef double[::1] sv = S

    cdef bint lo_inf = False, hi_inf = False
    cdef int i, p, it
    cdef double l, w_lo, w_hi, s, lo, hi, wv, dw, err, scale, snew, target
    for i in range(m):
        if av[i] <= 0 and bv[i] > 0:
            lo_inf = True
        if av[i] + smax * bv[i] <= 0 and bv[i] < 0:
            hi_inf = True
    w_lo = 0.0
    w_hi = 0.0
    for i in range(m):
        w_lo += bv[i] * (_clip_log(av[i]) + 1.0)
        w_hi += bv[i] * (_clip_log(av[i] + smax * bv[i]) + 1.0)

    with nogil:
        for p in range(k):
            target = tv[p]
            if (not lo_inf) and target <= w_lo:
                sv[p] = 0.0
                continue
            if (not hi_inf) and target >= w_hi:
                sv[p] = smax
                continue
            s = 0.5 * smax
            lo = 0.0
            hi = smax
            scale = fabs(target)
            if scale < 1.0:
                scale = 1.0
            for it in range(max_iter):
                wv = 0.0
                dw = 0.0
                for i in range(m):
                    l = av[i] + s * bv[i]
                    if l < ULOG_FLOOR:
                        l = ULOG_FLOOR
                    wv += bv[i] * (log(l) + 1.0)
                    dw += bv[i] * bv[i] / l
                err = wv - target
                if fabs(err) <= tol * scale:
                    break
                if err < 0:
                    if s > lo:
                        lo = s
                else:
                    if s < hi:
                        hi = s
                snew = s - err / dw
                if snew <= lo or snew >= hi:
                    snew = 0.5 * (lo + hi)
                s = snew
                if hi - lo <= 1e-15 * smax:
                    break
            sv[p] = s
    return S
