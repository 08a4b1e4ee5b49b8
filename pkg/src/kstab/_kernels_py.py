"""Pure-numpy implementation of the hot numeric kernels.

The compiled extension `kstab._kernels` provides the same two entry points
with identical semantics; `kstab.kernels` picks whichever is available.  Both
solvers are deterministic for fixed inputs.

`invert_gradient` inverts the gradient of the torus-symmetric barrier
potential u0(y) = sum_i l_i(y) log l_i(y), l_i(y) = <v_i, y> + a_i, i.e. it
minimizes  u0(y) - <z, y>  over the interior of {l_i > 0} by damped Newton
with a fraction-to-boundary rule and Armijo backtracking.  u0 is strictly
convex there (the normals span), its gradient blows up at the boundary, so
the minimizer is interior and unique.

`crease_solve` solves the strictly increasing 1-d equation
    w(s) = sum_i b_i (log(a_i + s b_i) + 1) = T,   s in (0, smax),
the stationarity condition along a crease segment of the subdivided
conjugation problem, by bracketed Newton, clamping to an endpoint when T lies
outside the attained range.
"""

from __future__ import annotations

import numpy as np

_ARMIJO = 0.25
_FTB = 0.95  # fraction-to-boundary factor


_LFLOOR = 1e-290  # keeps 1/L and log L finite; true gaps never get this small


def _u0(normals, offsets, Y):
    L = Y @ normals.T + offsets
    return np.sum(L * np.log(np.maximum(L, _LFLOOR)), axis=-1)


def invert_gradient(normals, offsets, Z, Y0, tol=1e-13, max_iter=80):
    """Solve grad u0(y) = z for each row z of Z.

    normals: (m, n), offsets: (m,), Z: (k, n), Y0: (k, n) strictly feasible.
    Returns (Y, converged) with Y: (k, n) and converged: (k,) bool.
    Convergence criterion: squared Newton decrement <= tol.
    """
    normals = np.ascontiguousarray(normals, dtype=np.float64)
    offsets = np.ascontiguousarray(offsets, dtype=np.float64)
    Z = np.ascontiguousarray(Z, dtype=np.float64)
    Y = np.array(Y0, dtype=np.float64, copy=True)
    k, n = Y.shape
    converged = np.zeros(k, dtype=bool)
    psi = _u0(normals, offsets, Y) - np.sum(Z * Y, axis=1)
    for _ in range(max_iter):
        act = ~converged
        if not act.any():
            break
        Ya = Y[act]
        Za = Z[act]
        L = np.maximum(Ya @ normals.T + offsets, _LFLOOR)
        grad = (np.log(L) + 1.0) @ normals - Za
        w = 1.0 / L
        # H = sum_i w_i v_i v_i^T, assembled per point
        H = np.einsum("km,mi,mj->kij", w, normals, normals, optimize=True)
        if n == 1:
            d = -grad / H[:, 0, 0][:, None]
        elif n == 2:
            deth = H[:, 0, 0] * H[:, 1, 1] - H[:, 0, 1] * H[:, 1, 0]
            d = np.empty_like(grad)
            d[:, 0] = -(H[:, 1, 1] * grad[:, 0] - H[:, 0, 1] * grad[:, 1]) / deth
            d[:, 1] = -(H[:, 0, 0] * grad[:, 1] - H[:, 1, 0] * grad[:, 0]) / deth
        else:
            d = -np.linalg.solve(H, grad[..., None])[..., 0]
        gd = np.sum(grad * d, axis=1)  # = -decrement^2 when H is exact
        # fall back to steepest descent if the (clipped) Hessian solve failed
        fix = ~np.isfinite(gd) | (gd >= 0)
        if fix.any():
            d[fix] = -grad[fix]
            gd[fix] = -np.sum(grad[fix] ** 2, axis=1)
        done = -gd <= tol
        # fraction-to-boundary step cap
        Ld = d @ normals.T
        with np.errstate(divide="ignore", invalid="ignore"):
            ratio = np.where(Ld < 0, -L / Ld, np.inf)
        alpha = np.minimum(1.0, _FTB * ratio.min(axis=1))
        psi_a = psi[act]
        trial = Ya + alpha[:, None] * d
        psi_t = _u0(normals, offsets, trial) - np.sum(Za * trial, axis=1)
        for _ in range(60):
            # negated comparison so NaN trial values count as failures
            bad = ~(psi_t <= psi_a + _ARMIJO * alpha * gd) & ~done
            if not bad.any():
                break
            alpha[bad] *= 0.5
            trial[bad] = Ya[bad] + alpha[bad, None] * d[bad]
            psi_t[bad] = (_u0(normals, offsets, trial[bad])
                          - np.sum(Za[bad] * trial[bad], axis=1))
        move = ~done & (psi_t <= psi_a)
        # no representable progress: the minimizer is closer to the boundary
        # than float spacing allows; the current point is value-converged
        step = alpha * np.sqrt(np.sum(d * d, axis=1))
        stall = (~done & ~move) | (step <= 1e-15 * (1.0 + np.sqrt(np.sum(Ya * Ya, axis=1))))
        Ya[move] = trial[move]
        psi_a[move] = psi_t[move]
        Y[act] = Ya
        psi[act] = psi_a
        idx = np.flatnonzero(act)
        converged[idx[done | stall]] = True
    return Y, converged


def crease_solve(alpha, beta, smax, T, tol=1e-12, max_iter=100):
    """Solve w(s) = T with w(s) = sum_i beta_i (log(alpha_i + s beta_i) + 1),
    clamped to [0, smax].  alpha, beta: (m,); T: (k,).  Returns S: (k,)."""
    alpha = np.asarray(alpha, dtype=np.float64)
    beta = np.asarray(beta, dtype=np.float64)
    T = np.asarray(T, dtype=np.float64)

    def w_and_deriv(s):
        L = alpha[None, :] + np.outer(s, beta)
        Lc = np.maximum(L, 1e-300)
        w = np.sum(beta[None, :] * (np.log(Lc) + 1.0), axis=1)
        dw = np.sum(beta[None, :] ** 2 / Lc, axis=1)
        return w, dw

    # endpoint values (finite unless a wall is hit exactly at the endpoint)
    lo_inf = np.any((alpha <= 0) & (beta > 0))
    hi_inf = np.any((alpha + smax * beta <= 0) & (beta < 0))
    w_lo = -np.inf if lo_inf else w_and_deriv(np.array([0.0]))[0][0]
    w_hi = np.inf if hi_inf else w_and_deriv(np.array([smax]))[0][0]

    k = T.shape[0]
    S = np.full(k, 0.5 * smax)
    lo = np.zeros(k)
    hi = np.full(k, smax)
    clamp_lo = T <= w_lo
    clamp_hi = T >= w_hi
    S[clamp_lo] = 0.0
    S[clamp_hi] = smax
    active = ~(clamp_lo | clamp_hi)
    if not active.any():
        return S
    scale = np.maximum(1.0, np.abs(T))
    for _ in range(max_iter):
        idx = np.flatnonzero(active)
        if idx.size == 0:
            break
        w, dw = w_and_deriv(S[idx])
        err = w - T[idx]
        done = np.abs(err) <= tol * scale[idx]
        below = err < 0
        lo[idx[below]] = np.maximum(lo[idx[below]], S[idx[below]])
        hi[idx[~below]] = np.minimum(hi[idx[~below]], S[idx[~below]])
        step = -err / dw
        snew = S[idx] + step
        outside = (snew <= lo[idx]) | (snew >= hi[idx])
        snew[outside] = 0.5 * (lo[idx[outside]] + hi[idx[outside]])
        S[idx] = snew
        tiny = (hi[idx] - lo[idx]) <= 1e-15 * smax
        active[idx[done | tiny]] = False
    return S
