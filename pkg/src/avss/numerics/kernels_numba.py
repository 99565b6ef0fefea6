"""Numba-jitted hot kernels.

Only the memory-bound gather/scatter loops live here; the matching GEMMs
run through BLAS at the call sites. col2im parallelises over channels so
every output element is accumulated by exactly one thread in a fixed
order (deterministic reductions).
"""

import numpy as np
from numba import njit, prange


@njit(cache=True, parallel=True)
def im2col(xp, kh, kw, sh, sw, ho, wo):
    c = xp.shape[0]
    out = np.empty((c * kh * kw, ho * wo), dtype=xp.dtype)
    for ci in prange(c):
        for i in range(kh):
            for j in range(kw):
                row = (ci * kh + i) * kw + j
                for oy in range(ho):
                    iy = oy * sh + i
                    base = oy * wo
                    for ox in range(wo):
                        out[row, base + ox] = xp[ci, iy, ox * sw + j]
    return out


@njit(cache=True, parallel=True)
def col2im(cols, c, hp, wp, kh, kw, sh, sw, ho, wo):
    out = np.zeros((c, hp, wp), dtype=cols.dtype)
    for ci in prange(c):
        for i in range(kh):
            for j in range(kw):
                row = (ci * kh + i) * kw + j
                for oy in range(ho):
                    iy = oy * sh + i
                    base = oy * wo
                    for ox in range(wo):
                        out[ci, iy, ox * sw + j] += cols[row, base + ox]
    return out


@njit(cache=True, parallel=True)
def adam_update(p, g, m, v, lr, beta1, beta2, eps, bc1, bc2):
    # flat views; single fused pass over the parameter block
    for i in prange(p.size):
        gi = g[i]
        mi = beta1 * m[i] + (1.0 - beta1) * gi
        vi = beta2 * v[i] + (1.0 - beta2) * gi * gi
        m[i] = mi
        v[i] = vi
        p[i] -= lr * (mi / bc1) / (np.sqrt(vi / bc2) + eps)
