"""Pure-numpy fallback for the hot kernels.

Exact same contracts as kernels_numba; loops run over the (small) kernel
taps with one vectorised strided slice per tap.
"""

import numpy as np


def im2col(xp, kh, kw, sh, sw, ho, wo):
    c = xp.shape[0]
    out = np.empty((c, kh, kw, ho, wo), dtype=xp.dtype)
    for i in range(kh):
        for j in range(kw):
            out[:, i, j] = xp[:, i : i + sh * (ho - 1) + 1 : sh,
                              j : j + sw * (wo - 1) + 1 : sw]
    return out.reshape(c * kh * kw, ho * wo)


def col2im(cols, c, hp, wp, kh, kw, sh, sw, ho, wo):
    cols = cols.reshape(c, kh, kw, ho, wo)
    out = np.zeros((c, hp, wp), dtype=cols.dtype)
    # slice indices within one tap never collide, so += is safe
    for i in range(kh):
        for j in range(kw):
            out[:, i : i + sh * (ho - 1) + 1 : sh,
                j : j + sw * (wo - 1) + 1 : sw] += cols[:, i, j]
    return out


def adam_update(p, g, m, v, lr, beta1, beta2, eps, bc1, bc2):
    m *= beta1
    m += (1.0 - beta1) * g
    v *= beta2
    v += (1.0 - beta2) * g * g
    p -= lr * (m / bc1) / (np.sqrt(v / bc2) + eps)
