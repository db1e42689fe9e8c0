"""Pure-numpy row reduction over a prime field (fallback path).

Same contract as the jitted kernels: int64 input already reduced mod p,
in-place elimination, row operations vectorized across the matrix.
"""

import numpy as np


def rref_mod_p(a, p):
    """In-place reduced row echelon form mod p; returns (rank, pivot_cols)."""
    m, n = a.shape
    pivots = []
    r = 0
    for c in range(n):
        if r == m:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        inv = pow(int(a[r, c]), p - 2, p)
        a[r] = (a[r] * inv) % p
        rows = np.nonzero(a[:, c])[0]
        rows = rows[rows != r]
        if rows.size:
            a[rows] = (a[rows] - np.outer(a[rows, c], a[r])) % p
        pivots.append(c)
        r += 1
    return r, np.asarray(pivots, dtype=np.int64)


def rank_mod_p(a, p):
    """Rank via forward elimination mod p."""
    m, n = a.shape
    r = 0
    for c in range(n):
        if r == m:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        inv = pow(int(a[r, c]), p - 2, p)
        below = np.nonzero(a[r + 1:, c])[0] + r + 1
        if below.size:
            f = (a[below, c] * inv) % p
            a[below] = (a[below] - np.outer(f, a[r])) % p
        r += 1
    return r
