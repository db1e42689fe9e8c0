"""Numba-jitted row reduction over a prime field.

Matrices are C-contiguous int64 arrays with entries already reduced mod p;
p is small enough (~10^4) that products of two entries stay far below the
int64 limit.
"""

import numpy as np
from numba import njit


@njit(cache=True)
def _inv_mod(a, p):
    # Fermat: a^(p-2) mod p
    result = 1
    base = a % p
    e = p - 2
    while e > 0:
        if e & 1:
            result = (result * base) % p
        base = (base * base) % p
        e >>= 1
    return result


@njit(cache=True)
def rref_mod_p(a, p):
    """In-place reduced row echelon form mod p; returns (rank, pivot_cols)."""
    m, n = a.shape
    pivots = np.empty(min(m, n), dtype=np.int64)
    r = 0
    for c in range(n):
        if r == m:
            break
        pivot = -1
        for i in range(r, m):
            if a[i, c] != 0:
                pivot = i
                break
        if pivot == -1:
            continue
        if pivot != r:
            for j in range(n):
                tmp = a[r, j]
                a[r, j] = a[pivot, j]
                a[pivot, j] = tmp
        inv = _inv_mod(a[r, c], p)
        for j in range(n):
            a[r, j] = (a[r, j] * inv) % p
        for i in range(m):
            if i != r and a[i, c] != 0:
                f = a[i, c]
                for j in range(n):
                    a[i, j] = (a[i, j] - f * a[r, j]) % p
        pivots[r] = c
        r += 1
    return r, pivots[:r]


@njit(cache=True)
def rank_mod_p(a, p):
    """Rank via forward elimination mod p (no back-substitution)."""
    m, n = a.shape
    r = 0
    for c in range(n):
        if r == m:
            break
        pivot = -1
        for i in range(r, m):
            if a[i, c] != 0:
                pivot = i
                break
        if pivot == -1:
            continue
        if pivot != r:
            for j in range(c, n):
                tmp = a[r, j]
                a[r, j] = a[pivot, j]
                a[pivot, j] = tmp
        inv = _inv_mod(a[r, c], p)
        for i in range(r + 1, m):
            if a[i, c] != 0:
                f = (a[i, c] * inv) % p
                for j in range(c, n):
                    a[i, j] = (a[i, j] - f * a[r, j]) % p
        r += 1
    return r
