"""Linear algebra over a prime field, with an exact rational fallback.

The hot kernels (rank, reduced row echelon form) have two interchangeable
implementations: numba-jitted loops and pure numpy.  The numpy path is
selected by setting the environment variable OSCLINES_NO_NUMBA, or
automatically when numba is unavailable.

Ranks over a random prime field lower-bound ranks over the rationals, so a
full-rank answer mod p is conclusive; deficiencies are re-checked exactly
with fraction-free (Bareiss) elimination over the integers.
"""

from __future__ import annotations

import os
from fractions import Fraction

import numpy as np

DEFAULT_PRIME = 10007


def _numpy_forced() -> bool:
    return os.environ.get("OSCLINES_NO_NUMBA", "").strip().lower() in ("1", "true", "yes", "on")


def _load_backend():
    if not _numpy_forced():
        try:
            from . import _modp_numba as backend
            return backend, "numba"
        except ImportError:
            pass
    from . import _modp_numpy as backend
    return backend, "numpy"


_BACKEND, BACKEND_NAME = _load_backend()


def _as_modp(mat, p: int) -> np.ndarray:
    a = np.array(mat, dtype=np.int64, order="C", copy=True)
    if a.ndim != 2:
        raise ValueError("expected a 2-d matrix")
    np.mod(a, p, out=a)
    return a


def rank_mod_p(mat, p: int = DEFAULT_PRIME) -> int:
    a = _as_modp(mat, p)
    if a.size == 0:
        return 0
    return int(_BACKEND.rank_mod_p(a, p))


def rref_mod_p(mat, p: int = DEFAULT_PRIME) -> tuple[np.ndarray, np.ndarray]:
    """Reduced row echelon form; returns (rref matrix, pivot columns)."""
    a = _as_modp(mat, p)
    if a.size == 0:
        return a, np.zeros(0, dtype=np.int64)
    rank, pivots = _BACKEND.rref_mod_p(a, p)
    return a[: int(rank)], np.asarray(pivots, dtype=np.int64)


def nullspace_mod_p(mat, p: int = DEFAULT_PRIME) -> np.ndarray:
    """Basis of the right kernel mod p, one vector per row.

    From the RREF with pivot columns P and free columns F, each free column
    f yields the vector with 1 at f and -R[i, f] at pivot column P[i].
    """
    a = _as_modp(mat, p)
    m, n = a.shape
    if n == 0:
        return np.zeros((0, 0), dtype=np.int64)
    if m == 0:
        return np.eye(n, dtype=np.int64)
    rref, pivots = rref_mod_p(a, p)
    pivot_set = set(int(c) for c in pivots)
    free = [c for c in range(n) if c not in pivot_set]
    basis = np.zeros((len(free), n), dtype=np.int64)
    for row, f in enumerate(free):
        basis[row, f] = 1
        for i, c in enumerate(pivots):
            basis[row, int(c)] = (-int(rref[i, f])) % p
    return basis


def rank_exact(mat) -> int:
    """Exact rank of an integer matrix, fraction-free Bareiss elimination."""
    a = [[int(x) for x in row] for row in np.asarray(mat)]
    m = len(a)
    n = len(a[0]) if m else 0
    r = 0
    prev = 1
    for c in range(n):
        if r == m:
            break
        pivot = next((i for i in range(r, m) if a[i][c] != 0), None)
        if pivot is None:
            continue
        if pivot != r:
            a[r], a[pivot] = a[pivot], a[r]
        for i in range(r + 1, m):
            for j in range(c + 1, n):
                a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) // prev
            a[i][c] = 0
        prev = a[r][c]
        r += 1
    return r


def nullspace_exact(mat) -> list[list[Fraction]]:
    """Basis of the right kernel over the rationals (Gaussian elimination)."""
    a = [[Fraction(int(x)) for x in row] for row in np.asarray(mat)]
    m = len(a)
    n = len(a[0]) if m else 0
    pivots: list[int] = []
    r = 0
    for c in range(n):
        if r == m:
            break
        pivot = next((i for i in range(r, m) if a[i][c] != 0), None)
        if pivot is None:
            continue
        if pivot != r:
            a[r], a[pivot] = a[pivot], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(m):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    pivot_set = set(pivots)
    basis = []
    for f in range(n):
        if f in pivot_set:
            continue
        vec = [Fraction(0)] * n
        vec[f] = Fraction(1)
        for i, c in enumerate(pivots):
            vec[c] = -a[i][f]
        basis.append(vec)
    return basis
