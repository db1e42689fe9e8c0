"""Monomial bases of spaces of forms, and the matrices built on them.

The basis of degree-d forms in n+1 variables is ordered graded-lex with the
pure power of the first variable first, so every matrix indexed by it is
reproducible.  All entries are exact integers; callers reduce mod p.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from math import comb

import numpy as np

Exponent = tuple[int, ...]


def monomial_exponents(n: int, d: int) -> tuple[Exponent, ...]:
    """Degree-d exponent tuples in n+1 variables, descending lex."""
    def rec(nvars: int, deg: int):
        if nvars == 1:
            yield (deg,)
            return
        for first in range(deg, -1, -1):
            for rest in rec(nvars - 1, deg - first):
                yield (first,) + rest

    return tuple(rec(n + 1, d))


@dataclass(frozen=True)
class PolySpace:
    """The space of degree-d forms on projective n-space."""

    n: int
    d: int
    monomials: tuple[Exponent, ...] = field(init=False)

    def __post_init__(self):
        if self.n < 1 or self.d < 0:
            raise ValueError("need n >= 1 and d >= 0")
        object.__setattr__(self, "monomials", monomial_exponents(self.n, self.d))

    @property
    def dim(self) -> int:
        return len(self.monomials)

    def index(self) -> dict[Exponent, int]:
        return _index_map(self.n, self.d)

    def eval_monomials(self, point) -> list[int]:
        """Exact values of every basis monomial at an integer point."""
        out = []
        for expo in self.monomials:
            v = 1
            for x, e in zip(point, expo):
                if e:
                    v *= int(x) ** e
            out.append(v)
        return out


@lru_cache(maxsize=None)
def poly_space(n: int, d: int) -> PolySpace:
    return PolySpace(n, d)


@lru_cache(maxsize=None)
def _index_map(n: int, d: int) -> dict[Exponent, int]:
    return {e: i for i, e in enumerate(monomial_exponents(n, d))}


@lru_cache(maxsize=None)
def mult_map_matrix(n: int, d: int) -> np.ndarray:
    """Matrix of multiplication (degree d) x (degree 1) -> (degree d+1).

    Shape (dim S^{d+1}, N*(n+1)); the domain basis vector (alpha, i) maps to
    the monomial alpha + e_i.  The right kernel is the space of global
    sections of the twisted evaluation-kernel bundle on projective space.
    """
    src = poly_space(n, d)
    dst_index = _index_map(n, d + 1)
    nvars = n + 1
    a = np.zeros((comb(n + d + 1, d + 1), src.dim * nvars), dtype=np.int64)
    for ai, alpha in enumerate(src.monomials):
        for i in range(nvars):
            beta = list(alpha)
            beta[i] += 1
            a[dst_index[tuple(beta)], ai * nvars + i] = 1
    return a


def expected_mult_kernel_dim(n: int, d: int) -> int:
    """N*(n+1) - dim S^{d+1}: the multiplication map is surjective."""
    return comb(n + d, d) * (n + 1) - comb(n + d + 1, d + 1)


@lru_cache(maxsize=None)
def wedge_pairs(count: int) -> tuple[tuple[int, int], ...]:
    return tuple(combinations(range(count), 2))


@lru_cache(maxsize=None)
def wedge2_koszul_matrix(n: int, d: int) -> np.ndarray:
    """Matrix of the Koszul map wedge^2 S^d tensor S^1 -> S^d tensor S^{d+1}.

    Domain basis ((alpha < beta), i) maps to
    alpha (x) (beta + e_i)  minus  beta (x) (alpha + e_i).
    Shape (N * dim S^{d+1}, C(N,2) * (n+1)); the right kernel is the space
    of global sections of the twisted second exterior power.
    """
    src = poly_space(n, d)
    dst_index = _index_map(n, d + 1)
    nvars = n + 1
    nd1 = comb(n + d + 1, d + 1)
    pairs = wedge_pairs(src.dim)
    a = np.zeros((src.dim * nd1, len(pairs) * nvars), dtype=np.int64)
    for pi, (ai, bi) in enumerate(pairs):
        alpha = src.monomials[ai]
        beta = src.monomials[bi]
        for i in range(nvars):
            col = pi * nvars + i
            bplus = list(beta)
            bplus[i] += 1
            aplus = list(alpha)
            aplus[i] += 1
            a[ai * nd1 + dst_index[tuple(bplus)], col] += 1
            a[bi * nd1 + dst_index[tuple(aplus)], col] -= 1
    return a


def contact_matrix(n: int, d: int, r: int, x, y) -> list[list[int]]:
    """First r Taylor coefficients of a degree-d form along the line x + t*y.

    Row j, column alpha holds the exact coefficient of t^j in the product
    prod_i (x_i + t*y_i)^{alpha_i}; contact of order >= r at x means the
    first r rows annihilate the form's coefficient vector.
    """
    if not 0 <= r <= d + 1:
        raise ValueError(f"need 0 <= r <= d+1, got r={r}")
    space = poly_space(n, d)
    x = [int(v) for v in x]
    y = [int(v) for v in y]
    rows = [[0] * space.dim for _ in range(r)]
    for col, expo in enumerate(space.monomials):
        poly = [1]  # coefficients in t, truncated at degree r-1
        for xi, yi, e in zip(x, y, expo):
            for _ in range(e):
                nxt = [0] * min(len(poly) + 1, r)
                for k, c in enumerate(poly):
                    if k < r:
                        nxt[k] += c * xi
                    if k + 1 < r:
                        nxt[k + 1] += c * yi
                poly = nxt
                if not poly:
                    break
            if not poly:
                break
        for j, c in enumerate(poly):
            rows[j][col] = c
    return rows
