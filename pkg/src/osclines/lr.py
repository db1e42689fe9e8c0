"""Littlewood-Richardson coefficients by direct tableau enumeration.

c(lam, mu; nu) counts skew semistandard fillings of nu/lam with content mu
whose reverse reading word is a lattice word.  Cells are visited in reading
order (rows top to bottom, each row right to left) so the lattice condition
and semistandardness prune incrementally.  Results are memoized per triple.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator

from .multipoly import MultiPoly
from .partitions import Partition, as_partition, contains, weight


@lru_cache(maxsize=None)
def lr_coefficient(lam: Partition, mu: Partition, nu: Partition) -> int:
    """Number of LR tableaux of shape nu/lam and content mu.

    Returns 0 on weight mismatch or when lam is not contained in nu.
    """
    lam = as_partition(lam)
    mu = as_partition(mu)
    nu = as_partition(nu)
    if weight(lam) + weight(mu) != weight(nu):
        return 0
    if not contains(nu, lam) or not contains(nu, mu):
        return 0
    if not mu:
        return 1 if lam == nu else 0

    inner = tuple(lam) + (0,) * (len(nu) - len(lam))
    cells = []  # reading order: top row first, right-to-left within a row
    for r in range(len(nu)):
        for c in range(nu[r] - 1, inner[r] - 1, -1):
            cells.append((r, c))

    m = len(mu)
    grid = [[0] * nu[r] for r in range(len(nu))]
    counts = [0] * (m + 1)
    total = 0

    def fill(idx: int) -> None:
        nonlocal total
        if idx == len(cells):
            total += 1
            return
        r, c = cells[idx]
        right = grid[r][c + 1] if c + 1 < nu[r] else m
        above_cell = r > 0 and c >= inner[r - 1] and c < nu[r - 1]
        above = grid[r - 1][c] if above_cell else 0
        for v in range(above + 1, min(right, m) + 1):
            if counts[v] >= mu[v - 1]:
                continue
            if v > 1 and counts[v] >= counts[v - 1]:
                continue  # lattice word would break
            counts[v] += 1
            grid[r][c] = v
            fill(idx + 1)
            grid[r][c] = 0
            counts[v] -= 1

    fill(0)
    return total


def semistandard_tableaux(shape: Partition, max_entry: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    """All SSYT of the given shape with entries in 1..max_entry."""
    shape = as_partition(shape)
    if not shape:
        yield ()
        return
    rows = len(shape)
    grid = [[0] * shape[r] for r in range(rows)]
    cells = [(r, c) for r in range(rows) for c in range(shape[r])]

    def fill(idx: int) -> Iterator[tuple[tuple[int, ...], ...]]:
        if idx == len(cells):
            yield tuple(tuple(row) for row in grid)
            return
        r, c = cells[idx]
        lo = 1
        if c > 0:
            lo = max(lo, grid[r][c - 1])
        if r > 0:
            lo = max(lo, grid[r - 1][c] + 1)
        for v in range(lo, max_entry + 1):
            grid[r][c] = v
            yield from fill(idx + 1)
            grid[r][c] = 0

    yield from fill(0)


def schur_polynomial(shape: Partition, nvars: int) -> MultiPoly:
    """Schur polynomial as a sum of monomials over SSYT; independent of LR."""
    shape = as_partition(shape)
    out = MultiPoly.zero(nvars)
    if len(shape) > nvars:
        return out
    acc: dict[tuple[int, ...], int] = {}
    for tab in semistandard_tableaux(shape, nvars):
        expo = [0] * nvars
        for row in tab:
            for v in row:
                expo[v - 1] += 1
        key = tuple(expo)
        acc[key] = acc.get(key, 0) + 1
    return MultiPoly(nvars, acc)
