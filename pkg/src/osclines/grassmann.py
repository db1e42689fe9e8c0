"""Integral cohomology ring of the Grassmannian of m-planes in N-space.

Schubert classes sigma_lam are indexed by partitions inside an m x (N-m)
box; |lam| is the codimension.  Products expand by Littlewood-Richardson
coefficients with partitions outside the box discarded, so classes are
always in normal form.  The Pluecker polarization class is sigma_(1).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .lr import lr_coefficient
from .partitions import (
    Partition,
    as_partition,
    box_complement,
    fits_box,
    partitions_in_box,
    weight,
)


class ContextMismatchError(ValueError):
    """Operands live over different Grassmannians."""


@dataclass(frozen=True)
class Grassmannian:
    """m-dimensional subspaces of an N-dimensional space."""

    m: int
    N: int

    def __post_init__(self):
        if not 1 <= self.m < self.N:
            raise ValueError(f"need 1 <= m < N, got m={self.m}, N={self.N}")

    @property
    def rows(self) -> int:
        return self.m

    @property
    def cols(self) -> int:
        return self.N - self.m

    @property
    def dim(self) -> int:
        return self.m * (self.N - self.m)

    @property
    def point_partition(self) -> Partition:
        return (self.cols,) * self.rows

    def zero(self) -> "SchubertClass":
        return SchubertClass(self, {})

    def one(self) -> "SchubertClass":
        return SchubertClass(self, {(): 1})


def lines_in_projective_space(n: int) -> Grassmannian:
    """Lines in projective n-space, i.e. 2-planes in (n+1)-space."""
    return Grassmannian(2, n + 1)


@lru_cache(maxsize=None)
def _pair_expansion(lam: Partition, mu: Partition, rows: int, cols: int):
    """sigma_lam * sigma_mu inside the rows x cols box, as ((nu, coeff), ...)."""
    out = []
    for nu in partitions_in_box(rows, cols, weight(lam) + weight(mu)):
        c = lr_coefficient(lam, mu, nu)
        if c:
            out.append((nu, c))
    return tuple(out)


class SchubertClass:
    """Integer combination of Schubert classes over a fixed Grassmannian."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: Grassmannian, coeffs: dict[Partition, int]):
        self.ctx = ctx
        clean = {}
        for p, c in coeffs.items():
            if c:
                p = tuple(p)
                if not fits_box(p, ctx.rows, ctx.cols):
                    raise ValueError(f"{p} does not fit the {ctx.rows}x{ctx.cols} box")
                clean[p] = c
        self.coeffs = clean

    def _check(self, other: "SchubertClass") -> None:
        if self.ctx != other.ctx:
            raise ContextMismatchError(f"{self.ctx} vs {other.ctx}")

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, p) -> int:
        return self.coeffs.get(as_partition(p), 0)

    def __add__(self, other):
        if isinstance(other, int):
            other = other * self.ctx.one()
        self._check(other)
        out = dict(self.coeffs)
        for p, c in other.coeffs.items():
            out[p] = out.get(p, 0) + c
        return SchubertClass(self.ctx, out)

    __radd__ = __add__

    def __neg__(self):
        return SchubertClass(self.ctx, {p: -c for p, c in self.coeffs.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = other * self.ctx.one()
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return SchubertClass(self.ctx, {p: other * c for p, c in self.coeffs.items()})
        self._check(other)
        rows, cols = self.ctx.rows, self.ctx.cols
        out: dict[Partition, int] = {}
        for lam, a in self.coeffs.items():
            for mu, b in other.coeffs.items():
                for nu, c in _pair_expansion(lam, mu, rows, cols):
                    out[nu] = out.get(nu, 0) + a * b * c
        return SchubertClass(self.ctx, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        out = self.ctx.one()
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = other * self.ctx.one()
        if not isinstance(other, SchubertClass):
            return NotImplemented
        return self.ctx == other.ctx and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.ctx, frozenset(self.coeffs.items())))

    def graded_part(self, k: int) -> "SchubertClass":
        return SchubertClass(self.ctx, {p: c for p, c in self.coeffs.items() if weight(p) == k})

    def degrees(self) -> set[int]:
        return {weight(p) for p in self.coeffs}

    def __repr__(self):
        if not self.coeffs:
            return "0"
        bits = []
        for p in sorted(self.coeffs, key=lambda q: (weight(q), q)):
            c = self.coeffs[p]
            name = "s" + ("".join(str(x) for x in p) if p else "0")
            bits.append(f"{c}*{name}")
        return " + ".join(bits)


def sigma(ctx: Grassmannian, parts: Iterable[int] | int) -> SchubertClass:
    """The Schubert class for one partition (an int means a one-row partition)."""
    if isinstance(parts, int):
        parts = (parts,)
    return SchubertClass(ctx, {as_partition(parts): 1})


def integrate(cls: SchubertClass) -> int:
    """Coefficient of the point class (the full-box partition)."""
    return cls.coeffs.get(cls.ctx.point_partition, 0)


def poincare_dual(ctx: Grassmannian, p) -> Partition:
    """Partition lam* with integrate(sigma_lam * sigma_lam*) = 1."""
    return box_complement(as_partition(p), ctx.rows, ctx.cols)
