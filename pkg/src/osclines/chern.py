"""Formal Chern-class calculus: bundles as rank plus graded total Chern class.

Works over any commutative graded ring whose elements support +, -, * and
int scaling plus a graded_part(k) method; in practice the Schubert ring,
the incidence ring, or MultiPoly (for generic-root checks).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .grassmann import Grassmannian, sigma
from .multipoly import MultiPoly, decompose_symmetric_pair


class RankError(ValueError):
    """Operation not defined for bundles of this rank."""


@dataclass(frozen=True)
class FormalBundle:
    """rank plus Chern classes (c_0, c_1, ..., c_k), c_i homogeneous of degree i.

    c_0 is the ring unit.  The stored sequence may be shorter than rank+1
    (missing entries are zero) and is never longer than the ambient ring
    supports nonzero classes for.
    """

    rank: int
    chern: tuple

    def __post_init__(self):
        if self.rank < 0:
            raise RankError("negative rank")
        if not self.chern:
            raise ValueError("need at least c_0")

    @property
    def ring_one(self):
        return self.chern[0]

    @property
    def ring_zero(self):
        return 0 * self.chern[0]

    def chern_class(self, i: int):
        if 0 <= i < len(self.chern):
            return self.chern[i]
        return self.ring_zero

    def total(self):
        out = self.chern[0]
        for c in self.chern[1:]:
            out = out + c
        return out


def _split_graded(x, one, up_to: int) -> tuple:
    """Split a ring element into homogeneous pieces 0..up_to, trimming zeros."""
    zero = 0 * one
    parts = [x.graded_part(k) for k in range(up_to + 1)]
    while len(parts) > 1 and parts[-1] == zero:
        parts.pop()
    return tuple(parts)


def bundle_from_total(rank: int, total, one, max_degree: int) -> FormalBundle:
    return FormalBundle(rank, _split_graded(total, one, max_degree))


def _ambient_dim(one) -> int | None:
    ctx = getattr(one, "ctx", None)
    return getattr(ctx, "dim", None)


def trivial_bundle(one, rank: int) -> FormalBundle:
    return FormalBundle(rank, (one,))


def line_bundle_over(one, c1) -> FormalBundle:
    zero = 0 * one
    if c1 == zero:
        return FormalBundle(1, (one,))
    return FormalBundle(1, (one, c1))


def tautological_sub_dual(gr: Grassmannian) -> FormalBundle:
    """Dual of the rank-2 tautological subbundle: c = 1 + s1 + s11."""
    if gr.m != 2:
        raise RankError("only the rank-2 (line Grassmannian) case is supported")
    return FormalBundle(2, (gr.one(), sigma(gr, (1,)), sigma(gr, (1, 1))))


def dual_bundle(b: FormalBundle) -> FormalBundle:
    signed = tuple(c if i % 2 == 0 else -1 * c for i, c in enumerate(b.chern))
    return FormalBundle(b.rank, signed)


def whitney_quotient(total: FormalBundle, sub: FormalBundle, max_degree: int | None = None) -> FormalBundle:
    """Bundle F with c(sub) * c(F) = c(total), rank = rank difference.

    The quotient series is computed degree by degree up to the ambient ring
    dimension (or `max_degree`), so the Whitney identity holds on the nose.
    """
    if sub.rank > total.rank:
        raise RankError(f"subbundle rank {sub.rank} exceeds total rank {total.rank}")
    one = total.ring_one
    if max_degree is None:
        max_degree = _ambient_dim(one)
        if max_degree is None:
            raise ValueError("ring has no dimension bound; pass max_degree")
    zero = 0 * one
    q = [one] + [zero] * max_degree
    for k in range(1, max_degree + 1):
        acc = total.chern_class(k)
        for j in range(1, k + 1):
            sj = sub.chern_class(j)
            if sj == zero:
                continue
            acc = acc - sj * q[k - j]
        q[k] = acc
    while len(q) > 1 and q[-1] == zero:
        q.pop()
    return FormalBundle(total.rank - sub.rank, tuple(q))


def tensor_line(b: FormalBundle, line_c1) -> FormalBundle:
    """Chern classes of b tensor a line bundle with first Chern class line_c1."""
    one = b.ring_one
    zero = 0 * one
    r = b.rank
    out = [zero] * (r + 1)
    out[0] = one
    mpow = [one]
    for _ in range(r):
        mpow.append(mpow[-1] * line_c1)
    for k in range(1, r + 1):
        acc = zero
        for j in range(0, k + 1):
            w = comb(r - j, k - j)
            if w == 0:
                continue
            cj = b.chern_class(j)
            if cj == zero:
                continue
            acc = acc + w * (cj * mpow[k - j])
        out[k] = acc
    while len(out) > 1 and out[-1] == zero:
        out.pop()
    return FormalBundle(r, tuple(out))


def sym_power_rank2(b: FormalBundle, d: int) -> FormalBundle:
    """Symmetric power of a rank-2 bundle.

    With Chern roots a, b the power has roots i*a + (d-i)*b, i = 0..d.  Roots
    pair off as (i, d-i) into quadratic factors expressed directly in c_1 and
    c_2: (1 + mu_i)(1 + mu_{d-i}) = 1 + d c_1 + i(d-i) c_1^2 + (d-2i)^2 c_2,
    with an extra linear factor 1 + (d/2) c_1 when d is even.
    """
    if b.rank != 2:
        raise RankError("symmetric powers are implemented for rank 2 only")
    if d < 1:
        raise ValueError("power must be >= 1")
    one = b.ring_one
    c1 = b.chern_class(1)
    c2 = b.chern_class(2)
    c1sq = c1 * c1
    total = one
    for i in range(0, (d + 1) // 2):
        factor = one + d * c1 + (i * (d - i)) * c1sq + ((d - 2 * i) ** 2) * c2
        total = total * factor
    if d % 2 == 0:
        total = total * (one + (d // 2) * c1)
    rank = d + 1
    ambient = _ambient_dim(one)
    cutoff = rank if ambient is None else min(rank, ambient)
    return bundle_from_total(rank, total, one, cutoff)


def sym_power_rank2_via_roots(b: FormalBundle, d: int) -> FormalBundle:
    """Independent oracle: expand the root product in two formal variables,
    rewrite each elementary symmetric piece in e1, e2, then substitute the
    bundle's c_1, c_2."""
    if b.rank != 2:
        raise RankError("symmetric powers are implemented for rank 2 only")
    if d < 1:
        raise ValueError("power must be >= 1")
    a = MultiPoly.variable(0, 2)
    bb = MultiPoly.variable(1, 2)
    # coefficients of t^k in prod_i (1 + (i*a + (d-i)*b) t)
    coeffs = [MultiPoly.one(2)] + [MultiPoly.zero(2)] * (d + 1)
    for i in range(0, d + 1):
        root = i * a + (d - i) * bb
        for k in range(d + 1, 0, -1):
            coeffs[k] = coeffs[k] + root * coeffs[k - 1]

    one = b.ring_one
    zero = 0 * one
    c1 = b.chern_class(1)
    c2 = b.chern_class(2)
    out = [one]
    for k in range(1, d + 2):
        table = decompose_symmetric_pair(coeffs[k])
        acc = zero
        for (i, j), coef in table.items():
            term = coef * one
            for _ in range(i):
                term = term * c1
            for _ in range(j):
                term = term * c2
            acc = acc + term
        out.append(acc)
    while len(out) > 1 and out[-1] == zero:
        out.pop()
    return FormalBundle(d + 1, tuple(out))


def top_chern(b: FormalBundle):
    """c_rank; the degree-0 unit for a rank-0 bundle."""
    return b.chern_class(b.rank)
