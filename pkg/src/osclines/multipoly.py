"""Exact sparse multivariate polynomials over the integers.

Carrier for Chern-root expansions: coefficients are Python ints (never
overflow), terms are exponent-tuple keyed, and zero coefficients are never
stored.  Only ring operations are provided; no division.
"""

from __future__ import annotations


class MultiPoly:
    """Polynomial in a fixed number of variables with integer coefficients."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: dict[tuple[int, ...], int] | None = None):
        self.nvars = nvars
        clean = {}
        if terms:
            for expo, coef in terms.items():
                if coef:
                    if len(expo) != nvars:
                        raise ValueError(f"exponent {expo} has wrong arity")
                    clean[tuple(expo)] = coef
        self.terms = clean

    @classmethod
    def zero(cls, nvars: int) -> "MultiPoly":
        return cls(nvars)

    @classmethod
    def constant(cls, c: int, nvars: int) -> "MultiPoly":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def one(cls, nvars: int) -> "MultiPoly":
        return cls.constant(1, nvars)

    @classmethod
    def variable(cls, i: int, nvars: int) -> "MultiPoly":
        expo = [0] * nvars
        expo[i] = 1
        return cls(nvars, {tuple(expo): 1})

    def is_zero(self) -> bool:
        return not self.terms

    def _check(self, other: "MultiPoly") -> None:
        if self.nvars != other.nvars:
            raise ValueError("variable count mismatch")

    def __add__(self, other):
        if isinstance(other, int):
            other = MultiPoly.constant(other, self.nvars)
        self._check(other)
        out = dict(self.terms)
        for expo, coef in other.terms.items():
            out[expo] = out.get(expo, 0) + coef
        return MultiPoly(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = MultiPoly.constant(other, self.nvars)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return MultiPoly(self.nvars, {e: other * c for e, c in self.terms.items()})
        self._check(other)
        out: dict[tuple[int, ...], int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                out[key] = out.get(key, 0) + c1 * c2
        return MultiPoly(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        out = MultiPoly.one(self.nvars)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = MultiPoly.constant(other, self.nvars)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def total_degree(self) -> int:
        if not self.terms:
            return 0
        return max(sum(e) for e in self.terms)

    def graded_part(self, k: int) -> "MultiPoly":
        return MultiPoly(self.nvars, {e: c for e, c in self.terms.items() if sum(e) == k})

    def swap_vars(self, i: int, j: int) -> "MultiPoly":
        out = {}
        for expo, coef in self.terms.items():
            e = list(expo)
            e[i], e[j] = e[j], e[i]
            out[tuple(e)] = coef
        return MultiPoly(self.nvars, out)

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for expo in sorted(self.terms, reverse=True):
            coef = self.terms[expo]
            mono = "*".join(f"x{i}^{e}" for i, e in enumerate(expo) if e)
            bits.append(f"{coef}" + (f"*{mono}" if mono else ""))
        return " + ".join(bits)


def decompose_symmetric_pair(poly: MultiPoly) -> dict[tuple[int, int], int]:
    """Rewrite a symmetric 2-variable polynomial in e1 = x0+x1, e2 = x0*x1.

    Returns {(i, j): c} meaning sum of c * e1^i * e2^j.  Classic leading-term
    subtraction; raises if the input is not symmetric.
    """
    if poly.nvars != 2:
        raise ValueError("expected a 2-variable polynomial")
    if poly != poly.swap_vars(0, 1):
        raise ValueError("polynomial is not symmetric")
    e1 = MultiPoly(2, {(1, 0): 1, (0, 1): 1})
    e2 = MultiPoly(2, {(1, 1): 1})
    out: dict[tuple[int, int], int] = {}
    rest = poly
    while not rest.is_zero():
        (p, q) = max(rest.terms)  # lex-leading; symmetry gives p >= q
        coef = rest.terms[(p, q)]
        out[(p - q, q)] = out.get((p - q, q), 0) + coef
        rest = rest - coef * (e1 ** (p - q)) * (e2 ** q)
    return {k: v for k, v in out.items() if v}
