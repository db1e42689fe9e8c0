"""End-user counts: lines on hypersurfaces, degree numerology, swept loci.

Line counts are finite exactly when the degree-d form bundle on the line
Grassmannian has rank equal to the Grassmannian dimension, i.e. d = 2n-3;
the count is the integral of its top Chern class.  An independent torus
fixed-point (Bott localization) sum over coordinate lines double-checks the
Schubert-ring route in exact rational arithmetic.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .chern import sym_power_rank2, tautological_sub_dual, top_chern
from .grassmann import integrate, lines_in_projective_space
from .incidence import IncidenceVariety, from_grassmannian, h_class, inc_integrate


class DegenerateWeightsError(ValueError):
    """A localization denominator or symmetric-power weight vanished."""


@dataclass(frozen=True)
class NumerologyReport:
    """Degree bookkeeping for the regime d = 2n-2-k."""

    n: int
    k: int
    d: int
    coeff_space_dim: int      # dimension of the space of degree-d forms
    family_codim: int         # n-k-1
    canonical_twist: int      # d-n-1 = n-3-k
    osculating_dim: int       # k+1
    fano_dim: int             # 2n-3-d = k-1
    in_range: bool            # 1 <= k <= n-5


@dataclass(frozen=True)
class FanoRegimeReport:
    """Returned by count_lines when the count is not finite."""

    n: int
    d: int
    fano_dim: int
    regime: str


@dataclass(frozen=True)
class WeightVector:
    """Distinct torus weights on the coordinates of (n+1)-space."""

    weights: tuple[int, ...]
    seed: int

    def __post_init__(self):
        if len(set(self.weights)) != len(self.weights):
            raise DegenerateWeightsError(f"weights not distinct: {self.weights}")


_PRIMES = (
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67,
    71, 73, 79, 83, 89, 97, 101, 103, 107, 109, 113, 127, 131, 137, 139, 149,
    151, 157, 163, 167, 173,
)


def torus_weights(n: int, seed: int = 0) -> WeightVector:
    """Deterministic weight vector: n+1 distinct small primes chosen by seed."""
    rng = random.Random(seed)
    return WeightVector(tuple(rng.sample(_PRIMES, n + 1)), seed)


def count_lines(n: int, d: int):
    """Number of lines on a general degree-d hypersurface in P^n.

    Finite exactly when d = 2n-3; otherwise returns a report naming the
    regime (positive-dimensional family of lines, or generically no lines).
    """
    if n < 2 or d < 1:
        raise ValueError("need n >= 2 and d >= 1")
    fano_dim = 2 * n - 3 - d
    if d != 2 * n - 3:
        regime = "positive-dimensional" if fano_dim > 0 else "generically-empty"
        return FanoRegimeReport(n, d, fano_dim, regime)
    g = lines_in_projective_space(n)
    forms = sym_power_rank2(tautological_sub_dual(g), d)
    return integrate(top_chern(forms))


def bott_count_lines(n: int, d: int, w: WeightVector) -> Fraction:
    """Torus fixed-point sum over coordinate lines; exact rational.

    Each pair i < j contributes the product of symmetric-power weights
    m*w_i + (d-m)*w_j divided by the tangent weights (w_l - w_i)(w_l - w_j).
    The sum is an integer equal to the Schubert-ring count.
    """
    if d + 1 != 2 * (n - 1):
        raise ValueError("finite count needs rank d+1 = 2(n-1), i.e. d = 2n-3")
    ws = w.weights
    if len(ws) != n + 1:
        raise ValueError(f"need {n + 1} weights, got {len(ws)}")
    total = Fraction(0)
    for i in range(n + 1):
        for j in range(i + 1, n + 1):
            num = 1
            for m in range(d + 1):
                factor = m * ws[i] + (d - m) * ws[j]
                if factor == 0:
                    raise DegenerateWeightsError(
                        f"symmetric-power weight vanished at pair ({i},{j}), m={m}"
                    )
                num *= factor
            den = 1
            for l in range(n + 1):
                if l in (i, j):
                    continue
                factor = (ws[l] - ws[i]) * (ws[l] - ws[j])
                if factor == 0:
                    raise DegenerateWeightsError(f"repeated weight at ({i},{j},{l})")
                den *= factor
            total += Fraction(num, den)
    return total


def count_lines_checked(n: int, d: int, seeds: tuple[int, ...] = (0, 1, 2)) -> int:
    """Dual-route count: Schubert engine and Bott oracle must agree."""
    engine = count_lines(n, d)
    if isinstance(engine, FanoRegimeReport):
        raise ValueError(f"count is not finite for (n, d) = ({n}, {d})")
    for seed in seeds:
        w = torus_weights(n, seed)
        value = bott_count_lines(n, d, w)
        if value.denominator != 1 or value != engine:
            raise ArithmeticError(
                f"oracle disagreement at seed {seed}: engine {engine}, oracle {value}"
            )
    return engine


def numerology(n: int, k: int) -> NumerologyReport:
    """All derived quantities of the regime d = 2n-2-k."""
    if n < 2 or k < 0:
        raise ValueError("need n >= 2 and k >= 0")
    d = 2 * n - 2 - k
    return NumerologyReport(
        n=n,
        k=k,
        d=d,
        coeff_space_dim=comb(n + d, d),
        family_codim=n - k - 1,
        canonical_twist=n - 3 - k,
        osculating_dim=k + 1,
        fano_dim=k - 1,
        in_range=1 <= k <= n - 5,
    )


def swept_locus_degree(n: int, d: int) -> int:
    """Degree in P^n of the cycle swept by the lines on a general degree-d
    hypersurface, counted with the multiplicity of lines through a general
    point of the sweep."""
    fano_dim = 2 * n - 3 - d
    if fano_dim < 0:
        raise ValueError(f"no lines to sweep: expected family dimension {fano_dim} < 0")
    ctx = IncidenceVariety(n)
    g = ctx.grass
    fano_class = top_chern(sym_power_rank2(tautological_sub_dual(g), d))
    swept = from_grassmannian(ctx, fano_class) * h_class(ctx) ** (2 * n - 2 - d)
    return inc_integrate(swept)
