"""Cohomology of the point-line incidence variety in P^n x G(1,n).

The incidence variety is the projectivization of the rank-2 tautological
subbundle over the Grassmannian of lines, so its ring is generated over the
Schubert ring by the hyperplane pullback H subject to

    H^2 = s1*H - s11.

Every class has the normal form A + B*H with A, B Schubert classes; the
Pluecker pullback L acts as multiplication by s1.  Fiber integration over
the line direction sends A + B*H to the Grassmannian integral of B.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .chern import (
    FormalBundle,
    dual_bundle,
    sym_power_rank2,
    tautological_sub_dual,
    tensor_line,
    top_chern,
    trivial_bundle,
    whitney_quotient,
)
from .grassmann import (
    ContextMismatchError,
    Grassmannian,
    SchubertClass,
    integrate,
    lines_in_projective_space,
    sigma,
)


class RangeError(ValueError):
    """Parameters outside the geometrically meaningful range."""


@dataclass(frozen=True)
class IncidenceVariety:
    """Pairs (point, line through it) in projective n-space."""

    n: int

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("need ambient dimension n >= 2")

    @property
    def grass(self) -> Grassmannian:
        return lines_in_projective_space(self.n)

    @property
    def dim(self) -> int:
        return 2 * self.n - 1

    def zero(self) -> "IncidenceClass":
        g = self.grass
        return IncidenceClass(self, g.zero(), g.zero())

    def one(self) -> "IncidenceClass":
        g = self.grass
        return IncidenceClass(self, g.one(), g.zero())


class IncidenceClass:
    """Normal form A + B*H over the underlying Schubert ring."""

    __slots__ = ("ctx", "a", "b")

    def __init__(self, ctx: IncidenceVariety, a: SchubertClass, b: SchubertClass):
        self.ctx = ctx
        self.a = a
        self.b = b

    def _check(self, other: "IncidenceClass") -> None:
        if self.ctx != other.ctx:
            raise ContextMismatchError(f"{self.ctx} vs {other.ctx}")

    def is_zero(self) -> bool:
        return self.a.is_zero() and self.b.is_zero()

    def __add__(self, other):
        if isinstance(other, int):
            other = other * self.ctx.one()
        self._check(other)
        return IncidenceClass(self.ctx, self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __neg__(self):
        return IncidenceClass(self.ctx, -self.a, -self.b)

    def __sub__(self, other):
        if isinstance(other, int):
            other = other * self.ctx.one()
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return IncidenceClass(self.ctx, other * self.a, other * self.b)
        self._check(other)
        g = self.ctx.grass
        s1 = sigma(g, (1,))
        s11 = sigma(g, (1, 1))
        bb = self.b * other.b
        a = self.a * other.a - s11 * bb
        b = self.a * other.b + other.a * self.b + s1 * bb
        return IncidenceClass(self.ctx, a, b)

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
        if not isinstance(other, IncidenceClass):
            return NotImplemented
        return self.ctx == other.ctx and self.a == other.a and self.b == other.b

    def __hash__(self):
        return hash((self.ctx, self.a, self.b))

    def graded_part(self, k: int) -> "IncidenceClass":
        a = self.a.graded_part(k)
        b = self.b.graded_part(k - 1) if k >= 1 else self.ctx.grass.zero()
        return IncidenceClass(self.ctx, a, b)

    def __repr__(self):
        return f"({self.a!r}) + ({self.b!r})*H"


def h_class(ctx: IncidenceVariety) -> IncidenceClass:
    """Hyperplane class pulled back from projective space."""
    g = ctx.grass
    return IncidenceClass(ctx, g.zero(), g.one())


def l_class(ctx: IncidenceVariety) -> IncidenceClass:
    """Pluecker polarization pulled back from the Grassmannian."""
    g = ctx.grass
    return IncidenceClass(ctx, sigma(g, (1,)), g.zero())


def from_grassmannian(ctx: IncidenceVariety, cls: SchubertClass) -> IncidenceClass:
    """Pullback along the line-direction projection."""
    if cls.ctx != ctx.grass:
        raise ContextMismatchError("class lives over a different Grassmannian")
    return IncidenceClass(ctx, cls, ctx.grass.zero())


def divisor(ctx: IncidenceVariety, h: int, l: int) -> IncidenceClass:
    """The divisor class h*H + l*L."""
    return h * h_class(ctx) + l * l_class(ctx)


def divisor_coefficients(cls: IncidenceClass) -> tuple[int, int]:
    """Extract (h, l) from a divisor class h*H + l*L; raises otherwise."""
    if cls != divisor(cls.ctx, cls.b.coefficient(()), cls.a.coefficient((1,))):
        raise ValueError("class is not of the form h*H + l*L")
    return cls.b.coefficient(()), cls.a.coefficient((1,))


def inc_integrate(cls: IncidenceClass) -> int:
    """Integral over the incidence variety: fiber-integrate H, then integrate."""
    return integrate(cls.b)


# ---------------------------------------------------------------------------
# bundles on the incidence variety
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def line_forms_bundle(ctx: IncidenceVariety, d: int) -> FormalBundle:
    """Pullback of the rank d+1 bundle of degree-d forms on the moving line."""
    if d < 0:
        raise ValueError("degree must be >= 0")
    g = ctx.grass
    if d == 0:
        return trivial_bundle(ctx.one(), 1)
    on_g = sym_power_rank2(tautological_sub_dual(g), d)
    chern = tuple(from_grassmannian(ctx, c) for c in on_g.chern)
    return FormalBundle(on_g.rank, chern)


def vanishing_subbundle(ctx: IncidenceVariety, d: int, r: int) -> FormalBundle:
    """Degree-d forms on the line vanishing to order >= r at the marked point.

    Multiplication by the r-th power of the linear form cutting the point
    identifies this with the degree d-r forms twisted by r*(L - H); rank
    d+1-r.  At r = d this is the rank-1 subbundle with first Chern class
    d*L - d*H.
    """
    if not 0 <= r <= d:
        raise RangeError(f"need 0 <= r <= d, got r={r}, d={d}")
    lower = line_forms_bundle(ctx, d - r)
    if r == 0:
        return lower
    twist = divisor(ctx, -r, r)  # r*(L - H)
    return tensor_line(lower, twist)


@lru_cache(maxsize=None)
def jet_bundle(ctx: IncidenceVariety, d: int, r: int) -> FormalBundle:
    """Rank-r quotient carrying the first r Taylor coefficients of a
    degree-d form along the line at the marked point."""
    if not 1 <= r <= d:
        raise RangeError(f"need 1 <= r <= d, got r={r}, d={d}")
    total = line_forms_bundle(ctx, d)
    sub = vanishing_subbundle(ctx, d, r)
    return whitney_quotient(total, sub)


def osculating_bundle(ctx: IncidenceVariety, d: int) -> FormalBundle:
    """Full-order quotient: the rank-d bundle whose sections vanish exactly
    where the line has contact of order d at the point."""
    return jet_bundle(ctx, d, d)


# ---------------------------------------------------------------------------
# canonical classes and the osculating locus
# ---------------------------------------------------------------------------

def canonical_class(ctx: IncidenceVariety) -> IncidenceClass:
    """Canonical divisor of the incidence variety: -2H - nL."""
    return divisor(ctx, -2, -ctx.n)


def canonical_class_via_bundles(ctx: IncidenceVariety) -> IncidenceClass:
    """Same class from the fibration over the Grassmannian.

    Pulls back the Grassmannian canonical class (computed from the tangent
    bundle Hom(S, Q) via the Whitney quotient Q) and adds the relative
    canonical class of the projectivized rank-2 subbundle, computed from the
    relative Euler sequence 0 -> O -> q*S(H) -> T_rel -> 0.
    """
    g = ctx.grass
    s_dual = tautological_sub_dual(g)
    s_bundle = dual_bundle(s_dual)
    quotient = whitney_quotient(trivial_bundle(g.one(), g.N), s_bundle)
    # c1(Hom(S, Q)) = rank(Q) c1(S*) + rank(S) c1(Q)
    c1_tangent = quotient.rank * s_dual.chern_class(1) + s_bundle.rank * quotient.chern_class(1)
    k_grass = from_grassmannian(ctx, -1 * c1_tangent)
    rel_tangent = tensor_line(
        FormalBundle(2, tuple(from_grassmannian(ctx, c) for c in s_bundle.chern)),
        h_class(ctx),
    )
    omega_rel = -1 * rel_tangent.chern_class(1)
    return k_grass + omega_rel


def osculating_canonical_class(ctx: IncidenceVariety, d: int) -> tuple[IncidenceClass, bool]:
    """Adjunction along the osculating locus: ambient canonical plus the
    determinant of the full-order quotient bundle.

    Returns the class together with a very-ampleness flag: a*H + b*L with
    a >= 1 and b >= 1 is declared very ample (H + L embeds the incidence
    variety and both generators are globally generated).
    """
    if d < 1:
        raise RangeError("degree must be >= 1")
    f = osculating_bundle(ctx, d)
    cls = canonical_class(ctx) + f.chern_class(1)
    h, l = divisor_coefficients(cls)
    return cls, (h >= 1 and l >= 1)


def osculating_class(ctx: IncidenceVariety, d: int) -> tuple[IncidenceClass, int]:
    """Class of the full-contact locus and its dimension 2n-1-d.

    The locus of (point, line) pairs with contact order d for a general
    degree-d hypersurface is cut out by a section of the full-order
    quotient, so its class is that bundle's top Chern class.  Empty for
    d > 2n-1.
    """
    if not 1 <= d <= ctx.dim:
        raise RangeError(f"full-contact locus needs 1 <= d <= {ctx.dim}, got {d}")
    cls = top_chern(osculating_bundle(ctx, d))
    return cls, ctx.dim - d


def osculating_degree(ctx: IncidenceVariety, d: int) -> int:
    """Degree under H of the maximal-order osculating locus.

    Uses contact order r = min(d, 2n-1): full order d while the locus is
    nonempty, and otherwise the deepest order that still cuts a nonempty
    locus (dimension 2n-1-r).  For plane curves this is r = 3 and the
    result is the classical flex count 3d(d-2).
    """
    if d < 1:
        raise RangeError("degree must be >= 1")
    r = min(d, ctx.dim)
    cls = top_chern(jet_bundle(ctx, d, r))
    return inc_integrate(cls * h_class(ctx) ** (ctx.dim - r))
