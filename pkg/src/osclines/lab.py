"""Finite linear-algebra verification of pointwise positivity claims.

Everything here is sampled evidence, not proof: ranks are computed over a
prime field (fast, and a lower bound for the rational rank), deficiencies
are re-verified exactly, and every report records the seed that reproduces
it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

import numpy as np

from .modp import (
    DEFAULT_PRIME,
    nullspace_exact,
    nullspace_mod_p,
    rank_exact,
    rank_mod_p,
)
from .polyspace import (
    contact_matrix,
    expected_mult_kernel_dim,
    mult_map_matrix,
    poly_space,
    wedge2_koszul_matrix,
    wedge_pairs,
)


class GeometryError(ValueError):
    """Degenerate geometric input (e.g. the two points do not span a line)."""


class BudgetError(ValueError):
    """Requested computation exceeds the configured matrix budget."""


# ---------------------------------------------------------------------------
# contact systems
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ContactSystem:
    """Conditions for a line to meet a degree-d hypersurface to order r.

    The line is spanned by the marked point and a second point; the rows of
    the condition matrix are the first r Taylor coefficients of a form
    restricted to the line, each linear in the form's coefficients.
    """

    n: int
    d: int
    r: int
    point: tuple[int, ...]
    second: tuple[int, ...]

    def __post_init__(self):
        if not 1 <= self.r <= self.d + 1:
            raise ValueError(f"need 1 <= r <= d+1, got r={self.r}")
        if len(self.point) != self.n + 1 or len(self.second) != self.n + 1:
            raise GeometryError("points need n+1 coordinates")
        if rank_exact([list(self.point), list(self.second)]) != 2:
            raise GeometryError("the two points do not span a line")

    def matrix(self) -> list[list[int]]:
        return contact_matrix(self.n, self.d, self.r, self.point, self.second)


def contact_rank(cs: ContactSystem, prime: int = DEFAULT_PRIME) -> int:
    """Rank of the contact conditions; the fiber of forms satisfying them
    has dimension dim S^d minus this rank."""
    mat = cs.matrix()
    # entries are exact and can exceed int64; reduce before conversion
    reduced = np.array([[v % prime for v in row] for row in mat], dtype=np.int64)
    r = rank_mod_p(reduced, prime)
    if r < cs.r:
        r = rank_exact(mat)
    return r


def random_contact_system(
    n: int, d: int, r: int, rng: np.random.Generator, prime: int = DEFAULT_PRIME
) -> ContactSystem:
    """Contact system at a random point with a random line through it."""
    while True:
        x = tuple(int(v) for v in rng.integers(0, prime, size=n + 1))
        y = tuple(int(v) for v in rng.integers(0, prime, size=n + 1))
        if rank_mod_p(np.array([x, y], dtype=np.int64), prime) == 2:
            return ContactSystem(n, d, r, x, y)


# ---------------------------------------------------------------------------
# global generation on projective space
# ---------------------------------------------------------------------------

@dataclass
class GlobalGenReport:
    n: int
    d: int
    prime: int
    seed: int
    num_points: int
    fiber_dim: int
    kernel_dim: int
    expected_kernel_dim: int
    min_rank: int
    deficient_points: list[tuple[int, ...]] = field(default_factory=list)
    passed: bool = False


def _random_point(rng: np.random.Generator, n: int, prime: int) -> tuple[int, ...]:
    while True:
        pt = tuple(int(v) for v in rng.integers(-50, 51, size=n + 1))
        if any(v % prime for v in pt):
            return pt


def check_gg_pn(
    n: int,
    d: int,
    num_points: int = 100,
    prime: int = DEFAULT_PRIME,
    seed: int = 0,
) -> GlobalGenReport:
    """Sampled global generation of the twisted evaluation-kernel bundle.

    Sections are the kernel of multiplication S^d x S^1 -> S^{d+1}; at each
    sample point their values must fill the fiber of forms vanishing there,
    which has dimension dim S^d - 1.  A rank drop mod p is re-verified over
    the rationals before it counts as a failure.
    """
    space = poly_space(n, d)
    fiber_dim = space.dim - 1
    kernel = nullspace_mod_p(mult_map_matrix(n, d), prime)
    kernel_dim = kernel.shape[0]
    expected = expected_mult_kernel_dim(n, d)

    report = GlobalGenReport(
        n=n, d=d, prime=prime, seed=seed, num_points=num_points,
        fiber_dim=fiber_dim, kernel_dim=kernel_dim, expected_kernel_dim=expected,
        min_rank=fiber_dim,
    )
    rng = np.random.default_rng(seed)
    nvars = n + 1
    stacked = kernel.reshape(kernel_dim, space.dim, nvars)
    exact_kernel = None
    min_rank = fiber_dim if num_points else 0
    for _ in range(num_points):
        pt = _random_point(rng, n, prime)
        xv = np.array([v % prime for v in pt], dtype=np.int64)
        evals = np.tensordot(stacked, xv, axes=([2], [0])) % prime
        r = rank_mod_p(evals, prime)
        if r < fiber_dim:
            if exact_kernel is None:
                exact_kernel = nullspace_exact(mult_map_matrix(n, d))
            r = _exact_eval_rank(exact_kernel, space, nvars, pt)
            if r < fiber_dim:
                report.deficient_points.append(pt)
        min_rank = min(min_rank, r)
    report.min_rank = min_rank
    report.passed = not report.deficient_points and min_rank == fiber_dim and kernel_dim == expected
    return report


def _exact_eval_rank(exact_kernel, space, nvars, pt) -> int:
    rows = []
    for vec in exact_kernel:
        row = []
        for ai in range(space.dim):
            v = Fraction(0)
            for i in range(nvars):
                v += vec[ai * nvars + i] * pt[i]
            row.append(v)
        den = _common_den(row)
        rows.append([int(x * den) for x in row])
    return rank_exact(rows)


def _common_den(row) -> int:
    den = 1
    for x in row:
        den = den * x.denominator // _gcd(den, x.denominator)
    return den


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


# ---------------------------------------------------------------------------
# global generation on the Grassmannian of lines
# ---------------------------------------------------------------------------

@dataclass
class GrassGenReport:
    n: int
    prime: int
    seed: int
    num_lines: int
    num_translates: int
    fiber_dim: int
    ranks: list[int] = field(default_factory=list)
    passed: bool = False


def _cramer_section(u: np.ndarray, v: np.ndarray, nvars: int, prime: int) -> np.ndarray:
    """Linear form vanishing on the line through u, v, supported on the first
    three coordinates and scaled by the (1,2) Pluecker coordinate.

    Solving u.c = v.c = 0 for c = (c0, c1, c2, 0, ..., 0) with c0 equal to
    the (1,2) minor is Cramer's rule; the Laplace identity makes the result
    polynomial in the line's Pluecker coordinates.
    """
    p12 = (u[1] * v[2] - u[2] * v[1]) % prime
    p02 = (u[0] * v[2] - u[2] * v[0]) % prime
    p01 = (u[0] * v[1] - u[1] * v[0]) % prime
    c = np.zeros(nvars, dtype=np.int64)
    c[0] = p12
    c[1] = (-p02) % prime
    c[2] = p01
    return c


def check_gg_grassmann(
    n: int,
    num_lines: int = 50,
    num_translates: int = 5,
    prime: int = DEFAULT_PRIME,
    seed: int = 0,
) -> GrassGenReport:
    """Sampled global generation of the twisted ideal-of-the-line bundle.

    One explicit polynomial section comes from clearing the Cramer's-rule
    solution by a Pluecker coordinate; random invertible substitutions give
    its translates.  At each sampled line the translate values must span the
    space of linear forms vanishing on the line (dimension n-1).
    """
    if n < 3:
        raise ValueError("need n >= 3 (the fiber is trivial below that)")
    nvars = n + 1
    fiber_dim = n - 1
    report = GrassGenReport(
        n=n, prime=prime, seed=seed, num_lines=num_lines,
        num_translates=num_translates, fiber_dim=fiber_dim,
    )
    rng = np.random.default_rng(seed)
    passed = True
    for _ in range(num_lines):
        u, v = _random_line(rng, nvars, prime)
        vectors = []
        for _ in range(num_translates):
            g = _random_invertible(rng, nvars, prime)
            gu = g @ u % prime
            gv = g @ v % prime
            c = _cramer_section(gu, gv, nvars, prime)
            w = g.T @ c % prime
            # value of a translated section at the sampled line: it must
            # vanish on the line
            assert int(w @ u % prime) == 0 and int(w @ v % prime) == 0
            vectors.append(w)
        r = rank_mod_p(np.array(vectors, dtype=np.int64), prime)
        report.ranks.append(r)
        if r != fiber_dim:
            passed = False
    report.passed = passed
    return report


def _random_line(rng: np.random.Generator, nvars: int, prime: int):
    """Two spanning points whose (1,2) Pluecker coordinate is a unit."""
    while True:
        u = rng.integers(0, prime, size=nvars).astype(np.int64)
        v = rng.integers(0, prime, size=nvars).astype(np.int64)
        p12 = int(u[1] * v[2] - u[2] * v[1]) % prime
        if p12 != 0 and rank_mod_p(np.stack([u, v]), prime) == 2:
            return u, v


def _random_invertible(rng: np.random.Generator, nvars: int, prime: int) -> np.ndarray:
    while True:
        g = rng.integers(0, prime, size=(nvars, nvars)).astype(np.int64)
        if rank_mod_p(g.copy(), prime) == nvars:
            return g


# ---------------------------------------------------------------------------
# second exterior power: image rank exploration
# ---------------------------------------------------------------------------

@dataclass
class Wedge2Report:
    n: int
    d: int
    prime: int
    seed: int
    point: tuple[int, ...]
    fiber_dim: int
    kernel_dim: int
    image_rank: int
    witness_consistent: bool
    generated: bool


def wedge2_image_report(
    n: int,
    d: int,
    prime: int = DEFAULT_PRIME,
    seed: int = 0,
    num_witnesses: int = 8,
    max_entries: int = 2_000_000,
) -> Wedge2Report:
    """Rank of the fiber image of the sections of the second exterior power.

    Sections are the kernel of the Koszul map; their values at a point are
    wedges inside the fiber of pairs of forms vanishing there (dimension
    C(N-1, 2)).  The rank is reported, never asserted.  Products of pairs of
    single-power sections give known image elements; the report checks those
    witnesses land in the computed image span.
    """
    koszul = wedge2_koszul_matrix(n, d)
    if koszul.size > max_entries:
        raise BudgetError(
            f"Koszul matrix has {koszul.size} entries, over the {max_entries} budget"
        )
    space = poly_space(n, d)
    big_n = space.dim
    fiber_dim = comb(big_n - 1, 2)
    kernel = nullspace_mod_p(koszul, prime)
    kernel_dim = kernel.shape[0]

    rng = np.random.default_rng(seed)
    point = _random_point(rng, n, prime)
    xv = np.array([v % prime for v in point], dtype=np.int64)

    # anchor monomial: pure power of the largest coordinate, a unit at the point
    i0 = int(np.argmax(np.abs(np.array(point))))
    anchor_expo = tuple(d if i == i0 else 0 for i in range(n + 1))
    anchor = space.monomials.index(anchor_expo)
    mono_vals = np.array([v % prime for v in space.eval_monomials(point)], dtype=np.int64)
    t = (mono_vals * pow(int(mono_vals[anchor]), prime - 2, prime)) % prime

    pairs = wedge_pairs(big_n)
    nvars = n + 1
    keep = [k for k, (a, b) in enumerate(pairs) if a != anchor and b != anchor]
    image_rows = []
    for vec in kernel:
        coeffs = vec.reshape(len(pairs), nvars) @ xv % prime
        w = np.zeros((big_n, big_n), dtype=np.int64)
        for (a, b), c in zip(pairs, coeffs):
            w[a, b] = c
        w = (w - w.T) % prime
        # kernel elements evaluate inside the fiber: anchor cross-terms cancel
        assert not (w @ t % prime).any()
        image_rows.append(np.array([w[pairs[k][0], pairs[k][1]] for k in keep], dtype=np.int64))
    image = np.array(image_rows, dtype=np.int64) if image_rows else np.zeros((0, len(keep)), dtype=np.int64)
    image_rank = rank_mod_p(image.copy(), prime)

    witness_rows = [_wedge_witness(rng, space, point, anchor, keep, pairs, prime)
                    for _ in range(num_witnesses)]
    stacked = np.vstack([image] + [w[None, :] for w in witness_rows]) if witness_rows else image
    witness_consistent = rank_mod_p(stacked.copy(), prime) == image_rank

    return Wedge2Report(
        n=n, d=d, prime=prime, seed=seed, point=point,
        fiber_dim=fiber_dim, kernel_dim=kernel_dim, image_rank=image_rank,
        witness_consistent=witness_consistent, generated=image_rank == fiber_dim,
    )


def _wedge_witness(rng, space, point, anchor, keep, pairs, prime) -> np.ndarray:
    """Coordinates of (P*A1) wedge (P*A2) with A_i vanishing at the point."""
    n, d = space.n, space.d
    lower = poly_space(n, d - 1)
    index = space.index()
    i0 = int(np.argmax(np.abs(np.array(point))))

    def vanishing_linear():
        # random linear form minus its value at the point, cleared by x_{i0}
        a = rng.integers(0, prime, size=n + 1).astype(np.int64)
        val = int(a @ np.array([v % prime for v in point], dtype=np.int64)) % prime
        a = a * int(point[i0] % prime) % prime
        a[i0] = (a[i0] - val) % prime
        return a

    pcoef = rng.integers(0, prime, size=lower.dim).astype(np.int64)

    def times_linear(linear):
        out = np.zeros(space.dim, dtype=np.int64)
        for mi, expo in enumerate(lower.monomials):
            if pcoef[mi] == 0:
                continue
            for i in range(n + 1):
                if linear[i] == 0:
                    continue
                up = list(expo)
                up[i] += 1
                out[index[tuple(up)]] = (out[index[tuple(up)]] + pcoef[mi] * linear[i]) % prime
        return out

    f1 = times_linear(vanishing_linear())
    f2 = times_linear(vanishing_linear())
    wedge = (np.outer(f1, f2) - np.outer(f2, f1)) % prime
    return np.array([wedge[pairs[k][0], pairs[k][1]] for k in keep], dtype=np.int64)


# ---------------------------------------------------------------------------
# bracket pairing codimension check
# ---------------------------------------------------------------------------

@dataclass
class BracketCheckReport:
    dim_w: int
    dim_k: int
    trials: int
    prime: int
    seed: int
    worst_codim: int
    violations: list[int] = field(default_factory=list)  # offending trial seeds
    passed: bool = False


def bracket_pairing_check(
    dim_w: int,
    dim_k: int,
    trials: int,
    prime: int = DEFAULT_PRIME,
    seed: int = 0,
) -> BracketCheckReport:
    """Random check that the antisymmetrized contraction pairing on a
    hyperplane of W tensor K* has image of codimension at most 2 in W.

    Per trial: a random hyperplane H of W (x) K*, a random nonzero linear map
    f: H -> K, and the span of <A, f(B)> - <B, f(A)> over basis pairs of H.
    A codimension above 2 over the prime field is re-verified exactly before
    it counts as a violation; violations record the trial seed.
    """
    if dim_w < 1 or dim_k < 1:
        raise ValueError("need dim_w >= 1 and dim_k >= 1")
    report = BracketCheckReport(
        dim_w=dim_w, dim_k=dim_k, trials=trials, prime=prime, seed=seed,
        worst_codim=0,
    )
    worst = 0
    for trial in range(trials):
        trial_seed = seed + trial
        codim = _bracket_trial_codim(dim_w, dim_k, prime, trial_seed)
        if codim > 2:
            codim = _bracket_trial_codim(dim_w, dim_k, prime, trial_seed, exact=True)
            if codim > 2:
                report.violations.append(trial_seed)
        worst = max(worst, codim)
    report.worst_codim = worst
    report.passed = not report.violations
    return report


def _bracket_instance(dim_w: int, dim_k: int, prime: int, trial_seed: int):
    """Hyperplane basis (as w x k matrices) and the map to K, from one seed."""
    rng = np.random.default_rng(trial_seed)
    wk = dim_w * dim_k
    while True:
        functional = rng.integers(0, prime, size=wk).astype(np.int64)
        if functional.any():
            break
    j0 = int(np.flatnonzero(functional)[0])
    inv = pow(int(functional[j0]), prime - 2, prime)
    basis = []
    for j in range(wk):
        if j == j0:
            continue
        vec = np.zeros(wk, dtype=np.int64)
        vec[j] = 1
        vec[j0] = (-int(functional[j]) * inv) % prime
        basis.append(vec.reshape(dim_w, dim_k))
    basis = np.array(basis, dtype=np.int64)  # (m, w, k)
    while True:
        phi = rng.integers(0, prime, size=(wk - 1, dim_k)).astype(np.int64)
        if phi.any() or wk == 1:
            break
    return basis, phi


def _bracket_trial_codim(
    dim_w: int, dim_k: int, prime: int, trial_seed: int, exact: bool = False
) -> int:
    basis, phi = _bracket_instance(dim_w, dim_k, prime, trial_seed)
    m = basis.shape[0]
    if m < 2:
        return dim_w
    # t[i, j] = basis[i] @ phi[j]
    t = np.einsum("iwk,jk->ijw", basis, phi)
    v = t - t.transpose(1, 0, 2)
    rows = v[np.triu_indices(m, k=1)]
    if exact:
        rank = rank_exact(rows)
    else:
        rank = rank_mod_p(rows % prime, prime)
    return dim_w - rank
