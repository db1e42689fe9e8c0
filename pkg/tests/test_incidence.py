import random

import pytest

from osclines.chern import top_chern
from osclines.grassmann import SchubertClass, sigma
from osclines.incidence import (
    IncidenceClass,
    IncidenceVariety,
    RangeError,
    canonical_class,
    canonical_class_via_bundles,
    divisor,
    divisor_coefficients,
    from_grassmannian,
    h_class,
    inc_integrate,
    jet_bundle,
    l_class,
    line_forms_bundle,
    osculating_bundle,
    osculating_canonical_class,
    osculating_class,
    osculating_degree,
    vanishing_subbundle,
)
from osclines.partitions import all_partitions_in_box, weight

CATALAN = [1, 1, 2, 5, 14, 42]


def test_defining_relation():
    ctx = IncidenceVariety(3)
    g = ctx.grass
    h = h_class(ctx)
    assert h * h == IncidenceClass(ctx, -1 * sigma(g, (1, 1)), sigma(g, 1))


@pytest.mark.parametrize("n", [2, 3, 4])
def test_hyperplane_power_vanishes(n):
    ctx = IncidenceVariety(n)
    h = h_class(ctx)
    assert not (h ** n).is_zero()
    assert (h ** (n + 1)).is_zero()


@pytest.mark.parametrize("n", [2, 3, 4])
def test_pluecker_power_vanishes(n):
    ctx = IncidenceVariety(n)
    l = l_class(ctx)
    assert not (l ** (2 * n - 2)).is_zero()
    assert (l ** (2 * n - 1)).is_zero()


@pytest.mark.parametrize("n", [2, 3, 4])
def test_point_pair_normalization(n):
    # one line through two general points
    ctx = IncidenceVariety(n)
    assert inc_integrate(h_class(ctx) ** n * l_class(ctx) ** (n - 1)) == 1


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_fiber_integral_of_pluecker_powers(n):
    ctx = IncidenceVariety(n)
    cls = l_class(ctx) ** (2 * (n - 1)) * h_class(ctx)
    assert inc_integrate(cls) == CATALAN[n - 1]


def test_pullback_pushforward_vanishing():
    ctx = IncidenceVariety(3)
    g = ctx.grass
    point = sigma(g, g.point_partition)
    assert inc_integrate(from_grassmannian(ctx, point)) == 0
    assert inc_integrate(h_class(ctx) * from_grassmannian(ctx, point)) == 1


def test_ring_axioms_random():
    rng = random.Random(13)
    for n in (2, 3, 4):
        ctx = IncidenceVariety(n)
        g = ctx.grass
        box = list(all_partitions_in_box(g.rows, g.cols))

        def random_class():
            a = SchubertClass(g, {rng.choice(box): rng.randint(-2, 2) for _ in range(2)})
            b = SchubertClass(g, {rng.choice(box): rng.randint(-2, 2) for _ in range(2)})
            return IncidenceClass(ctx, a, b)

        for _ in range(25):
            x, y, z = random_class(), random_class(), random_class()
            assert x * y == y * x
            assert (x * y) * z == x * (y * z)
            assert x * (y + z) == x * y + x * z


def test_divisor_coefficients_roundtrip():
    ctx = IncidenceVariety(4)
    cls = divisor(ctx, 3, -7)
    assert divisor_coefficients(cls) == (3, -7)
    with pytest.raises(ValueError):
        divisor_coefficients(h_class(ctx) ** 2)


# ---------------------------------------------------------------------------
# bundles
# ---------------------------------------------------------------------------

def test_jet_quotient_first_chern_closed_form():
    for n in range(2, 9):
        ctx = IncidenceVariety(n)
        for d in range(1, 2 * (n - 1) + 1):
            f = osculating_bundle(ctx, d)
            assert f.rank == d
            expected = divisor(ctx, d, d * (d - 1) // 2)
            assert f.chern_class(1) == expected, (n, d)


def test_jet_quotient_degree_one():
    ctx = IncidenceVariety(3)
    f = osculating_bundle(ctx, 1)
    assert f.rank == 1
    assert f.chern_class(1) == h_class(ctx)


@pytest.mark.parametrize("d", range(1, 6))
def test_whitney_identity_for_osculating_quotient(d):
    ctx = IncidenceVariety(3)
    total = line_forms_bundle(ctx, d)
    sub = vanishing_subbundle(ctx, d, d)
    quot = osculating_bundle(ctx, d)
    lhs = sub.total() * quot.total()
    rhs = total.total()
    for k in range(ctx.dim + 1):
        assert lhs.graded_part(k) == rhs.graded_part(k), (d, k)


def test_vanishing_subbundle_ranks():
    ctx = IncidenceVariety(3)
    for d in range(1, 5):
        for r in range(0, d + 1):
            assert vanishing_subbundle(ctx, d, r).rank == d + 1 - r


# ---------------------------------------------------------------------------
# canonical classes
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("n", [2, 5])
def test_canonical_class_formula(n):
    ctx = IncidenceVariety(n)
    assert canonical_class(ctx) == divisor(ctx, -2, -n)


@pytest.mark.parametrize("n", range(2, 9))
def test_canonical_class_two_routes(n):
    ctx = IncidenceVariety(n)
    assert canonical_class(ctx) == canonical_class_via_bundles(ctx)


def test_osculating_canonical_examples():
    cls, ample = osculating_canonical_class(IncidenceVariety(2), 3)
    assert divisor_coefficients(cls) == (1, 1)
    assert ample

    cls, ample = osculating_canonical_class(IncidenceVariety(5), 3)
    assert divisor_coefficients(cls) == (1, -2)
    assert not ample


def test_osculating_canonical_in_range_always_very_ample():
    for n in range(6, 13):
        for k in range(1, n - 4):
            d = 2 * n - 2 - k
            cls, ample = osculating_canonical_class(IncidenceVariety(n), d)
            assert divisor_coefficients(cls) == (d - 2, d * (d - 1) // 2 - n)
            assert ample, (n, k)


# ---------------------------------------------------------------------------
# osculating locus
# ---------------------------------------------------------------------------

def test_osculating_class_dimensions():
    cls, dim = osculating_class(IncidenceVariety(2), 3)
    assert dim == 0
    _, dim = osculating_class(IncidenceVariety(3), 4)
    assert dim == 1
    for n in range(6, 13):
        for k in range(1, n - 4):
            d = 2 * n - 2 - k
            _, dim = osculating_class(IncidenceVariety(n), d)
            assert dim == k + 1


def test_osculating_class_matches_top_chern():
    ctx = IncidenceVariety(3)
    cls, _ = osculating_class(ctx, 4)
    assert cls == top_chern(osculating_bundle(ctx, 4))


def test_osculating_class_range_error():
    with pytest.raises(RangeError):
        osculating_class(IncidenceVariety(2), 4)
    with pytest.raises(RangeError):
        osculating_class(IncidenceVariety(3), 6)


@pytest.mark.parametrize("d", range(3, 9))
def test_plane_flex_degrees(d):
    assert osculating_degree(IncidenceVariety(2), d) == 3 * d * (d - 2)


def test_osculating_degree_full_order_case():
    # nine flexes of a plane cubic, via the full-order bundle
    assert osculating_degree(IncidenceVariety(2), 3) == 9
    ctx = IncidenceVariety(3)
    assert osculating_degree(ctx, 4) == inc_integrate(
        top_chern(osculating_bundle(ctx, 4)) * h_class(ctx)
    )


def test_jet_bundle_range_error():
    with pytest.raises(RangeError):
        jet_bundle(IncidenceVariety(3), 3, 4)
