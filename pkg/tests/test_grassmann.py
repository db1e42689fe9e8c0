import random

import pytest

from osclines.grassmann import (
    ContextMismatchError,
    Grassmannian,
    SchubertClass,
    integrate,
    lines_in_projective_space,
    poincare_dual,
    sigma,
)
from osclines.partitions import all_partitions_in_box, weight

CATALAN = [1, 1, 2, 5, 14, 42, 132]


def test_context_validation():
    with pytest.raises(ValueError):
        Grassmannian(3, 3)
    g = lines_in_projective_space(3)
    assert (g.m, g.N, g.dim) == (2, 4, 4)


def test_pieri_one_box():
    g = Grassmannian(2, 4)
    s1 = sigma(g, 1)
    assert s1 * s1 == sigma(g, 2) + sigma(g, (1, 1))


def test_box_truncation():
    # (3,1) falls outside the 2x2 box, only (2,2) survives
    g = Grassmannian(2, 4)
    assert sigma(g, 1) * sigma(g, (2, 1)) == sigma(g, (2, 2))


def test_square_of_s11():
    g = Grassmannian(2, 4)
    assert sigma(g, (1, 1)) ** 2 == sigma(g, (2, 2))


def test_integrate_point_class():
    for n in (2, 3, 4):
        g = lines_in_projective_space(n)
        assert integrate(sigma(g, g.point_partition)) == 1


def test_integrate_two_lines_meeting_four():
    g = Grassmannian(2, 4)
    assert integrate(sigma(g, 1) ** 4) == 2


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_catalan_self_intersections(n):
    g = lines_in_projective_space(n)
    assert integrate(sigma(g, 1) ** (2 * (n - 1))) == CATALAN[n - 1]


def test_poincare_dual_examples():
    g = Grassmannian(2, 4)
    assert poincare_dual(g, ()) == (2, 2)
    assert poincare_dual(g, (1,)) == (2, 1)
    assert poincare_dual(g, (2,)) == (2,)


def test_duality_exhaustive_g25():
    g = Grassmannian(2, 5)
    box = list(all_partitions_in_box(g.rows, g.cols))
    for lam in box:
        for mu in box:
            if weight(lam) + weight(mu) != g.dim:
                continue
            expected = 1 if mu == poincare_dual(g, lam) else 0
            assert integrate(sigma(g, lam) * sigma(g, mu)) == expected


def test_degree_grading():
    g = Grassmannian(2, 6)
    a = sigma(g, (2, 1))
    b = sigma(g, (3,))
    assert (a * b).degrees() <= {6}


def test_ring_axioms_random():
    rng = random.Random(5)
    g = Grassmannian(2, 6)
    box = [p for p in all_partitions_in_box(g.rows, g.cols) if weight(p) <= 6]

    def random_class():
        coeffs = {rng.choice(box): rng.randint(-3, 3) for _ in range(3)}
        return SchubertClass(g, coeffs)

    for _ in range(60):
        a, b, c = random_class(), random_class(), random_class()
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c


def test_context_mismatch():
    a = sigma(Grassmannian(2, 4), 1)
    b = sigma(Grassmannian(2, 5), 1)
    with pytest.raises(ContextMismatchError):
        a * b


def test_scalar_and_zero():
    g = Grassmannian(2, 4)
    s = sigma(g, 1)
    assert 0 * s == g.zero()
    assert (s - s).is_zero()
    assert 2 * s + s == 3 * s
