import random

from osclines.lr import lr_coefficient, schur_polynomial, semistandard_tableaux
from osclines.multipoly import MultiPoly
from osclines.partitions import partitions_in_box


def test_pieri_one_box():
    assert lr_coefficient((1,), (1,), (2,)) == 1
    assert lr_coefficient((1,), (1,), (1, 1)) == 1


def test_classical_multiplicity_two():
    assert lr_coefficient((2, 1), (2, 1), (3, 2, 1)) == 2


def test_weight_mismatch_is_zero():
    assert lr_coefficient((1,), (1,), (3,)) == 0
    assert lr_coefficient((2,), (1,), (2,)) == 0


def test_containment_required():
    assert lr_coefficient((3,), (1,), (2, 2)) == 0


def test_empty_partitions():
    assert lr_coefficient((), (), ()) == 1
    assert lr_coefficient((2, 1), (), (2, 1)) == 1
    assert lr_coefficient((), (2, 1), (2, 1)) == 1


def all_partitions_of(wt):
    return list(partitions_in_box(wt, wt, wt)) if wt else [()]


def test_symmetry_random_triples():
    rng = random.Random(3)
    pool = [p for w in range(7) for p in all_partitions_of(w)]
    for _ in range(300):
        lam, mu = rng.choice(pool), rng.choice(pool)
        wt = sum(lam) + sum(mu)
        if wt > 12:
            continue
        for nu in all_partitions_of(wt):
            assert lr_coefficient(lam, mu, nu) == lr_coefficient(mu, lam, nu)


def test_ssyt_count_hook():
    # shape (2,1) with entries <= 3: 8 tableaux
    assert len(list(semistandard_tableaux((2, 1), 3))) == 8


def test_schur_product_expansion_oracle():
    # s_lam * s_mu = sum_nu c(lam,mu;nu) s_nu as honest polynomials
    for nvars in (2, 3, 4):
        shapes = [p for w in range(5) for p in all_partitions_of(w)]
        for lam in shapes:
            for mu in shapes:
                wt = sum(lam) + sum(mu)
                lhs = schur_polynomial(lam, nvars) * schur_polynomial(mu, nvars)
                rhs = MultiPoly.zero(nvars)
                for nu in all_partitions_of(wt):
                    c = lr_coefficient(lam, mu, nu)
                    if c:
                        rhs = rhs + c * schur_polynomial(nu, nvars)
                assert lhs == rhs, (nvars, lam, mu)
