import random
import time

import pytest

from confext.lemmas import (LemmaError, antisymmetric_rank_factor, check_bilinear, check_pair,
                            check_rankfactor, check_twisted, solve_bilinear_factor,
                            zero_solution_check)
from confext.polyring import L, M, Poly, substitute, D
from conftest import rand_frac, rand_poly_l

N_INSTANCES = 50


def rand_rank2(rng):
    p1, p2 = rand_poly_l(rng, 3), rand_poly_l(rng, 3)
    F = p1 * substitute(p2, D, M, L) - substitute(p1, D, M, L) * p2
    return F if F else rand_rank2(rng)


def bilinear_instance(rng):
    F = rand_rank2(rng)
    rf = antisymmetric_rank_factor(F)
    kind = rng.random()
    if kind < 0.7:
        # inside the solvable span
        while True:
            x, y = rand_frac(rng), rand_frac(rng)
            a = rf.P1 * x + rf.P2 * y
            if a.coeff((0, rf.i0, 0)) or a.coeff((0, rf.j0, 0)):
                return a, F
    a = rand_poly_l(rng, 3)
    return (a, F) if a.coeff((0, rf.i0, 0)) or a.coeff((0, rf.j0, 0)) else bilinear_instance(rng)


def test_oracle_equivalence_all_lemmas():
    rng = random.Random(7)
    start = time.perf_counter()
    for _ in range(N_INSTANCES):
        a, b = rand_poly_l(rng, 3), rand_poly_l(rng, 3, nonzero=rng.random() < 0.8)
        assert check_pair(a, b, 6)["agree"]
        r = rng.random()
        ta = rand_poly_l(rng, 2, nonzero=False) if r < 0.1 else rand_poly_l(rng, 2)
        tb = ta if r < 0.4 else rand_poly_l(rng, 2, nonzero=False)
        out = check_twisted(ta, tb, 6)
        assert out["agree"] and out["residuals_zero"]
        out = check_rankfactor(rand_rank2(rng) + (
            (L ** 4 * M ** 5 - L ** 5 * M ** 4) if rng.random() < 0.3 else Poly.zero()))
        assert out["agree"]
        a, F = bilinear_instance(rng)
        assert check_bilinear(a, F, 6)["agree"]
        vals = [rand_frac(rng) for _ in range(4)]
        res = zero_solution_check(*vals, 6)
        assert res["only_zero"] or vals[0] == vals[1]
    assert time.perf_counter() - start < 30


def test_rank_four_detected():
    F = (M - L) + (L ** 2 * M ** 3 - L ** 3 * M ** 2)
    rf = antisymmetric_rank_factor(F)
    assert rf.rank == 4
    assert not check_rankfactor(F)["plucker"]


def test_rankfactor_example():
    out = check_rankfactor(L * M ** 2 - L ** 2 * M)
    assert out["rank"] == 2 and out["expansion_ok"]


def test_bilinear_unsolvable():
    F = L * M ** 2 - L ** 2 * M
    assert solve_bilinear_factor(L + L ** 3, F) is None


def test_preconditions():
    with pytest.raises(LemmaError):
        check_pair(Poly.zero(), Poly.zero(), 3)
    with pytest.raises(LemmaError):
        antisymmetric_rank_factor(L * M)
    with pytest.raises(LemmaError):
        check_twisted(D, L, 3)


def test_zero_solution_examples():
    assert zero_solution_check(1, 1, 0, 0, 5)["only_zero"]
    assert zero_solution_check(2, 3, 1, 0, 6)["only_zero"]
