import random

import pytest

from confext.algebra import (AlgebraError, algebra_from_json, algebra_to_json, check_jacobi,
                             check_skew_symmetry, make_family, type2_q)
from confext.polyring import D, L, Poly
from conftest import rand_frac, rand_poly_l, rand_skew


def _ok(alg):
    return check_skew_symmetry(alg)["pass"] and check_jacobi(alg)["pass"]


@pytest.mark.parametrize("tag", ["vir+vir", "type1"])
def test_fixed_families(tag):
    assert _ok(make_family(tag))


@pytest.mark.parametrize("a", [1, 0, -1, -4, -6])
def test_type2_table_rows(a, rng):
    for _ in range(20):
        c = rand_frac(rng)
        d = rand_frac(rng) if a in (0, -1) else 0
        alg = make_family("type2", a=a, c=c, d=d)
        assert _ok(alg), (a, c, d)


def test_type2_without_q_any_a(rng):
    for _ in range(10):
        assert _ok(make_family("type2", a=rand_frac(rng), b=rand_frac(rng)))


def test_solvable_random(rng):
    for _ in range(20):
        if rng.random() < 0.5:
            alg = make_family("solvable", p=rand_poly_l(rng, 3), q1=0)
        else:
            alg = make_family("solvable", p=0, q1=rand_skew(rng, 3))
        assert _ok(alg)


def test_jacobi_fault_injection():
    # a=2 with the a=0 quadratic term breaks Jacobi
    alg = make_family("type2", a=2, q=(D + 2 * L) * D)
    assert check_skew_symmetry(alg)["pass"]
    assert not check_jacobi(alg)["pass"]


def test_skew_fault_injection():
    alg = algebra_from_json({"family": "custom", "bracket": {"AA": {"A": "D"}}})
    assert not check_skew_symmetry(alg)["pass"]


def test_rejections():
    with pytest.raises(AlgebraError):
        make_family("solvable", p=L, q1=D + 2 * L)  # p*Q1 != 0
    with pytest.raises(AlgebraError):
        make_family("solvable", q1=D)  # not skew
    with pytest.raises(AlgebraError):
        make_family("type2", a=2, c=1)  # a outside the table
    with pytest.raises(AlgebraError):
        make_family("type2", a=1, b=1, c=1)  # nonzero Q needs b = 0
    with pytest.raises(ValueError):
        type2_q(-4, 1, 1)
    with pytest.raises(AlgebraError):
        make_family("nope")


def test_json_round_trip():
    for obj in ({"family": "type2", "a": "-4", "c": "1"}, {"family": "solvable", "p": "L", "q1": "0"},
                {"family": "vir+vir"}, {"family": "type1"}):
        alg = algebra_from_json(obj)
        again = algebra_from_json({"family": "custom", "bracket": {
            k: v for k, v in algebra_to_json(alg)["bracket"].items() if k in ("AA", "AB", "BB")}})
        for x in "AB":
            for y in "AB":
                for w in "AB":
                    assert alg.c(x, y, w) == again.c(x, y, w)
