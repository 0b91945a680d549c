import pytest
from hypothesis import given
from hypothesis import strategies as st

from confext.algebra import make_family
from confext.cocycle import (T0, T1, T2, T3, ExtensionDatum, build_system, coboundary_generators,
                             is_cocycle, shape_of)
from confext.modspec import make_module, trivial
from confext.polyring import D, L, Poly
from confext.scalar import Scalar
from confext.solver import (coboundary_space, default_schedule, ext_dimension,
                            independent_mod_coboundaries, parse_schedule)


def vir_free(alpha, beta):
    alg = make_family("vir+vir")
    return alg, make_module(alg, delta=(1, 0), alpha1=alpha, beta1=beta)


def test_shapes():
    alg, m = vir_free(1, 0)
    assert shape_of(trivial(0), trivial(0)) == T0
    assert shape_of(trivial(0), m) == T1
    assert shape_of(m, trivial(0)) == T2
    assert shape_of(m, m) == T3


def test_coboundaries_are_cocycles():
    alg = make_family("type2", a=-4, c=1)
    sub = make_module(alg, alpha=2, beta=1)
    quot = make_module(alg, alpha=3, beta=1)
    for g in coboundary_generators(alg, sub, quot, 4):
        assert is_cocycle(alg, sub, quot, g)


def test_trivial_pair():
    alg = make_family("vir+vir")
    assert ext_dimension(alg, trivial(0), trivial(0)).finite == 1
    assert ext_dimension(alg, trivial(0), trivial(1)).finite == 0


def test_t1_basis_is_lambda_squared():
    alg, quot = vir_free(1, 1)
    res = ext_dimension(alg, trivial(-1), quot, (6, 8))
    assert res.finite == 1
    assert res.basis[0].fx("A") == L ** 2


def test_schedule_env(monkeypatch):
    monkeypatch.setenv("CEXT_DEGREE_SCHEDULE", "2,3")
    assert default_schedule(T3) == (2, 3)
    monkeypatch.delenv("CEXT_DEGREE_SCHEDULE")
    assert default_schedule(T3) == (8, 10, 12)
    with pytest.raises(ValueError):
        parse_schedule("4,4")


def test_growing_verdict():
    alg = make_family("type1")
    m = make_module(alg, delta=(0, 1), phi=1)
    res = ext_dimension(alg, m, m, (4, 6, 8))
    dims = res.dims()
    assert dims[0] < dims[1] < dims[2] and res.growing


def test_restricted_system_matches_direct_build():
    alg, m = vir_free(2, 0)
    top = build_system(alg, m, m, 6)
    low = build_system(alg, m, m, 4)
    assert top.restrict(4).layout == low.layout
    assert sorted(map(str, top.restrict(4).rows)) == sorted(map(str, low.rows))


@given(st.fractions(min_value=-5, max_value=5, max_denominator=4).filter(bool))
def test_scalar_multiple_of_cocycle_stays_cocycle(k):
    alg = make_family("type2", a=1, c=1)
    sub = make_module(alg, alpha=2, beta=0)
    quot = make_module(alg, alpha=3, beta=0)
    f = ExtensionDatum({"A": Poly({(1, 0, 0): Scalar(1, 0) / 2}), "B": L})
    assert is_cocycle(alg, sub, quot, f)
    assert is_cocycle(alg, sub, quot, f.scale(k))
    B = coboundary_space(coboundary_generators(alg, sub, quot, 6), 6)
    assert independent_mod_coboundaries([f.scale(k)], B)
