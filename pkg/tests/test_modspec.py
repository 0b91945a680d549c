import pytest

from confext.algebra import make_family
from confext.modspec import (ModuleError, check_module, free, make_module, module_from_json,
                             module_to_json, trivial)
from confext.polyring import D, L
from conftest import rand_frac, rand_poly_l, rand_skew


def _nz(rng):
    return rand_frac(rng, nonzero=True)


def test_vir_plus_vir(rng):
    alg = make_family("vir+vir")
    for _ in range(10):
        for delta, k in (((1, 0), "1"), ((0, 1), "2")):
            m = make_module(alg, delta=delta, **{"alpha" + k: _nz(rng), "beta" + k: rand_frac(rng)})
            assert check_module(alg, m)["pass"]


def test_solvable(rng):
    for _ in range(10):
        alg = make_family("solvable", p=rand_poly_l(rng, 2), q1=0)
        assert check_module(alg, make_module(alg, phiA=rand_poly_l(rng, 2)))["pass"]
        alg = make_family("solvable", p=0, q1=rand_skew(rng, 2))
        assert check_module(alg, make_module(alg, phiA=rand_poly_l(rng, 2)))["pass"]
        alg = make_family("solvable")
        m = make_module(alg, phiA=rand_poly_l(rng, 2), phiB=rand_poly_l(rng, 2))
        assert check_module(alg, m)["pass"]


def test_type1(rng):
    alg = make_family("type1")
    for _ in range(10):
        assert check_module(alg, make_module(alg, delta=(1, 0), alpha=_nz(rng), beta=rand_frac(rng)))["pass"]
        assert check_module(alg, make_module(alg, delta=(0, 1), phi=rand_poly_l(rng, 3)))["pass"]


@pytest.mark.parametrize("a", [1, 0, -1, -4, -6])
def test_type2(a, rng):
    for _ in range(10):
        alg = make_family("type2", a=a, c=_nz(rng), d=rand_frac(rng) if a in (0, -1) else 0)
        m = make_module(alg, alpha=_nz(rng), beta=rand_frac(rng))
        assert check_module(alg, m)["pass"]


def test_type2_gamma(rng):
    alg = make_family("type2", a=1)
    for _ in range(10):
        m = make_module(alg, alpha=rand_frac(rng), beta=rand_frac(rng), gamma=_nz(rng))
        assert check_module(alg, m)["pass"]


def test_trivial_modules_always_pass():
    for tag in ("vir+vir", "type1"):
        assert check_module(make_family(tag), trivial(3))["pass"]


def test_inadmissible_rejected():
    with pytest.raises(ModuleError):
        make_module(make_family("vir+vir"), delta=(1, 0), alpha1=0)
    with pytest.raises(ModuleError):
        make_module(make_family("solvable", p=L), phiA=1, phiB=L)
    with pytest.raises(ModuleError):
        make_module(make_family("type2", a=-4, c=1), alpha=1, gamma=1)


def test_non_module_detected():
    alg = make_family("vir+vir")
    assert not check_module(alg, free(D + 2 * L, D + L))["pass"]


def test_json_round_trip():
    alg = make_family("type1")
    m = make_module(alg, delta=(1, 0), alpha="3/2", beta="1")
    assert module_from_json(alg, module_to_json(m)) == m
