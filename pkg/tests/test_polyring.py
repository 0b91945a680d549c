import pytest
from hypothesis import given
from hypothesis import strategies as st

from confext.polyring import (D, L, M, Poly, PolyParseError, format_poly, is_skew_symmetric,
                              parse_poly, substitute)
from conftest import polys


@given(polys(), polys(), polys())
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p - p == Poly.zero()
    assert p * Poly.one() == p


@given(polys(max_deg=2, max_terms=3), polys(max_deg=2, max_terms=3),
       polys(max_deg=1, max_terms=2), polys(max_deg=1, max_terms=2), polys(max_deg=1, max_terms=2))
def test_substitution_is_a_ring_homomorphism(p, q, a, b, c):
    s = lambda x: substitute(x, a, b, c)
    assert s(p + q) == s(p) + s(q)
    assert s(p * q) == s(p) * s(q)


@given(polys(nvars=2, max_deg=3))
def test_double_skew_substitution_is_identity(p):
    # λ -> -λ-∂ is an involution on polynomials in ∂, λ
    once = substitute(p, D, -L - D, M)
    assert substitute(once, D, -L - D, M) == p


@given(polys(nvars=2, max_deg=3))
def test_skew_part_is_skew(p):
    q = p - substitute(p, D, -L - D, M)
    assert is_skew_symmetric(q)


@given(polys(max_deg=3))
def test_format_parse_round_trip(p):
    assert parse_poly(format_poly(p)) == p


def test_parse_examples():
    assert parse_poly("(D+2*L)*D") == D * D + 2 * L * D
    assert parse_poly("L*M^2 - L^2*M") == L * M ** 2 - L ** 2 * M
    assert parse_poly("sqrt(19)*L").field() == 19
    assert parse_poly("D/2") == D * Poly({(0, 0, 0): __import__("fractions").Fraction(1, 2)})
    assert parse_poly("a*L", {"a": 3}) == 3 * L


def test_parse_errors():
    for bad in ("D+", "L^-1", "x*L", "(D", "D//2"):
        with pytest.raises(PolyParseError):
            parse_poly(bad)


def test_degree_and_uses():
    p = D ** 2 * L + M
    assert p.degree() == 3 and p.uses(2) and not (D * L).uses(2)
