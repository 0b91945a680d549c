import random
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from confext.polyring import D, L, M, Poly, substitute
from confext.scalar import Scalar

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

# acceptance results, filled by test_acceptance.py and printed at the end of the run
ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[k]
        terminalreporter.write_line(f"criterion {k}: {'PASS' if ok else 'FAIL'}  {detail}")


small_fracs = st.fractions(min_value=-6, max_value=6, max_denominator=5)
surd_fields = st.sampled_from([0, 2, 3, 19, 22])


@st.composite
def scalars(draw, d=None):
    d = draw(surd_fields) if d is None else d
    return Scalar(draw(small_fracs), draw(small_fracs) if d else 0, d)


@st.composite
def polys(draw, nvars=3, max_deg=3, max_terms=4, d=0):
    n = draw(st.integers(0, max_terms))
    terms = {}
    for _ in range(n):
        e = tuple(draw(st.integers(0, max_deg)) if i < nvars else 0 for i in range(3))
        terms[e] = draw(scalars(d=d))
    return Poly(terms)


def rand_frac(rng: random.Random, lo=-5, hi=5, den=4, nonzero=False) -> Fraction:
    while True:
        x = Fraction(rng.randint(lo * den, hi * den), rng.randint(1, den))
        if x or not nonzero:
            return x


def rand_poly_l(rng: random.Random, deg: int, nonzero=True) -> Poly:
    while True:
        p = Poly({(0, j, 0): rand_frac(rng) for j in range(deg + 1) if rng.random() < 0.7})
        if p or not nonzero:
            return p


def rand_skew(rng: random.Random, deg: int) -> Poly:
    """A nonzero Q(∂,λ) with Q(∂,λ) = -Q(∂,-λ-∂)."""
    while True:
        g = Poly({(i, j, 0): rand_frac(rng) for i in range(deg + 1) for j in range(deg + 1 - i)
                  if rng.random() < 0.5})
        q = g - substitute(g, D, -L - D, M)
        if q:
            return q


@pytest.fixture
def rng():
    return random.Random(20261016)
