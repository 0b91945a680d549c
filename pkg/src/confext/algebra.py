"""Rank-two Lie conformal algebras given by λ-bracket structure constants.

A bracket ``[x_λ y] = C[x,y][A]·A + C[x,y][B]·B`` is stored for every ordered
pair of generators, each coefficient a :class:`Poly` in (∂, λ).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Mapping, Optional, Tuple

from .polyring import D, L, M, Poly, const, is_skew_symmetric, parse_poly, substitute
from .scalar import Scalar, as_scalar

__all__ = [
    "GENS",
    "AlgebraSpec",
    "AlgebraError",
    "make_family",
    "type2_q",
    "check_skew_symmetry",
    "check_jacobi",
    "algebra_from_json",
    "algebra_to_json",
    "TYPE2_A_VALUES",
]

GENS = ("A", "B")
TYPE2_A_VALUES = (1, 0, -1, -4, -6)


class AlgebraError(ValueError):
    """Invalid parameters for an algebra family."""


@dataclass(frozen=True)
class AlgebraSpec:
    bracket: Mapping[Tuple[str, str], Mapping[str, Poly]]
    family: str = "custom"
    params: Mapping[str, object] = field(default_factory=dict)

    def c(self, x: str, y: str, w: str) -> Poly:
        return self.bracket[(x, y)][w]

    def field(self) -> int:
        d = 0
        for row in self.bracket.values():
            for p in row.values():
                d = d or p.field()
        return d


def type2_q(a: int, c, d=0) -> Poly:
    """The skew-symmetric Q(∂,λ) attached to the Type II family at ``a``."""
    c = as_scalar(c)
    d = as_scalar(d)
    s = D + 2 * L
    if a == 1:
        if d:
            raise AlgebraError("a=1 admits only the parameter c")
        return s * c
    if a == 0:
        return (s * (D + L) * L) * c + (s * D) * d
    if a == -1:
        return (s * D ** 2) * c + (s * (D + L) * D * L) * d
    if a == -4:
        if d:
            raise AlgebraError("a=-4 admits only the parameter c")
        return (s * (D + L) ** 3 * L ** 3) * c
    if a == -6:
        if d:
            raise AlgebraError("a=-6 admits only the parameter c")
        return (s * (11 * (D + L) ** 4 * L ** 4 + 2 * (D + L) ** 3 * D ** 2 * L ** 3)) * c
    raise AlgebraError(f"a={a} has no nonzero Q")


def _table(aa_a=0, aa_b=0, ab_a=0, ab_b=0, bb_a=0, bb_b=0) -> Dict:
    """Fill all four ordered pairs from [A_λA], [A_λB], [B_λB] via skew-symmetry."""
    def P(x):
        return x if isinstance(x, Poly) else const(x)

    def skew(p: Poly) -> Poly:
        return -substitute(p, D, -L - D, M)

    aa = {"A": P(aa_a), "B": P(aa_b)}
    ab = {"A": P(ab_a), "B": P(ab_b)}
    bb = {"A": P(bb_a), "B": P(bb_b)}
    ba = {w: skew(ab[w]) for w in GENS}
    return {("A", "A"): aa, ("A", "B"): ab, ("B", "A"): ba, ("B", "B"): bb}


def make_family(tag: str, **params) -> AlgebraSpec:
    """Build one of the four rank-two families.

    ``vir+vir``; ``solvable`` with ``p`` (in λ) and ``q1`` (skew in ∂,λ);
    ``type1``; ``type2`` with ``a``, ``c``, ``d`` (and optional ``b`` only
    when Q vanishes).
    """
    tag = tag.lower()
    vir = D + 2 * L
    if tag in ("vir+vir", "virplusvir"):
        return AlgebraSpec(_table(aa_a=vir, bb_b=vir), "vir+vir", {})
    if tag == "solvable":
        p = _as_poly(params.get("p", 0))
        q1 = _as_poly(params.get("q1", 0))
        if p.uses(0) or p.uses(2):
            raise AlgebraError("p must be a polynomial in L only")
        if q1.uses(2):
            raise AlgebraError("Q1 must not involve M")
        if q1 and not is_skew_symmetric(q1):
            raise AlgebraError("Q1 must be skew-symmetric")
        if not (p * q1).is_zero():
            raise AlgebraError("solvable family requires p*Q1 = 0")
        return AlgebraSpec(_table(aa_b=q1, ab_b=p), "solvable", {"p": p, "q1": q1})
    if tag == "type1":
        return AlgebraSpec(_table(aa_a=vir), "type1", {})
    if tag == "type2":
        a = as_scalar(params.get("a", 0))
        b = as_scalar(params.get("b", 0))
        c = as_scalar(params.get("c", 0))
        d = as_scalar(params.get("d", 0))
        if "q" in params:
            q = _as_poly(params["q"])
        elif c or d:
            if b:
                raise AlgebraError("nonzero Q requires b=0")
            if not a.is_rational() or a.rat.denominator != 1 or int(a.rat) not in TYPE2_A_VALUES:
                raise AlgebraError(f"nonzero Q requires a in {TYPE2_A_VALUES}, got a={a}")
            q = type2_q(int(a.rat), c, d)
        else:
            q = Poly.zero()
        rec = {"a": a, "b": b, "c": c, "d": d, "q": q}
        return AlgebraSpec(_table(aa_a=vir, aa_b=q, ab_b=D + L * a + const(b)), "type2", rec)
    raise AlgebraError(f"unknown family {tag!r}")


def _as_poly(x) -> Poly:
    if isinstance(x, Poly):
        return x
    if isinstance(x, str):
        return parse_poly(x)
    return const(x)


def check_skew_symmetry(alg: AlgebraSpec) -> dict:
    """Report, per ordered pair, whether C_yx(∂,λ) = -C_xy(∂,-λ-∂)."""
    pairs = {}
    for x in GENS:
        for y in GENS:
            ok = True
            for w in GENS:
                lhs = alg.c(y, x, w)
                rhs = -substitute(alg.c(x, y, w), D, -L - D, M)
                if lhs != rhs or alg.c(x, y, w).uses(2):
                    ok = False
            pairs[x + y] = ok
    return {"pass": all(pairs.values()), "pairs": pairs}


def jacobi_residuals(alg: AlgebraSpec) -> Dict[str, Poly]:
    """Residual of [x_λ[y_μ z]] - [[x_λ y]_{λ+μ} z] - [y_μ[x_λ z]] per triple and output."""
    out = {}
    at_sum = {}  # C_xy^w(-λ-μ, λ)
    for x in GENS:
        for y in GENS:
            for w in GENS:
                at_sum[(x, y, w)] = substitute(alg.c(x, y, w), -L - M, L, M)
    for x in GENS:
        for y in GENS:
            for z in GENS:
                for v in GENS:
                    r = Poly.zero()
                    for w in GENS:
                        # [x_λ (C_yz^w(∂,μ) w)] = C_yz^w(∂+λ,μ) [x_λ w]
                        r = r + substitute(alg.c(y, z, w), D + L, M, M) * alg.c(x, w, v)
                        r = r - substitute(alg.c(x, z, w), D + M, L, M) * substitute(
                            alg.c(y, w, v), D, M, M)
                        r = r - at_sum[(x, y, w)] * substitute(alg.c(w, z, v), D, L + M, M)
                    out[x + y + z + ">" + v] = r
    return out


def check_jacobi(alg: AlgebraSpec) -> dict:
    res = jacobi_residuals(alg)
    bad = {k: str(v) for k, v in res.items() if v}
    return {"pass": not bad, "residuals": bad}


def algebra_from_json(obj: Mapping) -> AlgebraSpec:
    obj = dict(obj)
    fam = str(obj.pop("family", "")).lower()
    if fam == "custom":
        br = obj["bracket"]
        kw = {}
        for key in ("AA", "AB", "BB"):
            row = br.get(key, {})
            kw[key.lower() + "_a"] = parse_poly(row.get("A", "0"))
            kw[key.lower() + "_b"] = parse_poly(row.get("B", "0"))
        return AlgebraSpec(_table(**kw), "custom", {})
    params = {k: (parse_poly(v) if k in ("p", "q1", "q") else as_scalar(str(v)))
              for k, v in obj.items()}
    return make_family(fam, **params)


def algebra_to_json(alg: AlgebraSpec) -> dict:
    out: Dict[str, object] = {"family": alg.family}
    for k, v in alg.params.items():
        out[k] = str(v)
    out["bracket"] = {x + y: {w: str(alg.c(x, y, w)) for w in GENS}
                      for x in GENS for y in GENS}
    return out
