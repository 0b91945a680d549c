"""Conformal modules over rank-two algebras: trivial ℂc_η or free of rank one.

A free module ℂ[∂]v is described by ``A_λ v = P_A(∂,λ) v`` and
``B_λ v = P_B(∂,λ) v``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Mapping, Optional

from .algebra import GENS, AlgebraSpec
from .polyring import D, L, M, Poly, const, parse_poly, substitute
from .scalar import ZERO, Scalar, as_scalar

__all__ = [
    "ModuleSpec",
    "ModuleError",
    "trivial",
    "free",
    "make_module",
    "module_residuals",
    "check_module",
    "module_from_json",
    "module_to_json",
]


class ModuleError(ValueError):
    """Parameters outside the rank-one classification for the given algebra."""


@dataclass(frozen=True)
class ModuleSpec:
    kind: str  # "trivial" or "free"
    eta: Scalar = ZERO
    PA: Poly = Poly.zero()
    PB: Poly = Poly.zero()

    @property
    def is_trivial(self) -> bool:
        return self.kind == "trivial"

    def action(self, x: str) -> Poly:
        """Action polynomial of generator ``x`` (zero on a trivial module)."""
        if self.is_trivial:
            return Poly.zero()
        return self.PA if x == "A" else self.PB

    def field(self) -> int:
        return self.eta.d or self.PA.field() or self.PB.field()


def trivial(eta) -> ModuleSpec:
    return ModuleSpec("trivial", eta=as_scalar(eta))


def free(PA, PB) -> ModuleSpec:
    PA = _poly(PA)
    PB = _poly(PB)
    if PA.is_zero() and PB.is_zero():
        raise ModuleError("a free rank-one module needs a nonzero action")
    if PA.uses(2) or PB.uses(2):
        raise ModuleError("actions are polynomials in D and L")
    return ModuleSpec("free", PA=PA, PB=PB)


def _poly(x) -> Poly:
    if isinstance(x, Poly):
        return x
    if isinstance(x, str):
        return parse_poly(x)
    return const(x)


def _vir(alpha, beta) -> Poly:
    return D + L * as_scalar(alpha) + const(beta)


def make_module(alg: AlgebraSpec, case: Optional[str] = None, **p) -> ModuleSpec:
    """Rank-one module in the parametrization appropriate to ``alg.family``.

    vir+vir: ``delta`` (1,0)/(0,1) with ``alpha1, beta1`` or ``alpha2, beta2``.
    solvable: ``phiA``, ``phiB`` polynomials in λ.
    type1: ``delta`` (1,0) with ``alpha, beta`` or (0,1) with ``phi``.
    type2: ``alpha``, ``beta``, optional ``gamma``.
    """
    fam = alg.family
    if fam == "vir+vir":
        delta = tuple(int(x) for x in p.get("delta", (1, 0)))
        if delta == (1, 0):
            alpha, beta = as_scalar(p.get("alpha1", 1)), as_scalar(p.get("beta1", 0))
        elif delta == (0, 1):
            alpha, beta = as_scalar(p.get("alpha2", 1)), as_scalar(p.get("beta2", 0))
        else:
            raise ModuleError("delta must be (1,0) or (0,1)")
        if not alpha:
            raise ModuleError("alpha must be nonzero")
        act = _vir(alpha, beta)
        return free(act, 0) if delta == (1, 0) else free(0, act)
    if fam == "solvable":
        phiA = _poly(p.get("phiA", 0))
        phiB = _poly(p.get("phiB", 0))
        if phiA.uses(0) or phiB.uses(0):
            raise ModuleError("phiA, phiB are polynomials in L only")
        if phiB and (alg.params["p"] or alg.params["q1"]):
            raise ModuleError("phiB may be nonzero only if p = Q1 = 0")
        return free(phiA, phiB)
    if fam == "type1":
        delta = tuple(int(x) for x in p.get("delta", (1, 0)))
        if delta == (1, 0):
            alpha = as_scalar(p.get("alpha", 1))
            if not alpha:
                raise ModuleError("alpha must be nonzero")
            return free(_vir(alpha, p.get("beta", 0)), 0)
        if delta == (0, 1):
            phi = _poly(p.get("phi", 0))
            if phi.is_zero() or phi.uses(0):
                raise ModuleError("phi must be a nonzero polynomial in L")
            return free(0, phi)
        raise ModuleError("delta must be (1,0) or (0,1)")
    if fam == "type2":
        alpha = as_scalar(p.get("alpha", 1))
        gamma = as_scalar(p.get("gamma", 0))
        prm = alg.params
        if gamma and not (prm["a"] == 1 and not prm["b"] and prm["q"].is_zero()):
            raise ModuleError("gamma may be nonzero only if a=1, b=0 and Q=0")
        if not gamma and not alpha:
            raise ModuleError("alpha must be nonzero when gamma = 0")
        return free(_vir(alpha, p.get("beta", 0)), const(gamma))
    raise ModuleError(f"no rank-one parametrization for family {fam!r}")


def module_residuals(alg: AlgebraSpec, m: ModuleSpec) -> Dict[str, Poly]:
    """x_λ(y_μ v) - y_μ(x_λ v) - [x_λ y]_{λ+μ} v, one polynomial per ordered pair."""
    if m.is_trivial:
        return {x + y: Poly.zero() for x in GENS for y in GENS}
    out = {}
    for x in GENS:
        for y in GENS:
            px = m.action(x)
            py_mu = substitute(m.action(y), D, M, M)
            r = substitute(py_mu, D + L, L, M) * px
            r = r - substitute(px, D + M, L, M) * py_mu
            for w in GENS:
                cw = substitute(alg.c(x, y, w), -L - M, L, M)
                r = r - cw * substitute(m.action(w), D, L + M, M)
            out[x + y] = r
    return out


def check_module(alg: AlgebraSpec, m: ModuleSpec) -> dict:
    res = module_residuals(alg, m)
    bad = {k: str(v) for k, v in res.items() if v}
    return {"pass": not bad, "residuals": bad}


def module_from_json(alg: AlgebraSpec, obj: Mapping) -> ModuleSpec:
    obj = dict(obj)
    kind = obj.pop("kind", None)
    if kind == "trivial":
        return trivial(as_scalar(str(obj.get("eta", "0"))))
    if kind == "free":
        return free(parse_poly(obj.get("PA", "0")), parse_poly(obj.get("PB", "0")))
    if "case" in obj or kind is None:
        obj.pop("case", None)
        params = {}
        for k, v in obj.items():
            if k == "delta":
                params[k] = tuple(int(x) for x in v)
            elif k in ("phiA", "phiB", "phi"):
                params[k] = parse_poly(str(v))
            else:
                params[k] = as_scalar(str(v))
        return make_module(alg, **params)
    raise ModuleError(f"unknown module kind {kind!r}")


def module_to_json(m: ModuleSpec) -> dict:
    if m.is_trivial:
        return {"kind": "trivial", "eta": str(m.eta)}
    return {"kind": "free", "PA": str(m.PA), "PB": str(m.PB)}
