"""Cocycle equations and coboundaries for extensions 0 -> V -> E -> W -> 0.

``sub`` is V, ``quot`` is W.  The extension data are

* ``f[x]`` with ``x_λ w = P̄_x w + f_x v`` (a polynomial in λ when V is trivial,
  in ∂ and λ otherwise),
* ``h`` with ``∂ c = η̄ c + h(∂) v`` when W = ℂc_η̄ and V is free,
* ``t`` with ``∂ c_η̄ = η̄ c_η̄ + t c_η`` when both are trivial.

All identities are linear in the data; :func:`build_system` turns them into
sparse rows by feeding unit data through :func:`identities`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Tuple

from .algebra import GENS, AlgebraSpec
from .modspec import ModuleSpec
from .polyring import D, L, M, Exp, Poly, const, substitute, term_order_key
from .scalar import ONE, ZERO, Scalar, as_scalar

__all__ = [
    "T0", "T1", "T2", "T3",
    "ShapeError",
    "ExtensionDatum",
    "CocycleSystem",
    "Coord",
    "shape_of",
    "identities",
    "residual",
    "is_cocycle",
    "build_system",
    "coboundary_generators",
    "coord_degree",
    "datum_coords",
    "datum_from_coords",
    "layout_for",
]

T0, T1, T2, T3 = "T0", "T1", "T2", "T3"

# a coordinate is (slot, exponent) with slot one of "fA", "fB", "h", "t"
Coord = Tuple[str, Exp]
F_SLOTS = tuple("f" + x for x in GENS)


class ShapeError(ValueError):
    pass


def shape_of(sub: ModuleSpec, quot: ModuleSpec) -> str:
    if sub.is_trivial:
        return T0 if quot.is_trivial else T1
    return T2 if quot.is_trivial else T3


@dataclass(frozen=True)
class ExtensionDatum:
    f: Mapping[str, Poly]
    h: Optional[Poly] = None
    t: Optional[Scalar] = None

    def fx(self, x: str) -> Poly:
        return self.f.get(x, Poly.zero())

    def __add__(self, other: "ExtensionDatum") -> "ExtensionDatum":
        return ExtensionDatum(
            {x: self.fx(x) + other.fx(x) for x in GENS},
            _opt_add(self.h, other.h),
            _opt_add(self.t, other.t),
        )

    def scale(self, k) -> "ExtensionDatum":
        k = as_scalar(k)
        return ExtensionDatum(
            {x: self.fx(x).scale(k) for x in GENS},
            None if self.h is None else self.h.scale(k),
            None if self.t is None else self.t * k,
        )

    def is_zero(self) -> bool:
        return (all(self.fx(x).is_zero() for x in GENS)
                and (self.h is None or self.h.is_zero())
                and (self.t is None or self.t.is_zero()))

    def to_json(self) -> dict:
        out = {"f" + x: str(self.fx(x)) for x in GENS}
        if self.h is not None:
            out["h"] = str(self.h)
        if self.t is not None:
            out["t"] = str(self.t)
        return out


def _opt_add(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return a + b


def _zero_datum(shape: str) -> ExtensionDatum:
    return ExtensionDatum({x: Poly.zero() for x in GENS},
                          Poly.zero() if shape == T2 else None,
                          ZERO if shape == T0 else None)


def _quot_eta(quot: ModuleSpec) -> Scalar:
    return quot.eta if quot.is_trivial else ZERO


def identities(alg: AlgebraSpec, sub: ModuleSpec, quot: ModuleSpec,
               datum: ExtensionDatum) -> Dict[str, Poly]:
    """All identity residuals for ``datum``; every one vanishes iff it is a cocycle.

    Labels: ``"xy"`` for the bracket identity of the ordered pair (x, y),
    ``"D:x"`` for ∂-compatibility rows and ``"C:x"`` for rows forcing f to
    be free of ∂ when V is trivial.
    """
    shape = shape_of(sub, quot)
    out: Dict[str, Poly] = {}
    f = {x: datum.fx(x) for x in GENS}
    f_mu = {x: substitute(f[x], D, M, M) for x in GENS}
    f_sum = {x: substitute(f[x], D, L + M, M) for x in GENS}
    for x in GENS:
        px = sub.action(x)
        qx = quot.action(x)
        for y in GENS:
            py_mu = substitute(sub.action(y), D, M, M)
            qy_mu = substitute(quot.action(y), D, M, M)
            r = Poly.zero()
            if qy_mu:
                r = r + substitute(qy_mu, D + L, L, M) * f[x]
            if px and f_mu[y]:
                r = r + substitute(f_mu[y], D + L, L, M) * px
            if qx and f_mu[y]:
                r = r - substitute(qx, D + M, L, M) * f_mu[y]
            if py_mu and f[x]:
                r = r - substitute(f[x], D + M, L, M) * py_mu
            for w in GENS:
                if f_sum[w]:
                    c = alg.c(x, y, w)
                    if c:
                        r = r - substitute(c, -L - M, L, M) * f_sum[w]
            out[x + y] = r
    if shape in (T0, T1):
        eta = sub.eta
        for key in list(out):
            out[key] = substitute(out[key], const(eta), L, M)
        for x in GENS:
            out["C:" + x] = f[x] - substitute(f[x], const(eta), L, M)
    if shape == T0:
        gap = const(quot.eta - sub.eta) - L
        for x in GENS:
            out["D:" + x] = gap * substitute(f[x], const(sub.eta), L, M)
    if shape == T2:
        h = datum.h if datum.h is not None else Poly.zero()
        h_shift = substitute(h, D + L, L, M)
        for x in GENS:
            out["D:" + x] = (D + L - const(quot.eta)) * f[x] - h_shift * sub.action(x)
    return out


def residual(alg, sub, quot, datum: ExtensionDatum) -> List[Poly]:
    """Identity residuals in a fixed label order."""
    ids = identities(alg, sub, quot, datum)
    return [ids[k] for k in sorted(ids)]


def is_cocycle(alg, sub, quot, datum: ExtensionDatum) -> bool:
    return all(p.is_zero() for p in identities(alg, sub, quot, datum).values())


# -- coordinates -------------------------------------------------------------


def coord_degree(c: Coord) -> int:
    return sum(c[1])


def layout_for(shape: str, N: int) -> List[Coord]:
    """Unknown coordinates up to degree ``N`` in a fixed order."""
    if N < 0:
        raise ShapeError("degree bound must be >= 0")
    out: List[Coord] = []
    for slot in F_SLOTS:
        if shape in (T0, T1):
            out.extend((slot, (0, j, 0)) for j in range(N + 1))
        else:
            for n in range(N + 1):
                out.extend((slot, (n - j, j, 0)) for j in range(n + 1))
    if shape == T2:
        out.extend(("h", (i, 0, 0)) for i in range(N + 1))
    if shape == T0:
        out.append(("t", (0, 0, 0)))
    return out


def datum_coords(datum: ExtensionDatum) -> Dict[Coord, Scalar]:
    out: Dict[Coord, Scalar] = {}
    for x in GENS:
        for e, c in datum.fx(x).terms.items():
            out[("f" + x, e)] = c
    if datum.h is not None:
        for e, c in datum.h.terms.items():
            out[("h", e)] = c
    if datum.t is not None and datum.t:
        out[("t", (0, 0, 0))] = datum.t
    return out


def datum_from_coords(shape: str, coords: Mapping[Coord, Scalar]) -> ExtensionDatum:
    f = {x: {} for x in GENS}
    h: Dict[Exp, Scalar] = {}
    t = ZERO
    for (slot, e), c in coords.items():
        if slot == "h":
            h[e] = c
        elif slot == "t":
            t = t + c
        else:
            f[slot[1:]][e] = c
    return ExtensionDatum({x: Poly(f[x]) for x in GENS},
                          Poly(h) if shape == T2 else None,
                          t if shape == T0 else None)


def _unit(shape: str, c: Coord) -> ExtensionDatum:
    return datum_from_coords(shape, {c: ONE})


# -- systems -----------------------------------------------------------------


@dataclass
class CocycleSystem:
    """Sparse linear rows in the unknown coordinates of ``layout``."""

    shape: str
    N: int
    layout: List[Coord]
    rows: List[Dict[int, Scalar]]
    origins: List[Tuple[str, Exp]]
    field_d: int = 0

    def restrict(self, N: int) -> "CocycleSystem":
        """The system at a smaller degree bound, obtained by dropping columns."""
        keep = [i for i, c in enumerate(self.layout) if coord_degree(c) <= N]
        remap = {old: new for new, old in enumerate(keep)}
        rows, origins, seen = [], [], set()
        for row, org in zip(self.rows, self.origins):
            r = {remap[i]: v for i, v in row.items() if i in remap}
            if not r:
                continue
            key = _row_key(r)
            if key in seen:
                continue
            seen.add(key)
            rows.append(r)
            origins.append(org)
        return CocycleSystem(self.shape, N, [self.layout[i] for i in keep], rows, origins,
                             self.field_d)

    def to_json(self) -> dict:
        return {
            "shape": self.shape,
            "N": self.N,
            "layout": [[slot, list(e)] for slot, e in self.layout],
            "rows": [
                {"origin": [o[0], list(o[1])],
                 "coeffs": [[i, str(v)] for i, v in sorted(r.items())]}
                for r, o in zip(self.rows, self.origins)
            ],
        }


def _row_key(row: Dict[int, Scalar]):
    # rows equal up to a nonzero scalar share a key
    first = min(row)
    lead = row[first]
    return tuple(sorted((i, v / lead) for i, v in row.items()))


def build_system(alg: AlgebraSpec, sub: ModuleSpec, quot: ModuleSpec, N: int) -> CocycleSystem:
    """Linear rows (coefficient matching in ∂, λ, μ) for cocycles of degree <= N."""
    if N < 0:
        raise ShapeError("degree bound must be >= 0")
    shape = shape_of(sub, quot)
    layout = layout_for(shape, N)
    acc: Dict[Tuple[str, Exp], Dict[int, Scalar]] = {}
    for i, c in enumerate(layout):
        for label, poly in identities(alg, sub, quot, _unit(shape, c)).items():
            for e, v in poly.terms.items():
                acc.setdefault((label, e), {})[i] = v
    rows, origins, seen = [], [], set()
    for org in sorted(acc, key=lambda k: (k[0], term_order_key(k[1]))):
        r = acc[org]
        key = _row_key(r)
        if key in seen:
            continue
        seen.add(key)
        rows.append(r)
        origins.append(org)
    d = alg.field() or sub.field() or quot.field()
    return CocycleSystem(shape, N, layout, rows, origins, d)


def _max_action_degree(sub: ModuleSpec, quot: ModuleSpec) -> int:
    return max([m.action(x).degree() for m in (sub, quot) for x in GENS] + [0])


def coboundary_generators(alg: AlgebraSpec, sub: ModuleSpec, quot: ModuleSpec,
                          N: int) -> List[ExtensionDatum]:
    """Data of trivial extensions coming from a change of splitting by ∂^e."""
    if N < 0:
        raise ShapeError("degree bound must be >= 0")
    shape = shape_of(sub, quot)
    if shape == T0:
        return [ExtensionDatum({x: Poly.zero() for x in GENS}, None, quot.eta - sub.eta)]
    if shape == T1:
        eta = const(sub.eta)
        return [ExtensionDatum({x: substitute(quot.action(x), eta, L, M) for x in GENS})]
    top = N + _max_action_degree(sub, quot)
    out = []
    for e in range(top + 1):
        shifted = (D + L) ** e
        de = D ** e
        if shape == T2:
            f = {x: sub.action(x) * shifted for x in GENS}
            out.append(ExtensionDatum(f, (D - const(quot.eta)) * de, None))
        else:
            f = {x: sub.action(x) * shifted - quot.action(x) * de for x in GENS}
            out.append(ExtensionDatum(f))
    return out
