"""Cocycle spaces modulo coboundaries, and dim Ext by degree stabilization."""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from .algebra import GENS, AlgebraSpec
from .cocycle import (T0, T1, T2, T3, Coord, CocycleSystem, ExtensionDatum, build_system,
                      coboundary_generators, coord_degree, datum_coords, datum_from_coords,
                      identities, is_cocycle, shape_of)
from .linalg import SparseMatrix, nullspace, reduce_vector, rref_vectors
from .modspec import ModuleSpec
from .polyring import term_order_key
from .scalar import Scalar

__all__ = [
    "ExtResult",
    "QuotientError",
    "DEFAULT_SCHEDULES",
    "default_schedule",
    "solve_cocycles",
    "coboundary_space",
    "subspace_quotient_dim",
    "ext_dimension",
    "independent_mod_coboundaries",
]

DEFAULT_SCHEDULES = {T0: (6, 8, 10), T1: (6, 8, 10), T2: (6, 8, 10), T3: (8, 10, 12)}
SCHEDULE_ENV = "CEXT_DEGREE_SCHEDULE"


class QuotientError(RuntimeError):
    """A coboundary failed to lie in the cocycle space."""


def parse_schedule(text: str) -> Tuple[int, ...]:
    vals = tuple(int(x) for x in text.replace(" ", "").split(",") if x)
    if len(vals) < 2 or any(b <= a for a, b in zip(vals, vals[1:])) or vals[0] < 0:
        raise ValueError(f"degree schedule must be >= 2 increasing bounds, got {text!r}")
    return vals


def default_schedule(shape: str) -> Tuple[int, ...]:
    env = os.environ.get(SCHEDULE_ENV)
    if env:
        return parse_schedule(env)
    return DEFAULT_SCHEDULES[shape]


def _coord_priority(c: Coord):
    # higher degree first, so echelon pivots sit on high-degree coordinates
    slot, e = c
    return (-coord_degree(c), slot, term_order_key(e))


def solve_cocycles(system: CocycleSystem) -> List[Dict[Coord, Scalar]]:
    """Basis of the cocycle space of ``system`` as coordinate dictionaries."""
    ns = nullspace(SparseMatrix(system.rows, len(system.layout)))
    return [{system.layout[j]: v for j, v in vec.items()} for vec in ns]


def coboundary_space(generators: Sequence[ExtensionDatum], N: int) -> List[Dict[Coord, Scalar]]:
    """Coboundaries all of whose coordinates have degree <= N.

    Generators may exceed the bound; combinations whose over-degree parts
    cancel are found by solving for the vanishing of those parts.
    """
    vecs = [datum_coords(g) for g in generators]
    over = sorted({c for v in vecs for c in v if coord_degree(c) > N}, key=_coord_priority)
    if over:
        idx = {c: i for i, c in enumerate(over)}
        rows = [{} for _ in over]
        for k, v in enumerate(vecs):
            for c, x in v.items():
                if c in idx:
                    rows[idx[c]][k] = x
        combos = nullspace(SparseMatrix(rows, len(vecs)))
    else:
        combos = [{k: None} for k in range(len(vecs))]
    out = []
    for combo in combos:
        acc: Dict[Coord, Scalar] = {}
        for k, w in combo.items():
            for c, x in vecs[k].items():
                y = x if w is None else x * w
                acc[c] = acc[c] + y if c in acc else y
        acc = {c: x for c, x in acc.items() if x}
        if acc:
            out.append(acc)
    return out


def _index(vectors, order):
    col = {c: i for i, c in enumerate(order)}
    return [{col[c]: x for c, x in v.items()} for v in vectors]


def subspace_quotient_dim(Z: Sequence[Dict[Coord, Scalar]], B: Sequence[Dict[Coord, Scalar]]):
    """Return ``(dim Z - dim B, dim B, complement basis)`` for ``B ⊆ Z``.

    The complement vectors are reduced against ``B`` with high-degree
    coordinates pivoted first, so they come out as low-degree representatives,
    each with pivot coefficient 1.
    """
    coords = sorted({c for v in list(Z) + list(B) for c in v}, key=_coord_priority)
    zi = _index(Z, coords)
    bi = _index(B, coords)
    order = list(range(len(coords)))
    zpiv = rref_vectors(zi, order)
    for v in bi:
        if reduce_vector(v, zpiv):
            raise QuotientError("coboundary outside the cocycle space")
    bpiv = rref_vectors(bi, order)
    allpiv = rref_vectors(list(bpiv.values()) + list(zpiv.values()), order)
    comp_cols = sorted(c for c in allpiv if c not in bpiv)
    if len(allpiv) != len(zpiv):
        raise QuotientError("coboundary outside the cocycle space")
    comp = [{coords[j]: x for j, x in allpiv[c].items()} for c in comp_cols]
    return len(zpiv) - len(bpiv), len(bpiv), comp


def independent_mod_coboundaries(data: Sequence[ExtensionDatum], B: Sequence[Dict[Coord, Scalar]]
                                 ) -> bool:
    """True iff ``data`` are linearly independent modulo span(``B``)."""
    vecs = [datum_coords(d) for d in data]
    coords = sorted({c for v in list(vecs) + list(B) for c in v}, key=_coord_priority)
    order = list(range(len(coords)))
    nb = len(rref_vectors(_index(B, coords), order))
    nall = len(rref_vectors(_index(list(B) + vecs, coords), order))
    return nall - nb == len(vecs)


@dataclass
class ExtResult:
    shape: str
    per_degree: List[Dict[str, int]]
    verdict: Dict[str, object]
    basis: List[ExtensionDatum]
    notes: List[str] = field(default_factory=list)

    @property
    def finite(self) -> Optional[int]:
        return self.verdict.get("finite")  # type: ignore[return-value]

    @property
    def growing(self) -> bool:
        return "growing" in self.verdict

    def dims(self) -> List[int]:
        return [row["dimExt"] for row in self.per_degree]

    def to_json(self) -> dict:
        return {
            "shape": self.shape,
            "per_degree": self.per_degree,
            "verdict": self.verdict,
            "basis": [d.to_json() for d in self.basis],
            "notes": self.notes,
        }


def _t2_cut_note(alg, sub, quot, system: CocycleSystem, dimZ: int) -> Optional[str]:
    # do the bracket rows shrink the space cut out by the ∂-rows alone?
    rows = [r for r, o in zip(system.rows, system.origins) if o[0].startswith("D:")]
    dim_d = len(nullspace(SparseMatrix(rows, len(system.layout))))
    if dim_d != dimZ:
        return f"N={system.N}: bracket rows cut the ∂-row solutions from {dim_d} to {dimZ}"
    return None


def ext_dimension(alg: AlgebraSpec, sub: ModuleSpec, quot: ModuleSpec,
                  schedule: Optional[Sequence[int]] = None) -> ExtResult:
    """Quotient dimension at each degree bound and the stabilization verdict."""
    shape = shape_of(sub, quot)
    sched = tuple(schedule) if schedule is not None else default_schedule(shape)
    if len(sched) < 2 or any(b <= a for a, b in zip(sched, sched[1:])) or sched[0] < 0:
        raise ValueError("schedule needs >= 2 strictly increasing nonnegative bounds")
    top = build_system(alg, sub, quot, sched[-1])
    per_degree = []
    notes = []
    comp: List[Dict[Coord, Scalar]] = []
    for N in sched:
        system = top if N == sched[-1] else top.restrict(N)
        Z = solve_cocycles(system)
        B = coboundary_space(coboundary_generators(alg, sub, quot, N), N)
        dim_ext, dim_b, comp = subspace_quotient_dim(Z, B)
        per_degree.append({"N": N, "dimZ": len(Z), "dimB": dim_b, "dimExt": dim_ext})
        if shape == T2:
            note = _t2_cut_note(alg, sub, quot, system, len(Z))
            if note:
                notes.append(note)
    last, prev = per_degree[-1]["dimExt"], per_degree[-2]["dimExt"]
    if last == prev:
        verdict = {"finite": last, "at": per_degree[-2]["N"]}
    else:
        verdict = {"growing": [prev, last]}
    basis = [datum_from_coords(shape, v) for v in comp]
    return ExtResult(shape, per_degree, verdict, basis, notes)
