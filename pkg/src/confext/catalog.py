"""Classification rows encoded as data, instantiated at exact parameter values
and verified against the cocycle engine and the Ext solver.

Entries live in ``data/catalog.json``.  Each entry names an algebra recipe,
sub and quotient module recipes, parameter constraints, cocycle templates
with free scalars, admissible parameter choices and off-locus probes.
Recipe and template values are expressions in D, L, M and the parameter
names (see :func:`confext.polyring.parse_poly`).
"""

from __future__ import annotations

import json
import re
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from importlib import resources
from typing import Any, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from .algebra import GENS, AlgebraSpec, make_family
from .cocycle import (T0, T2, ExtensionDatum, coboundary_generators, coord_degree,
                      datum_coords, is_cocycle, shape_of)
from .lemmas import antisymmetric_rank_factor, solve_bilinear_factor
from .modspec import ModuleSpec, make_module, trivial
from .polyring import D, L, M, Poly, parse_poly, substitute
from .scalar import ONE, ZERO, Scalar
from .solver import coboundary_space, ext_dimension, independent_mod_coboundaries

__all__ = [
    "CatalogEntry",
    "CatalogError",
    "ConstraintError",
    "Instance",
    "THEOREM_COUNTS",
    "TOTAL_ENTRIES",
    "load_catalog",
    "catalog_entries",
    "parse_filter",
    "violated_constraints",
    "instantiate_entry",
    "verify_entry",
    "negative_probe",
    "verify_catalog",
    "summarize",
    "report_rows",
    "dump_catalog",
    "catalog_from_json",
]

# rows per theorem, fixed when the tables were encoded
THEOREM_COUNTS = {
    "S2.T0": 1,
    "S3.T1": 4, "S3.T2": 2, "S3.T3": 12,
    "S4.T1": 1, "S4.T2": 1, "S4.T3": 8,
    "S5.T1": 2, "S5.T2": 1, "S5.T3": 7,
    "S6.T1": 2, "S6.T2": 1, "S6.T3": 44,
}
TOTAL_ENTRIES = sum(THEOREM_COUNTS.values())

POLY_PARAMS = {"p", "q1", "phi", "phiA", "phiB"}
FILTER_KEYS = ("family", "shape", "section", "theorem", "a", "id")
_FAMILY_ALIASES = {
    "vir+vir": "vir+vir", "virvir": "vir+vir", "virplusvir": "vir+vir",
    "solvable": "solvable", "type1": "type1", "typei": "type1",
    "type2": "type2", "typeii": "type2",
}


class CatalogError(ValueError):
    """Malformed entry, filter or probe."""


class ConstraintError(CatalogError):
    """A parameter choice violates an entry constraint."""

    def __init__(self, constraint: str, entry_id: str = ""):
        self.constraint = constraint
        super().__init__(f"{entry_id}: constraint violated: {constraint}")


Value = Union[Scalar, Poly]


@dataclass(frozen=True)
class CatalogEntry:
    id: str
    theorem: str
    section: str
    family: str
    shape: str
    claimed_dim: Union[int, str]
    provenance: Mapping[str, str]
    constraints: Tuple[str, ...]
    algebra: Mapping[str, Any]
    sub: Mapping[str, Any]
    quot: Mapping[str, Any]
    templates: Mapping[str, str]
    scalars: Tuple[str, ...]
    choices: Tuple[Mapping[str, str], ...]
    probes: Tuple[Mapping[str, Any], ...] = ()
    shift: Optional[str] = None
    helpers: Mapping[str, str] = field(default_factory=dict)
    variants: Mapping[str, Mapping[str, Any]] = field(default_factory=dict)
    tags: Mapping[str, str] = field(default_factory=dict)

    @property
    def infinite(self) -> bool:
        return self.claimed_dim == "infinite"

    def to_json(self) -> dict:
        out = {
            "id": self.id,
            "theorem": self.theorem,
            "section": self.section,
            "family": self.family,
            "shape": self.shape,
            "claimed_dim": self.claimed_dim,
            "provenance": dict(self.provenance),
            "constraints": list(self.constraints),
            "algebra": dict(self.algebra),
            "sub": dict(self.sub),
            "quot": dict(self.quot),
            "templates": dict(self.templates),
            "scalars": list(self.scalars),
            "choices": [dict(c) for c in self.choices],
            "probes": [dict(p) for p in self.probes],
        }
        if self.shift:
            out["shift"] = self.shift
        if self.helpers:
            out["helpers"] = dict(self.helpers)
        if self.variants:
            out["variants"] = {k: dict(v) for k, v in self.variants.items()}
        out["tags"] = dict(self.tags)
        return out

    @classmethod
    def from_json(cls, obj: Mapping) -> "CatalogEntry":
        try:
            e = cls(
                id=obj["id"], theorem=obj["theorem"], section=obj["section"],
                family=obj["family"], shape=obj["shape"], claimed_dim=obj["claimed_dim"],
                provenance=dict(obj.get("provenance", {})),
                constraints=tuple(obj.get("constraints", ())),
                algebra=dict(obj["algebra"]), sub=dict(obj["sub"]), quot=dict(obj["quot"]),
                templates=dict(obj.get("templates", {})),
                scalars=tuple(obj.get("scalars", ())),
                choices=tuple(dict(c) for c in obj.get("choices", ())),
                probes=tuple(dict(p) for p in obj.get("probes", ())),
                shift=obj.get("shift"),
                helpers=dict(obj.get("helpers", {})),
                variants={k: dict(v) for k, v in obj.get("variants", {}).items()},
                tags=dict(obj.get("tags", {})),
            )
        except KeyError as exc:
            raise CatalogError(f"entry missing field {exc}") from None
        _validate(e)
        return e


def _validate(e: CatalogEntry) -> None:
    if e.claimed_dim not in (0, 1, 2, "infinite"):
        raise CatalogError(f"{e.id}: claimed_dim must be 0, 1, 2 or 'infinite'")
    if isinstance(e.claimed_dim, int):
        if len(e.scalars) != e.claimed_dim:
            raise CatalogError(f"{e.id}: {len(e.scalars)} free scalars for claimed "
                               f"dimension {e.claimed_dim}")
    if len(e.choices) < 2:
        raise CatalogError(f"{e.id}: needs at least two parameter choices")
    for h in list(e.helpers.values()) + [h for v in e.variants.values()
                                         for h in v.get("helpers", {}).values()]:
        if h not in HELPERS:
            raise CatalogError(f"{e.id}: unknown helper {h!r}")


# -- loading and filtering ----------------------------------------------------------


def catalog_from_json(obj: Mapping) -> List[CatalogEntry]:
    entries = [CatalogEntry.from_json(x) for x in obj["entries"]]
    ids = [e.id for e in entries]
    if len(set(ids)) != len(ids):
        raise CatalogError("duplicate entry ids")
    return entries


_CACHE: Dict[str, List[CatalogEntry]] = {}


def load_catalog(path: Optional[str] = None) -> List[CatalogEntry]:
    """All entries, in file order."""
    key = path or ""
    if key not in _CACHE:
        if path is None:
            text = resources.files("confext").joinpath("data/catalog.json").read_text("utf-8")
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
        _CACHE[key] = catalog_from_json(json.loads(text))
    return list(_CACHE[key])


def dump_catalog(entries: Iterable[CatalogEntry]) -> str:
    """Canonical JSON text for a list of entries."""
    return json.dumps({"version": 1, "entries": [e.to_json() for e in entries]},
                      indent=1, ensure_ascii=False, sort_keys=True) + "\n"


def parse_filter(text: Optional[str]) -> Dict[str, str]:
    """``"family=type2,a=-4"`` to a dict; unknown keys are rejected."""
    out: Dict[str, str] = {}
    if not text:
        return out
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        if "=" not in part:
            raise CatalogError(f"filter term {part!r} is not key=value")
        k, v = (s.strip() for s in part.split("=", 1))
        if k not in FILTER_KEYS:
            raise CatalogError(f"unknown filter key {k!r}; expected one of {FILTER_KEYS}")
        out[k] = v
    return out


def _norm_family(v: str) -> str:
    key = re.sub(r"[^a-z0-9+]", "", v.lower())
    return _FAMILY_ALIASES.get(key, _FAMILY_ALIASES.get(key.replace("+", ""), key))


def catalog_entries(filt: Union[None, str, Mapping[str, str]] = None,
                    entries: Optional[Sequence[CatalogEntry]] = None) -> List[CatalogEntry]:
    """Entries matching every key of ``filt`` (family, shape, section, theorem, a, id)."""
    f = parse_filter(filt) if isinstance(filt, str) or filt is None else dict(filt)
    for k in f:
        if k not in FILTER_KEYS:
            raise CatalogError(f"unknown filter key {k!r}; expected one of {FILTER_KEYS}")
    out = []
    for e in (load_catalog() if entries is None else entries):
        if "family" in f and e.family != _norm_family(f["family"]):
            continue
        if "shape" in f and e.shape.upper() != f["shape"].upper():
            continue
        if "section" in f and e.section.upper() != f["section"].upper():
            continue
        if "theorem" in f and e.theorem.upper() != f["theorem"].upper():
            continue
        if "a" in f and e.tags.get("a") != f["a"]:
            continue
        if "id" in f and not e.id.startswith(f["id"]):
            continue
        out.append(e)
    return out


# -- parameter environments and constraints -------------------------------------------


def _value(text: str, env: Mapping[str, Value]) -> Value:
    p = parse_poly(str(text), env)
    if p.degree() <= 0:
        return p.coeff((0, 0, 0))
    return p


def _choice_env(choice: Mapping[str, str]) -> Dict[str, Value]:
    return {k: _value(v, {}) for k, v in choice.items()}


def _as_poly(v: Value) -> Poly:
    return v if isinstance(v, Poly) else Poly({(0, 0, 0): v})


_REL = re.compile(r"^(.*?)\s*(==|!=)\s*(.*)$")
_SET = re.compile(r"^(.*?)\s+(in|notin)\s+\{(.*)\}$")
_INDEP = re.compile(r"^independent\((.*),(.*)\)$")


def evaluate_constraint(text: str, env: Mapping[str, Value]) -> bool:
    """Exact truth value of one constraint string under ``env``."""
    t = text.strip()
    m = _INDEP.match(t)
    if m:
        a, b = (_as_poly(_value(x, env)) for x in m.groups())
        return _independent(a, b)
    m = _SET.match(t)
    if m:
        lhs = _as_poly(_value(m.group(1), env))
        members = [_as_poly(_value(x, env)) for x in m.group(3).split(",")]
        hit = any(lhs == x for x in members)
        return hit if m.group(2) == "in" else not hit
    m = _REL.match(t)
    if m:
        lhs = _as_poly(_value(m.group(1), env))
        rhs = _as_poly(_value(m.group(3), env))
        return (lhs == rhs) if m.group(2) == "==" else (lhs != rhs)
    raise CatalogError(f"cannot parse constraint {text!r}")


def _independent(a: Poly, b: Poly) -> bool:
    # linearly independent over the scalars: neither is a multiple of the other
    if a.is_zero() or b.is_zero():
        return False
    e = max(b.terms)
    k = a.coeff(e) / b.coeff(e)
    return a != b.scale(k)


def violated_constraints(e: CatalogEntry, choice: Mapping[str, str]) -> List[str]:
    env = _choice_env(choice)
    bad = []
    for c in e.constraints:
        try:
            ok = evaluate_constraint(c, env)
        except ZeroDivisionError:
            ok = False
        if not ok:
            bad.append(c)
    return bad


# -- helpers for template coefficients that come from a closed-form lemma -------------


def _lq1_inputs(env: Mapping[str, Value]):
    q1 = _as_poly(env["q1"])
    t = _as_poly(env["tpoly"])
    phi = _as_poly(env["phiA"])
    F = substitute(q1, -L - M, L, M) * substitute(t, D, L + M, M)
    return phi, F


def _lq1(env: Mapping[str, Value]) -> Poly:
    phi, F = _lq1_inputs(env)
    sol = solve_bilinear_factor(L * phi, F)
    if sol is None:
        raise CatalogError("no ∂-coefficient solves the bilinear equation for these parameters")
    return sol.particular


def _column(F: Poly, j: int) -> Poly:
    return Poly({(0, e[1], 0): c for e, c in F.terms.items() if e[2] == j})


def _lq1_printed(env: Mapping[str, Value], shift: int) -> Poly:
    # the printed closed form, with the coefficient a_{i0-1} read as the
    # coefficient of λ^(i0-1+shift) in φ_A
    phi, F = _lq1_inputs(env)
    rf = antisymmetric_rank_factor(F)
    if rf.rank != 2:
        raise CatalogError(f"coefficient matrix has rank {rf.rank}, not 2")

    def a(m: int) -> Scalar:
        return phi.coeff((0, m, 0)) if m >= 0 else ZERO

    ai, aj = a(rf.i0 - 1 + shift), a(rf.j0 - 1 + shift)
    if ai:
        return -_column(F, rf.j0) / ai
    if aj:
        return -_column(F, rf.i0) / aj
    raise CatalogError("both selecting coefficients vanish")


HELPERS = {
    "lq1": _lq1,
    "lq1_r0": lambda env: _lq1_printed(env, 0),
    "lq1_r1": lambda env: _lq1_printed(env, 1),
}


# -- instantiation ------------------------------------------------------------------


@dataclass
class Instance:
    algebra: AlgebraSpec
    sub: ModuleSpec
    quot: ModuleSpec
    data: List[ExtensionDatum]
    env: Dict[str, Value]


def _recipe_params(recipe: Mapping[str, Any], env: Mapping[str, Value]) -> Dict[str, Any]:
    out: Dict[str, Any] = {}
    for k, v in recipe.items():
        if k in ("kind", "family"):
            out[k] = v
        elif k == "delta":
            out[k] = tuple(int(_scalar(_value(x, env), k).rat) for x in v)
        else:
            val = _value(v, env)
            out[k] = val if k in POLY_PARAMS else _scalar(val, k)
    return out


def _scalar(v: Value, name: str) -> Scalar:
    if isinstance(v, Poly):
        raise CatalogError(f"parameter {name} must be a constant, got {v}")
    return v


def _build_algebra(recipe, env) -> AlgebraSpec:
    prm = _recipe_params(recipe, env)
    fam = prm.pop("family")
    if fam == "type2":
        a = prm.get("a")
        if a is not None and a.is_rational() and a.rat.denominator == 1:
            prm["a"] = int(a.rat)
        if "c" in prm and "d" not in prm:
            prm["d"] = ZERO
    return make_family(fam, **prm)


def _build_module(alg: AlgebraSpec, recipe, env) -> ModuleSpec:
    prm = _recipe_params(recipe, env)
    if prm.get("kind") == "trivial":
        return trivial(prm.get("eta", ZERO))
    prm.pop("kind", None)
    if alg.family == "type2" and "a" in alg.params:
        prm.pop("phi", None)
    return make_module(alg, **prm)


def _problem(e: CatalogEntry, env: Mapping[str, Value]):
    alg = _build_algebra(e.algebra, env)
    sub = _build_module(alg, e.sub, env)
    quot = _build_module(alg, e.quot, env)
    shape = shape_of(sub, quot)
    if shape != e.shape:
        raise CatalogError(f"{e.id}: recipes give shape {shape}, entry says {e.shape}")
    return alg, sub, quot


def _data(e: CatalogEntry, env: Dict[str, Value], templates: Mapping[str, str],
          helpers: Mapping[str, str]) -> List[ExtensionDatum]:
    env = dict(env)
    for name, h in helpers.items():
        env[name] = HELPERS[h](env)
    settings = ([{}] if not e.scalars else
                [{s: (ONE if s == on else ZERO) for s in e.scalars} for on in e.scalars])
    if e.claimed_dim == 0:
        return []
    shift = None
    if e.shift:
        shift = D + Poly({(0, 0, 0): _scalar(env[e.shift], e.shift)})
    out = []
    for st in settings:
        local = dict(env)
        local.update(st)

        def poly(key: str) -> Poly:
            p = parse_poly(templates.get(key, "0"), local)
            if shift is not None:
                p = substitute(p, shift, L, M)
            return p

        f = {x: poly("f" + x) for x in GENS}
        h = poly("h") if e.shape == T2 else None
        t = None
        if e.shape == T0:
            t = _scalar(_value(templates.get("t", "0"), local), "t")
        out.append(ExtensionDatum(f, h, t))
    return out


def instantiate_entry(e: CatalogEntry, choice: Mapping[str, str],
                      variant: Optional[str] = None) -> Instance:
    """Concrete algebra, modules and template data at one parameter choice.

    Free scalars are set to 1 one at a time (the others 0), giving one datum
    per free scalar.  Raises :class:`ConstraintError` naming the first
    violated constraint.
    """
    bad = violated_constraints(e, choice)
    if bad:
        raise ConstraintError(bad[0], e.id)
    env = _choice_env(choice)
    alg, sub, quot = _problem(e, env)
    if variant is None:
        data = _data(e, env, e.templates, e.helpers)
    else:
        v = e.variants[variant]
        data = _data(e, env, v.get("templates", e.templates), v.get("helpers", {}))
    return Instance(alg, sub, quot, data, env)


# -- verification -------------------------------------------------------------------


def _data_degree(data: Sequence[ExtensionDatum]) -> int:
    degs = [coord_degree(c) for d in data for c in datum_coords(d)]
    return max(degs + [0])


def _verdict_matches(claimed, res) -> bool:
    if claimed == "infinite":
        return res.growing
    return res.finite == claimed


def _verify_choice(e: CatalogEntry, idx: int, choice: Mapping[str, str], schedule) -> dict:
    row: Dict[str, Any] = {"index": idx, "choice": dict(choice)}
    try:
        inst = instantiate_entry(e, choice)
    except (CatalogError, ValueError, ArithmeticError) as exc:
        row["error"] = str(exc)
        row["checks"] = {k: False for k in ("residual", "non_coboundary", "independent",
                                            "dimension")}
        return row
    alg, sub, quot, data = inst.algebra, inst.sub, inst.quot, inst.data
    row["field"] = alg.field() or sub.field() or quot.field()
    row["data"] = [d.to_json() for d in data]
    residual_ok = [is_cocycle(alg, sub, quot, d) for d in data]
    N = _data_degree(data)
    B = coboundary_space(coboundary_generators(alg, sub, quot, N), N)
    non_cob = [independent_mod_coboundaries([d], B) for d in data]
    indep = independent_mod_coboundaries(data, B) if data else True
    res = ext_dimension(alg, sub, quot, schedule)
    row["checks"] = {
        "residual": all(residual_ok),
        "non_coboundary": all(non_cob),
        "independent": indep,
        "dimension": _verdict_matches(e.claimed_dim, res),
    }
    row["per_datum"] = [{"residual": r, "non_coboundary": n}
                        for r, n in zip(residual_ok, non_cob)]
    row["verdict"] = res.verdict
    row["dims"] = res.dims()
    return row


def negative_probe(e: CatalogEntry, probe: Mapping[str, Any], schedule=None) -> dict:
    """Run the solver at an off-locus choice violating exactly one constraint;
    it passes when the verdict is Finite(0)."""
    choice = probe["choice"] if "choice" in probe else probe
    named = probe.get("violates") if "choice" in probe else None
    bad = violated_constraints(e, choice)
    if len(bad) != 1:
        raise CatalogError(f"{e.id}: probe must violate exactly one constraint, violates {bad}")
    if named is not None and bad[0] != named:
        raise CatalogError(f"{e.id}: probe violates {bad[0]!r}, not {named!r}")
    alg, sub, quot = _problem(e, _choice_env(choice))
    res = ext_dimension(alg, sub, quot, schedule)
    return {"violates": bad[0], "choice": dict(choice), "verdict": res.verdict,
            "dims": res.dims(), "pass": res.finite == 0}


def _variant_status(e: CatalogEntry, name: str, choice) -> str:
    try:
        inst = instantiate_entry(e, choice, variant=name)
    except (CatalogError, ValueError, ArithmeticError):
        return "undefined"
    ok = all(is_cocycle(inst.algebra, inst.sub, inst.quot, d) for d in inst.data)
    return "pass" if ok else "fail"


def verify_entry(e: CatalogEntry, choices: Optional[Sequence[Mapping[str, str]]] = None,
                 schedule=None, probes: bool = True) -> dict:
    """Checks (a) residuals vanish, (b) each datum is not a coboundary,
    (c) the data are independent modulo coboundaries and (d) the solver
    verdict equals the claimed dimension, for every parameter choice."""
    choices = list(e.choices if choices is None else choices)
    rows = [_verify_choice(e, i, c, schedule) for i, c in enumerate(choices)]
    report: Dict[str, Any] = {
        "id": e.id,
        "theorem": e.theorem,
        "shape": e.shape,
        "claimed_dim": e.claimed_dim,
        "choices": rows,
    }
    ok = all(all(r["checks"].values()) for r in rows)
    if probes:
        pr = []
        for p in e.probes:
            try:
                pr.append(negative_probe(e, p, schedule))
            except (CatalogError, ValueError) as exc:
                pr.append({"violates": p.get("violates"), "choice": dict(p.get("choice", {})),
                           "error": str(exc), "pass": False})
        report["probes"] = pr
        ok = ok and all(p["pass"] for p in pr)
    if e.variants:
        report["variants"] = {name: [_variant_status(e, name, c) for c in choices]
                              for name in sorted(e.variants)}
    report["pass"] = ok
    return report


def _verify_by_id(args) -> dict:
    entry_json, schedule = args
    return verify_entry(CatalogEntry.from_json(entry_json), schedule=schedule)


def verify_catalog(entries: Sequence[CatalogEntry], jobs: int = 1, schedule=None) -> List[dict]:
    """Reports for ``entries`` sorted by id; ``jobs > 1`` uses worker processes."""
    if jobs > 1 and len(entries) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(_verify_by_id, [(e.to_json(), schedule) for e in entries]))
    else:
        reports = [verify_entry(e, schedule=schedule) for e in entries]
    return sorted(reports, key=lambda r: r["id"])


def summarize(reports: Sequence[dict]) -> dict:
    per: Dict[str, Dict[str, int]] = {}
    for r in reports:
        s = per.setdefault(r["theorem"], {"entries": 0, "passed": 0, "failed": 0})
        s["entries"] += 1
        s["passed" if r["pass"] else "failed"] += 1
    failed = [r["id"] for r in reports if not r["pass"]]
    return {"entries": len(reports), "passed": len(reports) - len(failed),
            "failed": len(failed), "failed_ids": failed,
            "per_theorem": {k: per[k] for k in sorted(per)}}


def report_rows(reports: Sequence[dict]) -> List[List[str]]:
    """Flat rows (id, choice, check, pass, detail): one per entry x choice x check."""
    rows = []
    for r in reports:
        for c in r["choices"]:
            for name, ok in c["checks"].items():
                detail = c.get("error", "")
                if name == "dimension" and "verdict" in c:
                    detail = json.dumps(c["verdict"], sort_keys=True)
                rows.append([r["id"], str(c["index"]), name, "pass" if ok else "fail", detail])
        for i, p in enumerate(r.get("probes", [])):
            detail = p.get("error") or json.dumps(p.get("verdict"), sort_keys=True)
            rows.append([r["id"], f"probe{i}", "probe:" + str(p["violates"]),
                         "pass" if p["pass"] else "fail", detail])
        for name, statuses in r.get("variants", {}).items():
            for i, s in enumerate(statuses):
                rows.append([r["id"], str(i), "variant:" + name, s, "informational"])
    return rows
