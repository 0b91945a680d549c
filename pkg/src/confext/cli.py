"""Command-line front end.

Exit codes: 0 success, 2 parse error, 3 axiom failure, 4 constraint error,
5 catalog verification failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from typing import List, Optional, Sequence

from . import catalog as cat
from .algebra import AlgebraError, algebra_from_json, algebra_to_json, check_jacobi, check_skew_symmetry
from .lemmas import (LemmaError, check_bilinear, check_pair, check_rankfactor, check_twisted,
                     zero_solution_check)
from .modspec import ModuleError, check_module, module_from_json, module_to_json
from .polyring import PolyParseError, parse_poly
from .scalar import parse_scalar
from .solver import QuotientError, ext_dimension, parse_schedule

EXIT_OK, EXIT_PARSE, EXIT_AXIOM, EXIT_CONSTRAINT, EXIT_CATALOG = 0, 2, 3, 4, 5
KNOWN_FAMILIES = ("vir+vir", "virplusvir", "solvable", "type1", "type2", "custom")


class CliError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


# -- input helpers --------------------------------------------------------------------


def _load_json(text: str, what: str):
    """A JSON payload given inline or as a path to a UTF-8 file."""
    if text is None:
        raise CliError(EXIT_PARSE, f"missing {what}")
    src = text
    if not text.lstrip().startswith(("{", "[")) and os.path.exists(text):
        with open(text, encoding="utf-8") as fh:
            src = fh.read()
    try:
        return json.loads(src)
    except json.JSONDecodeError as exc:
        raise CliError(EXIT_PARSE, f"{what}: invalid JSON ({exc.msg})") from None


def _module_payload(text: str, what: str):
    # shorthand "trivial:eta=0" or "free:PA=D+L,PB=0"
    head, sep, rest = text.partition(":")
    if sep and head in ("trivial", "free") and not text.lstrip().startswith("{"):
        obj = {"kind": head}
        for part in rest.split(","):
            if part.strip():
                k, eq, v = part.partition("=")
                if not eq:
                    raise CliError(EXIT_PARSE, f"{what}: expected key=value in {part!r}")
                obj[k.strip()] = v.strip()
        return obj
    return _load_json(text, what)


def _build_algebra(text):
    obj = _load_json(text, "algebra")
    if not isinstance(obj, dict) or str(obj.get("family", "")).lower() not in KNOWN_FAMILIES:
        raise CliError(EXIT_PARSE, f"algebra: unknown or missing family in {text!r}")
    try:
        return algebra_from_json(obj)
    except (PolyParseError, KeyError, TypeError) as exc:
        raise CliError(EXIT_PARSE, f"algebra: {exc}") from None
    except (AlgebraError, ValueError) as exc:
        raise CliError(EXIT_CONSTRAINT, f"algebra: {exc}") from None


def _build_module(alg, text, what):
    obj = _module_payload(text, what)
    try:
        return module_from_json(alg, obj)
    except (PolyParseError, KeyError, TypeError) as exc:
        raise CliError(EXIT_PARSE, f"{what}: {exc}") from None
    except (ModuleError, ValueError) as exc:
        raise CliError(EXIT_CONSTRAINT, f"{what}: {exc}") from None


def _poly(text, what):
    try:
        return parse_poly(text)
    except PolyParseError as exc:
        raise CliError(EXIT_PARSE, f"{what}: {exc}") from None


def _schedule(text):
    if text is None:
        return None
    try:
        return parse_schedule(text)
    except ValueError as exc:
        raise CliError(EXIT_PARSE, str(exc)) from None


# -- output ---------------------------------------------------------------------------


def _emit(obj, fmt: str, text_lines: Optional[List[str]] = None,
          rows: Optional[List[List[str]]] = None, header: Optional[List[str]] = None,
          out=None):
    out = out or sys.stdout
    if fmt == "json":
        out.write(json.dumps(obj, indent=1, sort_keys=True, ensure_ascii=False) + "\n")
    elif fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\r\n")
        if header:
            w.writerow(header)
        for r in rows if rows is not None else _flat_rows(obj):
            w.writerow(r)
        out.write(buf.getvalue())
    else:
        lines = text_lines if text_lines is not None else _text_lines(obj)
        out.write("\n".join(lines) + "\n")


def _flat_rows(obj, prefix=""):
    rows = []
    if isinstance(obj, dict):
        for k in sorted(obj):
            rows.extend(_flat_rows(obj[k], f"{prefix}{k}."))
    elif isinstance(obj, list):
        for i, v in enumerate(obj):
            rows.extend(_flat_rows(v, f"{prefix}{i}."))
    else:
        rows.append([prefix.rstrip("."), json.dumps(obj) if not isinstance(obj, str) else obj])
    return rows


def _text_lines(obj):
    return [f"{k} = {v}" for k, v in _flat_rows(obj)]


# -- commands -------------------------------------------------------------------------


def cmd_check_axioms(args) -> int:
    alg = _build_algebra(args.algebra)
    report = {"algebra": algebra_to_json(alg),
              "skew_symmetry": check_skew_symmetry(alg),
              "jacobi": check_jacobi(alg), "modules": []}
    ok = report["skew_symmetry"]["pass"] and report["jacobi"]["pass"]
    for i, text in enumerate(args.module or []):
        m = _build_module(alg, text, f"module {i}")
        r = check_module(alg, m)
        report["modules"].append({"module": module_to_json(m), **r})
        ok = ok and r["pass"]
    report["pass"] = ok
    lines = [f"skew-symmetry: {'pass' if report['skew_symmetry']['pass'] else 'FAIL'}",
             f"jacobi: {'pass' if report['jacobi']['pass'] else 'FAIL'}"]
    lines += [f"module {i}: {'pass' if m['pass'] else 'FAIL'}"
              for i, m in enumerate(report["modules"])]
    _emit(report, args.format, lines)
    return EXIT_OK if ok else EXIT_AXIOM


def cmd_solve(args) -> int:
    sched = _schedule(args.degrees)
    alg = _build_algebra(args.algebra)
    sub = _build_module(alg, args.sub, "sub")
    quot = _build_module(alg, args.quot, "quot")
    bad = {}
    if not (check_skew_symmetry(alg)["pass"] and check_jacobi(alg)["pass"]):
        bad["algebra"] = "fails skew-symmetry or Jacobi"
    for name, m in (("sub", sub), ("quot", quot)):
        if not check_module(alg, m)["pass"]:
            bad[name] = "fails the module axiom"
    if bad:
        raise CliError(EXIT_AXIOM, "; ".join(f"{k}: {v}" for k, v in bad.items()))
    if args.field is not None:
        d = alg.field() or sub.field() or quot.field()
        if d not in (0, args.field):
            raise CliError(EXIT_CONSTRAINT, f"inputs live in Q(sqrt({d})), not Q(sqrt({args.field}))")
    try:
        res = ext_dimension(alg, sub, quot, sched)
    except QuotientError as exc:
        raise CliError(EXIT_CONSTRAINT, str(exc)) from None
    out = res.to_json()
    lines = [f"shape: {res.shape}"]
    lines += [f"N={r['N']}: dim Z={r['dimZ']} dim B={r['dimB']} dim Ext={r['dimExt']}"
              for r in res.per_degree]
    lines.append("verdict: " + (f"finite {res.finite}" if not res.growing
                                else f"growing {res.verdict['growing']}"))
    for i, b in enumerate(res.basis):
        lines.append(f"basis {i}: " + ", ".join(f"{k} = {v}" for k, v in b.to_json().items()))
    lines += [f"note: {n}" for n in res.notes]
    rows = [[str(r["N"]), str(r["dimZ"]), str(r["dimB"]), str(r["dimExt"])]
            for r in res.per_degree]
    _emit(out, args.format, lines, rows, ["N", "dimZ", "dimB", "dimExt"])
    return EXIT_OK


def _entries(args):
    entries = None
    if args.catalog:
        try:
            entries = cat.load_catalog(args.catalog)
        except (OSError, json.JSONDecodeError, cat.CatalogError, KeyError) as exc:
            raise CliError(EXIT_PARSE, f"catalog: {exc}") from None
    try:
        return cat.catalog_entries(args.filter, entries)
    except cat.CatalogError as exc:
        raise CliError(EXIT_PARSE, str(exc)) from None


def cmd_verify_catalog(args) -> int:
    sched = _schedule(args.degrees)
    entries = _entries(args)
    reports = cat.verify_catalog(entries, jobs=max(1, args.jobs), schedule=sched)
    summary = cat.summarize(reports)
    doc = {"summary": summary, "reports": reports}
    lines = []
    for r in reports:
        lines.append(f"{'pass' if r['pass'] else 'FAIL'}  {r['id']}  claimed={r['claimed_dim']}")
    lines.append(f"{summary['passed']}/{summary['entries']} entries pass")
    for thm, s in summary["per_theorem"].items():
        lines.append(f"  {thm}: {s['passed']}/{s['entries']}")
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="") as fh:
            _emit(doc, args.format, lines, cat.report_rows(reports),
                  ["id", "choice", "check", "result", "detail"], out=fh)
    else:
        _emit(doc, args.format, lines, cat.report_rows(reports),
              ["id", "choice", "check", "result", "detail"])
    if summary["failed"]:
        sys.stderr.write(f"catalog verification failed: {summary['failed_ids'][0]}\n")
        return EXIT_CATALOG
    return EXIT_OK


def cmd_dump_catalog(args) -> int:
    text = cat.dump_catalog(_entries(args))
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_lemma(args) -> int:
    try:
        if args.lemma == "pair":
            out = check_pair(_poly(args.a, "a"), _poly(args.b, "b"), args.N)
        elif args.lemma == "twisted":
            out = check_twisted(_poly(args.a, "a"), _poly(args.b, "b"), args.N)
        elif args.lemma == "zero":
            vals = []
            for name in ("a", "abar", "b", "bbar"):
                try:
                    vals.append(parse_scalar(getattr(args, name)))
                except ValueError as exc:
                    raise CliError(EXIT_PARSE, f"{name}: {exc}") from None
            out = {"lemma": "zero", **zero_solution_check(*vals, args.N)}
            out["dim"] = out["nullity"]
        elif args.lemma == "rankfactor":
            out = check_rankfactor(_poly(args.F, "F"))
        else:
            out = check_bilinear(_poly(args.a, "a"), _poly(args.F, "F"), args.N)
    except LemmaError as exc:
        raise CliError(EXIT_CONSTRAINT, str(exc)) from None
    _emit(out, args.format)
    return EXIT_OK


# -- parser ---------------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    # usage errors still produce a JSON error object on stdout
    def error(self, message):
        sys.stdout.write(json.dumps({"error": message, "exit_code": EXIT_PARSE}) + "\n")
        self.print_usage(sys.stderr)
        self.exit(EXIT_PARSE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="confext",
                                description="Extensions of rank-one modules over rank-two "
                                            "Lie conformal algebras.")
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("json", "csv", "text"), default="json")
    sp = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    a = sp.add_parser("check-axioms", parents=[fmt], help="skew-symmetry, Jacobi, module axioms")
    a.add_argument("--algebra", required=True, help="algebra JSON or file path")
    a.add_argument("--module", action="append", help="module JSON, file path or shorthand")
    a.set_defaults(func=cmd_check_axioms)

    s = sp.add_parser("solve-ext", parents=[fmt], help="dimension of Ext by degree stabilization")
    s.add_argument("--algebra", required=True)
    s.add_argument("--sub", required=True, help="submodule (e.g. trivial:eta=0)")
    s.add_argument("--quot", required=True, help="quotient module")
    s.add_argument("--degrees", help="comma-separated increasing degree bounds")
    s.add_argument("--field", type=int, help="expected quadratic field d (0 for Q)")
    s.set_defaults(func=cmd_solve)

    v = sp.add_parser("verify-catalog", parents=[fmt], help="verify encoded classification rows")
    v.add_argument("--filter", help="e.g. family=type2,a=-6")
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--degrees")
    v.add_argument("--catalog", help="catalog JSON file (default: bundled)")
    v.add_argument("--output", help="write the report here instead of stdout")
    v.set_defaults(func=cmd_verify_catalog)

    d = sp.add_parser("dump-catalog", help="canonical catalog JSON")
    d.add_argument("--filter")
    d.add_argument("--catalog")
    d.add_argument("--output")
    d.set_defaults(func=cmd_dump_catalog)

    lm = sp.add_parser("lemma", help="closed-form solvers with an oracle cross-check")
    ls = lm.add_subparsers(dest="lemma", required=True, parser_class=_Parser)
    for name, fields in (("pair", ("a", "b")), ("twisted", ("a", "b")),
                         ("zero", ("a", "abar", "b", "bbar")), ("rankfactor", ("F",)),
                         ("bilinear", ("a", "F"))):
        q = ls.add_parser(name, parents=[fmt])
        for f in fields:
            q.add_argument("--" + f, required=True)
        if name != "rankfactor":
            q.add_argument("--N", type=int, default=6)
        q.set_defaults(func=cmd_lemma)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        fmt = getattr(args, "format", "json")
        if fmt == "json":
            sys.stdout.write(json.dumps({"error": str(exc), "exit_code": exc.code}) + "\n")
        sys.stderr.write(f"error: {exc}\n")
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
