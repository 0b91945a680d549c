"""Exact sparse linear algebra over Q and Q(sqrt(d)).

The core is fraction-free integer Gauss-Jordan elimination on sparse rows.
Systems over Q(sqrt(d)) are rewritten over Q by splitting each unknown
x = x1 + x2*sqrt(d) into two rational unknowns.

Pivoting is deterministic: rows are inserted in order and each row pivots on
its lowest remaining column.  Since reduced row echelon form is unique, all
outputs are canonical whatever order the work is done in.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .scalar import ONE, ZERO, Scalar, as_scalar

__all__ = [
    "SparseMatrix",
    "integer_rref",
    "rational_nullspace",
    "nullspace",
    "rref_vectors",
    "rank",
    "reduce_vector",
]

Row = Dict[int, int]


class SparseMatrix:
    """Rows of ``{column: Scalar}`` with a fixed column count."""

    def __init__(self, rows: Iterable[Dict[int, object]], ncols: int):
        self.ncols = ncols
        self.rows: List[Dict[int, Scalar]] = []
        for r in rows:
            clean = {}
            for j, v in r.items():
                if not 0 <= j < ncols:
                    raise IndexError(f"column {j} out of range")
                v = as_scalar(v)
                if v:
                    clean[j] = v
            if clean:
                self.rows.append(clean)

    def field(self) -> int:
        d = 0
        for r in self.rows:
            for v in r.values():
                if v.d:
                    if d and d != v.d:
                        raise ValueError("matrix mixes quadratic fields")
                    d = v.d
        return d


def _primitive(row: Row) -> Row:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            break
    lead = row[min(row)]
    if lead < 0:
        g = -g
    if g != 1:
        row = {j: v // g for j, v in row.items()}
    return row


def _int_row(row: Dict[int, Fraction]) -> Row:
    den = 1
    for v in row.values():
        den = den * v.denominator // gcd(den, v.denominator)
    return _primitive({j: int(v * den) for j, v in row.items() if v})


def integer_rref(rows: Iterable[Dict[int, Fraction]]) -> Dict[int, Row]:
    """Reduced row echelon form as ``{pivot column: primitive integer row}``.

    Each returned row has zeros in every other pivot column.
    """
    pivots: Dict[int, Row] = {}
    for raw in rows:
        if not raw:
            continue
        r = _int_row(raw)
        while r:
            c = min(r)
            p = pivots.get(c)
            if p is None:
                pivots[c] = r
                break
            a, b = p[c], r[c]
            g = gcd(a, b)
            a, b = a // g, b // g
            new: Row = {j: a * v for j, v in r.items()}
            for j, v in p.items():
                w = new.get(j, 0) - b * v
                if w:
                    new[j] = w
                else:
                    new.pop(j, None)
            r = _primitive(new) if new else new
    # back substitution, highest pivot first
    cols = sorted(pivots)
    for idx in range(len(cols) - 1, -1, -1):
        c = cols[idx]
        p = pivots[c]
        for c2 in cols[:idx]:
            r = pivots[c2]
            b = r.get(c)
            if not b:
                continue
            a = p[c]
            g = gcd(a, b)
            a, b = a // g, b // g
            new = {j: a * v for j, v in r.items()}
            for j, v in p.items():
                w = new.get(j, 0) - b * v
                if w:
                    new[j] = w
                else:
                    new.pop(j, None)
            pivots[c2] = _primitive(new)
    return pivots


def rational_nullspace(rows: Iterable[Dict[int, Fraction]], ncols: int) -> List[Dict[int, Fraction]]:
    """Canonical nullspace basis: one vector per free column, that entry 1."""
    piv = integer_rref(rows)
    free = [j for j in range(ncols) if j not in piv]
    basis = []
    for j in free:
        v = {j: Fraction(1)}
        for c, r in piv.items():
            x = r.get(j)
            if x:
                v[c] = Fraction(-x, r[c])
        basis.append(v)
    return basis


def _split_rows(rows: Sequence[Dict[int, Scalar]], n: int, d: int):
    # (a + b s)(x1 + x2 s) = (a x1 + b d x2) + (b x1 + a x2) s,  s = sqrt(d)
    for r in rows:
        re: Dict[int, Fraction] = {}
        im: Dict[int, Fraction] = {}
        for j, v in r.items():
            if v.rat:
                re[j] = v.rat
                im[n + j] = v.rat
            if v.surd:
                re[n + j] = v.surd * d
                im[j] = v.surd
        if re:
            yield re
        if im:
            yield im


def nullspace(M: SparseMatrix) -> List[Dict[int, Scalar]]:
    """Exact nullspace basis of ``M`` over its scalar field, in reduced form.

    The basis is the canonical one: reduced echelon form with respect to the
    column order, one vector per free column.
    """
    d = M.field()
    n = M.ncols
    if not d:
        out = []
        for v in rational_nullspace((
                {j: x.rat for j, x in r.items()} for r in M.rows), n):
            out.append({j: Scalar._make(x, Fraction(0), 0) for j, x in v.items()})
        return _canonical(out, n)
    ns = rational_nullspace(_split_rows(M.rows, n, d), 2 * n)
    vecs = []
    for v in ns:
        vec = {}
        for j in range(n):
            a, b = v.get(j, Fraction(0)), v.get(n + j, Fraction(0))
            if a or b:
                vec[j] = Scalar._make(a, b, d) if b else Scalar._make(a, Fraction(0), 0)
        if vec:
            vecs.append(vec)
    return _canonical(vecs, n)


def _canonical(vecs, n):
    """Nullspace basis normalized so pivots (taken from the highest column) are 1."""
    red = rref_vectors(vecs, order=list(range(n - 1, -1, -1)))
    return [red[c] for c in sorted(red)]


def rref_vectors(vecs: Iterable[Dict[int, Scalar]], order: Optional[Sequence[int]] = None
                 ) -> Dict[int, Dict[int, Scalar]]:
    """Reduced echelon form of a list of vectors over Q(sqrt(d)).

    ``order`` gives column priority (first = pivoted first).  Returns
    ``{pivot column: vector}`` with the pivot entry equal to 1 and every other
    pivot column zero.
    """
    rank_of = None if order is None else {c: i for i, c in enumerate(order)}

    def lead(v):
        if rank_of is None:
            return min(v)
        return min(v, key=lambda c: rank_of.get(c, len(rank_of) + c))

    piv: Dict[int, Dict[int, Scalar]] = {}
    for v in vecs:
        v = {j: x for j, x in v.items() if x}
        for c, p in piv.items():
            x = v.get(c)
            if x:
                v = _axpy(v, -x, p)
        if not v:
            continue
        c = lead(v)
        inv = v[c].inverse()
        v = {j: x * inv for j, x in v.items()}
        for c2 in list(piv):
            x = piv[c2].get(c)
            if x:
                piv[c2] = _axpy(piv[c2], -x, v)
        piv[c] = v
    return piv


def reduce_vector(v: Dict[int, Scalar], piv: Dict[int, Dict[int, Scalar]]) -> Dict[int, Scalar]:
    """Remainder of ``v`` modulo the span of a reduced echelon basis."""
    v = {j: x for j, x in v.items() if x}
    for c, p in piv.items():
        x = v.get(c)
        if x:
            v = _axpy(v, -x, p)
    return v


def rank(vecs: Iterable[Dict[int, Scalar]]) -> int:
    return len(rref_vectors(vecs))


def _axpy(v: Dict[int, Scalar], a: Scalar, p: Dict[int, Scalar]) -> Dict[int, Scalar]:
    out = dict(v)
    for j, x in p.items():
        w = out.get(j, ZERO) + a * x
        if w:
            out[j] = w
        else:
            out.pop(j, None)
    return out
