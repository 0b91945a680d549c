"""Sparse polynomials in the ordered variables (D, L, M) = (∂, λ, μ).

Coefficients are :class:`~confext.scalar.Scalar`.  Terms are kept in a dict
keyed by exponent triples; zero coefficients are never stored.  Iteration and
printing use descending graded lexicographic order.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Dict, Iterable, Mapping, Optional, Tuple

from .scalar import ONE, ZERO, Scalar, as_scalar

__all__ = [
    "Poly",
    "Exp",
    "D",
    "L",
    "M",
    "const",
    "substitute",
    "is_skew_symmetric",
    "coefficient_map",
    "parse_poly",
    "PolyParseError",
    "term_order_key",
]

Exp = Tuple[int, int, int]

VARS = ("D", "L", "M")


def term_order_key(e: Exp):
    """Sort key putting higher total degree first, then lex on (∂, λ, μ)."""
    return (-(e[0] + e[1] + e[2]), -e[0], -e[1], -e[2])


class Poly:
    """Immutable sparse polynomial in ∂, λ, μ."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Optional[Mapping[Exp, object]] = None):
        clean: Dict[Exp, Scalar] = {}
        if terms:
            for e, c in terms.items():
                if len(e) != 3 or any((not isinstance(k, int)) or k < 0 for k in e):
                    raise ValueError(f"bad exponent {e!r}")
                c = as_scalar(c)
                if c is NotImplemented:
                    raise TypeError(f"bad coefficient {c!r}")
                if c:
                    clean[tuple(e)] = c
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "_hash", None)

    @classmethod
    def _raw(cls, terms: Dict[Exp, Scalar]) -> "Poly":
        obj = object.__new__(cls)
        object.__setattr__(obj, "terms", terms)
        object.__setattr__(obj, "_hash", None)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    def __reduce__(self):
        return (Poly, (dict(self.terms),))

    # -- basic queries ----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def degree_in(self, var: int) -> int:
        return max((e[var] for e in self.terms), default=-1)

    def uses(self, var: int) -> bool:
        return any(e[var] for e in self.terms)

    def coeff(self, e: Exp) -> Scalar:
        return self.terms.get(tuple(e), ZERO)

    def field(self) -> int:
        d = 0
        for c in self.terms.values():
            if c.d:
                d = c.d
        return d

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: term_order_key(kv[0]))

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        o = as_poly(other)
        if o is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for e, c in o.terms.items():
            v = out.get(e)
            if v is None:
                out[e] = c
            else:
                v = v + c
                if v:
                    out[e] = v
                else:
                    del out[e]
        return Poly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        o = as_poly(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = as_poly(other)
        if o is NotImplemented:
            return NotImplemented
        return o - self

    def scale(self, k) -> "Poly":
        k = as_scalar(k)
        if not k:
            return Poly._raw({})
        return Poly._raw({e: c * k for e, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (Scalar, int, Fraction)):
            return self.scale(other)
        o = as_poly(other)
        if o is NotImplemented:
            return NotImplemented
        out: Dict[Exp, Scalar] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2])
                v = out.get(e)
                out[e] = c1 * c2 if v is None else v + c1 * c2
        return Poly._raw({e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result = Poly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __truediv__(self, other):
        k = as_scalar(other)
        if k is NotImplemented:
            return NotImplemented
        return self.scale(k.inverse())

    # -- comparisons ------------------------------------------------------

    def __eq__(self, other):
        o = as_poly(other)
        if o is NotImplemented:
            return NotImplemented
        return self.terms == o.terms

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash(frozenset(self.terms.items()))
            object.__setattr__(self, "_hash", h)
        return h

    # -- constructors -----------------------------------------------------

    @staticmethod
    def one() -> "Poly":
        return Poly._raw({(0, 0, 0): ONE})

    @staticmethod
    def zero() -> "Poly":
        return Poly._raw({})

    @staticmethod
    def monomial(e: Exp, c=1) -> "Poly":
        return Poly({tuple(e): c})

    # -- evaluation helpers -----------------------------------------------

    def subs(self, d=None, l=None, m=None) -> "Poly":
        """Simultaneous substitution; ``None`` leaves a variable unchanged."""
        return substitute(self, d if d is not None else D, l if l is not None else L,
                          m if m is not None else M)

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"Poly('{format_poly(self)}')"

    @classmethod
    def parse(cls, text: str, env: Optional[Mapping[str, object]] = None) -> "Poly":
        return parse_poly(text, env)


def as_poly(x):
    if isinstance(x, Poly):
        return x
    s = as_scalar(x) if not isinstance(x, str) else NotImplemented
    if s is NotImplemented:
        return NotImplemented
    return Poly._raw({(0, 0, 0): s} if s else {})


def const(c) -> Poly:
    return as_poly(as_scalar(c))


D = Poly._raw({(1, 0, 0): ONE})
L = Poly._raw({(0, 1, 0): ONE})
M = Poly._raw({(0, 0, 1): ONE})


def _powers(p: Poly, n: int, cache: dict) -> Poly:
    key = (id(p), n)
    r = cache.get(key)
    if r is None:
        r = Poly.one() if n == 0 else _powers(p, n - 1, cache) * p
        cache[key] = r
    return r


def substitute(p: Poly, img_d, img_l, img_m) -> Poly:
    """Replace ∂, λ, μ simultaneously by the given polynomials and expand."""
    imgs = [as_poly(img_d), as_poly(img_l), as_poly(img_m)]
    # fast path: identity images keep exponents
    ident = [imgs[0] == D, imgs[1] == L, imgs[2] == M]
    cache: dict = {}
    out: Dict[Exp, Scalar] = {}
    for e, c in p.terms.items():
        term = Poly._raw({(0, 0, 0): c})
        kept = [0, 0, 0]
        for v in range(3):
            if e[v] == 0:
                continue
            if ident[v]:
                kept[v] = e[v]
            else:
                term = term * _powers(imgs[v], e[v], cache)
        for te, tc in term.terms.items():
            k = (te[0] + kept[0], te[1] + kept[1], te[2] + kept[2])
            cur = out.get(k)
            out[k] = tc if cur is None else cur + tc
    return Poly._raw({e: c for e, c in out.items() if c})


def is_skew_symmetric(q: Poly) -> bool:
    """True iff ``Q(∂,λ) = -Q(∂,-λ-∂)``; μ must not occur."""
    if q.uses(2):
        raise ValueError("skew-symmetry test applies to polynomials in (D, L) only")
    return (q + substitute(q, D, -L - D, M)).is_zero()


def coefficient_map(p: Poly):
    """Canonically ordered list of ``(exponent, coefficient)`` pairs."""
    return p.sorted_terms()


# -- printing ---------------------------------------------------------------


def _fmt_coeff(c: Scalar) -> str:
    s = str(c)
    return f"({s})" if c.surd and c.rat else s


def format_poly(p: Poly) -> str:
    if not p.terms:
        return "0"
    parts = []
    for e, c in p.sorted_terms():
        mono = []
        for name, k in zip(VARS, e):
            if k == 1:
                mono.append(name)
            elif k > 1:
                mono.append(f"{name}^{k}")
        neg = False
        if c.surd and c.rat:
            coef = _fmt_coeff(c)
        else:
            neg = (c.rat < 0) if not c.surd else (c.surd < 0)
            coef = str(-c if neg else c)
        if mono:
            body = "*".join(mono) if coef == "1" else coef + "*" + "*".join(mono)
        else:
            body = coef
        if not parts:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append(("-" if neg else "+") + body)
    return "".join(parts)


# -- parsing ----------------------------------------------------------------


class PolyParseError(ValueError):
    pass


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\*\*|[-+*/^()]))")


def _tokenize(text: str):
    pos = 0
    toks = []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise PolyParseError(f"unexpected character at {pos} in {text!r}")
        num, name, op = m.groups()
        if num is not None:
            toks.append(("num", int(num)))
        elif name is not None:
            toks.append(("name", name))
        else:
            toks.append(("op", "^" if op == "**" else op))
        pos = m.end()
    return toks


class _Parser:
    def __init__(self, text: str, env: Mapping[str, object]):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0
        self.env = env

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self, kind=None, val=None):
        tok = self.peek()
        if tok[0] is None or (kind and tok[0] != kind) or (val and tok[1] != val):
            raise PolyParseError(f"unexpected token {tok[1]!r} in {self.text!r}")
        self.i += 1
        return tok

    def parse(self) -> Poly:
        if not self.toks:
            raise PolyParseError("empty expression")
        p = self.expr()
        if self.i != len(self.toks):
            raise PolyParseError(f"trailing input in {self.text!r}")
        return p

    def expr(self) -> Poly:
        tok = self.peek()
        if tok == ("op", "-"):
            self.take()
            p = -self.term()
        else:
            if tok == ("op", "+"):
                self.take()
            p = self.term()
        while self.peek() in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            t = self.term()
            p = p + t if op == "+" else p - t
        return p

    def term(self) -> Poly:
        p = self.unary()
        while True:
            tok = self.peek()
            if tok == ("op", "*"):
                self.take()
                p = p * self.unary()
            elif tok == ("op", "/"):
                self.take()
                q = self.unary()
                if q.degree() > 0:
                    raise PolyParseError(f"division by non-constant in {self.text!r}")
                if q.is_zero():
                    raise PolyParseError(f"division by zero in {self.text!r}")
                p = p / q.coeff((0, 0, 0))
            else:
                return p

    def unary(self) -> Poly:
        if self.peek() == ("op", "-"):
            self.take()
            return -self.unary()
        return self.power()

    def power(self) -> Poly:
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            neg = False
            if self.peek() == ("op", "-"):
                self.take()
                neg = True
            n = self.take("num")[1]
            if neg:
                if base.degree() > 0:
                    raise PolyParseError("negative power of non-constant")
                return const(base.coeff((0, 0, 0)) ** (-n))
            return base ** n
        return base

    def atom(self) -> Poly:
        kind, val = self.peek()
        if kind == "num":
            self.take()
            return const(val)
        if kind == "op" and val == "(":
            self.take()
            p = self.expr()
            self.take("op", ")")
            return p
        if kind == "name":
            self.take()
            if val == "sqrt":
                self.take("op", "(")
                n = self.take("num")[1]
                self.take("op", ")")
                return const(_sqrt_int(n))
            if val in ("D", "L", "M"):
                return {"D": D, "L": L, "M": M}[val]
            if val in self.env:
                v = self.env[val]
                return v if isinstance(v, Poly) else const(v)
            raise PolyParseError(f"unknown name {val!r} in {self.text!r}")
        raise PolyParseError(f"unexpected token {val!r} in {self.text!r}")


def _sqrt_int(n: int) -> Scalar:
    # pull out square factors so the surd part is squarefree
    k, r = 1, n
    f = 2
    while f * f <= r:
        while r % (f * f) == 0:
            r //= f * f
            k *= f
        f += 1
    if r == 1:
        return Scalar(k)
    return Scalar(0, k, r)


def parse_poly(text: str, env: Optional[Mapping[str, object]] = None) -> Poly:
    """Parse an expression in D, L, M with numbers, ``sqrt(n)``, + - * / ^ and
    parentheses.  Other identifiers are looked up in ``env``."""
    return _Parser(str(text), env or {}).parse()


def poly_from_coeffs(items: Iterable[Tuple[Exp, Scalar]]) -> Poly:
    return Poly(dict(items))
