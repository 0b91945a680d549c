"""Closed-form solutions of the recurring polynomial equations, plus the
generic coefficient-matching systems they are checked against.

Univariate inputs are polynomials in L; bivariate F(λ, μ) uses L and M.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from .linalg import SparseMatrix, nullspace, rref_vectors
from .polyring import D, L, M, Poly, const, substitute
from .scalar import ONE, ZERO, Scalar, as_scalar

__all__ = [
    "LemmaError",
    "solve_pair_equation",
    "pair_equation_nullspace",
    "twisted_residual",
    "solve_twisted_difference",
    "twisted_difference_nullspace",
    "zero_solution_check",
    "antisymmetric_rank_factor",
    "RankFactor",
    "solve_bilinear_factor",
    "bilinear_factor_nullspace",
    "span_equal",
    "in_lambda",
    "plucker_holds",
    "bilinear_residual",
    "pair_closed_basis",
    "check_pair",
    "check_twisted",
    "check_rankfactor",
    "check_bilinear",
]


class LemmaError(ValueError):
    pass


def in_lambda(p: Poly) -> bool:
    return not p.uses(0) and not p.uses(2)


def _mu(p: Poly) -> Poly:
    return substitute(p, D, M, M)


def _coeffs_l(p: Poly) -> Dict[int, Scalar]:
    return {e[1]: c for e, c in p.terms.items()}


def span_equal(a: List[Poly], b: List[Poly]) -> bool:
    """Whether two lists of polynomials span the same space."""
    keys = sorted({e for p in a + b for e in p.terms})
    idx = {e: i for i, e in enumerate(keys)}

    def vecs(ps):
        return [{idx[e]: c for e, c in p.terms.items()} for p in ps]

    ra = len(rref_vectors(vecs(a)))
    rb = len(rref_vectors(vecs(b)))
    rab = len(rref_vectors(vecs(a) + vecs(b)))
    return ra == rb == rab


def _linear_solve(unknowns: List[Poly], identity, extra: Optional[Poly] = None) -> List[Dict[int, Scalar]]:
    """Nullspace of the coefficient rows of ``identity`` applied to each unknown.

    ``identity`` maps a candidate polynomial to the residual polynomial.  When
    ``extra`` is given it is appended as a last column (an affine right side).
    """
    cols = [identity(u) for u in unknowns]
    if extra is not None:
        cols.append(extra)
    rows: Dict[tuple, Dict[int, Scalar]] = {}
    for j, p in enumerate(cols):
        for e, c in p.terms.items():
            rows.setdefault(e, {})[j] = c
    return nullspace(SparseMatrix(rows.values(), len(cols)))


# -- a(λ)d(μ) - b(μ)c(λ) = 0 ---------------------------------------------------


@dataclass(frozen=True)
class PairSolution:
    kind: str  # "multiple", "c-free", "d-free"
    c: Poly
    d: Poly

    def describe(self) -> str:
        if self.kind == "multiple":
            return f"c = k*({self.c}), d = k*({_mu(self.d)})"
        if self.kind == "c-free":
            return "d = 0, c arbitrary"
        return "c = 0, d arbitrary"


def solve_pair_equation(a: Poly, b: Poly) -> PairSolution:
    """Solve a(λ)d(μ) - b(μ)c(λ) = 0 for polynomials c, d."""
    if not (in_lambda(a) and in_lambda(b)):
        raise LemmaError("a and b must be polynomials in L")
    if a.is_zero() and b.is_zero():
        raise LemmaError("a = b = 0 makes the equation vacuous")
    if b.is_zero():
        return PairSolution("c-free", Poly.zero(), Poly.zero())
    if a.is_zero():
        return PairSolution("d-free", Poly.zero(), Poly.zero())
    return PairSolution("multiple", a, b)


def pair_equation_nullspace(a: Poly, b: Poly, N: int) -> Tuple[List[Poly], List[Poly]]:
    """Solutions (c, d) of degree <= N found by coefficient matching."""
    unk = [("c", j) for j in range(N + 1)] + [("d", j) for j in range(N + 1)]
    b_mu = _mu(b)

    def ident(u):
        kind, j = u
        if kind == "c":
            return -(b_mu * L ** j)
        return a * M ** j

    cols = [ident(u) for u in unk]
    rows: Dict[tuple, Dict[int, Scalar]] = {}
    for k, p in enumerate(cols):
        for e, c in p.terms.items():
            rows.setdefault(e, {})[k] = c
    ns = nullspace(SparseMatrix(rows.values(), len(unk)))
    cs, ds = [], []
    for v in ns:
        c = Poly({(0, unk[k][1], 0): x for k, x in v.items() if unk[k][0] == "c"})
        d = Poly({(0, unk[k][1], 0): x for k, x in v.items() if unk[k][0] == "d"})
        cs.append(c)
        ds.append(d)
    return cs, ds


# -- twisted difference ---------------------------------------------------------


def twisted_residual(c: Poly, a: Poly, b: Poly) -> Poly:
    """c(∂,λ)b(μ) + c(∂+λ,μ)a(λ) - c(∂,μ)b(λ) - c(∂+μ,λ)a(μ)."""
    c_mu = _mu(c)
    return (c * _mu(b) + substitute(c_mu, D + L, L, M) * a
            - c_mu * b - substitute(c, D + M, L, M) * _mu(a))


def _truncate_basis(gens: List[Poly], N: int) -> List[Poly]:
    keep = [g for g in gens if not g.is_zero() and g.degree() <= N]
    keys = sorted({e for p in keep for e in p.terms})
    idx = {e: i for i, e in enumerate(keys)}
    piv = rref_vectors([{idx[e]: c for e, c in p.terms.items()} for p in keep])
    return [Poly({keys[i]: x for i, x in piv[k].items()}) for k in sorted(piv)]


def solve_twisted_difference(a: Poly, b: Poly, N: int) -> List[Poly]:
    """Basis of degree <= N solutions c(∂,λ) of the twisted difference equation."""
    if not (in_lambda(a) and in_lambda(b)):
        raise LemmaError("a and b must be polynomials in L")
    if N < 0:
        raise LemmaError("N must be >= 0")
    if a.is_zero() and b.is_zero():
        gens = [D ** (n - j) * L ** j for n in range(N + 1) for j in range(n + 1)]
    elif a == b:
        gens = [a * ((D + L) ** e - D ** e) for e in range(1, N + 1)]
        gens += [L ** e for e in range(N + 1)]
    else:
        gens = [a * (D + L) ** e - b * D ** e for e in range(N + 1)]
    return _truncate_basis(gens, N)


def twisted_difference_nullspace(a: Poly, b: Poly, N: int) -> List[Poly]:
    unk = [D ** (n - j) * L ** j for n in range(N + 1) for j in range(n + 1)]
    ns = _linear_solve(unk, lambda u: twisted_residual(u, a, b))
    return [sum((unk[k] * x for k, x in v.items()), Poly.zero()) for v in ns]


# -- c(∂+λ,μ)(∂+aλ+b) - c(∂,μ)(∂+μ+āλ+b̄) = 0 -----------------------------------


def zero_solution_check(a, abar, b, bbar, N: int) -> dict:
    """Confirm, by exact elimination, that the only solution c(∂,λ) of degree <= N is 0."""
    a, abar, b, bbar = (as_scalar(x) for x in (a, abar, b, bbar))
    left = D + L * a + const(b)
    right = D + M + L * abar + const(bbar)
    unk = [D ** (n - j) * L ** j for n in range(N + 1) for j in range(n + 1)]

    def ident(u):
        u_mu = _mu(u)
        return substitute(u_mu, D + L, L, M) * left - u_mu * right

    ns = _linear_solve(unk, ident)
    return {"N": N, "unknowns": len(unk), "rank": len(unk) - len(ns),
            "nullity": len(ns), "only_zero": not ns}


# -- antisymmetric F = P1(λ)P2(μ) - P1(μ)P2(λ) ---------------------------------


def _f_matrix(F: Poly) -> Dict[Tuple[int, int], Scalar]:
    return {(e[1], e[2]): c for e, c in F.terms.items()}


@dataclass(frozen=True)
class RankFactor:
    rank: int
    P1: Optional[Poly]
    P2: Optional[Poly]
    i0: Optional[int]
    j0: Optional[int]
    pivot: Optional[Scalar]


def antisymmetric_rank_factor(F: Poly) -> RankFactor:
    """Rank of the coefficient matrix of an antisymmetric F(λ, μ), and when it
    is 2, a pair with P1(λ)P2(μ) - P1(μ)P2(λ) = F."""
    if F.uses(0):
        raise LemmaError("F must be a polynomial in L and M")
    if F.is_zero():
        raise LemmaError("F must be nonzero")
    if F != -substitute(F, D, M, L):
        raise LemmaError("F must satisfy F(λ,μ) = -F(μ,λ)")
    f = _f_matrix(F)
    n = max(max(i, j) for i, j in f) + 1
    rows = [{j: f[(i, j)] for j in range(n) if (i, j) in f} for i in range(n)]
    rk = len(rref_vectors([r for r in rows if r]))
    if rk != 2:
        return RankFactor(rk, None, None, None, None, None)
    i0, j0 = min(((i, j) for (i, j) in f if i < j), key=lambda ij: (ij[0] + ij[1], ij[0]))
    piv = f[(i0, j0)]
    P1 = Poly({(0, k, 0): f[(k, j0)] for k in range(n) if (k, j0) in f})
    P2 = Poly({(0, k, 0): -f[(k, i0)] / piv for k in range(n) if (k, i0) in f})
    return RankFactor(rk, P1, P2, i0, j0, piv)


def plucker_holds(F: Poly) -> bool:
    """The four-index relations f_ij f_kl - f_ik f_jl + f_jk f_il = 0 for all indices."""
    f = _f_matrix(F)
    n = max(max(i, j) for i, j in f) + 1
    g = lambda i, j: f.get((i, j), ZERO)
    for i in range(n):
        for j in range(n):
            for k in range(n):
                for l in range(n):
                    if g(i, j) * g(k, l) - g(i, k) * g(j, l) + g(j, k) * g(i, l):
                        return False
    return True


# -- a(λ)b(μ) - a(μ)b(λ) = F ------------------------------------------------------


@dataclass(frozen=True)
class BilinearSolution:
    particular: Poly  # b0
    homogeneous: Poly  # a; solutions are b0 + k*a


def solve_bilinear_factor(a: Poly, F: Poly) -> Optional[BilinearSolution]:
    """Solve a(λ)b(μ) - a(μ)b(λ) = F for b; None when no solution exists."""
    if not in_lambda(a):
        raise LemmaError("a must be a polynomial in L")
    rf = antisymmetric_rank_factor(F)
    if rf.rank != 2:
        raise LemmaError(f"F must have coefficient rank 2, got {rf.rank}")
    ai0 = a.coeff((0, rf.i0, 0))
    aj0 = a.coeff((0, rf.j0, 0))
    if not ai0 and not aj0:
        if a.is_zero():
            raise LemmaError("a must have a nonzero coefficient at L^i0 or L^j0")
        return None
    if a != rf.P1 * (ai0 / rf.pivot) + rf.P2 * aj0:
        return None
    if ai0:
        b0 = rf.P2 * (rf.pivot / ai0)
    else:
        b0 = -rf.P1 / aj0
    return BilinearSolution(b0, a)


def bilinear_residual(a: Poly, b: Poly, F: Poly) -> Poly:
    return a * _mu(b) - _mu(a) * b - F


def bilinear_factor_nullspace(a: Poly, F: Poly, N: int) -> Tuple[Optional[Poly], List[Poly]]:
    """Affine solution set of the bilinear equation by coefficient matching:
    a particular b (or None) and a basis of the homogeneous solutions."""
    unk = [L ** j for j in range(N + 1)]
    ns = _linear_solve(unk, lambda u: a * _mu(u) - _mu(a) * u, extra=-F)
    last = len(unk)
    particular = None
    homog = []
    for v in ns:
        p = sum((unk[k] * x for k, x in v.items() if k != last), Poly.zero())
        w = v.get(last)
        if not w:
            homog.append(p)
        elif particular is None:
            particular = p / w
        else:
            homog.append(p / w - particular)
    return particular, homog


# -- closed form against coefficient matching -----------------------------------------


def _pair_vec(c: Poly, d: Poly) -> Poly:
    # pack (c(λ), d(λ)) into one polynomial so spans can be compared
    return c + D * d


def pair_closed_basis(a: Poly, b: Poly, N: int) -> List[Tuple[Poly, Poly]]:
    """Basis of the degree <= N solutions (c, d) described by the closed form."""
    sol = solve_pair_equation(a, b)
    if sol.kind == "multiple":
        return [(a, b)] if max(a.degree(), b.degree()) <= N else []
    if sol.kind == "c-free":
        return [(L ** j, Poly.zero()) for j in range(N + 1)]
    return [(Poly.zero(), L ** j) for j in range(N + 1)]


def check_pair(a: Poly, b: Poly, N: int) -> dict:
    sol = solve_pair_equation(a, b)
    closed = [_pair_vec(c, d) for c, d in pair_closed_basis(a, b, N)]
    cs, ds = pair_equation_nullspace(a, b, N)
    oracle = [_pair_vec(c, d) for c, d in zip(cs, ds)]
    return {"lemma": "pair", "solution": sol.describe(), "dim": len(closed),
            "oracle_dim": len(oracle), "agree": span_equal(closed, oracle)}


def check_twisted(a: Poly, b: Poly, N: int) -> dict:
    basis = solve_twisted_difference(a, b, N)
    oracle = twisted_difference_nullspace(a, b, N)
    return {"lemma": "twisted", "basis": [str(p) for p in basis], "dim": len(basis),
            "residuals_zero": all(twisted_residual(p, a, b).is_zero() for p in basis),
            "oracle_dim": len(oracle), "agree": span_equal(basis, oracle)}


def check_rankfactor(F: Poly) -> dict:
    rf = antisymmetric_rank_factor(F)
    out = {"lemma": "rankfactor", "rank": rf.rank, "plucker": plucker_holds(F)}
    if rf.rank == 2:
        P1, P2 = rf.P1, rf.P2
        out.update({"P1": str(P1), "P2": str(P2), "i0": rf.i0, "j0": rf.j0,
                    "expansion_ok": P1 * _mu(P2) - _mu(P1) * P2 == F})
        out["agree"] = out["expansion_ok"] and out["plucker"]
    else:
        out["agree"] = not out["plucker"]
    return out


def check_bilinear(a: Poly, F: Poly, N: int) -> dict:
    sol = solve_bilinear_factor(a, F)
    part, homog = bilinear_factor_nullspace(a, F, N)
    out: Dict[str, object] = {"lemma": "bilinear", "oracle_has_solution": part is not None}
    if sol is None:
        out.update({"solvable": False, "agree": part is None})
        return out
    ok = bilinear_residual(a, sol.particular, F).is_zero()
    agree = part is not None and ok
    if agree:
        # the oracle's solution set is particular + span(homog); compare both ways
        agree = (span_equal([sol.homogeneous], homog)
                 and span_equal([sol.homogeneous], [sol.homogeneous] + [part - sol.particular]))
    out.update({"solvable": True, "particular": str(sol.particular),
                "homogeneous": str(sol.homogeneous), "residual_zero": ok, "agree": agree})
    return out
