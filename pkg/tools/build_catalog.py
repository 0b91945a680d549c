"""Generate src/confext/data/catalog.json.

Run from the repository root:  python3 tools/build_catalog.py
The JSON file is the shipped artifact; this script only documents how it
was assembled and lets it be regenerated deterministically.
"""

import json
import os

OUT = os.path.join(os.path.dirname(__file__), "..", "src", "confext", "data", "catalog.json")

ENTRIES = []

S19 = ("-5/2+sqrt(19)/2", "7/2+sqrt(19)/2")
S19M = ("-5/2-sqrt(19)/2", "7/2-sqrt(19)/2")
S22 = ("-3+sqrt(22)/2", "4+sqrt(22)/2")
S22M = ("-3-sqrt(22)/2", "4-sqrt(22)/2")


def entry(id, theorem, family, shape, claimed, constraints, algebra, sub, quot,
          templates, scalars, choices, probes=(), anchor="", shift=None, helpers=None,
          variants=None, tags=None):
    e = {
        "id": id,
        "theorem": theorem,
        "section": theorem.split(".")[0],
        "family": family,
        "shape": shape,
        "claimed_dim": claimed,
        "provenance": {"section": theorem.split(".")[0], "anchor": anchor},
        "constraints": list(constraints),
        "algebra": algebra,
        "sub": sub,
        "quot": quot,
        "templates": templates,
        "scalars": list(scalars),
        "choices": list(choices),
        "probes": list(probes),
    }
    if shift:
        e["shift"] = shift
    if helpers:
        e["helpers"] = helpers
    if variants:
        e["variants"] = variants
    e["tags"] = dict(tags or {})
    ENTRIES.append(e)


def probe(violates, choice):
    return {"violates": violates, "choice": choice}


# -- trivial by trivial ---------------------------------------------------------

entry("S2.T0", "S2.T0", "vir+vir", "T0", 1,
      ["etabar == eta"],
      {"family": "vir+vir"},
      {"kind": "trivial", "eta": "eta"},
      {"kind": "trivial", "eta": "etabar"},
      {"t": "k"}, ["k"],
      [{"eta": "0", "etabar": "0"}, {"eta": "-3/2", "etabar": "-3/2"}],
      [probe("etabar == eta", {"eta": "0", "etabar": "1"})],
      anchor=r"dim($Ext(\mathbb{C}c_{\eta},\mathbb{C}c_{\bar{\eta}})$)=$ \delta_{\eta,\bar{\eta}} $")

# -- Vir + Vir --------------------------------------------------------------------


for gen, dval, slot in (("A", "1", "fA"), ("B", "0", "fB")):
    k = "1" if gen == "A" else "2"
    sc = "s" if gen == "A" else "t"
    # T1
    for alpha, tmpl in (("1", "L^2"), ("2", "L^3")):
        entry(f"S3.T1.delta{k}.alpha{k}={alpha}", "S3.T1", "vir+vir", "T1", 1,
              [f"dquot == {dval}", f"alpha == {alpha}", "beta + eta == 0"],
              {"family": "vir+vir"},
              {"kind": "trivial", "eta": "eta"},
              {"delta": ["dquot", "1-dquot"], f"alpha{k}": "alpha", f"beta{k}": "beta"},
              {slot: f"{sc}*{tmpl}"}, [sc],
              [{"dquot": dval, "alpha": alpha, "beta": "0", "eta": "0"},
               {"dquot": dval, "alpha": alpha, "beta": "1", "eta": "-1"}],
              [probe("alpha == " + alpha, {"dquot": dval, "alpha": "3", "beta": "1", "eta": "-1"}),
               probe("beta + eta == 0", {"dquot": dval, "alpha": alpha, "beta": "1", "eta": "0"})],
              anchor=r"s_1\lambda^2,&\alpha_1=1,\\ s_2\lambda^3,&\alpha_1=2" if gen == "A"
              else r"t_1\lambda^2,&\alpha_2=1,\\ t_2\lambda^3,&\alpha_2=2")
    # T2
    entry(f"S3.T2.delta{k}", "S3.T2", "vir+vir", "T2", 1,
          [f"dsub == {dval}", "alpha == 1", "beta + eta == 0"],
          {"family": "vir+vir"},
          {"delta": ["dsub", "1-dsub"], f"alpha{k}": "alpha", f"beta{k}": "beta"},
          {"kind": "trivial", "eta": "eta"},
          {slot: sc, "h": sc}, [sc],
          [{"dsub": dval, "alpha": "1", "beta": "0", "eta": "0"},
           {"dsub": dval, "alpha": "1", "beta": "-2", "eta": "2"}],
          [probe("alpha == 1", {"dsub": dval, "alpha": "2", "beta": "0", "eta": "0"}),
           probe("beta + eta == 0", {"dsub": dval, "alpha": "1", "beta": "1", "eta": "0"})],
          anchor=r"f(\partial,\lambda)=h(\partial)=s" if gen == "A"
          else r"g(\partial,\lambda)=h(\partial)=t")


def t3_rows(X, a_name, scal):
    """The shared (i)-(vi) list of the Virasoro-type T3 tables, X = ∂+β."""
    s = scal
    return [
        ("(i)", "0", None, 2, f"{s}0 + {s}1*L", [s + "0", s + "1"],
         [{"alpha": "2", "alphabar": "2", "beta": "0", "betabar": "0"},
          {"alpha": "-3/2", "alphabar": "-3/2", "beta": "1", "betabar": "1"}],
         r"f(\partial,\lambda)=s_0+s_1\lambda"),
        ("(ii)", "2", None, 1, f"{s}*L^2*(2*{X}+L)", [s],
         [{"alpha": "1", "alphabar": "3", "beta": "0", "betabar": "0"},
          {"alpha": "1/3", "alphabar": "7/3", "beta": "2", "betabar": "2"}],
         r"\lambda^2(2(\partial+\beta_1)+\lambda)"),
        ("(iii)", "3", None, 1, f"{s}*{X}*L^2*({X}+L)", [s],
         [{"alpha": "1", "alphabar": "4", "beta": "0", "betabar": "0"},
          {"alpha": "2", "alphabar": "5", "beta": "-1", "betabar": "-1"}],
         r"(\partial+\beta_1)\lambda^2(\partial+\beta_1+\lambda)"),
        ("(iv)", "4", None, 1, f"{s}*L^2*(4*{X}^3+6*{X}^2*L-{X}*L^2+{a_name}*L^3)", [s],
         [{"alpha": "1", "alphabar": "5", "beta": "0", "betabar": "0"},
          {"alpha": "3", "alphabar": "7", "beta": "1/2", "betabar": "1/2"}],
         r"4(\partial+\beta_1)^3+6(\partial+\beta_1)^2\lambda-(\partial+\beta_1)\lambda^2+\alpha_1\lambda^3"),
        ("(v)", None, ("-4", "1"), 1,
         f"{s}*({X}^4*L^2-10*{X}^2*L^4-17*{X}*L^5-8*L^6)", [s],
         [{"alpha": "-4", "alphabar": "1", "beta": "0", "betabar": "0"},
          {"alpha": "-4", "alphabar": "1", "beta": "2", "betabar": "2"}],
         r"\bar{\alpha}_1=1$ and $\alpha_1=-4"),
        ("(vi)", None, "sqrt19", 1,
         f"{s}*({X}^4*L^3-(2*{a_name}+3)*{X}^3*L^4-3*{a_name}*{X}^2*L^5"
         f"-(3*{a_name}+1)*{X}*L^6-({a_name}+9/28)*L^7)", [s],
         [{"alpha": S19[0], "alphabar": S19[1], "beta": "0", "betabar": "0"},
          {"alpha": S19M[0], "alphabar": S19M[1], "beta": "1", "betabar": "1"}],
         r"-(\alpha_1+\frac{9}{28})\lambda^7"),
    ]


def diff_constraints(diff, fixed):
    if diff is not None:
        return [f"alphabar - alpha == {diff}"]
    if fixed == "sqrt19":
        return ["alpha in {-5/2+sqrt(19)/2, -5/2-sqrt(19)/2}", "alphabar - alpha == 6"]
    if fixed == "sqrt22":
        return ["alpha in {-3+sqrt(22)/2, -3-sqrt(22)/2}", "alphabar - alpha == 7"]
    return [f"alpha == {fixed[0]}", f"alphabar == {fixed[1]}"]


def t3_probes(first, extra_diff_probes, with_delta):
    base = dict(first)
    out = []
    bb = dict(base)
    bb["betabar"] = f"({base['beta']})+1"
    out.append(probe("betabar == beta", bb))
    if with_delta:
        dd = dict(base)
        dd["dquot"] = str(1 - int(base["dquot"]))
        out.append(probe("dquot == dsub", dd))
    for diff in extra_diff_probes:
        p = dict(base)
        p["alpha"] = "1"
        p["alphabar"] = str(1 + diff)
        out.append(probe("alphabar - alpha == 0", p))
    return out


for gen, dval, slot, k, sc in (("A", "1", "fA", "1", "s"), ("B", "0", "fB", "2", "t")):
    X = f"(D+beta)"
    for sub_id, diff, fixed, dim, tmpl, scal, choices, anchor in t3_rows(X, "alpha", sc):
        choices = [dict(c, dsub=dval, dquot=dval) for c in choices]
        cons = [f"dsub == {dval}", "dquot == dsub", "betabar == beta", "alpha != 0",
                "alphabar != 0"] + diff_constraints(diff, fixed)
        entry(f"S3.T3.case{k}{sub_id}", "S3.T3", "vir+vir", "T3", dim, cons,
              {"family": "vir+vir"},
              {"delta": ["dsub", "1-dsub"], f"alpha{k}": "alpha", f"beta{k}": "beta"},
              {"delta": ["dquot", "1-dquot"], f"alpha{k}": "alphabar", f"beta{k}": "betabar"},
              {slot: tmpl}, scal, choices,
              t3_probes(choices[0], (1, 5) if sub_id == "(i)" else (), sub_id == "(i)"),
              anchor=anchor if gen == "A" else anchor.replace("_1", "_2"))

# -- solvable ----------------------------------------------------------------------


def sol_mod(bar):
    b = "bar" if bar else ""
    return {"phiA": f"phi{b}A", "phiB": f"phi{b}B"}


SOLV_ALG = {"family": "solvable", "p": "p", "q1": "q1"}


def solv(**kw):
    base = {"p": "0", "q1": "0", "phiA": "0", "phiB": "0", "phibarA": "0", "phibarB": "0"}
    base.update(kw)
    return base


entry("S4.T1", "S4.T1", "solvable", "T1", 1,
      ["p != 0", "q1 == 0", "phiA + p == 0", "phiB == 0"],
      SOLV_ALG, {"kind": "trivial", "eta": "eta"}, sol_mod(False),
      {"fB": "g0"}, ["g0"],
      [solv(p="L", phiA="-L", eta="0"), solv(p="L^2+1", phiA="-L^2-1", eta="5/3")],
      [probe("phiA + p == 0", solv(p="L", phiA="-L+1", eta="0"))],
      anchor=r"$g(\lambda)$ is a nonzero constant")

entry("S4.T2", "S4.T2", "solvable", "T2", 0, [],
      SOLV_ALG, sol_mod(False), {"kind": "trivial", "eta": "eta"},
      {}, [],
      [solv(p="L", phiA="-L", eta="0"), solv(q1="D+2*L", phiA="1", eta="2"),
       solv(phiA="1", phiB="L", eta="0")],
      anchor=r"do not exist, that is, $dim(Ext(\mathbb{C}c_\eta,V_{\phi_A,\phi_B}))=0$")

SOLV_T3 = [
    ("(1)(i)", ["p == 0", "q1 == 0", "phiA == 0", "phibarA == 0", "phiB == phibarB",
                "phiB != 0"],
     {"fA": "s", "fB": "t"}, ["s", "t"],
     [solv(phiB="1", phibarB="1"), solv(phiB="L-2", phibarB="L-2")],
     probe("phiB == phibarB", solv(phiB="1", phibarB="2")),
     r"$\phi_A(\lambda)=\bar{\phi}_A(\lambda)=0,\phi_B(\lambda)=\bar{\phi}_B(\lambda)\neq0$"),
    ("(1)(ii)", ["p == 0", "q1 == 0", "phiB == 0", "phibarB == 0", "phiA == phibarA",
                 "phiA != 0"],
     {"fA": "s", "fB": "t"}, ["s", "t"],
     [solv(phiA="1", phibarA="1"), solv(phiA="L^2", phibarA="L^2")],
     probe("phiA == phibarA", solv(phiA="1", phibarA="3")),
     r"$\phi_A(\lambda)=\bar{\phi}_A(\lambda)\neq0,\phi_B(\lambda)=\bar{\phi}_B(\lambda)=0$"),
    ("(1)(iii)", ["p == 0", "q1 == 0", "phiA == phibarA", "phiB == phibarB", "phiA != 0",
                  "phiB != 0"],
     {"fA": "s", "fB": "t"}, ["s", "t"],
     [solv(phiA="1", phibarA="1", phiB="1", phibarB="1"),
      solv(phiA="L", phibarA="L", phiB="2", phibarB="2")],
     probe("phiA == phibarA", solv(phiA="1", phibarA="2", phiB="1", phibarB="1")),
     r"$s(\lambda),t(\lambda)$ are not the same scalar multiple"),
    ("(2)(i)", ["p == 0", "q1 != 0", "phiA == phibarA", "phiA != 0", "phiB == 0",
                "phibarB == 0"],
     {"fA": "s"}, ["s"],
     [solv(q1="D+2*L", phiA="1", phibarA="1"), solv(q1="L*(D+L)*(D+2*L)", phiA="L+1", phibarA="L+1")],
     probe("phiA == phibarA", solv(q1="D+2*L", phiA="1", phibarA="2")),
     r"$f(\partial,\lambda)= s(\lambda)$, where the polynomial $s(\lambda)$ is not a scalar multiple"),
    ("(3)(i)", ["p != 0", "q1 == 0", "phiA == phibarA", "phiA != 0", "phiB == 0",
                "phibarB == 0"],
     {"fA": "s"}, ["s"],
     [solv(p="L", phiA="1", phibarA="1"), solv(p="L^2-1", phiA="L", phibarA="L")],
     probe("phiA == phibarA", solv(p="L", phiA="1", phibarA="2")),
     r"$f(\partial,\lambda)= s(\lambda), g(\partial,\lambda)= 0$"),
]

for sid, cons, tmpl, scal, choices, prb, anchor in SOLV_T3:
    entry(f"S4.T3.case{sid}", "S4.T3", "solvable", "T3", "infinite", cons,
          SOLV_ALG, sol_mod(False), sol_mod(True), tmpl, scal, choices,
          [prb] if prb else [], anchor=anchor)

entry("S4.T3.case(2)(ii)", "S4.T3", "solvable", "T3", "infinite",
      ["p == 0", "q1 != 0", "phiA == phibarA", "phiA != 0", "phiB == 0", "phibarB == 0",
       "tpoly != 0"],
      SOLV_ALG, sol_mod(False), sol_mod(True),
      {"fA": "v*D", "fB": "tpoly"}, [],
      [solv(q1="D+2*L", phiA="1", phibarA="1", tpoly="1"),
       solv(q1="D+2*L", phiA="3*L", phibarA="3*L", tpoly="L")],
      [probe("phiA == phibarA", solv(q1="D+2*L", phiA="3*L", phibarA="L", tpoly="L"))],
      anchor=r"-\frac{1}{a_{i_0-1}}(\sum_{k}q_{k,j_0}\lambda^k)\partial+s(\lambda)",
      helpers={"v": "lq1"},
      variants={"R0": {"helpers": {"v": "lq1_r0"}, "templates": {"fA": "v*D", "fB": "tpoly"}},
                "R1": {"helpers": {"v": "lq1_r1"}, "templates": {"fA": "v*D", "fB": "tpoly"}}})

entry("S4.T3.case(3)(ii).multiple", "S4.T3", "solvable", "T3", 2,
      ["p != 0", "q1 == 0", "phiB == 0", "phibarB == 0", "p - r*phiA == 0", "r != 1",
       "phiA - phibarA - p == 0"],
      SOLV_ALG, sol_mod(False), sol_mod(True),
      {"fB": "k1*(D+L/r)+k2"}, ["k1", "k2"],
      [solv(p="2*L", r="2", phiA="L", phibarA="-L"), solv(p="-1", r="-1", phiA="1", phibarA="2")],
      [probe("phiA - phibarA - p == 0", solv(p="2*L", r="2", phiA="L", phibarA="-L+1"))],
      anchor=r"k_1(\partial+\frac{1}{r}\lambda)+k_2,&p(\lambda)=r\phi_A(\lambda)\mbox{ and }r\neq1")

entry("S4.T3.case(3)(ii).independent", "S4.T3", "solvable", "T3", 1,
      ["p != 0", "q1 == 0", "phiB == 0", "phibarB == 0", "independent(p, phiA)",
       "phiA - phibarA - p == 0"],
      SOLV_ALG, sol_mod(False), sol_mod(True),
      {"fB": "k1"}, ["k1"],
      [solv(p="L", phiA="1", phibarA="1-L"), solv(p="L^2", phiA="L+2", phibarA="L+2-L^2")],
      [probe("phiA - phibarA - p == 0", solv(p="L", phiA="1", phibarA="2-L"))],
      anchor=r"k_1,&p(\lambda)\mbox{ is not a scalar multiple of }\phi_A(\lambda)")

# -- Type I -------------------------------------------------------------------------

T1MOD_SUB = {"delta": ["dsub", "1-dsub"], "alpha": "alpha", "beta": "beta", "phi": "phi"}
T1MOD_QUOT = {"delta": ["dquot", "1-dquot"], "alpha": "alphabar", "beta": "betabar",
              "phi": "phibar"}

for alpha, tmpl in (("1", "L^2"), ("2", "L^3")):
    entry(f"S5.T1.alpha={alpha}", "S5.T1", "type1", "T1", 1,
          ["dquot == 1", f"alpha == {alpha}", "beta + eta == 0"],
          {"family": "type1"},
          {"kind": "trivial", "eta": "eta"},
          {"delta": ["dquot", "1-dquot"], "alpha": "alpha", "beta": "beta", "phi": "1"},
          {"fA": f"s*{tmpl}"}, ["s"],
          [{"dquot": "1", "alpha": alpha, "beta": "0", "eta": "0"},
           {"dquot": "1", "alpha": alpha, "beta": "-1/2", "eta": "1/2"}],
          [probe(f"alpha == {alpha}", {"dquot": "1", "alpha": "3", "beta": "0", "eta": "0"}),
           probe("beta + eta == 0", {"dquot": "1", "alpha": alpha, "beta": "1", "eta": "0"}),
           probe("dquot == 1", {"dquot": "0", "alpha": alpha, "beta": "0", "eta": "0"})],
          anchor=r"s_1\lambda^2,&\alpha=1,\\ s_2\lambda^3,&\alpha=2")

entry("S5.T2", "S5.T2", "type1", "T2", 1,
      ["dsub == 1", "alpha == 1", "beta + eta == 0"],
      {"family": "type1"},
      {"delta": ["dsub", "1-dsub"], "alpha": "alpha", "beta": "beta", "phi": "1"},
      {"kind": "trivial", "eta": "eta"},
      {"fA": "s", "h": "s"}, ["s"],
      [{"dsub": "1", "alpha": "1", "beta": "0", "eta": "0"},
       {"dsub": "1", "alpha": "1", "beta": "3", "eta": "-3"}],
      [probe("alpha == 1", {"dsub": "1", "alpha": "2", "beta": "0", "eta": "0"}),
       probe("beta + eta == 0", {"dsub": "1", "alpha": "1", "beta": "0", "eta": "1"})],
      anchor=r"$f(\partial,\lambda)=h(\partial)=s$ with nonzero constant $s$")

for sub_id, diff, fixed, dim, tmpl, scal, choices, anchor in t3_rows("(D+beta)", "alpha", "s"):
    choices = [dict(c, dsub="1", dquot="1", phi="1", phibar="1") for c in choices]
    cons = ["dsub == 1", "dquot == dsub", "betabar == beta", "alpha != 0",
            "alphabar != 0"] + diff_constraints(diff, fixed)
    entry(f"S5.T3.case1{sub_id}", "S5.T3", "type1", "T3", dim, cons,
          {"family": "type1"}, T1MOD_SUB, T1MOD_QUOT,
          {"fA": tmpl}, scal, choices,
          t3_probes(choices[0], (1,) if sub_id == "(i)" else (), sub_id == "(i)"),
          anchor=anchor.replace("_1", ""))

entry("S5.T3.case2", "S5.T3", "type1", "T3", "infinite",
      ["dsub == 0", "dquot == dsub", "phibar == phi"],
      {"family": "type1"}, T1MOD_SUB, T1MOD_QUOT,
      {"fA": "s", "fB": "t"}, ["s", "t"],
      [{"dsub": "0", "dquot": "0", "phi": "1", "phibar": "1", "alpha": "1", "beta": "0",
        "alphabar": "1", "betabar": "0"},
       {"dsub": "0", "dquot": "0", "phi": "L+2", "phibar": "L+2", "alpha": "1", "beta": "0",
        "alphabar": "1", "betabar": "0"}],
      [probe("phibar == phi", {"dsub": "0", "dquot": "0", "phi": "1", "phibar": "2",
                               "alpha": "1", "beta": "0", "alphabar": "1", "betabar": "0"}),
       probe("dquot == dsub", {"dsub": "0", "dquot": "1", "phi": "1", "phibar": "1",
                               "alpha": "1", "beta": "0", "alphabar": "1", "betabar": "0"})],
      anchor=r"$Ext(V_{\bar{\alpha},\bar{\beta},\bar{\phi}},V_{\alpha,\beta,\phi})$ is infinite-dimensional",
      variants={"f_zero": {"templates": {"fB": "t"}}})

# -- Type II -------------------------------------------------------------------------

T2SUB = {"alpha": "alpha", "beta": "beta"}
T2QUOT = {"alpha": "alphabar", "beta": "betabar"}


def t2alg(a):
    alg = {"family": "type2", "a": a, "c": "c"}
    if a in ("0", "-1"):
        alg["d"] = "d"
    return alg


for alpha, tmpl in (("1", "L^2"), ("2", "L^3")):
    entry(f"S6.T1.alpha={alpha}", "S6.T1", "type2", "T1", 1,
          [f"alpha == {alpha}", "beta + eta == 0", "a in {1, 0, -1, -4, -6}",
           "c^2 + d^2 != 0"],
          {"family": "type2", "a": "a", "c": "c", "d": "d"},
          {"kind": "trivial", "eta": "eta"}, T2SUB,
          {"fA": f"s*{tmpl}"}, ["s"],
          [{"a": "1", "c": "1", "d": "0", "alpha": alpha, "beta": "0", "eta": "0"},
           {"a": "-4", "c": "2", "d": "0", "alpha": alpha, "beta": "1", "eta": "-1"},
           {"a": "0", "c": "1", "d": "-1", "alpha": alpha, "beta": "-2", "eta": "2"}],
          [probe("beta + eta == 0", {"a": "-4", "c": "1", "d": "0", "alpha": alpha,
                                     "beta": "1", "eta": "0"}),
           probe(f"alpha == {alpha}", {"a": "-6", "c": "1", "d": "0", "alpha": "5",
                                       "beta": "0", "eta": "0"})],
          anchor=r"exist only if $\beta+\eta=0$")

entry("S6.T2", "S6.T2", "type2", "T2", 1,
      ["alpha == 1", "beta + eta == 0", "a in {1, 0, -1, -4, -6}", "c^2 + d^2 != 0"],
      {"family": "type2", "a": "a", "c": "c", "d": "d"},
      T2SUB, {"kind": "trivial", "eta": "eta"},
      {"fA": "s", "h": "s"}, ["s"],
      [{"a": "1", "c": "1", "d": "0", "alpha": "1", "beta": "0", "eta": "0"},
       {"a": "-1", "c": "1", "d": "1", "alpha": "1", "beta": "2", "eta": "-2"}],
      [probe("alpha == 1", {"a": "1", "c": "1", "d": "0", "alpha": "2", "beta": "0", "eta": "0"}),
       probe("beta + eta == 0", {"a": "-6", "c": "1", "d": "0", "alpha": "1", "beta": "0",
                                 "eta": "1"})],
      anchor=r"exist only if $\beta+\eta=0$ and $\alpha=1$")

GEN_I = ("s0 + s1*L", ["s0", "s1"], 2, r"f(\partial,\lambda)=s_0+s_1\lambda")
GEN_2 = ("s*L^2*(2*D+L)", ["s"], 1, r"f(\partial,\lambda)=s\lambda^2(2\partial+\lambda)")
GEN_3 = ("s*D*L^2*(D+L)", ["s"], 1, r"f(\partial,\lambda)=s\partial\lambda^2(\partial+\lambda)")
GEN_4 = ("s*L^2*(4*D^3+6*D^2*L-D*L^2+alpha*L^3)", ["s"], 1,
         r"s\lambda^2(4\partial^3+6\partial^2\lambda-\partial\lambda^2+\alpha_1\lambda^3)")
GEN_M4 = ("s*(D^4*L^2-10*D^2*L^4-17*D*L^5-8*L^6)", ["s"], 1,
          r"s(\partial^4\lambda^2-10\partial^2\lambda^4-17\partial\lambda^5-8\lambda^6)")
GEN_19 = ("s*(D^4*L^3-(2*alpha+3)*D^3*L^4-3*alpha*D^2*L^5-(3*alpha+1)*D*L^6-(alpha+9/28)*L^7)",
          ["s"], 1, r"-(\alpha+\frac{9}{28})\lambda^7")


def ch(alpha, alphabar, beta="0", c="1", d=None):
    out = {"alpha": alpha, "alphabar": alphabar, "beta": beta, "betabar": beta, "c": c}
    if d is not None:
        out["d"] = d
    return out


def row(sid, cons, tmpl_f, tmpl_g, scal, dim, choices, anchor):
    return (sid, cons, tmpl_f, tmpl_g, scal, dim, choices, anchor)


def generic(sid, kind, uses_d, extra=()):
    d = "0" if uses_d else None
    d2 = "1" if uses_d else None
    if kind == "i":
        t, s, dim, anc = GEN_I
        return row(sid, ["alphabar == alpha"], t, None, s, dim,
                   [ch("2", "2", d=d), ch("-3/2", "-3/2", "1", "2", d=d2)], anc)
    if kind == 2:
        t, s, dim, anc = GEN_2
        return row(sid, ["alphabar - alpha == 2"] + list(extra), t, None, s, dim,
                   [ch("1", "3", d=d), ch("1/3", "7/3", "2", "3", d=d2)], anc)
    if kind == 3:
        t, s, dim, anc = GEN_3
        return row(sid, ["alphabar - alpha == 3"] + list(extra), t, None, s, dim,
                   [ch("1", "4", d=d), ch("2", "5", "-1", "2", d=d2)], anc)
    if kind == 4:
        t, s, dim, anc = GEN_4
        return row(sid, ["alphabar - alpha == 4"], t, None, s, dim,
                   [ch("1", "5", d=d), ch("3", "7", "1/2", "-1", d=d2)], anc)
    if kind == "m4":
        t, s, dim, anc = GEN_M4
        return row(sid, ["alpha == -4", "alphabar == 1"], t, None, s, dim,
                   [ch("-4", "1", d=d), ch("-4", "1", "2", "3", d=d2)], anc)
    if kind == "19":
        t, s, dim, anc = GEN_19
        return row(sid, ["alpha in {-5/2+sqrt(19)/2, -5/2-sqrt(19)/2}", "alphabar - alpha == 6"],
                   t, None, s, dim,
                   [ch(S19[0], S19[1], d=d), ch(S19M[0], S19M[1], "1", "2", d=d2)], anc)
    raise ValueError(kind)


def special(sid, alpha, alphabar, f, g, scal, dim, anchor, uses_d):
    d = "0" if uses_d else None
    return row(sid, [f"alpha == {alpha}", f"alphabar == {alphabar}"], f, g, scal, dim,
               [ch(alpha, alphabar, d=d), ch(alpha, alphabar, "1", "2", d=("1" if uses_d else None))],
               anchor)


TABLES = {
    "1": [
        generic("(i)", "i", False),
        row("(ii)", ["alphabar - alpha == 1"], "c*t/alpha*D", "t*L", ["t"], 1,
            [ch("2", "3"), ch("-1/2", "1/2", "1", "3")],
            r"f(\partial,\lambda)=\frac{ct}{\alpha}\partial,g(\partial,\lambda)=t\lambda"),
        generic("(iii)", 2, False, ["alpha != -1"]),
        special("(iv)", "-1", "1", "s*L^2*(2*D+L)-c*t*(D^2-L^2)", "t*(D*L+L^2)", ["s", "t"], 2,
                r"-ct(\partial^2-\lambda^2),g(\partial,\lambda)=t(\partial\lambda+\lambda^2)", False),
        generic("(v)", 3, False),
        generic("(vi)", 4, False),
        generic("(vii)", "m4", False),
        generic("(viii)", "19", False),
    ],
    "0": [
        generic("(i)", "i", True),
        row("(ii)", ["alphabar - alpha == 1"], "-c*t/alpha*D*L-d*t/alpha*D", "t", ["t"], 1,
            [ch("2", "3", d="0"), ch("3", "4", "1", "1", d="2")],
            r"-\frac{ct}{\alpha}\partial\lambda-\frac{dt}{\alpha}\partial,g(\partial,\lambda)=t"),
        generic("(iii)", 2, True, ["alpha != -1"]),
        special("(iv)", "-1", "1", "s*L^2*(2*D+L)+c*t*D^2*L+d*t*(D^2-L^2)", "t*(D+L)",
                ["s", "t"], 2, r"+ct\partial^2\lambda+dt(\partial^2-\lambda^2),g(\partial,\lambda)=t(\partial+\lambda)",
                True),
        generic("(v)", 3, True),
        generic("(vi)", 4, True),
        generic("(vii)", "m4", True),
        generic("(viii)", "19", True),
    ],
    "-1": [
        generic("(i)", "i", True),
        generic("(ii)", 2, True, ["alpha != -1/2"]),
        special("(iii)", "-1/2", "3/2", "s*L^2*(2*D+L)-2*d*t*D^2*L-c*t*(2*D^2-L^2)", "t",
                ["s", "t"], 2, r"-2dt\partial^2\lambda-ct(2\partial^2-\lambda^2),g(\partial,\lambda)=t",
                True),
        generic("(iv)", 3, True, ["alpha != -1"]),
        special("(v)", "-1", "2",
                "s*D*L^2*(D+L)-d*t/4*(2*D^3*L+L^4)-c*t/2*(D^3-2*D*L^2-2*L^3)", "t*(D+L/2)",
                ["s", "t"], 2, r"-\frac{ct}{2}(\partial^3-2\partial\lambda^2-2\lambda^3),g(\partial,\lambda)=t(\partial+\frac{1}{2}\lambda)",
                True),
        generic("(vi)", 4, True),
        generic("(vii)", "m4", True),
        generic("(viii)", "19", True),
    ],
    "-4": [
        generic("(i)", "i", False),
        generic("(ii)", 2, False),
        generic("(iii)", 3, False),
        generic("(iv)", 4, False),
        row("(v)", ["alphabar - alpha == 5", "alpha notin {-2, -4}"],
            "-3/(alpha*(alpha+2)*(alpha+4))*c*t*D^3*L^3"
            "+9*(alpha+1)/(2*alpha*(alpha+2)*(alpha+4))*c*t*D^2*L^4"
            "-9*(alpha+1)*(2*alpha+1)/(10*alpha*(alpha+2)*(alpha+4))*c*t*D*L^5"
            "+(alpha+1)*(2*alpha+1)/(10*(alpha+2)*(alpha+4))*c*t*L^6",
            "t", ["t"], 1, [ch("1", "6"), ch("2", "7", "1", "3")],
            r"-\frac{3}{\alpha(\alpha+2)(\alpha+4)}ct\partial^3\lambda^3"),
        special("(vi)", "-2", "3",
                "3/8*c*t*D^4*L^2-3/2*c*t*D^2*L^4-57/40*c*t*D*L^5-2/5*c*t*L^6", "t", ["t"], 1,
                r"\frac{3}{8}ct\partial^4\lambda^2-\frac{3}{2}ct\partial^2\lambda^4", False),
        generic("(vii)", "m4", False),
        row("(viii)", ["alphabar - alpha == 6",
                       "alpha notin {-5/2, -5/2+sqrt(19)/2, -5/2-sqrt(19)/2}"],
            "-3/((2*alpha+5)*(2*alpha^2+10*alpha+3))*c*t*D^4*L^3"
            "+3*(2*alpha+3)/((2*alpha+5)*(2*alpha^2+10*alpha+3))*c*t*D^3*L^4"
            "-9*(alpha+1)*(2*alpha+3)/(5*(2*alpha+5)*(2*alpha^2+10*alpha+3))*c*t*D^2*L^5"
            "+(alpha+1)*(2*alpha+1)*(2*alpha+3)/(5*(2*alpha+5)*(2*alpha^2+10*alpha+3))*c*t*D*L^6"
            "-alpha*(alpha+1)*(2*alpha+1)*(2*alpha+3)/(70*(2*alpha+5)*(2*alpha^2+10*alpha+3))*c*t*L^7",
            "t*(D-alpha/5*L)", ["t"], 1, [ch("1", "7"), ch("2", "8", "1", "3")],
            r"g(\partial,\lambda)=t(\partial-\frac{\alpha}{5}\lambda)"),
        special("(ix)", "-5/2", "7/2",
                "36/665*c*t*D^5*L^2-54/113*c*t*D^3*L^4-387/665*c*t*D^2*L^5"
                "-218/665*c*t*D*L^6+127/1862*c*t*L^7", "t*(D+L/2)", ["t"], 1,
                r"\frac{36}{665}ct\bar{\partial}^5\lambda^2-\frac{54}{113}ct\bar{\partial}^3\lambda^4",
                False),
        generic("(x)", "19", False),
        special("(xi)", "-6", "1",
                "1/35*c*t*D^5*L^3+2/7*c*t*D^4*L^4+36/35*c*t*D^3*L^5+12/7*c*t*D^2*L^6"
                "+66/49*c*t*D*L^7+99/245*c*t*L^8", "t*(D^2+11/5*D*L+6/5*L^2)", ["t"], 1,
                r"g(\partial,\lambda)=t(\partial^2+\frac{11}{5}\partial\lambda+\frac{6}{5}\lambda^2)",
                False),
    ],
    "-6": [
        generic("(i)", "i", False),
        generic("(ii)", 2, False),
        generic("(iii)", 3, False),
        generic("(iv)", 4, False),
        generic("(v)", "m4", False),
        generic("(vi)", "19", False),
        row("(vii)", ["alpha in {-3+sqrt(22)/2, -3-sqrt(22)/2}", "alphabar - alpha == 7"],
            "-40/(7*(alpha+3))*c*t*D^5*L^3+100*(alpha+2)/(7*(alpha+3))*c*t*D^4*L^4"
            "+40*(5*alpha+1)/(7*(alpha+3))*c*t*D^3*L^5+20*(16*alpha+11)/(7*(alpha+3))*c*t*D^2*L^6"
            "+10*(154*alpha+101)/(49*(alpha+3))*c*t*D*L^7+(823*alpha+539)/(98*(alpha+3))*c*t*L^8",
            "t", ["t"], 1, [ch(S22[0], S22[1]), ch(S22M[0], S22M[1], "1", "3")],
            r"\frac{823\alpha+539}{98(\alpha+3)}ct\lambda^8"),
        special("(viii)", "-1", "7",
                "-2/7*c*t*D^6*L^3+9/7*c*t*D^5*L^4-9/7*c*t*D^4*L^5+2/7*c*t*D^3*L^6",
                "t*(D+L/7)", ["t"], 1,
                r"g(\partial,\lambda)=t(\partial+\frac{1}{7}\lambda)", False),
        special("(ix)", "-6", "2",
                "-2/7*c*t*D^6*L^3-3*c*t*D^5*L^4-12*c*t*D^4*L^5-24*c*t*D^3*L^6"
                "-180/7*c*t*D^2*L^7-99/7*c*t*D*L^8-22/7*c*t*L^9",
                "t*(D+6/7*L)", ["t"], 1,
                r"g(\partial,\lambda)=t(\partial+\frac{6}{7}\lambda)", False),
    ],
}

# residual-checked replacements for rows whose printed formula fails; reported
# as informational variants only, the entry itself keeps the printed formula
CORRECTED = {
    ("-4", "(ix)"): {"fA": "36/665*c*t*D^5*L^2-54/133*c*t*D^3*L^4-387/665*c*t*D^2*L^5"
                           "-218/665*c*t*D*L^6-127/1862*c*t*L^7", "fB": "t*(D+L/2)"},
    ("-6", "(vii)"): {"fA": "40/(7*(alpha+3))*c*t*D^5*L^3-100*(alpha+2)/(7*(alpha+3))*c*t*D^4*L^4"
                            "-40*(5*alpha+1)/(7*(alpha+3))*c*t*D^3*L^5"
                            "-20*(16*alpha+11)/(7*(alpha+3))*c*t*D^2*L^6"
                            "-10*(154*alpha+101)/(49*(alpha+3))*c*t*D*L^7"
                            "-(823*alpha+539)/(98*(alpha+3))*c*t*L^8", "fB": "t"},
    ("-6", "(viii)"): {"fA": "2/7*c*t*D^6*L^3-9/7*c*t*D^5*L^4+9/7*c*t*D^4*L^5-2/7*c*t*D^3*L^6",
                       "fB": "t*(D+L/7)"},
}

for a, rows in TABLES.items():
    uses_d = a in ("0", "-1")
    for sid, cons, tf, tg, scal, dim, choices, anchor in rows:
        base = ["betabar == beta", "alpha != 0", "alphabar != 0", "c != 0"] + list(cons)
        tmpl = {"fA": tf}
        if tg:
            tmpl["fB"] = tg
        probes = []
        first = dict(choices[0])
        bb = dict(first)
        bb["betabar"] = "1"
        bb["beta"] = "0"
        if first["beta"] == "0":
            probes.append(probe("betabar == beta", bb))
        if sid == "(i)" and a in ("-1", "-4", "-6"):
            p = dict(first)
            p["alpha"], p["alphabar"] = "1", "2"
            probes.append(probe("alphabar == alpha", p))
        entry(f"S6.T3.a={a}.case{sid}", "S6.T3", "type2", "T3", dim, base,
              t2alg(a), T2SUB, T2QUOT, tmpl, scal, choices, probes,
              anchor=anchor, shift="beta", tags={"a": a},
              variants=({"corrected": {"templates": CORRECTED[(a, sid)]}}
                        if (a, sid) in CORRECTED else None))

with open(OUT, "w", encoding="utf-8") as fh:
    json.dump({"version": 1, "entries": ENTRIES}, fh, indent=1, ensure_ascii=False)
    fh.write("\n")
print(len(ENTRIES), "entries written")
