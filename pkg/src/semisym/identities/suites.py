"""Verification suites: each one enumerates cases and checks an identity exactly.

A case is ``(suite, key)`` with ``key`` a tuple of plain values, so cases
can be shipped to worker processes.  A check returns a list of failure
descriptions; the empty list means the case passed.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from ..combinatorics import (bracket, bracket_one, dominated, hook_even_prime,
                             n_even, n_odd, node, odd_weight, partition, partitions_upto, preceq,
                             preceq_hom, sqsubseteq)
from ..diffops import operators
from ..exactalg import R_S, MultiPoly
from ..interpolation import build_R, build_r, column_factor, e_basis_element, semisym_generator
from ..interpolation.basis import build_Rbar, is_semisymmetric, to_basis, to_shifted_coordinates
from . import closed_forms, duality, evaluation, pieri

ALPHAS = (Fraction(1), Fraction(2), Fraction(5, 2))
BINOMIAL_ALPHAS = (Fraction(1), Fraction(5, 2))


def _ns(params: dict, default: Sequence[int]) -> list[int]:
    n = params.get("n")
    return [n] if n is not None else list(default)


def _d(params: dict, default: int) -> int:
    d = params.get("dmax")
    return default if d is None else d


def _diff(label, expected, actual) -> list[str]:
    return [] if expected == actual else [f"{label}: expected {expected}, got {actual}"]


def _show(expansion: dict) -> str:
    return "{" + ", ".join(f"{k}: {v}" for k, v in sorted(expansion.items())) + "}"


def _compare(label, predicted: dict, direct: dict) -> list[str]:
    if predicted == direct:
        return []
    return [f"{label}: formula {_show(predicted)} but direct {_show(direct)}"]


# -- defining properties --------------------------------------------------------

def defining_cases(params):
    for n in _ns(params, (2, 3, 4)):
        for lam in partitions_upto(n, _d(params, 4)):
            yield (n, lam)


def defining_check(n, lam):
    R = build_R(lam, n)
    d = odd_weight(lam)
    out = []
    if not is_semisymmetric(R):
        out.append("not semisymmetric")
    out += _diff("degree", d, R.degree())
    out += _diff("leading coefficient", 1, R.coeff(bracket(lam)))
    for mu in partitions_upto(n, d):
        if mu != lam and not R.evaluate(node(mu)).is_zero():
            out.append(f"does not vanish at node {mu}")
    out += _diff("value at own node", hook_even_prime(lam), R.evaluate(node(lam)))
    out += _diff("normalized value", 1, build_r(lam, n).evaluate(node(lam)))
    if lam[-1] >= 1:
        inner = build_R(tuple(x - 1 for x in lam), n)
        if column_factor(n) * inner.shift([1] * n) != R:
            out.append("column recursion fails")
    if n >= 2:
        restricted = R.restrict_last_zero()
        if lam[-1] == 0:
            if restricted != build_R(lam[:-1], n - 1).shift([R_S] * (n - 1)):
                out.append("restriction to z_n = 0 differs from the shifted smaller polynomial")
        elif not restricted.is_zero():
            out.append("restriction to z_n = 0 is not zero")
    return out


# -- eigenvalues ------------------------------------------------------------------

def eigen_cases(params):
    for n in _ns(params, (2, 3, 4, 5)):
        for lam in partitions_upto(n, _d(params, 3)):
            for kind in ("X", "Y", "top"):
                if kind == "top" and n > 4:
                    continue
                yield (n, lam, kind)


def eigen_check(n, lam, kind):
    out = []
    if kind == "top":
        Rbar = build_Rbar(lam, n)
        for op in ("X", "Y"):
            for t in range(n_odd(n) + 1):
                got = operators.apply_top(op, Rbar, t)
                if got != Rbar.scale(operators.eigenvalue(op, lam, t)):
                    out.append(f"top {op}({t}) eigen relation fails")
        if operators.eta(Rbar) != Rbar.scale(odd_weight(lam)):
            out.append("eta differs from odd weight")
        if operators.euler_field(Rbar) != Rbar.scale(odd_weight(lam)):
            out.append("Euler field differs from odd weight")
        if operators.eta_prime(Rbar) != Rbar.scale(bracket_one(lam)):
            out.append("eta' differs from [lam]_1")
        return out
    R = build_R(lam, n)
    for t in range(n_odd(n) + 1):
        got = operators.apply(kind, R, t)
        if got != R.scale(operators.eigenvalue(kind, lam, t)):
            out.append(f"{kind}({t}) R is not {operators.eigenvalue(kind, lam, t)} R")
    return out


# -- cut-off and commutativity -------------------------------------------------------

def _family(n):
    ops = [operators.component("X", i, n) for i in range(1, n_odd(n) + 1)]
    ops += [operators.component("Y", i, n) for i in range(1, n_even(n) + 1)]
    return ops


def cutoff_cases(params):
    for n in _ns(params, (1, 2, 3, 4)):
        for mu in partitions_upto(n, _d(params, 4)):
            yield (n, mu)


def cutoff_check(n, mu):
    out = []
    for op in _family(n):
        bad = operators.cutoff_violations(op, mu)
        if bad:
            out.append(f"{op.label}: nonzero coefficients on {bad}")
    return out


def commute_cases(params):
    for n in _ns(params, (2, 3, 4)):
        for mu in partitions_upto(n, _d(params, 3)):
            yield (n, mu)


def commute_check(n, mu):
    f = e_basis_element(mu)
    ops = _family(n)
    images = [op.apply(f) for op in ops]
    out = []
    for i, a in enumerate(ops):
        for j in range(i + 1, len(ops)):
            b = ops[j]
            if a.apply(images[j]) != b.apply(images[i]):
                out.append(f"[{a.label}, {b.label}] does not vanish")
    return out


# -- triangularity ---------------------------------------------------------------------

def _upper_coordinates(n):
    v = [MultiPoly.variable(n, i) for i in range(1, n + 1)]
    return [v[i] + v[i + 1] if i % 2 == 0 and i + 1 < n else v[i] for i in range(n)]


def triangularity_cases(params):
    for n in _ns(params, (2, 3, 4)):
        lams = partitions_upto(n, _d(params, 3))
        for lam in lams:
            yield (n, lam, None)
        for i, lam in enumerate(lams):
            for mu in lams[i:]:
                yield (n, lam, mu)


def triangularity_check(n, lam, mu):
    if mu is not None:
        return product_support_check(n, lam, mu)
    out = []
    R = build_R(lam, n)
    Rbar = build_Rbar(lam, n)
    top = bracket(lam)
    d = odd_weight(lam)
    for exps, _ in R.items():
        if not dominated(exps, top):
            out.append(f"monomial {exps} of R not dominated by {top}")
    for exps, _ in Rbar.items():
        if sum(exps) != d:
            out.append(f"monomial {exps} of Rbar has wrong degree")
    shifted = R.compose(_upper_coordinates(n))
    for exps, _ in shifted.items():
        if not dominated(exps, top):
            out.append(f"u-monomial {exps} not dominated by {top}")
        if not dominated(exps[1::2], lam[1::2]):
            out.append(f"even part of u-monomial {exps} exceeds {lam[1::2]}")
    expansion = to_basis(R, "elementary").coeffs
    for nu, c in expansion.items():
        if not c.is_zero() and not preceq(nu, lam):
            out.append(f"e_{nu} occurs in R but is not below {lam}")
    out += _diff("coefficient of e_lam", 1, expansion.get(lam))
    for nu, c in to_basis(Rbar, "elementary").coeffs.items():
        if c.is_zero():
            continue
        if not preceq_hom(nu, lam):
            out.append(f"e_{nu} occurs in Rbar but is not homogeneously below {lam}")
        if odd_weight(nu) != d or bracket_one(nu) != bracket_one(lam):
            out.append(f"e_{nu} in Rbar breaks the bigrading")
    return out


def product_support_check(n, lam, mu):
    total = tuple(a + b for a, b in zip(lam, mu))
    prod = build_R(lam, n) * build_R(mu, n)
    out = []
    for tau, c in to_basis(prod, "R").coeffs.items():
        if c.is_zero():
            continue
        if not (sqsubseteq(lam, tau) and sqsubseteq(mu, tau) and preceq(tau, total)):
            out.append(f"R_{tau} occurs in R_{lam} R_{mu}")
    return out


# -- extra vanishing ------------------------------------------------------------------

def vanishing_cases(params):
    for n in _ns(params, (2, 3, 4)):
        for lam in partitions_upto(n, _d(params, 3)):
            yield (n, lam)


def vanishing_check(n, lam):
    R = build_R(lam, n)
    d = max(5, odd_weight(lam) + 2)
    return [f"R_{lam}(rho + {mu}) != 0" for mu in partitions_upto(n, d)
            if not sqsubseteq(lam, mu) and not R.evaluate(node(mu)).is_zero()]


# -- duality and interpolation transform -----------------------------------------------

def duality_cases(params):
    d = _d(params, 3)
    for n in _ns(params, (2, 3)):
        for lam in partitions_upto(n, d):
            for alpha in BINOMIAL_ALPHAS:
                yield ("binomial", n, lam, str(alpha))
    for n in _ns(params, (2, 3, 4)):
        for alpha in BINOMIAL_ALPHAS:
            yield ("symmetric", n, d, str(alpha))
        yield ("involution", n, d, None)
        for lam in partitions_upto(n, d):
            yield ("homogeneous-binomial", n, lam, None)


def duality_check(kind, n, arg, alpha):
    if kind == "binomial":
        lhs, rhs = duality.binomial_sides(arg, n, Fraction(alpha))
        return [] if lhs == rhs else [f"sides differ by {lhs - rhs}"]
    if kind == "symmetric":
        return [f"entries {a}, {b} differ" for a, b in duality.asymmetric_pairs(n, arg, Fraction(alpha))]
    if kind == "involution":
        return [str(x) for x in duality.duality_defects(n, arg)]
    return _compare("homogeneous binomial", duality.homogeneous_binomial_prediction(arg, n),
                    duality.homogeneous_binomial_actual(arg, n))


def interpol_cases(params):
    for n in _ns(params, (2, 3, 4)):
        for seed in range(3):
            yield (n, _d(params, 3), seed)


def interpol_check(n, d, seed):
    return duality.interpolation_defects(duality.random_semisymmetric(n, d, seed), d)


# -- evaluation -----------------------------------------------------------------------

def evaluation_cases(params):
    for n in _ns(params, (1, 2, 3, 4)):
        for lam in partitions_upto(n, _d(params, 4)):
            yield (n, lam)


def evaluation_check(n, lam):
    out = []
    for alpha in ALPHAS:
        closed = evaluation.special_value(lam, n, alpha)
        direct = evaluation.special_value_direct(lam, n, alpha)
        out += _diff(f"value at -rho-{alpha}", closed, direct)
        if direct.is_zero():
            out.append(f"R vanishes at -rho-{alpha}")
        if not evaluation.factor_forms_agree(lam, n, alpha):
            out.append(f"factor forms disagree at alpha={alpha}")
    out += _diff("top component at ones", evaluation.homogeneous_evaluation(lam, n),
                 evaluation.homogeneous_evaluation_direct(lam, n))
    return out


# -- Pieri rules ---------------------------------------------------------------------

def pieri_cases(params):
    for n in _ns(params, (2, 3, 4)):
        for mu in partitions_upto(n, _d(params, 3)):
            for rule in ("t-odd", "t-even", "elementary", "shifted", "homogeneous"):
                yield (rule, n, mu)
    for mu in partitions_upto(3, _d(params, 3)):
        for name in pieri.EXAMPLES:
            yield (f"example-{name}", 3, mu)


def pieri_check(rule, n, mu):
    out = []
    if rule.startswith("example-"):
        name = rule[len("example-"):]
        return _compare(name, pieri.EXAMPLES[name](mu), pieri.example_direct(name, mu))
    if rule.startswith("t-"):
        parity = rule[2:]
        size = n_odd(n) if parity == "odd" else n_even(n)
        for t in range(size + 1):
            out += _compare(f"t={t}", pieri.pieri_t(mu, parity, t, n),
                            pieri.direct_t(mu, parity, t, n))
    elif rule == "elementary":
        for parity, size in (("odd", n_odd(n)), ("even", n_even(n))):
            for m in range(size + 1):
                out += _compare(f"{parity} m={m}", pieri.pieri_elementary(mu, m, parity, n),
                                pieri.direct_elementary(mu, m, parity, n))
    elif rule == "shifted":
        for m in range(n + 1):
            formula = pieri.pieri_shifted(mu, m, n)
            out += _compare(f"m={m}", formula, pieri.direct_shifted(mu, m, n))
            out += _compare(f"m={m} reversed bijection", formula,
                            pieri.pieri_shifted(mu, m, n, reverse=True))
    else:
        for m in range(1, n + 1):
            out += _compare(f"m={m}", pieri.pieri_homogeneous(mu, m, n),
                            pieri.direct_homogeneous(mu, m, n))
    return out


# -- closed forms and the table ------------------------------------------------------

def closed_form_cases(params):
    for n in _ns(params, (1, 2, 3, 4, 5)):
        for a in range(1, 5):
            for m in range(1, min(4, n) + 1):
                yield ("hook", n, (a, m))
    for n in _ns(params, (3, 4)):
        if n < 2:
            continue
        for a in range(5):
            for b in range(min(a, 2) + 1):
                yield ("two-row", n, (a, b))
    for m1 in range(5):
        for m2 in range(m1 + 1):
            for m3 in range(m2 + 1):
                yield ("three-variable", 3, (m1, m2, m3))
    for n in _ns(params, (3, 4, 5, 6)):
        for row in closed_forms.load_golden():
            yield ("table", n, tuple(row["lambda"]))
    yield ("table-derivation", 6, ())


def closed_form_check(kind, n, arg):
    if kind == "hook":
        a, m = arg
        lam = closed_forms.hook_partition(a, m, n)
        return [] if closed_forms.hook(a, m, n) == build_R(lam, n) else [f"hook formula differs from R_{lam}"]
    if kind == "two-row":
        a, b = arg
        return _compare("two-row", closed_forms.two_row_terms(a, b, n),
                        _e_support(build_Rbar(partition([a, b], n), n)))
    if kind == "three-variable":
        return _compare("three-variable", closed_forms.n3_terms(arg), _e_support(build_Rbar(arg, 3)))
    if kind == "table":
        row = next(r for r in closed_forms.load_golden() if tuple(r["lambda"]) == arg)
        return [] if closed_forms.table_row_holds(row, n) else [f"golden relation for {arg} fails"]
    derived = closed_forms.table_relations(3)
    golden = closed_forms.load_golden()
    out = []
    if [r["lambda"] for r in derived] != [r["lambda"] for r in golden]:
        out.append("derived rows differ from the golden rows")
    for g, d in zip(golden, derived):
        if closed_forms.golden_terms(g) != closed_forms.golden_terms(d):
            out.append(f"derived relation for {g['lambda']} is {closed_forms.format_relation(d)}")
    return out


def _e_support(f: MultiPoly) -> dict:
    return {k: v for k, v in to_basis(f, "elementary").coeffs.items() if not v.is_zero()}


# -- shifted Jack comparisons ---------------------------------------------------------

def _sized_partitions(length: int, size: int) -> list[tuple]:
    """Partitions with at most ``length`` parts and total at most ``size``."""
    if length == 0:
        return [()]
    return [lam for lam in partitions_upto(length, size * 2) if sum(lam) <= size]


def jack_cases(params):
    d = _d(params, 3)
    for n in _ns(params, (1, 2, 3, 4)):
        for lam in partitions_upto(n, d):
            if bracket_one(lam) == 0:
                yield ("column-free", n, lam)
        for mu in _sized_partitions(n_odd(n), d):
            yield ("odd-sum", n, mu)
    for n in _ns(params, (1, 2, 3, 4, 5, 6)):
        for m in range(1, n + 1):
            if m <= 4:
                yield ("explicit", n, m)
            yield ("odd-even-split", n, m)


def jack_check(kind, n, arg):
    if kind == "column-free":
        lhs, rhs = closed_forms.jack_column_side(arg, n)
    elif kind == "odd-sum":
        lhs, rhs = closed_forms.jack_sum_sides(arg, n)
    else:
        rhs = to_shifted_coordinates(build_R([1] * arg, n))
        if kind == "explicit":
            lhs = closed_forms.elementary_shifted_formula(arg, n)
        else:
            lhs = closed_forms.elementary_jack_side(arg, n)
        if build_Rbar([1] * arg, n) != semisym_generator(arg, n):
            return ["top component is not the generator"]
    return [] if lhs == rhs else [f"sides differ by {lhs - rhs}"]


# -- integrality probe -----------------------------------------------------------------

def integrality_cases(params):
    for n in _ns(params, (1, 2, 3, 4)):
        for lam in partitions_upto(n, _d(params, 4)):
            yield (n, lam)


def integrality_check(n, lam):
    report = closed_forms.integrality_probe(lam, n)
    return [] if report["passed"] else [f"non-integral coefficient {report['witness']}"]


# -- registry and runner ----------------------------------------------------------------

SUITES: dict[str, tuple[Callable, Callable]] = {
    "defining": (defining_cases, defining_check),
    "eigen": (eigen_cases, eigen_check),
    "cutoff": (cutoff_cases, cutoff_check),
    "commute": (commute_cases, commute_check),
    "triangularity": (triangularity_cases, triangularity_check),
    "extra-vanishing": (vanishing_cases, vanishing_check),
    "duality": (duality_cases, duality_check),
    "interpol": (interpol_cases, interpol_check),
    "evaluation": (evaluation_cases, evaluation_check),
    "pieri": (pieri_cases, pieri_check),
    "closed-forms": (closed_form_cases, closed_form_check),
    "jack": (jack_cases, jack_check),
    "integrality": (integrality_cases, integrality_check),
}
REPORT_ONLY = {"integrality"}


def _plain(value):
    if isinstance(value, tuple):
        return [_plain(v) for v in value]
    return value


def run_case(task: tuple) -> dict:
    suite, key = task
    check = SUITES[suite][1]
    try:
        problems = check(*key)
    except Exception as exc:  # a crash is a failed case with its message as witness
        problems = [f"{type(exc).__name__}: {exc}"]
    record = {"case": _plain(key), "passed": not problems}
    if problems:
        record["witness"] = problems[:3]
    return record


def suite_names(name: str) -> list[str]:
    if name == "all":
        return list(SUITES)
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)} or all")
    return [name]


def collect(names: Iterable[str], params: dict | None = None) -> list[tuple]:
    params = params or {}
    return [(s, tuple(key)) for s in names for key in SUITES[s][0](params)]


def run(name: str, params: dict | None = None, jobs: int = 1) -> dict:
    """Run a suite (or ``all``) and return a report with canonical ordering."""
    names = suite_names(name)
    tasks = collect(names, params)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            records = list(pool.map(run_case, tasks, chunksize=4))
    else:
        records = [run_case(t) for t in tasks]
    suites = []
    for s in names:
        cases = [rec for (suite, _), rec in zip(tasks, records) if suite == s]
        failed = sum(1 for c in cases if not c["passed"])
        suites.append({"name": s, "report_only": s in REPORT_ONLY, "cases": cases,
                       "passed": len(cases) - failed, "failed": failed})
    ok = all(s["failed"] == 0 for s in suites if not s["report_only"])
    return {"ok": ok, "suites": suites}
