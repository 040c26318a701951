"""Closed formulas for hooks, two-row diagrams and three variables, the degree-3 table,
and the comparisons with fully symmetric shifted Jack polynomials."""
from __future__ import annotations

import json
from functools import lru_cache
from importlib import resources
from math import comb, factorial
from typing import Sequence

from ..combinatorics import (bracket_one, even_part, generalized_binomial, hook_even, n_even,
                             n_odd, node, odd_part, odd_weight, partition,
                             partitions_of_odd_weight)
from ..exactalg import MultiPoly, ParamScalar, R_S
from ..interpolation import build_R, e_basis_element, shifted_elementary
from ..interpolation.basis import to_basis, to_shifted_coordinates
from ..interpolation.elementary import elementary_symmetric, even_variables, odd_variables
from ..interpolation.jack import shifted_jack_in_u


def _column(k: int, n: int) -> MultiPoly:
    """R_(1^k), taken to be zero when k exceeds n."""
    if k > n:
        return MultiPoly.zero(n)
    return shifted_elementary(k, n)


def hook(a: int, m: int, n: int) -> MultiPoly:
    """Product formula for R_(a, 1^(m-1))."""
    if a < 1 or not 1 <= m <= n:
        raise ValueError(f"hook needs a >= 1 and 1 <= m <= n, got a={a}, m={m}, n={n}")
    r1 = _column(1, n)
    if m % 2 or a == 1:
        out = _column(m, n)
        for j in range(1, a):
            out = out * (r1 - j)
        return out
    ratio = ParamScalar(a - 1) / (R_S * m + (a - 1))
    out = r1 * _column(m, n) - _column(m + 1, n).scale(ratio)
    for j in range(1, a - 1):
        out = out * (r1 - j)
    return out


def hook_partition(a: int, m: int, n: int) -> tuple:
    return partition([a] + [1] * (m - 1), n)


def _multinomial(parts: Sequence[int]) -> int:
    out = factorial(sum(parts))
    for p in parts:
        out //= factorial(p)
    return out


def two_row_terms(a: int, b: int, n: int) -> dict:
    """Coefficients of e_mu in Rbar_(a, b)."""
    if not a >= b >= 0 or n < 2:
        raise ValueError(f"two-row formula needs a >= b >= 0 and n >= 2, got {a}, {b}, n={n}")
    norm = generalized_binomial(-2 * R_S, a) * comb(a, b)
    out = {}
    for mu in partitions_of_odd_weight(n, a):
        if sum(even_part(mu)) != b:
            continue
        gaps = [mu[i] - (mu[i + 1] if i + 1 < n else 0) for i in range(n)]
        c = generalized_binomial(-2 * R_S, mu[0]) * _multinomial(gaps) / norm
        if not c.is_zero():
            out[mu] = c
    return out


def from_e_basis(terms: dict, n: int) -> MultiPoly:
    out = MultiPoly.zero(n)
    for mu, c in terms.items():
        out = out + e_basis_element(mu) * c
    return out


def two_row(a: int, b: int, n: int) -> MultiPoly:
    return from_e_basis(two_row_terms(a, b, n), n)


def n3_terms(mu: Sequence[int]) -> dict:
    """Coefficients of e_1^i e_2^j e_3^k in Rbar_mu for three variables, keyed by partition."""
    m1, m2, m3 = partition(mu, 3)
    out = {}
    for k in range(min(m1 - m2, m2 - m3) + 1):
        c = ParamScalar(comb(m1 - m2, k) * comb(m2 - m3, k) * (-1) ** k)
        c = c / generalized_binomial(R_S * 2 + (m1 - m3 - 1), k)
        e1, e2, e3 = m1 - m2 - k, m2 - m3 - k, m3 + k
        out[(e1 + e2 + e3, e2 + e3, e3)] = c
    return out


def n3_closed_form(mu: Sequence[int]) -> MultiPoly:
    return from_e_basis(n3_terms(mu), 3)


# -- degree 3 table ---------------------------------------------------------

TABLE_RESOURCE = "table_deg3.json"


def _factor_key(mu: Sequence[int]) -> tuple:
    n = len(mu)
    out = []
    for k in range(1, n + 1):
        out += [k] * (mu[k - 1] - (mu[k] if k < n else 0))
    return tuple(out)


def column_product(factors: Sequence[int], n: int) -> MultiPoly:
    out = MultiPoly.one(n)
    for k in factors:
        out = out * _column(k, n)
    return out


def express_in_columns(f: MultiPoly) -> dict:
    """Write f as a polynomial in R_(1), ..., R_(1^n): {factor tuple: coefficient}.

    The top component is expanded in the generators e_mu, each e_mu is
    replaced by the matching product of column polynomials, and the
    lower-degree remainder is treated the same way.
    """
    n = f.n
    out: dict = {}
    rest = f
    while not rest.is_zero():
        top = to_basis(rest.top_component(), "elementary").coeffs
        for mu, c in top.items():
            key = _factor_key(mu)
            out[key] = out.get(key, ParamScalar(0)) + c
            rest = rest - column_product(key, n) * c
    return {k: v for k, v in out.items() if not v.is_zero()}


def table_partitions(deg: int = 3) -> list[tuple]:
    """Non-column partitions with odd weight <= deg, as trimmed tuples."""
    n = 2 * deg
    out = []
    for d in range(1, deg + 1):
        for lam in partitions_of_odd_weight(n, d):
            if lam[0] > 1:
                out.append(tuple(x for x in lam if x))
    return sorted(out, key=lambda lam: (lam[0], odd_weight(lam), lam))


def table_relations(deg: int = 3) -> list[dict]:
    """Relations derived from the polynomials themselves, in enough variables to separate them."""
    n = 2 * deg
    rows = []
    for lam in table_partitions(deg):
        terms = express_in_columns(build_R(lam, n))
        rows.append({"lambda": list(lam), "terms": _sorted_terms(terms)})
    return rows


def _sorted_terms(terms: dict) -> list[dict]:
    order = sorted(terms, key=lambda f: (-sum((k + 1) // 2 for k in f), -len(f), f))
    return [{"factors": list(f), "num": list(terms[f].num), "den": list(terms[f].den)}
            for f in order]


def load_golden() -> list[dict]:
    text = resources.files("semisym.data").joinpath(TABLE_RESOURCE).read_text()
    return json.loads(text)["rows"]


def golden_terms(row: dict) -> dict:
    return {tuple(t["factors"]): ParamScalar.from_pair(tuple(t["num"]), tuple(t["den"]))
            for t in row["terms"]}


def table_row_holds(row: dict, n: int) -> bool:
    """Check one golden relation as a polynomial identity in n variables."""
    lam = tuple(row["lambda"])
    lhs = build_R(lam, n) if len(lam) <= n else MultiPoly.zero(n)
    rhs = MultiPoly.zero(n)
    for factors, c in golden_terms(row).items():
        rhs = rhs + column_product(factors, n) * c
    return lhs == rhs


def format_relation(row: dict) -> str:
    def name(parts):
        return "R(" + ",".join(str(p) for p in parts) + ")"

    pieces = []
    for t in row["terms"]:
        c = ParamScalar.from_pair(tuple(t["num"]), tuple(t["den"]))
        prod = "*".join(name([1] * k) for k in t["factors"]) or "1"
        if c.is_one():
            pieces.append(f"+ {prod}")
        elif (-c).is_one():
            pieces.append(f"- {prod}")
        else:
            neg = c.num[-1] < 0
            mag = -c if neg else c
            text = str(mag) if mag.is_constant() and mag.den == (1,) else f"({mag})"
            pieces.append(f"{'-' if neg else '+'} {text}*{prod}")
    body = " ".join(pieces)
    if body.startswith("+ "):
        body = body[2:]
    return f"{name(row['lambda'])} = {body}"


# -- comparison with fully symmetric shifted Jack polynomials ------------------

def _embed(poly: MultiPoly, n: int, positions: Sequence[int]) -> MultiPoly:
    return poly.rekey(n, positions)


def jack_column_side(lam: Sequence[int], n: int) -> tuple[MultiPoly, MultiPoly]:
    """R_lam(rho + u) and the Jack polynomial in the even u's, for [lam]_1 = 0."""
    lam = partition(lam, n)
    if bracket_one(lam) != 0:
        raise ValueError(f"{lam} has [lam]_1 != 0")
    lhs = to_shifted_coordinates(build_R(lam, n))
    ne = n_even(n)
    if ne == 0:
        return lhs, MultiPoly.one(n)
    jack = shifted_jack_in_u(even_part(lam), ne, R_S * 2)
    return lhs, _embed(jack, n, list(range(2, n + 1, 2)))


def jack_sum_sides(mu: Sequence[int], n: int) -> tuple[MultiPoly, MultiPoly]:
    """Sum of normalized R_lam(rho + u) over lam with odd part mu, and the odd Jack side."""
    no = n_odd(n)
    mu = partition(mu, no)
    lhs = MultiPoly.zero(n)
    for lam in partitions_of_odd_weight(n, sum(mu)):
        if odd_part(lam) != mu:
            continue
        R = build_R(lam, n)
        lhs = lhs + to_shifted_coordinates(R).scale(R.evaluate(node(lam)).inverse())
    jack = shifted_jack_in_u(mu, no, R_S * 2)
    rhs = _embed(jack, n, list(range(1, n + 1, 2)))
    return lhs, rhs.scale(jack.evaluate(list(mu)).inverse())


def _weighted_sum(vars_with_index, offset: int) -> MultiPoly:
    out = None
    for i, v in vars_with_index:
        term = v * (R_S * (i - offset))
        out = term if out is None else out + term
    return out


def elementary_shifted_formula(m: int, n: int) -> MultiPoly:
    """The explicit u-coordinate formulas for R_(1^m), m <= 4."""
    if not 1 <= m <= min(4, n):
        raise ValueError(f"explicit formula covers 1 <= m <= min(4, n), got m={m}, n={n}")
    odd, even = odd_variables(n), even_variables(n)
    odd_idx = list(zip(range(1, n + 1, 2), odd))
    even_idx = list(zip(range(2, n + 1, 2), even))
    zero = MultiPoly.zero(n)
    if m == 1:
        return elementary_symmetric(odd, 1, n) - elementary_symmetric(even, 1, n)
    if m == 2:
        return elementary_symmetric(even, 1, n)
    even_sum = _weighted_sum(even_idx, 2) or zero
    if m == 3:
        return (elementary_symmetric(odd, 2, n) - elementary_symmetric(even, 2, n)
                + (_weighted_sum(odd_idx, 1) or zero) - even_sum)
    return elementary_symmetric(even, 2, n) + even_sum


def elementary_jack_side(m: int, n: int) -> MultiPoly:
    """R_(1^m)(rho + u) from Jack polynomials in the odd and even u's."""
    k = (m + 1) // 2
    parts = []
    for positions in (list(range(1, n + 1, 2)), list(range(2, n + 1, 2))):
        if len(positions) < k:
            parts.append(MultiPoly.zero(n))
            continue
        jack = shifted_jack_in_u([1] * k, len(positions), R_S * 2)
        parts.append(_embed(jack, n, positions))
    return parts[0] - parts[1] if m % 2 else parts[1]


# -- conjectured integrality ---------------------------------------------------

@lru_cache(maxsize=None)
def _probe(lam: tuple) -> dict:
    n = len(lam)
    scaled = build_R(lam, n).scale(hook_even(lam))
    bad = [(e, str(c)) for e, c in scaled.items() if c.den != (1,)]
    return {"lambda": list(lam), "n": n, "factor": str(hook_even(lam)),
            "passed": not bad, "witness": bad[:1]}


def integrality_probe(lam: Sequence[int], n: int) -> dict:
    """Does the hook factor clear every denominator of R_lam?  Reported, not asserted."""
    return dict(_probe(partition(lam, n)))

