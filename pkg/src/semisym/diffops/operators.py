"""The commuting difference operators X(t) and Y(t).

Each operator is phi(z)^{-1} det(M(t)) for an n x n matrix M whose row i
only involves one variable and its unit shift.  Expanding the determinant
gives the cleared-denominator form  det M(t) = sum_S c_S(z) T_S,  with
T_S f(z) = f(z - e_S).  Applying the operator means forming
sum_S c_S(z) f(z - e_S) and dividing exactly by phi.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from ..combinatorics import n_even, n_odd, node
from ..exactalg import MultiPoly, ParamScalar, R_S, scalar

MAX_EXPANSION_N = 7
KINDS = ("X", "Y")


class ExpansionTooLarge(ValueError):
    pass


@dataclass
class OperatorMatrix:
    """Rows of (variable index, [(plain, shifted) per column]).

    Entry (i, j) acts as plain + shifted * T_{var_i}; both parts are
    polynomials in the row variable only.
    """
    kind: str
    n: int
    t: ParamScalar
    rows: list = field(default_factory=list)


@dataclass
class OperatorExpansion:
    """sum_S coeffs[S] T_S, to be divided by phi; S is a sorted tuple of 1-based indices."""
    kind: str
    n: int
    label: str
    coeffs: dict

    def apply(self, f: MultiPoly) -> MultiPoly:
        return apply_expansion(self, f)

    def support(self) -> list[tuple]:
        return sorted(self.coeffs, key=lambda s: (len(s), s))

    def coefficient_at(self, subset: Sequence[int], point: Sequence) -> ParamScalar:
        """c_S(point) / phi(point)."""
        c = self.coeffs.get(tuple(sorted(subset)))
        if c is None:
            return ParamScalar(0)
        return c.evaluate(point) / phi(self.n).evaluate(point)


def row_variables(n: int) -> list[int]:
    """z-indices of the matrix rows: x_1..x_{nodd} (odd z's), then y_1..y_{neven}."""
    return list(range(1, n + 1, 2)) + list(range(2, n + 1, 2))


def operator_matrix(kind: str, n: int, t) -> OperatorMatrix:
    if kind not in KINDS:
        raise ValueError(f"operator kind must be X or Y, not {kind!r}")
    t = scalar(t)
    no, ne = n_odd(n), n_even(n)
    rows = []
    for var in row_variables(n):
        v = MultiPoly.variable(n, var)
        vr = v + R_S
        vt = v + t
        entries = []
        is_x = var % 2 == 1
        for col in range(n):
            first = col < no
            j = col + 1 if first else col + 1 - no
            if kind == "X":
                if is_x and first:
                    plain, shifted = vt * vr ** (no - j), -(v ** (no + 1 - j))
                elif is_x:
                    plain, shifted = MultiPoly.zero(n), -(v ** (no - j))
                elif first:
                    plain, shifted = vr ** (ne + 1 - j), -(v ** (ne + 1 - j))
                else:
                    plain, shifted = vr ** (ne - j), MultiPoly.zero(n)
            else:
                if is_x and first:
                    plain, shifted = vr ** (no - j), MultiPoly.zero(n)
                elif is_x:
                    plain, shifted = vr ** (no - j), -(v ** (no - j))
                elif first:
                    plain, shifted = MultiPoly.zero(n), -(v ** (ne + 1 - j))
                else:
                    plain, shifted = vt * vr ** (ne - j), -(v ** (ne + 1 - j))
            entries.append((plain, shifted))
        rows.append((var, entries))
    return OperatorMatrix(kind, n, t, rows)


def determinant_expand(matrix: OperatorMatrix) -> dict:
    """Leibniz expansion of an operator matrix into {S: c_S}.

    Permutations are enumerated row by row with shared prefixes: the state
    after k rows is (columns used, shifted variables) and carries the signed
    partial product, so each permutation's product is built incrementally.
    """
    n = matrix.n
    if n > MAX_EXPANSION_N:
        raise ExpansionTooLarge(f"determinant expansion refused for n={n} > {MAX_EXPANSION_N}")
    states: dict = {(0, 0): MultiPoly.one(n)}
    for var, entries in matrix.rows:
        nxt: dict = {}
        for (cols, shifts), val in states.items():
            for j, (plain, shifted) in enumerate(entries):
                if cols >> j & 1:
                    continue
                sign = -1 if bin(cols >> (j + 1)).count("1") % 2 else 1
                for part, bit in ((plain, 0), (shifted, 1 << (var - 1))):
                    if part.is_zero():
                        continue
                    key = (cols | 1 << j, shifts | bit)
                    term = val * part
                    if sign < 0:
                        term = -term
                    prev = nxt.get(key)
                    nxt[key] = term if prev is None else prev + term
        states = {k: v for k, v in nxt.items() if not v.is_zero()}
    out = {}
    for (_, shifts), val in states.items():
        subset = tuple(i + 1 for i in range(n) if shifts >> i & 1)
        out[subset] = val
    return out


def in_p_odd(subset: Sequence[int]) -> bool:
    odd = sum(1 for i in subset if i % 2)
    even = len(subset) - odd
    return odd == even or odd == even + 1


def in_p_even(subset: Sequence[int]) -> bool:
    odd = sum(1 for i in subset if i % 2)
    return 2 * odd == len(subset)


def allowed_subsets(kind: str, n: int) -> list[tuple]:
    test = in_p_odd if kind == "X" else in_p_even
    out = []
    for mask in range(1 << n):
        s = tuple(i + 1 for i in range(n) if mask >> i & 1)
        if test(s):
            out.append(s)
    return out


@lru_cache(maxsize=None)
def phi_factors(n: int) -> tuple:
    """Pairs (i, j), i < j, j - i even: phi = prod (z_i - z_j)."""
    return tuple((i, j) for i in range(1, n + 1) for j in range(i + 2, n + 1, 2))


@lru_cache(maxsize=None)
def phi(n: int) -> MultiPoly:
    out = MultiPoly.one(n)
    for i, j in phi_factors(n):
        out = out * (MultiPoly.variable(n, i) - MultiPoly.variable(n, j))
    return out


def divide_by_phi(g: MultiPoly) -> MultiPoly:
    for i, j in phi_factors(g.n):
        g = g.div_linear(i, j)
    return g


_cache_lock = threading.Lock()
_EXPANSIONS: dict = {}


def expansion(kind: str, n: int, t) -> OperatorExpansion:
    """Cleared-denominator expansion of X(t) or Y(t) at a rational t."""
    t = scalar(t)
    key = (kind, n, t.num, t.den)
    with _cache_lock:
        hit = _EXPANSIONS.get(key)
    if hit is not None:
        return hit
    coeffs = determinant_expand(operator_matrix(kind, n, t))
    allowed = set(allowed_subsets(kind, n))
    stray = [s for s in coeffs if s not in allowed]
    if stray:
        raise ArithmeticError(f"{kind}({t}) has shift terms outside the allowed subsets: {stray}")
    out = OperatorExpansion(kind, n, f"{kind}({t})", coeffs)
    with _cache_lock:
        _EXPANSIONS.setdefault(key, out)
        return _EXPANSIONS[key]


def t_degree(kind: str, n: int) -> int:
    return n_odd(n) if kind == "X" else n_even(n)


def _sample_points(n: int) -> list[int]:
    return list(range(n_odd(n) + 1))


@lru_cache(maxsize=None)
def _vandermonde_inverse(points: tuple) -> list[list[Fraction]]:
    size = len(points)
    rows = [[Fraction(p) ** k for k in range(size)] for p in points]
    inv = [[Fraction(int(i == j)) for j in range(size)] for i in range(size)]
    for col in range(size):
        piv = next(i for i in range(col, size) if rows[i][col] != 0)
        rows[col], rows[piv] = rows[piv], rows[col]
        inv[col], inv[piv] = inv[piv], inv[col]
        scale = rows[col][col]
        rows[col] = [x / scale for x in rows[col]]
        inv[col] = [x / scale for x in inv[col]]
        for i in range(size):
            if i != col and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[col])]
                inv[i] = [a - f * b for a, b in zip(inv[i], inv[col])]
    return inv


@lru_cache(maxsize=None)
def components(kind: str, n: int) -> tuple:
    """(D_0, D_1, ..., D_m): D(t) = sum_i t^(m - i) D_i with m the t-degree.

    Obtained from exact samples t = 0..nodd by solving the Vandermonde system.
    """
    points = _sample_points(n)
    samples = [expansion(kind, n, p) for p in points]
    inv = _vandermonde_inverse(tuple(points))
    subsets = sorted({s for e in samples for s in e.coeffs}, key=lambda s: (len(s), s))
    size = len(points)
    by_power = [dict() for _ in range(size)]
    for s in subsets:
        vals = [e.coeffs.get(s, MultiPoly.zero(n)) for e in samples]
        for k in range(size):
            acc = MultiPoly.zero(n)
            for j in range(size):
                if inv[k][j] and not vals[j].is_zero():
                    acc = acc + vals[j] * inv[k][j]
            if not acc.is_zero():
                by_power[k][s] = acc
    m = t_degree(kind, n)
    for k in range(m + 1, size):
        if by_power[k]:
            raise ArithmeticError(f"{kind}(t) has t-degree above {m}")
    return tuple(OperatorExpansion(kind, n, f"{kind}_{i}", by_power[m - i]) for i in range(m + 1))


def component(kind: str, i: int, n: int) -> OperatorExpansion:
    comps = components(kind, n)
    if not 0 <= i < len(comps):
        raise ValueError(f"{kind}_{i} does not exist for n={n}")
    return comps[i]


def apply_expansion(op: OperatorExpansion, f: MultiPoly) -> MultiPoly:
    if f.n != op.n:
        raise ValueError(f"operator on n={op.n} applied to a polynomial in {f.n} variables")
    total = MultiPoly.zero(op.n)
    for s, c in op.coeffs.items():
        shifted = f.shift([1 if i + 1 in s else 0 for i in range(op.n)]) if s else f
        total = total + c * shifted
    return divide_by_phi(total)


def apply(kind: str, f: MultiPoly, t) -> MultiPoly:
    """X(t) f or Y(t) f."""
    return expansion(kind, f.n, t).apply(f)


def apply_component(kind: str, i: int, f: MultiPoly) -> MultiPoly:
    return component(kind, i, f.n).apply(f)


def apply_top(kind: str, f: MultiPoly, t) -> MultiPoly:
    """Top-degree operator on a homogeneous f: the degree-d part of D(t) f."""
    d = f.degree()
    return apply(kind, f, t).homogeneous_component(d)


def apply_top_component(kind: str, i: int, f: MultiPoly) -> MultiPoly:
    d = f.degree()
    return apply_component(kind, i, f).homogeneous_component(d)


def eigenvalue(kind: str, lam: Sequence[int], t) -> ParamScalar:
    """prod over i of the operator's parity of (t + rho_i + lam_i)."""
    t = scalar(t)
    start = 0 if kind == "X" else 1
    out = ParamScalar(1)
    for i, x in enumerate(node(lam)):
        if i % 2 == start:
            out = out * (t + x)
    return out


def constant_term(op: OperatorExpansion) -> MultiPoly:
    """c_0 of the operator: coefficient of the identity shift, divided by phi."""
    c = op.coeffs.get((), MultiPoly.zero(op.n))
    return divide_by_phi(c)


def closed_form_coefficient(kind: str, subset: Sequence[int], point: Sequence, t) -> ParamScalar:
    """Coefficient of T_I at a point from the subset-sum formula (no determinant)."""
    n = len(point)
    z = [scalar(x) for x in point]
    t = scalar(t)
    members = set(subset)
    test = in_p_odd if kind == "X" else in_p_even
    if not test(tuple(sorted(members))):
        return ParamScalar(0)
    parity = 1 if kind == "X" else 0
    out = ParamScalar(-1 if sum(1 for i in members if i % 2) % 2 else 1)
    for i in range(1, n + 1):
        if i not in members and i % 2 == parity:
            out = out * (t + z[i - 1])
    for i in members:
        if (n - i) % 2 == 0:
            out = out * z[i - 1]
        for j in range(1, n + 1):
            if j in members:
                continue
            if (j - i) % 2:
                out = out * (z[i - 1] - z[j - 1] - R_S)
            else:
                out = out / (z[i - 1] - z[j - 1])
    return out


def cutoff_violations(op: OperatorExpansion, mu: Sequence[int]) -> list[tuple]:
    """Subsets S with mu - e_S not a partition but c_S(rho + mu) != 0."""
    bad = []
    point = node(mu)
    for s, c in op.coeffs.items():
        lowered = [m - (1 if i + 1 in s else 0) for i, m in enumerate(mu)]
        ok = all(x >= 0 for x in lowered) and all(a >= b for a, b in zip(lowered, lowered[1:]))
        if ok:
            continue
        if not c.evaluate(point).is_zero():
            bad.append(s)
    return bad


def euler_field(f: MultiPoly) -> MultiPoly:
    """sum_i z_i d/dz_i f."""
    out = MultiPoly.zero(f.n)
    for i in range(1, f.n + 1):
        out = out + MultiPoly.variable(f.n, i) * f.derivative(i)
    return out


def eta(f: MultiPoly) -> MultiPoly:
    """Top-degree X_1 minus nodd*neven*r; agrees with the Euler field on homogeneous f."""
    n = f.n
    return apply_top_component("X", 1, f) - f * (R_S * (n_odd(n) * n_even(n)))


def eta_prime(f: MultiPoly) -> MultiPoly:
    """Top-degree X_1 - Y_1 - neven*r; multiplies Rbar_lam by [lam]_1."""
    n = f.n
    x1 = apply_top_component("X", 1, f)
    y1 = apply_top_component("Y", 1, f) if n_even(n) else MultiPoly.zero(n)
    return x1 - y1 - f * (R_S * n_even(n))

