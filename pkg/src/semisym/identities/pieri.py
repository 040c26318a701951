"""Pieri rules: products with linear factors, elementary and shifted elementary polynomials.

Every rule returns ``{lam: coefficient}`` for the expansion in the R basis
(the R-bar basis for the homogeneous rule).  The ``direct_*`` functions
multiply first and convert afterwards; the two must agree.
"""
from __future__ import annotations

from itertools import combinations
from typing import Sequence

from ..combinatorics import (is_partition, n_even, n_odd, node, partition, pieri_coefficient)
from ..diffops.operators import allowed_subsets
from ..exactalg import MultiPoly, ParamScalar, R_S, scalar
from ..interpolation import build_R, semisym_generator, shifted_elementary
from ..interpolation.basis import build_Rbar, to_basis
from ..interpolation.elementary import elementary_symmetric, even_variables, odd_variables

PARITIES = ("odd", "even")


def _check_parity(parity: str) -> int:
    if parity not in PARITIES:
        raise ValueError(f"parity must be 'odd' or 'even', not {parity!r}")
    return 1 if parity == "odd" else 0


def _raised(mu: tuple, subset) -> tuple:
    return tuple(m + (1 if i + 1 in subset else 0) for i, m in enumerate(mu))


def _subsets(parity: str, n: int) -> list[tuple]:
    return allowed_subsets("X" if parity == "odd" else "Y", n)


def _nonzero(d: dict) -> dict:
    return {k: v for k, v in d.items() if not v.is_zero()}


def _add(out: dict, key, value):
    out[key] = out.get(key, ParamScalar(0)) + value


def pieri_t(mu: Sequence[int], parity: str, t, n: int) -> dict:
    """prod over i of the given parity of (t + z_i), times R_mu."""
    p = _check_parity(parity)
    mu = partition(mu, n)
    t = scalar(t)
    point = node(mu)
    out: dict = {}
    for subset in _subsets(parity, n):
        lam = _raised(mu, subset)
        if not is_partition(lam):
            continue
        coeff = pieri_coefficient(mu, subset)
        for i in range(1, n + 1):
            if i % 2 == p and i not in subset:
                coeff = coeff * (t + point[i - 1])
        _add(out, lam, coeff)
    return _nonzero(out)


def _group(parity: str, n: int) -> list[MultiPoly]:
    return odd_variables(n) if parity == "odd" else even_variables(n)


def direct_t(mu: Sequence[int], parity: str, t, n: int) -> dict:
    _check_parity(parity)
    t = scalar(t)
    factor = MultiPoly.one(n)
    for v in _group(parity, n):
        factor = factor * (v + t)
    return _expand(factor * build_R(mu, n))


def _expand(f: MultiPoly) -> dict:
    return _nonzero(to_basis(f, "R").coeffs)


def _esym_values(xs: Sequence[ParamScalar], m: int) -> ParamScalar:
    coeffs = [ParamScalar(1)] + [ParamScalar(0)] * len(xs)
    for k, x in enumerate(xs, start=1):
        for j in range(k, 0, -1):
            coeffs[j] = coeffs[j] + coeffs[j - 1] * x
    return coeffs[m] if 0 <= m <= len(xs) else ParamScalar(0)


def pieri_elementary(mu: Sequence[int], m: int, parity: str, n: int) -> dict:
    """e_m of the variables of one parity, times R_mu."""
    p = _check_parity(parity)
    size = n_odd(n) if p else n_even(n)
    if not 0 <= m <= size:
        raise ValueError(f"m={m} outside 0..{size}")
    mu = partition(mu, n)
    point = node(mu)
    out: dict = {}
    for subset in _subsets(parity, n):
        s = sum(1 for i in subset if i % 2 == p)
        if s > m:
            continue
        lam = _raised(mu, subset)
        if not is_partition(lam):
            continue
        rest = [point[i - 1] for i in range(1, n + 1) if i % 2 == p and i not in subset]
        _add(out, lam, _esym_values(rest, m - s) * pieri_coefficient(mu, subset))
    return _nonzero(out)


def direct_elementary(mu: Sequence[int], m: int, parity: str, n: int) -> dict:
    _check_parity(parity)
    factor = elementary_symmetric(_group(parity, n), m, n)
    return _expand(factor * build_R(mu, n))


def complement_map(subset: Sequence[int], n: int, reverse: bool = False) -> list[int]:
    """Parity preserving bijection from positions s+1..n onto the complement of subset.

    Positions of each parity are matched in increasing order, or in reverse
    order within each parity class when ``reverse`` is set.
    """
    s = len(subset)
    rest = [i for i in range(1, n + 1) if i not in subset]
    pools = {par: [i for i in rest if i % 2 == par] for par in (0, 1)}
    if reverse:
        pools = {par: pool[::-1] for par, pool in pools.items()}
    out = []
    for pos in range(s + 1, n + 1):
        pool = pools[pos % 2]
        if not pool:
            raise ValueError(f"no parity preserving bijection for {tuple(subset)} in n={n}")
        out.append(pool.pop(0))
    return out


def primed_value(k: int, point: Sequence, subset: Sequence[int], n: int,
                 reverse: bool = False) -> ParamScalar:
    """R_(1^k) in n - |subset| variables evaluated at the complement of subset."""
    size = n - len(subset)
    if k == 0:
        return ParamScalar(1)
    if k > size:
        return ParamScalar(0)
    targets = complement_map(subset, n, reverse)
    return shifted_elementary(k, size).evaluate([point[i - 1] for i in targets])


def pieri_shifted(mu: Sequence[int], m: int, n: int, reverse: bool = False) -> dict:
    """R_(1^m) times R_mu."""
    if not 0 <= m <= n:
        raise ValueError(f"m={m} outside 0..{n}")
    mu = partition(mu, n)
    point = node(mu)
    parity = "odd" if m % 2 else "even"
    out: dict = {}
    for subset in _subsets(parity, n):
        s = len(subset)
        if s > m:
            continue
        lam = _raised(mu, subset)
        if not is_partition(lam):
            continue
        c = primed_value(m - s, point, subset, n, reverse)
        if not c.is_zero():
            _add(out, lam, c * pieri_coefficient(mu, subset))
    return _nonzero(out)


def direct_shifted(mu: Sequence[int], m: int, n: int) -> dict:
    return _expand(shifted_elementary(m, n) * build_R(mu, n))


def homogeneous_subsets(m: int, n: int) -> list[tuple]:
    odd = [i for i in range(1, n + 1, 2)]
    even = [i for i in range(2, n + 1, 2)]
    out = []
    for a in combinations(odd, (m + 1) // 2):
        for b in combinations(even, m // 2):
            out.append(tuple(sorted(a + b)))
    return sorted(out)


def pieri_homogeneous(mu: Sequence[int], m: int, n: int) -> dict:
    """Generator e_m times Rbar_mu, in the R-bar basis."""
    if not 1 <= m <= n:
        raise ValueError(f"m={m} outside 1..{n}")
    mu = partition(mu, n)
    out: dict = {}
    for subset in homogeneous_subsets(m, n):
        lam = _raised(mu, subset)
        if is_partition(lam):
            _add(out, lam, pieri_coefficient(mu, subset))
    return _nonzero(out)


def direct_homogeneous(mu: Sequence[int], m: int, n: int) -> dict:
    f = semisym_generator(m, n) * build_Rbar(mu, n)
    return _nonzero(to_basis(f, "rbar").coeffs)


# -- the displayed three-variable examples --------------------------------

def _n3_ratios(mu: Sequence[int]) -> tuple[ParamScalar, ParamScalar]:
    m1, m2, m3 = mu
    two_r = R_S * 2
    den = (two_r + (m1 - m3)) * (two_r + (m1 - m3 - 1))
    c3 = (two_r + (m2 - m3 - 1)) * (m2 - m3) / den
    c23 = (two_r + (m1 - m2 - 1)) * (m1 - m2) / den
    return c3, c23


def _collect(pairs) -> dict:
    out: dict = {}
    for lam, c in pairs:
        if c.is_zero():
            continue
        if not is_partition(lam):
            raise ArithmeticError(f"nonzero coefficient on {lam}, which is not a partition")
        _add(out, lam, c)
    return _nonzero(out)


def example_odd_sum(mu: Sequence[int]) -> dict:
    """(z1 + z3) R_mu for n = 3."""
    mu = partition(mu, 3)
    m1, m2, m3 = mu
    c3, c23 = _n3_ratios(mu)
    one = ParamScalar(1)
    return _collect([
        (mu, R_S * 2 + (m1 + m3)),
        ((m1 + 1, m2, m3), one),
        ((m1, m2, m3 + 1), c3),
        ((m1 + 1, m2 + 1, m3), one),
        ((m1, m2 + 1, m3 + 1), c23),
    ])


def example_even(mu: Sequence[int]) -> dict:
    """z2 R_mu for n = 3."""
    mu = partition(mu, 3)
    m1, m2, m3 = mu
    _, c23 = _n3_ratios(mu)
    return _collect([
        (mu, R_S + m2),
        ((m1 + 1, m2 + 1, m3), ParamScalar(1)),
        ((m1, m2 + 1, m3 + 1), c23),
    ])


def example_odd_product(mu: Sequence[int]) -> dict:
    """z1 z3 R_mu for n = 3."""
    mu = partition(mu, 3)
    m1, m2, m3 = mu
    c3, c23 = _n3_ratios(mu)
    a = R_S * 2 + m1
    low = scalar(m3)
    return _collect([
        (mu, a * low),
        ((m1 + 1, m2, m3), low),
        ((m1, m2, m3 + 1), a * c3),
        ((m1 + 1, m2 + 1, m3), low),
        ((m1, m2 + 1, m3 + 1), a * c23),
        ((m1 + 1, m2 + 1, m3 + 1), ParamScalar(1)),
    ])


def example_column(mu: Sequence[int]) -> dict:
    """R_(1) R_mu for n = 3."""
    mu = partition(mu, 3)
    m1, m2, m3 = mu
    c3, _ = _n3_ratios(mu)
    return _collect([
        (mu, scalar(m1 - m2 + m3)),
        ((m1 + 1, m2, m3), ParamScalar(1)),
        ((m1, m2, m3 + 1), c3),
    ])


EXAMPLE_FACTORS = {
    "odd_sum": lambda: MultiPoly.variable(3, 1) + MultiPoly.variable(3, 3),
    "even": lambda: MultiPoly.variable(3, 2),
    "odd_product": lambda: MultiPoly.variable(3, 1) * MultiPoly.variable(3, 3),
    "column": lambda: shifted_elementary(1, 3),
}

EXAMPLES = {
    "odd_sum": example_odd_sum,
    "even": example_even,
    "odd_product": example_odd_product,
    "column": example_column,
}


def example_direct(name: str, mu: Sequence[int]) -> dict:
    return _expand(EXAMPLE_FACTORS[name]() * build_R(mu, 3))


