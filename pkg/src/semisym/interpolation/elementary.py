"""Elementary semisymmetric polynomials and their shifted analogues.

The generators are  e_{2m-1} = e_m(z_odd) - e_m(z_even)  and
e_{2m} = e_m(z_even), where z_odd = (z_1, z_3, ...) and z_even = (z_2, z_4, ...).
"""
from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Sequence

from ..combinatorics import rho
from ..exactalg import ONE_S, R_S, MultiPoly, ParamScalar, scalar


def elementary_symmetric(polys: Sequence[MultiPoly], m: int, n: int) -> MultiPoly:
    """e_m of the given polynomials (coefficient of t^m in prod(1 + t*p))."""
    coeffs = [MultiPoly.one(n)] + [MultiPoly.zero(n)] * len(polys)
    for k, p in enumerate(polys, start=1):
        for j in range(k, 0, -1):
            coeffs[j] = coeffs[j] + coeffs[j - 1] * p
    return coeffs[m] if m <= len(polys) else MultiPoly.zero(n)


def odd_variables(n: int) -> list[MultiPoly]:
    return [MultiPoly.variable(n, i) for i in range(1, n + 1, 2)]


def even_variables(n: int) -> list[MultiPoly]:
    return [MultiPoly.variable(n, i) for i in range(2, n + 1, 2)]


@lru_cache(maxsize=None)
def semisym_generator(k: int, n: int) -> MultiPoly:
    """The k-th elementary semisymmetric polynomial, 1 <= k <= n (1 for k = 0)."""
    if k == 0:
        return MultiPoly.one(n)
    if not 1 <= k <= n:
        raise ValueError(f"generator index {k} outside 1..{n}")
    m = (k + 1) // 2
    if k % 2:
        return (elementary_symmetric(odd_variables(n), m, n)
                - elementary_symmetric(even_variables(n), m, n))
    return elementary_symmetric(even_variables(n), m, n)


def elementary_semisym(m: int, n: int, shifted: bool = False) -> MultiPoly:
    """Generator e_m, or with ``shifted`` the interpolation polynomial R_(1^m)."""
    if shifted:
        return shifted_elementary(m, n)
    return semisym_generator(m, n)


@lru_cache(maxsize=None)
def e_basis_element(mu: tuple) -> MultiPoly:
    """e_mu = e_1^(mu_1 - mu_2) e_2^(mu_2 - mu_3) ... e_n^(mu_n); leading term z^[mu]."""
    n = len(mu)
    out = MultiPoly.one(n)
    for k in range(1, n + 1):
        e = mu[k - 1] - (mu[k] if k < n else 0)
        if e:
            out = out * semisym_generator(k, n) ** e
    return out


def generator_values(point: Sequence, n: int) -> list[ParamScalar]:
    """[e_1(point), ..., e_n(point)] computed from the elementary symmetric values."""
    odd = [scalar(x) for x in point[0::2]]
    even = [scalar(x) for x in point[1::2]]
    eo = _esym_values(odd)
    ee = _esym_values(even)
    out = []
    for k in range(1, n + 1):
        m = (k + 1) // 2
        vo = eo[m] if m < len(eo) else ParamScalar(0)
        ve = ee[m] if m < len(ee) else ParamScalar(0)
        out.append(vo - ve if k % 2 else ve)
    return out


def _esym_values(xs: Sequence[ParamScalar]) -> list[ParamScalar]:
    coeffs = [ONE_S] + [ParamScalar(0)] * len(xs)
    for k, x in enumerate(xs, start=1):
        for j in range(k, 0, -1):
            coeffs[j] = coeffs[j] + coeffs[j - 1] * x
    return coeffs


def shifted_elementary_jack(m: int, group: Sequence[MultiPoly], step, n: int) -> MultiPoly:
    """Sum over i_1 > ... > i_m of prod_j (u_{i_j} + (j-1) step) for the given variables."""
    step = scalar(step)
    total = MultiPoly.zero(n)
    size = len(group)
    for chosen in combinations(range(size), m):
        desc = sorted(chosen, reverse=True)
        term = MultiPoly.one(n)
        for j, idx in enumerate(desc):
            term = term * (group[idx] + step * j)
        total = total + term
    return total


@lru_cache(maxsize=None)
def shifted_elementary(m: int, n: int) -> MultiPoly:
    """R_(1^m) from the column formula in coordinates u = z - rho.

    Odd m = 2k-1:  P(u_odd) - P(u_even);  even m = 2k:  P(u_even),
    where P is the shifted elementary Jack sum of length k with step 2r.
    """
    if m == 0:
        return MultiPoly.one(n)
    if not 1 <= m <= n:
        raise ValueError(f"R_(1^{m}) needs 1 <= m <= n = {n}")
    k = (m + 1) // 2
    two_r = R_S * 2
    odd = odd_variables(n)
    even = even_variables(n)
    if m % 2:
        poly_u = (shifted_elementary_jack(k, odd, two_r, n)
                  - shifted_elementary_jack(k, even, two_r, n))
    else:
        poly_u = shifted_elementary_jack(k, even, two_r, n)
    return poly_u.shift(rho(n))

