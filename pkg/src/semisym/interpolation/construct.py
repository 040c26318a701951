"""Construction of the interpolation polynomials R_lam.

R_lam is the unique semisymmetric polynomial of degree |lam|_odd with
coefficient 1 on z^[lam] that vanishes at rho + mu for every other mu in
Lambda(|lam|_odd).  Construction:

* strip full columns: if lam_n >= 1 then
  R_lam(z) = (prod_{n-i even} z_i) * R_{lam - (1,...,1)}(z - (1,...,1));
* otherwise solve the square system on the nodes Lambda(d) in the basis
  e_mu, mu in Lambda(d).  One elimination per (n, d) serves every target.
"""
from __future__ import annotations

import threading
from functools import lru_cache
from typing import Mapping, Sequence

from ..combinatorics import node, odd_weight, partition, partitions_upto
from ..exactalg import MultiPoly, ParamScalar, scalar, solve
from ..combinatorics import bracket
from .elementary import e_basis_element, generator_values, semisym_generator

_lock = threading.RLock()
_R_CACHE: dict[tuple, MultiPoly] = {}


def _e_mu_value(mu: Sequence[int], gens: Sequence[ParamScalar]) -> ParamScalar:
    n = len(mu)
    out = ParamScalar(1)
    for k in range(n):
        e = mu[k] - (mu[k + 1] if k + 1 < n else 0)
        if e:
            out = out * gens[k] ** e
    return out


@lru_cache(maxsize=None)
def node_matrix(n: int, d: int) -> tuple:
    """Rows: nodes rho + nu; columns: e_mu; both indexed by Lambda(d)."""
    lams = partitions_upto(n, d)
    rows = []
    for nu in lams:
        gens = generator_values(node(nu), n)
        rows.append(tuple(_e_mu_value(mu, gens) for mu in lams))
    return tuple(rows)


def interpolate(n: int, d: int, values: Mapping[tuple, object]) -> MultiPoly:
    """The semisymmetric f of degree <= d with f(rho + nu) = values[nu] on Lambda(d).

    Missing nodes count as zero.
    """
    lams = partitions_upto(n, d)
    unknown = set(values) - set(lams)
    if unknown:
        raise ValueError(f"values given at nodes outside Lambda({d}): {sorted(unknown)}")
    rhs = [scalar(values.get(nu, 0)) for nu in lams]
    coeffs = solve(node_matrix(n, d), [rhs])[0]
    return _combine(lams, coeffs, n)


def _combine(basis: Sequence[tuple], coeffs: Sequence[ParamScalar], n: int) -> MultiPoly:
    out = MultiPoly.zero(n)
    for mu, c in zip(basis, coeffs):
        if not c.is_zero():
            out = out + e_basis_element(mu) * c
    return out


@lru_cache(maxsize=None)
def _top_solutions(n: int, d: int) -> dict:
    """e-basis coefficients of r_lam for every lam in Lambda(d) with |lam|_odd = d, lam_n = 0."""
    lams = partitions_upto(n, d)
    targets = [lam for lam in lams if odd_weight(lam) == d and lam[-1] == 0]
    if not targets:
        return {}
    rhs = [[ParamScalar(1) if nu == lam else ParamScalar(0) for nu in lams] for lam in targets]
    sols = solve(node_matrix(n, d), rhs)
    return {lam: sol for lam, sol in zip(targets, sols)}


def _solve_column_free(lam: tuple) -> MultiPoly:
    n = len(lam)
    d = odd_weight(lam)
    coeffs = _top_solutions(n, d)[lam]
    r_lam = _combine(partitions_upto(n, d), coeffs, n)
    lead = r_lam.coeff(bracket(lam))
    if lead.is_zero():
        raise ArithmeticError(f"leading coefficient of r_{lam} vanished")
    return r_lam.scale(lead.inverse())


def build_R(lam: Sequence[int], n: int | None = None) -> MultiPoly:
    """The interpolation polynomial R_lam, memoized per (n, lam)."""
    n = len(lam) if n is None else n
    lam = partition(lam, n)
    with _lock:
        hit = _R_CACHE.get(lam)
    if hit is not None:
        return hit
    if n == 0:
        out = MultiPoly.one(0)
    elif lam[-1] >= 1:
        inner = build_R(tuple(x - 1 for x in lam), n)
        out = column_factor(n) * inner.shift([1] * n)
    else:
        out = _solve_column_free(lam)
    with _lock:
        _R_CACHE.setdefault(lam, out)
        return _R_CACHE[lam]


def build_r(lam: Sequence[int], n: int | None = None) -> MultiPoly:
    """Normalized version with value 1 at rho + lam."""
    R = build_R(lam, n)
    value = R.evaluate(node(partition(lam, R.n)))
    return R.scale(value.inverse())


def column_factor(n: int) -> MultiPoly:
    """prod over i with n - i even of z_i; equals the top generator e_n."""
    return semisym_generator(n, n)


def clear_cache() -> None:
    with _lock:
        _R_CACHE.clear()
    _top_solutions.cache_clear()
    node_matrix.cache_clear()
