"""Fully symmetric shifted Jack polynomials, used as an independent oracle.

P_lam(z; s) in N variables is symmetric of degree |lam|, has coefficient 1
on z^lam, and vanishes at rho_s + mu for all partitions mu != lam with
|mu| <= |lam|, where rho_s = ((N-1) s, ..., s, 0).  It is computed here by
its own linear solve in the monomial symmetric basis.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import permutations
from typing import Sequence

from ..exactalg import MultiPoly, ParamScalar, scalar, solve


def _partitions_up_to_size(size: int, length: int) -> list[tuple]:
    out = []

    def rec(prefix, left, cap):
        if len(prefix) == length:
            out.append(tuple(prefix))
            return
        for x in range(min(cap, left), -1, -1):
            rec(prefix + [x], left - x, x)

    for total in range(size + 1):
        before = len(out)
        rec([], total, total)
        out[before:] = [p for p in out[before:] if sum(p) == total]
    return sorted(set(out), key=lambda p: (sum(p), p))


def _distinct_perms(nu: tuple) -> set:
    return set(permutations(nu))


def monomial_symmetric(nu: tuple, N: int) -> MultiPoly:
    out = MultiPoly.zero(N)
    for exps in _distinct_perms(nu):
        out = out + MultiPoly.monomial(N, exps)
    return out


def _m_value(nu: tuple, point: Sequence[ParamScalar]) -> ParamScalar:
    acc = ParamScalar(0)
    for exps in _distinct_perms(nu):
        term = ParamScalar(1)
        for x, e in zip(point, exps):
            if e:
                term = term * x ** e
        acc = acc + term
    return acc


def jack_rho(N: int, step) -> list[ParamScalar]:
    step = scalar(step)
    return [step * (N - 1 - i) for i in range(N)]


@lru_cache(maxsize=None)
def _jack(lam: tuple, step_key: tuple) -> MultiPoly:
    step = ParamScalar.from_pair(*step_key)
    N = len(lam)
    if N == 0:
        return MultiPoly.one(0)
    basis = _partitions_up_to_size(sum(lam), N)
    base = jack_rho(N, step)
    matrix = [[_m_value(nu, [b + m for b, m in zip(base, mu)]) for nu in basis] for mu in basis]
    rhs = [ParamScalar(1) if mu == lam else ParamScalar(0) for mu in basis]
    coeffs = solve(matrix, [rhs])[0]
    poly = MultiPoly.zero(N)
    for nu, c in zip(basis, coeffs):
        if not c.is_zero():
            poly = poly + monomial_symmetric(nu, N) * c
    lead = poly.coeff(lam)
    return poly.scale(lead.inverse())


def build_shifted_jack(lam: Sequence[int], N: int, step) -> MultiPoly:
    """P_lam(z; step) in N variables."""
    lam = tuple(lam) + (0,) * (N - len(lam))
    if len(lam) > N:
        raise ValueError(f"{lam} is longer than N={N}")
    step = scalar(step)
    return _jack(lam, (step.num, step.den))


def shifted_jack_in_u(lam: Sequence[int], N: int, step) -> MultiPoly:
    """P_lam(rho_step + v; step) as a polynomial in v."""
    P = build_shifted_jack(lam, N, step)
    return P.shift([-x for x in jack_rho(N, step)])
