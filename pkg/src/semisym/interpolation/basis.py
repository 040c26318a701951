"""Expansions of semisymmetric polynomials in the standard bases.

Bases: ``monomial`` (plain coefficients), ``elementary`` (e_mu),
``R`` (the interpolation polynomials) and ``rbar`` (their top-degree
components, for homogeneous input).
"""
from __future__ import annotations

import threading
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from ..combinatorics import bracket_inverse, is_partition, node, odd_weight, partitions_upto, rho
from ..exactalg import MultiPoly, ParamScalar
from .construct import build_R
from .elementary import e_basis_element

BASES = ("monomial", "elementary", "R", "rbar")


class NotSemisymmetric(ValueError):
    pass


@dataclass
class Expansion:
    """Coefficients of a polynomial in one of the named bases.

    Keys are exponent vectors for ``monomial`` and partitions otherwise.
    """
    basis: str
    n: int
    coeffs: dict = field(default_factory=dict)

    def support(self) -> list[tuple]:
        return sorted(k for k, v in self.coeffs.items() if not v.is_zero())

    def __getitem__(self, key) -> ParamScalar:
        return self.coeffs.get(tuple(key), ParamScalar(0))

    def to_poly(self) -> MultiPoly:
        out = MultiPoly.zero(self.n)
        for key, c in self.coeffs.items():
            if c.is_zero():
                continue
            out = out + basis_element(self.basis, key, self.n) * c
        return out

    def __eq__(self, other):
        if not isinstance(other, Expansion):
            return NotImplemented
        if (self.basis, self.n) != (other.basis, other.n):
            return False
        keys = set(self.coeffs) | set(other.coeffs)
        return all(self[k] == other[k] for k in keys)

    def to_json(self) -> dict:
        return {"basis": self.basis, "n": self.n,
                "terms": [{"index": list(k), "num": list(self[k].num), "den": list(self[k].den)}
                          for k in self.support()]}


def basis_element(basis: str, key: Sequence[int], n: int) -> MultiPoly:
    key = tuple(key)
    if basis == "monomial":
        return MultiPoly.monomial(n, key)
    if basis == "elementary":
        return e_basis_element(key)
    if basis == "R":
        return build_R(key, n)
    if basis == "rbar":
        return build_Rbar(key, n)
    raise ValueError(f"unknown basis {basis!r}; expected one of {BASES}")


def build_Rbar(lam: Sequence[int], n: int | None = None) -> MultiPoly:
    """Top-degree homogeneous component of R_lam."""
    R = build_R(lam, n)
    return R.homogeneous_component(odd_weight(lam))


def top_component(f: MultiPoly) -> MultiPoly:
    return f.top_component()


def _lex_eliminate(f: MultiPoly, element) -> dict:
    """Peel off lex-leading monomials z^nu with element(bracket_inverse(nu))."""
    rem = f
    out: dict = {}
    while not rem.is_zero():
        exps, c = max(rem.items(), key=lambda it: it[0])
        mu = bracket_inverse(exps)
        if not is_partition(mu):
            raise NotSemisymmetric(f"leading monomial {exps} is not an orbit representative")
        if mu in out:
            raise ArithmeticError(f"elimination did not remove z^{exps}")
        out[mu] = c
        rem = rem - element(mu) * c
    return out


def to_basis(f: MultiPoly, basis: str) -> Expansion:
    n = f.n
    if basis == "monomial":
        return Expansion(basis, n, dict(f.items()))
    if basis == "elementary":
        return Expansion(basis, n, _lex_eliminate(f, e_basis_element))
    if basis == "rbar":
        return Expansion(basis, n, _lex_eliminate(f, lambda mu: build_Rbar(mu, n)))
    if basis == "R":
        return Expansion(basis, n, newton_coefficients(f))
    raise ValueError(f"unknown basis {basis!r}; expected one of {BASES}")


class NodeValues:
    """Memoized table of R_mu(rho + nu) for fixed n."""

    def __init__(self, n: int):
        self.n = n
        self._vals: dict = {}
        self._lock = threading.Lock()

    def __call__(self, mu: tuple, nu: tuple) -> ParamScalar:
        key = (mu, nu)
        with self._lock:
            hit = self._vals.get(key)
        if hit is not None:
            return hit
        dm, dn = odd_weight(mu), odd_weight(nu)
        if dn <= dm and mu != nu:
            val = ParamScalar(0)
        else:
            val = build_R(mu, self.n).evaluate(node(nu))
        with self._lock:
            self._vals[key] = val
        return val


_NODE_VALUES: dict[int, NodeValues] = {}
_nv_lock = threading.Lock()


def node_values(n: int) -> NodeValues:
    with _nv_lock:
        if n not in _NODE_VALUES:
            _NODE_VALUES[n] = NodeValues(n)
        return _NODE_VALUES[n]


def newton_coefficients(f: MultiPoly, degree: int | None = None) -> dict:
    """R-basis coefficients from values at the nodes, by forward substitution.

    Uses only the defining vanishing: R_mu(rho + nu) = 0 whenever
    |nu|_odd <= |mu|_odd and nu != mu.
    """
    n = f.n
    d = f.degree() if degree is None else degree
    if d < 0:
        return {}
    vals = node_values(n)
    coeffs: dict = {}
    for nu in partitions_upto(n, d):
        acc = f.evaluate(node(nu))
        for mu, c in coeffs.items():
            if odd_weight(mu) < odd_weight(nu):
                acc = acc - c * vals(mu, nu)
        if not acc.is_zero():
            coeffs[nu] = acc / vals(nu, nu)
    return coeffs


def hat_transform(f: MultiPoly, d: int) -> dict:
    """f-hat at rho + lam for lam in Lambda(d).

    f-hat(rho + lam) = sum_mu (-1)^{|mu|_odd} R_mu(rho+lam)/R_mu(rho+mu) f(rho+mu).
    """
    values = {mu: f.evaluate(node(mu)) for mu in partitions_upto(f.n, d)}
    return hat_of_values(values, f.n, d)


def hat_of_values(values: Mapping[tuple, ParamScalar], n: int, d: int) -> dict:
    """The same transform applied to a function given by its node values."""
    vals = node_values(n)
    out = {}
    for lam in partitions_upto(n, d):
        acc = ParamScalar(0)
        for mu in partitions_upto(n, odd_weight(lam)):
            v = values.get(mu)
            if v is None or v.is_zero():
                continue
            w = vals(mu, lam)
            if w.is_zero():
                continue
            term = w / vals(mu, mu) * v
            acc = acc - term if odd_weight(mu) % 2 else acc + term
        out[lam] = acc
    return out


def inverse_hat(hat: Mapping[tuple, ParamScalar], n: int) -> MultiPoly:
    """Rebuild f = sum_mu (-1)^{|mu|_odd} f-hat(rho+mu) R_mu / R_mu(rho+mu)."""
    vals = node_values(n)
    out = MultiPoly.zero(n)
    for mu, v in hat.items():
        if v.is_zero():
            continue
        c = v / vals(mu, mu)
        if odd_weight(mu) % 2:
            c = -c
        out = out + build_R(mu, n) * c
    return out


def stability_restrict(f: MultiPoly) -> MultiPoly:
    """f(z_1, ..., z_{n-1}, 0)."""
    return f.restrict_last_zero()


def to_shifted_coordinates(f: MultiPoly) -> MultiPoly:
    """f(rho + u) as a polynomial in u."""
    return f.shift([-x for x in rho(f.n)])


def from_shifted_coordinates(g: MultiPoly) -> MultiPoly:
    """Inverse of :func:`to_shifted_coordinates`: g(z - rho)."""
    return g.shift(rho(g.n))


def semisymmetry_generators(n: int) -> list[list[int]]:
    """Adjacent transpositions inside the odd and inside the even positions."""
    out = []
    for i in range(1, n - 1):
        perm = list(range(1, n + 1))
        perm[i - 1], perm[i + 1] = perm[i + 1], perm[i - 1]
        out.append(perm)
    return out


def is_semisymmetric(f: MultiPoly) -> bool:
    return all(f.permute(p) == f for p in semisymmetry_generators(f.n))

