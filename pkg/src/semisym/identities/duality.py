"""The binomial formula, the duality matrix and the interpolation transform."""
from __future__ import annotations

import random
from typing import Sequence

from ..combinatorics import (bracket_one, eval_factor_b_rows, n_even, n_odd, node, odd_weight,
                             partition, partitions_upto, rho_alpha, sqsubseteq)
from ..diffops import operators
from ..exactalg import R_S, MultiPoly, ParamScalar, scalar
from ..interpolation import build_R, e_basis_element
from ..interpolation.basis import (build_Rbar, hat_of_values, hat_transform, inverse_hat,
                                   node_values, to_basis)


def _sign(mu) -> int:
    return -1 if odd_weight(mu) % 2 else 1


def duality_entry(mu: Sequence[int], lam: Sequence[int], n: int) -> ParamScalar:
    """(-1)^{|mu|_odd} R_mu(rho + lam) / R_mu(rho + mu)."""
    vals = node_values(n)
    mu, lam = partition(mu, n), partition(lam, n)
    return vals(mu, lam) / vals(mu, mu) * _sign(mu)


def duality_matrix(n: int, d: int) -> tuple[list, list[list[ParamScalar]]]:
    index = partitions_upto(n, d)
    return index, [[duality_entry(mu, lam, n) for lam in index] for mu in index]


def duality_defects(n: int, d: int) -> list[dict]:
    """Entries that break triangularity or the involution property; empty when all is well."""
    index, m = duality_matrix(n, d)
    size = len(index)
    bad = []
    for a in range(size):
        for b in range(size):
            if not m[a][b].is_zero() and not sqsubseteq(index[a], index[b]):
                bad.append({"kind": "triangular", "mu": index[a], "lam": index[b]})
            acc = ParamScalar(0)
            for k in range(size):
                if not m[a][k].is_zero() and not m[k][b].is_zero():
                    acc = acc + m[a][k] * m[k][b]
            if acc != (1 if a == b else 0):
                bad.append({"kind": "square", "row": index[a], "col": index[b], "value": str(acc)})
    return bad


def binomial_sides(lam: Sequence[int], n: int, alpha) -> tuple[MultiPoly, MultiPoly]:
    """Both sides of the expansion of R_lam(-alpha - z) / R_lam(-rho - alpha)."""
    lam = partition(lam, n)
    alpha = scalar(alpha)
    base = [-x for x in rho_alpha(n, alpha)]
    R = build_R(lam, n)
    lhs = R.substitute_affine([-alpha] * n, [-1] * n).scale(R.evaluate(base).inverse())
    rhs = MultiPoly.zero(n)
    for mu in partitions_upto(n, odd_weight(lam)):
        if not sqsubseteq(mu, lam):
            continue
        Rmu = build_R(mu, n)
        rhs = rhs + Rmu.scale(duality_entry(mu, lam, n) / Rmu.evaluate(base))
    return lhs, rhs


def binomial_check(lam: Sequence[int], n: int, alpha) -> bool:
    lhs, rhs = binomial_sides(lam, n, alpha)
    return lhs == rhs


def symmetric_matrix(n: int, d: int, alpha) -> tuple[list, list[list[ParamScalar]]]:
    """Entries R_lam(-rho_alpha - nu) / R_lam(-rho_alpha) over Lambda(d)^2."""
    index = partitions_upto(n, d)
    base = rho_alpha(n, alpha)
    rows = []
    for lam in index:
        R = build_R(lam, n)
        norm = R.evaluate([-x for x in base]).inverse()
        rows.append([R.evaluate([-(x + v) for x, v in zip(base, nu)]) * norm for nu in index])
    return index, rows


def asymmetric_pairs(n: int, d: int, alpha) -> list[tuple]:
    index, m = symmetric_matrix(n, d, alpha)
    return [(index[a], index[b]) for a in range(len(index)) for b in range(a + 1, len(index))
            if m[a][b] != m[b][a]]


def homogeneous_binomial_prediction(lam: Sequence[int], n: int) -> dict:
    """Predicted coefficients of Rbar_mu in Rbar_lam(1 + z) / B_lam."""
    lam = partition(lam, n)
    vals = node_values(n)
    out = {}
    for mu in partitions_upto(n, odd_weight(lam)):
        if not sqsubseteq(mu, lam):
            continue
        if n % 2 == 0 and bracket_one(mu) != bracket_one(lam):
            continue
        c = vals(mu, lam) / vals(mu, mu) / eval_factor_b_rows(mu)
        if not c.is_zero():
            out[mu] = c
    return out


def homogeneous_binomial_actual(lam: Sequence[int], n: int) -> dict:
    lam = partition(lam, n)
    shifted = build_Rbar(lam, n).substitute_affine([1] * n)
    lhs = shifted.scale(eval_factor_b_rows(lam).inverse())
    return {k: v for k, v in to_basis(lhs, "rbar").coeffs.items() if not v.is_zero()}


def homogeneous_binomial(lam: Sequence[int], n: int) -> bool:
    return homogeneous_binomial_prediction(lam, n) == homogeneous_binomial_actual(lam, n)


# -- interpolation transform --------------------------------------------------

def random_semisymmetric(n: int, d: int, seed: int) -> MultiPoly:
    """A reproducible random element of degree <= d, with coefficients a + b r."""
    rng = random.Random(seed)
    out = MultiPoly.zero(n)
    for mu in partitions_upto(n, d):
        c = scalar(rng.randint(-3, 3)) + R_S * rng.randint(-2, 2)
        if not c.is_zero():
            out = out + e_basis_element(mu) * c
    return out


def node_table(f: MultiPoly, d: int) -> dict:
    return {lam: f.evaluate(node(lam)) for lam in partitions_upto(f.n, d)}


def interpolation_defects(f: MultiPoly, d: int | None = None) -> list[str]:
    """Checks the four transform properties on f; returns a description of each failure."""
    n = f.n
    d = max(f.degree(), 0) if d is None else d
    problems = []
    hat = hat_transform(f, d)
    if hat_of_values(hat, n, d) != node_table(f, d):
        problems.append("double transform differs from f")
    wider = hat_transform(f, d + 1)
    stray = [lam for lam, v in wider.items() if odd_weight(lam) > d and not v.is_zero()]
    if stray:
        problems.append(f"transform supported outside Lambda({d}): {stray}")
    if inverse_hat(hat, n) != f:
        problems.append("reconstruction differs from f")
    for kind, count in (("X", n_odd(n)), ("Y", n_even(n))):
        for i in range(1, count + 1):
            op = operators.component(kind, i, n)
            eig = operators.constant_term(op)
            image = hat_transform(op.apply(f), d)
            for lam in partitions_upto(n, d):
                if image[lam] != eig.evaluate(node(lam)) * hat[lam]:
                    problems.append(f"{kind}_{i} is not diagonal at {lam}")
                    break
    return problems
