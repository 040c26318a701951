"""Closed-form products over boxes and row pairs of a partition.

Every function returns a :class:`ParamScalar` in Q(r).  Several quantities
come in two independent forms (a product over row pairs and a product over
boxes); both are exposed so they can be checked against each other.
"""
from __future__ import annotations

from typing import Sequence

from ..exactalg import ONE_S, R_S, ZERO_S, ParamScalar, scalar
from .partitions import arm, boxes, conjugate, is_partition, leg


def rising(x, k: int) -> ParamScalar:
    """Rising factorial x (x+1) ... (x+k-1)."""
    x = scalar(x)
    out = ONE_S
    for i in range(k):
        out = out * (x + i)
    return out


def generalized_binomial(x, k: int) -> ParamScalar:
    """x (x-1) ... (x-k+1) / k! for x in Q(r)."""
    x = scalar(x)
    out = ONE_S
    for i in range(k):
        out = out * (x - i) / (i + 1)
    return out


def _arm_leg(lam):
    conj = conjugate(lam)
    for box in boxes(lam):
        yield box, arm(lam, box), leg(lam, box, conj)


def hook_even_prime(lam: Sequence[int]) -> ParamScalar:
    """Product over boxes with even leg of (arm + 1 + leg * r).

    This is the value of R_lam at its own node, so r_lam = R_lam / it.
    """
    out = ONE_S
    for _, a, l in _arm_leg(lam):
        if l % 2 == 0:
            out = out * (R_S * l + (a + 1))
    return out


def hook_even(lam: Sequence[int]) -> ParamScalar:
    """Product over boxes with odd leg of (arm + (leg + 1) r).

    Conjecturally clears all denominators of R_lam.
    """
    out = ONE_S
    for _, a, l in _arm_leg(lam):
        if l % 2 == 1:
            out = out * (R_S * (l + 1) + a)
    return out


def eval_factor_a_rows(lam: Sequence[int], alpha) -> ParamScalar:
    """Alpha-dependent factor of R_lam at -(rho + alpha), as a row product."""
    n = len(lam)
    alpha = scalar(alpha)
    out = ONE_S
    for i in range(1, n + 1):
        if (n - i) % 2 == 0:
            out = out * rising(alpha + R_S * (n - i), lam[i - 1])
    return out


def eval_factor_a_boxes(lam: Sequence[int], alpha) -> ParamScalar:
    n = len(lam)
    alpha = scalar(alpha)
    out = ONE_S
    for i, j in boxes(lam):
        if (n - (i - 1)) % 2 == 1:
            out = out * (alpha + (j - 1) + R_S * (n - i))
    return out


def eval_factor_b_rows(lam: Sequence[int]) -> ParamScalar:
    """Alpha-free factor of R_lam at -(rho + alpha), as a product over row pairs."""
    n = len(lam)
    num, den = ONE_S, ONE_S
    for i in range(n):
        for j in range(i + 1, n):
            gap = j - i
            k = lam[i] - lam[j]
            if gap % 2:
                num = num * rising(R_S * (gap + 1), k)
            else:
                den = den * rising(R_S * gap, k)
    return num / den


def eval_factor_b_boxes(lam: Sequence[int]) -> ParamScalar:
    n = len(lam)
    num = ONE_S
    for i, j in boxes(lam):
        if (n - (i - 1)) % 2 == 0:
            num = num * (R_S * (n - i + 1) + (j - 1))
    return num / hook_even(lam)


def evaluation_closed_form(lam: Sequence[int], alpha) -> ParamScalar:
    """(-1)^{|lam|_odd} A_lam(alpha) B_lam: the predicted value of R_lam(-rho - alpha)."""
    sign = -1 if sum(lam[0::2]) % 2 else 1
    return eval_factor_a_rows(lam, alpha) * eval_factor_b_rows(lam) * sign


def pieri_coefficient(mu: Sequence[int], subset: Sequence[int]) -> ParamScalar:
    """Pieri coefficient for lam = mu + e_I, as a product over row pairs.

    ``subset`` holds 1-based indices.  Zero when lam is not a partition.
    """
    n = len(mu)
    members = set(subset)
    lam = [m + (1 if i + 1 in members else 0) for i, m in enumerate(mu)]
    if not is_partition(lam):
        return ZERO_S
    num, den = ONE_S, ONE_S
    for i in range(1, n + 1):
        if i in members:
            continue
        for j in members:
            if j <= i:
                continue
            gap = j - i
            dm = mu[i - 1] - mu[j - 1]
            dl = lam[i - 1] - lam[j - 1]
            if gap % 2:
                num = num * (R_S * (gap - 1) + dm) * (R_S * (gap + 1) + dl)
            else:
                den = den * (R_S * gap + dm) * (R_S * gap + dl)
    return num / den


def _b_even(a: int, l: int) -> ParamScalar:
    if l % 2:
        return R_S * (l + 1) + a
    return (R_S * l + (a + 1)).inverse()


def pieri_coefficient_boxes(mu: Sequence[int], subset: Sequence[int]) -> ParamScalar:
    """Same coefficient as :func:`pieri_coefficient`, as a product over boxes.

    Runs over boxes of mu sharing a column, but no row, with a box of lam/mu.
    """
    members = set(subset)
    lam = tuple(m + (1 if i + 1 in members else 0) for i, m in enumerate(mu))
    if not is_partition(lam):
        return ZERO_S
    added = [(i, lam[i - 1]) for i in sorted(members)]
    cols = {j for _, j in added}
    rows = {i for i, _ in added}
    conj_l, conj_m = conjugate(lam), conjugate(mu)
    out = ONE_S
    for box in boxes(mu):
        if box[1] in cols and box[0] not in rows:
            out = out * _b_even(arm(lam, box), leg(lam, box, conj_l))
            out = out / _b_even(arm(mu, box), leg(mu, box, conj_m))
    return out
