"""Partitions of fixed length n and the orders between them.

A partition is a plain tuple of n non-increasing non-negative ints, padded
with trailing zeros.  Indices in docstrings are 1-based to match the usual
z_1, ..., z_n numbering; the code itself is 0-based.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import accumulate
from typing import Iterable, Sequence

from ..exactalg import ParamScalar, R_S, scalar

Partition = tuple


def partition(parts: Iterable[int], n: int) -> Partition:
    """Validate and pad to length n."""
    parts = [int(p) for p in parts]
    while len(parts) > n and parts[-1] == 0:
        parts.pop()
    if len(parts) > n:
        raise ValueError(f"{tuple(parts)} has more than n={n} nonzero parts")
    if any(p < 0 for p in parts):
        raise ValueError(f"{tuple(parts)} has a negative part")
    if any(a < b for a, b in zip(parts, parts[1:])):
        raise ValueError(f"{tuple(parts)} is not non-increasing")
    return tuple(parts) + (0,) * (n - len(parts))


def is_partition(v: Sequence[int]) -> bool:
    return all(x >= 0 for x in v) and all(a >= b for a, b in zip(v, v[1:]))


def parse_parts(text: str) -> list[int]:
    """'3,1,0' -> [3, 1, 0]; an empty string is the empty partition."""
    text = text.strip().strip("()[]")
    if not text:
        return []
    return [int(x) for x in text.replace(" ", "").split(",") if x != ""]


def odd_part(lam: Sequence[int]) -> tuple:
    """(lam_1, lam_3, lam_5, ...)"""
    return tuple(lam[0::2])


def even_part(lam: Sequence[int]) -> tuple:
    """(lam_2, lam_4, ...)"""
    return tuple(lam[1::2])


def odd_weight(lam: Sequence[int]) -> int:
    return sum(lam[0::2])


def even_weight(lam: Sequence[int]) -> int:
    return sum(lam[1::2])


def bracket(lam: Sequence[int]) -> tuple:
    """Alternating tail sums [lam]_m = lam_m - lam_{m+1} + lam_{m+2} - ..."""
    out = []
    acc = 0
    for x in reversed(lam):
        acc = x - acc
        out.append(acc)
    return tuple(reversed(out))


def bracket_inverse(nu: Sequence[int]) -> tuple:
    """Inverse of :func:`bracket`: lam_i = nu_i + nu_{i+1}."""
    nu = list(nu)
    return tuple(a + b for a, b in zip(nu, nu[1:] + [0]))


def bracket_one(lam: Sequence[int]) -> int:
    return odd_weight(lam) - even_weight(lam)


def n_odd(n: int) -> int:
    """Number of odd indices in 1..n."""
    return (n + 1) // 2


def n_even(n: int) -> int:
    return n // 2


def rho(n: int) -> list[ParamScalar]:
    """((n-1) r, ..., r, 0)"""
    return [R_S * (n - 1 - i) for i in range(n)]


def rho_alpha(n: int, alpha) -> list[ParamScalar]:
    a = scalar(alpha)
    return [x + a for x in rho(n)]


def node(lam: Sequence[int]) -> list[ParamScalar]:
    """The interpolation node rho + lam."""
    n = len(lam)
    return [R_S * (n - 1 - i) + lam[i] for i in range(n)]


def conjugate(lam: Sequence[int]) -> tuple:
    top = lam[0] if lam else 0
    return tuple(sum(1 for x in lam if x > j) for j in range(top))


def boxes(lam: Sequence[int]):
    """Cells (i, j), 1-based, row by row."""
    for i, row in enumerate(lam, start=1):
        for j in range(1, row + 1):
            yield i, j


def arm(lam, box) -> int:
    i, j = box
    return lam[i - 1] - j


def leg(lam, box, conj=None) -> int:
    i, j = box
    conj = conj if conj is not None else conjugate(lam)
    return conj[j - 1] - i


def arm_colength(box) -> int:
    return box[1] - 1


def leg_colength(box) -> int:
    return box[0] - 1


@lru_cache(maxsize=None)
def _partitions(n: int, d: int) -> tuple:
    out = []

    def rec(prefix, budget):
        k = len(prefix)
        if k == n:
            out.append(tuple(prefix))
            return
        cap = prefix[-1] if prefix else d
        if k % 2 == 0:
            cap = min(cap, budget)
        for x in range(cap + 1):
            rec(prefix + [x], budget - x if k % 2 == 0 else budget)

    rec([], d)
    out.sort(key=lambda lam: (odd_weight(lam), lam))
    return tuple(out)


def partitions_upto(n: int, d: int) -> list[Partition]:
    """Lambda(d): all partitions of length n with |lam|_odd <= d.

    Order: by |lam|_odd, then lexicographically.
    """
    if d < 0:
        return []
    return list(_partitions(n, d))


def partitions_of_odd_weight(n: int, d: int) -> list[Partition]:
    return [lam for lam in _partitions(n, d) if odd_weight(lam) == d]


def dominated(mu: Sequence[int], lam: Sequence[int]) -> bool:
    """Inhomogeneous dominance on N^n: every prefix sum of mu is <= that of lam."""
    return all(a <= b for a, b in zip(accumulate(mu), accumulate(lam)))


def componentwise_le(mu: Sequence[int], lam: Sequence[int]) -> bool:
    return all(a <= b for a, b in zip(mu, lam))


def contained(mu: Sequence[int], lam: Sequence[int]) -> bool:
    """Diagram containment mu ⊆ lam."""
    return componentwise_le(mu, lam)


def sqsubseteq(mu: Sequence[int], lam: Sequence[int]) -> bool:
    """mu ⊆ lam and [mu]_1 <= [lam]_1."""
    return contained(mu, lam) and bracket_one(mu) <= bracket_one(lam)


def in_psi0(v: Sequence[int]) -> bool:
    """Monoid generated by e_i (i odd) and e_i + e_j (i odd, j even)."""
    return all(x >= 0 for x in v) and bracket_one(v) >= 0


def in_psi1(v: Sequence[int]) -> bool:
    """Psi0 plus the simple roots e_i - e_{i+2}.

    Membership: proper prefix sums of the odd entries are >= 0, all prefix
    sums of the even entries are >= 0, and [v]_1 >= 0.
    """
    odd_sums = list(accumulate(v[0::2]))
    even_sums = list(accumulate(v[1::2]))
    return (all(s >= 0 for s in odd_sums[:-1]) and all(s >= 0 for s in even_sums)
            and bracket_one(v) >= 0)


def in_phi_plus(v: Sequence[int]) -> bool:
    """Monoid generated by the simple roots e_i - e_{i+2}."""
    odd_sums = list(accumulate(v[0::2])) or [0]
    even_sums = list(accumulate(v[1::2])) or [0]
    return (all(s >= 0 for s in odd_sums) and odd_sums[-1] == 0
            and all(s >= 0 for s in even_sums) and even_sums[-1] == 0)


def preceq(mu: Sequence[int], lam: Sequence[int]) -> bool:
    """mu ⪯ lam, i.e. lam - mu lies in Psi1."""
    return in_psi1([a - b for a, b in zip(lam, mu)])


def preceq_hom(mu: Sequence[int], lam: Sequence[int]) -> bool:
    """Homogeneous version: mu ⪯ lam with equal odd weight."""
    return preceq(mu, lam) and odd_weight(mu) == odd_weight(lam)


def in_psi0_by_generators(v: Sequence[int], n: int | None = None) -> bool:
    """Membership in Psi0 by explicit search over its generators (an oracle)."""
    n = len(v) if n is None else n
    gens = [tuple(1 if k == i else 0 for k in range(n)) for i in range(0, n, 2)]
    gens += [tuple(1 if k in (i, j) else 0 for k in range(n))
             for i in range(0, n, 2) for j in range(1, n, 2)]
    return _reachable(tuple(v), tuple(gens))


@lru_cache(maxsize=None)
def _reachable(v: tuple, gens: tuple) -> bool:
    if all(x == 0 for x in v):
        return True
    if any(x < 0 for x in v):
        return False
    return any(_reachable(tuple(a - b for a, b in zip(v, g)), gens) for g in gens)


def in_psi1_by_generators(v: Sequence[int]) -> bool:
    """Membership in Psi1 by solving in its generator basis (an oracle).

    The generators e_i - e_{i+2}, e_{n-1} + e_n and e_{2*nodd-1} form a basis
    of Z^n, so membership means all coordinates are non-negative integers.
    """
    from ..exactalg.linalg import solve

    n = len(v)
    if n == 1:
        return v[0] >= 0
    gens = []
    for i in range(n - 2):
        g = [0] * n
        g[i], g[i + 2] = 1, -1
        gens.append(g)
    g = [0] * n
    g[n - 2] += 1
    g[n - 1] += 1
    gens.append(g)
    g = [0] * n
    g[2 * n_odd(n) - 2] = 1
    gens.append(g)
    matrix = [[gens[k][i] for k in range(n)] for i in range(n)]
    coords = solve(matrix, [list(v)])[0]
    vals = [c.as_fraction() for c in coords]
    return all(x >= 0 and x.denominator == 1 for x in vals)
