"""Univariate polynomials in the parameter r.

Two layers live here.  The module-level functions work on plain tuples of
Python ints (ascending coefficients, no trailing zeros, ``()`` is zero); they
are the hot path for everything else in the package.  :class:`RPoly` is the
public immutable type with rational coefficients.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

ZPoly = tuple  # tuple[int, ...]

ZERO: ZPoly = ()
ONE: ZPoly = (1,)
R: ZPoly = (0, 1)


def ztrim(coeffs: Sequence[int]) -> ZPoly:
    end = len(coeffs)
    while end and coeffs[end - 1] == 0:
        end -= 1
    return tuple(coeffs[:end])


def zadd(a: ZPoly, b: ZPoly) -> ZPoly:
    if len(a) < len(b):
        a, b = b, a
    if not b:
        return a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return ztrim(out)


def zneg(a: ZPoly) -> ZPoly:
    return tuple(-c for c in a)


def zsub(a: ZPoly, b: ZPoly) -> ZPoly:
    return zadd(a, zneg(b))


def zscale(a: ZPoly, k: int) -> ZPoly:
    if k == 0:
        return ZERO
    return tuple(c * k for c in a)


def zmul(a: ZPoly, b: ZPoly) -> ZPoly:
    if not a or not b:
        return ZERO
    if len(a) == 1:
        return zscale(b, a[0])
    if len(b) == 1:
        return zscale(a, b[0])
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return tuple(out)


def zpow(a: ZPoly, k: int) -> ZPoly:
    out = ONE
    base = a
    while k:
        if k & 1:
            out = zmul(out, base)
        k >>= 1
        if k:
            base = zmul(base, base)
    return out


def zcontent(a: ZPoly) -> int:
    """Positive gcd of the coefficients (0 for the zero polynomial)."""
    return gcd(*a) if a else 0


def zprimitive(a: ZPoly) -> ZPoly:
    """Divide out the content and make the leading coefficient positive."""
    if not a:
        return a
    c = zcontent(a)
    if a[-1] < 0:
        c = -c
    if c == 1:
        return a
    return tuple(x // c for x in a)


def zdivexact_int(a: ZPoly, k: int) -> ZPoly:
    return tuple(x // k for x in a)


def zpseudo_rem(a: ZPoly, b: ZPoly) -> ZPoly:
    """Pseudo-remainder of ``a`` by ``b`` (lc(b)^k * a mod b over Z)."""
    if not b:
        raise ZeroDivisionError("pseudo-remainder by the zero polynomial")
    lb = b[-1]
    db = len(b) - 1
    rem = list(a)
    while len(rem) - 1 >= db and rem:
        lr = rem[-1]
        shift = len(rem) - 1 - db
        rem = [x * lb for x in rem]
        for i, y in enumerate(b):
            rem[i + shift] -= lr * y
        rem = list(ztrim(rem))
    return tuple(rem)


def zgcd(a: ZPoly, b: ZPoly) -> ZPoly:
    """Primitive gcd over Q[r] with positive leading coefficient.

    The integer content is deliberately dropped: callers combine contents
    separately.  ``zgcd(0, 0)`` is ``0``.
    """
    if not a:
        return zprimitive(b)
    if not b:
        return zprimitive(a)
    if len(a) == 1 or len(b) == 1:
        return ONE
    a = zprimitive(a)
    b = zprimitive(b)
    if len(a) < len(b):
        a, b = b, a
    while b:
        if len(b) == 1:
            return ONE
        rem = zpseudo_rem(a, b)
        a, b = b, zprimitive(rem)
    return a


def zdivmod_exact(a: ZPoly, b: ZPoly) -> ZPoly:
    """Quotient of ``a`` by ``b`` when ``b`` divides ``a`` with an integer quotient.

    Raises ArithmeticError when the division leaves a remainder.
    """
    if not b:
        raise ZeroDivisionError("division of an r-polynomial by zero")
    if len(b) == 1:
        k = b[0]
        if any(x % k for x in a):
            raise ArithmeticError("inexact integer division of an r-polynomial")
        return tuple(x // k for x in a)
    rem = list(a)
    db = len(b) - 1
    lb = b[-1]
    if len(rem) - 1 < db:
        if rem:
            raise ArithmeticError("inexact division of r-polynomials")
        return ZERO
    quot = [0] * (len(rem) - db)
    for shift in range(len(rem) - 1 - db, -1, -1):
        lr = rem[shift + db]
        if lr == 0:
            continue
        q, m = divmod(lr, lb)
        if m:
            raise ArithmeticError("inexact division of r-polynomials")
        quot[shift] = q
        for i, y in enumerate(b):
            rem[i + shift] -= q * y
    if any(rem):
        raise ArithmeticError("inexact division of r-polynomials")
    return ztrim(quot)


def zeval(a: ZPoly, x):
    """Horner evaluation; ``x`` may be an int, a Fraction or a ZPoly-like scalar."""
    acc = 0
    for c in reversed(a):
        acc = acc * x + c
    return acc


def zfrom_rational(coeffs: Iterable) -> tuple[ZPoly, int]:
    """Clear denominators: return (integer poly, positive multiplier)."""
    fr = [Fraction(c) for c in coeffs]
    den = 1
    for c in fr:
        den = den * c.denominator // gcd(den, c.denominator)
    return ztrim([int(c * den) for c in fr]), den


def zformat(a: ZPoly, var: str = "r") -> str:
    if not a:
        return "0"
    parts = []
    for k in range(len(a) - 1, -1, -1):
        c = a[k]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        parts.append((sign, body))
    first_sign, first_body = parts[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


class RPoly:
    """Immutable univariate polynomial in r with rational coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        fr = [Fraction(c) for c in coeffs]
        while fr and fr[-1] == 0:
            fr.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(fr)

    @classmethod
    def r(cls) -> "RPoly":
        return cls((0, 1))

    @classmethod
    def constant(cls, c) -> "RPoly":
        return cls((c,))

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __call__(self, x):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other):
        other = _as_rpoly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (n - len(other.coeffs))
        return RPoly(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self):
        return RPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-_as_rpoly(other))

    def __rsub__(self, other):
        return _as_rpoly(other) - self

    def __mul__(self, other):
        other = _as_rpoly(other)
        if not self.coeffs or not other.coeffs:
            return RPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            for j, y in enumerate(other.coeffs):
                out[i + j] += x * y
        return RPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = RPoly((1,))
        for _ in range(k):
            out = out * self
        return out

    def divmod(self, other: "RPoly") -> tuple["RPoly", "RPoly"]:
        other = _as_rpoly(other)
        if other.is_zero():
            raise ZeroDivisionError("RPoly division by the zero polynomial")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return RPoly(), self
        quot = [Fraction(0)] * (dq + 1)
        lead = other.coeffs[-1]
        for shift in range(dq, -1, -1):
            q = rem[shift + len(other.coeffs) - 1] / lead
            quot[shift] = q
            for i, y in enumerate(other.coeffs):
                rem[i + shift] -= q * y
        return RPoly(quot), RPoly(rem)

    def gcd(self, other: "RPoly") -> "RPoly":
        """Monic gcd (zero if both are zero)."""
        a, b = self, _as_rpoly(other)
        while not b.is_zero():
            a, b = b, a.divmod(b)[1]
        if a.is_zero():
            return a
        lead = a.leading()
        return RPoly(c / lead for c in a.coeffs)

    def to_zpoly(self) -> tuple[ZPoly, int]:
        """Integer numerator and positive denominator with self = num / den."""
        return zfrom_rational(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RPoly((other,))
        if not isinstance(other, RPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("RPoly", self.coeffs))

    def __repr__(self):
        return f"RPoly({[str(c) for c in self.coeffs]})"

    def __str__(self):
        num, den = self.to_zpoly()
        text = zformat(num)
        return text if den == 1 else f"({text})/{den}"


def _as_rpoly(x) -> RPoly:
    if isinstance(x, RPoly):
        return x
    if isinstance(x, (int, Fraction)):
        return RPoly((x,))
    raise TypeError(f"cannot treat {type(x).__name__} as an r-polynomial")
