"""Exact elements of Q(r), the field every coefficient lives in."""
from __future__ import annotations

from fractions import Fraction
from math import gcd

from .rpoly import (ONE, ZERO, RPoly, ZPoly, zadd, zcontent, zdivmod_exact, zeval, zformat,
                    zfrom_rational, zgcd, zmul, zneg, zpow, ztrim)


class NonGenericParameter(ArithmeticError):
    """Raised when specializing r hits a pole of the expression."""


def canonical_pair(num: ZPoly, den: ZPoly) -> tuple[ZPoly, ZPoly]:
    """Reduce num/den: polynomial gcd 1, joint integer content 1, lc(den) > 0."""
    if not den:
        raise ZeroDivisionError("ParamScalar with zero denominator")
    if not num:
        return ZERO, ONE
    if len(den) > 1:
        g = zgcd(num, den)
        if len(g) > 1:
            num = zdivmod_exact(num, g)
            den = zdivmod_exact(den, g)
    c = gcd(zcontent(num), zcontent(den))
    if den[-1] < 0:
        c = -c
    if c != 1:
        num = tuple(x // c for x in num)
        den = tuple(x // c for x in den)
    return num, den


class ParamScalar:
    """A reduced rational function num(r)/den(r) with integer coefficients.

    Canonical form: gcd(num, den) = 1 in Q[r], the integer contents of num
    and den are jointly coprime and den has a positive leading coefficient.
    Zero is 0/1.  Two scalars are equal exactly when their pairs agree.
    """

    __slots__ = ("num", "den")

    def __init__(self, value=0, den=None, *, _raw=False):
        if _raw:
            self.num, self.den = value, den
            return
        if isinstance(value, ParamScalar):
            num, dd = value.num, value.den
        elif isinstance(value, int):
            num, dd = ztrim((value,)), ONE
        elif isinstance(value, Fraction):
            num, dd = ztrim((value.numerator,)), (value.denominator,)
        elif isinstance(value, RPoly):
            num, k = value.to_zpoly()
            dd = (k,)
        elif isinstance(value, tuple):
            num, dd = ztrim(value), ONE
        else:
            raise TypeError(f"cannot build a ParamScalar from {type(value).__name__}")
        if den is not None:
            other = ParamScalar(den)
            if not other.num:
                raise ZeroDivisionError("ParamScalar constructed with zero denominator")
            num, dd = zmul(num, other.den), zmul(dd, other.num)
        self.num, self.den = canonical_pair(num, dd)

    # -- constructors -------------------------------------------------
    @classmethod
    def r(cls) -> "ParamScalar":
        return cls._make((0, 1), ONE)

    @classmethod
    def from_pair(cls, num: ZPoly, den: ZPoly = ONE) -> "ParamScalar":
        n, d = canonical_pair(ztrim(num), ztrim(den))
        return cls._make(n, d)

    @classmethod
    def from_rationals(cls, num_coeffs, den_coeffs=(1,)) -> "ParamScalar":
        n, kn = zfrom_rational(num_coeffs)
        d, kd = zfrom_rational(den_coeffs)
        return cls.from_pair(zmul(n, (kd,)), zmul(d, (kn,)))

    @classmethod
    def _make(cls, num, den):
        obj = cls.__new__(cls)
        obj.num = num
        obj.den = den
        return obj

    # -- predicates ---------------------------------------------------
    def is_zero(self) -> bool:
        return not self.num

    def is_one(self) -> bool:
        return self.num == ONE and self.den == ONE

    def is_polynomial(self) -> bool:
        return len(self.den) == 1

    def is_constant(self) -> bool:
        return len(self.num) <= 1 and len(self.den) == 1

    def as_fraction(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} depends on r")
        return Fraction(self.num[0] if self.num else 0, self.den[0])

    def numerator(self) -> RPoly:
        return RPoly(self.num)

    def denominator(self) -> RPoly:
        return RPoly(self.den)

    # -- arithmetic ---------------------------------------------------
    def __add__(self, other):
        other = as_scalar(other)
        if other is NotImplemented:
            return NotImplemented
        if not self.num:
            return other
        if not other.num:
            return self
        if self.den == other.den:
            if self.den == ONE:
                return ParamScalar._make(zadd(self.num, other.num), ONE)
            return ParamScalar.from_pair(zadd(self.num, other.num), self.den)
        num = zadd(zmul(self.num, other.den), zmul(other.num, self.den))
        return ParamScalar.from_pair(num, zmul(self.den, other.den))

    __radd__ = __add__

    def __neg__(self):
        return ParamScalar._make(zneg(self.num), self.den)

    def __sub__(self, other):
        other = as_scalar(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = as_scalar(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = as_scalar(other)
        if other is NotImplemented:
            return NotImplemented
        if not self.num or not other.num:
            return ParamScalar._make(ZERO, ONE)
        if self.den == ONE and other.den == ONE:
            return ParamScalar._make(zmul(self.num, other.num), ONE)
        return ParamScalar.from_pair(zmul(self.num, other.num), zmul(self.den, other.den))

    __rmul__ = __mul__

    def inverse(self) -> "ParamScalar":
        if not self.num:
            raise ZeroDivisionError("inverse of the zero ParamScalar")
        return ParamScalar.from_pair(self.den, self.num)

    def __truediv__(self, other):
        other = as_scalar(other)
        if other is NotImplemented:
            return NotImplemented
        if not other.num:
            raise ZeroDivisionError("ParamScalar division by zero")
        return ParamScalar.from_pair(zmul(self.num, other.den), zmul(self.den, other.num))

    def __rtruediv__(self, other):
        other = as_scalar(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return ParamScalar._make(*canonical_pair(zpow(self.num, k), zpow(self.den, k)))

    # -- evaluation ---------------------------------------------------
    def specialize(self, value) -> Fraction:
        """Substitute a rational value for r."""
        value = Fraction(value)
        den = zeval(self.den, value)
        if den == 0:
            raise NonGenericParameter(f"r = {value} is a pole of {self}")
        return Fraction(zeval(self.num, value)) / den

    # -- comparison, hashing, display ---------------------------------
    def __eq__(self, other):
        other = as_scalar(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if len(self.den) == 1 and len(self.num) <= 1:
            return hash(Fraction(self.num[0] if self.num else 0, self.den[0]))
        return hash((self.num, self.den))

    def __bool__(self):
        return bool(self.num)

    def __repr__(self):
        return f"ParamScalar({self})"

    def __str__(self):
        num = zformat(self.num)
        if self.den == ONE:
            return num
        if len(self.num) > 1 and sum(1 for c in self.num if c) > 1:
            num = f"({num})"
        den = zformat(self.den)
        if len(self.den) > 1 and sum(1 for c in self.den if c) > 1:
            den = f"({den})"
        return f"{num}/{den}"

    def to_json(self) -> dict:
        return {"num": list(self.num), "den": list(self.den)}

    @classmethod
    def from_json(cls, data: dict) -> "ParamScalar":
        return cls.from_pair(tuple(data["num"]), tuple(data["den"]))


def as_scalar(x):
    if isinstance(x, ParamScalar):
        return x
    if isinstance(x, int):
        return ParamScalar._make(ztrim((x,)), ONE)
    if isinstance(x, (Fraction, RPoly)):
        return ParamScalar(x)
    return NotImplemented


def scalar(x) -> ParamScalar:
    """Coerce ints, Fractions, RPolys and strings like '3/2' to ParamScalar."""
    if isinstance(x, str):
        x = Fraction(x)
    out = as_scalar(x)
    if out is NotImplemented:
        raise TypeError(f"cannot coerce {type(x).__name__} to ParamScalar")
    return out


ZERO_S = ParamScalar._make(ZERO, ONE)
ONE_S = ParamScalar._make(ONE, ONE)
R_S = ParamScalar.r()
