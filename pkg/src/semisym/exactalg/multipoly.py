"""Sparse polynomials in z_1..z_n over Q(r).

Storage is tuned for the heavy products and shifts done by the difference
operators.  A polynomial is ``numerator / den`` where ``den`` is an integer
polynomial in r and the numerator is a dict from a packed integer key to an
int.  A key packs the r-exponent in the low slot and the exponent of z_i in
slot i, each slot BITS wide, so multiplying monomials is adding keys.

Every instance is kept canonical: no zero entries, gcd(den, every
r-coefficient) = 1 over Q[r], jointly coprime integer content, and den has a
positive leading coefficient.  Equality is therefore structural.
"""
from __future__ import annotations

from fractions import Fraction
from math import comb, gcd
from typing import Iterable, Mapping, Sequence

from .rpoly import ONE, ZERO, ZPoly, zdivmod_exact, zgcd, zmul, ztrim
from .scalar import ParamScalar, canonical_pair, scalar

BITS = 16
MASK = (1 << BITS) - 1
LIMIT = 1 << (BITS - 1)


class InexactDivision(ArithmeticError):
    """A polynomial division left a remainder; ``remainder`` holds it."""

    def __init__(self, message: str, remainder: "MultiPoly"):
        super().__init__(message)
        self.remainder = remainder


def pack(exps: Sequence[int], rexp: int = 0) -> int:
    key = rexp
    for i, e in enumerate(exps):
        if e < 0 or e >= LIMIT:
            raise OverflowError(f"exponent {e} outside the packed range")
        key |= e << (BITS * (i + 1))
    if rexp < 0 or rexp >= LIMIT:
        raise OverflowError(f"r-exponent {rexp} outside the packed range")
    return key


def unpack(key: int, n: int) -> tuple[int, ...]:
    key >>= BITS
    out = []
    for _ in range(n):
        out.append(key & MASK)
        key >>= BITS
    return tuple(out)


def _zdeg(key: int) -> int:
    key >>= BITS
    total = 0
    while key:
        total += key & MASK
        key >>= BITS
    return total


def _lcm_poly(a: ZPoly, b: ZPoly) -> tuple[ZPoly, ZPoly, ZPoly]:
    """Return (lcm, lcm/a, lcm/b) for integer polynomials a, b."""
    if a == b:
        return a, ONE, ONE
    g = zgcd(a, b)
    ma = zdivmod_exact(b, g) if len(g) > 1 else b
    mb = zdivmod_exact(a, g) if len(g) > 1 else a
    # integer parts: keep things integral without needless growth
    ca, cb = _icontent(ma), _icontent(mb)
    c = gcd(ca, cb)
    if c > 1:
        ma = tuple(x // c for x in ma)
        mb = tuple(x // c for x in mb)
    return zmul(a, ma), ma, mb


def _icontent(a: ZPoly) -> int:
    return gcd(*a) if a else 0


def _scale_terms(terms: dict, poly: ZPoly) -> dict:
    """Multiply a numerator dict by an integer polynomial in r."""
    if poly == ONE:
        return terms
    if len(poly) == 1:
        k = poly[0]
        return {key: c * k for key, c in terms.items()}
    out: dict = {}
    get = out.get
    for key, c in terms.items():
        for j, m in enumerate(poly):
            if m:
                kk = key + j
                out[kk] = get(kk, 0) + c * m
    return {k: v for k, v in out.items() if v}


def _group(terms: dict) -> dict:
    """Group a numerator dict by its z-part: zkey -> {rexp: coeff}."""
    groups: dict = {}
    for key, c in terms.items():
        zk = key >> BITS
        g = groups.get(zk)
        if g is None:
            groups[zk] = {key & MASK: c}
        else:
            g[key & MASK] = c
    return groups


def _rpoly(group: dict) -> ZPoly:
    top = max(group)
    out = [0] * (top + 1)
    for e, c in group.items():
        out[e] = c
    return tuple(out)


def _normalize(terms: dict, den: ZPoly) -> tuple[dict, ZPoly]:
    if not terms:
        return {}, ONE
    if den == ONE:
        return terms, den
    if len(den) > 1:
        g = den
        for grp in _group(terms).values():
            g = zgcd(g, _rpoly(grp))
            if len(g) == 1:
                break
        if len(g) > 1:
            den = zdivmod_exact(den, g)
            out = {}
            for zk, grp in _group(terms).items():
                q = zdivmod_exact(_rpoly(grp), g)
                base = zk << BITS
                for j, c in enumerate(q):
                    if c:
                        out[base + j] = c
            terms = out
    c = gcd(gcd(*terms.values()), _icontent(den))
    if den[-1] < 0:
        c = -c
    if c != 1:
        terms = {k: v // c for k, v in terms.items()}
        den = tuple(x // c for x in den)
    return terms, den


class MultiPoly:
    __slots__ = ("n", "terms", "den", "_hash")

    def __init__(self, n: int, terms: dict | None = None, den: ZPoly = ONE, *, normalized=False):
        self.n = n
        terms = {k: v for k, v in (terms or {}).items() if v}
        if not normalized:
            terms, den = _normalize(terms, ztrim(den))
        self.terms = terms
        self.den = den if terms else ONE
        self._hash = None

    # -- constructors ---------------------------------------------------
    @classmethod
    def zero(cls, n: int) -> "MultiPoly":
        return cls(n, {}, ONE, normalized=True)

    @classmethod
    def constant(cls, n: int, c) -> "MultiPoly":
        c = scalar(c)
        return cls(n, {j: x for j, x in enumerate(c.num) if x}, c.den, normalized=True)

    @classmethod
    def one(cls, n: int) -> "MultiPoly":
        return cls.constant(n, 1)

    @classmethod
    def variable(cls, n: int, i: int) -> "MultiPoly":
        """The coordinate z_i (1-based)."""
        if not 1 <= i <= n:
            raise IndexError(f"variable z{i} outside z1..z{n}")
        exps = [0] * n
        exps[i - 1] = 1
        return cls(n, {pack(exps): 1}, ONE, normalized=True)

    @classmethod
    def monomial(cls, n: int, exps: Sequence[int], coeff=1) -> "MultiPoly":
        if len(exps) != n:
            raise ValueError(f"exponent vector {tuple(exps)} has wrong length for n={n}")
        c = scalar(coeff)
        base = pack(exps)
        return cls(n, {base + j: x for j, x in enumerate(c.num) if x}, c.den, normalized=True)

    @classmethod
    def from_terms(cls, n: int, mapping: Mapping[Sequence[int], object] | Iterable) -> "MultiPoly":
        """Build from {exponent tuple: coefficient}; coefficients coerce to ParamScalar."""
        items = mapping.items() if isinstance(mapping, Mapping) else mapping
        scalars = []
        den = ONE
        for exps, c in items:
            if len(exps) != n:
                raise ValueError(f"exponent vector {tuple(exps)} has wrong length for n={n}")
            c = scalar(c)
            if c.is_zero():
                continue
            scalars.append((pack(exps), c))
            if c.den != den:
                den = _lcm_poly(den, c.den)[0]
        terms: dict = {}
        for base, c in scalars:
            num = zmul(c.num, zdivmod_exact(den, c.den)) if c.den != den else c.num
            for j, x in enumerate(num):
                if x:
                    terms[base + j] = terms.get(base + j, 0) + x
        return cls(n, terms, den)

    # -- inspection -----------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def items(self) -> list[tuple[tuple[int, ...], ParamScalar]]:
        """(exponent tuple, coefficient) pairs in graded-lex descending order."""
        out = []
        for zk, grp in _group(self.terms).items():
            exps = unpack(zk << BITS, self.n)
            num, den = canonical_pair(_rpoly(grp), self.den)
            out.append((exps, ParamScalar._make(num, den)))
        out.sort(key=lambda it: (sum(it[0]), it[0]), reverse=True)
        return out

    def coefficients(self) -> dict[tuple[int, ...], ParamScalar]:
        return dict(self.items())

    def monomials(self) -> list[tuple[int, ...]]:
        return [e for e, _ in self.items()]

    def coeff(self, exps: Sequence[int]) -> ParamScalar:
        base = pack(exps)
        found = {k - base: c for k, c in self.terms.items() if k >> BITS == base >> BITS}
        if not found:
            return ParamScalar._make(ZERO, ONE)
        num = [0] * (max(found) + 1)
        for j, c in found.items():
            num[j] = c
        return ParamScalar.from_pair(tuple(num), self.den)

    def degree(self) -> int:
        """Total degree in z (r does not count); -1 for zero."""
        if not self.terms:
            return -1
        return max(_zdeg(k) for k in self.terms)

    def __len__(self):
        return len({k >> BITS for k in self.terms})

    # -- arithmetic -----------------------------------------------------
    def _check(self, other: "MultiPoly"):
        if other.n != self.n:
            raise ValueError(f"mixing polynomials in {self.n} and {other.n} variables")

    def _coerce(self, other):
        if isinstance(other, MultiPoly):
            self._check(other)
            return other
        try:
            return MultiPoly.constant(self.n, other)
        except TypeError:
            return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not other.terms:
            return self
        if not self.terms:
            return other
        if self.den == other.den:
            out = dict(self.terms)
            get = out.get
            for k, c in other.terms.items():
                out[k] = get(k, 0) + c
            return MultiPoly(self.n, out, self.den)
        den, ma, mb = _lcm_poly(self.den, other.den)
        out = _scale_terms(self.terms, ma)
        out = dict(out)
        get = out.get
        for k, c in _scale_terms(other.terms, mb).items():
            out[k] = get(k, 0) + c
        return MultiPoly(self.n, out, den)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.n, {k: -c for k, c in self.terms.items()}, self.den, normalized=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def scale(self, c) -> "MultiPoly":
        c = scalar(c)
        if c.is_zero() or not self.terms:
            return MultiPoly.zero(self.n)
        return MultiPoly(self.n, _scale_terms(self.terms, c.num), zmul(self.den, c.den))

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            try:
                return self.scale(other)
            except TypeError:
                return NotImplemented
        self._check(other)
        a, b = self.terms, other.terms
        if not a or not b:
            return MultiPoly.zero(self.n)
        if len(a) > len(b):
            a, b = b, a
        out: dict = {}
        get = out.get
        bitems = list(b.items())
        for ka, ca in a.items():
            for kb, cb in bitems:
                k = ka + kb
                out[k] = get(k, 0) + ca * cb
        den = zmul(self.den, other.den)
        if den == ONE:
            return MultiPoly(self.n, {k: v for k, v in out.items() if v}, ONE, normalized=True)
        return MultiPoly(self.n, out, den)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __truediv__(self, other):
        if isinstance(other, MultiPoly):
            return self.exact_div(other)
        c = scalar(other)
        return self.scale(c.inverse())

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers of polynomials are not polynomials")
        out = MultiPoly.one(self.n)
        base = self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    # -- comparison -----------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.n == other.n and self.den == other.den and self.terms == other.terms
        try:
            other = MultiPoly.constant(self.n, other)
        except TypeError:
            return NotImplemented
        return self == other

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, self.den, frozenset(self.terms.items())))
        return self._hash

    # -- structural transforms ---------------------------------------------
    def homogeneous_component(self, d: int) -> "MultiPoly":
        return MultiPoly(self.n, {k: c for k, c in self.terms.items() if _zdeg(k) == d}, self.den)

    def top_component(self) -> "MultiPoly":
        """Component of top z-degree."""
        d = self.degree()
        return self.homogeneous_component(d) if d >= 0 else self

    def rekey(self, n_new: int, positions: Sequence[int]) -> "MultiPoly":
        """Rename variables: old z_{i+1} becomes new z_{positions[i]} (1-based)."""
        out = {}
        for key, c in self.terms.items():
            exps = unpack(key, self.n)
            new = [0] * n_new
            for i, e in enumerate(exps):
                if e:
                    new[positions[i] - 1] += e
            out[pack(new, key & MASK)] = c
        return MultiPoly(n_new, out, self.den, normalized=True)

    def permute(self, perm: Sequence[int]) -> "MultiPoly":
        """Apply the variable permutation z_i -> z_{perm[i-1]} (1-based)."""
        return self.rekey(self.n, perm)

    def restrict_last_zero(self) -> "MultiPoly":
        """f(z_1, ..., z_{n-1}, 0) as a polynomial in n-1 variables."""
        cut = BITS * self.n
        return MultiPoly(self.n - 1, {k: c for k, c in self.terms.items() if not k >> cut},
                         self.den)

    def derivative(self, i: int) -> "MultiPoly":
        shift = BITS * i
        unit = 1 << shift
        out = {}
        for k, c in self.terms.items():
            e = (k >> shift) & MASK
            if e:
                out[k - unit] = c * e
        return MultiPoly(self.n, out, self.den)

    def substitute_affine(self, offsets: Sequence, signs: Sequence[int] | None = None) -> "MultiPoly":
        """f(s_1 z_1 + o_1, ..., s_n z_n + o_n).

        Offsets are ParamScalars that are polynomial in r (ints, Fractions and
        multiples of r all qualify); signs default to +1.
        """
        terms, den = self.terms, self.den
        for i in range(self.n):
            off = scalar(offsets[i]) if offsets[i] is not None else None
            sign = signs[i] if signs is not None else 1
            if (off is None or off.is_zero()) and sign == 1:
                continue
            if off is None:
                off = ParamScalar._make(ZERO, ONE)
            if not off.is_polynomial():
                raise ValueError("affine offsets must be polynomial in r")
            terms, den = _taylor(terms, den, i + 1, off.num, off.den[0], sign)
        return MultiPoly(self.n, terms, den)

    def compose(self, images: Sequence["MultiPoly"]) -> "MultiPoly":
        """f(g_1, ..., g_n) for polynomials g_i sharing one variable count."""
        if len(images) != self.n:
            raise ValueError(f"need {self.n} images, got {len(images)}")
        m = images[0].n
        powers: list[list] = [[MultiPoly.one(m)] for _ in images]
        out = MultiPoly.zero(m)
        for exps, c in self.items():
            term = MultiPoly.constant(m, c)
            for i, e in enumerate(exps):
                pw = powers[i]
                while len(pw) <= e:
                    pw.append(pw[-1] * images[i])
                if e:
                    term = term * pw[e]
            out = out + term
        return out

    def shift(self, vec: Sequence) -> "MultiPoly":
        """f(z - vec); the action of the shift operator T_vec."""
        return self.substitute_affine([-scalar(v) if v else None for v in vec])

    def div_linear(self, i: int, j: int) -> "MultiPoly":
        """Exact quotient by (z_i - z_j), 1-based, via synthetic division in z_i."""
        si, sj = BITS * i, BITS * j
        ui, uj = 1 << si, 1 << sj
        buckets: dict = {}
        for k, c in self.terms.items():
            e = (k >> si) & MASK
            buckets.setdefault(e, {})[k] = c
        quot: dict = {}
        for e in range(max(buckets, default=0), 0, -1):
            bucket = buckets.get(e)
            if not bucket:
                continue
            lower = buckets.setdefault(e - 1, {})
            for k, c in bucket.items():
                if not c:
                    continue
                kq = k - ui
                quot[kq] = quot.get(kq, 0) + c
                kl = kq + uj
                lower[kl] = lower.get(kl, 0) + c
        rest = {k: c for k, c in buckets.get(0, {}).items() if c}
        if rest:
            raise InexactDivision(f"division by (z{i} - z{j}) is not exact",
                                  MultiPoly(self.n, rest, self.den))
        return MultiPoly(self.n, quot, self.den)

    def exact_div(self, other: "MultiPoly") -> "MultiPoly":
        """Exact quotient; raises InexactDivision carrying the remainder."""
        self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        lin = other._as_linear_difference()
        if lin is not None:
            (i, j), c = lin
            return self.div_linear(i, j).scale(c.inverse())
        return _long_division(self, other)

    def _as_linear_difference(self):
        items = self.items()
        if len(items) != 2:
            return None
        (e1, c1), (e2, c2) = items
        if sum(e1) != 1 or sum(e2) != 1 or c1 != -c2:
            return None
        return (e1.index(1) + 1, e2.index(1) + 1), c1

    # -- evaluation -----------------------------------------------------
    def evaluate(self, point: Sequence) -> ParamScalar:
        """Value at a point whose coordinates are in Q(r)."""
        if len(point) != self.n:
            raise ValueError(f"point of length {len(point)} for a polynomial in {self.n} variables")
        if not self.terms:
            return ParamScalar._make(ZERO, ONE)
        coords = [scalar(x) for x in point]
        common = ONE
        for c in coords:
            if c.den != common:
                common = _lcm_poly(common, c.den)[0]
        nums = [zmul(c.num, zdivmod_exact(common, c.den)) if c.den != common else c.num
                for c in coords]
        groups = _group(self.terms)
        zkeys = list(groups)
        exps = {zk: unpack(zk << BITS, self.n) for zk in zkeys}
        degs = {zk: sum(e) for zk, e in exps.items()}
        top = max(degs.values())
        powers = []
        for i in range(self.n):
            m = max(exps[zk][i] for zk in zkeys)
            pw = [ONE]
            for _ in range(m):
                pw.append(zmul(pw[-1], nums[i]))
            powers.append(pw)
        cpow = [ONE]
        for _ in range(top):
            cpow.append(zmul(cpow[-1], common))
        total: list[int] = []
        for zk in zkeys:
            val = _rpoly(groups[zk])
            for i, e in enumerate(exps[zk]):
                if e:
                    val = zmul(val, powers[i][e])
            val = zmul(val, cpow[top - degs[zk]])
            if len(total) < len(val):
                total.extend([0] * (len(val) - len(total)))
            for j, x in enumerate(val):
                total[j] += x
        return ParamScalar.from_pair(ztrim(total), zmul(self.den, cpow[top]))

    def __call__(self, *point):
        if len(point) == 1 and isinstance(point[0], (list, tuple)):
            point = point[0]
        return self.evaluate(point)

    def specialize(self, value) -> dict[tuple[int, ...], Fraction]:
        """Coefficients with r replaced by a rational value."""
        out = {}
        for exps, c in self.items():
            v = c.specialize(value)
            if v:
                out[exps] = v
        return out

    # -- serialization --------------------------------------------------
    def to_json(self) -> dict:
        return {"n": self.n,
                "terms": [{"exp": list(e), "num": list(c.num), "den": list(c.den)}
                          for e, c in self.items()]}

    @classmethod
    def from_json(cls, data: dict) -> "MultiPoly":
        n = data["n"]
        return cls.from_terms(n, [(tuple(t["exp"]), ParamScalar.from_pair(tuple(t["num"]),
                                                                           tuple(t["den"])))
                                  for t in data["terms"]])

    def __repr__(self):
        return f"MultiPoly(n={self.n}, {self})"

    def __str__(self):
        items = self.items()
        if not items:
            return "0"
        parts = []
        for exps, c in items:
            mono = "*".join(f"z{i + 1}" if e == 1 else f"z{i + 1}^{e}"
                            for i, e in enumerate(exps) if e)
            cs = str(c)
            if not mono:
                parts.append(cs)
            elif cs == "1":
                parts.append(mono)
            elif cs == "-1":
                parts.append("-" + mono)
            else:
                if not (c.is_polynomial() and sum(1 for x in c.num if x) == 1):
                    cs = f"({cs})"
                parts.append(f"{cs}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def _taylor(terms: dict, den: ZPoly, var: int, off_num: ZPoly, off_den: int, sign: int):
    """Substitute z_var -> sign*z_var + off_num(r)/off_den into a numerator dict."""
    shift = BITS * var
    unit = 1 << shift
    top = max(((k >> shift) & MASK for k in terms), default=0)
    opow = [ONE]
    for _ in range(top):
        opow.append(zmul(opow[-1], off_num))
    dpow = [1]
    for _ in range(top):
        dpow.append(dpow[-1] * off_den)
    out: dict = {}
    get = out.get
    for k, c in terms.items():
        e = (k >> shift) & MASK
        if e == 0:
            kk = k
            v = c * dpow[top]
            out[kk] = get(kk, 0) + v
            continue
        base = k - e * unit
        for j in range(e + 1):
            coef = c * comb(e, j) * dpow[top - e + j]
            if sign < 0 and j & 1:
                coef = -coef
            if not coef:
                continue
            kj = base + j * unit
            for t, m in enumerate(opow[e - j]):
                if m:
                    kk = kj + t
                    out[kk] = get(kk, 0) + coef * m
    if off_den != 1 and top:
        den = zmul(den, (dpow[top],))
    return {k: v for k, v in out.items() if v}, den


def _long_division(f: MultiPoly, g: MultiPoly) -> MultiPoly:
    """Graded-lex long division with ParamScalar coefficients."""
    n = f.n
    rem = f.coefficients()
    gitems = g.items()
    lead_e, lead_c = gitems[0]
    quot: dict = {}

    def order(e):
        return (sum(e), e)

    while rem:
        e = max(rem, key=order)
        c = rem[e]
        diff = tuple(a - b for a, b in zip(e, lead_e))
        if any(d < 0 for d in diff):
            break
        q = c / lead_c
        quot[diff] = quot.get(diff, ParamScalar._make(ZERO, ONE)) + q
        for ge, gc in gitems:
            t = tuple(a + b for a, b in zip(diff, ge))
            v = rem.get(t, ParamScalar._make(ZERO, ONE)) - q * gc
            if v.is_zero():
                rem.pop(t, None)
            else:
                rem[t] = v
    if rem:
        raise InexactDivision("polynomial division is not exact", MultiPoly.from_terms(n, rem))
    return MultiPoly.from_terms(n, quot)
