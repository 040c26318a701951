from fractions import Fraction

import sympy
from hypothesis import settings
from hypothesis import strategies as st

from semisym.exactalg import MultiPoly, ParamScalar

settings.register_profile("exact", deadline=None, max_examples=60)
settings.load_profile("exact")

r_sym = sympy.Symbol("r")


def z_syms(n):
    return sympy.symbols(f"z1:{n + 1}")


def scalar_to_sympy(c: ParamScalar):
    num = sum(sympy.Integer(a) * r_sym**k for k, a in enumerate(c.num))
    den = sum(sympy.Integer(a) * r_sym**k for k, a in enumerate(c.den))
    return num / den


def poly_to_sympy(f: MultiPoly):
    z = z_syms(f.n)
    out = sympy.Integer(0)
    for exps, c in f.items():
        mono = sympy.Integer(1)
        for v, e in zip(z, exps):
            mono *= v**e
        out += scalar_to_sympy(c) * mono
    return out


def sympy_equal(a, b) -> bool:
    return sympy.expand(sympy.numer(sympy.together(a - b))) == 0


small_ints = st.integers(min_value=-4, max_value=4)


@st.composite
def param_scalars(draw, nonzero=False):
    num = draw(st.lists(small_ints, min_size=1, max_size=3))
    den = draw(st.lists(small_ints, min_size=1, max_size=3).filter(any))
    value = ParamScalar.from_rationals(num, den)
    if nonzero and value.is_zero():
        value = value + 1
    return value


@st.composite
def polys(draw, n=3, max_deg=2, max_terms=4, symbolic=True):
    terms = {}
    for _ in range(draw(st.integers(0, max_terms))):
        exps = tuple(draw(st.integers(0, max_deg)) for _ in range(n))
        if symbolic:
            c = draw(param_scalars())
        else:
            c = ParamScalar(Fraction(draw(small_ints), draw(st.integers(1, 3))))
        terms[exps] = c
    return MultiPoly.from_terms(n, terms)


int_vectors = st.lists(st.integers(-2, 2), min_size=3, max_size=3)
