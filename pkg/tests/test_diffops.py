from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import polys
from semisym.combinatorics import n_even, n_odd, node, partitions_upto, rho
from semisym.diffops import apply, apply_top, component, components, cutoff_violations, eigenvalue
from semisym.diffops import expansion, phi
from semisym.diffops.operators import (allowed_subsets, closed_form_coefficient, constant_term,
                                       determinant_expand, eta, eta_prime, euler_field, in_p_even,
                                       operator_matrix)
from semisym.exactalg import MultiPoly, R_S, scalar, variables
from semisym.identities.duality import random_semisymmetric
from semisym.interpolation import build_R, e_basis_element, elementary_semisym
from semisym.interpolation.basis import build_Rbar


def _odd_product(n, t, point):
    out = scalar(1)
    for i in range(0, n, 2):
        out = out * (t + point[i])
    return out


@settings(max_examples=30)
@given(polys(n=1, max_deg=3), st.integers(-3, 3))
def test_one_variable_operator(f, t):
    z1 = MultiPoly.variable(1, 1)
    assert apply("X", f, t) == (z1 + t) * f - z1 * f.shift([1])


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_y_shifts_lie_in_p_even(n):
    for t in range(n_odd(n) + 1):
        assert all(in_p_even(s) for s in expansion("Y", n, t).support())


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_x_identity_coefficient(n):
    z = variables(n)
    for t in range(3):
        want = phi(n)
        for i in range(0, n, 2):
            want = want * (z[i] + t)
        assert expansion("X", n, t).coeffs[()] == want


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_operator_on_constant(n):
    for t in range(3):
        assert apply("X", MultiPoly.one(n), t) == MultiPoly.constant(n, _odd_product(n, t, rho(n)))


def test_operator_on_first_polynomial():
    n = 3
    R1 = build_R((1,), n)
    p = rho(n)
    for t in range(4):
        assert apply("X", R1, t) == R1.scale((t + p[0] + 1) * (t + p[2]))


def test_eigenvalue_examples():
    assert eigenvalue("X", (0, 0, 0), 0) == 0
    t = Fraction(3, 2)
    assert eigenvalue("Y", (1, 1, 0), t) == t + R_S + 1
    assert eigenvalue("X", (2, 1, 0), t) == (t + 2 * R_S + 2) * t


@pytest.mark.parametrize("n", [2, 3, 4])
def test_eigen_relation(n):
    for lam in partitions_upto(n, 2):
        R = build_R(lam, n)
        for kind in ("X", "Y"):
            for t in range(n_odd(n) + 1):
                assert apply(kind, R, t) == R.scale(eigenvalue(kind, lam, t))


def _deg_prefix(f: MultiPoly, m: int) -> int:
    return max((sum(e[:m]) for e, _ in f.items()), default=-1)


@settings(max_examples=12)
@given(st.integers(0, 10**6), st.sampled_from([2, 3, 4]), st.integers(0, 3))
def test_operators_do_not_raise_prefix_degrees(seed, n, d):
    f = random_semisymmetric(n, d, seed)
    for kind in ("X", "Y"):
        g = apply(kind, f, 1)
        assert g.degree() <= f.degree()
        for m in range(1, n + 1):
            assert _deg_prefix(g, m) <= _deg_prefix(f, m)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_components_commute_on_e_basis(n):
    ops = [component("X", i, n) for i in range(1, n_odd(n) + 1)]
    ops += [component("Y", i, n) for i in range(1, n_even(n) + 1)]
    for mu in partitions_upto(n, 2):
        f = e_basis_element(mu) if any(mu) else MultiPoly.one(n)
        images = [op.apply(f) for op in ops]
        for i, a in enumerate(ops):
            for j in range(i + 1, len(ops)):
                assert a.apply(images[j]) == ops[j].apply(images[i])


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_first_components_on_constant(n):
    one = MultiPoly.one(n)
    diff = component("X", 1, n).apply(one) - component("Y", 1, n).apply(one)
    assert diff == MultiPoly.constant(n, R_S * n_even(n))


@pytest.mark.parametrize("n", [2, 3, 4])
def test_last_y_component_eigenvalue(n):
    last = components("Y", n)[-1]
    for lam in partitions_upto(n, 2):
        want = scalar(1)
        for i, x in enumerate(node(lam)):
            if i % 2:
                want = want * x
        assert last.apply(build_R(lam, n)) == build_R(lam, n).scale(want)


def test_cutoff_examples():
    op = expansion("X", 3, 1)
    zero = (0, 0, 0)
    assert cutoff_violations(op, zero) == []
    for s in op.support():
        if s:
            assert op.coeffs[s].evaluate(node(zero)).is_zero()
    mu = (1, 1, 0)
    assert op.coeffs[(1,)].evaluate(node(mu)).is_zero()
    assert not op.coeffs[(1, 2)].evaluate(node(mu)).is_zero()


@pytest.mark.parametrize("n", [2, 3, 4])
def test_cutoff_sweep(n):
    for kind in ("X", "Y"):
        op = expansion(kind, n, Fraction(1, 3))
        for mu in partitions_upto(n, 3):
            assert cutoff_violations(op, mu) == []


def test_top_operators():
    n = 3
    p = rho(n)
    f = build_Rbar((1,), n)
    for t in range(3):
        assert apply_top("X", f, t) == f.scale((t + p[0] + 1) * (t + p[2]))
    n = 4
    p = rho(n)
    g = build_Rbar((1, 1), n)
    for t in range(3):
        assert apply_top("Y", g, t) == g.scale((t + p[1] + 1) * (t + p[3]))
    for n in (2, 3):
        one = MultiPoly.one(n)
        assert apply_top("X", one, 2) == one.scale(_odd_product(n, 2, rho(n)))


def test_euler_fields():
    n = 3
    e2 = elementary_semisym(2, n)
    assert eta(e2) == e2
    assert euler_field(e2) == e2
    assert eta_prime(build_Rbar((1,), n)) == build_Rbar((1,), n)
    assert eta_prime(build_Rbar((1, 1), n)).is_zero()


_rational = st.fractions(min_value=-5, max_value=5, max_denominator=4)


@settings(max_examples=20)
@given(st.sampled_from([2, 3, 4]), st.sampled_from(["X", "Y"]), st.integers(0, 2),
       st.lists(_rational, min_size=4, max_size=4))
def test_subset_expansion_matches_closed_form(n, kind, t, coords):
    point = [scalar(c) + R_S * (7 * i) for i, c in enumerate(coords[:n])]
    op = expansion(kind, n, t)
    for s in allowed_subsets(kind, n):
        assert op.coefficient_at(s, point) == closed_form_coefficient(kind, s, point, t)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_constant_term_gives_eigenvalues(n):
    ops = [component("X", i, n) for i in range(1, n_odd(n) + 1)]
    ops += [component("Y", i, n) for i in range(1, n_even(n) + 1)]
    for lam in partitions_upto(n, 2):
        R = build_R(lam, n)
        values = [constant_term(op).evaluate(node(lam)) for op in ops]
        for op, v in zip(ops, values):
            assert op.apply(R) == R.scale(v)
        for a, va in zip(ops, values):
            for b, vb in zip(ops, values):
                assert a.apply(b.apply(R)) == R.scale(va * vb)


def test_large_n_refused():
    with pytest.raises(ValueError):
        determinant_expand(operator_matrix("X", 8, 0))
