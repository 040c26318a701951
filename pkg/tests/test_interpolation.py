from itertools import permutations, product

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import poly_to_sympy, r_sym, sympy_equal, z_syms
from semisym.combinatorics import (bracket, n_even, node, odd_weight, partitions_upto, preceq,
                                   preceq_hom, rho)
from semisym.exactalg import MultiPoly, R_S, variables
from semisym.identities.duality import random_semisymmetric
from semisym.interpolation import (build_R, build_r, column_factor, e_basis_element,
                                   elementary_semisym, elementary_symmetric, shifted_elementary)
from semisym.interpolation.basis import (build_Rbar, from_shifted_coordinates, hat_of_values,
                                         hat_transform, inverse_hat, is_semisymmetric,
                                         newton_coefficients, stability_restrict, to_basis,
                                         to_shifted_coordinates)
from semisym.interpolation.elementary import shifted_elementary_jack
from semisym.interpolation.jack import build_shifted_jack, jack_rho, shifted_jack_in_u


def sympy_R(lam, n):
    """R_lam by an independent sympy solve over W-orbit sums of monomials."""
    z = z_syms(n)
    d = odd_weight(lam)
    odd_idx, even_idx = list(range(0, n, 2)), list(range(1, n, 2))
    reps = [e for e in product(range(d + 1), repeat=n)
            if sum(e) <= d and all(e[i] >= e[i + 2] for i in range(n - 2))]
    basis = []
    for e in reps:
        orbit = set()
        for po in permutations(odd_idx):
            for pe in permutations(even_idx):
                img = [0] * n
                for src, dst in zip(odd_idx, po):
                    img[dst] = e[src]
                for src, dst in zip(even_idx, pe):
                    img[dst] = e[src]
                orbit.add(tuple(img))
        basis.append(sum(sympy.prod(v**k for v, k in zip(z, o)) for o in orbit))
    coeffs = sympy.symbols(f"c0:{len(basis)}")
    f = sum(c * b for c, b in zip(coeffs, basis))
    eqs = []
    rho_s = [(n - 1 - i) * r_sym for i in range(n)]
    for mu in partitions_upto(n, d):
        if mu != lam:
            eqs.append(f.subs({v: rho_s[i] + mu[i] for i, v in enumerate(z)}, simultaneous=True))
    lead = sympy.Poly(sympy.expand(f), *z).coeff_monomial(
        sympy.prod(v**k for v, k in zip(z, bracket(lam))))
    eqs.append(lead - 1)
    sol = sympy.solve(eqs, coeffs, dict=True)[0]
    return sympy.expand(f.subs(sol))


@pytest.mark.parametrize("n,lam", [(2, (1, 0)), (2, (1, 1)), (2, (2, 1)), (3, (1, 0, 0)),
                                   (3, (1, 1, 0)), (3, (1, 1, 1)), (3, (2, 0, 0))])
def test_small_R_against_sympy(n, lam):
    assert sympy_equal(poly_to_sympy(build_R(lam, n)), sympy_R(lam, n))


def test_first_polynomial():
    z1, z2, z3 = variables(3)
    assert build_R((1, 0, 0), 3) == z1 - z2 + z3 - R_S
    assert elementary_semisym(1, 3) == z1 - z2 + z3
    assert elementary_semisym(1, 3, shifted=True) == z1 - z2 + z3 - R_S
    assert build_R((1, 0, 0), 3).evaluate(node((1, 1, 0))) == 0


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_second_row_relation(n):
    R1 = build_R((1,), n)
    assert build_R((2,), n) == R1 * R1 - R1


def test_normalized_polynomials():
    assert build_r((), 3) == MultiPoly.one(3)
    lam = (1, 1, 1)
    assert build_R(lam, 3).evaluate(node(lam)) == 1 + 2 * R_S
    assert build_r(lam, 3).evaluate(node(lam)) == 1


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_normalized_kronecker_property(n):
    lams = partitions_upto(n, 3)
    for lam in lams:
        r_lam = build_r(lam, n)
        for mu in partitions_upto(n, odd_weight(lam)):
            assert r_lam.evaluate(node(mu)) == (1 if mu == lam else 0)


def test_shifted_u_coordinates_of_column_two():
    # R_(11) in u = z - rho is e_1 of the even u variables
    for n in (2, 3, 4, 5):
        u = variables(n)
        want = sum((u[i] for i in range(1, n, 2)), MultiPoly.zero(n))
        assert to_shifted_coordinates(build_R((1, 1), n)) == want


def test_shifted_jack_degree_one():
    for N in (1, 2, 3):
        P = build_shifted_jack((1,), N, R_S)
        z = variables(N)
        want = sum(z, MultiPoly.zero(N)) - sum(jack_rho(N, R_S), 0 * R_S)
        assert P == want


@pytest.mark.parametrize("N,m", [(2, 1), (2, 2), (3, 2), (3, 3), (4, 2)])
def test_shifted_jack_columns_match_explicit_sum(N, m):
    step = 2 * R_S
    explicit = shifted_elementary_jack(m, variables(N), step, N)
    assert shifted_jack_in_u((1,) * m, N, step) == explicit


def test_column_polynomial_jack_instance():
    # lam = (1, 1), n = 2: R in u-coordinates is the one-variable Jack in u_2
    got = to_shifted_coordinates(build_R((1, 1), 2))
    P = shifted_jack_in_u((1,), 1, 2 * R_S)
    assert got == P.rekey(2, [2])


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_column_formula_matches_interpolation(n):
    for m in range(n + 1):
        assert shifted_elementary(m, n) == build_R((1,) * m, n)


def test_e_basis_single_term():
    for mu in partitions_upto(3, 3):
        expansion = to_basis(e_basis_element(mu), "elementary")
        assert expansion.support() == [mu]
        assert expansion[mu] == 1


@pytest.mark.parametrize("n", [2, 3, 4])
def test_e_support_is_preceq(n):
    for lam in partitions_upto(n, 3):
        expansion = to_basis(build_R(lam, n), "elementary")
        assert expansion[lam] == 1
        assert all(preceq(mu, lam) for mu in expansion.support())
        top = to_basis(build_Rbar(lam, n), "elementary")
        assert all(preceq_hom(mu, lam) for mu in top.support())


def test_R_basis_of_square():
    R1 = build_R((1,), 3)
    expansion = to_basis(R1 * R1, "R")
    assert expansion.support() == [(1, 0, 0), (2, 0, 0)]
    assert expansion[(2, 0, 0)] == 1 and expansion[(1, 0, 0)] == 1


def test_top_components():
    z = variables(3)
    assert build_Rbar((1,), 3) == z[0] - z[1] + z[2]
    for n in (2, 3, 4, 5, 6):
        zs = variables(n)
        for m in range(1, n_even(n) + 1):
            want = elementary_symmetric([zs[i] for i in range(1, n, 2)], m, n)
            assert build_Rbar((1,) * (2 * m), n) == want
    f = build_Rbar((2, 1), 3)
    assert f.top_component() == f


def test_stability_restriction():
    assert stability_restrict(build_R((1, 1, 1), 3)).is_zero()
    want = build_R((1, 0), 2).shift([R_S, R_S])
    assert stability_restrict(build_R((1, 0, 0), 3)) == want
    assert stability_restrict(build_R((), 3)) == MultiPoly.one(2)


def test_column_recursion():
    n = 3
    for lam in [(1, 1, 1), (2, 1, 1), (2, 2, 1), (3, 2, 2)]:
        inner = tuple(x - 1 for x in lam)
        assert build_R(lam, n) == column_factor(n) * build_R(inner, n).shift([1] * n)


def test_hat_of_interpolation_polynomial_is_a_point_mass():
    n, d = 3, 2
    for nu in partitions_upto(n, d):
        hat = hat_transform(build_R(nu, n), d)
        sign = -1 if odd_weight(nu) % 2 else 1
        for lam, v in hat.items():
            expected = build_R(nu, n).evaluate(node(nu)) * sign if lam == nu else 0
            assert v == expected


def test_hat_of_one():
    n = 3
    hat = hat_transform(MultiPoly.one(n), 0)
    assert inverse_hat(hat, n) == MultiPoly.one(n)


@settings(max_examples=8)
@given(st.integers(0, 10**6), st.sampled_from([2, 3]), st.integers(0, 3))
def test_hat_is_an_involution(seed, n, d):
    f = random_semisymmetric(n, d, seed)
    hat = hat_transform(f, d)
    back = hat_of_values(hat, n, d)
    for mu in partitions_upto(n, d):
        assert back[mu] == f.evaluate(node(mu))
    assert inverse_hat(hat, n) == f


@settings(max_examples=10)
@given(st.integers(0, 10**6), st.sampled_from([2, 3, 4]), st.integers(0, 3))
def test_basis_roundtrips(seed, n, d):
    f = random_semisymmetric(n, d, seed)
    assert is_semisymmetric(f)
    for basis in ("R", "elementary"):
        assert to_basis(f, basis).to_poly() == f
    assert to_basis(f.top_component(), "rbar").to_poly() == f.top_component()
    assert from_shifted_coordinates(to_shifted_coordinates(f)) == f


def test_newton_coefficients_of_single_polynomial():
    lam = (2, 1, 0)
    assert newton_coefficients(build_R(lam, 3)) == {lam: 1}


def test_semisymmetry_examples():
    z = variables(3)
    assert is_semisymmetric(z[0] + z[2])
    assert not is_semisymmetric(z[0])
    assert is_semisymmetric(elementary_semisym(1, 3))


@pytest.mark.parametrize("n", [2, 3, 4])
def test_defining_properties(n):
    for lam in partitions_upto(n, 3):
        R = build_R(lam, n)
        assert is_semisymmetric(R)
        assert R.degree() == odd_weight(lam)
        assert R.coeff(bracket(lam)) == 1
        for mu in partitions_upto(n, odd_weight(lam)):
            if mu != lam:
                assert R.evaluate(node(mu)).is_zero()


def test_rho_used_in_u_coordinates():
    f = build_R((1,), 2)
    assert to_shifted_coordinates(f).evaluate([0, 0]) == f.evaluate(rho(2))
