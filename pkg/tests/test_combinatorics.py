from fractions import Fraction
from itertools import product
from math import factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from semisym.combinatorics import (bracket, bracket_inverse, bracket_one, contained, dominated,
                                   eval_factor_a_boxes, eval_factor_a_rows, eval_factor_b_boxes,
                                   eval_factor_b_rows, evaluation_closed_form, hook_even_prime,
                                   in_phi_plus, in_psi0, in_psi0_by_generators, in_psi1,
                                   in_psi1_by_generators, is_partition, odd_weight, partition,
                                   partitions_upto, pieri_coefficient, pieri_coefficient_boxes,
                                   preceq, preceq_hom, rho, rho_alpha, sqsubseteq)
from semisym.exactalg import R_S, ParamScalar
from semisym.interpolation import build_R


def test_bracket_examples():
    assert bracket((1, 0, 0)) == (1, 0, 0)
    assert bracket((2, 1, 0)) == (1, 1, 0)
    assert bracket_one((3, 3, 1, 1)) == 0
    assert bracket_one((2, 2, 0, 0, 5)) == 5


def test_bracket_inverse_examples():
    assert bracket_inverse((1, 0, 0)) == (1, 0, 0)
    assert bracket_inverse((1, 1, 0)) == (2, 1, 0)


@pytest.mark.parametrize("n", range(1, 6))
def test_bracket_roundtrip_exhaustive(n):
    for nu in product(range(4), repeat=n):
        assert bracket(bracket_inverse(nu)) == nu
    for lam in partitions_upto(n, 4):
        assert bracket_inverse(bracket(lam)) == lam


@pytest.mark.parametrize("n", range(1, 6))
def test_bracket_sums_to_odd_weight(n):
    for lam in partitions_upto(n, 4):
        assert sum(bracket(lam)) == odd_weight(lam)


def test_rho():
    assert rho(1) == [0]
    assert rho(3) == [2 * R_S, R_S, 0]
    assert rho(4) == [3 * R_S, 2 * R_S, R_S, 0]


def test_degrees():
    for lam, expected in [((2, 1, 0), (3, 2, 1)), ((1, 1, 1), (3, 2, 1))]:
        assert (sum(lam), odd_weight(lam), sum(lam[1::2])) == expected


@pytest.mark.parametrize("a,m", [(a, m) for a in range(1, 5) for m in (1, 3, 5)])
def test_hook_odd_weight(a, m):
    lam = partition([a] + [1] * (m - 1), m)
    assert odd_weight(lam) == a + (m - 1) // 2


def test_enumeration_examples():
    assert partitions_upto(2, 1) == [(0, 0), (1, 0), (1, 1)]
    assert partitions_upto(1, 2) == [(0,), (1,), (2,)]


@pytest.mark.parametrize("n,d", [(3, 2), (4, 2), (2, 3), (5, 1)])
def test_enumeration_against_brute_force(n, d):
    brute = {lam for lam in product(range(d + 3), repeat=n)
             if is_partition(lam) and odd_weight(lam) <= d}
    got = partitions_upto(n, d)
    assert len(got) == len(set(got))
    assert set(got) == brute


def test_order_examples():
    assert contained((1, 0, 0), (1, 1, 0))
    assert not sqsubseteq((1, 0, 0), (1, 1, 0))
    for mu in [(1, 0, 0), (1, 1, 0)]:
        for lam in [(2, 1, 0), (1, 1, 1)]:
            assert sqsubseteq(mu, lam)


@pytest.mark.parametrize("n", range(1, 5))
def test_preceq_implies_bracket_dominance(n):
    vecs = [v for v in product(range(3), repeat=n) if is_partition(v)]
    for a in vecs:
        for b in vecs:
            if preceq(a, b):
                assert dominated(bracket(a), bracket(b))


def test_monoid_examples():
    assert in_psi0((1, 1, 0))
    assert not in_psi0((0, 1, 0))
    assert in_psi1((1, 0, -1))
    assert in_phi_plus((1, 0, -1))
    assert not in_phi_plus((1, 0, 0))


@pytest.mark.parametrize("n", range(1, 5))
def test_psi0_criterion_matches_generator_search(n):
    for v in product(range(4), repeat=n):
        assert in_psi0(v) == in_psi0_by_generators(v), v


@pytest.mark.parametrize("n", range(1, 5))
def test_psi1_criterion_matches_generator_basis(n):
    for v in product(range(-2, 3), repeat=n):
        assert in_psi1(v) == in_psi1_by_generators(v), v


@pytest.mark.parametrize("n", [2, 3, 4])
@pytest.mark.parametrize("rel", [sqsubseteq, preceq, preceq_hom], ids=["sq", "prec", "hom"])
def test_orders_are_partial_orders(n, rel):
    lams = partitions_upto(n, 3)
    for a in lams:
        assert rel(a, a)
    for a in lams:
        for b in lams:
            if a != b and rel(a, b):
                assert not rel(b, a)
                for c in lams:
                    if rel(b, c):
                        assert rel(a, c)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_lambda_d_is_downward_closed(n):
    d = 3
    inside = set(partitions_upto(n, d))
    for lam in inside:
        for mu in partitions_upto(n, d + 3):
            if sqsubseteq(mu, lam):
                assert mu in inside


def test_hook_values():
    for a in range(6):
        assert hook_even_prime((a,)) == factorial(a)
    for a in range(5):
        for b in range(a + 1):
            assert hook_even_prime((a, b)) == factorial(a - b) * factorial(b)
    assert hook_even_prime((1, 1, 1)) == 1 + 2 * R_S


def test_evaluation_factor_examples():
    alpha = Fraction(5, 2)
    assert eval_factor_a_rows((0, 0, 0), alpha) == 1
    assert eval_factor_b_rows((0, 0, 0)) == 1
    # R_(1)(-rho - alpha) = -alpha - 2r when n = 3
    assert eval_factor_a_rows((1, 0, 0), alpha) == alpha + 2 * R_S
    assert evaluation_closed_form((1, 0, 0), alpha) == -alpha - 2 * R_S


def test_b_factor_against_interpolation():
    lam, alpha = (1, 1, 0), Fraction(2)
    direct = build_R(lam, 3).evaluate([-x for x in rho_alpha(3, alpha)])
    sign = (-1) ** odd_weight(lam)
    assert eval_factor_b_rows(lam) == direct * sign / eval_factor_a_rows(lam, alpha)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_factor_forms_agree(n):
    for lam in partitions_upto(n, 4):
        assert eval_factor_b_rows(lam) == eval_factor_b_boxes(lam)
        for alpha in (1, 2, Fraction(5, 2)):
            assert eval_factor_a_rows(lam, alpha) == eval_factor_a_boxes(lam, alpha)


def _subsets(n):
    for mask in range(1 << n):
        yield tuple(i + 1 for i in range(n) if mask >> i & 1)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_pieri_coefficient_forms_agree(n):
    for mu in partitions_upto(n, 3):
        for subset in _subsets(n):
            assert pieri_coefficient(mu, subset) == pieri_coefficient_boxes(mu, subset)


def test_pieri_coefficient_examples():
    assert pieri_coefficient((2, 1, 0), ()) == 1
    # mu_2 = mu_3 with 3 in I but 2 not: lam is not a partition
    assert pieri_coefficient((2, 1, 1), (3,)) == 0
    for mu in [(3, 2, 0), (4, 1, 0), (5, 3, 1), (2, 2, 2)]:
        m1, m2, m3 = mu
        want = ((m2 - m3) * (m2 - m3 - 1 + 2 * R_S)
                / ((m1 - m3 + 2 * R_S) * (m1 - m3 - 1 + 2 * R_S)))
        assert pieri_coefficient(mu, (3,)) == want


@given(st.lists(st.integers(0, 4), min_size=1, max_size=5))
def test_partition_normalizes(parts):
    parts = sorted(parts, reverse=True)
    lam = partition(parts, 6)
    assert len(lam) == 6 and is_partition(lam)


def test_partition_rejects_bad_input():
    with pytest.raises(ValueError):
        partition([0, 1], 3)
    with pytest.raises(ValueError):
        partition([1, 1, 1, 1], 3)
    with pytest.raises(ValueError):
        partition([1, -1], 3)


def test_scalar_types():
    assert isinstance(hook_even_prime((2, 1)), ParamScalar)
