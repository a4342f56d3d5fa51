import pytest
from hypothesis import given, strategies as st

from conftest import partitions
from plethystab.coefficients import (a_coeff, a_coeff_detailed, a_to_json, b_coeff, clear_caches,
                                     schur_expand)
from plethystab.combinatorics import partitions_of
from plethystab.oracle import s_plethysm_poly, schur_decompose


def test_b_examples():
    assert b_coeff((2,), (2,), (2, 2)) == 2
    assert b_coeff((2,), (2,), (4,)) == 1
    assert b_coeff((2,), (2,), (3, 1)) == 1


def test_b_general_sequences():
    # reordering and zeros do not matter; negative parts give h_r = 0
    assert b_coeff((0, 2), (2,), (2, 0, 2)) == b_coeff((2,), (2,), (2, 2))
    assert b_coeff((3, -1), (2,), (2, 2)) == 0
    assert b_coeff((2,), (2,), (5,)) == 0


@pytest.mark.parametrize("lam, mu, nu, value", [
    ((2,), (2,), (4,), 1),
    ((2,), (2,), (3, 1), 0),
    ((2,), (2,), (2, 2), 1),
    ((1, 1), (2,), (3, 1), 1),
    ((2,), (1, 1), (1, 1, 1, 1), 1),
])
def test_a_examples(lam, mu, nu, value):
    assert a_coeff(lam, mu, nu) == value


def test_a_term_statistics():
    res = a_coeff_detailed((2,), (1, 1), (1, 1, 1, 1))
    assert res.value == 1
    assert res.terms_evaluated + res.terms_pruned == 1 * 24
    assert res.terms_pruned > 0
    js = a_to_json((2,), (1, 1), (1, 1, 1, 1), res)
    assert js["a"] == "1" and js["terms_evaluated"] == res.terms_evaluated


def test_a_weight_mismatch():
    res = a_coeff_detailed((2,), (2,), (3,))
    assert res.value == 0 and res.terms_evaluated == 0


def test_schur_expand_classical():
    assert schur_expand((2,), (2,)) == {(4,): 1, (2, 2): 1}
    assert schur_expand((1, 1), (2,)) == {(3, 1): 1}
    assert schur_expand((2,), (1, 1)) == {(2, 2): 1, (1, 1, 1, 1): 1}
    assert schur_expand((2,), (1, 1), nvars=3) == {(2, 2): 1}


@pytest.mark.parametrize("lam, mu", [((3,), (2,)), ((2, 1), (2,)), ((2,), (2, 1)), ((4,), (1, 1))])
def test_schur_expand_matches_oracle(lam, mu):
    N = sum(lam) * sum(mu)
    assert schur_expand(lam, mu) == schur_decompose(s_plethysm_poly(lam, mu, N))


@given(partitions(max_size=5, min_size=1))
def test_identity_plethysm(lam):
    for nu in partitions_of(sum(lam)):
        assert a_coeff(lam, (1,), nu) == int(nu == lam)


@given(partitions(max_size=3, min_size=1), partitions(max_size=2, min_size=1))
def test_inner_identity(lam, mu):
    # s_(1)[s_mu] = s_mu
    assert schur_expand((1,), mu) == {mu: 1}
    assert schur_expand(lam, (1,)) == {lam: 1}


@given(partitions(max_size=2, min_size=1), partitions(max_size=3, min_size=1))
def test_nonnegative(lam, mu):
    for c in schur_expand(lam, mu).values():
        assert c > 0


def test_clear_caches():
    b_coeff((2,), (2,), (2, 2))
    clear_caches()
    assert b_coeff((2,), (2,), (2, 2)) == 2
