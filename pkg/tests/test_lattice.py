import pytest
from hypothesis import given, strategies as st

from conftest import partitions
from plethystab.combinatorics import compositions
from plethystab.lattice import count_points, enumerate_points, vanishing_precheck, verify_point
from plethystab.oracle import h_plethysm_poly


def test_h2_s2_nu22():
    assert count_points((2,), (2,), (2, 2), 2) == 2
    pts = enumerate_points((2,), (2,), (2, 2), 2)
    assert len(pts) == 2
    # columns are the tableaux 11, 12, 22
    assert set(pts) == {((1, 0, 1), (0, 0, 0)), ((0, 2, 0), (0, 0, 0))}
    for M in pts:
        assert verify_point(M, (2,), (2,), (2, 2), 2)


def test_verify_point_rejects():
    assert not verify_point(((1, 0, 0), (0, 0, 0)), (2,), (2,), (2, 2), 2)
    assert not verify_point(((2, 0), (0, 0)), (2,), (2,), (2, 2), 2)
    assert not verify_point(((-1, 2, 1), (0, 0, 0)), (2,), (2,), (2, 2), 2)


def test_precheck_is_not_the_per_letter_cap():
    # 12/2 carries two 2's although mu_2 = 1, so (3,3) is reachable
    assert vanishing_precheck((2,), (2, 1), (3, 3), 2)
    assert count_points((2,), (2, 1), (3, 3), 2) == 1


def test_precheck_rejections():
    assert not vanishing_precheck((2,), (2,), (5,), 1)
    assert not vanishing_precheck((1,), (1, 1), (2,), 2)
    assert not vanishing_precheck((-1, 3), (1,), (2,), 2)
    assert not vanishing_precheck((1,), (1, 1, 1), (1, 1, 1), 2)


def test_size_errors():
    with pytest.raises(ValueError):
        count_points((1, 1, 1), (1,), (3,), 2)
    with pytest.raises(ValueError):
        count_points((1,), (1,), (1,), 0)
    with pytest.raises(ValueError, match="too large"):
        enumerate_points((4,), (1,), (1, 1, 1, 1), 4, cap=0)


def test_empty_lambda():
    assert count_points((), (2,), (), 1) == 1
    assert count_points((0, 0), (2,), (0, 0), 2) == 1


@given(st.integers(min_value=1, max_value=3), partitions(max_size=3, min_size=1),
       st.data())
def test_count_matches_oracle_and_enumeration(N, mu, data):
    size = data.draw(st.integers(min_value=0, max_value=3))
    lam = data.draw(st.sampled_from(list(compositions(size, N))))
    poly = h_plethysm_poly(lam, mu, N)
    for nu in compositions(size * sum(mu), N):
        c = count_points(lam, mu, nu, N)
        assert c == poly.coeff(nu)
        if c <= 50:
            assert len(enumerate_points(lam, mu, nu, N)) == c


@given(st.permutations((3, 1, 0)), st.permutations((2, 2, 1, 1)))
def test_symmetric_in_lambda_and_nu(lam, nu):
    base = count_points((3, 1, 0), (2,), (2, 2, 1, 1), 4)
    assert count_points(tuple(lam) + (0,), (2,), nu, 4) == base
