import pytest
from hypothesis import given, strategies as st

import plethystab
from plethystab._kernels import (BACKEND, count_matrix_points, count_matrix_points_compiled,
                                 count_matrix_points_py)
from plethystab.tableaux import weight_multiplicities

compiled = pytest.mark.skipif(BACKEND != "cython", reason="compiled kernel not built")


def _instance(lam, mu, nu):
    N = len(nu)
    mult = weight_multiplicities(mu, N, cap=nu)
    weights = list(mult)
    return sorted(lam, reverse=True), weights, [mult[w] for w in weights], tuple(nu)


def test_backend_name():
    assert plethystab.BACKEND in ("cython", "python")


def test_small_count():
    args = _instance((2,), (2,), (2, 2))
    assert count_matrix_points(*args) == 2
    assert count_matrix_points_py(*args) == 2


def test_no_columns():
    assert count_matrix_points_py([], [], [], (0, 0)) == 1
    assert count_matrix_points_py([1], [], [], (1, 0)) == 0


@compiled
@given(st.lists(st.integers(min_value=1, max_value=3), min_size=1, max_size=3),
       st.sampled_from([(1,), (2,), (1, 1), (2, 1), (3,)]),
       st.integers(min_value=2, max_value=4), st.data())
def test_backends_agree(lam, mu, N, data):
    total = sum(lam) * sum(mu)
    cuts = sorted(data.draw(st.lists(st.integers(min_value=0, max_value=total),
                                     min_size=N - 1, max_size=N - 1)))
    nu = tuple(b - a for a, b in zip([0] + cuts, cuts + [total]))
    args = _instance(lam, mu, nu)
    assert count_matrix_points_compiled(*args) == count_matrix_points_py(*args)


@compiled
def test_backends_agree_large_margins():
    args = _instance((30, 30, 30), (1,), (30, 30, 30))
    assert count_matrix_points_compiled(*args) == count_matrix_points_py(*args)
