from itertools import permutations
from math import factorial

import pytest
from hypothesis import given, strategies as st

from conftest import partitions
from plethystab.combinatorics import (add, as_partition, bar, compositions, cumulative,
                                      dominance_leq, fake_length, feasible_offsets, format_seq,
                                      is_partition, jt_offsets, length, pad, parse_partition,
                                      parse_seq, part, partitions_of, permutation_sign, scale,
                                      seq_norm, trim)


def test_basic_accessors():
    lam = (4, 2, 1, 0)
    assert length(lam) == 3
    assert fake_length(lam) == 4
    assert trim(lam) == (4, 2, 1)
    assert bar(lam) == (2, 1, 0)
    assert part(lam, 1) == 4 and part(lam, 7) == 0 and part(lam, 0) == 0


def test_pad_and_add():
    assert pad((2, 1), 4) == (2, 1, 0, 0)
    with pytest.raises(ValueError, match="truncate"):
        pad((2, 1, 1), 2)
    assert add((3,), (1, 1, 1)) == (4, 1, 1)
    assert scale(3, (2, 1)) == (6, 3)


def test_as_partition_rejects():
    assert is_partition((3, 3, 0))
    assert not is_partition((1, 2))
    with pytest.raises(ValueError):
        as_partition((2, -1))


def test_cumulative_and_norm():
    assert cumulative((3, 2, 1)) == (3, 5)
    assert cumulative((5,)) == ()
    # (N + 1 - j) weights at the stored length
    assert seq_norm((3, 2, 1)) == 3 * 3 + 2 * 2 + 1
    assert seq_norm((3, 2, 1, 0)) == seq_norm((3, 2, 1)) + sum((3, 2, 1))


def test_dominance():
    assert dominance_leq((2, 2), (3, 1))
    assert not dominance_leq((3, 1), (2, 2))
    assert dominance_leq((1, 1, 1, 1), (4,))
    with pytest.raises(ValueError, match="incomparable"):
        dominance_leq((2,), (1, 2))


def test_permutation_sign():
    assert permutation_sign((1, 2, 3)) == 1
    assert permutation_sign((2, 1, 3)) == -1
    assert permutation_sign((2, 3, 1)) == 1


@pytest.mark.parametrize("N", range(1, 6))
def test_jt_offsets_properties(N):
    offs = list(jt_offsets(N))
    assert len(offs) == factorial(N)
    assert offs[0].offset == (0,) * N and offs[0].sign == 1
    assert sum(o.sign for o in offs) == (1 if N == 1 else 0)
    for o in offs:
        assert sum(o.offset) == 0
        assert sorted(x + j for j, x in enumerate(o.offset, start=1)) == list(range(1, N + 1))
    assert min(o.offset[0] for o in offs) == 0
    assert min(seq_norm(o.offset) for o in offs) == 0


@given(partitions(max_size=8, max_len=5))
def test_feasible_offsets_match_filtered_jt(lam):
    if not lam:
        assert list(feasible_offsets(lam)) == [((), 1)]
        return
    expected = [o for o in jt_offsets(len(lam))
                if all(x + y >= 0 for x, y in zip(lam, o.offset))]
    assert list(feasible_offsets(lam)) == expected


def test_partitions_of():
    assert partitions_of(4) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert partitions_of(4, max_len=2) == [(4,), (3, 1), (2, 2)]
    assert partitions_of(4, max_part=2) == [(2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert partitions_of(0) == [()]
    assert [len(partitions_of(n)) for n in range(10)] == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30]


def test_compositions():
    got = list(compositions(3, 2))
    assert sorted(got) == [(0, 3), (1, 2), (2, 1), (3, 0)]
    assert all(max(c) <= 2 for c in compositions(4, 3, max_part=2))
    assert len(set(permutations((2, 1, 0)))) <= len(list(compositions(3, 3)))


def test_parse_and_format():
    assert parse_seq("4, 2,1") == (4, 2, 1)
    assert parse_seq("") == ()
    assert parse_seq("-1,3") == (-1, 3)
    assert parse_partition("3,3,1") == (3, 3, 1)
    assert format_seq((3, 1)) == "3,1"


@pytest.mark.parametrize("text, token", [("1,2", "2"), ("3,-1", "-1"), ("2,x", "x")])
def test_parse_partition_errors_name_token(text, token):
    with pytest.raises(ValueError, match=token):
        parse_partition(text)


@given(st.lists(st.integers(min_value=0, max_value=5), max_size=6))
def test_format_parse_roundtrip(seq):
    assert parse_seq(format_seq(seq)) == tuple(seq)
