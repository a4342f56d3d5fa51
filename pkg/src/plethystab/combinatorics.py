"""Integer sequences, partitions and the signed offsets of the Jacobi-Trudi expansion.

Sequences and partitions are plain tuples of ints.  Trailing zeros are kept:
the stored length is the *fake length*, which matters for :func:`seq_norm`.
"""
from __future__ import annotations

from itertools import permutations
from typing import Iterable, Iterator, NamedTuple, Sequence

IntSeq = tuple[int, ...]
Partition = tuple[int, ...]


class SignedOffset(NamedTuple):
    """``omega(sigma)_j = sigma(j) - j`` together with the sign of ``sigma``."""

    offset: IntSeq
    sign: int


def is_partition(seq: Sequence[int]) -> bool:
    if any(p < 0 for p in seq):
        return False
    return all(seq[i] >= seq[i + 1] for i in range(len(seq) - 1))


def as_partition(seq: Iterable[int]) -> Partition:
    """Validate and return ``seq`` as a partition tuple (trailing zeros kept)."""
    parts = tuple(int(p) for p in seq)
    if not is_partition(parts):
        raise ValueError(f"not a partition: {parts}")
    return parts


def trim(seq: Sequence[int]) -> IntSeq:
    """Drop trailing zeros."""
    end = len(seq)
    while end and seq[end - 1] == 0:
        end -= 1
    return tuple(seq[:end])


def weight(seq: Sequence[int]) -> int:
    return sum(seq)


def length(seq: Sequence[int]) -> int:
    """Number of nonzero parts."""
    return sum(1 for p in seq if p != 0)


def fake_length(seq: Sequence[int]) -> int:
    return len(seq)


def bar(seq: Sequence[int]) -> IntSeq:
    """All parts but the first, so that ``weight(bar(p)) == weight(p) - p[0]``."""
    return tuple(seq[1:])


def part(seq: Sequence[int], i: int) -> int:
    """1-based part access with implicit trailing zeros."""
    return seq[i - 1] if 0 < i <= len(seq) else 0


def pad(seq: Sequence[int], L: int) -> IntSeq:
    if L < len(seq):
        raise ValueError(f"cannot truncate sequence of length {len(seq)} to {L}")
    return tuple(seq) + (0,) * (L - len(seq))


def add(a: Sequence[int], b: Sequence[int]) -> IntSeq:
    L = max(len(a), len(b))
    return tuple(x + y for x, y in zip(pad(a, L), pad(b, L)))


def scale(n: int, a: Sequence[int]) -> IntSeq:
    return tuple(n * x for x in a)


def cumulative(a: Sequence[int]) -> IntSeq:
    """The first ``len(a) - 1`` prefix sums ``(a1, a1+a2, ..., a1+...+a_{N-1})``."""
    out = []
    total = 0
    for x in a[:-1]:
        total += x
        out.append(total)
    return tuple(out)


def seq_norm(a: Sequence[int]) -> int:
    """``sum_j (N + 1 - j) * a_j`` with ``N`` the stored length."""
    N = len(a)
    return sum((N - j) * x for j, x in enumerate(a))


def dominance_leq(a: Sequence[int], b: Sequence[int]) -> bool:
    """True iff ``a`` is dominated by ``b`` (every prefix sum of a <= that of b)."""
    if sum(a) != sum(b):
        raise ValueError(f"incomparable weights: |{tuple(a)}| != |{tuple(b)}|")
    L = max(len(a), len(b))
    sa = sb = 0
    for x, y in zip(pad(a, L), pad(b, L)):
        sa += x
        sb += y
        if sa > sb:
            return False
    return True


def permutation_sign(perm: Sequence[int]) -> int:
    """Sign of a permutation given in one-line notation (any distinct values)."""
    seen = [False] * len(perm)
    index = {v: i for i, v in enumerate(sorted(perm))}
    sign = 1
    for start in range(len(perm)):
        if seen[start]:
            continue
        cycle = 0
        j = start
        while not seen[j]:
            seen[j] = True
            j = index[perm[j]]
            cycle += 1
        if cycle % 2 == 0:
            sign = -sign
    return sign


def jt_offsets(N: int) -> Iterator[SignedOffset]:
    """Every ``(omega(sigma), sign(sigma))`` for sigma in S_N, identity first."""
    if N < 1:
        raise ValueError("N must be positive")
    for perm in permutations(range(1, N + 1)):
        yield SignedOffset(tuple(p - j for j, p in enumerate(perm, start=1)),
                           permutation_sign(perm))


def feasible_offsets(base: Sequence[int]) -> Iterator[SignedOffset]:
    """Signed offsets for which ``base + omega(sigma)`` stays non-negative.

    Permutations are built position by position and a branch is abandoned as
    soon as an entry would go negative, so the skipped ones are never touched.
    Output order agrees with :func:`jt_offsets` restricted to the survivors.
    """
    N = len(base)
    used = [False] * (N + 1)
    offset = [0] * N

    def rec(j: int, inversions: int) -> Iterator[SignedOffset]:
        if j == N:
            yield SignedOffset(tuple(offset), -1 if inversions % 2 else 1)
            return
        for v in range(1, N + 1):
            if used[v]:
                continue
            if base[j] + v - (j + 1) < 0:
                continue
            # inversions contributed by v against values still unused that are smaller
            smaller = sum(1 for u in range(1, v) if not used[u])
            used[v] = True
            offset[j] = v - (j + 1)
            yield from rec(j + 1, inversions + smaller)
            used[v] = False

    if N == 0:
        yield SignedOffset((), 1)
        return
    yield from rec(0, 0)


def partitions_of(n: int, max_len: int | None = None, max_part: int | None = None) -> list[Partition]:
    """All partitions of ``n`` with at most ``max_len`` parts, reverse-lexicographic."""
    if n < 0:
        return []
    if max_len is None:
        max_len = n
    if max_part is None:
        max_part = n
    out: list[Partition] = []

    def rec(rest: int, cap: int, prefix: list[int]) -> None:
        if rest == 0:
            out.append(tuple(prefix))
            return
        if len(prefix) == max_len:
            return
        for p in range(min(rest, cap), 0, -1):
            prefix.append(p)
            rec(rest - p, p, prefix)
            prefix.pop()

    rec(n, max_part, [])
    return out


def compositions(n: int, k: int, max_part: int | None = None) -> Iterator[IntSeq]:
    """Weak compositions of ``n`` into exactly ``k`` parts, lexicographic order."""
    if k == 0:
        if n == 0:
            yield ()
        return
    top = n if max_part is None else min(n, max_part)
    for first in range(top + 1):
        for rest in compositions(n - first, k - 1, max_part):
            yield (first,) + rest


def parse_seq(text: str) -> IntSeq:
    """Parse ``"4,2,1"``; the empty string is the empty sequence."""
    text = text.strip()
    if not text:
        return ()
    out = []
    for token in text.split(","):
        token = token.strip()
        try:
            out.append(int(token))
        except ValueError:
            raise ValueError(f"bad integer token {token!r}") from None
    return tuple(out)


def parse_partition(text: str) -> Partition:
    parts = parse_seq(text)
    for i, p in enumerate(parts):
        if p < 0:
            raise ValueError(f"negative part {p!r} in {text!r}")
        if i and p > parts[i - 1]:
            raise ValueError(f"part {p!r} exceeds the previous part in {text!r}")
    return parts


def format_seq(seq: Sequence[int]) -> str:
    return ",".join(str(x) for x in seq)
