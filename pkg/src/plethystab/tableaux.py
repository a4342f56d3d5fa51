"""Semistandard Young tableaux, their weights and Gelfand-Tsetlin patterns."""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from .combinatorics import Partition, as_partition, pad, trim

GTPattern = tuple[tuple[int, ...], ...]
"""Rows of a Gelfand-Tsetlin pattern, top row (the shape) first."""


@dataclass(frozen=True)
class Tableau:
    shape: Partition
    rows: tuple[tuple[int, ...], ...]
    alphabet: int

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], alphabet: int,
                  shape: Sequence[int] | None = None) -> "Tableau":
        rows = tuple(tuple(r) for r in rows)
        if shape is None:
            shape = tuple(len(r) for r in rows)
        T = cls(as_partition(shape), rows, alphabet)
        T.check()
        return T

    def check(self) -> None:
        if len(self.rows) != len(self.shape):
            raise ValueError("row count does not match shape")
        for i, (row, size) in enumerate(zip(self.rows, self.shape)):
            if len(row) != size:
                raise ValueError(f"row {i + 1} has {len(row)} entries, shape wants {size}")
            for c, x in enumerate(row):
                if not 1 <= x <= self.alphabet:
                    raise ValueError(f"entry {x} outside 1..{self.alphabet}")
                if c and row[c - 1] > x:
                    raise ValueError(f"row {i + 1} decreases at column {c + 1}")
                if i and self.rows[i - 1][c] >= x:
                    raise ValueError(f"column {c + 1} not strictly increasing at row {i + 1}")

    def word(self) -> tuple[int, ...]:
        return tuple(x for row in self.rows for x in row)

    def to_json(self) -> dict:
        return {"shape": list(self.shape), "rows": [list(r) for r in self.rows]}

    @classmethod
    def from_json(cls, obj: dict, alphabet: int | None = None) -> "Tableau":
        rows = obj["rows"]
        if alphabet is None:
            alphabet = max((x for r in rows for x in r), default=1)
        return cls.from_rows(rows, alphabet, obj["shape"])

    def __str__(self) -> str:
        return "\n".join(" ".join(map(str, r)) for r in self.rows if r)


def enumerate_ssyt(shape: Sequence[int], N: int) -> list[Tableau]:
    """All SSYT of ``shape`` with entries in 1..N, lexicographic in the reading word.

    Cells are filled in reading order with the smallest admissible value
    first, which yields the lexicographic order directly.
    """
    shape = as_partition(shape)
    if len(trim(shape)) > N:
        return []
    cells = [(i, c) for i, size in enumerate(shape) for c in range(size)]
    grid = [[0] * size for size in shape]
    out: list[Tableau] = []

    def rec(k: int) -> None:
        if k == len(cells):
            out.append(Tableau(shape, tuple(tuple(r) for r in grid), N))
            return
        i, c = cells[k]
        lo = 1
        if c:
            lo = grid[i][c - 1]
        if i:
            lo = max(lo, grid[i - 1][c] + 1)
        # room for the rows below in this column
        below = sum(1 for r in range(i + 1, len(shape)) if shape[r] > c)
        for x in range(lo, N - below + 1):
            grid[i][c] = x
            rec(k + 1)
        grid[i][c] = 0

    rec(0)
    return out


def weight(T: Tableau) -> tuple[int, ...]:
    w = [0] * T.alphabet
    for row in T.rows:
        for x in row:
            w[x - 1] += 1
    return tuple(w)


@dataclass(frozen=True)
class WeightMatrix:
    rows: tuple[tuple[int, ...], ...]
    shape: Partition
    alphabet: int


def weight_matrix(shape: Sequence[int], N: int) -> WeightMatrix:
    shape = as_partition(shape)
    return WeightMatrix(tuple(weight(T) for T in enumerate_ssyt(shape, N)), shape, N)


def superstandard(shape: Sequence[int], N: int) -> Tableau:
    """The tableau whose i-th row holds only i's."""
    shape = as_partition(shape)
    return Tableau.from_rows([[i + 1] * p for i, p in enumerate(shape)], N, shape)


def _horizontal_strips(kappa: tuple[int, ...], outer: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    """Shapes ``kappa2`` inside ``outer`` with ``kappa2 / kappa`` a horizontal strip."""
    L = len(outer)
    new = list(kappa)

    def rec(i: int) -> Iterator[tuple[int, ...]]:
        if i == L:
            yield tuple(new)
            return
        hi = outer[i] if i == 0 else min(outer[i], kappa[i - 1])
        for v in range(kappa[i], hi + 1):
            new[i] = v
            yield from rec(i + 1)
        new[i] = kappa[i]

    yield from rec(0)


@lru_cache(maxsize=4096)
def _weight_multiplicities(shape: Partition, N: int, cap: tuple[int, ...] | None) -> tuple:
    L = len(shape)
    total = sum(shape)
    states: dict[tuple, int] = {((0,) * L, ()): 1}
    placed = {(0,) * L: 0}
    for j in range(N):
        remaining_cap = None
        if cap is not None:
            remaining_cap = sum(cap[j + 1:])
        new: dict[tuple, int] = defaultdict(int)
        for (kappa, w), c in states.items():
            size = sum(kappa)
            for kappa2 in _horizontal_strips(kappa, shape):
                # rows below letter j + 1 must stay empty
                if any(kappa2[r] for r in range(j + 1, L)):
                    continue
                s = sum(kappa2) - size
                if cap is not None:
                    if s > cap[j]:
                        continue
                    if total - size - s > remaining_cap:
                        continue
                new[(kappa2, w + (s,))] += c
        states = new
    return tuple(sorted(((w, c) for (kappa, w), c in states.items() if kappa == shape),
                        reverse=True))


def weight_multiplicities(shape: Sequence[int], N: int,
                          cap: Sequence[int] | None = None) -> dict[tuple[int, ...], int]:
    """Map each weight of ``t(shape, N)`` to the number of tableaux carrying it.

    With ``cap`` only weights bounded entrywise by ``cap`` (zero-padded to N)
    are produced.  Built letter by letter from horizontal strips, so no
    tableau is materialised.  Keys come out in decreasing lexicographic order.
    """
    shape = trim(as_partition(shape))
    if len(shape) > N:
        return {}
    if cap is not None:
        # letters beyond N never occur, so their caps are irrelevant
        cap = pad(tuple(cap)[:N], N)
        if any(c < 0 for c in cap):
            return {}
    return dict(_weight_multiplicities(shape, N, cap))


# -- Gelfand-Tsetlin patterns ------------------------------------------------

def to_gt(T: Tableau) -> GTPattern:
    """``x[i][j]`` = number of entries <= i in row j; top row is i = alphabet."""
    n = T.alphabet
    shape = trim(T.shape)
    if len(shape) > n:
        raise ValueError("shape longer than the alphabet")
    rows = []
    for i in range(n, 0, -1):
        rows.append(tuple(sum(1 for x in T.rows[j] if x <= i) if j < len(shape) else 0
                          for j in range(i)))
    return tuple(rows)


def is_gt_pattern(G: Sequence[Sequence[int]]) -> bool:
    n = len(G)
    for k, row in enumerate(G):
        if len(row) != n - k:
            return False
        if any(x < 0 for x in row):
            return False
    # G[k] is level i = n - k; interlacing x_{i+1,j+1} <= x_{i,j} <= x_{i+1,j}
    for k in range(1, n):
        upper, lower = G[k - 1], G[k]
        for j, x in enumerate(lower):
            if not upper[j + 1] <= x <= upper[j]:
                return False
    return True


def from_gt(G: Sequence[Sequence[int]], shape_length: int | None = None) -> Tableau:
    """Inverse of :func:`to_gt`.

    ``shape_length`` keeps that many stored rows (trailing zero parts
    included); by default the shape is trimmed.
    """
    if not is_gt_pattern(G):
        raise ValueError("not a GT pattern")
    n = len(G)
    if n == 0:
        return Tableau((), (), 0)
    level = {n - k: row for k, row in enumerate(G)}
    top = tuple(G[0])
    shape = trim(top)
    if shape_length is not None:
        shape = pad(shape, shape_length)
    rows = []
    for j in range(len(shape)):
        row = []
        prev = 0
        for i in range(j + 1, n + 1):
            cur = level[i][j]
            row.extend([i] * (cur - prev))
            prev = cur
        rows.append(tuple(row))
    return Tableau(shape, tuple(rows), n)


def shift_gt(G: GTPattern, pi: Sequence[int], direction: int = 1) -> GTPattern:
    """Add ``direction * pi_j`` to every entry of column j."""
    pi = pad(trim(pi), max(len(G), len(trim(pi))))
    return tuple(tuple(x + direction * pi[j] for j, x in enumerate(row)) for row in G)


# -- stability embeddings ----------------------------------------------------

def tau_r2(T: Tableau, pi: Sequence[int]) -> Tableau:
    """Prepend ``pi_i`` copies of ``i`` to row ``i``, pushing the old rows right."""
    pi = trim(as_partition(pi))
    if len(pi) > len(T.shape):
        raise ValueError(f"pi has {len(pi)} rows but the tableau stores only {len(T.shape)}")
    if len(pi) > T.alphabet:
        raise ValueError("pi longer than the alphabet")
    rows = tuple((i + 1,) * part + row if i < len(pi) else row
                 for i, (row, part) in enumerate(zip(T.rows, pad(pi, len(T.rows)))))
    shape = tuple(len(r) for r in rows)
    out = Tableau(shape, rows, T.alphabet)
    out.check()
    return out


def tau_r1(T: Tableau) -> Tableau:
    """Add a box labelled 1 at the start of the first row."""
    return tau_r2(T, (1,))


def tau_preimage(T: Tableau, pi: Sequence[int]) -> Tableau | None:
    """The tableau mapped to ``T`` by :func:`tau_r2`, or None for a new tableau."""
    G = shift_gt(to_gt(T), pi, -1)
    if not is_gt_pattern(G):
        return None
    return from_gt(G, shape_length=len(T.shape))
