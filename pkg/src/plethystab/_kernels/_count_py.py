"""Pure-Python lattice-point counter; reference for the compiled kernel."""
from __future__ import annotations

from math import comb
from typing import Sequence


def count_matrix_points(row_sums: Sequence[int], weights: Sequence[Sequence[int]],
                        mults: Sequence[int], target: Sequence[int]) -> int:
    """Count non-negative integer matrices ``m[i][c]`` with

    * ``sum_c m[i][c] == row_sums[i]`` for every row, and
    * ``sum_{i,c} m[i][c] * weights[c] == target``,

    where column ``c`` stands for ``mults[c]`` interchangeable columns that
    share the same weight vector.  Entries of ``row_sums`` must be >= 0.
    """
    rows = [r for r in row_sums if r > 0]
    target = tuple(target)
    L = len(target)
    if any(x < 0 for x in target):
        return 0
    if not rows:
        return int(not any(target))
    k = len(weights)
    if k == 0:
        return 0
    weights = [tuple(w) for w in weights]
    top = max(rows)
    # ways[c][m]: multisets of size m drawn from mults[c] columns
    ways = [[comb(m + K - 1, K - 1) for m in range(top + 1)] for K in mults]
    # suffix maxima of each coordinate over columns c..k-1
    sufmax = [[0] * L for _ in range(k + 1)]
    for c in range(k - 1, -1, -1):
        sufmax[c] = [max(a, b) for a, b in zip(sufmax[c + 1], weights[c])]
    gmax = sufmax[0]
    tail = [0] * (len(rows) + 1)
    for i in range(len(rows) - 1, -1, -1):
        tail[i] = tail[i + 1] + rows[i]
    memo: dict[tuple, int] = {}

    def go(i: int, c: int, r: int, resid: tuple[int, ...]) -> int:
        if r == 0:
            i += 1
            if i == len(rows):
                return int(not any(resid))
            c = 0
            r = rows[i]
        key = (i, c, r, resid)
        hit = memo.get(key)
        if hit is not None:
            return hit
        later = tail[i + 1]
        sm = sufmax[c]
        for j in range(L):
            if resid[j] > r * sm[j] + later * gmax[j]:
                memo[key] = 0
                return 0
        w = weights[c]
        if c == k - 1:
            new = tuple(x - r * y for x, y in zip(resid, w))
            total = 0
            if min(new) >= 0:
                total = ways[c][r] * go(i, c + 1, 0, new)
            memo[key] = total
            return total
        top_m = r
        for x, y in zip(resid, w):
            if y and x // y < top_m:
                top_m = x // y
        total = 0
        wc = ways[c]
        for m in range(top_m, -1, -1):
            new = tuple(x - m * y for x, y in zip(resid, w)) if m else resid
            sub = go(i, c + 1, r - m, new)
            if sub:
                total += wc[m] * sub
        memo[key] = total
        return total

    return go(0, 0, rows[0], target)
