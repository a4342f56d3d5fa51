"""Integer points of Q(lambda, mu, nu, N).

A point is an N x k matrix ``m[i][T]`` of non-negative integers, one column
per tableau of ``t(mu, N)``, whose row i sums to ``lambda_i`` and for which
``sum_{i,T} m[i][T] * weight(T) == nu``.  The number of points is the
coefficient of ``x^nu`` in ``h_lambda[s_mu]``.
"""
from __future__ import annotations

from typing import Sequence

from ._kernels import count_matrix_points
from .combinatorics import as_partition, pad, part, trim
from .tableaux import enumerate_ssyt, weight, weight_multiplicities

CountingMatrix = tuple[tuple[int, ...], ...]

DEFAULT_CAP = 10**6


def _check_sizes(lam: Sequence[int], nu: Sequence[int], N: int) -> None:
    if N < 1:
        raise ValueError("N must be positive")
    if len(trim(lam)) > N or len(trim(nu)) > N:
        raise ValueError(f"N={N} is smaller than the length of lambda or nu")


def vanishing_precheck(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int], N: int) -> bool:
    """False only when the count is provably zero; True means inconclusive.

    Letters 1..j of a tableau of shape mu sit in its first j rows, so every
    tableau weight is dominated by mu and a sum of ``|lam|`` of them is
    dominated by ``|lam| * mu``.  Since the count is symmetric in nu, the test
    is applied to nu sorted decreasingly; it implies ``nu_j <= |lam| * mu_1``.
    The sharper per-letter cap ``|lam| * mu_{j - (N - l(mu))}`` for the last
    letters does not hold: ``12/2`` has two 2's although ``mu_2 = 1``.
    """
    mu = trim(as_partition(mu))
    if any(x < 0 for x in nu) or any(x < 0 for x in lam):
        return False
    size = sum(lam)
    if size * sum(mu) != sum(nu):
        return False
    if len(trim(nu)) > N:
        return False
    if len(mu) > N:
        return size == 0
    acc_nu = acc_mu = 0
    for j, x in enumerate(sorted(nu, reverse=True), start=1):
        acc_nu += x
        acc_mu += size * part(mu, j)
        if acc_nu > acc_mu:
            return False
    return True


def count_points(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int], N: int) -> int:
    """Exact cardinality of Q(lambda, mu, nu, N)."""
    _check_sizes(lam, nu, N)
    if not vanishing_precheck(lam, mu, nu, N):
        return 0
    nu = pad(trim(nu), N)
    # columns whose weight exceeds nu anywhere can never be used
    mult = weight_multiplicities(mu, N, cap=nu)
    if not mult:
        return int(sum(lam) == 0)
    weights = list(mult)                      # decreasing lex: superstandard first
    rows = sorted((x for x in lam if x), reverse=True)
    return count_matrix_points(rows, weights, [mult[w] for w in weights], nu)


def enumerate_points(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int], N: int,
                     cap: int = DEFAULT_CAP) -> list[CountingMatrix]:
    """All points of Q, rows 1..N, columns in canonical tableau order."""
    _check_sizes(lam, nu, N)
    total = count_points(lam, mu, nu, N)
    if total > cap:
        raise ValueError(f"enumeration too large: {total} points exceed the cap {cap}")
    if total == 0:
        return []
    lam = pad(trim(lam), N)
    target = pad(trim(nu), N)
    weights = [weight(T) for T in enumerate_ssyt(mu, N)]
    k = len(weights)
    matrix = [[0] * k for _ in range(N)]
    out: list[CountingMatrix] = []

    def rec(i: int, c: int, r: int, resid: list[int]) -> None:
        if i == N:
            if not any(resid):
                out.append(tuple(tuple(row) for row in matrix))
            return
        if r == 0:
            rec(i + 1, 0, lam[i + 1] if i + 1 < N else 0, resid)
            return
        if c == k:
            return
        w = weights[c]
        top = r
        for x, y in zip(resid, w):
            if y:
                top = min(top, x // y)
        for m in range(top, -1, -1):
            matrix[i][c] = m
            rec(i, c + 1, r - m, [x - m * y for x, y in zip(resid, w)])
        matrix[i][c] = 0

    rec(0, 0, lam[0], list(target))
    return out


def verify_point(M: CountingMatrix, lam: Sequence[int], mu: Sequence[int],
                 nu: Sequence[int], N: int) -> bool:
    """Check both condition blocks for a candidate matrix."""
    lam = pad(trim(lam), N)
    nu = pad(trim(nu), N)
    weights = [weight(T) for T in enumerate_ssyt(mu, N)]
    if len(M) != N or any(len(row) != len(weights) for row in M):
        return False
    if any(x < 0 for row in M for x in row):
        return False
    if any(sum(row) != lam[i] for i, row in enumerate(M)):
        return False
    for j in range(N):
        if sum(M[i][c] * weights[c][j] for i in range(N) for c in range(len(weights))) != nu[j]:
            return False
    return True


def count_to_json(lam, mu, nu, N: int, count: int) -> dict:
    return {"lambda": list(lam), "mu": list(mu), "nu": list(nu), "N": N, "count": str(count)}
