"""h-plethysm coefficients b and plethysm coefficients a.

``a`` is recovered from ``b`` through the signed double sum obtained by
expanding both Schur functions with Jacobi-Trudi::

    a(lam, mu, nu) = sum_{sigma, tau} sign(sigma) sign(tau) b(lam + w(sigma), mu, nu + w(tau))
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import factorial
from typing import Sequence

from .combinatorics import Partition, as_partition, feasible_offsets, partitions_of, trim
from .lattice import count_points


class NegativeCoefficientError(AssertionError):
    """A signed sum that must be a multiplicity came out negative."""


@lru_cache(maxsize=1 << 18)
def _b_sorted(lam: tuple[int, ...], mu: Partition, nu: tuple[int, ...]) -> int:
    N = max(len(lam), len(nu), 1)
    return count_points(lam, mu, nu, N)


def b_coeff(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int]) -> int:
    """``<h_lam[s_mu], h_nu>`` for arbitrary integer sequences ``lam`` and ``nu``.

    Zero when a part of ``lam`` or ``nu`` is negative or when the weights do
    not match.  Both sequences may be reordered freely, so the cache key uses
    their sorted nonzero parts.
    """
    if any(x < 0 for x in lam) or any(x < 0 for x in nu):
        return 0
    mu = trim(as_partition(mu))
    if sum(lam) * sum(mu) != sum(nu):
        return 0
    key_lam = tuple(sorted((x for x in lam if x), reverse=True))
    key_nu = tuple(sorted((x for x in nu if x), reverse=True))
    return _b_sorted(key_lam, mu, key_nu)


@dataclass(frozen=True)
class ACoefficient:
    value: int
    terms_evaluated: int
    terms_pruned: int


def a_coeff_detailed(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int]) -> ACoefficient:
    """Plethysm coefficient with term statistics.

    Uses the smallest legal sizes ``N = l(lam)`` and ``N' = l(nu)``; the
    double sum then has ``N! * N'!`` terms.  Offsets that drive a part
    negative give ``h_r = 0`` and are pruned before any counting.
    """
    lam = trim(as_partition(lam))
    mu = trim(as_partition(mu))
    nu = trim(as_partition(nu))
    total_terms = factorial(len(lam)) * factorial(len(nu))
    if sum(lam) * sum(mu) != sum(nu):
        return ACoefficient(0, 0, total_terms)
    outer = [(tuple(x + o for x, o in zip(lam, off.offset)), off.sign)
             for off in feasible_offsets(lam)]
    inner = [(tuple(x + o for x, o in zip(nu, off.offset)), off.sign)
             for off in feasible_offsets(nu)]
    value = 0
    for lam2, s1 in outer:
        for nu2, s2 in inner:
            b = b_coeff(lam2, mu, nu2)
            if b:
                value += s1 * s2 * b
    evaluated = len(outer) * len(inner)
    if value < 0:
        raise NegativeCoefficientError(
            f"negative plethysm coefficient {value} for lambda={lam}, mu={mu}, nu={nu}")
    return ACoefficient(value, evaluated, total_terms - evaluated)


def a_coeff(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int]) -> int:
    """Multiplicity of ``s_nu`` in ``s_lam[s_mu]``."""
    return a_coeff_detailed(lam, mu, nu).value


def schur_expand(lam: Sequence[int], mu: Sequence[int], nvars: int | None = None) -> dict[Partition, int]:
    """Schur expansion of ``s_lam[s_mu]``, restricted to ``l(nu) <= nvars``."""
    lam = trim(as_partition(lam))
    mu = trim(as_partition(mu))
    n = sum(lam) * sum(mu)
    N = n if nvars is None else min(n, nvars)
    out: dict[Partition, int] = {}
    for nu in partitions_of(n, N):
        c = a_coeff(lam, mu, nu)
        if c:
            out[nu] = c
    return out


def a_to_json(lam, mu, nu, result: ACoefficient) -> dict:
    return {"lambda": list(lam), "mu": list(mu), "nu": list(nu), "a": str(result.value),
            "terms_evaluated": result.terms_evaluated, "terms_pruned": result.terms_pruned}


def clear_caches() -> None:
    _b_sorted.cache_clear()
