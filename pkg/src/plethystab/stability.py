"""The four stability families, their bounds and empirical plateau detection.

Families, for a base triple (lam, mu, nu) with |lam| * |mu| = |nu|:

    P1: (lam + (n), mu,          nu + (|mu| n))
    Q1: (lam + (n), mu,          nu + n mu)
    R1: (lam,       mu + (n),    nu + (|lam| n))
    R2: (lam,       mu + n pi,   nu + n |lam| pi)
"""
from __future__ import annotations

import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .coefficients import a_coeff, b_coeff
from .combinatorics import (Partition, add, as_partition, length, pad, part, scale,
                            seq_norm, trim)

FAMILIES = ("P1", "Q1", "R1", "R2")
TAIL = 3  # constant terms required beyond a candidate plateau index


@dataclass(frozen=True)
class FamilySpec:
    family: str
    lam: Partition
    mu: Partition
    nu: Partition
    pi: Partition = ()

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        for name in ("lam", "mu", "nu", "pi"):
            object.__setattr__(self, name, as_partition(getattr(self, name)))
        if sum(self.lam) * sum(self.mu) != sum(self.nu):
            raise ValueError("need |lambda| * |mu| == |nu|")
        if self.family == "R2" and not trim(self.pi):
            raise ValueError("R2 needs a nonempty pi")

    def triple(self, n: int) -> tuple[Partition, Partition, Partition]:
        lam, mu, nu, pi = self.lam, self.mu, self.nu, self.pi
        if self.family == "P1":
            return add(lam, (n,)), mu, add(nu, (sum(mu) * n,))
        if self.family == "Q1":
            return add(lam, (n,)), mu, add(nu, scale(n, mu))
        if self.family == "R1":
            return lam, add(mu, (n,)), add(nu, (sum(lam) * n,))
        return lam, add(mu, scale(n, pi)), add(nu, scale(n * sum(lam), pi))


@dataclass(frozen=True)
class Threshold:
    """``n >= value`` (or ``n > value`` when strict) guarantees constancy."""

    value: Fraction
    strict: bool = False

    def first_n(self) -> int:
        """Smallest n >= 0 satisfying the inequality."""
        if self.strict:
            n = math.floor(self.value) + 1
        else:
            n = math.ceil(self.value)
        return max(n, 0)

    def clamped(self) -> "Threshold":
        """Negative thresholds say nothing beyond n >= 0."""
        if self.value < 0:
            return Threshold(Fraction(0), False)
        return self

    def __str__(self) -> str:
        return f"{self.value.numerator}/{self.value.denominator}"


def family_term(spec: FamilySpec, n: int, which: str = "b") -> int:
    if n < 0:
        raise ValueError("n must be non-negative")
    lam, mu, nu = spec.triple(n)
    if which == "b":
        return b_coeff(lam, mu, nu)
    if which == "a":
        return a_coeff(lam, mu, nu)
    raise ValueError(f"which must be 'a' or 'b', not {which!r}")


def _r2_constraints(spec: FamilySpec, c: Sequence[int]) -> tuple[list[Fraction], list[Fraction]]:
    mu, pi = spec.mu, trim(spec.pi)
    interlace = []
    for j in range(1, len(pi) + 1):
        gap = part(pi, j) - part(pi, j + 1)
        if gap > 0:
            interlace.append(Fraction(part(mu, j + 1) - part(mu, j) + c[j - 1], gap))
    nonneg = [Fraction(c[i - 1] - part(mu, i), part(pi, i)) for i in range(1, len(pi) + 1)]
    return interlace, nonneg


def _r2_c(spec: FamilySpec, slack: int) -> list[int]:
    size = sum(spec.lam)
    out, acc = [], 0
    for j in range(1, len(trim(spec.pi)) + 1):
        acc += size * part(spec.mu, j) - part(spec.nu, j)
        out.append(acc + slack)
    return out


def r2_bound_printed(spec: FamilySpec) -> Threshold:
    """The R2 threshold with the interlacing constraints only."""
    interlace, _ = _r2_constraints(spec, _r2_c(spec, 1))
    return Threshold(max(interlace, default=Fraction(0)))


def our_bound(spec: FamilySpec) -> Threshold:
    """Threshold beyond which the b- (and a-) sequence is constant."""
    lam, mu, nu = spec.lam, spec.mu, spec.nu
    size = sum(lam)
    if spec.family == "P1":
        if length(mu) == 1:
            return Threshold(Fraction(sum(nu) - part(nu, 1) - part(lam, 1) - 1), strict=True)
        return Threshold(Fraction(part(mu, 1) * size - part(nu, 1), sum(mu) - part(mu, 1)),
                         strict=True)
    if spec.family == "Q1":
        L = max(len(lam), len(mu), len(nu), 1)
        return Threshold(Fraction(size * seq_norm(pad(mu, L)) - seq_norm(pad(nu, L))
                                  - part(lam, 1)))
    if spec.family == "R1":
        return Threshold(Fraction(part(mu, 1) * (size - 1) + part(mu, 2) - part(nu, 1)))
    interlace, nonneg = _r2_constraints(spec, _r2_c(spec, 1))
    return Threshold(max(interlace + nonneg, default=Fraction(0)))


def literature_bound(spec: FamilySpec) -> Threshold:
    """Previously published thresholds (Carre-Thibon for P1/R1, Brion for Q1/R2)."""
    lam, mu, nu = spec.lam, spec.mu, spec.nu
    size, mu_size = sum(lam), sum(mu)
    nu1 = part(nu, 1)
    nu_bar = sum(nu) - nu1
    if spec.family == "P1":
        if length(mu) > 1:
            return Threshold(Fraction(nu_bar * mu_size, mu_size - part(mu, 1)) - nu1)
        lam_bar = size - part(lam, 1)
        lam2 = part(lam, 2)
        return Threshold(Fraction(max(lam_bar + lam2 - 2 - nu1 // mu_size,
                                      lam2 - 1 + nu_bar - (lam_bar + nu1) // mu_size)))
    if spec.family == "Q1":
        L = max(len(mu), len(nu))
        gap = sum(abs(size * x - y) for x, y in zip(pad(mu, L), pad(nu, L)))
        return Threshold(Fraction(part(lam, 2) - size + gap))
    if spec.family == "R1":
        return Threshold(Fraction(size * part(mu, 1) + part(mu, 2) - nu1 - 1 - nu1 // size))
    interlace, _ = _r2_constraints(spec, _r2_c(spec, 0))
    return Threshold(max(interlace, default=Fraction(0)))


def plateau_index(values: Sequence[int], tail: int = TAIL) -> int | None:
    """Smallest n0 with ``values[n0:]`` constant, if at least ``tail`` terms follow it."""
    if not values:
        return None
    n0 = len(values) - 1
    while n0 > 0 and values[n0 - 1] == values[-1]:
        n0 -= 1
    if len(values) - 1 - n0 < tail:
        return None
    return n0


@dataclass
class StabilityReport:
    spec: FamilySpec
    which: str
    values: list[int]
    empirical_index: int | None
    our_bound: Threshold
    literature_bound: Threshold | None
    limit: int | None
    printed_bound: Threshold | None = None
    notes: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        s = self.spec
        out = {
            "family": s.family, "lambda": list(s.lam), "mu": list(s.mu), "nu": list(s.nu),
            "pi": list(s.pi), "which": self.which,
            "values": [str(v) for v in self.values],
            "empirical_index": (self.empirical_index if self.empirical_index is not None
                                else "not stabilized in window"),
            "our_bound": str(self.our_bound.clamped()),
            "literature_bound": (str(self.literature_bound.clamped())
                                 if self.literature_bound else "n/a"),
            "limit": None if self.limit is None else str(self.limit),
            "our_bound_raw": str(self.our_bound),
            "our_bound_strict": self.our_bound.strict,
        }
        if self.literature_bound:
            out["literature_bound_raw"] = str(self.literature_bound)
        if self.printed_bound is not None:
            out["printed_bound"] = str(self.printed_bound)
        if self.notes:
            out["notes"] = list(self.notes)
        return out


def _term(args: tuple[FamilySpec, int, str]) -> int:
    return family_term(*args)


def compute_terms(spec: FamilySpec, ns: Sequence[int], which: str = "b",
                  threads: int | None = None) -> list[int]:
    """``family_term`` for each n, on a process pool when ``threads > 1``."""
    if threads is None:
        threads = int(os.environ.get("PLETHYSTAB_THREADS", "1") or 1)
    jobs = [(spec, n, which) for n in ns]
    if threads <= 1 or len(jobs) <= 1:
        return [_term(j) for j in jobs]
    with ProcessPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(_term, jobs))


def run_report(spec: FamilySpec, n_max: int, which: str = "b",
               threads: int | None = None) -> StabilityReport:
    bound = our_bound(spec)
    need = max(math.ceil(bound.value), 0) + TAIL
    if n_max < need:
        raise ValueError(f"increase n_max: need at least {need} "
                         f"to certify a plateau past the bound")
    values = compute_terms(spec, range(n_max + 1), which, threads)
    idx = plateau_index(values)
    printed = None
    notes = []
    if spec.family == "R2":
        printed = r2_bound_printed(spec)
        if printed.first_n() != bound.first_n():
            notes.append("non-negativity constraint raises the R2 bound above the interlacing one")
    if spec.family == "Q1":
        L = max(len(spec.lam), len(spec.mu), len(spec.nu), 1)
        notes.append(f"norms taken at common fake length {L}")
    return StabilityReport(spec, which, values, idx, bound, literature_bound(spec),
                           values[-1] if idx is not None else None, printed, notes)
