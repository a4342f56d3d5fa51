"""Property sweeps used by the ``sweep`` command and the acceptance tests.

Each check returns a :class:`CheckResult`; none of them raise on a failed
property, so a caller can report every line before deciding.
"""
from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator

from .coefficients import NegativeCoefficientError, a_coeff, schur_expand
from .combinatorics import (add, compositions, dominance_leq, jt_offsets, pad, partitions_of,
                            seq_norm, trim)
from .lattice import count_points
from .oracle import h_plethysm_poly, s_plethysm_poly, schur_decompose
from .stability import FAMILIES, FamilySpec, compute_terms, our_bound
from .tableaux import (Tableau, enumerate_ssyt, from_gt, shift_gt, superstandard, tau_preimage,
                       tau_r1, tau_r2, to_gt, weight, weight_matrix)

R2_PIS = ((1,), (2,), (1, 1), (2, 1))
NU_PARTS = 3  # stability sweeps use nu with at most this many parts


@dataclass
class CheckResult:
    name: str
    passed: bool
    instances: int = 0
    seconds: float = 0.0
    failures: list = field(default_factory=list)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = f"; first failure: {self.failures[0]}" if self.failures else ""
        return f"[{status}] {self.name}: {self.instances} instances in {self.seconds:.1f}s{extra}"


def _run(name: str, body: Callable[[list], int]) -> CheckResult:
    failures: list = []
    start = time.perf_counter()
    try:
        count = body(failures)
    except NegativeCoefficientError as exc:
        failures.append(str(exc))
        count = 0
    return CheckResult(name, not failures, count, time.perf_counter() - start, failures)


# -- worked examples -----------------------------------------------------------

def check_worked_example() -> CheckResult:
    def body(failures: list) -> int:
        words = [T.word() for T in enumerate_ssyt((2,), 3)]
        if words != [(1, 1), (1, 2), (1, 3), (2, 2), (2, 3), (3, 3)]:
            failures.append(words)
        printed = ((2, 1, 1, 0, 0, 0), (0, 1, 0, 2, 1, 0), (0, 0, 1, 0, 1, 2))
        expected = tuple(zip(*printed))
        if weight_matrix((2,), 3).rows != expected:
            failures.append(weight_matrix((2,), 3).rows)
        return 2
    return _run("t((2),3) and its weight matrix", body)


GT_EXAMPLE_ROWS = [[1, 2, 2, 3], [2, 3, 3, 4], [3, 5], [5, 6]]
GT_EXAMPLE_PATTERN = ((4, 4, 2, 2, 0, 0), (4, 4, 2, 1, 0), (4, 4, 1, 0), (4, 3, 1), (3, 1), (1,))


def check_gt_example() -> CheckResult:
    def body(failures: list) -> int:
        T = Tableau.from_rows(GT_EXAMPLE_ROWS, 6)
        G = to_gt(T)
        if G != GT_EXAMPLE_PATTERN:
            failures.append(G)
        if from_gt(G) != T:
            failures.append("from_gt does not invert")
        return 1
    return _run("GT pattern of the (4,4,2,2) tableau", body)


# -- oracle equivalences ---------------------------------------------------------

def b_oracle_instances(max_product: int = 8, max_part: int = 4,
                       max_N: int = 4) -> Iterator[tuple[tuple, tuple, int]]:
    """(lam, mu, N) triples; every nu of matching weight is checked for each."""
    for N in range(1, max_N + 1):
        for size in range(0, max_product + 1):
            for lam in compositions(size, N, max_part):
                mu_top = max_product // size if size else max_product
                for mu_size in range(1, mu_top + 1):
                    for mu in partitions_of(mu_size, max_part=max_part):
                        yield lam, mu, N


def check_b_oracle(max_product: int = 8, max_part: int = 4, max_N: int = 4) -> CheckResult:
    def body(failures: list) -> int:
        n = 0
        for lam, mu, N in b_oracle_instances(max_product, max_part, max_N):
            poly = h_plethysm_poly(lam, mu, N)
            for nu in compositions(sum(lam) * sum(mu), N):
                n += 1
                got = count_points(lam, mu, nu, N)
                want = poly.coeff(nu)
                if got != want:
                    failures.append((lam, mu, nu, N, got, want))
        return n
    return _run(f"b = oracle coefficient (|lam||mu| <= {max_product}, N <= {max_N})", body)


def a_oracle_instances(max_product: int = 8) -> Iterator[tuple[tuple, tuple]]:
    for lam_size in range(1, max_product + 1):
        for mu_size in range(1, max_product // lam_size + 1):
            for lam in partitions_of(lam_size):
                for mu in partitions_of(mu_size):
                    yield lam, mu


def check_a_oracle(max_product: int = 8) -> CheckResult:
    def body(failures: list) -> int:
        n = 0
        for lam, mu in a_oracle_instances(max_product):
            N = sum(lam) * sum(mu)
            n += 1
            got = schur_expand(lam, mu)
            want = schur_decompose(s_plethysm_poly(lam, mu, N))
            if got != want:
                failures.append((lam, mu, got, want))
        classical = {((2,), (2,)): {(4,): 1, (2, 2): 1},
                     ((1, 1), (2,)): {(3, 1): 1},
                     ((2,), (1, 1)): {(2, 2): 1, (1, 1, 1, 1): 1}}
        for (lam, mu), want in classical.items():
            n += 1
            if schur_decompose(s_plethysm_poly(lam, mu, 4)) != want:
                failures.append(("oracle", lam, mu))
            if schur_expand(lam, mu) != want:
                failures.append(("expand", lam, mu))
        return n
    return _run(f"schur_expand = oracle decomposition (|lam||mu| <= {max_product})", body)


def check_nonnegativity(max_product: int = 8, identity_weight: int = 6) -> CheckResult:
    """Every a on the oracle sweep is >= 0, and s_lam[s_1] = s_lam."""
    def body(failures: list) -> int:
        n = 0
        for lam, mu in a_oracle_instances(max_product):
            for nu in partitions_of(sum(lam) * sum(mu)):
                n += 1
                if a_coeff(lam, mu, nu) < 0:
                    failures.append((lam, mu, nu))
        for size in range(0, identity_weight + 1):
            for lam in partitions_of(size):
                for nu in partitions_of(size):
                    n += 1
                    if a_coeff(lam, (1,), nu) != int(lam == nu):
                        failures.append(("identity", lam, nu))
        return n
    return _run("a >= 0 and a(lam,(1),nu) = [nu = lam]", body)


# -- stability -------------------------------------------------------------------

def family_specs(max_weight: int = 3, families: Iterable[str] = FAMILIES,
                 max_nu_parts: int | None = None) -> Iterator[FamilySpec]:
    for family in families:
        for lam_size in range(1, max_weight + 1):
            for lam in partitions_of(lam_size):
                for mu_size in range(1, max_weight + 1):
                    for mu in partitions_of(mu_size):
                        for nu in partitions_of(lam_size * mu_size, max_nu_parts):
                            for pi in (R2_PIS if family == "R2" else ((),)):
                                yield FamilySpec(family, lam, mu, nu, pi)


def _sample(specs: Iterable[FamilySpec], sample: int | None, seed: int | None) -> list[FamilySpec]:
    specs = list(specs)
    if sample is not None and sample < len(specs):
        specs = random.Random(seed).sample(specs, sample)
    return specs


def check_stability_plateaus(max_weight: int = 3, n_pad: int = 4, threads: int = 1,
                             sample: int | None = None, seed: int | None = None,
                             max_nu_parts: int | None = NU_PARTS) -> CheckResult:
    """b-sequence constant on [t, t + n_pad] with t the first n past our bound."""
    def body(failures: list) -> int:
        n = 0
        for spec in _sample(family_specs(max_weight, FAMILIES, max_nu_parts), sample, seed):
            start = our_bound(spec).first_n()
            values = compute_terms(spec, range(start, start + n_pad + 1), "b", threads)
            n += 1
            if len(set(values)) != 1:
                failures.append((spec, start, values))
        return n
    return _run(f"b-sequences constant past our bound (|lam|,|mu| <= {max_weight})", body)


def check_p1_vanishing(max_weight: int = 3, n_pad: int = 4, threads: int = 1,
                       max_nu_parts: int | None = NU_PARTS) -> CheckResult:
    def body(failures: list) -> int:
        n = 0
        for spec in family_specs(max_weight, ("P1",), max_nu_parts):
            if len(trim(spec.mu)) < 2:
                continue
            start = our_bound(spec).first_n()
            values = compute_terms(spec, range(start, start + n_pad + 1), "b", threads)
            n += 1
            if any(values):
                failures.append((spec, start, values))
        return n
    return _run("P1 with l(mu) > 1 vanishes past (mu_1|lam| - nu_1)/|mu bar|", body)


def check_q1_monotone(max_weight: int = 3, n_pad: int = 4, threads: int = 1,
                      max_nu_parts: int | None = NU_PARTS) -> CheckResult:
    """a-coefficient Q1 sequences are non-decreasing on [0, t + n_pad]."""
    def body(failures: list) -> int:
        n = 0
        for spec in family_specs(max_weight, ("Q1",), max_nu_parts):
            top = our_bound(spec).first_n() + n_pad
            values = compute_terms(spec, range(top + 1), "a", threads)
            n += 1
            if any(x > y for x, y in zip(values, values[1:])):
                failures.append((spec, values))
        return n
    return _run("Q1 a-sequences non-decreasing", body)


# -- structural invariants ---------------------------------------------------------

def _shapes(max_size: int, max_N: int) -> Iterator[tuple[int, ...]]:
    for size in range(0, max_size + 1):
        for shape in partitions_of(size, max_N):
            yield shape


def check_structural(max_offset_N: int = 6, max_size: int = 6, max_N: int = 4) -> CheckResult:
    def body(failures: list) -> int:
        n = 0
        # signed offsets
        for N in range(1, max_offset_N + 1):
            offs = list(jt_offsets(N))
            n += len(offs)
            for off in offs:
                if sorted(o + j for j, o in enumerate(off.offset, start=1)) != list(range(1, N + 1)):
                    failures.append(("offset perm", off))
                if sum(off.offset) != 0:
                    failures.append(("offset weight", off))
            if min(off.offset[0] for off in offs) != 0:
                failures.append(("min omega_1", N))
            for j in range(1, N + 1):
                if min(sum(off.offset[:j]) for off in offs) != 0:
                    failures.append(("min prefix", N, j))
            if min(seq_norm(off.offset) for off in offs) != 0:
                failures.append(("min norm", N))
        for N in range(1, max_N + 1):
            for shape in _shapes(max_size, max_N):
                tabs = enumerate_ssyt(shape, N)
                if not tabs:
                    continue
                top = superstandard(shape, N)
                mu = pad(shape, N)
                for T in tabs:
                    n += 1
                    w = weight(T)
                    # the superstandard weight mu strictly dominates every other weight
                    if T != top:
                        srt = tuple(sorted(w, reverse=True))
                        if w == mu or not dominance_leq(w, mu) or not dominance_leq(srt, mu):
                            failures.append(("dominance", shape, N, T.rows))
                    # GT roundtrip
                    if from_gt(to_gt(T), shape_length=len(T.shape)) != T:
                        failures.append(("gt roundtrip", T.rows))
                # tau maps: injective, weight shift, image = tableaux with pre-image
                for pi in ((1,), (1, 1), (2, 1)):
                    if len(trim(pi)) > len(shape) or len(trim(pi)) > N:
                        continue
                    images = [tau_r2(T, pi) for T in tabs]
                    if len(set(images)) != len(images):
                        failures.append(("tau injective", shape, pi, N))
                    for T, U in zip(tabs, images):
                        if weight(U) != tuple(add(weight(T), pad(pi, N))):
                            failures.append(("tau weight", T.rows, pi))
                        if to_gt(U) != shift_gt(to_gt(T), pi):
                            failures.append(("tau gt", T.rows, pi))
                    big = tuple(add(shape, pi))
                    with_pre = {U for U in enumerate_ssyt(big, N)
                                if tau_preimage(U, pi) is not None}
                    if with_pre != set(images):
                        failures.append(("tau image", shape, pi, N))
                if tabs and shape:
                    for T in tabs:
                        if tau_r1(T) != tau_r2(T, (1,)):
                            failures.append(("tau_r1", T.rows))
        return n
    return _run("structural invariants (offsets, dominance, GT, tau maps)", body)


def run_all(max_weight: int = 3, n_pad: int = 4, max_product: int = 8, threads: int = 1,
            sample: int | None = None, seed: int | None = None) -> list[CheckResult]:
    return [
        check_worked_example(),
        check_gt_example(),
        check_b_oracle(max_product),
        check_a_oracle(max_product),
        check_nonnegativity(max_product),
        check_stability_plateaus(max_weight, n_pad, threads, sample, seed),
        check_p1_vanishing(max_weight, n_pad, threads),
        check_q1_monotone(max_weight, n_pad, threads),
        check_structural(),
    ]
