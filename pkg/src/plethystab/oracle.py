"""Brute-force symmetric-polynomial oracle.

Everything here works on explicit monomial expansions in ``N`` variables and
shares no code with the lattice-point counter, so the two can check each other.
"""
from __future__ import annotations

from collections import defaultdict
from functools import lru_cache
from itertools import permutations
from typing import Iterator, Mapping, Sequence

from .combinatorics import Partition, as_partition, pad, trim
from .tableaux import enumerate_ssyt, weight

Exponent = tuple[int, ...]
SchurExpansion = dict[Partition, int]


class MonomialPoly:
    """Sparse polynomial: exponent tuple of length ``nvars`` -> integer coefficient."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[Exponent, int] | None = None):
        self.nvars = nvars
        self.terms: dict[Exponent, int] = {}
        if terms:
            for e, c in terms.items():
                if len(e) != nvars:
                    raise ValueError(f"exponent {e} has length {len(e)}, expected {nvars}")
                if c:
                    self.terms[tuple(e)] = c

    @classmethod
    def one(cls, nvars: int) -> "MonomialPoly":
        return cls(nvars, {(0,) * nvars: 1})

    @classmethod
    def monomial(cls, exp: Sequence[int], coef: int = 1) -> "MonomialPoly":
        return cls(len(exp), {tuple(exp): coef})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MonomialPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __repr__(self) -> str:
        return f"MonomialPoly(nvars={self.nvars}, terms={len(self.terms)})"

    def _check(self, other: "MonomialPoly") -> None:
        if self.nvars != other.nvars:
            raise ValueError("polynomials live in different numbers of variables")

    def __add__(self, other: "MonomialPoly") -> "MonomialPoly":
        self._check(other)
        out = MonomialPoly(self.nvars)
        out.terms = dict(self.terms)
        out.iadd(other)
        return out

    def __sub__(self, other: "MonomialPoly") -> "MonomialPoly":
        return self + other.scale(-1)

    def iadd(self, other: "MonomialPoly", factor: int = 1) -> None:
        terms = self.terms
        for e, c in other.terms.items():
            v = terms.get(e, 0) + factor * c
            if v:
                terms[e] = v
            else:
                terms.pop(e, None)

    def scale(self, k: int) -> "MonomialPoly":
        out = MonomialPoly(self.nvars)
        if k:
            out.terms = {e: k * c for e, c in self.terms.items()}
        return out

    def shift(self, exp: Sequence[int]) -> "MonomialPoly":
        """Multiply by the monomial ``x^exp``."""
        out = MonomialPoly(self.nvars)
        out.terms = {tuple(a + b for a, b in zip(e, exp)): c for e, c in self.terms.items()}
        return out

    def __mul__(self, other: "MonomialPoly") -> "MonomialPoly":
        self._check(other)
        acc: dict[Exponent, int] = defaultdict(int)
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                acc[tuple(a + b for a, b in zip(e1, e2))] += c1 * c2
        return MonomialPoly(self.nvars, acc)

    def coeff(self, nu: Sequence[int]) -> int:
        return coeff(self, nu)

    def degrees(self) -> set[int]:
        return {sum(e) for e in self.terms}

    def mass(self) -> int:
        """Sum of coefficients, i.e. the value at x = (1, ..., 1)."""
        return sum(self.terms.values())

    def is_symmetric(self) -> bool:
        terms = self.terms
        for e, c in terms.items():
            for p in set(permutations(e)):
                if terms.get(p, 0) != c:
                    return False
        return True

    def to_json(self) -> dict:
        return {"nvars": self.nvars,
                "terms": [{"exp": list(e), "coef": str(c)}
                          for e, c in sorted(self.terms.items(), reverse=True)]}

    @classmethod
    def from_json(cls, obj: dict) -> "MonomialPoly":
        return cls(obj["nvars"], {tuple(t["exp"]): int(t["coef"]) for t in obj["terms"]})


def coeff(p: MonomialPoly, nu: Sequence[int]) -> int:
    """Coefficient of ``x^nu`` (nu zero-padded); 0 for any negative entry."""
    if any(x < 0 for x in nu):
        return 0
    nu = tuple(nu)
    if len(nu) > p.nvars:
        if any(nu[p.nvars:]):
            return 0
        nu = nu[:p.nvars]
    return p.terms.get(pad(nu, p.nvars), 0)


@lru_cache(maxsize=1024)
def _tableau_monomials(mu: Partition, N: int) -> tuple[Exponent, ...]:
    return tuple(weight(T) for T in enumerate_ssyt(mu, N))


def schur_poly(mu: Sequence[int], N: int) -> MonomialPoly:
    """``s_mu(x_1..x_N)`` as the sum of ``x^weight(T)`` over SSYT."""
    mu = trim(as_partition(mu))
    acc: dict[Exponent, int] = defaultdict(int)
    for w in _tableau_monomials(mu, N):
        acc[w] += 1
    return MonomialPoly(N, acc)


def _strips(kappa: tuple[int, ...], outer: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    """Shapes inside ``outer`` obtained from ``kappa`` by adding a horizontal strip."""
    if not kappa:
        yield ()
        return
    ranges = [range(kappa[0], outer[0] + 1)]
    ranges += [range(kappa[i], min(outer[i], kappa[i - 1]) + 1) for i in range(1, len(kappa))]

    def rec(i: int, acc: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        if i == len(ranges):
            yield acc
            return
        for v in ranges[i]:
            yield from rec(i + 1, acc + (v,))

    yield from rec(0, ())


def _complete_homogeneous(monomials: Sequence[Exponent], N: int, top: int) -> list[MonomialPoly]:
    """``[h_0(y), ..., h_top(y)]`` for the alphabet ``y_T = x^monomials[T]``.

    Uses ``h_d(y_1..y_k) = h_d(y_1..y_{k-1}) + y_k h_{d-1}(y_1..y_k)``, a DP
    over (degree, tableau index) that never lists multisets.
    """
    H = [MonomialPoly.one(N)] + [MonomialPoly(N) for _ in range(top)]
    for y in monomials:
        for d in range(1, top + 1):
            H[d].iadd(H[d - 1].shift(y))
    return H


def h_plethysm_poly(lam: Sequence[int], mu: Sequence[int], N: int) -> MonomialPoly:
    """Monomial expansion of ``h_lam[s_mu]`` in N variables."""
    if any(x < 0 for x in lam):
        raise ValueError("negative part in lambda: use zero-extension semantics at caller")
    mu = trim(as_partition(mu))
    top = max(lam, default=0)
    H = _complete_homogeneous(_tableau_monomials(mu, N), N, top)
    out = MonomialPoly.one(N)
    for part in lam:
        if part:
            out = out * H[part]
    return out


def s_plethysm_poly(lam: Sequence[int], mu: Sequence[int], N: int) -> MonomialPoly:
    """Monomial expansion of ``s_lam[s_mu]`` in N variables.

    Evaluates ``s_lam`` on the alphabet of tableau monomials of ``t(mu, N)``
    with the branching rule: adding one alphabet letter at a time, each
    intermediate shape grows by a horizontal strip weighted by a power of
    that letter.
    """
    lam = trim(as_partition(lam))
    mu = trim(as_partition(mu))
    # shapes inside lam, and for each the smaller shapes one strip below it
    shapes = {(0,) * len(lam)}
    frontier = list(shapes)
    while frontier:
        kappa = frontier.pop()
        for kappa2 in _strips(kappa, lam):
            if kappa2 not in shapes:
                shapes.add(kappa2)
                frontier.append(kappa2)
    below: dict[tuple[int, ...], list[tuple[tuple[int, ...], int]]] = defaultdict(list)
    for kappa in shapes:
        for kappa2 in _strips(kappa, lam):
            if kappa2 != kappa:
                below[kappa2].append((kappa, sum(kappa2) - sum(kappa)))
    order = sorted(shapes, key=sum, reverse=True)
    states = {kappa: MonomialPoly(N) for kappa in shapes}
    states[(0,) * len(lam)] = MonomialPoly.one(N)
    for y in _tableau_monomials(mu, N):
        # largest shapes first, so every source is still the previous state
        for kappa2 in order:
            for kappa, s in below[kappa2]:
                src = states[kappa]
                if src:
                    states[kappa2].iadd(src.shift(tuple(s * a for a in y)))
    return states[lam]


def schur_decompose(p: MonomialPoly) -> SchurExpansion:
    """Write a symmetric polynomial in the Schur basis by leading-term subtraction.

    The lexicographically greatest exponent of a symmetric polynomial is
    weakly decreasing; subtracting that many copies of the matching Schur
    polynomial removes it and only introduces smaller exponents.
    """
    rest = MonomialPoly(p.nvars, p.terms)
    out: SchurExpansion = {}
    while rest.terms:
        lead = max(rest.terms)
        if any(lead[i] < lead[i + 1] for i in range(len(lead) - 1)):
            raise ValueError("not a symmetric polynomial")
        c = rest.terms[lead]
        nu = trim(lead)
        out[nu] = c
        rest.iadd(schur_poly(nu, p.nvars), -c)
        if lead in rest.terms:
            raise ValueError("not a symmetric polynomial")
    return out


def schur_compose(expansion: Mapping[Partition, int], N: int) -> MonomialPoly:
    """``sum_nu c_nu s_nu(x_1..x_N)``; the inverse of :func:`schur_decompose`."""
    out = MonomialPoly(N)
    for nu, c in expansion.items():
        out.iadd(schur_poly(nu, N), c)
    return out


def expansion_to_json(expansion: Mapping[Partition, int]) -> dict[str, str]:
    """Keys ``"(4)"``, ``"(2,2)"`` in reverse-lexicographic order, values decimal strings."""
    return {"(" + ",".join(map(str, nu)) + ")": str(c)
            for nu, c in sorted(expansion.items(), reverse=True)}

