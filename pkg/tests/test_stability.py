import json
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from plethystab.combinatorics import add, jt_offsets, pad
from plethystab.coefficients import b_coeff
from plethystab.harness import family_specs
from plethystab.stability import (FamilySpec, Threshold, compute_terms, family_term,
                                  literature_bound, our_bound, plateau_index, r2_bound_printed,
                                  run_report)
from plethystab.tableaux import weight_multiplicities


def test_family_spec_validation():
    with pytest.raises(ValueError, match="unknown family"):
        FamilySpec("P2", (1,), (1,), (1,))
    with pytest.raises(ValueError):
        FamilySpec("P1", (1,), (1,), (2,))
    with pytest.raises(ValueError, match="pi"):
        FamilySpec("R2", (1,), (1,), (1,))
    with pytest.raises(ValueError):
        FamilySpec("P1", (1, 2), (1,), (3,))


def test_triples():
    assert FamilySpec("P1", (2, 1), (2,), (4, 2)).triple(2) == ((4, 1), (2,), (8, 2))
    assert FamilySpec("Q1", (2, 1), (2, 1), (4, 3, 1, 1)).triple(1) == \
        ((3, 1), (2, 1), (6, 4, 1, 1))
    assert FamilySpec("R1", (2,), (1,), (2,)).triple(3) == ((2,), (4,), (8,))
    assert FamilySpec("R2", (2,), (1,), (2,), (1, 1)).triple(1) == ((2,), (2, 1), (4, 2))


def test_threshold():
    assert Threshold(Fraction(0), strict=True).first_n() == 1
    assert Threshold(Fraction(0)).first_n() == 0
    assert Threshold(Fraction(5, 2)).first_n() == 3
    assert Threshold(Fraction(5, 2), strict=True).first_n() == 3
    assert Threshold(Fraction(-3)).first_n() == 0
    assert str(Threshold(Fraction(-3, 2))) == "-3/2"
    assert str(Threshold(Fraction(-3, 2)).clamped()) == "0/1"


def test_q1_base_case():
    spec = FamilySpec("Q1", (2, 1), (2,), (4, 2))
    assert family_term(spec, 0) == b_coeff((2, 1), (2,), (4, 2))
    with pytest.raises(ValueError):
        family_term(spec, -1)
    with pytest.raises(ValueError):
        family_term(spec, 0, "c")


def test_p1_limit_zero_example():
    spec = FamilySpec("P1", (1,), (1, 1), (1, 1))
    assert our_bound(spec) == Threshold(Fraction(0), strict=True)
    assert [family_term(spec, n) for n in range(6)] == [1, 0, 0, 0, 0, 0]


def test_r1_kostka():
    # h_1[s_mu] = s_mu, so the R1 terms with lambda = (1) are Kostka numbers
    spec = FamilySpec("R1", (1,), (2, 1), (2, 1))
    for n in range(5):
        lam, mu, nu = spec.triple(n)
        assert family_term(spec, n) == weight_multiplicities(mu, 2).get(pad(nu, 2), 0) == 1
    assert our_bound(spec).value == -1


def test_our_bound_examples():
    assert our_bound(FamilySpec("Q1", (1,), (1,), (1,))).value == -1
    assert [family_term(FamilySpec("Q1", (1,), (1,), (1,)), n) for n in range(5)] == [1] * 5
    # l(mu) > 1: (mu_1 |lam| - nu_1) / |mu bar| as an exact rational
    assert our_bound(FamilySpec("P1", (2,), (2, 1), (3, 2, 1))).value == Fraction(1)
    assert our_bound(FamilySpec("P1", (1,), (3, 2), (3, 2))).value == Fraction(0)
    assert our_bound(FamilySpec("P1", (2,), (1, 1), (1, 1, 1, 1))).value == Fraction(1)


def test_literature_bound_examples():
    assert literature_bound(FamilySpec("R1", (2,), (1,), (2,))).value == -2
    # |lam| mu = (6) and nu = (4, 2), so the L1 gap is 2 + 2
    assert literature_bound(FamilySpec("Q1", (2, 1), (2,), (4, 2))).value == 2
    assert literature_bound(FamilySpec("P1", (1,), (2, 1), (2, 1))).value == Fraction(1)


def test_r2_bounds():
    spec = FamilySpec("R2", (2,), (2, 1), (3, 3), (1,))
    printed = r2_bound_printed(spec)
    ours = our_bound(spec)
    assert ours.value >= printed.value
    values = [family_term(spec, n) for n in range(ours.first_n(), ours.first_n() + 5)]
    assert len(set(values)) == 1


def test_r2_with_pi_1_matches_r1():
    for spec in family_specs(2, ("R1",)):
        r2 = FamilySpec("R2", spec.lam, spec.mu, spec.nu, (1,))
        assert [family_term(spec, n) for n in range(4)] == [family_term(r2, n) for n in range(4)]
        assert [family_term(spec, n, "a") for n in range(4)] == \
               [family_term(r2, n, "a") for n in range(4)]


def test_plateau_index():
    assert plateau_index([1, 2, 3, 3, 3, 3]) == 2
    assert plateau_index([1, 2, 3, 3, 3]) is None
    assert plateau_index([5, 5, 5, 5]) == 0
    assert plateau_index([]) is None
    assert plateau_index([1, 0, 0], tail=1) == 1


def test_report():
    spec = FamilySpec("Q1", (1,), (2,), (2,))
    rep = run_report(spec, 5)
    assert rep.values == [1] * 6
    assert rep.empirical_index == 0 and rep.limit == 1
    js = rep.to_json()
    assert list(js)[:11] == ["family", "lambda", "mu", "nu", "pi", "which", "values",
                             "empirical_index", "our_bound", "literature_bound", "limit"]
    assert js["values"] == ["1"] * 6
    text = json.dumps(js, separators=(",", ":"))
    assert json.dumps(json.loads(text), separators=(",", ":")) == text


def test_report_p1_limit_zero():
    rep = run_report(FamilySpec("P1", (1,), (1, 1), (1, 1)), 5)
    assert rep.limit == 0 and rep.empirical_index <= 1


def test_report_window_too_small():
    with pytest.raises(ValueError, match="increase n_max"):
        run_report(FamilySpec("R1", (3,), (3,), (3, 3, 3)), 2)


def test_report_not_stabilized():
    rep = run_report(FamilySpec("Q1", (1,), (1,), (1,)), 3)
    assert rep.empirical_index == 0
    rep.empirical_index = None
    assert rep.to_json()["empirical_index"] == "not stabilized in window"


def test_compute_terms_pool_matches_serial():
    spec = FamilySpec("P1", (2, 1), (2,), (3, 2, 1))
    assert compute_terms(spec, range(5), "b", threads=2) == compute_terms(spec, range(5), "b", 1)


def _shifted_b_plateau(spec, n_max):
    """Largest plateau index among the b-sequences inside the a-sequence's signed sum."""
    triples = [spec.triple(n) for n in range(n_max + 1)]
    N = max(len(t[0]) for t in triples)
    M = max(len(t[2]) for t in triples)
    worst = 0
    for o1 in jt_offsets(N):
        for o2 in jt_offsets(M):
            seq = [b_coeff(add(pad(lam, N), o1.offset), mu, add(pad(nu, M), o2.offset))
                   for lam, mu, nu in triples]
            idx = plateau_index(seq)
            assert idx is not None
            worst = max(worst, idx)
    return worst


@settings(max_examples=15)
@given(st.sampled_from([s for s in family_specs(2) if len(s.lam) + len(s.nu) <= 5]))
def test_a_plateau_bounded_by_b_plateaus(spec):
    n_max = max(our_bound(spec).first_n(), 0) + 6
    a_vals = compute_terms(spec, range(n_max + 1), "a", 1)
    assert plateau_index(a_vals) <= _shifted_b_plateau(spec, n_max)
