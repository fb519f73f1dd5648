import random
import time
from itertools import combinations
from types import SimpleNamespace

import pytest
from hypothesis import given, settings, strategies as st

from oracles import naive_close, naive_sigma
from ringcover import catalog as cat
from ringcover.constructors import construct
from ringcover.cover import (CoverReport, SetCover, _OutOfTime, _solve, all_minimum_covers, is_cover,
                             is_coverable, sigma_bruteforce, sigma_elementary, sigma_exact, sigma_J,
                             verify_case1_sigma)
from ringcover.errors import HypothesisViolated
from ringcover.formulas import count_maximal_subideals
from ringcover.lattice import maximal_subideals, two_sided_ideals
from ringcover.radical import jacobson_radical, semisimple_profile, wedderburn_complements
from ringcover.ring import make_ring, quotient

SMALL = [e.ring for e in cat.catalog(max_order=64, randoms=8)]
TINY = [R for R in SMALL if R.order <= 16]


@pytest.mark.parametrize("name,sigma", [("Prod(F(2),F(2))", 3), ("T3(F(2))", 3), ("T3(F(3))", 4),
                                        ("Prod(F(4),F(4))", 4), ("M(2,F(3))", 7), ("M(2,F(2))", 4),
                                        ("Prod(F(3),F(3),F(3))", 6), ("Tri(2,F(2))", 3)])
def test_sigma_values(name, sigma):
    rep = sigma_exact(construct(name))
    assert rep.exact and rep.coverable and rep.sigma == sigma
    assert len(rep.cover) == sigma and is_cover(construct(name), rep.cover)


def test_coverability_examples():
    ok, w = is_coverable(construct("Zmod(4)"))
    assert not ok and w == 1
    assert is_coverable(construct("Prod(F(2),F(2))"))[0]
    assert is_coverable(construct("M(2,F(2))"))[0]
    rep = sigma_exact(construct("Zmod(4)"))
    assert not rep.coverable and rep.witness == 1 and rep.value == float("inf")


@pytest.mark.parametrize("R", SMALL, ids=lambda R: R.name)
def test_report_invariants(R):
    rep = sigma_exact(R)
    assert rep.exact
    if rep.coverable:
        assert rep.sigma >= 3 and len(rep.cover) == rep.sigma
        assert is_cover(R, rep.cover)
        assert rep.lower_bound <= rep.sigma
    else:
        assert naive_close(R, [rep.witness]) == frozenset(range(R.order))
    if not R.is_commutative:
        assert rep.coverable


@pytest.mark.parametrize("R", TINY, ids=lambda R: R.name)
def test_sigma_matches_naive_oracle(R):
    assert sigma_exact(R).sigma == naive_sigma(R)


@pytest.mark.parametrize("R", [R for R in SMALL if R.order <= 32], ids=lambda R: R.name)
def test_sigma_matches_bruteforce(R):
    assert sigma_exact(R).sigma == sigma_bruteforce(R)


@pytest.mark.parametrize("R", [R for R in SMALL if R.order <= 64], ids=lambda R: R.name)
def test_lifting_bound(R):
    s = sigma_exact(R).value
    for I in two_sided_ideals(R):
        if 1 < len(I) < R.order:
            Q, _ = quotient(R, I)
            assert s <= sigma_exact(Q).value


def test_determinism_across_instances():
    for name in ["M(2,F(2))", "Prod(F(3),F(3),F(3))", "Tri(2,F(3))"]:
        a = sigma_exact(make_ring(construct(name).spec))
        b = sigma_exact(make_ring(construct(name).spec))
        assert [S.elements for S in a.cover] == [S.elements for S in b.cover]
        assert a.lower_bound_trace == b.lower_bound_trace


def test_sigma_j_examples():
    assert sigma_J(construct("T3(F(2))")).sigma == 3
    assert sigma_J(construct("T3(F(3))")).sigma == 4
    assert not sigma_J(construct("PolyQuot(F(2),[0,0,1])")).coverable


def test_sigma_elementary_examples():
    rep = sigma_elementary(construct("T3(F(2))"))
    assert rep.is_sigma_elementary and rep.sigma == 3
    rep = sigma_elementary(construct("Prod(F(4),F(4))"))
    assert rep.is_sigma_elementary and rep.sigma == 4
    rep = sigma_elementary(construct("Prod(F(2),T3(F(2)))"))
    assert not rep.is_sigma_elementary and len(rep.violating_ideal) > 1


def test_forcing_on_t3():
    # T = S + I1 is maximal and R = T + I2 with R/I2 not coverable, so T lies in every minimal cover
    for q in (2, 3):
        R = construct(f"T3(F({q}))")
        S = wedderburn_complements(R)[0]
        J = jacobson_radical(R).J
        covers = all_minimum_covers(R)
        assert covers
        for I in maximal_subideals(R, J):
            T = frozenset(R.add(s, i) for s in S.elements for i in I.elements)
            assert all(T in {frozenset(M.elements) for M in C} for C in covers)


def test_sigma_equals_subideal_count_for_elementary():
    for name in ["T3(F(2))", "T3(F(3))", "T3(F(4))"]:
        R = construct(name)
        assert sigma_exact(R).sigma == count_maximal_subideals(semisimple_profile(R))


def test_case1_examples():
    res = verify_case1_sigma(construct("Tri(2,F(2))"))
    assert res.index == 2 and res.prediction == 3 and res.sigma == 3
    assert is_cover(construct("Tri(2,F(2))"), res.cover)
    res = verify_case1_sigma(construct("Tri(2,F(3))"))
    assert res.prediction == 4 and res.sigma == 4 and res.strict
    with pytest.raises(HypothesisViolated):
        verify_case1_sigma(construct("T3(F(2))"))


def _hard_instance():
    rng = random.Random(1)
    return [sum(1 << c for c in range(60) if rng.random() < 0.12) for _ in range(90)]


def test_timeout_returns_inexact_bounds():
    masks = _hard_instance()
    with pytest.raises(_OutOfTime):
        SetCover(60, masks, deadline=time.monotonic() - 1).solve()
    cands = [SimpleNamespace(members={c for c in range(60) if m >> c & 1}) for m in masks]
    rep = _solve(None, cands, list(range(60)), 1e-9, CoverReport("hard", 0, 0, True))
    assert not rep.exact and rep.sigma == len(rep.cover)
    assert rep.lower_bound is not None and rep.lower_bound <= rep.sigma


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 7), st.lists(st.integers(1, 127), min_size=1, max_size=9))
def test_setcover_matches_exhaustive(n, masks):
    masks = [m & ((1 << n) - 1) for m in masks]
    full = (1 << n) - 1
    best = None
    for k in range(1, len(masks) + 1):
        if any(sum_or(c) == full for c in combinations(masks, k)):
            best = k
            break
    P = SetCover(n, masks)
    size = P.solve()[0]
    assert size == best
    if best is not None:
        chosen = P.lex_least(best)
        assert sum_or(masks[i] for i in chosen) == full
        all_k = [tuple(c) for c in combinations(range(len(masks)), best)
                 if sum_or(masks[i] for i in c) == full]
        assert tuple(chosen) == min(all_k)
        assert set(P.all_covers(best)) == set(all_k)


def sum_or(ms):
    out = 0
    for m in ms:
        out |= m
    return out
