import pytest
from hypothesis import given, settings, strategies as st

from oracles import naive_close, naive_is_ideal, naive_maximal_subrings, naive_subrings
from ringcover import catalog as cat
from ringcover.constructors import construct
from ringcover.errors import LatticeBoundExceeded, NotAnIdeal
from ringcover.lattice import (all_subrings, generated_subring, ideal_generated_by, ideal_product,
                               ideal_sum, intersection, maximal_subideals, maximal_subrings,
                               subideals, two_sided_ideals)
from ringcover.radical import jacobson_radical

TINY = [e.ring for e in cat.catalog(max_order=32, randoms=6)]


def sets(family):
    return {frozenset(S.elements) for S in family}


def test_generated_examples():
    P = construct("Prod(F(2),F(2))")
    e = P.index((1, 0))
    assert set(generated_subring(P, [e]).elements) == {0, e}
    Z4 = construct("Zmod(4)")
    assert len(generated_subring(Z4, [Z4.one])) == 4
    D = construct("PolyQuot(F(2),[0,0,1])")
    x = D.index((0, 1))
    assert set(generated_subring(D, [x]).elements) == {0, x}


def test_subring_counts():
    assert len(all_subrings(construct("F(4)"))) == 3
    Z4 = construct("Zmod(4)")
    assert sets(all_subrings(Z4)) == {frozenset({0}), frozenset({0, 2}), frozenset(range(4))}
    # {0}, F2 x 0, 0 x F2, the diagonal, the whole ring: the naive oracle finds 5
    P = construct("Prod(F(2),F(2))")
    assert len(all_subrings(P)) == len(naive_subrings(P)) == 5


def test_maximal_examples():
    P = construct("Prod(F(2),F(2))")
    assert sets(maximal_subrings(P)) == {frozenset({0, P.index((1, 0))}), frozenset({0, P.index((0, 1))}),
                                         frozenset({0, P.one})}
    assert sets(maximal_subrings(construct("Zmod(4)"))) == {frozenset({0, 2})}
    T = construct("T3(F(2))")
    J = jacobson_radical(T).J.members
    maxes = maximal_subrings(T)
    assert len(maxes) >= 3
    without_j = [M for M in maxes if not J <= M.members]
    assert len(without_j) == 3 and all(len(M.members & J) == 2 for M in without_j)


def test_ideal_examples():
    M = construct("M(2,F(2))")
    e12 = M.index((0, 1, 0, 0))
    assert len(ideal_generated_by(M, [e12])) == 16
    assert len(two_sided_ideals(construct("Prod(F(2),F(2))"))) == 4
    T = construct("T3(F(2))")
    b = T.index((0, 1, 0))
    I = ideal_generated_by(T, [b])
    assert set(I.elements) == {0, b} and I.members <= jacobson_radical(T).J.members


def test_maximal_subideal_examples():
    for name, count in [("T3(F(2))", 3), ("T3(F(3))", 4), ("T3(F(4))", 5)]:
        R = construct(name)
        assert len(maximal_subideals(R, jacobson_radical(R).J)) == count
    D = construct("PolyQuot(F(2),[0,0,1])")
    subs = maximal_subideals(D, jacobson_radical(D).J)
    assert sets(subs) == {frozenset({0})}
    with pytest.raises(NotAnIdeal):
        maximal_subideals(D, [0, D.one])


def test_lattice_bound():
    with pytest.raises(LatticeBoundExceeded):
        all_subrings(construct("Prod(F(8),F(8),F(8))"))
    assert len(maximal_subrings(construct("Prod(F(8),F(8),F(8))"), bound=4096)) > 0


def test_ideal_arithmetic():
    R = construct("Zmod(12)")
    two = ideal_generated_by(R, [R.index((2,))])
    three = ideal_generated_by(R, [R.index((3,))])
    assert len(ideal_sum(R, two, three)) == 12
    assert len(intersection(two, three)) == 2
    assert len(ideal_product(R, two, three)) == 2


@pytest.mark.parametrize("R", TINY, ids=lambda R: R.name)
def test_lattice_matches_naive(R):
    assert sets(all_subrings(R)) == naive_subrings(R)
    assert sets(maximal_subrings(R)) == set(naive_maximal_subrings(R))
    ideals = {S for S in naive_subrings(R) if naive_is_ideal(R, S)}
    assert sets(two_sided_ideals(R)) == ideals
    J = jacobson_radical(R).J
    assert sets(subideals(R, J)) == {I for I in ideals if I <= J.members}


@pytest.mark.parametrize("R", TINY, ids=lambda R: R.name)
def test_canonical_order_and_flags(R):
    subs = all_subrings(R)
    keys = [S.sort_key() for S in subs]
    assert keys == sorted(keys) and len(set(keys)) == len(keys)
    for S in subs:
        assert S.is_subring and 0 in S.members
        assert S.contains_unity == (R.one in S.members)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(TINY), st.data())
def test_generated_subring_is_least_closure(R, data):
    seed = data.draw(st.lists(st.integers(0, R.order - 1), max_size=3))
    S = generated_subring(R, seed)
    assert S.members == naive_close(R, seed)
    assert frozenset(S.elements) in sets(all_subrings(R))


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(TINY), st.data())
def test_ideal_generated_is_least_ideal(R, data):
    seed = data.draw(st.lists(st.integers(0, R.order - 1), max_size=2))
    I = ideal_generated_by(R, seed)
    assert I.is_ideal and set(seed) <= I.members
    containing = [K for K in two_sided_ideals(R) if set(seed) <= K.members]
    assert all(I.members <= K.members for K in containing)
