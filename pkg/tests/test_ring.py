import json
from math import lcm

import pytest
from hypothesis import given, settings, strategies as st

from oracles import naive_units
from ringcover import catalog as cat
from ringcover.constructors import canonical, construct, load_ring
from ringcover.errors import (AxiomViolation, MalformedSpec, NotAnIdeal, NotPrimePower,
                              ReducibleModulus, SearchBoundExceeded, UnknownConstructor)
from ringcover.radical import jacobson_radical
from ringcover.ring import (RingSpec, is_isomorphic, make_ring, product, quotient, random_elements,
                            unit_set)

SMALL = [e.ring for e in cat.catalog(max_order=64, randoms=4)]


def spec(orders, table, unity, name="R"):
    return make_ring(RingSpec.build(name, orders, table, unity))


def test_cyclic_spec_is_z4():
    R = spec([4], [[[1]]], [1])
    assert R.order == 4 and R.characteristic == 4
    assert is_isomorphic(R, construct("Zmod(4)"))[0]


def test_orthogonal_idempotents_give_f2_squared():
    R = spec([2, 2], [[[1, 0], [0, 0]], [[0, 0], [0, 1]]], [1, 1])
    assert is_isomorphic(R, construct("Prod(F(2),F(2))"))[0]


def test_dual_numbers_spec():
    R = spec([2, 2], [[[1, 0], [0, 1]], [[0, 1], [0, 0]]], [1, 0])
    assert is_isomorphic(R, construct("PolyQuot(F(2),[0,0,1])"))[0]
    assert not is_isomorphic(R, construct("Prod(F(2),F(2))"))[0]


def test_associativity_failure_is_reported():
    # g1*g1 = g0 with g0 the unity is fine; make g1*g1 = g1 + g0 and g1*g0 = 0
    with pytest.raises(AxiomViolation) as info:
        spec([2, 2], [[[1, 0], [0, 1]], [[0, 0], [1, 1]]], [1, 0])
    assert info.value.law


def test_malformed_specs():
    with pytest.raises(MalformedSpec):
        RingSpec.build("bad", [2, 2], [[[1, 0]]], [1, 0])
    with pytest.raises(MalformedSpec):
        RingSpec.build("bad", [2], [[[1, 0]]], [1])
    with pytest.raises(MalformedSpec):
        RingSpec.build("bad", [1], [[[0]]], [0])
    with pytest.raises(MalformedSpec):
        RingSpec.from_dict({"generator_orders": [2]})


def test_spec_roundtrip_and_file(tmp_path):
    R = construct("Tri(2,F(3))")
    d = R.spec.to_dict()
    assert RingSpec.from_dict(json.loads(json.dumps(d))) == R.spec
    path = tmp_path / "ring.json"
    path.write_text(json.dumps(d))
    S = load_ring(str(path))
    assert S.order == 27 and is_isomorphic(R, S)[0]


def test_field_four():
    F4 = construct("F(4)")
    assert (F4.order, F4.characteristic, F4.is_commutative, F4.k) == (4, 2, True, 2)
    x = F4.index((0, 1))
    assert F4.mul(x, x) == F4.index((1, 1))


def test_t3_structure():
    R = construct("T3(F(2))")
    assert R.order == 8 and R.is_commutative
    J = jacobson_radical(R).J
    assert set(J.elements) == {R.index((0, b, c)) for b in range(2) for c in range(2)}
    assert all(R.mul(a, b) == 0 for a in J for b in J)


def test_m2f3():
    R = construct("M(2,F(3))")
    assert R.order == 81 and not R.is_commutative
    assert len(jacobson_radical(R).J) == 1


def test_constructor_errors():
    with pytest.raises(UnknownConstructor):
        construct("Foo(2)")
    with pytest.raises(NotPrimePower):
        construct("F(6)")
    with pytest.raises(ReducibleModulus):
        construct("F(4,[1,0,1])")
    with pytest.raises(MalformedSpec):
        construct("M(2,F(2)")


def test_canonical_field_modulus():
    # least irreducible monic of degree 3 over F_2 is x^3 + x + 1
    F8 = construct("F(8)")
    x = F8.index((0, 1, 0))
    x3 = F8.mul(x, F8.mul(x, x))
    assert x3 == F8.index((1, 1, 0))
    assert canonical("Prod( F(2) ,F(2))") == "Prod(F(2),F(2))"


def test_quotients():
    Z4 = construct("Zmod(4)")
    Q, qmap = quotient(Z4, [0, Z4.index((2,))])
    assert Q.order == 2 and is_isomorphic(Q, construct("F(2)"))[0]
    assert qmap[Z4.one] == Q.one
    T = construct("T3(F(2))")
    Q, _ = quotient(T, jacobson_radical(T).J)
    assert is_isomorphic(Q, construct("F(2)"))[0]
    Q, _ = quotient(T, [0])
    assert is_isomorphic(Q, T)[0]
    with pytest.raises(NotAnIdeal):
        quotient(construct("M(2,F(2))"), [0, 1])


def test_quotient_is_a_homomorphism():
    R = construct("Tri(2,Zmod(4))")
    J = jacobson_radical(R).J
    Q, q = quotient(R, J)
    assert Q.order * len(J) == R.order
    for a in range(R.order):
        for b in range(0, R.order, 7):
            assert q[R.add(a, b)] == Q.add(q[a], q[b])
            assert q[R.mul(a, b)] == Q.mul(q[a], q[b])


def test_nested_quotients_compose():
    R = construct("PolyQuot(F(2),[0,0,0,0,1])")
    x = R.index((0, 1, 0, 0))
    x2 = R.mul(x, x)
    big = sorted({R.mul(r, x) for r in range(R.order)})
    small = sorted({R.mul(r, x2) for r in range(R.order)})
    Q1, q1 = quotient(R, small)
    Q2, _ = quotient(Q1, sorted({q1[i] for i in big}))
    Q3, _ = quotient(R, big)
    assert is_isomorphic(Q2, Q3)[0]


def test_products():
    F2 = construct("F(2)")
    assert product([F2]) is F2
    P = product([F2, F2])
    idem = [e for e in range(P.order) if P.mul(e, e) == e and e not in (0, P.one)]
    assert P.order == 4 and len(idem) == 2 and len([e for e in range(4) if P.mul(e, e) == e]) == 4
    P = product([construct("F(4)"), construct("F(4)")])
    assert P.order == 16 and P.characteristic == 2
    Z = product([construct("Zmod(4)"), construct("Zmod(9)"), construct("F(2)")])
    assert Z.characteristic == lcm(4, 9, 2)


def test_unit_sets():
    assert unit_set(construct("Zmod(4)")) == {1, 3}
    assert len(unit_set(construct("F(4)"))) == 3
    D = construct("PolyQuot(F(2),[0,0,1])")
    assert unit_set(D) == {D.one, D.index((1, 1))}


def test_isomorphism_examples():
    a = construct("Prod(F(2),F(2))")
    ok, phi = is_isomorphic(a, a)
    assert ok and sorted(phi) == list(range(4))
    assert not is_isomorphic(construct("Zmod(4)"), construct("PolyQuot(F(2),[0,0,1])"))[0]
    # F2[x,y]/(x^2, xy, y^2) as a structure-constant ring
    xy = spec([2, 2, 2],
              [[[1, 0, 0], [0, 1, 0], [0, 0, 1]],
               [[0, 1, 0], [0, 0, 0], [0, 0, 0]],
               [[0, 0, 1], [0, 0, 0], [0, 0, 0]]], [1, 0, 0])
    T = construct("T3(F(2))")
    ok, phi = is_isomorphic(T, xy)
    assert ok
    for a in range(8):
        for b in range(8):
            assert phi[T.mul(a, b)] == xy.mul(phi[a], phi[b])
            assert phi[T.add(a, b)] == xy.add(phi[a], phi[b])


def test_isomorphism_bound():
    with pytest.raises(SearchBoundExceeded):
        is_isomorphic(construct("Prod(F(8),F(8),F(8))"), construct("Prod(F(8),F(8),F(8))"))


def test_matrix_characteristic():
    for q, p in [(2, 2), (3, 3), (4, 2)]:
        assert construct(f"M(2,F({q}))").characteristic == p


@pytest.mark.parametrize("R", SMALL, ids=lambda R: R.name)
def test_catalog_units_match_naive(R):
    assert set(unit_set(R)) == naive_units(R)
    assert R.order % R.characteristic == 0


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(SMALL), st.integers(0, 10 ** 6))
def test_random_elements_satisfy_axioms(R, seed):
    a, b, c = random_elements(R, 3, seed=seed)
    assert R.mul(R.mul(a, b), c) == R.mul(a, R.mul(b, c))
    assert R.mul(a, R.add(b, c)) == R.add(R.mul(a, b), R.mul(a, c))
    assert R.mul(R.add(a, b), c) == R.add(R.mul(a, c), R.mul(b, c))
    assert R.mul(R.one, a) == a == R.mul(a, R.one)
    assert R.add(a, R.neg[a]) == 0


@settings(max_examples=25, deadline=None)
@given(st.sampled_from([R for R in SMALL if R.order <= 32]))
def test_isomorphism_reflexive_symmetric(R):
    other = construct(R.name) if not R.name.startswith("Random") else cat.lookup(R.name)
    assert is_isomorphic(R, other)[0] and is_isomorphic(other, R)[0]
