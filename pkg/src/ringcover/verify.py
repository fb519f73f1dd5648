"""Theorem verification registry.

Each entry maps a theorem id to a ring filter and a check.  A check returns
a short detail string, raises ``Skip`` when the ring falls outside the
hypotheses, and raises ``AssertionError`` on a counterexample.  Suites run
the checks over the built-in catalog and report one case per ring.
"""
from __future__ import annotations

import time
from dataclasses import dataclass

from sympy import factorint

from . import catalog as cat
from .constructors import construct
from .cover import (all_minimum_covers, is_cover, is_coverable, sigma_exact, sigma_J,
                    sigma_elementary)
from .errors import HypothesisViolated, UnknownTheoremId
from .formulas import (FieldProductShape, count_maximal_subideals, is_prime_power_plus_one,
                       predict_sigma_commutative, sigma_field_product, sigma_J_formula,
                       thirteen_search)
from .lattice import (generated_subring, ideal_product, intersection,
                      maximal_subideals, maximal_subrings, subideals, subset_algebra,
                      two_sided_ideals)
from .radical import (complements_by_lattice, complements_in_one_maximal, conjugate,
                      grow_to_maximal, jacobson_radical, one_plus_J_orbit, reduce,
                      semisimple_profile, split_by_prime, wedderburn_complements)
from .ring import is_isomorphic, quotient

INF = float("inf")


class Skip(Exception):
    pass


@dataclass
class VerificationCase:
    theorem: str
    ring: str
    expected: str
    outcome: str
    reason: str
    runtime: float


@dataclass
class Theorem:
    id: str
    statement: str
    check: object
    max_order: int = 256
    scope: str = "rings"


# -- helpers ----------------------------------------------------------------------------

def _prime(R):
    """The prime p when char(R) = p^n, else None."""
    parts = factorint(R.characteristic)
    return next(iter(parts)) if len(parts) == 1 else None


def _need_primary(R):
    p = _prime(R)
    if p is None:
        raise Skip("characteristic is not a prime power")
    return p


def _need_char_p(R):
    p = _need_primary(R)
    if R.characteristic != p:
        raise Skip("characteristic is not prime")
    return p


_reduced = {}


def _reduce(R):
    hit = _reduced.get(id(R))
    if hit is None or hit[0] is not R:
        hit = (R, reduce(R).ring)
        _reduced[id(R)] = hit
    return hit[1]


_quotients = {}


def _quotient(R, I):
    key = (id(R), I.elements)
    hit = _quotients.get(key)
    if hit is None or hit[0] is not R:
        Q, qmap = quotient(R, I)
        hit = (R, Q, qmap)
        _quotients[key] = hit
    return hit[1], hit[2]


def _sigma(R):
    return sigma_exact(R).value


def _fmt(v):
    return "inf" if v == INF else str(v)


def _proper_nonzero_ideals(R):
    return [I for I in two_sided_ideals(R) if 1 < len(I) < R.order]


def _rad_commutative(R):
    rad = jacobson_radical(R)
    if not rad.quotient.is_commutative:
        raise Skip("R/J is not commutative")
    return rad


def _reduced_commutative(R):
    if not R.is_commutative:
        raise Skip("not commutative")
    _need_primary(R)
    return _reduce(R)


# -- checks: basics ---------------------------------------------------------------------

def check_maximal_contain_one(R):
    n = 0
    for M in maximal_subrings(R):
        if R.one in M.members:
            continue
        index = R.order // len(M)
        assert M.is_ideal, f"maximal subring of size {len(M)} lacks 1 and is not an ideal"
        assert len(factorint(index)) == 1 and sum(factorint(index).values()) == 1, \
            f"maximal ideal of index {index}"
        Q, _ = _quotient(R, M)
        assert Q.characteristic == index
        n += 1
    return f"{len(maximal_subrings(R))} maximal, {n} without 1"


def check_basics(R):
    rep = sigma_exact(R)
    single = not is_coverable(R)[0]
    assert rep.coverable != single, "coverability disagrees with single generation"
    if not R.is_commutative:
        assert rep.coverable, "noncommutative ring reported not coverable"
    if not rep.coverable:
        return "not coverable"
    assert rep.sigma >= 3
    maxes = {M.elements for M in maximal_subrings(R)} if rep.components == [] else None
    if maxes is not None:
        assert all(T.elements in maxes for T in rep.cover), "cover member is not maximal"
    assert is_cover(R, rep.cover) and len(rep.cover) == rep.sigma
    lifted = 0
    if R.order <= 128:
        for I in _proper_nonzero_ideals(R):
            Q, _ = _quotient(R, I)
            assert rep.sigma <= _sigma(Q), f"sigma(R/I) < sigma(R) for |I| = {len(I)}"
            lifted += 1
    return f"sigma {rep.sigma}, {lifted} quotients"


def check_forcing(R):
    """R = S + I with S maximal and sigma(R) < sigma(R/I): S is in every minimum cover."""
    rep = sigma_exact(R)
    if not rep.coverable:
        raise Skip("not coverable")
    if rep.components:
        raise Skip("mixed characteristic")
    covers = None
    hits = 0
    for I in _proper_nonzero_ideals(R):
        Q, _ = _quotient(R, I)
        if not rep.sigma < _sigma(Q):
            continue
        for S in maximal_subrings(R):
            if len(S) * len(I) != R.order or (S.members & I.members) != {0}:
                continue
            if covers is None:
                covers = all_minimum_covers(R)
            for C in covers:
                assert S in C, f"maximal complement of size {len(S)} missing from a minimum cover"
            hits += 1
    if not hits:
        raise Skip("no maximal S with R = S + I and sigma(R) < sigma(R/I)")
    return f"{hits} forced subrings across {len(covers)} minimum covers"


# -- checks: reductions -------------------------------------------------------------------

def check_pR_in_maximal(R):
    p = _need_primary(R)
    pR = {R.smul(p, r) for r in range(R.order)}
    for M in maximal_subrings(R):
        assert pR <= M.members, f"pR not inside a maximal subring of size {len(M)}"
    return f"|pR| = {len(pR)}"


def check_sigma_mod_p(R):
    p = _need_primary(R)
    pR = subset_algebra(R, {R.smul(p, r) for r in range(R.order)})
    if len(pR) == 1:
        raise Skip("characteristic is prime")
    Q, _ = _quotient(R, pR)
    a, b = _sigma(R), _sigma(Q)
    assert a == b, f"sigma(R) = {_fmt(a)}, sigma(R/pR) = {_fmt(b)}"
    return f"sigma {_fmt(a)}"


def check_complement_orbit(R):
    _need_char_p(R)
    rad = jacobson_radical(R)
    if rad.is_zero:
        raise Skip("J = 0")
    lattice = complements_by_lattice(R)
    assert lattice, "no complement"
    orbit = one_plus_J_orbit(R, lattice[0])
    assert [S.elements for S in orbit] == [S.elements for S in lattice], \
        f"{len(lattice)} complements but the orbit has {len(orbit)}"
    assert [S.elements for S in wedderburn_complements(R)] == [S.elements for S in lattice]
    for S in lattice[:4]:
        Sring = _as_ring(R, S)
        ok, _ = is_isomorphic(Sring, rad.quotient)
        assert ok, "complement not isomorphic to R/J"
    return f"{len(lattice)} complements, one orbit"


def _as_ring(R, S):
    from .ring import unital_subring
    return unital_subring(R, S.elements, R.one)[0]


def check_maximal_classification(R):
    _need_char_p(R)
    rad = jacobson_radical(R)
    J, Q, qmap = rad.J, rad.quotient, rad.qmap
    qmax = {M.elements for M in maximal_subrings(Q)}
    comps = complements_by_lattice(R)
    subs = {I.elements for I in maximal_subideals(R, J)}
    avoiding = set()
    for T in maximal_subrings(R):
        if J.members <= T.members:
            image = tuple(sorted({qmap[t] for t in T.elements}))
            assert image in qmax, "maximal subring over J with non-maximal image"
        else:
            I = intersection(T, J)
            assert I.elements in subs, "T cap J is not a maximal subideal"
            assert any(S.members <= T.members for S in comps), "T contains no complement"
            avoiding.add(T.elements)
    built = set()
    maxes = {M.elements for M in maximal_subrings(R)}
    for S in comps:
        for I in maximal_subideals(R, J):
            T = generated_subring(R, list(S.elements) + list(I.elements))
            assert len(T) == len(S) * len(I), "S + I is not direct"
            assert T.elements in maxes, "S + I is not maximal"
            built.add(T.elements)
    assert built == avoiding
    return f"{len(avoiding)} of {len(maxes)} maximal subrings avoid J"


def check_J2_in_maximal(R):
    rad = jacobson_radical(R)
    J2 = ideal_product(R, rad.J, rad.J)
    for M in maximal_subrings(R):
        assert J2.members <= M.members, f"J^2 not inside a maximal subring of size {len(M)}"
    if len(J2) > 1:
        Q, _ = _quotient(R, J2)
        assert _sigma(R) == _sigma(Q), "sigma(R) != sigma(R/J^2)"
    return f"|J^2| = {len(J2)}"


def check_full_reduction(R):
    comps = split_by_prime(R)
    for comp in comps if len(comps) > 1 else [None]:
        A = R if comp is None else comp.ring
        Rd = _reduce(A)
        p = _prime(Rd) if Rd.order > 1 else None
        assert Rd.order == 1 or Rd.characteristic == p, "reduced ring not of prime characteristic"
        rad = jacobson_radical(Rd)
        assert len(ideal_product(Rd, rad.J, rad.J)) == 1, "reduced ring has J^2 != 0"
        assert _sigma(A) == _sigma(Rd), "reduction changed sigma"
    return f"{max(1, len(comps))} component(s)"


# -- checks: commutative ------------------------------------------------------------------

def check_subideal_decomposition(R):
    Rd = _reduced_commutative(R)
    J = jacobson_radical(Rd).J
    if len(J) == 1:
        raise Skip("J = 0")
    prof = semisimple_profile(Rd)
    mul = Rd.mul_rows
    subs = subideals(Rd, J)
    for I in subs:
        parts = [{mul[e][x] for x in I.elements} for e in prof.idempotents]
        size = 1
        for part in parts:
            assert part <= I.members
            size *= len(part)
        assert size == len(I), "I is not the direct sum of the e_i I"
        assert any(len(K) * len(I) == len(J) and (K.members & I.members) == {0} for K in subs), \
            "subideal without an ideal complement"
    return f"{len(subs)} subideals"


def check_sigma_J(R):
    Rd = _reduced_commutative(R)
    J = jacobson_radical(Rd).J
    if len(J) == 1:
        raise Skip("J = 0")
    prof = semisimple_profile(Rd)
    pred = sigma_J_formula(prof)
    got = sigma_J(Rd)
    assert pred.coverable == got.coverable, "coverability of J disagrees"
    assert pred.coverable == bool(prof.Lambda2)
    if got.coverable:
        assert pred.sigma == got.sigma, f"formula {pred.sigma}, solver {got.sigma}"
    return f"sigma(J) {got.sigma if got.coverable else 'not coverable'}"


def check_J_cases(R):
    Rd = _reduced_commutative(R)
    rep = sigma_exact(Rd)
    if not rep.coverable:
        raise Skip("not coverable")
    rad = jacobson_radical(Rd)
    if rad.is_zero:
        raise Skip("J = 0")
    jrep = sigma_J(Rd)
    if not jrep.coverable:
        assert rep.sigma == _sigma(rad.quotient), "J not coverable but sigma(R) != sigma(R/J)"
        return "J not coverable: sigma(R) = sigma(R/J)"
    if sigma_elementary(Rd).is_sigma_elementary:
        m = len(maximal_subideals(Rd, rad.J))
        assert rep.sigma == m, f"sigma {rep.sigma} != {m} maximal subideals"
        return f"sigma-elementary: sigma = {m} maximal subideals"
    raise Skip("J coverable but not sigma-elementary")


def check_subideal_count(R):
    Rd = _reduced_commutative(R)
    rad = jacobson_radical(Rd)
    prof = semisimple_profile(Rd)
    m = count_maximal_subideals(prof)
    assert m == len(maximal_subideals(Rd, rad.J)), "count formula disagrees with the lattice"
    rep = sigma_exact(Rd)
    if rep.coverable and prof.Lambda2 and sigma_elementary(Rd).is_sigma_elementary:
        assert rep.sigma == m == min(prof.components[i].field_order + 1 for i in prof.Lambda2)
        assert prof.Lambda == prof.Lambda2 and len(prof.Lambda2) == 1
        assert prof.components[prof.Lambda2[0]].dim == 2
    return f"m = {m}"


def _elementary_commutative_models(q):
    from .formulas import tau
    t = tau(q)
    return [("Prod(" + ",".join([f"F({q})"] * t) + ")" if t > 1 else f"F({q})"), f"T3(F({q}))"]


def check_commutative_classification(R):
    """Every commutative sigma-elementary ring among R and its quotients of
    order <= 128 is a product of tau(q) copies of F_q or T3(F_q)."""
    if not R.is_commutative:
        raise Skip("not commutative")
    rings = [R] + [_quotient(R, I)[0] for I in _proper_nonzero_ideals(R)]
    found = []
    for A in rings:
        if A.order > 128:
            continue
        if not sigma_elementary(A).is_sigma_elementary:
            continue
        p = _prime(A)
        assert p is not None and A.characteristic == p, "sigma-elementary ring of composite characteristic"
        rad = jacobson_radical(A)
        qs = set(semisimple_profile(A).field_orders) if rad.is_zero else \
            set(semisimple_profile(_reduce(A)).field_orders)
        assert len(qs) == 1, "sigma-elementary ring with two field sizes"
        models = _elementary_commutative_models(qs.pop())
        model = models[0] if rad.is_zero else models[1]
        ok, phi = is_isomorphic(A, construct(model))
        assert ok, f"sigma-elementary quotient of order {A.order} is not {model}"
        found.append(model)
    if not found:
        raise Skip("no sigma-elementary ring among R and its quotients")
    return "elementary: " + ", ".join(sorted(set(found)))


def check_field_products(R):
    if not R.is_commutative or not jacobson_radical(R).is_zero:
        raise Skip("not a product of fields")
    comps = split_by_prime(R)
    best = INF
    for comp in comps if len(comps) > 1 else [None]:
        A = R if comp is None else comp.ring
        shape = FieldProductShape.from_orders(semisimple_profile(A).field_orders)
        pred = sigma_field_product(shape)
        got = _sigma(A)
        assert pred.value == got, f"formula {_fmt(pred.value)}, solver {_fmt(got)} for {shape.blocks}"
        best = min(best, got)
    assert _sigma(R) == best
    return f"sigma {_fmt(best)}"


def check_commutative_prediction(R):
    if not R.is_commutative:
        raise Skip("not commutative")
    if R.order > 200:
        raise Skip("order above 200")
    pred = predict_sigma_commutative(R)
    got = _sigma(R)
    assert pred.value == got, f"prediction {_fmt(pred.value)}, solver {_fmt(got)}"
    if pred.coverable:
        comps = split_by_prime(R)
        rj = INF
        for comp in comps if len(comps) > 1 else [None]:
            A = R if comp is None else comp.ring
            rj = min(rj, _sigma(jacobson_radical(A).quotient))
        p_ok = any(is_prime_power_plus_one(got, c.prime) for c in comps) if len(comps) > 1 \
            else is_prime_power_plus_one(got, _prime(R))
        assert got == rj or p_ok, f"sigma {got} is neither sigma(R/J) = {_fmt(rj)} nor p^d + 1"
    return f"{pred.source}: {_fmt(got)}"


# -- checks: R/J commutative, J^2 = 0 -----------------------------------------------------

def _square_zero(R):
    _need_primary(R)
    Rd = _reduce(R)
    rad = jacobson_radical(Rd)
    if rad.is_zero:
        raise Skip("J = 0")
    return Rd, rad


def check_one_plus_J(R):
    Rd, rad = _square_zero(R)
    p = Rd.characteristic
    add, mul, neg = Rd.add_rows, Rd.mul_rows, Rd.neg
    one = Rd.one
    J = rad.J.elements
    for x in J:
        u = add[one][x]
        inv = Rd.inverses[u]
        assert inv == add[one][neg[x]], "(1+x)^-1 != 1-x"
        assert Rd.power(u, p) == one and (x == 0 or u != one)
        for y in J:
            assert mul[x][y] == 0
            assert mul[u][add[one][y]] == add[add[one][x]][y], "(1+x)(1+y) != 1+x+y"
            assert mul[x][add[one][y]] == x
    return f"|1+J| = {len(J)}"


def check_conjugation_formula(R):
    Rd, rad = _square_zero(R)
    add, mul, neg = Rd.add_rows, Rd.mul_rows, Rd.neg
    J = rad.J
    for S in complements_by_lattice(Rd)[:2]:
        for x in J.elements:
            u = add[Rd.one][x]
            inv = Rd.inverses[u]
            for s in S.elements:
                direct = mul[mul[inv][s]][u]
                formula = add[s][add[mul[s][x]][neg[mul[x][s]]]]
                assert direct == formula, "s^(1+x) != s + sx - xs"
                assert add[direct][neg[s]] in J.members
    return f"|J| = {len(J)}"


def _avoiding_maximal(Rd, J):
    return [T for T in maximal_subrings(Rd) if not J.members <= T.members]


def check_conjugates_of_T(R):
    Rd, rad = _square_zero(R)
    J = rad.J
    comps = complements_by_lattice(Rd)
    n = 0
    for T in _avoiding_maximal(Rd, J):
        I = intersection(T, J)
        conj = one_plus_J_orbit(Rd, T)
        assert len(conj) <= len(J) // len(I), "more than |J:I| conjugates"
        S = next(S for S in comps if S.members <= T.members)
        for C in conj:
            assert intersection(C, J).elements == I.elements, "conjugate changed T cap J"
            assert any(len(C) == len(S) * len(I) and S2.members <= C.members for S2 in comps)
        for x in J.elements:
            if conjugate(Rd, S, Rd.add_rows[Rd.one][x]).elements == S.elements:
                assert all(Rd.mul_rows[x][r] == Rd.mul_rows[r][x] for r in range(Rd.order)), \
                    "stabiliser of S not central"
        n += 1
    if not n:
        raise Skip("every maximal subring contains J")
    return f"{n} maximal subrings avoiding J"


def _case1_setup(R):
    Rd, rad = _square_zero(R)
    if not rad.quotient.is_commutative:
        raise Skip("R/J is not commutative")
    hull = complements_in_one_maximal(Rd)
    if hull.maximal is not None:
        raise Skip("all complements lie in one maximal subring")
    return Rd, rad, hull


def check_conjugate_count(R):
    Rd, rad, hull = _case1_setup(R)
    J = rad.J
    n = 0
    for T in _avoiding_maximal(Rd, J):
        if all(S.members <= T.members for S in hull.complements):
            continue
        I = intersection(T, J)
        conj = one_plus_J_orbit(Rd, T)
        assert len(conj) == len(J) // len(I), f"{len(conj)} conjugates, |J:I| = {len(J) // len(I)}"
        inter = set(conj[0].members)
        for C in conj[1:]:
            inter &= C.members
        assert inter == conj[0].members & conj[1].members, "intersection of all conjugates != T1 cap T2"
        n += 1
    return f"{n} maximal subrings checked"


def check_case1_cover(R):
    Rd, rad, hull = _case1_setup(R)
    J = rad.J
    n = 0
    for T in _avoiding_maximal(Rd, J):
        conj = one_plus_J_orbit(Rd, T)
        A = intersection(conj[0], conj[1])
        AJ = generated_subring(Rd, list(A.elements) + list(J.elements))
        assert len(AJ) < Rd.order, "(T1 cap T2) + J is the whole ring"
        M = grow_to_maximal(Rd, AJ)
        assert is_cover(Rd, conj + [M]), "conjugates of T with M do not cover"
        n += 1
    return f"{n} covers built"


def check_case1_sigma(R):
    from .cover import verify_case1_sigma
    Rd, rad, hull = _case1_setup(R)
    res = verify_case1_sigma(Rd)
    assert res.sigma <= res.prediction
    if not res.strict:
        raise Skip(f"sigma(R) = sigma(R/J) = {res.sigma}; bound {res.prediction} holds")
    assert res.sigma == res.prediction
    assert is_prime_power_plus_one(res.sigma, Rd.characteristic)
    return f"sigma {res.sigma} = |J:I| + 1"


def check_case2(R):
    rad = _rad_commutative(R)
    _need_char_p(R)
    if rad.is_zero:
        raise Skip("J = 0")
    if len(ideal_product(R, rad.J, rad.J)) > 1:
        raise Skip("J^2 != 0")
    hull = complements_in_one_maximal(R)
    if hull.maximal is None:
        raise Skip("no maximal subring contains every complement")
    if not sigma_elementary(R).is_sigma_elementary:
        raise Skip("not sigma-elementary")
    assert len(hull.K) == 1 and R.is_commutative, "sigma-elementary with K != 0"
    return "commutative"


def check_pd_plus_one(R):
    rad = jacobson_radical(R)
    if rad.is_zero:
        raise Skip("J = 0")
    if not rad.quotient.is_commutative:
        raise Skip("R/J is not commutative")
    el = sigma_elementary(R)
    if not el.is_sigma_elementary:
        raise Skip("not sigma-elementary")
    assert is_prime_power_plus_one(el.sigma, R.characteristic), \
        f"sigma {el.sigma} - 1 is not a power of {R.characteristic}"
    return f"sigma {el.sigma}"


def check_no_thirteen(R):
    if not jacobson_radical(R).quotient.is_commutative:
        raise Skip("R/J is not commutative")
    v = _sigma(R)
    assert v != 13
    return f"sigma {_fmt(v)}"


def global_thirteen():
    rep = thirteen_search(64)
    assert rep.thirteen_absent, "13 is achievable"
    assert rep.small_tau == [4, 8], f"non-prime q with tau <= 3: {rep.small_tau}"
    assert rep.field_values[4] == 4 and rep.field_values[8] == 12
    return f"{len(rep.achievable)} values below the bound, 13 absent"


REGISTRY = {t.id: t for t in [
    Theorem("lemma-1.2", "a maximal subring contains 1 or is an ideal of prime index",
            check_maximal_contain_one),
    Theorem("lemma-2.1", "coverable iff not single-generated; noncommutative implies coverable; "
            "sigma(R) <= sigma(R/I); minimum covers use maximal subrings", check_basics),
    Theorem("lemma-2.2", "a maximal S with R = S + I and sigma(R) < sigma(R/I) lies in every minimum cover",
            check_forcing, max_order=64),
    Theorem("lemma-3.2", "pR lies in every maximal subring", check_pR_in_maximal),
    Theorem("prop-3.3", "sigma(R) = sigma(R/pR)", check_sigma_mod_p, max_order=200),
    Theorem("thm-3.6", "complements of J exist, are isomorphic to R/J and form one 1+J orbit",
            check_complement_orbit),
    Theorem("thm-3.7", "maximal subrings either contain J or are S + I with I a maximal subideal",
            check_maximal_classification),
    Theorem("cor-3.8", "J^2 lies in every maximal subring and sigma(R) = sigma(R/J^2)",
            check_J2_in_maximal),
    Theorem("thm-3.9", "reduction to characteristic p with J^2 = 0 preserves sigma", check_full_reduction,
            max_order=200),
    Theorem("lemma-4.3", "subideals split along the idempotents and have ideal complements",
            check_subideal_decomposition),
    Theorem("thm-4.4", "sigma(J) = min |F_i| + 1 over Lambda2, J coverable iff Lambda2 nonempty",
            check_sigma_J),
    Theorem("thm-4.5", "J not coverable gives sigma(R) = sigma(R/J); sigma-elementary gives the subideal count",
            check_J_cases),
    Theorem("thm-4.6", "number of maximal subideals of J is the projective-space sum",
            check_subideal_count),
    Theorem("thm-4.8", "commutative sigma-elementary rings are tau(q) copies of F_q or T3(F_q)",
            check_commutative_classification, max_order=256),
    Theorem("thm-4.9", "field products follow the tau/omega formula", check_field_products),
    Theorem("cor-4.10", "commutative prediction matches the solver; sigma is sigma(R/J) or p^d + 1",
            check_commutative_prediction, max_order=200),
    Theorem("lemma-5.1", "1 + J is an elementary abelian p-group with (1+x)(1+y) = 1+x+y",
            check_one_plus_J),
    Theorem("lemma-5.2", "s^(1+x) = s + sx - xs", check_conjugation_formula),
    Theorem("lemma-5.3", "conjugates of T are S^(1+x) + I, at most |J:I| of them; stabilisers are central",
            check_conjugates_of_T),
    Theorem("lemma-5.6", "exactly |J:I| conjugates of T, meeting in T1 cap T2", check_conjugate_count),
    Theorem("prop-5.8", "the conjugates of T and one maximal M over (T1 cap T2) + J cover R",
            check_case1_cover),
    Theorem("thm-5.9", "sigma(R) = |J:I| + 1 when no maximal subring holds every complement",
            check_case1_sigma),
    Theorem("thm-5.12", "if every complement lies in one proper subring, sigma-elementary forces commutativity",
            check_case2),
    Theorem("thm-1.3", "sigma-elementary with R/J commutative and J != 0 has sigma = p^d + 1",
            check_pd_plus_one),
    Theorem("cor-1.4", "no ring with R/J commutative has sigma 13", check_no_thirteen),
]}

GLOBAL_CHECKS = {"cor-1.4": global_thirteen}

SUITES = {
    "all": list(REGISTRY),
    "structural": ["lemma-1.2", "lemma-3.2", "cor-3.8", "thm-3.6", "lemma-5.1", "lemma-5.2",
                   "thm-4.5", "thm-4.6"],
    "commutative": ["lemma-4.3", "thm-4.4", "thm-4.5", "thm-4.6", "thm-4.8", "thm-4.9", "cor-4.10"],
    "reduction": ["lemma-3.2", "prop-3.3", "cor-3.8", "thm-3.9"],
    "radical-commutative": ["lemma-5.1", "lemma-5.2", "lemma-5.3", "lemma-5.6", "prop-5.8", "thm-5.9",
                            "thm-5.12", "thm-1.3", "cor-1.4"],
}


def resolve(name):
    if name in SUITES:
        return SUITES[name]
    if name in REGISTRY:
        return [name]
    raise UnknownTheoremId(f"unknown theorem id or suite {name!r}")


def run_theorem(tid, entries):
    thm = REGISTRY[tid]
    cases = []
    if tid in GLOBAL_CHECKS:
        cases.append(_run_one(tid, "formulas", thm.statement, GLOBAL_CHECKS[tid]))
    for e in entries:
        if e.order > thm.max_order:
            cases.append(VerificationCase(tid, e.name, thm.statement, "skipped",
                                          f"order above {thm.max_order}", 0.0))
            continue
        cases.append(_run_one(tid, e.name, thm.statement, lambda R=e.ring: thm.check(R)))
    return cases


def _run_one(tid, label, expected, fn):
    t0 = time.monotonic()
    try:
        detail = fn()
        outcome = "pass"
    except Skip as exc:
        outcome, detail = "skipped", str(exc)
    except HypothesisViolated as exc:
        outcome, detail = "skipped", str(exc)
    except AssertionError as exc:
        outcome, detail = "fail", str(exc) or "assertion failed"
    return VerificationCase(tid, label, expected, outcome, detail, round(time.monotonic() - t0, 3))


def run(name, seed=cat.DEFAULT_SEED, max_order=256, randoms=cat.DEFAULT_RANDOM, entries=None):
    """Run a theorem id or suite over the catalog; cases are ordered by id then ring."""
    ids = resolve(name)
    if entries is None:
        entries = cat.catalog(max_order=max_order, seed=seed, randoms=randoms)
    cases = []
    for tid in sorted(ids):
        cases.extend(run_theorem(tid, entries))
    return cases
