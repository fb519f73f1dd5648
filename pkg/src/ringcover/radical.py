"""Jacobson radical, Wedderburn-Malcev complements, 1+J conjugation and the
size-reducing quotients that leave the covering number unchanged."""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product as cartesian
from math import log

import numpy as np
from sympy import factorint

from .errors import (HypothesisViolated, NotAComplement, NotAUnit, NotCommutative,
                     NotPrimePowerCharacteristic)
from .lattice import (Closure, SubsetAlgebra, all_subrings, generated_subring,
                      ideal_generated_by, ideal_product, subset_algebra, two_sided_ideals,
                      whole_ring, zero_ideal)
from .ring import FiniteRing, quotient, unital_subring

COMPLEMENT_SEARCH_BOUND = 200_000


@dataclass
class RadicalData:
    ring: FiniteRing
    J: SubsetAlgebra
    nilpotency_index: int
    quotient: FiniteRing
    qmap: list

    @property
    def J_order(self):
        return len(self.J)

    @property
    def is_zero(self):
        return len(self.J) == 1


def _quasi_regular(R: FiniteRing, side="left"):
    M = R.mul_table
    A = R.add_table
    unit = np.zeros(R.order, dtype=bool)
    unit[list(R.units)] = True
    prods = M if side == "left" else M.T  # [a, x] -> a*x, or x*a
    shifted = A[R.one][prods]
    return np.nonzero(unit[shifted].all(axis=0))[0].tolist()


def radical_power(R, J, k) -> SubsetAlgebra:
    P = whole_ring(R)
    for _ in range(k):
        P = ideal_product(R, P, J)
    return P


def nilpotency_index(R, J) -> int:
    if len(J) == 1:
        return 1
    P, k = J, 1
    while len(P) > 1:
        P = ideal_product(R, P, J)
        k += 1
        if k > R.order + 1:
            raise AssertionError("radical is not nilpotent")
    return k


def jacobson_radical(R: FiniteRing, check=True) -> RadicalData:
    """J = {x : 1 + a*x is a unit for every a}."""
    cache = R.__dict__.setdefault("_radical", None)
    if cache is not None:
        return cache
    elems = _quasi_regular(R, "left")
    if check and _quasi_regular(R, "right") != elems:
        raise AssertionError("left and right quasi-regular sets differ")
    J = subset_algebra(R, elems)
    if not J.is_ideal:
        raise AssertionError("quasi-regular set is not a two-sided ideal")
    k = nilpotency_index(R, J)
    Q, qmap = quotient(R, J, name=f"{R.name}/J")
    if check and len(_quasi_regular(Q, "left")) != 1:
        raise AssertionError("R/J has a nonzero radical")
    data = RadicalData(R, J, k, Q, qmap)
    R.__dict__["_radical"] = data
    return data


def largest_nilpotent_ideal(R) -> SubsetAlgebra:
    """Independent route to J: the biggest ideal I with I^k = 0 for some k."""
    best = zero_ideal(R)
    for I in two_sided_ideals(R):
        P = I
        for _ in range(R.order.bit_length() + 1):
            if len(P) == 1:
                break
            P = ideal_product(R, P, I)
        if len(P) == 1 and len(I) > len(best):
            best = I
    return best


# -- reduction ---------------------------------------------------------------------

@dataclass
class Component:
    prime: int
    ring: FiniteRing
    idempotent: int
    embed: list
    project: list


def split_by_prime(R: FiniteRing):
    """Decompose R into its primary components e_p R via central idempotents
    e_p = c_p * 1 with c_p = 1 mod p^a and c_p = 0 mod n / p^a."""
    n = R.characteristic
    parts = factorint(n)
    if len(parts) <= 1:
        return [Component(next(iter(parts), 1), R, R.one, list(range(R.order)), list(range(R.order)))]
    out = []
    for p, a in sorted(parts.items()):
        pa = p ** a
        rest = n // pa
        c = (rest * pow(rest, -1, pa)) % n
        e = R.smul(c, R.one)
        elems = sorted({R.mul(e, r) for r in range(R.order)})
        C, embed = unital_subring(R, elems, e, name=f"{R.name}[{p}]")
        pos = {x: i for i, x in enumerate(embed)}
        proj = [pos[R.mul(e, r)] for r in range(R.order)]
        out.append(Component(p, C, e, embed, proj))
    return out


@dataclass
class Reduction:
    source: FiniteRing
    ring: FiniteRing
    qmap: list
    steps: list = field(default_factory=list)


def reduce(R: FiniteRing, name=None) -> Reduction:
    """R -> R/pR -> (R/pR)/J^2: characteristic p, square-zero radical."""
    parts = factorint(R.characteristic)
    if len(parts) > 1:
        raise NotPrimePowerCharacteristic(
            f"{R.name} has characteristic {R.characteristic}; split it by prime first")
    p = next(iter(parts), 1)
    qmap = list(range(R.order))
    cur, steps = R, []
    if R.order == 1:
        return Reduction(R, R, qmap, steps)
    pR = sorted({R.smul(p, r) for r in range(R.order)})
    if len(pR) > 1:
        cur, q1 = quotient(R, pR, name=f"{R.name}/pR")
        qmap = [q1[i] for i in qmap]
        steps.append(("pR", len(pR)))
    rad = jacobson_radical(cur)
    J2 = ideal_product(cur, rad.J, rad.J)
    if len(J2) > 1:
        nxt, q2 = quotient(cur, J2, name=f"{cur.name}/J^2")
        qmap = [q2[i] for i in qmap]
        steps.append(("J^2", len(J2)))
        cur = nxt
    if name is not None and cur is not R:
        cur.name = name
    return Reduction(R, cur, qmap, steps)


# -- complements ----------------------------------------------------------------------

def _is_complement(R, S: SubsetAlgebra, J: SubsetAlgebra):
    return len(S) * len(J) == R.order and not (S.members & J.members) - {0}


def wedderburn_complements(R: FiniteRing):
    """All subrings S with S + J = R and S cap J = 0.

    Each such S maps isomorphically onto R/J, so it is generated by 1 and one
    lift of each member of a generating set of R/J; every lift choice is tried.
    Asserts that the result is a single orbit under conjugation by 1 + J.
    """
    rad = jacobson_radical(R)
    J = rad.J
    if rad.is_zero:
        return [whole_ring(R)]
    parts = factorint(R.characteristic)
    if len(parts) != 1 or set(parts.values()) != {1}:
        raise HypothesisViolated("characteristic must be prime")
    Q, qmap = rad.quotient, rad.qmap
    cur = Closure.zero(Q).adjoin(Q.one)
    gens = []
    while len(cur.members) < Q.order:
        best_y, best = None, None
        for y in range(Q.order):
            if y in cur.members:
                continue
            c = cur.adjoin(y)
            if best is None or len(c.members) > len(best.members):
                best_y, best = y, c
        gens.append(best_y)
        cur = best
    fibres = {}
    for r in range(R.order):
        fibres.setdefault(qmap[r], []).append(r)
    lifts = [fibres[g] for g in gens]
    n_tries = 1
    for f in lifts:
        n_tries *= len(f)
    if n_tries > COMPLEMENT_SEARCH_BOUND:
        raise HypothesisViolated(f"complement search would need {n_tries} closures")
    found = {}
    target = R.order // len(J)
    for choice in cartesian(*lifts):
        S = generated_subring(R, (R.one,) + tuple(choice))
        if len(S) == target and _is_complement(R, S, J):
            found[S.elements] = S
    comps = sorted(found.values(), key=SubsetAlgebra.sort_key)
    for S in comps:
        if R.one not in S.members:
            raise AssertionError("complement without the identity")
        if sorted(qmap[s] for s in S.elements) != list(range(Q.order)):
            raise AssertionError("complement does not map onto R/J")
    orbit = one_plus_J_orbit(R, comps[0])
    if [S.elements for S in orbit] != [S.elements for S in comps]:
        raise AssertionError("complements are not a single 1+J orbit")
    return comps


def complements_by_lattice(R: FiniteRing):
    """Independent route: filter the full subring lattice."""
    J = jacobson_radical(R).J
    return [S for S in all_subrings(R) if len(S) * len(J) == R.order and _is_complement(R, S, J)]


def conjugate(R: FiniteRing, S, u) -> SubsetAlgebra:
    """u^-1 S u as a subring."""
    inv = R.inverses.get(u)
    if inv is None:
        raise NotAUnit(f"{R.format_element(u)} is not a unit of {R.name}")
    mul = R.mul_rows
    elems = {mul[mul[inv][s]][u] for s in getattr(S, "elements", S)}
    return subset_algebra(R, elems)


def one_plus_J_orbit(R: FiniteRing, S):
    J = jacobson_radical(R).J
    add = R.add_rows
    seen = {}
    for x in J.elements:
        T = conjugate(R, S, add[R.one][x])
        seen.setdefault(T.elements, T)
    return sorted(seen.values(), key=SubsetAlgebra.sort_key)


# -- semisimple profile -------------------------------------------------------------------

@dataclass
class FieldComponent:
    idempotent: int
    field_order: int
    field_elements: tuple
    eJ_order: int
    dim: int


@dataclass
class SemisimpleProfile:
    components: list

    @property
    def n(self):
        return len(self.components)

    @property
    def idempotents(self):
        return [c.idempotent for c in self.components]

    @property
    def field_orders(self):
        return [c.field_order for c in self.components]

    @property
    def Lambda(self):
        return [i for i, c in enumerate(self.components) if c.eJ_order > 1]

    @property
    def Lambda2(self):
        return [i for i, c in enumerate(self.components) if c.dim >= 2]

    @property
    def Lambda0(self):
        return [i for i, c in enumerate(self.components) if c.eJ_order == 1]

    def dims(self):
        return {i: self.components[i].dim for i in self.Lambda}


def _exact_log(n, base):
    d = round(log(n, base))
    for cand in (d - 1, d, d + 1):
        if cand >= 0 and base ** cand == n:
            return cand
    raise AssertionError(f"{n} is not a power of {base}")


def primitive_idempotents(R, S: SubsetAlgebra):
    mul = R.mul_rows
    idem = [e for e in S.elements if e != 0 and mul[e][e] == e]
    prim = [e for e in idem if not any(f != e and mul[e][f] == f for f in idem)]
    return sorted(prim)


def semisimple_profile(R: FiniteRing, S: SubsetAlgebra = None) -> SemisimpleProfile:
    """Primitive idempotents of a commutative complement S and the data
    (|F_i|, dim of e_i J over F_i) describing how each field acts on J."""
    rad = jacobson_radical(R)
    J = rad.J
    if S is None:
        S = wedderburn_complements(R)[0]
    if not (S.is_subring and _is_complement(R, S, J)):
        raise NotAComplement("S is not a complement of the radical")
    mul = R.mul_rows
    if any(mul[a][b] != mul[b][a] for a in S.elements for b in S.elements):
        raise NotCommutative("profile needs a commutative complement")
    if len(ideal_product(R, J, J)) > 1:
        raise HypothesisViolated("J^2 = 0")
    prim = primitive_idempotents(R, S)
    total = 0
    for i, e in enumerate(prim):
        total = R.add(total, e)
        for f in prim[i + 1:]:
            if mul[e][f] != 0:
                raise AssertionError("primitive idempotents are not orthogonal")
    if total != R.one:
        raise AssertionError("primitive idempotents do not sum to 1")
    comps = []
    for e in prim:
        F = sorted({mul[e][s] for s in S.elements})
        nonzero = [a for a in F if a]
        if any(mul[a][b] == 0 for a in nonzero for b in nonzero):
            raise AssertionError("e S has zero divisors")
        eJ = {mul[e][x] for x in J.elements}
        d = _exact_log(len(eJ), len(F)) if len(eJ) > 1 else 0
        comps.append(FieldComponent(e, len(F), tuple(F), len(eJ), d))
    return SemisimpleProfile(comps)


# -- complements inside one maximal subring --------------------------------------------------

@dataclass
class ComplementHull:
    maximal: SubsetAlgebra | None
    A: SubsetAlgebra
    K: SubsetAlgebra
    complements: list


def grow_to_maximal(R, T: SubsetAlgebra) -> SubsetAlgebra:
    """Greedily enlarge a proper subring to a maximal one (one pass suffices:
    an element rejected once is rejected forever)."""
    cur = Closure.zero(R).adjoin(*T.elements)
    for x in range(R.order):
        if x in cur.members:
            continue
        nxt = cur.adjoin(x)
        if len(nxt.members) < R.order:
            cur = nxt
    return generated_subring(R, cur.gens)


def complements_in_one_maximal(R: FiniteRing) -> ComplementHull:
    rad = jacobson_radical(R)
    if len(ideal_product(R, rad.J, rad.J)) > 1:
        raise HypothesisViolated("J^2 = 0")
    if not rad.quotient.is_commutative:
        raise HypothesisViolated("R/J commutative")
    comps = wedderburn_complements(R)
    union = sorted(set().union(*(S.members for S in comps)))
    A = generated_subring(R, union)
    Asub, embed = unital_subring(R, A.elements, R.one, name=f"<S(R)> in {R.name}")
    KA = jacobson_radical(Asub).J
    K = subset_algebra(R, [embed[x] for x in KA.elements])
    M = grow_to_maximal(R, A) if len(A) < R.order else None
    return ComplementHull(M, A, K, comps)


def ideal_of(R, elems):
    return ideal_generated_by(R, elems)
