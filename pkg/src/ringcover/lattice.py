"""Subrings, ideals and their lattices by bottom-up closure.

A subring here is an additive subgroup closed under multiplication; it need
not contain 1.  Closures keep a list of additive generators G: the span of G
is multiplicatively closed exactly when every product of two members of G
lies in it, and it is a two-sided ideal exactly when b*g and g*b lie in it
for every additive generator b of the ring.  Both are checked incrementally
as generators are adjoined.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from math import gcd

from .errors import LatticeBoundExceeded, NotAnIdeal
from .ring import FiniteRing, additive_closure

LATTICE_BOUND = 256


class Closure:
    """An additive span closed under products (``kind='ring'``) or under
    multiplication by the ring on both sides (``kind='ideal'``)."""

    __slots__ = ("ring", "kind", "members", "elements", "gens")

    def __init__(self, ring, kind, members, elements, gens):
        self.ring, self.kind = ring, kind
        self.members, self.elements, self.gens = members, elements, gens

    @classmethod
    def zero(cls, R, kind="ring"):
        return cls(R, kind, {0}, [0], [])

    def adjoin(self, *xs):
        R = self.ring
        add, mul = R.add_rows, R.mul_rows
        members = set(self.members)
        elements = list(self.elements)
        gens = list(self.gens)
        queue = list(xs)
        ideal = self.kind == "ideal"
        basis = R.basis
        while queue:
            g = queue.pop()
            if g in members:
                continue
            cur = list(elements)
            t = g
            while t not in members:
                row = add[t]
                for h in cur:
                    s = row[h]
                    members.add(s)
                    elements.append(s)
                t = row[g]
            gens.append(g)
            if ideal:
                for b in basis:
                    queue.append(mul[b][g])
                    queue.append(mul[g][b])
            else:
                for h in gens:
                    queue.append(mul[g][h])
                    queue.append(mul[h][g])
        return Closure(R, self.kind, members, elements, gens)

    def key(self):
        return frozenset(self.members)


def closure(R, seed, kind="ring"):
    c = Closure.zero(R, kind).adjoin(*seed)
    return sorted(c.members), c


@dataclass(frozen=True, eq=False)
class SubsetAlgebra:
    """A subset of a ring with its closure flags."""

    ring: FiniteRing = field(repr=False)
    elements: tuple
    additive: bool
    mult_closed: bool
    left_ideal: bool
    right_ideal: bool
    contains_unity: bool

    def __eq__(self, other):
        return isinstance(other, SubsetAlgebra) and self.ring is other.ring and self.elements == other.elements

    def __hash__(self):
        return hash(self.elements)

    def __len__(self):
        return len(self.elements)

    def __contains__(self, x):
        return x in self.members

    def __iter__(self):
        return iter(self.elements)

    @cached_property
    def members(self):
        return frozenset(self.elements)

    @cached_property
    def mask(self):
        m = 0
        for e in self.elements:
            m |= 1 << e
        return m

    @property
    def is_subring(self):
        return self.additive and self.mult_closed

    @property
    def is_ideal(self):
        return self.additive and self.left_ideal and self.right_ideal

    @property
    def is_proper(self):
        return len(self.elements) < self.ring.order

    def sort_key(self):
        return (len(self.elements), self.elements)

    def issubset(self, other):
        return self.members <= other.members

    def __repr__(self):
        kind = "ideal" if self.is_ideal else "subring" if self.is_subring else "subset"
        return f"<{kind} of {self.ring.name}, size {len(self.elements)}>"


def subset_algebra(R: FiniteRing, elems) -> SubsetAlgebra:
    """Wrap ``elems`` and compute its closure flags exactly."""
    elems = tuple(sorted(set(elems)))
    S = frozenset(elems)
    add, mul, neg = R.add_rows, R.mul_rows, R.neg
    additive = 0 in S and all(neg[x] in S for x in elems)
    gens = additive_closure(R, elems)[1] if additive else []
    if additive:
        additive = all(add[x][y] in S for x in gens for y in elems)
    if additive:
        mult = all(mul[x][y] in S for x in gens for y in gens)
        left = all(mul[b][x] in S for b in R.basis for x in gens)
        right = all(mul[x][b] in S for b in R.basis for x in gens)
    else:
        mult = all(mul[x][y] in S for x in elems for y in elems)
        left = all(mul[r][x] in S for r in range(R.order) for x in elems)
        right = all(mul[x][r] in S for r in range(R.order) for x in elems)
    return SubsetAlgebra(R, elems, additive, mult, left, right, R.one in S)


def _from_closure(c: Closure) -> SubsetAlgebra:
    R = c.ring
    elems = tuple(sorted(c.members))
    if c.kind == "ideal":
        return SubsetAlgebra(R, elems, True, True, True, True, R.one in c.members)
    S = c.members
    mul = R.mul_rows
    left = all(mul[b][g] in S for b in R.basis for g in c.gens)
    right = all(mul[g][b] in S for b in R.basis for g in c.gens)
    return SubsetAlgebra(R, elems, True, True, left, right, R.one in S)


def generated_subring(R, seed) -> SubsetAlgebra:
    return _from_closure(Closure.zero(R, "ring").adjoin(*seed))


def ideal_generated_by(R, seed) -> SubsetAlgebra:
    return _from_closure(Closure.zero(R, "ideal").adjoin(*seed))


def whole_ring(R) -> SubsetAlgebra:
    return SubsetAlgebra(R, tuple(range(R.order)), True, True, True, True, True)


def zero_ideal(R) -> SubsetAlgebra:
    return SubsetAlgebra(R, (0,), True, True, True, True, R.order == 1)


def _check_bound(R, bound):
    if R.order > bound:
        raise LatticeBoundExceeded("subring lattice", R.order, bound)


class _Lattice:
    """Result of one bottom-up enumeration: every closure reachable from
    ``start`` by adjoining elements of ``universe``, plus which of them have
    only the top element as a one-step extension."""

    def __init__(self, R, kind, start, universe):
        add = R.add_rows
        top_size = len(universe)
        found = {start.key(): start}
        near_top = {}
        queue = [start]
        while queue:
            A = queue.pop()
            covered = set(A.members)
            only_top = True
            for x in universe:
                if x in covered:
                    continue
                # <A, x> = <A, c*x + a> for a in A and c a unit mod ord(x)
                mult, c, step = x, 1, []
                while mult not in A.members:
                    step.append((c, mult))
                    mult = add[mult][x]
                    c += 1
                o = c
                for c, t in step:
                    if gcd(c, o) == 1:
                        row = add[t]
                        for a in A.elements:
                            covered.add(row[a])
                B = A.adjoin(x)
                if len(B.members) < top_size:
                    only_top = False
                key = B.key()
                if key not in found:
                    found[key] = B
                    queue.append(B)
            near_top[A.key()] = only_top and len(A.members) < top_size
        self.closures = found
        self.near_top = near_top

    def members(self):
        return sorted((_from_closure(c) for c in self.closures.values()), key=SubsetAlgebra.sort_key)

    def maximal(self):
        out = [_from_closure(self.closures[k]) for k, flag in self.near_top.items() if flag]
        return sorted(out, key=SubsetAlgebra.sort_key)


_cache = {}


def _lattice(R, kind, bound, within=None):
    _check_bound(R, bound)
    key = (id(R), kind, within)
    hit = _cache.get(key)
    if hit is not None and hit[0] is R:
        return hit[1]
    universe = list(range(R.order)) if within is None else list(within)
    lat = _Lattice(R, kind, Closure.zero(R, kind), universe)
    _cache[key] = (R, lat)
    return lat


def clear_cache():
    _cache.clear()


def all_subrings(R, bound=LATTICE_BOUND):
    """Every subring of R exactly once, ordered by size then element indices."""
    return _lattice(R, "ring", bound).members()


def maximal_subrings(R, bound=LATTICE_BOUND):
    """Proper subrings that are maximal under inclusion among proper subrings."""
    return _lattice(R, "ring", bound).maximal()


def two_sided_ideals(R, bound=LATTICE_BOUND):
    return _lattice(R, "ideal", bound).members()


def minimal_ideals(R, bound=LATTICE_BOUND):
    """Minimal nonzero two-sided ideals."""
    return [I for I in two_sided_ideals(R, bound) if len(I) > 1
            and not any(1 < len(K) < len(I) and K.members <= I.members for K in two_sided_ideals(R, bound))]


def maximal_subideals(R, J, bound=LATTICE_BOUND):
    """Two-sided ideals of R properly inside the ideal J, maximal with that property."""
    elems = tuple(sorted(getattr(J, "elements", J)))
    sa = J if isinstance(J, SubsetAlgebra) else subset_algebra(R, elems)
    if not sa.is_ideal:
        raise NotAnIdeal("maximal_subideals needs a two-sided ideal")
    if len(elems) == 1:
        return []
    return _lattice(R, "ideal", bound, within=elems).maximal()


def subideals(R, J, bound=LATTICE_BOUND):
    elems = tuple(sorted(getattr(J, "elements", J)))
    return _lattice(R, "ideal", bound, within=elems).members()


def intersection(A: SubsetAlgebra, B: SubsetAlgebra) -> SubsetAlgebra:
    return subset_algebra(A.ring, A.members & B.members)


def ideal_sum(R, I, K) -> SubsetAlgebra:
    return ideal_generated_by(R, list(I.elements) + list(K.elements))


def ideal_product(R, I, K) -> SubsetAlgebra:
    """Additive span of all products i*k; a two-sided ideal when I and K are."""
    mul = R.mul_rows
    prods = {mul[a][b] for a in I.elements for b in K.elements}
    elems, _ = additive_closure(R, sorted(prods))
    return SubsetAlgebra(R, tuple(elems), True, True, True, True, R.one in elems)
