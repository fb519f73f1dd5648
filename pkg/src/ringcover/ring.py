"""Finite unital rings presented by additive generators and structure constants.

An element is a coordinate vector (c_1, ..., c_k) with c_i in Z/m_i.  Its
dense index is the mixed-radix number sum c_i * stride_i with the first
coordinate most significant, so index 0 is always the zero element.
"""
from __future__ import annotations

import json
import random
from dataclasses import dataclass
from functools import cached_property
from math import gcd, prod

import numpy as np

from .abelian import Section
from .errors import (AxiomViolation, BoundExceeded, MalformedSpec, NotAnIdeal,
                     SearchBoundExceeded)

TABLE_BOUND = 4096
EXHAUSTIVE_AXIOM_BOUND = 64
SAMPLED_TRIPLES = 3000
ISOMORPHISM_BOUND = 256


@dataclass(frozen=True)
class RingSpec:
    name: str
    generator_orders: tuple
    table: tuple
    unity: tuple

    @classmethod
    def build(cls, name, generator_orders, table, unity):
        orders = tuple(int(m) for m in generator_orders)
        k = len(orders)
        try:
            tab = tuple(tuple(tuple(int(c) for c in table[i][j]) for j in range(k))
                        for i in range(k))
        except (IndexError, TypeError) as exc:
            raise MalformedSpec(f"table must be {k}x{k} coordinate vectors") from exc
        if len(table) != k or any(len(row) != k for row in table):
            raise MalformedSpec(f"table must be {k}x{k}")
        for i in range(k):
            for j in range(k):
                if len(tab[i][j]) != k:
                    raise MalformedSpec(f"table entry ({i},{j}) has length {len(tab[i][j])}, expected {k}")
        unity = tuple(int(c) for c in unity)
        if len(unity) != k:
            raise MalformedSpec(f"unity has length {len(unity)}, expected {k}")
        if any(m < 2 for m in orders):
            raise MalformedSpec("generator orders must be >= 2")
        tab = tuple(tuple(tuple(c % orders[t] for t, c in enumerate(v)) for v in row) for row in tab)
        unity = tuple(c % orders[t] for t, c in enumerate(unity))
        return cls(name, orders, tab, unity)

    def to_dict(self):
        return {
            "name": self.name,
            "generator_orders": list(self.generator_orders),
            "table": [[list(v) for v in row] for row in self.table],
            "unity": list(self.unity),
        }

    @classmethod
    def from_dict(cls, data):
        missing = {"generator_orders", "table", "unity"} - set(data)
        if missing:
            raise MalformedSpec(f"ring spec is missing {sorted(missing)}")
        return cls.build(data.get("name", "R"), data["generator_orders"], data["table"], data["unity"])

    @classmethod
    def load(cls, path):
        with open(path) as fh:
            try:
                data = json.load(fh)
            except json.JSONDecodeError as exc:
                raise MalformedSpec(f"{path}: {exc}") from exc
        return cls.from_dict(data)


class FiniteRing:
    """A validated finite unital ring.  Immutable after construction."""

    def __init__(self, spec: RingSpec):
        self.spec = spec
        self.name = spec.name
        self.orders = spec.generator_orders
        self.k = len(self.orders)
        self.order = prod(self.orders)
        strides, s = [], 1
        for m in reversed(self.orders):
            strides.append(s)
            s *= m
        self.strides = tuple(reversed(strides))
        self._T = np.array(spec.table, dtype=np.int64).reshape(self.k, self.k, self.k)
        self._mod = np.array(self.orders, dtype=np.int64)
        self.zero = 0
        self.one = self.index(spec.unity)
        self.basis = [self.index(tuple(int(i == j) for j in range(self.k))) for i in range(self.k)]

    def __repr__(self):
        return f"FiniteRing({self.name!r}, order={self.order})"

    # -- coordinates ------------------------------------------------------
    def index(self, coords) -> int:
        return sum((int(c) % m) * s for c, m, s in zip(coords, self.orders, self.strides))

    def coords(self, i: int) -> tuple:
        return tuple(int(c) for c in self.coord_array[i])

    @cached_property
    def coord_array(self):
        idx = np.arange(self.order, dtype=np.int64)
        out = np.empty((self.order, self.k), dtype=np.int64)
        for t, (m, s) in enumerate(zip(self.orders, self.strides)):
            out[:, t] = (idx // s) % m
        return out

    def _to_index(self, arr):
        return (arr % self._mod) @ np.array(self.strides, dtype=np.int64)

    def _mul_coords(self, a, b):
        """Bilinear product of coordinate arrays of shape (..., k)."""
        return np.einsum("...i,...j,ijt->...t", a, b, self._T) % self._mod

    # -- tables -----------------------------------------------------------
    @cached_property
    def add_table(self):
        if self.order > TABLE_BOUND:
            raise BoundExceeded("addition table", self.order, TABLE_BOUND)
        C = self.coord_array
        out = np.empty((self.order, self.order), dtype=np.int32)
        for lo in range(0, self.order, 256):
            chunk = C[lo:lo + 256, None, :] + C[None, :, :]
            out[lo:lo + 256] = self._to_index(chunk)
        return out

    @cached_property
    def mul_table(self):
        if self.order > TABLE_BOUND:
            raise BoundExceeded("multiplication table", self.order, TABLE_BOUND)
        C = self.coord_array
        out = np.empty((self.order, self.order), dtype=np.int32)
        for lo in range(0, self.order, 256):
            X = np.einsum("ai,ijt->ajt", C[lo:lo + 256], self._T)
            P = np.einsum("ajt,bj->abt", X, C)
            out[lo:lo + 256] = self._to_index(P)
        return out

    @cached_property
    def add_rows(self):
        return self.add_table.tolist()

    @cached_property
    def mul_rows(self):
        return self.mul_table.tolist()

    @cached_property
    def neg(self):
        return [self.index(tuple(-c for c in self.coords(i))) for i in range(self.order)]

    # -- arithmetic on indices ----------------------------------------------
    def add(self, a, b):
        if self.order <= TABLE_BOUND:
            return self.add_rows[a][b]
        return self.index(tuple(x + y for x, y in zip(self.coords(a), self.coords(b))))

    def sub(self, a, b):
        return self.add(a, self.neg[b] if self.order <= TABLE_BOUND else self.index(tuple(-c for c in self.coords(b))))

    def mul(self, a, b):
        if self.order <= TABLE_BOUND:
            return self.mul_rows[a][b]
        pc = self._mul_coords(np.array(self.coords(a)), np.array(self.coords(b)))
        return self.index(pc)

    def smul(self, n, a):
        return self.index(tuple(n * c for c in self.coords(a)))

    def additive_order(self, a):
        c = self.coords(a)
        o = 1
        for x, m in zip(c, self.orders):
            o = o * (m // gcd(x, m)) // gcd(o, m // gcd(x, m))
        return o

    def element(self, i):
        return RingElement(self, int(i))

    def __iter__(self):
        return iter(range(self.order))

    @cached_property
    def characteristic(self):
        return self.additive_order(self.one)

    @cached_property
    def is_commutative(self):
        T = self._T
        return bool(np.all((T - T.transpose(1, 0, 2)) % self._mod == 0))

    @cached_property
    def inverses(self):
        """Map unit -> two-sided inverse."""
        rows, one, inv = self.mul_rows, self.one, {}
        for u in range(self.order):
            row = rows[u]
            try:
                v = row.index(one)
            except ValueError:
                continue
            if rows[v][u] != one:
                raise AxiomViolation("finite one-sided inverse is two-sided", (u, v))
            inv[u] = v
        return inv

    @cached_property
    def units(self):
        return frozenset(self.inverses)

    def power(self, a, n):
        r = self.one
        for _ in range(n):
            r = self.mul(r, a)
        return r

    def is_nilpotent(self, a):
        x = a
        for _ in range(self.order + 1):
            if x == 0:
                return True
            x = self.mul(x, a)
        return False

    def format_element(self, i):
        return "(" + ",".join(str(c) for c in self.coords(i)) + ")"


@dataclass(frozen=True)
class RingElement:
    ring: FiniteRing
    index: int

    @property
    def coords(self):
        return self.ring.coords(self.index)

    def _wrap(self, other):
        if isinstance(other, RingElement):
            return other.index
        return self.ring.smul(int(other), self.ring.one)

    def __add__(self, other):
        return RingElement(self.ring, self.ring.add(self.index, self._wrap(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return RingElement(self.ring, self.ring.sub(self.index, self._wrap(other)))

    def __rsub__(self, other):
        return RingElement(self.ring, self.ring.sub(self._wrap(other), self.index))

    def __mul__(self, other):
        return RingElement(self.ring, self.ring.mul(self.index, self._wrap(other)))

    def __rmul__(self, other):
        return RingElement(self.ring, self.ring.mul(self._wrap(other), self.index))

    def __neg__(self):
        return RingElement(self.ring, self.ring.neg[self.index])

    def __pow__(self, n):
        return RingElement(self.ring, self.ring.power(self.index, n))

    def is_unit(self):
        return self.index in self.ring.units

    def inverse(self):
        return RingElement(self.ring, self.ring.inverses[self.index])

    def __repr__(self):
        return f"{self.ring.name}{self.ring.format_element(self.index)}"


# -- construction and validation ---------------------------------------------

def _check_axioms(R: FiniteRing, rng):
    k, T, mod = R.k, R._T, R._mod
    eye = np.eye(k, dtype=np.int64)
    # bilinear extension is well defined
    for i in range(k):
        for j in range(k):
            v = T[i, j]
            for m in (R.orders[i], R.orders[j]):
                if np.any((m * v) % mod):
                    raise AxiomViolation("distributivity", (R.basis[i], R.basis[j], m))
    # associativity on basis triples is exact by trilinearity
    for i in range(k):
        for j in range(k):
            ij = T[i, j]
            for l in range(k):
                left = R._mul_coords(ij, eye[l])
                right = R._mul_coords(eye[i], T[j, l])
                if np.any((left - right) % mod):
                    raise AxiomViolation("associativity", (R.basis[i], R.basis[j], R.basis[l]))
    one = np.array(R.spec.unity, dtype=np.int64)
    for i in range(k):
        if np.any((R._mul_coords(one, eye[i]) - eye[i]) % mod):
            raise AxiomViolation("left unit", (R.one, R.basis[i]))
        if np.any((R._mul_coords(eye[i], one) - eye[i]) % mod):
            raise AxiomViolation("right unit", (R.basis[i], R.one))
    if R.order > TABLE_BOUND:
        return
    M = R.mul_table
    A = R.add_table
    n = R.order
    if n <= EXHAUSTIVE_AXIOM_BOUND:
        a, b, c = np.meshgrid(np.arange(n), np.arange(n), np.arange(n), indexing="ij")
        a, b, c = a.ravel(), b.ravel(), c.ravel()
    else:
        a = rng.integers(0, n, SAMPLED_TRIPLES)
        b = rng.integers(0, n, SAMPLED_TRIPLES)
        c = rng.integers(0, n, SAMPLED_TRIPLES)
    for law, lhs, rhs in (
        ("associativity", M[M[a, b], c], M[a, M[b, c]]),
        ("left distributivity", M[a, A[b, c]], A[M[a, b], M[a, c]]),
        ("right distributivity", M[A[a, b], c], A[M[a, c], M[b, c]]),
    ):
        bad = np.nonzero(lhs != rhs)[0]
        if bad.size:
            t = bad[0]
            raise AxiomViolation(law, (int(a[t]), int(b[t]), int(c[t])))
    if np.any(M[R.one, :] != np.arange(n)) or np.any(M[:, R.one] != np.arange(n)):
        raise AxiomViolation("unit law", (R.one,))


def make_ring(spec: RingSpec, *, seed=0) -> FiniteRing:
    """Validate ``spec`` and return the ring it presents.

    Basis-level checks (well-definedness of the bilinear extension,
    associativity on generator triples, unit law on generators) are exact.
    Element-level checks run on all triples for small rings and on a seeded
    random sample otherwise.
    """
    if not isinstance(spec, RingSpec):
        raise MalformedSpec("expected a RingSpec")
    R = FiniteRing(spec)
    _check_axioms(R, np.random.default_rng(seed))
    return R


def ring_from_table(name, orders, table, unity) -> FiniteRing:
    return make_ring(RingSpec.build(name, orders, table, unity))


# -- subgroup helpers ---------------------------------------------------------

def additive_closure(R: FiniteRing, elems):
    """Additive subgroup generated by ``elems`` as (sorted list, generators)."""
    add = R.add_rows
    members = {0}
    order = [0]
    gens = []
    for g in elems:
        if g in members:
            continue
        gens.append(g)
        cur = list(order)
        t = g
        while t not in members:
            row = add[t]
            for h in cur:
                s = row[h]
                members.add(s)
                order.append(s)
            t = add[t][g]
    return sorted(members), gens


def is_ideal(R: FiniteRing, elems) -> bool:
    S = set(elems)
    if 0 not in S:
        return False
    add, mul, neg = R.add_rows, R.mul_rows, R.neg
    for x in S:
        if neg[x] not in S:
            return False
    gens = additive_closure(R, S)[1]
    for x in gens:
        for y in gens:
            if add[x][y] not in S:
                return False
    for x in gens:
        for b in R.basis:
            if mul[b][x] not in S or mul[x][b] not in S:
                return False
    return True


def _members(I):
    return sorted(getattr(I, "elements", I))


def quotient(R: FiniteRing, I, name=None):
    """Return ``(R/I, qmap)`` where ``qmap[i]`` is the index of i + I in R/I."""
    elems = _members(I)
    if not is_ideal(R, elems):
        raise NotAnIdeal(f"subset of size {len(elems)} is not a two-sided ideal of {R.name}")
    _, gens = additive_closure(R, elems)
    sec = Section(R.orders, [tuple(int(i == j) for j in range(R.k)) for i in range(R.k)],
                  [R.coords(g) for g in gens])
    reps = [R.index(g) for g in sec.generators]
    table = [[sec.coords(R.coords(R.mul(a, b))) for b in reps] for a in reps]
    unity = sec.coords(R.coords(R.one))
    label = name or (R.name if len(elems) == 1 else f"{R.name}/I{len(elems)}")
    Q = make_ring(RingSpec.build(label, sec.orders, table, unity))
    qmap = [Q.index(sec.coords(R.coords(i))) for i in range(R.order)]
    if len(elems) * Q.order != R.order:
        raise AssertionError("quotient order mismatch")
    return Q, qmap


def unital_subring(R: FiniteRing, elems, unity, name=None):
    """Present a subring with its own identity ``unity`` as a FiniteRing.

    Returns ``(S, embed)`` with ``embed[j]`` the index in R of element j of S.
    """
    elems = _members(elems)
    _, gens = additive_closure(R, elems)
    sec = Section(R.orders, [R.coords(g) for g in gens])
    reps = [R.index(g) for g in sec.generators]
    table = [[sec.coords(R.coords(R.mul(a, b))) for b in reps] for a in reps]
    S = make_ring(RingSpec.build(name or f"{R.name}|sub{len(elems)}", sec.orders, table,
                                 sec.coords(R.coords(unity))))
    embed = [0] * S.order
    for e in elems:
        embed[S.index(sec.coords(R.coords(e)))] = e
    if S.order != len(elems):
        raise AssertionError("subring order mismatch")
    return S, embed


def product(rings, name=None) -> FiniteRing:
    """Direct product with concatenated generator lists."""
    rings = list(rings)
    if not rings:
        raise MalformedSpec("product of an empty list")
    if len(rings) == 1 and name is None:
        return rings[0]
    orders, offsets = [], []
    for R in rings:
        offsets.append(len(orders))
        orders.extend(R.orders)
    k = len(orders)
    table = [[[0] * k for _ in range(k)] for _ in range(k)]
    unity = [0] * k
    for R, off in zip(rings, offsets):
        for i in range(R.k):
            for j in range(R.k):
                for t, c in enumerate(R.spec.table[i][j]):
                    table[off + i][off + j][off + t] = c
        for t, c in enumerate(R.spec.unity):
            unity[off + t] = c
    label = name or "Prod(" + ",".join(R.name for R in rings) + ")"
    return make_ring(RingSpec.build(label, orders, table, unity))


def unit_set(R: FiniteRing):
    return R.units


def is_commutative(R: FiniteRing) -> bool:
    return R.is_commutative


# -- isomorphism --------------------------------------------------------------

def generated_subring_elems(R: FiniteRing, seed):
    """Least subring containing ``seed`` as a set of indices (no unity forced)."""
    from .lattice import closure
    return closure(R, seed)[0]


def ring_generators(R: FiniteRing):
    """A small set X with <X> = R, chosen greedily by largest closure."""
    from .lattice import Closure
    cur = Closure.zero(R)
    gens = []
    while len(cur.elements) < R.order:
        best = None
        for x in range(R.order):
            if x in cur.members:
                continue
            c = cur.adjoin(x)
            if best is None or len(c.elements) > len(best[1].elements):
                best = (x, c)
                if len(c.elements) == R.order:
                    break
        gens.append(best[0])
        cur = best[1]
    return gens


def _element_signature(R, x):
    mul = R.mul_rows
    sq = mul[x][x]
    nil = R.is_nilpotent(x)
    return (R.additive_order(x), sq == x, nil, x in R.units,
            R.additive_order(sq), mul[x][R.one] == x)


def _ring_invariants(R):
    sigs = {}
    for x in range(R.order):
        s = _element_signature(R, x)
        sigs[s] = sigs.get(s, 0) + 1
    return (R.order, R.characteristic, R.is_commutative, len(R.units),
            tuple(sorted(sigs.items())))


def is_isomorphic(R1: FiniteRing, R2: FiniteRing, bound=ISOMORPHISM_BOUND):
    """Return ``(True, phi)`` with phi a list mapping R1 indices to R2, or ``(False, None)``."""
    for R in (R1, R2):
        if R.order > bound:
            raise SearchBoundExceeded("isomorphism search", R.order, bound)
    if R1.order != R2.order or R1.characteristic != R2.characteristic:
        return False, None
    if _ring_invariants(R1) != _ring_invariants(R2):
        return False, None
    gens = ring_generators(R1)
    sig2 = {}
    for y in range(R2.order):
        sig2.setdefault(_element_signature(R2, y), []).append(y)
    cands = [sig2.get(_element_signature(R1, g), []) for g in gens]
    a1, m1 = R1.add_rows, R1.mul_rows
    a2, m2 = R2.add_rows, R2.mul_rows

    def extend(phi, x, y):
        # close phi under + and * after adding x -> y; None on conflict
        phi = dict(phi)
        if x in phi:
            return phi if phi[x] == y else None
        phi[x] = y
        image = set(phi.values())
        if len(image) != len(phi):
            return None
        frontier = [x]
        while frontier:
            new = []
            keys = list(phi)
            for a in frontier:
                for b in keys:
                    for u, v in ((a1[a][b], a2[phi[a]][phi[b]]),
                                 (m1[a][b], m2[phi[a]][phi[b]]),
                                 (m1[b][a], m2[phi[b]][phi[a]])):
                        w = phi.get(u)
                        if w is None:
                            if v in image:
                                return None
                            phi[u] = v
                            image.add(v)
                            new.append(u)
                            keys.append(u)
                        elif w != v:
                            return None
            frontier = new
        return phi

    base = extend({}, 0, 0)
    base = extend(base, R1.one, R2.one) if base is not None else None
    if base is None:
        return False, None

    def search(i, phi):
        if i == len(gens):
            return phi if len(phi) == R1.order else None
        for y in cands[i]:
            nxt = extend(phi, gens[i], y)
            if nxt is not None:
                res = search(i + 1, nxt)
                if res is not None:
                    return res
        return None

    phi = search(0, base)
    if phi is None:
        return False, None
    return True, [phi[i] for i in range(R1.order)]


def random_elements(R, n, seed=0):
    rng = random.Random(seed)
    return [rng.randrange(R.order) for _ in range(n)]
