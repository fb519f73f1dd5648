"""Built-in catalog: named constructor rings plus seeded random rings.

Random rings come from two sources, and both pass through ``make_ring``
validation.  The first is rejection sampling: tables over F_p whose first
generator is forced to be the unity, with the other products drawn at
random.  The second is a random change of F_p-basis applied to an incidence
algebra of a random poset or to a random polynomial quotient.  The second
source yields structure constants that look nothing like the constructor
output while the isomorphism type stays known.
"""
from __future__ import annotations

import random
from dataclasses import dataclass

from sympy import Matrix

from .constructors import construct, pattern_algebra, zmod
from .errors import AxiomViolation
from .ring import FiniteRing, RingSpec, make_ring

DEFAULT_SEED = 20240611
DEFAULT_RANDOM = 8
RANDOM_MAX_ORDER = 64

NAMED = [
    "F(2)", "F(3)", "F(4)", "F(5)", "F(8)", "F(9)", "F(16)",
    "Zmod(4)", "Zmod(6)", "Zmod(8)", "Zmod(9)", "Zmod(12)",
    "Prod(F(2),F(2))", "Prod(F(2),F(2),F(2))", "Prod(F(2),F(2),F(2),F(2))",
    "Prod(F(3),F(3))", "Prod(F(3),F(3),F(3))", "Prod(F(4),F(4))", "Prod(F(4),F(4),F(4))",
    "Prod(F(2),F(4))", "Prod(F(2),F(2),F(4))", "Prod(F(2),F(3))", "Prod(F(2),F(2),F(3))",
    "Prod(F(5),F(5))", "Prod(Zmod(4),F(2))", "Prod(Zmod(4),Zmod(4))", "Prod(Zmod(6),Zmod(6))",
    "Prod(Zmod(4),Zmod(3),Zmod(3),Zmod(3))",
    "PolyQuot(F(2),[0,0,1])", "PolyQuot(F(2),[0,0,0,1])", "PolyQuot(F(3),[0,0,1])",
    "PolyQuot(F(2),[1,0,0,1])", "PolyQuot(Zmod(4),[1,1,1])", "PolyQuot(F(2),[0,0,0,0,1])",
    "T3(F(2))", "T3(F(3))", "T3(F(4))", "T3(F(5))", "T3(Zmod(4))",
    "Prod(F(2),T3(F(2)))", "Prod(F(3),T3(F(2)))", "Prod(T3(F(2)),T3(F(2)))", "Prod(F(4),T3(F(2)))",
    "M(2,F(2))", "M(2,F(3))", "M(2,F(4))", "M(2,Zmod(4))",
    "Tri(2,F(2))", "Tri(2,F(3))", "Tri(2,F(4))", "Tri(2,F(5))", "Tri(3,F(2))", "Tri(2,Zmod(4))",
    "Prod(F(2),Tri(2,F(2)))", "Prod(F(2),M(2,F(2)))",
    "GroupAlg(F(2),C2)", "GroupAlg(F(2),C3)", "GroupAlg(F(2),C4)", "GroupAlg(F(3),C2)",
    "GroupAlg(F(3),C3)", "GroupAlg(F(2),S3)", "GroupAlg(F(2),D8)",
    "Trunc(GroupAlg(F(2),D8),2)", "Trunc(GroupAlg(F(2),D8),3)", "Reduce(GroupAlg(F(2),S3))",
]

@dataclass
class CatalogEntry:
    name: str
    kind: str
    ring: FiniteRing
    seed: int | None = None

    @property
    def order(self):
        return self.ring.order


def _inverse_mod(P, p):
    return Matrix(P).inv_mod(p)


def change_basis(R: FiniteRing, P, name) -> FiniteRing:
    """Present R on the new basis b'_i = sum_j P[i][j] b_j (R an F_p-algebra)."""
    p = R.orders[0]
    if any(m != p for m in R.orders):
        raise ValueError("basis change needs all generator orders equal to p")
    k = R.k
    Q = _inverse_mod(P, p)
    T = R.spec.table
    table = []
    for i in range(k):
        row = []
        for j in range(k):
            old = [0] * k
            for a in range(k):
                if P[i][a]:
                    for b in range(k):
                        if P[j][b]:
                            c = P[i][a] * P[j][b]
                            for t in range(k):
                                old[t] += c * T[a][b][t]
            row.append([sum(old[t] * int(Q[t, s]) for t in range(k)) % p for s in range(k)])
        table.append(row)
    unity = [sum(R.spec.unity[t] * int(Q[t, s]) for t in range(k)) % p for s in range(k)]
    return make_ring(RingSpec.build(name, R.orders, table, unity))


def _random_invertible(rng, k, p):
    while True:
        P = [[rng.randrange(p) for _ in range(k)] for _ in range(k)]
        if Matrix(P).det() % p:
            return P


def _random_poset(rng, n):
    """Random partial order on 0..n-1 compatible with the natural order."""
    rel = {(i, i) for i in range(n)}
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < 0.5:
                rel.add((i, j))
    changed = True
    while changed:
        changed = False
        for a, b in list(rel):
            for c, d in list(rel):
                if b == c and (a, d) not in rel:
                    rel.add((a, d))
                    changed = True
    return sorted(rel)


def incidence_algebra(rel, n, p, name):
    shapes = [[[int((r, c) == pair) for c in range(n)] for r in range(n)] for pair in rel]
    return pattern_algebra(zmod(p), n, shapes, name)


def _sampled_table(rng, name):
    """Rejection sampling: g_0 is the unity, other products random."""
    for _ in range(2000):
        p = rng.choice([2, 2, 3])
        k = rng.choice([2, 3]) if p == 2 else 2
        table = [[None] * k for _ in range(k)]
        for i in range(k):
            for j in range(k):
                if i == 0 or j == 0:
                    table[i][j] = [int(t == i + j) for t in range(k)]
                else:
                    table[i][j] = [rng.randrange(p) for _ in range(k)]
        spec = RingSpec.build(name, [p] * k, table, [1] + [0] * (k - 1))
        try:
            return make_ring(spec)
        except AxiomViolation:
            continue
    raise AssertionError("rejection sampling found no associative table")


def random_rings(seed=DEFAULT_SEED, count=DEFAULT_RANDOM, max_order=RANDOM_MAX_ORDER):
    """``count`` validated random rings of order at most ``max_order``."""
    rng = random.Random(seed)
    out = []
    i = 0
    while len(out) < count:
        name = f"Random({seed},{i})"
        kind = i % 3
        i += 1
        if kind == 0:
            R = _sampled_table(rng, name)
        else:
            if kind == 1:
                p = rng.choice([2, 2, 3])
                n = rng.choice([2, 3])
                rel = _random_poset(rng, n)
                base = incidence_algebra(rel, n, p, name + "/base")
            else:
                p = rng.choice([2, 3])
                deg = rng.choice([2, 3, 4]) if p == 2 else rng.choice([2, 3])
                coeffs = [rng.randrange(p) for _ in range(deg)] + [1]
                base = construct(f"PolyQuot(F({p}),[{','.join(map(str, coeffs))}])")
            if base.order > max_order:
                continue
            R = change_basis(base, _random_invertible(rng, base.k, p), name)
        if R.order <= max_order:
            out.append(CatalogEntry(name, "random", R, seed))
    return out


def named_rings(max_order=256):
    out = []
    for name in NAMED:
        R = construct(name)
        if R.order <= max_order:
            out.append(CatalogEntry(name, "named", R))
    return out


def catalog(max_order=256, seed=DEFAULT_SEED, randoms=DEFAULT_RANDOM):
    """Named rings of order <= max_order followed by the random rings."""
    entries = named_rings(max_order)
    if randoms:
        entries += [e for e in random_rings(seed, randoms) if e.order <= max_order]
    return entries


def lookup(name, seed=DEFAULT_SEED):
    if name.startswith("Random("):
        s, i = (int(x) for x in name[len("Random("):-1].split(","))
        for e in random_rings(s, i + 1):
            if e.name == name:
                return e.ring
        raise KeyError(name)
    return construct(name)
