"""Named ring families and the small expression language that builds them.

Accepted expressions::

    F(q)  F(q, [c0, c1, ..., 1])      finite field, optional explicit modulus
    Zmod(m)
    M(n, A)  Tri(n, A)  T3(A)          matrix rings over a base ring A
    Prod(R1, R2, ...)
    GroupAlg(A, G)                     G in Cn / C_n, Dm (dihedral of order m), S3, A4
    PolyQuot(A, [c0, c1, ..., 1])      A[x]/(f) for A = F(p) or Zmod(m)
    Trunc(R, k)                        R / J(R)^k
    Reduce(R)                          R / pR, then modulo the square of its radical

Polynomial coefficient lists are written constant term first.
"""
from __future__ import annotations

import os
import re

from .errors import MalformedSpec, NotPrimePower, ReducibleModulus, UnknownConstructor
from .polys import is_irreducible, least_irreducible, prime_power
from .ring import FiniteRing, RingSpec, make_ring, product

_cache: dict = {}


# -- building blocks -------------------------------------------------------------

def zmod(m, name=None) -> FiniteRing:
    if m < 2:
        raise MalformedSpec("Zmod needs m >= 2")
    return make_ring(RingSpec.build(name or f"Zmod({m})", [m], [[[1]]], [1]))


def poly_quotient(base: FiniteRing, f, name=None) -> FiniteRing:
    """base[x]/(f) for a cyclic base ring Z/m and monic f (constant term first)."""
    if base.k != 1 or base.coords(base.one) != (1,):
        raise MalformedSpec("PolyQuot base must be F(p) or Zmod(m)")
    m = base.orders[0]
    f = [c % m for c in f]
    while len(f) > 1 and f[-1] == 0:
        f.pop()
    n = len(f) - 1
    if n < 1 or f[-1] != 1:
        raise MalformedSpec("PolyQuot modulus must be monic of degree >= 1")

    def reduce(coeffs):
        c = list(coeffs) + [0] * max(0, n - len(coeffs))
        for d in range(len(c) - 1, n - 1, -1):
            lead = c[d]
            if lead:
                for i in range(n + 1):
                    c[d - n + i] = (c[d - n + i] - lead * f[i]) % m
        return [x % m for x in c[:n]]

    table = [[reduce([0] * (i + j) + [1]) for j in range(n)] for i in range(n)]
    unity = [1] + [0] * (n - 1)
    label = name or f"PolyQuot({base.name},[{','.join(map(str, f))}])"
    return make_ring(RingSpec.build(label, [m] * n, table, unity))


def field(q, modulus=None, name=None) -> FiniteRing:
    pp = prime_power(q)
    if pp is None:
        raise NotPrimePower(f"{q} is not a prime power")
    p, n = pp
    label = name or f"F({q})"
    if modulus is None:
        if n == 1:
            return zmod(p, label)
        modulus = least_irreducible(p, n)
    else:
        modulus = [c % p for c in modulus]
        if len(modulus) != n + 1 or modulus[-1] != 1:
            raise MalformedSpec(f"modulus for F({q}) must be monic of degree {n}")
        if not is_irreducible(modulus, p):
            raise ReducibleModulus(f"{modulus} is reducible over F({p})")
        if name is None:
            label = f"F({q},[{','.join(map(str, modulus))}])"
    return poly_quotient(zmod(p), modulus, label)


def pattern_algebra(A: FiniteRing, size, shapes, name) -> FiniteRing:
    """Matrices sum_s a_s * P_s over A, where the 0/1 patterns P_s have disjoint
    supports and the product of two patterns is an integer combination of
    patterns.  Matrix, triangular and T3 rings are all of this form."""
    support = []
    for P in shapes:
        cells = [(i, j) for i in range(size) for j in range(size) if P[i][j]]
        support.append(cells)

    def decompose(M):
        out = []
        for P, cells in zip(shapes, support):
            vals = {M[i][j] for i, j in cells}
            if len(vals) != 1:
                raise MalformedSpec("pattern product is not a combination of patterns")
            out.append(vals.pop())
        return out

    def matmul(X, Y):
        return [[sum(X[i][t] * Y[t][j] for t in range(size)) for j in range(size)] for i in range(size)]

    ns, kA = len(shapes), A.k
    k = ns * kA
    table = [[None] * k for _ in range(k)]
    for s, P in enumerate(shapes):
        for t, Q in enumerate(shapes):
            coeff = decompose(matmul(P, Q))
            for a in range(kA):
                for b in range(kA):
                    ab = A.spec.table[a][b]
                    vec = [0] * k
                    for u, c in enumerate(coeff):
                        if c:
                            for w in range(kA):
                                vec[u * kA + w] += c * ab[w]
                    table[s * kA + a][t * kA + b] = vec
    ident = [[int(i == j) for j in range(size)] for i in range(size)]
    ucoef = decompose(ident)
    unity = [0] * k
    for u, c in enumerate(ucoef):
        for w in range(kA):
            unity[u * kA + w] += c * A.spec.unity[w]
    return make_ring(RingSpec.build(name, list(A.orders) * ns, table, unity))


def _unit_matrix(n, i, j):
    return [[int((r, c) == (i, j)) for c in range(n)] for r in range(n)]


def matrix_ring(n, A: FiniteRing, name=None) -> FiniteRing:
    shapes = [_unit_matrix(n, i, j) for i in range(n) for j in range(n)]
    return pattern_algebra(A, n, shapes, name or f"M({n},{A.name})")


def upper_triangular(n, A: FiniteRing, name=None) -> FiniteRing:
    shapes = [_unit_matrix(n, i, j) for i in range(n) for j in range(i, n)]
    return pattern_algebra(A, n, shapes, name or f"Tri({n},{A.name})")


def t3(A: FiniteRing, name=None) -> FiniteRing:
    """3x3 matrices with a on the diagonal, b and c in positions (1,2), (1,3)."""
    ident = [[int(i == j) for j in range(3)] for i in range(3)]
    shapes = [ident, _unit_matrix(3, 0, 1), _unit_matrix(3, 0, 2)]
    return pattern_algebra(A, 3, shapes, name or f"T3({A.name})")


# -- groups ---------------------------------------------------------------------------

def _perm_group(gens):
    n = len(gens[0])
    ident = tuple(range(n))
    elems = [ident]
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for g in frontier:
            for h in gens:
                gh = tuple(g[h[i]] for i in range(n))
                if gh not in seen:
                    seen.add(gh)
                    elems.append(gh)
                    nxt.append(gh)
        frontier = nxt
    elems = [ident] + sorted(e for e in elems if e != ident)
    pos = {e: i for i, e in enumerate(elems)}
    return [[pos[tuple(a[b[i]] for i in range(n))] for b in elems] for a in elems]


def group_table(label):
    """Multiplication table of a small group with the identity at position 0."""
    m = re.fullmatch(r"C_?(\d+)", label)
    if m:
        n = int(m.group(1))
        if n < 1:
            raise UnknownConstructor(label)
        return [[(i + j) % n for j in range(n)] for i in range(n)]
    m = re.fullmatch(r"D_?(\d+)", label)
    if m:
        order = int(m.group(1))
        if order < 4 or order % 2:
            raise UnknownConstructor(f"dihedral group order must be even and >= 4: {label}")
        n = order // 2
        rot = tuple((i + 1) % n for i in range(n))
        ref = tuple((-i) % n for i in range(n))
        return _perm_group([rot, ref])
    if label == "S3":
        return _perm_group([(1, 0, 2), (1, 2, 0)])
    if label == "A4":
        return _perm_group([(1, 2, 0, 3), (1, 0, 3, 2)])
    raise UnknownConstructor(f"unknown group {label}")


def group_algebra(A: FiniteRing, label, name=None) -> FiniteRing:
    G = group_table(label)
    g, kA = len(G), A.k
    k = g * kA
    table = [[None] * k for _ in range(k)]
    for x in range(g):
        for y in range(g):
            z = G[x][y]
            for a in range(kA):
                for b in range(kA):
                    vec = [0] * k
                    for w, c in enumerate(A.spec.table[a][b]):
                        vec[z * kA + w] = c
                    table[x * kA + a][y * kA + b] = vec
    unity = list(A.spec.unity) + [0] * (k - kA)
    return make_ring(RingSpec.build(name or f"GroupAlg({A.name},{label})", list(A.orders) * g, table, unity))


# -- expression language ----------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(.))")


def _tokenize(text):
    out = []
    for num, ident, sym in _TOKEN.findall(text):
        if num:
            out.append(("num", int(num)))
        elif ident:
            out.append(("id", ident))
        elif sym.strip():
            out.append(("sym", sym))
    return out


class _Parser:
    def __init__(self, text):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self, kind=None, value=None):
        tok = self.peek()
        if tok[0] is None or (kind and tok[0] != kind) or (value is not None and tok[1] != value):
            raise MalformedSpec(f"cannot parse ring expression {self.text!r} at token {self.i}")
        self.i += 1
        return tok

    def expr(self):
        kind, val = self.peek()
        if kind == "num":
            self.take()
            return val
        if kind == "sym" and val == "-":
            self.take()
            return -self.take("num")[1]
        if kind == "sym" and val == "[":
            self.take()
            items = []
            while self.peek() != ("sym", "]"):
                items.append(self.expr())
                if self.peek() == ("sym", ","):
                    self.take()
            self.take("sym", "]")
            return items
        if kind == "id":
            self.take()
            if self.peek() != ("sym", "("):
                return ("name", val)
            self.take()
            args = []
            while self.peek() != ("sym", ")"):
                args.append(self.expr())
                if self.peek() == ("sym", ","):
                    self.take()
            self.take("sym", ")")
            return ("call", val, args)
        raise MalformedSpec(f"cannot parse ring expression {self.text!r}")

    def parse(self):
        node = self.expr()
        if self.i != len(self.toks):
            raise MalformedSpec(f"trailing input in ring expression {self.text!r}")
        return node


def _render(node):
    if isinstance(node, int):
        return str(node)
    if isinstance(node, list):
        return "[" + ",".join(_render(x) for x in node) + "]"
    if node[0] == "name":
        return node[1]
    return f"{node[1]}(" + ",".join(_render(a) for a in node[2]) + ")"


def _ring_arg(node):
    if not (isinstance(node, tuple) and node[0] == "call"):
        raise MalformedSpec(f"expected a ring expression, got {_render(node)}")
    return _build(node)


def _int_arg(node):
    if not isinstance(node, int):
        raise MalformedSpec(f"expected an integer, got {_render(node)}")
    return node


def _build(node) -> FiniteRing:
    key = _render(node)
    hit = _cache.get(key)
    if hit is not None:
        return hit
    if not (isinstance(node, tuple) and node[0] == "call"):
        raise MalformedSpec(f"expected a ring expression, got {key}")
    _, head, args = node
    if head == "F":
        if len(args) not in (1, 2):
            raise MalformedSpec("F takes q and an optional modulus")
        mod = args[1] if len(args) == 2 else None
        R = field(_int_arg(args[0]), mod, key if mod is None else key)
    elif head == "Zmod":
        R = zmod(_int_arg(args[0]), key)
    elif head in ("M", "Tri"):
        n, A = _int_arg(args[0]), _ring_arg(args[1])
        R = (matrix_ring if head == "M" else upper_triangular)(n, A, key)
    elif head == "T3":
        R = t3(_ring_arg(args[0]), key)
    elif head == "Prod":
        if not args:
            raise MalformedSpec("Prod needs at least one ring")
        rings = [_ring_arg(a) for a in args]
        R = product(rings, key) if len(rings) > 1 else rings[0]
    elif head == "GroupAlg":
        A = _ring_arg(args[0])
        g = args[1]
        label = g[1] if isinstance(g, tuple) and g[0] == "name" else _render(g)
        R = group_algebra(A, label, key)
    elif head == "PolyQuot":
        A = _ring_arg(args[0])
        if not isinstance(args[1], list):
            raise MalformedSpec("PolyQuot modulus must be a coefficient list")
        R = poly_quotient(A, args[1], key)
    elif head == "Trunc":
        from .radical import jacobson_radical, radical_power
        from .ring import quotient
        A, k = _ring_arg(args[0]), _int_arg(args[1])
        rad = jacobson_radical(A)
        R, _ = quotient(A, radical_power(A, rad.J, k), key)
    elif head == "Reduce":
        from .radical import reduce
        R = reduce(_ring_arg(args[0]), name=key).ring
    else:
        raise UnknownConstructor(f"unknown constructor {head!r}")
    _cache[key] = R
    return R


def canonical(dsl: str) -> str:
    return _render(_Parser(dsl).parse())


def construct(dsl: str) -> FiniteRing:
    """Build a ring from an expression, e.g. ``construct("M(2,F(3))")``."""
    return _build(_Parser(dsl).parse())


def load_ring(arg: str) -> FiniteRing:
    """Accept either a ring expression or the path of a JSON ring-spec file."""
    if os.path.isfile(arg):
        return make_ring(RingSpec.load(arg))
    return construct(arg)


__all__ = ["construct", "load_ring", "canonical", "field", "zmod", "matrix_ring",
           "upper_triangular", "t3", "group_algebra", "poly_quotient", "group_table",
           "pattern_algebra"]
