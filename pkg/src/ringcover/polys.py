"""Dense polynomials over Z/p as coefficient tuples, constant term first."""
from __future__ import annotations

from sympy import factorint, isprime


def prime_power(q):
    """Return ``(p, n)`` with q = p**n, or None."""
    if q < 2:
        return None
    f = factorint(q)
    if len(f) != 1:
        return None
    (p, n), = f.items()
    return p, n


def trim(f):
    f = list(f)
    while f and f[-1] == 0:
        f.pop()
    return tuple(f)


def mul(f, g, p):
    if not f or not g:
        return ()
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] = (out[i + j] + a * b) % p
    return trim(out)


def divmod_(f, g, p):
    """Quotient and remainder of f by a nonzero g over the prime field F_p."""
    f = list(trim(f))
    g = trim(g)
    inv = pow(g[-1], -1, p)
    q = [0] * max(len(f) - len(g) + 1, 0)
    while len(f) >= len(g) and f:
        c = (f[-1] * inv) % p
        shift = len(f) - len(g)
        q[shift] = c
        for i, b in enumerate(g):
            f[shift + i] = (f[shift + i] - c * b) % p
        f = list(trim(f))
    return trim(q), tuple(f)


def monic_polys(p, n):
    """All monic polynomials of degree n over F_p in increasing base-p order."""
    for v in range(p ** n):
        yield tuple((v // p ** i) % p for i in range(n)) + (1,)


def encode(f, p):
    return sum(c * p ** i for i, c in enumerate(f))


def is_irreducible(f, p):
    """Trial division by every monic polynomial of degree <= deg(f)/2."""
    f = trim(f)
    n = len(f) - 1
    if n < 1:
        return False
    if n == 1:
        return True
    for d in range(1, n // 2 + 1):
        for g in monic_polys(p, d):
            if not divmod_(f, g, p)[1]:
                return False
    return True


def least_irreducible(p, n):
    """The monic irreducible of degree n whose coefficient vector, read as a
    base-p number with the constant term least significant, is smallest."""
    for f in monic_polys(p, n):
        if is_irreducible(f, p):
            return f
    raise AssertionError("no irreducible polynomial found")


__all__ = ["prime_power", "isprime", "mul", "divmod_", "monic_polys", "is_irreducible",
           "least_irreducible", "trim", "encode"]
