"""Closed forms for covering numbers of commutative rings.

Everything here is integer arithmetic; the ring-facing entry points only
read structure (radical, complement, idempotents) and never search covers.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from math import comb

from sympy import divisors, isprime, mobius, primefactors

from .errors import NotCommutative, NotPrime, NotPrimePower
from .polys import encode, monic_polys, mul, prime_power
from .radical import reduce, semisimple_profile, split_by_prime
from .ring import FiniteRing

FIELD_PRODUCT = "field-product"
RADICAL_NOT_COVERABLE = "radical-not-coverable"
SUBIDEAL_BRANCH = "p^d+1"
SIGMA_J = "sigma-J"
SPLIT = "split-by-prime"
NOT_COVERABLE = "not-coverable"


@dataclass
class SigmaPrediction:
    coverable: bool
    sigma: int | None
    source: str
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.coverable != (self.sigma is not None):
            raise ValueError("sigma must be present exactly when coverable")

    @property
    def value(self):
        return self.sigma if self.coverable else float("inf")


def _prime_power(q):
    pp = prime_power(q) if isinstance(q, int) else None
    if pp is None:
        raise NotPrimePower(f"{q} is not a prime power")
    return pp


def psi(p: int, n: int) -> int:
    """Number of monic irreducible polynomials of degree n over F_p."""
    if not (isinstance(p, int) and isprime(p)):
        raise NotPrime(f"{p} is not prime")
    if n < 1:
        raise ValueError("degree must be positive")
    total = sum(mobius(d) * p ** (n // d) for d in divisors(n))
    count, rem = divmod(int(total), n)
    if rem:
        raise AssertionError("necklace sum not divisible by n")
    return count


def psi_exhaustive(p: int, n: int) -> int:
    """psi by scanning all p^n monic polynomials of degree n and striking out
    every product of two monic polynomials of smaller positive degree."""
    if not isprime(p):
        raise NotPrime(f"{p} is not prime")
    reducible = set()
    for k in range(1, n // 2 + 1):
        low = list(monic_polys(p, k))
        high = low if k == n - k else list(monic_polys(p, n - k))
        for f in low:
            for g in high:
                reducible.add(encode(mul(f, g, p), p))
    return p ** n - len(reducible)


def omega(n: int) -> int:
    if n < 1:
        raise ValueError("omega needs n >= 1")
    return 1 if n == 1 else len(primefactors(n))


def tau(q: int) -> int:
    """Least number of copies of F_q whose product is coverable."""
    p, n = _prime_power(q)
    return p if n == 1 else psi(p, n) + 1


def sigma_field_power(q: int, t: int) -> SigmaPrediction:
    """sigma of the product of t copies of F_q."""
    p, n = _prime_power(q)
    if t < 1:
        raise ValueError("t must be positive")
    tq = tau(q)
    params = {"q": q, "p": p, "n": n, "t": t, "tau": tq, "omega": omega(n)}
    if t < tq:
        return SigmaPrediction(False, None, NOT_COVERABLE, params)
    return SigmaPrediction(True, tq * omega(n) + n * comb(tq, 2), FIELD_PRODUCT, params)


@dataclass(frozen=True)
class FieldProductShape:
    """Blocks (q, t): t copies of F_q, with the q pairwise distinct."""

    blocks: tuple

    def __post_init__(self):
        qs = [q for q, _ in self.blocks]
        if len(set(qs)) != len(qs):
            raise ValueError("field orders in a shape must be distinct")
        for q, t in self.blocks:
            _prime_power(q)
            if t < 1:
                raise ValueError("multiplicities must be positive")
        object.__setattr__(self, "blocks", tuple(sorted((int(q), int(t)) for q, t in self.blocks)))

    @classmethod
    def from_orders(cls, orders):
        return cls(tuple(Counter(orders).items()))


def sigma_field_product(shape: FieldProductShape) -> SigmaPrediction:
    """Minimum over blocks; a product is coverable iff some block is."""
    best = None
    for q, t in shape.blocks:
        pred = sigma_field_power(q, t)
        if pred.coverable and (best is None or pred.sigma < best.sigma):
            best = pred
    if best is None:
        return SigmaPrediction(False, None, NOT_COVERABLE, {"shape": shape.blocks})
    return SigmaPrediction(True, best.sigma, FIELD_PRODUCT, dict(best.params, shape=shape.blocks))


def count_maximal_subideals(profile) -> int:
    """Number of maximal subideals of J from the profile: one projective
    space of hyperplanes per field acting nontrivially on J."""
    total = 0
    for i in profile.Lambda:
        c = profile.components[i]
        q, d = c.field_order, c.dim
        num, rem = divmod(q ** d - 1, q - 1)
        if rem:
            raise AssertionError("inexact projective count")
        total += num
    return total


def sigma_J_formula(profile) -> SigmaPrediction:
    lam2 = profile.Lambda2
    if not lam2:
        return SigmaPrediction(False, None, NOT_COVERABLE, {"Lambda2": []})
    q = min(profile.components[i].field_order for i in lam2)
    return SigmaPrediction(True, q + 1, SIGMA_J, {"Lambda2": lam2, "q": q})


def _predict_primary(R: FiniteRing) -> SigmaPrediction:
    red = reduce(R)
    prof = semisimple_profile(red.ring)
    shape = FieldProductShape.from_orders(prof.field_orders)
    quot = sigma_field_product(shape)
    base = {"p": prime_power(R.characteristic)[0] if R.order > 1 else None,
            "shape": shape.blocks, "Lambda2": prof.Lambda2,
            "reduced_order": red.ring.order}
    if not prof.Lambda2:
        # J is generated by one element, so sigma(R) = sigma(R/J)
        params = dict(quot.params, **base)
        if quot.coverable:
            params["elementary_quotient"] = _power_dsl(params["q"], params["tau"])
        return SigmaPrediction(quot.coverable, quot.sigma, RADICAL_NOT_COVERABLE, params)
    q = min(prof.components[i].field_order for i in prof.Lambda2)
    via_j = q + 1
    if quot.coverable and quot.sigma <= via_j:
        params = dict(quot.params, **base, descended=True)
        params["elementary_quotient"] = _power_dsl(params["q"], params["tau"])
        return SigmaPrediction(True, quot.sigma, FIELD_PRODUCT, params)
    p, d = prime_power(q)
    elementary = (red.ring.order == R.order and len(prof.components) == 1
                  and prof.components[0].dim == 2)
    params = dict(base, q=q, d=d, descended=not elementary)
    params["elementary_quotient"] = f"T3(F({q}))"
    return SigmaPrediction(True, via_j, SUBIDEAL_BRANCH, params)


def _power_dsl(q, t):
    return "Prod(" + ",".join([f"F({q})"] * t) + ")" if t > 1 else f"F({q})"


def predict_sigma_commutative(R: FiniteRing) -> SigmaPrediction:
    """Covering number of a finite commutative ring from its structure alone.

    After splitting by characteristic and reducing to characteristic p with
    J^2 = 0, R = S + J with S a product of fields.  If J is not coverable by
    subideals the answer is sigma(R/J); otherwise it is the smaller of
    sigma(R/J) and min |F_i| + 1 over the fields acting on J with dimension
    at least two, the latter realised by a quotient isomorphic to T3(F_q).
    """
    if not R.is_commutative:
        raise NotCommutative(f"{R.name} is not commutative")
    comps = split_by_prime(R)
    if len(comps) <= 1:
        return _predict_primary(R)
    best, rows = None, []
    for comp in comps:
        pred = _predict_primary(comp.ring)
        rows.append({"prime": comp.prime, "coverable": pred.coverable, "sigma": pred.sigma,
                     "source": pred.source})
        if pred.coverable and (best is None or pred.sigma < best.sigma):
            best = pred
    if best is None:
        return SigmaPrediction(False, None, NOT_COVERABLE, {"components": rows})
    return SigmaPrediction(True, best.sigma, best.source, dict(best.params, components=rows))


def is_prime_power_plus_one(value, p) -> bool:
    """True when value - 1 is a positive power of p."""
    v = value - 1
    if v < p:
        return False
    while v % p == 0:
        v //= p
    return v == 1


@dataclass
class ThirteenReport:
    bound: int
    achievable: dict
    thirteen_absent: bool
    near_misses: dict
    small_tau: list
    field_values: dict


def prime_powers_upto(bound):
    return [q for q in range(2, bound + 1) if prime_power(q) is not None]


def thirteen_search(bound: int = 64) -> ThirteenReport:
    """Every covering number the two branches can produce from fields of
    order at most ``bound``, each with its provenance.

    A ring with R/J commutative has a sigma-elementary quotient that is
    either tau(q) copies of F_q or has sigma = p^d + 1.  ``small_tau`` lists
    the non-prime q with tau(q) <= 3: the only field-branch values that can
    be as small as 13 when q is not prime.
    """
    achievable = {}
    field_values = {}
    small_tau = []
    for q in prime_powers_upto(bound):
        p, n = prime_power(q)
        tq = tau(q)
        v = sigma_field_power(q, tq).sigma
        field_values[q] = v
        achievable.setdefault(v, []).append(f"{FIELD_PRODUCT} q={q} tau={tq}")
        achievable.setdefault(q + 1, []).append(f"{SUBIDEAL_BRANCH} q={q}")
        if n > 1 and tq <= 3:
            small_tau.append(q)
    achievable = {k: achievable[k] for k in sorted(achievable)}
    near = {k: achievable[k] for k in (12, 14) if k in achievable}
    return ThirteenReport(bound, achievable, 13 not in achievable, near, small_tau, field_values)
