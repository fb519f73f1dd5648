"""Naive reference implementations used only by the tests.

They work from the ring's add/mul and nothing else, so they share no code
with the lattice, radical or cover modules.
"""
from itertools import combinations


def naive_close(R, seed):
    S = {0} | set(seed)
    while True:
        new = {R.add(a, b) for a in S for b in S} | {R.mul(a, b) for a in S for b in S}
        if new <= S:
            return frozenset(S)
        S |= new


def naive_subrings(R):
    """Every subring (unity not required), by growing closures one element at a time."""
    zero = frozenset([0])
    seen = {zero}
    frontier = [zero]
    while frontier:
        nxt = []
        for S in frontier:
            for x in range(R.order):
                if x not in S:
                    T = naive_close(R, S | {x})
                    if T not in seen:
                        seen.add(T)
                        nxt.append(T)
        frontier = nxt
    return seen


def naive_maximal_subrings(R):
    proper = [S for S in naive_subrings(R) if len(S) < R.order]
    return [S for S in proper if not any(S < T for T in proper)]


def naive_units(R):
    return {u for u in range(R.order)
            if any(R.mul(u, v) == R.one and R.mul(v, u) == R.one for v in range(R.order))}


def naive_radical(R):
    """x is in J iff 1 - rx is a unit for every r."""
    U = naive_units(R)
    return frozenset(x for x in range(R.order)
                     if all(R.sub(R.one, R.mul(r, x)) in U for r in range(R.order)))


def naive_is_ideal(R, S):
    return all(R.mul(r, s) in S and R.mul(s, r) in S for r in range(R.order) for s in S)


def naive_sigma(R):
    """Smallest number of proper subrings whose union is R, or None."""
    proper = [S for S in naive_subrings(R) if len(S) < R.order]
    everything = set(range(R.order))
    for k in range(1, len(proper) + 1):
        for fam in combinations(proper, k):
            if set().union(*fam) == everything:
                return k
    return None
