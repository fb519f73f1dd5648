"""Exact covering numbers.

sigma(R) is computed as a minimum set cover.  Every element r lies in the
cyclic subring <r>, and a subring contains r exactly when it contains <r>;
so it suffices to cover the inclusion-maximal proper cyclic subrings, one
"class" each, using maximal subrings as the candidate sets.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field

from .errors import HypothesisViolated
from .lattice import (Closure, SubsetAlgebra, all_subrings, generated_subring,
                      ideal_generated_by, ideal_product, intersection, maximal_subideals,
                      maximal_subrings, minimal_ideals, subset_algebra)
from .radical import (complements_in_one_maximal, grow_to_maximal, jacobson_radical,
                      one_plus_J_orbit, split_by_prime, wedderburn_complements)
from .ring import FiniteRing, quotient

DEFAULT_TIMEOUT = 60.0
INF = float("inf")


class _OutOfTime(Exception):
    pass


@dataclass
class CoverReport:
    ring_name: str
    order: int
    characteristic: int
    coverable: bool
    sigma: int | None = None
    cover: list = field(default_factory=list)
    universe_size: int = 0
    candidates: int = 0
    lower_bound: int | None = None
    lower_bound_trace: list = field(default_factory=list)
    exact: bool = True
    witness: int | None = None
    components: list = field(default_factory=list)
    stats: dict = field(default_factory=dict)

    @property
    def value(self):
        """sigma, with non-coverable rings mapped to infinity."""
        return self.sigma if self.coverable else INF


# -- generic exact set cover ---------------------------------------------------------------

class SetCover:
    """Minimum cover of classes 0..n-1 by candidate bitmasks.

    Branches on the uncovered class with fewest live candidates; a candidate
    that failed in one branch is excluded from its later siblings, so every
    subfamily is visited at most once.  Pruning uses the number of uncovered
    classes that pairwise share no live candidate.
    """

    def __init__(self, n_classes, cand_masks, deadline=None):
        self.n = n_classes
        self.cands = list(cand_masks)
        self.full = (1 << n_classes) - 1
        self.deadline = deadline
        self.nodes = 0
        self.covering = []
        for c in range(n_classes):
            m = 0
            for i, cm in enumerate(self.cands):
                if cm >> c & 1:
                    m |= 1 << i
            self.covering.append(m)

    def _tick(self):
        self.nodes += 1
        if self.deadline is not None and not self.nodes & 1023 and time.monotonic() > self.deadline:
            raise _OutOfTime

    def _classes(self, mask):
        out = []
        while mask:
            low = mask & -mask
            out.append(low.bit_length() - 1)
            mask ^= low
        return out

    def disjoint_bound(self, uncovered, live):
        cls = self._classes(uncovered)
        opts = []
        for c in cls:
            m = self.covering[c] & live
            if not m:
                return None
            opts.append((bin(m).count("1"), c, m))
        opts.sort()
        used, count = 0, 0
        for _, _, m in opts:
            if not m & used:
                used |= m
                count += 1
        return count

    def _search(self, uncovered, budget, live, collect=None):
        self._tick()
        if not uncovered:
            if collect is not None:
                collect.append(())
            return ()
        if budget <= 0:
            return None
        lb = self.disjoint_bound(uncovered, live)
        if lb is None or lb > budget:
            return None
        best_m, best_n = 0, None
        for c in self._classes(uncovered):
            m = self.covering[c] & live
            n = bin(m).count("1")
            if best_n is None or n < best_n:
                best_m, best_n = m, n
                if n <= 1:
                    break
        m = best_m
        while m:
            low = m & -m
            i = low.bit_length() - 1
            m ^= low
            if collect is None:
                res = self._search(uncovered & ~self.cands[i], budget - 1, live)
                if res is not None:
                    return (i,) + res
            else:
                sub = []
                self._search(uncovered & ~self.cands[i], budget - 1, live, sub)
                collect.extend((i,) + s for s in sub)
            live &= ~low
        return None

    def greedy(self):
        uncovered, chosen = self.full, []
        while uncovered:
            best = max(range(len(self.cands)), key=lambda i: (bin(self.cands[i] & uncovered).count("1"), -i))
            if not self.cands[best] & uncovered:
                return None
            chosen.append(best)
            uncovered &= ~self.cands[best]
        return chosen

    def feasible(self, k, uncovered=None, live=None):
        uncovered = self.full if uncovered is None else uncovered
        live = (1 << len(self.cands)) - 1 if live is None else live
        return self._search(uncovered, k, live)

    def solve(self):
        """Return ``(size, chosen, trace, lower_bound)``; raises _OutOfTime."""
        upper = self.greedy()
        if upper is None:
            return None, None, [], None
        live = (1 << len(self.cands)) - 1
        lb = self.disjoint_bound(self.full, live)
        trace = [{"bound": "disjoint-classes", "value": lb}]
        self.lower = lb
        for k in range(lb, len(upper)):
            before = self.nodes
            res = self.feasible(k)
            if res is not None:
                trace.append({"k": k, "result": "feasible", "nodes": self.nodes - before})
                return k, sorted(res), trace, lb
            trace.append({"k": k, "result": "infeasible", "nodes": self.nodes - before})
            self.lower = k + 1
        trace.append({"k": len(upper), "result": "greedy", "nodes": 0})
        return len(upper), sorted(upper), trace, lb

    def lex_least(self, k):
        """Lexicographically least sorted index tuple among covers of size k."""
        chosen, lo, uncovered = [], 0, self.full
        allmask = (1 << len(self.cands)) - 1
        for pos in range(k):
            for i in range(lo, len(self.cands)):
                rest = uncovered & ~self.cands[i]
                live = allmask & ~((1 << (i + 1)) - 1)
                if self._search(rest, k - pos - 1, live) is not None:
                    chosen.append(i)
                    uncovered = rest
                    lo = i + 1
                    break
            else:
                raise AssertionError("no cover of the claimed size")
            if not uncovered:
                break
        return chosen

    def all_covers(self, k):
        out = []
        self._search(self.full, k, (1 << len(self.cands)) - 1, out)
        return sorted({tuple(sorted(c)) for c in out})


# -- sigma of a ring -----------------------------------------------------------------------

def cyclic_subrings(R: FiniteRing):
    """Map element -> frozenset of <r>."""
    out = {}
    for r in range(R.order):
        out[r] = frozenset(Closure.zero(R).adjoin(r).members)
    return out


def is_coverable(R: FiniteRing):
    """``(True, None)`` or ``(False, r)`` with <r> = R."""
    for r in range(R.order):
        if len(Closure.zero(R).adjoin(r).members) == R.order:
            return False, r
    return True, None


def _classes(R, cyc, top):
    distinct = {}
    for r in range(R.order):
        distinct.setdefault(cyc[r], r)
    props = [(s, r) for s, r in distinct.items() if len(s) < top]
    props.sort(key=lambda t: (-len(t[0]), t[1]))
    maximal = []
    for s, r in props:
        if not any(s < m for m, _ in maximal):
            maximal.append((s, r))
    return sorted(r for _, r in maximal)


def _finish(report, problem, size, chosen, cands, trace, lb, t0):
    report.sigma = size
    report.lower_bound = lb
    report.lower_bound_trace = trace
    canon = problem.lex_least(size)
    report.cover = [cands[i] for i in canon]
    report.stats = {"nodes": problem.nodes, "seconds": round(time.monotonic() - t0, 3)}
    return report


def _solve(R, cands, classes, timeout, report):
    t0 = time.monotonic()
    deadline = t0 + timeout if timeout else None
    masks = []
    for M in cands:
        m = 0
        for c, r in enumerate(classes):
            if r in M.members:
                m |= 1 << c
        masks.append(m)
    problem = SetCover(len(classes), masks, deadline)
    report.universe_size = len(classes)
    report.candidates = len(cands)
    try:
        size, chosen, trace, lb = problem.solve()
        if size is None:
            raise AssertionError("candidate sets do not cover the universe")
        return _finish(report, problem, size, chosen, cands, trace, lb, t0)
    except _OutOfTime:
        greedy = problem.greedy()
        report.exact = False
        report.sigma = len(greedy)
        report.cover = [cands[i] for i in greedy]
        report.lower_bound = getattr(problem, "lower", None)
        report.lower_bound_trace = [{"result": "timeout", "budget": timeout}]
        report.stats = {"nodes": problem.nodes, "seconds": round(time.monotonic() - t0, 3)}
        return report


def _direct(R, timeout, bound):
    report = CoverReport(R.name, R.order, R.characteristic, True)
    cyc = cyclic_subrings(R)
    for r in range(R.order):
        if len(cyc[r]) == R.order:
            report.coverable = False
            report.witness = r
            return report
    classes = _classes(R, cyc, R.order)
    cands = maximal_subrings(R, bound)
    return _solve(R, cands, classes, timeout, report)


def sigma_exact(R: FiniteRing, timeout=DEFAULT_TIMEOUT, bound=256, split=True) -> CoverReport:
    """Exact covering number of R with a lexicographically least witness cover.

    Rings of mixed characteristic are split into primary components and the
    minimum over components is reported (lifted covers are returned)."""
    key = ("_sigma", split, bound)
    cached = R.__dict__.get(key)
    if cached is not None and cached.exact:
        return cached
    comps = split_by_prime(R) if split else []
    if len(comps) > 1:
        report = CoverReport(R.name, R.order, R.characteristic, False)
        best = None
        for comp in comps:
            sub = sigma_exact(comp.ring, timeout, bound, split=False)
            report.components.append({"prime": comp.prime, "order": comp.ring.order,
                                      "coverable": sub.coverable, "sigma": sub.sigma,
                                      "exact": sub.exact})
            if sub.coverable and (best is None or sub.sigma < best[1].sigma):
                best = (comp, sub)
        if best is None:
            report.witness = is_coverable(R)[1]
        else:
            comp, sub = best
            report.coverable = True
            report.sigma = sub.sigma
            report.exact = all(c["exact"] for c in report.components)
            report.cover = [subset_algebra(R, [r for r in range(R.order) if comp.project[r] in T.members])
                            for T in sub.cover]
            report.cover.sort(key=SubsetAlgebra.sort_key)
            report.universe_size = sub.universe_size
            report.candidates = sub.candidates
            report.lower_bound = sub.lower_bound
            report.lower_bound_trace = [dict(t, component=comp.prime) for t in sub.lower_bound_trace]
            report.stats = dict(sub.stats)
    else:
        report = _direct(R, timeout, bound)
    R.__dict__[key] = report
    return report


def sigma_value(R, **kw):
    return sigma_exact(R, **kw).value


def is_cover(R, family) -> bool:
    members = set()
    for T in family:
        if len(T) >= R.order:
            return False
        members |= T.members
    return len(members) == R.order


def all_minimum_covers(R: FiniteRing, bound=256):
    """Every cover of size sigma(R) by maximal subrings."""
    rep = sigma_exact(R, bound=bound, split=False)
    if not rep.coverable:
        return []
    cyc = cyclic_subrings(R)
    classes = _classes(R, cyc, R.order)
    cands = maximal_subrings(R, bound)
    masks = [sum(1 << c for c, r in enumerate(classes) if r in M.members) for M in cands]
    problem = SetCover(len(classes), masks)
    return [[cands[i] for i in combo] for combo in problem.all_covers(rep.sigma)]


# -- independent brute force ------------------------------------------------------------------

def sigma_bruteforce(R: FiniteRing, max_k=None):
    """sigma by exhaustive search over families of arbitrary proper subrings,
    covering elements directly.  Returns None when R is not coverable."""
    subs = [S for S in all_subrings(R) if len(S) < R.order]
    full = (1 << R.order) - 1
    by_elem = [[S.mask for S in subs if x in S.members] for x in range(R.order)]
    if any(not opts for opts in by_elem):
        return None
    limit = max_k or len(subs)

    def dfs(covered, depth):
        if covered == full:
            return True
        if depth == 0:
            return False
        missing = full & ~covered
        x = (missing & -missing).bit_length() - 1
        return any(dfs(covered | m, depth - 1) for m in by_elem[x])

    for k in range(1, limit + 1):
        if dfs(0, k):
            return k
    return None


# -- sigma(J) over subideals -------------------------------------------------------------------

def sigma_J(R: FiniteRing, timeout=DEFAULT_TIMEOUT) -> CoverReport:
    """Minimum cover of J by proper two-sided ideals of R contained in J."""
    rad = jacobson_radical(R)
    J = rad.J
    report = CoverReport(f"J({R.name})", len(J), R.characteristic, True)
    if len(J) == 1:
        report.coverable = False
        report.witness = 0
        return report
    princ = {}
    for x in J.elements:
        princ[x] = frozenset(ideal_generated_by(R, [x]).members)
        if len(princ[x]) == len(J):
            report.coverable = False
            report.witness = x
            return report
    classes = _principal_classes(princ, len(J))
    cands = maximal_subideals(R, J)
    return _solve(R, cands, classes, timeout, report)


def _principal_classes(princ, top):
    distinct = {}
    for x in sorted(princ):
        distinct.setdefault(princ[x], x)
    props = sorted(((s, x) for s, x in distinct.items() if len(s) < top), key=lambda t: (-len(t[0]), t[1]))
    maximal = []
    for s, x in props:
        if not any(s < m for m, _ in maximal):
            maximal.append((s, x))
    return sorted(x for _, x in maximal)


# -- sigma-elementary ---------------------------------------------------------------------------

@dataclass
class SigmaElementaryReport:
    ring_name: str
    is_sigma_elementary: bool
    sigma: int | None
    violating_ideal: SubsetAlgebra | None
    atom_sigmas: list


def sigma_elementary(R: FiniteRing, timeout=DEFAULT_TIMEOUT) -> SigmaElementaryReport:
    """Compare sigma(R) with sigma(R/I) for each minimal nonzero ideal I.

    Enough because I <= I' implies sigma(R/I) <= sigma(R/I'); quotients that
    cannot be covered count as infinity."""
    rep = sigma_exact(R, timeout)
    atoms = minimal_ideals(R)
    rows, violator = [], None
    for I in atoms:
        Q, _ = quotient(R, I)
        v = sigma_exact(Q, timeout).value
        rows.append({"ideal_size": len(I), "sigma": None if v == INF else v})
        if rep.coverable and v <= rep.sigma and violator is None:
            violator = I
    ok = rep.coverable and violator is None
    return SigmaElementaryReport(R.name, ok, rep.sigma, violator, rows)


# -- complements not inside one maximal subring -------------------------------------------------

@dataclass
class Case1Result:
    prediction: int
    index: int
    T: SubsetAlgebra
    conjugates: list
    M: SubsetAlgebra
    cover: list
    sigma: int | None
    sigma_quotient: float
    strict: bool


def verify_case1_sigma(R: FiniteRing, timeout=DEFAULT_TIMEOUT, bound=256) -> Case1Result:
    """|J:I| + 1 for a maximal subring T = S + I not containing J with |J:I|
    minimal, together with the explicit cover by the conjugates of T and one
    maximal subring M containing (T1 cap T2) + J.

    ``strict`` records whether sigma(R) < sigma(R/J); only then is the value
    guaranteed to equal sigma(R) rather than bound it from above.
    """
    rad = jacobson_radical(R)
    J = rad.J
    if len(J) == 1:
        raise HypothesisViolated("J != 0")
    if len(ideal_product(R, J, J)) > 1:
        raise HypothesisViolated("J^2 = 0")
    if not rad.quotient.is_commutative:
        raise HypothesisViolated("R/J commutative")
    hull = complements_in_one_maximal(R)
    if hull.maximal is not None:
        raise HypothesisViolated("no maximal subring contains every complement")
    options = []
    for T in maximal_subrings(R, bound):
        if J.members <= T.members:
            continue
        I = intersection(T, J)
        options.append((len(J) // len(I), T.sort_key(), T, I))
    if not options:
        raise AssertionError("no maximal subring avoids J")
    options.sort(key=lambda t: (t[0], t[1]))
    index, _, T, I = options[0]
    if not any(S.members <= T.members for S in wedderburn_complements(R)):
        raise AssertionError("T contains no complement")
    conj = one_plus_J_orbit(R, T)
    if len(conj) != index:
        raise AssertionError(f"{len(conj)} conjugates, expected |J:I| = {index}")
    A = intersection(conj[0], conj[1])
    AJ = generated_subring(R, list(A.elements) + list(J.elements))
    if len(AJ) >= R.order:
        raise AssertionError("(T1 cap T2) + J is not proper")
    M = grow_to_maximal(R, AJ)
    cover = conj + [M]
    if not is_cover(R, cover):
        raise AssertionError("conjugates plus M do not cover R")
    rep = sigma_exact(R, timeout, bound)
    qv = sigma_exact(rad.quotient, timeout, bound).value
    strict = rep.coverable and rep.sigma < qv
    if strict and rep.sigma != index + 1:
        raise AssertionError(f"sigma {rep.sigma} != |J:I| + 1 = {index + 1}")
    return Case1Result(index + 1, index, T, conj, M, cover, rep.sigma, qv, strict)
