"""Text and machine renderings of reports.

The machine format is a header line followed by one JSON object per line,
keys sorted.  Wall-clock data never appears in it, so repeated runs on the
same input are byte-identical.
"""
from __future__ import annotations

import json

HEADER = "ringcover-report/1"


def _line(record, **fields):
    return json.dumps(dict(record=record, **fields), sort_keys=True, separators=(",", ":"))


def ring_record(R, J_order=None):
    return _line("ring", name=R.name, order=R.order, characteristic=R.characteristic,
                 J_order=J_order)


def cover_lines(rep, R, J_order=None, machine=False):
    if machine:
        out = [HEADER, ring_record(R, J_order)]
        out.append(_line("sigma", coverable=rep.coverable, sigma=rep.sigma, exact=rep.exact,
                         witness=rep.witness))
        for i, T in enumerate(rep.cover):
            out.append(_line("cover", index=i, size=len(T), elements=list(T.elements)))
        for c in rep.components:
            out.append(_line("component", **c))
        out.append(_line("certificate", universe_size=rep.universe_size, candidates=rep.candidates,
                         lower_bound=rep.lower_bound, trace=rep.lower_bound_trace))
        return out
    out = [f"ring            {R.name}",
           f"order           {R.order}",
           f"characteristic  {R.characteristic}"]
    if J_order is not None:
        out.append(f"|J|             {J_order}")
    if not rep.coverable:
        out.append("sigma           not coverable")
        if rep.witness is not None:
            out.append(f"witness         {R.format_element(rep.witness)} generates the ring")
        return out
    flag = "" if rep.exact else "  (timeout: upper bound only)"
    out.append(f"sigma           {rep.sigma}{flag}")
    if not rep.exact and rep.lower_bound is not None:
        out.append(f"lower bound     {rep.lower_bound}")
    out.append(f"universe        {rep.universe_size} maximal cyclic classes, "
               f"{rep.candidates} maximal subrings")
    for c in rep.components:
        s = c["sigma"] if c["coverable"] else "not coverable"
        out.append(f"component p={c['prime']:<4d} order {c['order']}: {s}")
    out.append("cover:")
    for i, T in enumerate(rep.cover):
        has_one = "contains 1" if R.one in T.members else "no 1"
        out.append(f"  [{i}] size {len(T)}, {has_one}: {list(T.elements)}")
    trace = [t for t in rep.lower_bound_trace if "k" in t]
    if trace:
        out.append("certificate:")
        for t in rep.lower_bound_trace:
            if "k" in t:
                out.append(f"  k={t['k']}: {t['result']} ({t.get('nodes', 0)} nodes)")
            elif "bound" in t:
                out.append(f"  {t['bound']} lower bound {t['value']}")
    if rep.stats:
        out.append(f"search          {rep.stats.get('nodes', 0)} nodes, {rep.stats.get('seconds', 0)} s")
    return out


def verification_lines(cases, seed, machine=False):
    counts = {"pass": 0, "fail": 0, "skipped": 0}
    for c in cases:
        counts[c.outcome] += 1
    if machine:
        out = [HEADER]
        for c in cases:
            out.append(_line("case", theorem=c.theorem, ring=c.ring, outcome=c.outcome,
                             reason=c.reason, expected=c.expected))
        out.append(_line("summary", seed=seed, **counts))
        return out
    out = [f"seed {seed}"]
    width = max((len(c.ring) for c in cases), default=4)
    for c in cases:
        out.append(f"{c.theorem:10s} {c.ring:{width}s} {c.outcome.upper():7s} {c.reason}")
    out.append(f"{counts['pass']} pass, {counts['fail']} fail, {counts['skipped']} skipped")
    return out


def fields_lines(title, pairs, machine=False):
    if machine:
        return [HEADER, _line(title, **dict(pairs))]
    width = max(len(k) for k, _ in pairs)
    return [f"{k:{width}s}  {v}" for k, v in pairs]
