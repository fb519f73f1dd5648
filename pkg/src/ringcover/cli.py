"""Command-line front end.

Exit codes: 0 on success, 1 on bad input (or failing verification cases),
2 when a size bound or the time budget stops a computation.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import catalog as cat
from . import report
from .cover import DEFAULT_TIMEOUT, sigma_exact, sigma_J
from .constructors import load_ring
from .errors import BoundExceeded, RingCoverError, Timeout
from .formulas import (FieldProductShape, omega, predict_sigma_commutative, psi, sigma_field_power,
                       sigma_field_product, tau, thirteen_search)
from .lattice import all_subrings, maximal_subrings, two_sided_ideals
from .radical import (complements_in_one_maximal, jacobson_radical, semisimple_profile,
                      wedderburn_complements)
from .verify import REGISTRY, SUITES, run

EXIT_OK, EXIT_INPUT, EXIT_BOUND = 0, 1, 2


def _emit(lines):
    sys.stdout.write("\n".join(lines) + "\n")


def _machine(args):
    return getattr(args, "format", "text") == "machine"


def cmd_sigma(args):
    R = load_ring(args.ring)
    rep = sigma_exact(R, timeout=args.timeout, bound=args.max_order)
    J = len(jacobson_radical(R).J) if R.order <= 4096 else None
    _emit(report.cover_lines(rep, R, J, machine=_machine(args)))
    return EXIT_OK if rep.exact else EXIT_BOUND


def cmd_sigma_j(args):
    R = load_ring(args.ring)
    rep = sigma_J(R, timeout=args.timeout)
    _emit(report.cover_lines(rep, R, None, machine=_machine(args)))
    return EXIT_OK if rep.exact else EXIT_BOUND


def _profile_text(R):
    try:
        red = R
        if len(jacobson_radical(R).J) > 1:
            from .radical import reduce
            red = reduce(R).ring
        prof = semisimple_profile(red)
    except RingCoverError as exc:
        return f"n/a ({exc})"
    parts = []
    for c in prof.components:
        parts.append(f"F_{c.field_order}(d={c.dim})" if c.eJ_order > 1 else f"F_{c.field_order}")
    return " + ".join(parts) + f"; Lambda={prof.Lambda} Lambda2={prof.Lambda2}"


def cmd_ring_info(args):
    R = load_ring(args.ring)
    rad = jacobson_radical(R)
    try:
        n_comp = len(wedderburn_complements(R))
    except RingCoverError as exc:
        n_comp = f"n/a ({exc})"
    pairs = [("name", R.name), ("order", R.order), ("characteristic", R.characteristic),
             ("commutative", R.is_commutative), ("field", R.order > 1 and len(R.units) == R.order - 1),
             ("J_order", len(rad.J)), ("nilpotency", rad.nilpotency_index),
             ("R/J_order", rad.quotient.order), ("complements", n_comp),
             ("profile", _profile_text(R)),
             ("maximal_subrings", len(maximal_subrings(R, args.max_order)))]
    _emit(report.fields_lines("ring-info", pairs, machine=_machine(args)))
    return EXIT_OK


def cmd_radical(args):
    R = load_ring(args.ring)
    rad = jacobson_radical(R)
    pairs = [("name", R.name), ("J_order", len(rad.J)), ("nilpotency", rad.nilpotency_index),
             ("R/J_order", rad.quotient.order), ("R/J_commutative", rad.quotient.is_commutative),
             ("J", list(rad.J.elements))]
    try:
        comps = wedderburn_complements(R)
        pairs.append(("complements", [list(S.elements) for S in comps]))
        if not rad.is_zero and rad.quotient.is_commutative:
            hull = complements_in_one_maximal(R)
            pairs.append(("one_maximal_holds_all", hull.maximal is not None))
    except RingCoverError as exc:
        pairs.append(("complements", f"n/a ({exc})"))
    _emit(report.fields_lines("radical", pairs, machine=_machine(args)))
    return EXIT_OK


def cmd_subrings(args):
    R = load_ring(args.ring)
    subs = all_subrings(R, args.max_order)
    maxes = maximal_subrings(R, args.max_order)
    ideals = two_sided_ideals(R, args.max_order)
    pairs = [("name", R.name), ("subrings", len(subs)), ("maximal", len(maxes)),
             ("ideals", len(ideals)), ("unital_subrings", sum(R.one in S.members for S in subs))]
    if args.list:
        pairs.append(("maximal_elements", [list(M.elements) for M in maxes]))
    _emit(report.fields_lines("subrings", pairs, machine=_machine(args)))
    return EXIT_OK


def cmd_catalog(args):
    entries = cat.catalog(max_order=args.max_order, seed=args.seed, randoms=args.random)
    if args.action == "list":
        if _machine(args):
            lines = [report.HEADER]
            for e in entries:
                lines.append(report._line("entry", name=e.name, kind=e.kind, order=e.order,
                                          characteristic=e.ring.characteristic, seed=e.seed))
            _emit(lines)
        else:
            _emit([f"{e.name:40s} {e.kind:7s} order {e.order}" for e in entries]
                  + [f"{len(entries)} rings, seed {args.seed}"])
    else:
        _emit([json.dumps(e.ring.spec.to_dict(), sort_keys=True) for e in entries])
    return EXIT_OK


def cmd_verify(args):
    cases = run(args.target, seed=args.seed, max_order=args.max_order, randoms=args.random)
    _emit(report.verification_lines(cases, args.seed, machine=_machine(args)))
    return EXIT_OK if all(c.outcome != "fail" for c in cases) else EXIT_INPUT


def cmd_formula(args):
    kind = args.kind
    if kind == "psi":
        pairs = [("psi", psi(args.p, args.n))]
    elif kind == "tau":
        pairs = [("tau", tau(args.q))]
    elif kind == "omega":
        pairs = [("omega", omega(args.n))]
    elif kind == "field-power":
        pred = sigma_field_power(args.q, args.t)
        pairs = [("coverable", pred.coverable), ("sigma", pred.sigma), ("source", pred.source)]
    elif kind == "field-product":
        blocks = tuple(tuple(int(x) for x in b.split(":")) for b in args.blocks)
        pred = sigma_field_product(FieldProductShape(blocks))
        pairs = [("coverable", pred.coverable), ("sigma", pred.sigma), ("source", pred.source)]
    elif kind == "predict":
        R = load_ring(args.ring)
        pred = predict_sigma_commutative(R)
        pairs = [("coverable", pred.coverable), ("sigma", pred.sigma), ("source", pred.source),
                 ("elementary_quotient", pred.params.get("elementary_quotient"))]
    else:
        rep = thirteen_search(args.bound)
        pairs = [("bound", rep.bound), ("thirteen_absent", rep.thirteen_absent),
                 ("achievable", sorted(rep.achievable)), ("small_tau", rep.small_tau),
                 ("near_misses", {str(k): v for k, v in rep.near_misses.items()})]
    _emit(report.fields_lines("formula", pairs, machine=_machine(args)))
    return EXIT_OK


def build_parser():
    ap = argparse.ArgumentParser(prog="ringcover", description="Covering numbers of finite rings.")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, ring=True):
        if ring:
            p.add_argument("--ring", required=True, help="ring expression or JSON ring-spec path")
        p.add_argument("--format", choices=["text", "machine"], default="text")
        p.add_argument("--max-order", type=int, default=256, help="lattice size bound")

    p = sub.add_parser("sigma", help="exact covering number")
    common(p)
    p.add_argument("--timeout", type=float, default=DEFAULT_TIMEOUT)
    p.set_defaults(func=cmd_sigma)

    p = sub.add_parser("sigma-j", help="cover of the radical by subideals")
    common(p)
    p.add_argument("--timeout", type=float, default=DEFAULT_TIMEOUT)
    p.set_defaults(func=cmd_sigma_j)

    p = sub.add_parser("ring-info", help="structure summary")
    common(p)
    p.set_defaults(func=cmd_ring_info)

    p = sub.add_parser("radical", help="Jacobson radical and complements")
    common(p)
    p.set_defaults(func=cmd_radical)

    p = sub.add_parser("subrings", help="subring and ideal counts")
    common(p)
    p.add_argument("--list", action="store_true", help="print maximal subrings")
    p.set_defaults(func=cmd_subrings)

    p = sub.add_parser("catalog", help="built-in rings")
    p.add_argument("action", choices=["list", "dump"])
    common(p, ring=False)
    p.add_argument("--seed", type=int, default=cat.DEFAULT_SEED)
    p.add_argument("--random", type=int, default=cat.DEFAULT_RANDOM)
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("verify", help="run a theorem check or suite over the catalog")
    p.add_argument("target", help=f"theorem id or suite ({', '.join(SUITES)})")
    common(p, ring=False)
    p.add_argument("--seed", type=int, default=cat.DEFAULT_SEED)
    p.add_argument("--random", type=int, default=cat.DEFAULT_RANDOM)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("formula", help="closed forms")
    p.add_argument("kind", choices=["psi", "tau", "omega", "field-power", "field-product",
                                    "predict", "thirteen"])
    p.add_argument("--p", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--q", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--blocks", nargs="*", default=[], help="q:t pairs")
    p.add_argument("--ring")
    p.add_argument("--bound", type=int, default=64)
    p.add_argument("--format", choices=["text", "machine"], default="text")
    p.set_defaults(func=cmd_formula)

    p = sub.add_parser("theorems", help="list theorem ids")
    p.set_defaults(func=lambda a: (_emit([f"{k:10s} {t.statement}" for k, t in REGISTRY.items()]), 0)[1])
    return ap


def main(argv=None):
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except (BoundExceeded, Timeout) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BOUND
    except (RingCoverError, OSError, ValueError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
