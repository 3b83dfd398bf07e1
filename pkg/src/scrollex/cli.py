"""Command-line front end.

    scrollex validate  FILE
    scrollex order     FILE
    scrollex groebner  FILE
    scrollex cycles    FILE [--kind minimal|virtual]
    scrollex betti     FILE [--ideal gamma|initial] [--field q|P] [--max-vertices N]
    scrollex p2        FILE [--mode lower|upper|exact|auto]
    scrollex poligon   N S
    scrollex gen-chordal   --seed S [--vertices N]
    scrollex gen-cycle-ext --seed S [--length N]

Reports are canonical JSON on stdout (sorted keys, exact integers, infinite
values as the string "infinity"); diagnostics go to stderr.  Exit codes:
0 success, 1 input or validation error, 2 method not applicable, 3 resource
cap exceeded.  SCROLLEX_THREADS caps the worker count of the Betti sweep.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys

from . import __version__
from .bounds import (
    Interval,
    NotApplicable,
    classify_edge,
    lower_bound,
    p2_report,
    upper_bound,
    virtual_minimal_cycles,
)
from .extension import toricity_gate
from .graphs import DEFAULT_CYCLE_CAP, CycleCapExceeded, chordless_cycles
from .groebner import initial_complex, lead_deletions, buchberger_is_groebner
from .homology import (
    FieldSpec,
    GuardExceeded,
    INFINITE,
    QQ,
    betti_table,
    cycle_betti_table,
    p2_from_table,
    p2_monomial,
)
from .instance import InstanceError, instance_digest, parse_instance
from .ordering import (
    NotOrderableError,
    OrderFound,
    find_admissible_order,
    pi_star,
    variable_order,
)
from . import fixtures
from .extension import ExtensionError
from .graphs import GraphError


def _jsonable(x):
    if x is INFINITE:
        return "infinity"
    if isinstance(x, NotApplicable):
        return {"not_applicable": x.reason}
    if isinstance(x, Interval):
        return {"lower": _jsonable(x.lower), "upper": _jsonable(x.upper)}
    if isinstance(x, dict):
        return {k: _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, frozenset):
        return sorted(x)
    return x


def _emit(report):
    sys.stdout.write(json.dumps(_jsonable(report), sort_keys=True, indent=2) + "\n")


def _load(path):
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    ext, canonical = parse_instance(text)
    return ext, instance_digest(canonical)


def _envelope(command, digest, payload):
    doc = {"command": command, "version": __version__, "instance_digest": digest}
    doc.update(payload)
    return doc


def _threads():
    try:
        return max(1, int(os.environ.get("SCROLLEX_THREADS", "1")))
    except ValueError:
        return 1


def _parse_field(text):
    if text == "q":
        return QQ
    return FieldSpec(int(text))


def _cycle_payload(vc, gbar_rank):
    ecs = []
    for e in sorted(vc.edge_classes, key=lambda e: (gbar_rank[e[0]], gbar_rank[e[1]])):
        ec = vc.edge_classes[e]
        entry = {"edge": list(e), "kind": ec.kind, "t": ec.t}
        if ec.eta is not None:
            entry["eta"] = ec.eta
        if ec.jls is not None:
            entry["blocks"] = list(ec.jls)
        ecs.append(entry)
    return {"cycle": list(vc.cycle), "edges": ecs, "expandable": vc.expandable}


def cmd_validate(ext, digest, args):
    payload = {
        "valid": True,
        "vertices": len(ext.skeleton_bar.vertices),
        "base_vertices": len(ext.base.skeleton.vertices),
        "facets": len(ext.base.facets),
        "matrices": len(ext.matrices),
    }
    return _envelope("validate", digest, payload), 0


def cmd_order(ext, digest, args):
    decision = find_admissible_order(ext.matrices)
    if isinstance(decision, OrderFound):
        payload = {
            "orderable": True,
            "order": [sorted(f) for f in decision.facets],
        }
    else:
        payload = {
            "orderable": False,
            "witness": [sorted(f) for f in decision.facets],
        }
    return _envelope("order", digest, payload), 0


def cmd_groebner(ext, digest, args):
    from .extension import generator_system

    decision = find_admissible_order(ext.matrices)
    if not isinstance(decision, OrderFound):
        return (
            _envelope(
                "groebner",
                digest,
                {"not_applicable": "no admissible order", "witness": [sorted(f) for f in decision.facets]},
            ),
            2,
        )
    images = [pi_star(m) for m in decision.matrices]
    order = variable_order(decision.matrices, images, ext.skeleton_bar.vertices)
    system = generator_system(ext)
    check = buchberger_is_groebner(system, order)
    ic = initial_complex(ext, "star")
    groebner_route = lead_deletions(system, order)
    payload = {
        "groebner_basis": check.ok,
        "variable_order": list(order.variables),
        "deletions": [list(e) for e in sorted(ic.deleted)],
        "routes_agree": groebner_route == {frozenset(e) for e in ic.deleted},
    }
    return _envelope("groebner", digest, payload), 0


def cmd_cycles(ext, digest, args):
    g = ext.base.skeleton
    if args.kind == "minimal":
        cycles = chordless_cycles(g, cap=args.cap)
        payload = {"kind": "minimal", "cycles": [list(c) for c in cycles]}
    else:
        vcs = virtual_minimal_cycles(ext, cap=args.cap)
        payload = {
            "kind": "virtual",
            "cycles": [_cycle_payload(vc, g.rank) for vc in vcs],
        }
    return _envelope("cycles", digest, payload), 0


def cmd_betti(ext, digest, args):
    field = _parse_field(args.field)
    if args.ideal == "gamma":
        graph = ext.base.skeleton
    else:
        graph = initial_complex(ext, "star").graph
    table = betti_table(
        graph, field, max_vertices=args.max_vertices, threads=_threads()
    )
    p2 = p2_from_table(table, 2)
    payload = {
        "ideal": args.ideal,
        "field": repr(field),
        "entries": [[i, j, r] for (i, j), r in sorted(table.graded.items())],
        "two_linear": table.is_two_linear(),
        "p2": _jsonable(p2.p2),
        "witnesses": p2.witness_count,
    }
    return _envelope("betti", digest, payload), 0


def cmd_p2(ext, digest, args):
    g = ext.base.skeleton
    if args.mode == "lower":
        try:
            value, wit = lower_bound(ext)
        except NotOrderableError as e:
            return _envelope("p2", digest, {"not_applicable": str(e)}), 2
        payload = {"mode": "lower", "lower": _jsonable(value)}
        if wit is not None:
            payload["witness"] = _cycle_payload(wit, g.rank)
        return _envelope("p2", digest, payload), 0
    if args.mode == "upper":
        value, wit = upper_bound(ext)
        if isinstance(value, NotApplicable):
            return _envelope("p2", digest, {"not_applicable": value.reason}), 2
        payload = {"mode": "upper", "upper": value}
        if wit is not None:
            payload["witness"] = _cycle_payload(wit, g.rank)
        return _envelope("p2", digest, payload), 0

    report = p2_report(ext)
    payload = {
        "mode": args.mode,
        "two_linear": report.two_linear,
        "lower": _jsonable(report.lower),
        "lower_substitution": _jsonable(report.lower_substitution),
        "upper": _jsonable(report.upper),
        "exact": _jsonable(report.exact),
        "hypotheses": _jsonable(report.hypotheses),
        "toricity": {
            "ok": report.toricity.ok,
            "reason": report.toricity.reason,
        },
    }
    if report.lower_witness is not None:
        payload["lower_witness"] = _cycle_payload(report.lower_witness, g.rank)
    if report.upper_witness is not None:
        payload["upper_witness"] = _cycle_payload(report.upper_witness, g.rank)
    if args.mode == "exact" and isinstance(report.exact, Interval):
        return _envelope("p2", digest, payload), 2
    return _envelope("p2", digest, payload), 0


def cmd_poligon(args):
    table = cycle_betti_table(args.n, args.s)
    params = {"n": args.n, "s": args.s}
    digest = hashlib.sha256(
        json.dumps(params, sort_keys=True).encode("utf-8")
    ).hexdigest()
    payload = {
        "n": args.n,
        "s": args.s,
        "entries": [[i, j, r] for (i, j), r in sorted(table.graded.items())],
        "p2": args.n + args.s - 3,
    }
    return _envelope("poligon", digest, payload), 0


def main(argv=None):
    parser = argparse.ArgumentParser(prog="scrollex", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    for name in ("validate", "order", "groebner"):
        p = sub.add_parser(name)
        p.add_argument("file")
    p = sub.add_parser("cycles")
    p.add_argument("file")
    p.add_argument("--kind", choices=("minimal", "virtual"), default="minimal")
    p.add_argument("--cap", type=int, default=DEFAULT_CYCLE_CAP)
    p = sub.add_parser("betti")
    p.add_argument("file")
    p.add_argument("--ideal", choices=("gamma", "initial"), default="gamma")
    p.add_argument("--field", default="q")
    p.add_argument("--max-vertices", type=int, default=20)
    p = sub.add_parser("p2")
    p.add_argument("file")
    p.add_argument("--mode", choices=("lower", "upper", "exact", "auto"), default="auto")
    p = sub.add_parser("poligon")
    p.add_argument("n", type=int)
    p.add_argument("s", type=int)
    p = sub.add_parser("gen-chordal")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--vertices", type=int, default=6)
    p = sub.add_parser("gen-cycle-ext")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--length", type=int, default=None)

    args = parser.parse_args(argv)
    try:
        if args.command == "poligon":
            report, code = cmd_poligon(args)
        elif args.command == "gen-chordal":
            doc = fixtures.chordal_instance(args.seed, args.vertices)
            sys.stdout.write(json.dumps(doc, sort_keys=True, indent=2) + "\n")
            return 0
        elif args.command == "gen-cycle-ext":
            doc = fixtures.random_cycle_extension_instance(args.seed, args.length)
            sys.stdout.write(json.dumps(doc, sort_keys=True, indent=2) + "\n")
            return 0
        else:
            ext, digest = _load(args.file)
            handler = {
                "validate": cmd_validate,
                "order": cmd_order,
                "groebner": cmd_groebner,
                "cycles": cmd_cycles,
                "betti": cmd_betti,
                "p2": cmd_p2,
            }[args.command]
            report, code = handler(ext, digest, args)
    except CycleCapExceeded as e:
        sys.stderr.write(f"error: {e}\n")
        return 3
    except (InstanceError, GraphError, ExtensionError, GuardExceeded) as e:
        sys.stderr.write(f"error: {e}\n")
        return 1
    except (ValueError, OSError) as e:
        sys.stderr.write(f"error: {e}\n")
        return 1
    _emit(report)
    return code


if __name__ == "__main__":
    sys.exit(main())
