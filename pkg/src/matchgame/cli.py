"""Command-line front door: solve, pack, match, family tables, verification
suites, tree scans, and the server launcher.

Exit codes: 0 success, 1 verification failure, 2 invalid input, 3 exact-search
cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import engine, families, packing, solver, strategies, verify
from .engine import MAXIMIZER, MINIMIZER, GameSpec, Pattern
from .errors import CapExceeded, InvalidInput, StrategyError
from .families import FamilyInstance
from .graphs import Graph, graph_from_json, read_edge_list

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_INVALID = 2
EXIT_CAP = 3


# -- input plumbing ------------------------------------------------------------


def _load_graph(args) -> tuple[Graph, FamilyInstance | None]:
    family = getattr(args, "family", None)
    path = getattr(args, "graph", None)
    if family and path:
        raise InvalidInput("give either --family or --graph, not both")
    if family:
        inst = families.parse_family(family)
        return inst.graph, inst
    if path:
        try:
            with open(path, "r", encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise InvalidInput(f"cannot read {path}: {exc}") from exc
        try:
            if text.lstrip().startswith("{"):
                return graph_from_json(text), None
            return read_edge_list(text), None
        except ValueError as exc:
            raise InvalidInput(f"bad graph file {path}: {exc}") from exc
    raise InvalidInput("one of --family or --graph is required")


def _make_spec(args) -> GameSpec:
    return GameSpec(Pattern(args.pattern), args.initiator)


def _emit(args, payload: dict, text: str) -> None:
    if getattr(args, "json", False):
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def _move_lines(moves) -> list[str]:
    return [
        f"  {i}. init {mv.initiation} -> take {{{', '.join(map(str, mv.image.to_list()))}}}"
        for i, mv in enumerate(moves, start=1)
    ]


# -- strategy registry ---------------------------------------------------------

_SCRIPT_FACTORIES = {
    "path-spacer": lambda inst, spec: strategies.PathStripeInitiator(inst),
    "grid2-sweep": lambda inst, spec: strategies.TwoRowStarInitiator(inst),
    "grid2-subgrid": lambda inst, spec: strategies.TwoRowStarResponder(inst),
    "grid2-columns": lambda inst, spec: strategies.TwoRowStripeResponder(
        inst, spec.responder
    ),
    "grid3-sweep": lambda inst, spec: strategies.ThreeRowStarInitiator(inst),
    "rooks-rows": lambda inst, spec: strategies.RooksStarInitiator(inst),
    "rooks-ledger": lambda inst, spec: strategies.RooksStripeResponder(inst),
}

STRATEGY_NAMES = ("optimal",) + tuple(sorted(_SCRIPT_FACTORIES))


def make_strategy(
    name: str,
    g: Graph,
    spec: GameSpec,
    inst: FamilyInstance | None,
    cap: int = solver.DEFAULT_CAP,
):
    if name == "optimal":
        return strategies.OptimalStrategy(solver.Analyzer(g, spec, cap=cap))
    factory = _SCRIPT_FACTORIES.get(name)
    if factory is None:
        raise InvalidInput(
            f"unknown strategy {name!r}; choose from {', '.join(STRATEGY_NAMES)}"
        )
    if inst is None:
        raise InvalidInput(f"strategy {name!r} is scripted for a family; use --family")
    return factory(inst, spec)


# -- commands ------------------------------------------------------------------


def cmd_solve(args) -> int:
    g, _ = _load_graph(args)
    spec = _make_spec(args)
    res = solver.solve(g, spec, cap=args.cap, jobs=args.jobs, want_pv=args.pv)
    payload = {
        "value": res.value,
        "vertices_taken": res.vertices_taken,
        "n": g.n,
        "perfect": res.perfect,
        "stats": {
            "states": res.stats.states,
            "memo_hits": res.stats.memo_hits,
            "seconds": round(res.stats.seconds, 6),
        },
    }
    lines = [
        f"value {res.value}  ({res.vertices_taken} of {g.n} vertices taken)"
        f"  perfect: {'yes' if res.perfect else 'no'}"
    ]
    if args.pv:
        payload["pv"] = [mv.to_dict() for mv in res.pv]
        lines.append("principal variation:")
        lines.extend(_move_lines(res.pv))
    lines.append(
        f"search: {res.stats.states} states, {res.stats.memo_hits} memo hits,"
        f" {res.stats.seconds:.4f}s"
    )
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_pack(args) -> int:
    g, _ = _load_graph(args)
    if args.mode == "k3":
        cap = args.cap if args.cap is not None else packing.K3_CAP
        ok = packing.has_k3_partition(g, cap=cap)
        _emit(args, {"mode": "k3", "partitionable": ok}, "yes" if ok else "no")
        return EXIT_OK
    fn = packing.mu if args.mode == "max" else packing.min_maximal
    res = fn(g, cap=args.cap if args.cap is not None else packing.DEFAULT_CAP)
    payload = {"mode": args.mode, **res.to_dict()}
    lines = [str(res.size)]
    for img in res.witness:
        lines.append(f"  {{{', '.join(map(str, img.to_list()))}}}")
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_match(args) -> int:
    g, inst = _load_graph(args)
    spec = _make_spec(args)
    initiator = make_strategy(args.init_strategy, g, spec, inst, cap=args.cap)
    responder = make_strategy(args.resp_strategy, g, spec, inst, cap=args.cap)
    record = strategies.run_match(g, spec, initiator, responder)
    payload = record.to_dict()
    payload["init_strategy"] = args.init_strategy
    payload["resp_strategy"] = args.resp_strategy
    lines = []
    if args.trace:
        lines.extend(_move_lines(record.moves))
    lines.append(
        f"value {record.value} after {len(record.moves)} moves"
        f" ({record.taken} of {g.n} vertices taken)"
    )
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def _report_exit(args, reports: list[verify.VerificationReport]) -> int:
    payload = {
        "passed": all(r.passed for r in reports),
        "reports": [r.to_dict() for r in reports],
    }
    if getattr(args, "json_out", None):
        with open(args.json_out, "w", encoding="utf-8") as fh:
            json.dump(payload, fh, indent=2)
    if getattr(args, "json", False):
        print(json.dumps(payload, indent=2))
    else:
        for rep in reports:
            print(rep.render_text(verbose=getattr(args, "verbose", False)))
        total = sum(len(r.rows) for r in reports)
        failed = sum(len(r.failures) for r in reports)
        print(
            f"{'ALL PASS' if failed == 0 else 'FAILURES'}:"
            f" {total - failed}/{total} checks across {len(reports)} suites"
        )
    return EXIT_OK if payload["passed"] else EXIT_FAIL


def cmd_table(args) -> int:
    template = args.family_template
    if "N" not in template:
        raise InvalidInput("--family-template must contain the placeholder N")
    try:
        lo_s, hi_s = args.range.split("..", 1)
        lo, hi = int(lo_s), int(hi_s)
    except ValueError as exc:
        raise InvalidInput("--range must look like 3..16") from exc
    if lo > hi:
        raise InvalidInput("--range is empty")
    initiators = [MAXIMIZER, MINIMIZER] if args.initiator == "both" else [args.initiator]
    rep = verify.VerificationReport(
        "table",
        f"solver values vs closed forms for {template}, N={lo}..{hi}",
    )
    for k in range(lo, hi + 1):
        inst = families.parse_family(template.replace("N", str(k)))
        for init in initiators:
            spec = GameSpec(Pattern(args.pattern), init)
            got = solver.solve(inst.graph, spec, cap=args.cap, want_pv=False).value
            want = families.closed_form_instance(inst, spec)
            label = f"{template.replace('N', str(k))} {args.pattern} {init}-init"
            if want is None:
                rep.rows.append(verify.Row(label, "-", str(got), True))
            else:
                rep.check(label, want, got)
    rep.seconds = 0.0
    return _report_exit(args, [rep])


def cmd_tree_scan(args) -> int:
    try:
        orders = tuple(int(tok) for tok in args.orders.split(","))
    except ValueError as exc:
        raise InvalidInput("--orders must be comma-separated integers") from exc
    for n in orders:
        if n not in (3, 6, 9, 12):
            raise InvalidInput("tree scans cover orders 3, 6, 9, 12")
    kinds = [engine.STAR, engine.STRIPE] if args.pattern == "all" else [args.pattern]
    responders = (
        [MAXIMIZER, MINIMIZER] if args.responder == "all" else [args.responder]
    )
    rep = verify.VerificationReport(
        "tree-scan",
        "solver perfection equals the structural recognizer on every free tree",
    )
    for n in orders:
        for kind in kinds:
            for responder in responders:
                total, perfect_count, bad = verify.scan_trees(n, kind, responder)
                rep.check(
                    f"n={n} {kind} {responder}-responding"
                    f" ({total} trees, {perfect_count} perfect)",
                    0,
                    len(bad),
                )
                for t in bad:
                    rep.check(f"  mismatch edges={sorted(t.edges)}", "agree", "differ")
    rep.seconds = 0.0
    return _report_exit(args, [rep])


def cmd_verify_all(args) -> int:
    names = tuple(args.suite) if args.suite else None
    if names:
        known = {name for name, _ in verify.ALL_SUITES}
        for name in names:
            if name not in known:
                raise InvalidInput(
                    f"unknown suite {name!r}; choose from {', '.join(sorted(known))}"
                )
    reports = verify.verify_all(quick=args.quick, suites=names)
    return _report_exit(args, reports)


def cmd_serve(args) -> int:
    import uvicorn

    from .server import create_app

    app = create_app(cap=args.cap)
    uvicorn.run(app, host=args.host, port=args.port, log_level="info")
    return EXIT_OK


# -- parser ---------------------------------------------------------------------


def _add_graph_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--family", help="family specifier, e.g. path:7 or grid:2x5")
    p.add_argument("--graph", help="path to a graph file (json or edge list)")


def _add_spec_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--pattern",
        choices=[engine.STAR, engine.STRIPE, engine.UNROOTED],
        required=True,
    )
    p.add_argument("--initiator", choices=[MAXIMIZER, MINIMIZER], required=True)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="matchgame",
        description="Exact solver and verification suites for pattern-removal "
        "matcher games on small graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="exact game value of one instance")
    _add_graph_flags(p)
    _add_spec_flags(p)
    p.add_argument("--pv", action="store_true", help="print the principal variation")
    p.add_argument("--json", action="store_true")
    p.add_argument("--cap", type=int, default=solver.DEFAULT_CAP)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(fn=cmd_solve)

    p = sub.add_parser("pack", help="packing numbers and triangle partitions")
    _add_graph_flags(p)
    p.add_argument("--mode", choices=["max", "minmaximal", "k3"], required=True)
    p.add_argument("--json", action="store_true")
    p.add_argument(
        "--cap",
        type=int,
        default=None,
        help=f"vertex cap (default {packing.DEFAULT_CAP}, {packing.K3_CAP} for k3)",
    )
    p.set_defaults(fn=cmd_pack)

    p = sub.add_parser("match", help="play two strategies against each other")
    _add_graph_flags(p)
    _add_spec_flags(p)
    p.add_argument("--init-strategy", default="optimal", metavar="NAME")
    p.add_argument("--resp-strategy", default="optimal", metavar="NAME")
    p.add_argument("--trace", action="store_true", help="print each move")
    p.add_argument("--json", action="store_true")
    p.add_argument("--cap", type=int, default=solver.DEFAULT_CAP)
    p.set_defaults(fn=cmd_match)

    p = sub.add_parser("table", help="closed-form table vs solver over a range")
    p.add_argument(
        "--family-template",
        required=True,
        help="family specifier with N as the parameter, e.g. path:N or grid:2xN",
    )
    p.add_argument("--range", required=True, help="parameter range, e.g. 3..16")
    p.add_argument(
        "--pattern",
        choices=[engine.STAR, engine.STRIPE, engine.UNROOTED],
        required=True,
    )
    p.add_argument("--initiator", choices=[MAXIMIZER, MINIMIZER, "both"], default="both")
    p.add_argument("--json", action="store_true")
    p.add_argument("--json-out", metavar="FILE")
    p.add_argument("--verbose", action="store_true", help="print passing rows too")
    p.add_argument("--cap", type=int, default=solver.DEFAULT_CAP)
    p.set_defaults(fn=cmd_table)

    p = sub.add_parser("tree-scan", help="perfection vs recognizers on all free trees")
    p.add_argument("--orders", default="3,6,9,12", help="comma list from {3,6,9,12}")
    p.add_argument(
        "--pattern", choices=[engine.STAR, engine.STRIPE, "all"], default="all"
    )
    p.add_argument(
        "--responder", choices=[MAXIMIZER, MINIMIZER, "all"], default="all"
    )
    p.add_argument("--json", action="store_true")
    p.add_argument("--json-out", metavar="FILE")
    p.add_argument("--verbose", action="store_true")
    p.set_defaults(fn=cmd_tree_scan)

    p = sub.add_parser("verify-all", help="run every verification suite")
    p.add_argument("--quick", action="store_true", help="trim the heavy scans")
    p.add_argument(
        "--suite",
        action="append",
        metavar="NAME",
        help="run only the named suite (repeatable)",
    )
    p.add_argument("--json", action="store_true")
    p.add_argument(
        "--json-out",
        metavar="FILE",
        default="verify_report.json",
        help="where to write the JSON report (default verify_report.json)",
    )
    p.add_argument("--verbose", action="store_true")
    p.set_defaults(fn=cmd_verify_all)

    p = sub.add_parser("serve", help="run the HTTP play server")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8765)
    p.add_argument("--cap", type=int, default=solver.DEFAULT_CAP)
    p.set_defaults(fn=cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except InvalidInput as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except StrategyError as exc:
        print(f"strategy error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except CapExceeded as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP


if __name__ == "__main__":
    sys.exit(main())
