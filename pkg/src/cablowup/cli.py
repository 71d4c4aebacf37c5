"""Command-line front end: ``cablowup <command> [options]``.

Exit status: 0 ok, 1 ``--expect`` mismatch, 2 bad input, 3 unsupported shape.
Results go to stdout, diagnostics to stderr.
"""
from __future__ import annotations

import argparse
import json
import sys

from .blowup import WeightVector, make_charts, quotient_blowup_charts
from .classify import classify_extractions
from .errors import Inconsistency, InvalidInput, UnsupportedShape
from .germ import parse_germ
from .quotient import (CyclicQuotient, duval_of_surface_quotient, is_isolated_action,
                       is_terminal_hyperquotient, is_terminal_quotient, parse_quotient,
                       reid_tai_quotient)
from .surface import surface_report
from .terminality import blowup_verdict

EXIT_OK, EXIT_MISMATCH, EXIT_INPUT, EXIT_UNSUPPORTED = 0, 1, 2, 3


def _dump(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


# -- charts -----------------------------------------------------------------

def cmd_charts(args):
    g, w = args.germ, args.weights
    charts = make_charts(g, w)
    if args.format == "json":
        return _dump({
            "germ": g.render(), "weights": list(w),
            "charts": [{"index": ch.index, "order": ch.order,
                        "weights": list(ch.raw_weights),
                        "terms": [list(t) for t in ch.terms],
                        "rendered": ch.render()} for ch in charts]})
    return "".join(ch.render() + "\n" for ch in charts)


# -- verdict ----------------------------------------------------------------

def cmd_verdict(args):
    v = blowup_verdict(args.germ, args.weights)
    d = v.to_dict()
    if args.format == "json":
        return _dump({"germ": args.germ.render(), **d})
    lines = [f"germ: {args.germ.render()}",
             f"weights: {v.weights}",
             f"discrepancy: {v.discrepancy}",
             f"exceptional: irreducible={_yes(v.irreducible)} reduced={_yes(v.reduced)}",
             f"terminal: {_yes(v.terminal)}"]
    lines += ["  " + p.render() for p in v.singular_points]
    lines.append(f"rejection: {v.rejection_reason or '-'}")
    return "\n".join(lines) + "\n"


# -- surface ----------------------------------------------------------------

def cmd_surface(args):
    g, w = args.germ, args.weights
    rep = surface_report(g, w)
    if args.format == "json":
        return _dump({"germ": g.render(), "weights": list(w), **rep.to_dict()})
    rows = [("K^2", rep.k2), ("K^2 (resolution)", rep.k2_resolution),
            ("Euler number (resolution)", rep.euler_resolution),
            ("b2 (resolution)", rep.b2_resolution), ("Picard number", rep.picard)]
    width = max(len(k) for k, _ in rows)
    lines = [f"germ: {g.render()}", f"weights: {w}"]
    lines += [f"{k:<{width}}  {v}" for k, v in rows]
    lines.append("singular points:")
    for p in rep.singular_points:
        chain = ",".join(map(str, p.chain.entries))
        tail = f" x{p.count}" if p.count > 1 else ""
        lines.append(f"  U{p.chart} {p.location}: {p.label} [{chain}]{tail}")
    if not rep.singular_points:
        lines.append("  none")
    c = rep.curve_data
    if c is not None:
        lines.append(f"curves on {{{c.section} = 0}}: {c.component_count} x multiplicity "
                     f"{c.multiplicity}, pairwise {c.pairwise_intersection}, "
                     f"self {c.self_intersection}, resolved {c.resolved_self_intersection}")
    return "\n".join(lines) + "\n"


# -- classify ---------------------------------------------------------------

def _explain(report):
    lines = ["rejected:"]
    for reason, n in sorted(report.rejected_summary.items(), key=lambda kv: (-kv[1], kv[0])):
        lines.append(f"  {n:>8}  {reason}")
    return lines


def cmd_classify(args):
    report = classify_extractions(args.germ, args.bound, workers=args.workers)
    report = report.filtered(args.min_discrepancy, args.max_discrepancy)
    if args.expect:
        with open(args.expect) as fh:
            expected = json.load(fh)
        got = json.loads(report.to_json())
        keys = [k for k in expected if got.get(k) != expected[k]]
        if keys:
            for k in keys:
                print(f"mismatch in {k!r}: expected {expected[k]!r}, got {got.get(k)!r}",
                      file=sys.stderr)
            args.exit_status = EXIT_MISMATCH
    if args.format == "json":
        return report.to_json()
    if args.format == "tsv":
        return report.to_tsv()
    lines = [f"germ: {report.germ.render()}", f"bound: {report.bound}",
             f"accepted: {len(report.accepted)}"]
    lines += [f"  {w}  discrepancy {d}" for w, d in report.accepted]
    lines.append(f"discrepancy-1 count: {report.discrepancy_one_count}")
    lines.append(f"orbits: {len(report.orbits)}")
    lines += ["  " + " ~ ".join(str(w) for w in o) for o in report.orbits]
    if args.explain:
        lines += _explain(report)
    return "\n".join(lines) + "\n"


# -- quotient ---------------------------------------------------------------

def cmd_quotient(args):
    q = parse_quotient(args.literal)
    if args.equation_weight is not None:
        q = CyclicQuotient(q.order, q.weights, args.equation_weight)
    test = args.test
    if test == "hyperquotient" and not q.is_hyper:
        raise InvalidInput("hyperquotient test needs an equation weight (1/r(...;e) or --equation-weight)")
    if test == "terminal":
        result = is_terminal_hyperquotient(q) if q.is_hyper else is_terminal_quotient(q)
    elif test == "hyperquotient":
        result = is_terminal_hyperquotient(q)
    elif test == "isolated":
        result = is_isolated_action(q)
    elif test == "reid-tai":
        result = reid_tai_quotient(q)
    elif test == "canonical":
        result = q.canonical().render()
    else:
        if len(q.weights) != 2:
            raise InvalidInput("duval test needs a surface quotient 1/r(a,b)")
        t = duval_of_surface_quotient(q)
        result = {"label": t.label, "chain": list(t.chain.entries),
                  "du_val": t.is_du_val}
    if args.format == "json":
        return _dump({"quotient": q.render(), "test": test, "result": result})
    if isinstance(result, bool):
        shown = "true" if result else "false"
    elif isinstance(result, dict):
        shown = f"{result['label']} chain [{','.join(map(str, result['chain']))}]"
    else:
        shown = result
    return f"{q.render()} {test}: {shown}\n"


def cmd_quotient_blowup(args):
    ws = [int(t) for t in args.weights.split(",")]
    charts = quotient_blowup_charts(args.order, ws)
    if args.format == "json":
        return _dump({"order": args.order, "weights": ws,
                      "charts": [{"index": c.index, "order": c.order,
                                  "weights": list(c.weights), "rendered": c.render(),
                                  "coordinates": c.coordinate_change(args.order)}
                                 for c in charts]})
    return "".join(f"{c.render()}   [{c.coordinate_change(args.order)}]\n" for c in charts)


# -- parser -----------------------------------------------------------------

def _germ(text):
    try:
        return parse_germ(text)
    except InvalidInput as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _weights(text):
    try:
        return WeightVector.parse(text)
    except InvalidInput as exc:
        raise argparse.ArgumentTypeError(str(exc))


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_INPUT)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="cablowup", description="Weighted blow-ups of cA germs xy + f(z,u) = 0.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help_, germ=True, weights=True, formats=("text", "json")):
        sp = sub.add_parser(name, help=help_)
        if germ:
            sp.add_argument("--germ", type=_germ, required=True, help='e.g. "xy + z^3 + u^4"')
        if weights:
            sp.add_argument("--weights", type=_weights, required=True, help="a,b,c,d")
        sp.add_argument("--format", choices=formats, default="text")
        sp.set_defaults(func=func)
        return sp

    add("charts", cmd_charts, "the four affine charts of the blow-up")
    add("verdict", cmd_verdict, "discrepancy, exceptional divisor and terminality")
    add("surface", cmd_surface, "invariants of the exceptional surface")
    sp = add("classify", cmd_classify, "enumerate terminal weighted blow-ups", weights=False,
             formats=("text", "json", "tsv"))
    sp.add_argument("--bound", type=int, default=30)
    sp.add_argument("--workers", type=int, default=1, help="process pool size")
    sp.add_argument("--min-discrepancy", type=int)
    sp.add_argument("--max-discrepancy", type=int)
    sp.add_argument("--expect", metavar="PATH", help="JSON fixture to compare against")
    sp.add_argument("--explain", action="store_true", help="tally rejection reasons")
    sp = add("quotient", cmd_quotient, "tests on a cyclic quotient literal", germ=False,
             weights=False)
    sp.add_argument("literal", help="1/r(w1,...) or 1/r(w1,...;e)")
    sp.add_argument("--test", default="terminal",
                    choices=("terminal", "isolated", "reid-tai", "duval", "canonical",
                             "hyperquotient"))
    sp.add_argument("--equation-weight", type=int)
    sp = add("quotient-blowup", cmd_quotient_blowup, "charts of a weighted blow-up of C^n/Z_m",
             germ=False, weights=False)
    sp.add_argument("--order", type=int, required=True, help="m")
    sp.add_argument("--weights", required=True, help="a1,...,an")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    args.exit_status = EXIT_OK
    try:
        out = args.func(args)
    except UnsupportedShape as exc:
        print(f"unsupported: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except (InvalidInput, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except Inconsistency as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    sys.stdout.write(out)
    return args.exit_status


if __name__ == "__main__":
    sys.exit(main())
