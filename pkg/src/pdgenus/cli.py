"""Command-line front end.

Every subcommand wraps one library operation or report suite and offers
``--json`` for machine-readable output.  Exit codes: 0 on success, 1 on
usage or parse errors, 2 when a check suite finds a property violation.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from .diagrams import (
    ChordDiagram,
    enumerate_diagrams,
    from_map,
    partial_dual_diagram,
    product,
)
from .golden import verify_golden_table
from .maps import CombinatorialMap
from .weight_system import check_4T, dim_quotient, pd_genus_report

USAGE_ERROR = 1
VIOLATION_ERROR = 2


class _CliParser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # exit 1, not argparse's default 2
        self.print_usage(sys.stderr)
        raise SystemExit((USAGE_ERROR, f"{self.prog}: error: {message}"))


def _build_parser() -> argparse.ArgumentParser:
    parser = _CliParser(
        prog="pdgenus",
        description="Partial duals, genera, and the partial-dual genus polynomial "
        "of oriented ribbon graphs and chord diagrams.",
    )
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_parser(name: str, **kwargs) -> argparse.ArgumentParser:
        p = sub.add_parser(name, **kwargs)
        # accepted before or after the subcommand
        p.add_argument(
            "--json", action="store_true", default=argparse.SUPPRESS,
            help="machine-readable output",
        )
        return p

    p = add_parser("poly", help="genus polynomial over all partial duals")
    p.add_argument("diagram")
    p.add_argument(
        "--oracle",
        dest="method",
        action="store_const",
        const="explicit",
        default="fast",
        help="build every partial dual instead of using the boundary-count path",
    )
    p.add_argument(
        "--fast", dest="method", action="store_const", const="fast",
        help="boundary-count genus path (default)",
    )

    p = add_parser("dual", help="partial dual of a diagram, as circles and chords")
    p.add_argument("diagram")
    p.add_argument("--chords", default="", help="comma-separated chord labels")

    p = add_parser("genus", help="genus of a diagram or of a map file")
    p.add_argument("input", help="a diagram word, or a path to a sigma/alpha map file")

    p = add_parser("enum", help="all chord diagrams of a given order")
    p.add_argument("n", type=int)
    p.add_argument("--limit", type=int, default=None, help="print at most this many")

    p = add_parser("check4t", help="verify the four-term relation exhaustively")
    p.add_argument("n", type=int)
    p.add_argument("--threads", type=int, default=1)

    p = add_parser("dims", help="dimension of diagrams modulo four-term relations")
    p.add_argument("n", type=int)

    add_parser("table", help="golden order-4 table with computed values and errata")

    p = add_parser("product", help="connected sum of two diagrams")
    p.add_argument("d1")
    p.add_argument("d2")
    p.add_argument("--cuts", default="0,0", help="gap positions, e.g. 2,1")

    p = add_parser("slide", help="slide one chord end along another chord")
    p.add_argument("diagram")
    p.add_argument("--move", type=int, required=True, help="word position of the moving end")
    p.add_argument("--along", type=int, required=True, help="label of the fixed chord")

    p = add_parser("interlace", help="interlacement graph and sequence")
    p.add_argument("diagram")
    return parser


def _format_relation(relation: dict[str, int]) -> str:
    parts = []
    for label, c in relation.items():
        mag = abs(c)
        term = label if mag == 1 else f"{mag}*{label}"
        if not parts:
            parts.append(f"-{term}" if c < 0 else term)
        else:
            parts.append(f"- {term}" if c < 0 else f"+ {term}")
    return " ".join(parts) if parts else "0"


def _print(payload: dict, text: str, as_json: bool) -> None:
    if as_json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def _cmd_poly(args) -> int:
    report = pd_genus_report(ChordDiagram.parse(args.diagram), method=args.method)
    _print(report.to_json(), str(report.polynomial), args.json)
    return 0


def _cmd_dual(args) -> int:
    diagram = ChordDiagram.parse(args.diagram)
    chords = set()
    if args.chords:
        chords = {int(tok) for tok in args.chords.split(",") if tok}
    dual = partial_dual_diagram(diagram, chords)
    m = dual.to_map()
    payload = dual.to_json()
    payload["genus"] = m.genus()
    v, e, f, c = m.counts()
    payload["counts"] = {"v": v, "e": e, "f": f, "c": c}
    lines = [f"circle {i}: " + " ".join(map(str, circle)) for i, circle in enumerate(dual.circles)]
    lines.append("pairing: " + " ".join(f"{a}-{b}({s})" for (a, b), s in zip(dual.pairing, dual.side)))
    lines.append(f"genus: {m.genus()}  v={v} e={e} f={f} c={c}")
    _print(payload, "\n".join(lines), args.json)
    return 0


def _cmd_genus(args) -> int:
    if os.path.exists(args.input):
        with open(args.input, "r", encoding="utf-8") as fh:
            m = CombinatorialMap.from_text(fh.read())
    else:
        m = ChordDiagram.parse(args.input).to_map()
    v, e, f, c = m.counts()
    payload = {"genus": m.genus(), "v": v, "e": e, "f": f, "c": c}
    _print(payload, str(m.genus()), args.json)
    return 0


def _cmd_enum(args) -> int:
    diagrams = enumerate_diagrams(args.n)
    shown = diagrams if args.limit is None else diagrams[: args.limit]
    payload = {
        "n": args.n,
        "count": len(diagrams),
        "diagrams": [list(d.word) for d in shown],
    }
    text = "\n".join(str(d) for d in shown)
    text += f"\ncount: {len(diagrams)}"
    _print(payload, text, args.json)
    return 0


def _cmd_check4t(args) -> int:
    report = check_4T(args.n, threads=args.threads)
    if args.json:
        for violation in report["violations_list"]:
            print(json.dumps(violation, sort_keys=True))
        summary = {k: report[k] for k in ("n", "quadruples", "violations")}
        print(json.dumps(summary, sort_keys=True))
    else:
        for violation in report["violations_list"]:
            print("violation:", violation)
        print(
            f"n={report['n']}: {report['quadruples']} quadruples, "
            f"{report['violations']} violations"
        )
    return VIOLATION_ERROR if report["violations"] else 0


def _cmd_dims(args) -> int:
    diagrams = len(enumerate_diagrams(args.n))
    dim = dim_quotient(args.n)
    payload = {"n": args.n, "dim": dim, "diagrams": diagrams}
    _print(payload, str(dim), args.json)
    return 0


def _cmd_table(args) -> int:
    rows, errata = verify_golden_table()
    if args.json:
        payload = {"rows": [r.to_json() for r in rows], "errata": errata}
        print(json.dumps(payload, sort_keys=True))
    else:
        header = f"{'row':>3}  {'name':6} {'interlace sequence':20} {'genus polynomial':18} {'status':6} relation / errata"
        print(header)
        print("-" * len(header))
        for r in rows:
            status = "ok" if r.gamma_matches and not r.issues else "errata"
            if r.basis:
                rel = "(basis)"
            else:
                rel = f"= {_format_relation(r.computed_relation or {})}"
            notes = ("; ".join(r.issues)) if r.issues else ""
            print(
                f"{r.row:>3}  {r.label:6} {r.computed_interlace:20} "
                f"{str(r.computed_gamma):18} {status:6} {rel}"
                + (f"  [{notes}]" if notes else "")
            )
        print()
        print("errata:")
        for e in errata:
            print(f"  rows {e['rows']} ({e['kind']}): {e['note']}")
    bad = any(not r.gamma_matches for r in rows)
    return VIOLATION_ERROR if bad else 0


def _cmd_product(args) -> int:
    try:
        cut1, cut2 = (int(tok) for tok in args.cuts.split(","))
    except ValueError:
        raise SystemExit((USAGE_ERROR, "pdgenus product: --cuts expects two integers i,j"))
    result = product(
        ChordDiagram.parse(args.d1), ChordDiagram.parse(args.d2), cut1, cut2
    )
    payload = {"word": list(result.word), "canonical": list(result.canonical().word)}
    _print(payload, str(result), args.json)
    return 0


def _cmd_slide(args) -> int:
    diagram = ChordDiagram.parse(args.diagram)
    m = diagram.to_map()
    edge = next(
        (i for i, (a, _) in enumerate(m.edges) if diagram.word[a] == args.along), None
    )
    if edge is None:
        raise SystemExit((USAGE_ERROR, f"pdgenus slide: no chord labelled {args.along}"))
    slid = m.slide(args.move, edge)
    result = from_map(slid).to_diagram()
    payload = {"word": list(result.word), "canonical": list(result.canonical().word)}
    _print(payload, str(result.canonical()), args.json)
    return 0


def _cmd_interlace(args) -> int:
    diagram = ChordDiagram.parse(args.diagram)
    matrix = diagram.interlace_graph()
    sequence = diagram.interlace_sequence()
    payload = {
        "matrix": matrix,
        "sequence": list(sequence.counts),
        "factors": [list(f) for f in sequence.factors],
        "display": str(sequence),
    }
    text = "\n".join(" ".join(map(str, row)) for row in matrix)
    text += f"\nsequence: {sequence}"
    _print(payload, text, args.json)
    return 0


_COMMANDS = {
    "poly": _cmd_poly,
    "dual": _cmd_dual,
    "genus": _cmd_genus,
    "enum": _cmd_enum,
    "check4t": _cmd_check4t,
    "dims": _cmd_dims,
    "table": _cmd_table,
    "product": _cmd_product,
    "slide": _cmd_slide,
    "interlace": _cmd_interlace,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args)
    except SystemExit as exc:
        if isinstance(exc.code, tuple):
            code, message = exc.code
            print(message, file=sys.stderr)
            return code
        return USAGE_ERROR if exc.code else 0
    except ValueError as exc:
        print(f"pdgenus: error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    raise SystemExit(main())
