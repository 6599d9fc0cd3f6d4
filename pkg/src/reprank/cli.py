"""Command-line interface: rank, check, certify, complement.

Exit codes: 0 on success / all axioms pass / SAT; 1 on a failed axiom or
UNSAT; 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import pathlib
import sys
from typing import Sequence

from .axioms import AXIOMS_BY_MODE, Axiom, AxiomReport, check
from .certify import CertificateStatus, certify
from .engine import RefinementTrace, rank_graph
from .errors import InputError
from .graphs import ReputationGraph, parse_graph
from .rankings import DEFAULT_ENUMERATION_CAP, Ranking, parse_ranking


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return pathlib.Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc


def _load_graph(path: str) -> ReputationGraph:
    return parse_graph(_read_text(path))


def _parse_axiom_list(raw: str) -> tuple[Axiom, ...]:
    names = [piece.strip() for piece in raw.split(",") if piece.strip()]
    if not names:
        raise InputError("empty axiom list")
    axioms = []
    for name in names:
        try:
            axioms.append(Axiom.from_name(name))
        except ValueError as exc:
            raise InputError(str(exc)) from None
    return tuple(dict.fromkeys(axioms))


def _select_axioms(graph: ReputationGraph, raw: str | None) -> tuple[Axiom, ...]:
    if raw is None:
        return AXIOMS_BY_MODE[graph.mode]
    return _parse_axiom_list(raw)


def _ranking_json(ranking: Ranking) -> list[dict[str, object]]:
    return [{"node": n, "rank": ranking.rank_of(n)} for n in ranking.nodes]


def _report_json(report: AxiomReport) -> dict[str, object]:
    witness = None
    if report.witness is not None:
        witness = {
            "vi": report.witness.vi,
            "vj": report.witness.vj,
            "reason": report.witness.reason,
        }
    return {"axiom": report.axiom.value, "passed": report.passed, "witness": witness}


def _trace_json(trace: RefinementTrace) -> dict[str, object]:
    return {
        "initial": _ranking_json(trace.initial),
        "steps": [
            {
                "iteration": step.index,
                "chosen": step.chosen,
                "witness": step.witness,
                "moved": list(step.moved),
                "left_behind": list(step.left_behind),
                "direction": step.direction,
                "ranking": _ranking_json(step.ranking),
            }
            for step in trace.steps
        ],
    }


def _trace_text(trace: RefinementTrace) -> list[str]:
    # Trace lines are '#' comments so the output still parses as a ranking.
    lines = ["# initial"]
    lines += [f"#   {row}" for row in trace.initial.serialize().splitlines()]
    for step in trace.steps:
        moved = ",".join(step.moved)
        left = ",".join(step.left_behind)
        lines.append(
            f"# iteration {step.index}: chose {step.chosen} (witness "
            f"{step.witness}); moved {step.direction}: {moved}; left behind: {left}"
        )
        lines += [f"#   {row}" for row in step.ranking.serialize().splitlines()]
    return lines


def cmd_rank(args: argparse.Namespace) -> int:
    graph = _load_graph(args.graph)
    ranking, trace = rank_graph(graph)
    if args.format == "json":
        payload: dict[str, object] = {
            "mode": graph.mode.value,
            "ranking": _ranking_json(ranking),
        }
        if args.trace:
            payload["trace"] = _trace_json(trace)
        print(json.dumps(payload, indent=2))
    else:
        if args.trace:
            print("\n".join(_trace_text(trace)))
        print(ranking.serialize(), end="")
    return 0


def cmd_check(args: argparse.Namespace) -> int:
    graph = _load_graph(args.graph)
    ranking = parse_ranking(_read_text(args.ranking))
    axioms = _select_axioms(graph, args.axioms)
    reports = [check(graph, ranking, axiom) for axiom in axioms]
    all_passed = all(report.passed for report in reports)
    if args.format == "json":
        payload = {
            "reports": [_report_json(r) for r in reports],
            "all_passed": all_passed,
        }
        print(json.dumps(payload, indent=2))
    else:
        for report in reports:
            print(report.render_text())
    return 0 if all_passed else 1


def cmd_certify(args: argparse.Namespace) -> int:
    graph = _load_graph(args.graph)
    axioms = _select_axioms(graph, args.axioms)
    certificate = certify(graph, axioms, cap=args.cap)
    if args.format == "json":
        witness = (
            _ranking_json(certificate.witness)
            if certificate.witness is not None
            else None
        )
        payload = {
            "status": certificate.status.value,
            "examined": certificate.examined,
            "witness": witness,
        }
        print(json.dumps(payload, indent=2))
    else:
        print(certificate.render_text())
    return 0 if certificate.status is CertificateStatus.SAT else 1


def cmd_complement(args: argparse.Namespace) -> int:
    graph = _load_graph(args.graph)
    comp = graph.complement()
    if args.format == "json":
        payload = {
            "mode": comp.mode.value,
            "nodes": list(comp.nodes),
            "edges": [
                {"source": src, "sign": kind.value, "target": dst}
                for src, dst, kind in sorted(
                    comp.edges, key=lambda e: (e[0], e[1], e[2].value)
                )
            ],
        }
        print(json.dumps(payload, indent=2))
    else:
        print(comp.serialize(), end="")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="reprank",
        description=(
            "Axiomatic social rankings over reputation graphs: compute "
            "rankings, check them against axioms, and certify axiom "
            "satisfiability exhaustively."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p: argparse.ArgumentParser) -> None:
        p.add_argument(
            "--format",
            choices=("text", "json"),
            default="text",
            help="output rendering (default: text)",
        )

    p_rank = sub.add_parser("rank", help="rank a reputation graph")
    p_rank.add_argument("graph", help="edge-list file, or - for stdin")
    p_rank.add_argument(
        "--trace", action="store_true", help="show each refinement iteration"
    )
    add_format(p_rank)
    p_rank.set_defaults(handler=cmd_rank)

    p_check = sub.add_parser("check", help="check a ranking against axioms")
    p_check.add_argument("graph", help="edge-list file, or - for stdin")
    p_check.add_argument("ranking", help="ranking file (NAME RANK lines), or - for stdin")
    p_check.add_argument(
        "--axioms",
        help="comma-separated axiom names (default: all for the graph's mode)",
    )
    add_format(p_check)
    p_check.set_defaults(handler=cmd_check)

    p_certify = sub.add_parser(
        "certify", help="exhaustively test whether any ranking satisfies the axioms"
    )
    p_certify.add_argument("graph", help="edge-list file, or - for stdin")
    p_certify.add_argument(
        "--axioms",
        help="comma-separated axiom names (default: all for the graph's mode)",
    )
    p_certify.add_argument(
        "--cap",
        type=int,
        default=DEFAULT_ENUMERATION_CAP,
        help="refuse graphs with more nodes than this (default: %(default)s)",
    )
    add_format(p_certify)
    p_certify.set_defaults(handler=cmd_certify)

    p_comp = sub.add_parser(
        "complement", help="negative complement of a positive graph"
    )
    p_comp.add_argument("graph", help="edge-list file, or - for stdin")
    add_format(p_comp)
    p_comp.set_defaults(handler=cmd_complement)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code if isinstance(exc.code, int) else 2
        return 0 if code == 0 else 2
    try:
        return args.handler(args)
    except (InputError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
