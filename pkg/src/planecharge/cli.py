"""Batch command-line front end.

Every command reads graphs from JSON files ({"n": ..., "rot": [[...], ...]}),
prints one deterministic JSON report to stdout, and exits 0 for successful
queries (pass or info), 1 when a verification fails, and 2 on usage or
input errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from typing import Optional, Sequence

from . import discharging, matcher, reducibility
from .catalog import CATALOG_ORDER
from .choosability import ListAssignment, is_k_choosable, l_coloring
from .corpus import enumerate_class, named_examples, random_class_member
from .errors import GraphError
from .plane_graph import (
    PlaneGraph,
    class_membership,
    load_graph_file,
    to_file_dict,
)
from .square import SimpleGraph, as_simple, square

REPORT_SCHEMA = "planecharge-report/1"


class CliInputError(Exception):
    """Bad input file or value; reported on stderr with exit code 2."""


@dataclass(frozen=True)
class RunReport:
    command: str
    inputs: dict
    outcome: str  # "pass" | "fail" | "info"
    payload: dict

    @property
    def exit_code(self) -> int:
        return 1 if self.outcome == "fail" else 0

    def to_json(self) -> str:
        body = {
            "schema": REPORT_SCHEMA,
            "command": self.command,
            "inputs": self.inputs,
            "outcome": self.outcome,
            "exit_code": self.exit_code,
            "payload": self.payload,
        }
        return json.dumps(body, sort_keys=True, indent=2)


def _load(path: str) -> PlaneGraph:
    try:
        return load_graph_file(path)
    except OSError as exc:
        raise CliInputError(f"cannot read graph file {path!r}: {exc.strerror}")
    except (ValueError, GraphError) as exc:
        raise CliInputError(f"bad graph file {path!r}: {exc}")


def _simple_dict(graph: SimpleGraph) -> dict:
    return {"n": graph.vertex_count, "edges": [list(e) for e in graph.edges()]}


def _match_dict(emb: matcher.MatchEmbedding) -> dict:
    return {
        "config": emb.config_id,
        "roles": {name: v for name, v in emb.roles},
        "faces": list(emb.faces),
    }


def _charge_map(charges: dict) -> dict:
    return {str(k): c.twelfths for k, c in sorted(charges.items())}


def _cmd_inspect(args) -> RunReport:
    g = _load(args.graph)
    report = class_membership(g)
    payload = {
        "vertices": g.vertex_count,
        "edges": g.edge_count,
        "faces": g.face_count,
        "degrees": [g.degree(v) for v in range(g.vertex_count)],
        "face_lengths": sorted(g.face_lengths()),
        "class": {
            "is_simple": report.is_simple,
            "is_connected": report.is_connected,
            "max_degree": report.max_degree,
            "has_5_cycle": report.has_5_cycle,
            "euler_ok": report.euler_ok,
            "in_class": report.in_class,
        },
    }
    return RunReport("inspect", {"graph": args.graph}, "info", payload)


def _cmd_square(args) -> RunReport:
    g = _load(args.graph)
    return RunReport(
        "square", {"graph": args.graph}, "info", {"square": _simple_dict(square(g))}
    )


def _parse_lists(text: str, n: int) -> ListAssignment:
    try:
        data = json.loads(text)
        if not isinstance(data, list) or len(data) != n:
            raise ValueError(f"need one list per vertex ({n})")
        return ListAssignment.from_lists(data)
    except (ValueError, TypeError) as exc:
        raise CliInputError(f"bad --lists value: {exc}")


def _cmd_color(args) -> RunReport:
    g = _load(args.graph)
    assignment = _parse_lists(args.lists, g.vertex_count)
    coloring = l_coloring(as_simple(g), assignment)
    payload = {
        "colorable": coloring is not None,
        "coloring": None if coloring is None else [coloring[v] for v in range(g.vertex_count)],
    }
    return RunReport(
        "color", {"graph": args.graph, "lists": args.lists}, "info", payload
    )


def _cmd_choosable(args) -> RunReport:
    g = _load(args.graph)
    try:
        verdict = is_k_choosable(as_simple(g), args.k)
    except (ValueError, GraphError) as exc:
        raise CliInputError(str(exc))
    payload = {
        "k": args.k,
        "choosable": verdict.choosable,
        "patterns_checked": verdict.patterns_checked,
        "bad_assignment": None
        if verdict.bad_assignment is None
        else [sorted(s) for s in verdict.bad_assignment.lists],
    }
    return RunReport(
        "choosable", {"graph": args.graph, "k": args.k}, "info", payload
    )


def _entry_payload(result: reducibility.CatalogEntryResult) -> dict:
    body: dict = {
        "id": result.config_id,
        "kind": result.kind,
        "passed": result.passed,
        "notes": list(result.notes),
    }
    if result.report is not None:
        rep = result.report
        body.update(
            {
                "condition1_ok": rep.condition1_ok,
                "condition2_ok": rep.condition2_ok,
                "smaller_ok": rep.smaller_ok,
                "choosable": rep.choosable,
                "f_matches_expected": rep.f_matches_expected,
                "f": {str(v): f for v, f in sorted(rep.computed_f.items())},
            }
        )
    return body


def _cmd_verify_lemma(args) -> RunReport:
    if args.id not in CATALOG_ORDER:
        raise CliInputError(f"unknown configuration id {args.id!r}")
    results = {r.config_id: r for r in reducibility.verify_catalog()}
    result = results[args.id]
    return RunReport(
        "verify-lemma",
        {"id": args.id},
        "pass" if result.passed else "fail",
        _entry_payload(result),
    )


def _cmd_verify_catalog(args) -> RunReport:
    results = reducibility.verify_catalog()
    payload = {
        "entries": [_entry_payload(r) for r in results],
        "passed": sum(1 for r in results if r.passed),
        "failed": sum(1 for r in results if not r.passed),
    }
    report = RunReport(
        "verify-catalog",
        {"report": args.report},
        "pass" if all(r.passed for r in results) else "fail",
        payload,
    )
    if args.report:
        with open(args.report, "w", encoding="utf-8") as fh:
            fh.write(report.to_json())
            fh.write("\n")
    return report


def _cmd_match(args) -> RunReport:
    g = _load(args.graph)
    if args.config is not None:
        if args.config not in CATALOG_ORDER:
            raise CliInputError(f"unknown configuration id {args.config!r}")
        matches = matcher.find_configuration(g, args.config)
        payload = {
            "config": args.config,
            "matches": [_match_dict(m) for m in matches],
            "count": len(matches),
        }
    else:
        first = matcher.find_any_reducible(g)
        payload = {
            "first_reducible": None if first is None else _match_dict(first),
            "counts": {
                cid: len(matcher.find_configuration(g, cid))
                for cid in CATALOG_ORDER
            },
        }
    return RunReport(
        "match", {"graph": args.graph, "config": args.config}, "info", payload
    )


def _cmd_discharge(args) -> RunReport:
    g = _load(args.graph)
    try:
        audit = discharging.final_audit(g)
    except GraphError as exc:
        raise CliInputError(str(exc))
    state = audit.state
    payload: dict = {
        "vertex_charge_twelfths": _charge_map(state.vertex_charge),
        "face_charge_twelfths": _charge_map(state.face_charge),
        "total_twelfths": state.total().twelfths,
        "negatives": [
            {"kind": n.kind, "id": str(n.ident), "twelfths": n.charge.twelfths}
            for n in audit.negatives
        ],
        "reconciliation_ok": audit.reconciliation_ok,
    }
    if args.face is not None:
        try:
            face_audit = discharging.edge_level_audit(g, args.face)
        except IndexError:
            raise CliInputError(f"no face with index {args.face}")
        except GraphError as exc:
            raise CliInputError(str(exc))
        payload["face_audit"] = {
            "face": face_audit.face,
            "length": face_audit.length,
            "residual_twelfths": face_audit.residual.twelfths,
            "edge_final_twelfths": {
                f"{u}-{v}": c.twelfths
                for (u, v), c in sorted(face_audit.edge_final.items())
            },
            "sink_received_twelfths": _charge_map(face_audit.sink_received),
        }
        if args.ledger:
            payload["face_audit"]["transfers"] = [
                {
                    "rule": t.rule,
                    "source": str(t.source),
                    "sink": str(t.sink),
                    "twelfths": t.amount.twelfths,
                }
                for t in face_audit.transfers
            ]
    if args.ledger:
        payload["transfers"] = [
            {
                "rule": t.rule,
                "source": str(t.source),
                "sink": str(t.sink),
                "twelfths": t.amount.twelfths,
            }
            for t in state.log
        ]
    outcome = "info" if audit.reconciliation_ok else "fail"
    return RunReport(
        "discharge",
        {"graph": args.graph, "face": args.face, "ledger": args.ledger},
        outcome,
        payload,
    )


def _cmd_enumerate(args) -> RunReport:
    if not 2 <= args.n <= 8:
        raise CliInputError(f"--n must be in 2..8, got {args.n}")
    os.makedirs(args.out, exist_ok=True)
    written = []
    for i, g in enumerate(enumerate_class(args.n)):
        name = f"class_v{g.vertex_count}_{i:04d}.graph"
        path = os.path.join(args.out, name)
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(to_file_dict(g), fh, sort_keys=True)
            fh.write("\n")
        written.append(name)
    return RunReport(
        "enumerate",
        {"n": args.n, "out": args.out},
        "info",
        {"count": len(written), "files": written},
    )


def _cmd_gen(args) -> RunReport:
    if args.n < 2:
        raise CliInputError(f"--n must be at least 2, got {args.n}")
    g = random_class_member(args.seed, args.n)
    return RunReport(
        "gen",
        {"seed": args.seed, "n": args.n},
        "info",
        {"graph": to_file_dict(g), "in_class": class_membership(g).in_class},
    )


def _cmd_examples(args) -> RunReport:
    payload = {
        ng.name: {"graph": to_file_dict(ng.graph), "provenance": ng.provenance}
        for ng in named_examples()
    }
    if args.out:
        os.makedirs(args.out, exist_ok=True)
        for ng in named_examples():
            with open(
                os.path.join(args.out, f"{ng.name}.graph"), "w", encoding="utf-8"
            ) as fh:
                json.dump(to_file_dict(ng.graph), fh, sort_keys=True)
                fh.write("\n")
    return RunReport("examples", {"out": args.out}, "info", payload)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="planecharge",
        description="plane-graph configuration checking, choosability, and"
        " exact discharging audits",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("inspect", help="basic structure and class membership")
    p.add_argument("graph")
    p.set_defaults(func=_cmd_inspect)

    p = sub.add_parser("square", help="distance-at-most-2 square of the graph")
    p.add_argument("graph")
    p.set_defaults(func=_cmd_square)

    p = sub.add_parser("color", help="color from explicit per-vertex lists")
    p.add_argument("graph")
    p.add_argument("--lists", required=True, help='JSON like "[[1,2],[1,3]]"')
    p.set_defaults(func=_cmd_color)

    p = sub.add_parser("choosable", help="exact k-choosability with witness")
    p.add_argument("graph")
    p.add_argument("-k", type=int, required=True)
    p.set_defaults(func=_cmd_choosable)

    p = sub.add_parser("verify-lemma", help="verify one catalog entry")
    p.add_argument("id")
    p.set_defaults(func=_cmd_verify_lemma)

    p = sub.add_parser("verify-catalog", help="verify all 19 catalog entries")
    p.add_argument("--report", default=None, help="also write the report here")
    p.set_defaults(func=_cmd_verify_catalog)

    p = sub.add_parser("match", help="find configurations in a graph")
    p.add_argument("graph")
    p.add_argument("--config", default=None, choices=list(CATALOG_ORDER))
    p.set_defaults(func=_cmd_match)

    p = sub.add_parser("discharge", help="charge rules and per-face audits")
    p.add_argument("graph")
    p.add_argument("--face", type=int, default=None)
    p.add_argument("--ledger", action="store_true")
    p.set_defaults(func=_cmd_discharge)

    p = sub.add_parser("enumerate", help="write all class members up to n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("gen", help="seeded random lattice class member")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("examples", help="the named example graphs")
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_examples)

    return parser


def run(argv: Sequence[str]) -> RunReport:
    """Parse and execute one command; raises CliInputError on bad input."""
    args = _build_parser().parse_args(argv)
    return args.func(args)


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        report = run(sys.argv[1:] if argv is None else argv)
    except CliInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(report.to_json())
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
