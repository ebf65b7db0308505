"""Command-line front end.

Exit codes: 0 = success / property holds, 1 = property fails (violation
found, subset unreachable, not synchronizing, ...), 2 = input or capacity
error.  FILE arguments accept a path, "-" for standard input, or the name
of a bundled example (E6, E12, E21, E48, FIG7).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .core import CapacityError, Dfa, StateSet
from .digraph import Digraph, is_strongly_connected, sccs
from .examples import BUILTIN_NAMES, builtin_example
from .expand import shortest_expanding_word
from .formats import export_dot, parse_automaton, render_automaton, render_word
from .generate import FILTERS, enumerate_standardized
from .orbits import orbit_data, orbit_digraph, restricted_orbit_digraph
from .reach import (
    ExpansionStuckError,
    reach_via_expansion,
    shortest_reaching_word,
    shortest_reset_word,
    verify_don,
)
from .rystsov import is_perfectly_reachable, restricted_rystsov_digraph, rystsov_digraph
from .standardize import StandardizationError, is_standardized, standardize

EXIT_OK = 0
EXIT_PROPERTY_FAILED = 1
EXIT_ERROR = 2

REPORT_FORMAT = "creach/1"

# Brute-force Rystsov construction explores the whole transition monoid;
# past this many states that is no longer a desk-scale computation.
_BRUTE_FORCE_LIMIT = 12


def _load_dfa(source: str) -> Dfa:
    if source == "-":
        return parse_automaton(sys.stdin.read())
    if os.path.exists(source):
        with open(source, encoding="utf-8") as handle:
            return parse_automaton(handle.read())
    if source.upper() in BUILTIN_NAMES:
        return builtin_example(source)
    raise ValueError(f"no such file or built-in example: {source!r}")


def _parse_set(text: str, dfa: Dfa) -> StateSet:
    try:
        members = [int(part) for part in text.split(",") if part.strip() != ""]
    except ValueError:
        raise ValueError(f"--set must be comma-separated integers, got {text!r}") from None
    return dfa.subset(members)


def _emit(args, human: list[str], doc: dict) -> None:
    if getattr(args, "json", False):
        doc = {"format": REPORT_FORMAT, **doc}
        print(json.dumps(doc, indent=2))
    else:
        for line in human:
            print(line)


def _word_doc(word: str | None) -> dict:
    if word is None:
        return {"word": None}
    return {"word": render_word(word), "length": len(word)}


def cmd_analyze(args) -> int:
    dfa = _load_dfa(args.file)
    human: list[str] = [f"states: {dfa.n}"]
    doc: dict = {"command": "analyze", "n": dfa.n}

    standardized = is_standardized(dfa)
    doc["standardized"] = standardized
    std_dfa = None
    if standardized:
        std_dfa = dfa
        human.append("standardized: yes")
    else:
        try:
            report = standardize(dfa)
            std_dfa = report.result
            doc["standardization"] = {
                "circular_letter": report.circular_letter,
                "rotation": report.rotation,
                "shift_k": report.shift_k,
            }
            human.append(
                "standardized: no (standardizable via "
                f"cycle={report.circular_letter}, rotation={report.rotation}, "
                f"shift_k={report.shift_k})"
            )
        except StandardizationError as exc:
            doc["standardization"] = {"error": str(exc)}
            human.append(f"standardized: no ({exc})")

    if std_dfa is not None:
        od = orbit_data(std_dfa)
        doc["orbit"] = {
            "d": od.d,
            "r": od.r,
            "ell": od.ell,
            "orb": list(od.orb),
            "gcds": list(od.gcds),
            "h0_generator": od.h0_generator,
            "h0_is_full": od.h0_is_full,
        }
        human.append(f"orbit: d={od.d} r={od.r} ell={od.ell} orb={list(od.orb)} gcds={list(od.gcds)}")
        human.append(
            f"orbit subgroup: <{od.h0_generator}>"
            + (" = Z_n; the n(n-k) reachability bound is guaranteed" if od.h0_is_full else "")
        )
        doc["don_bound_guaranteed"] = od.h0_is_full
        perfect = is_perfectly_reachable(std_dfa)
        doc["perfectly_reachable"] = perfect
        human.append(f"perfectly reachable: {'yes' if perfect else 'no'}")
    elif dfa.n <= _BRUTE_FORCE_LIMIT:
        perfect = is_perfectly_reachable(dfa)
        doc["perfectly_reachable"] = perfect
        human.append(f"perfectly reachable: {'yes' if perfect else 'no'} (brute force)")
    else:
        doc["perfectly_reachable"] = None
        human.append("perfectly reachable: skipped (not standardizable and n too large for brute force)")

    if args.don:
        report = verify_don(dfa)
        doc["don"] = {
            "violations": len(report.violations),
            "unreachable": len(report.unreachable),
            "completely_reachable": report.completely_reachable,
        }
        human.append(
            f"n(n-k) bound: {len(report.violations)} violations, "
            f"{len(report.unreachable)} unreachable subsets"
        )
    _emit(args, human, doc)
    return EXIT_OK


def _build_digraph(dfa: Dfa, kind: str) -> Digraph:
    if kind == "orbit":
        return orbit_digraph(dfa)
    if kind == "restricted-orbit":
        return restricted_orbit_digraph(dfa)
    if kind == "rystsov":
        if is_standardized(dfa):
            return rystsov_digraph(dfa, "cayley-closure")
        if dfa.n > _BRUTE_FORCE_LIMIT:
            raise CapacityError(
                f"brute-force forced-edge search needs n <= {_BRUTE_FORCE_LIMIT} "
                "on non-standardized input"
            )
        return rystsov_digraph(dfa, "brute-force", max_len=None)
    if kind == "restricted-rystsov":
        return restricted_rystsov_digraph(dfa)
    raise ValueError(f"unknown digraph kind {kind!r}")


def cmd_digraph(args) -> int:
    dfa = _load_dfa(args.file)
    graph = _build_digraph(dfa, args.kind)
    if args.dot is not None:
        dot = export_dot(graph, name="creach")
        if args.dot == "-":
            sys.stdout.write(dot)
            return EXIT_OK
        with open(args.dot, "w", encoding="utf-8") as handle:
            handle.write(dot)
    components = sccs(graph)
    edge_rows = []
    for source, target in sorted(graph.edges):
        label = graph.label_of(source, target)
        edge_rows.append(
            {"source": source, "target": target}
            | ({"label": render_word(label)} if label is not None else {})
        )
    human = [
        f"kind: {args.kind}",
        f"vertices: {graph.n}",
        f"edges: {len(graph.edges)}",
        f"strongly connected: {'yes' if len(components) == 1 else 'no'}",
        f"components: {len(components)}",
    ]
    for comp in components:
        human.append("  {" + ", ".join(str(v) for v in sorted(comp)) + "}")
    doc = {
        "command": "digraph",
        "kind": args.kind,
        "n": graph.n,
        "edges": edge_rows,
        "strongly_connected": len(components) == 1,
        "components": [sorted(comp) for comp in components],
    }
    _emit(args, human, doc)
    return EXIT_OK


def cmd_expand(args) -> int:
    dfa = _load_dfa(args.file)
    subset = _parse_set(args.set, dfa)
    word = shortest_expanding_word(dfa, subset, args.max_len)
    doc = {
        "command": "expand",
        "set": subset.members(),
        "max_len": args.max_len,
        **_word_doc(word),
    }
    if word is None:
        _emit(args, [f"{set(subset)} is not {args.max_len}-expandable"], doc)
        return EXIT_PROPERTY_FAILED
    _emit(args, [f"expanding word: {render_word(word)} (length {len(word)})"], doc)
    return EXIT_OK


def cmd_reach(args) -> int:
    dfa = _load_dfa(args.file)
    subset = _parse_set(args.set, dfa)
    if subset.is_empty:
        raise ValueError("--set must be non-empty")
    if args.method == "bfs":
        word = shortest_reaching_word(dfa, subset)
        doc = {"command": "reach", "method": "bfs", "set": subset.members(), **_word_doc(word)}
        if word is None:
            _emit(args, [f"{set(subset)} is unreachable"], doc)
            return EXIT_PROPERTY_FAILED
        _emit(args, [f"reaching word: {render_word(word)} (length {len(word)})"], doc)
        return EXIT_OK
    try:
        trace = reach_via_expansion(dfa, subset)
    except ExpansionStuckError as exc:
        doc = {
            "command": "reach",
            "method": "expansion",
            "set": subset.members(),
            "stuck": exc.subset.members(),
        }
        _emit(args, [f"expansion stuck at {set(exc.subset)}"], doc)
        return EXIT_PROPERTY_FAILED
    human = []
    for step in trace.steps:
        human.append(
            f"expand {set(step.subset)} by {render_word(step.word)} -> {len(step.expanded)} states"
        )
    human.append(f"final word: {render_word(trace.final_word)} (length {len(trace.final_word)})")
    doc = {
        "command": "reach",
        "method": "expansion",
        "set": subset.members(),
        "steps": [
            {
                "subset": step.subset.members(),
                "word": render_word(step.word),
                "expanded_size": len(step.expanded),
            }
            for step in trace.steps
        ],
        **_word_doc(trace.final_word),
    }
    _emit(args, human, doc)
    return EXIT_OK


def cmd_verify_don(args) -> int:
    dfa = _load_dfa(args.file)
    report = verify_don(dfa)
    human = [f"n = {report.n}, bound per size k: n(n-k)"]
    for row in report.per_size:
        worst = "-" if row.worst_length is None else str(row.worst_length)
        human.append(f"  k={row.k:2d}: reachable {row.reachable}, worst {worst}, bound {row.bound}")
    human.append(f"unreachable subsets: {len(report.unreachable)}")
    if report.violations:
        human.append(f"VIOLATIONS: {len(report.violations)}")
        for violation in report.violations[:10]:
            human.append(
                f"  {set(violation.subset)}: length {violation.length} > bound {violation.bound}"
            )
    else:
        human.append("no violations")
    doc = {
        "command": "verify-don",
        "n": report.n,
        "per_size": [
            {
                "k": row.k,
                "reachable": row.reachable,
                "worst_length": row.worst_length,
                "bound": row.bound,
            }
            for row in report.per_size
        ],
        "violations": [
            {"subset": v.subset.members(), "length": v.length, "bound": v.bound}
            for v in report.violations
        ],
        "unreachable_count": len(report.unreachable),
        "completely_reachable": report.completely_reachable,
    }
    _emit(args, human, doc)
    return EXIT_OK if not report.violations else EXIT_PROPERTY_FAILED


def cmd_sync(args) -> int:
    dfa = _load_dfa(args.file)
    word = shortest_reset_word(dfa)
    doc = {"command": "sync", **_word_doc(word)}
    if word is None:
        _emit(args, ["not synchronizing"], doc)
        return EXIT_PROPERTY_FAILED
    _emit(args, [f"reset word: {render_word(word)} (length {len(word)})"], doc)
    return EXIT_OK


def cmd_example(args) -> int:
    print(render_automaton(builtin_example(args.name)))
    return EXIT_OK


def cmd_enumerate(args) -> int:
    stream = enumerate_standardized(
        args.n,
        filters=args.filter,
        exhaustive=args.exhaustive,
        seed=args.seed,
        count=args.count,
    )
    for dfa in stream:
        print(render_automaton(dfa))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="creach",
        description="Analysis toolkit for completely reachable binary automata.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_file(p):
        p.add_argument("file", help="automaton file, '-' for stdin, or a built-in name")

    def add_json(p):
        p.add_argument("--json", action="store_true", help="emit a structured JSON report")

    p = sub.add_parser("analyze", help="standardization, orbit data, reachability verdicts")
    add_file(p)
    p.add_argument("--don", action="store_true", help="also run the n(n-k) bound check")
    add_json(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("digraph", help="build one of the associated digraphs")
    add_file(p)
    p.add_argument(
        "--kind",
        required=True,
        choices=["orbit", "restricted-orbit", "rystsov", "restricted-rystsov"],
    )
    p.add_argument("--dot", help="write DOT to this path ('-' for stdout)")
    add_json(p)
    p.set_defaults(func=cmd_digraph)

    p = sub.add_parser("expand", help="search for a short expanding word")
    add_file(p)
    p.add_argument("--set", required=True, help="comma-separated states")
    p.add_argument("--max-len", required=True, type=int, dest="max_len")
    add_json(p)
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("reach", help="find a word whose image is the given subset")
    add_file(p)
    p.add_argument("--set", required=True, help="comma-separated states")
    p.add_argument("--method", choices=["bfs", "expansion"], default="bfs")
    add_json(p)
    p.set_defaults(func=cmd_reach)

    p = sub.add_parser("verify-don", help="check the n(n-k) bound on every reachable subset")
    add_file(p)
    add_json(p)
    p.set_defaults(func=cmd_verify_don)

    p = sub.add_parser("sync", help="shortest reset word, if any")
    add_file(p)
    add_json(p)
    p.set_defaults(func=cmd_sync)

    p = sub.add_parser("example", help="print a built-in automaton file")
    p.add_argument("name", help=f"one of: {', '.join(BUILTIN_NAMES)}")
    p.set_defaults(func=cmd_example)

    p = sub.add_parser("enumerate", help="stream standardized DFAs")
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--filter", action="append", default=[], choices=sorted(FILTERS))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--exhaustive", action="store_true")
    p.add_argument("--count", type=int, default=100, help="sample size when not exhaustive")
    p.set_defaults(func=cmd_enumerate)

    return parser


def run_cli(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code else EXIT_OK
    try:
        return args.func(args)
    except BrokenPipeError:
        return EXIT_ERROR
    except (ValueError, CapacityError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


def main() -> int:
    return run_cli(sys.argv[1:])


if __name__ == "__main__":
    sys.exit(main())
