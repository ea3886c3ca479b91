"""Command-line interface.

Subcommands: family (generate spectrum/graph/report for a built-in
family), analyze (full report for a spectrum or graph file), srg-classify
(just the strong-regularity verdict), realizable-multipartite (rule-based
verdict for part sizes), verify-corpus (sweep the union-of-cliques check
over families, bundled data or a directory of spectrum files).

Exit codes: 0 success / decided, 1 verification failure, 2 input error,
3 undecided.
"""

from __future__ import annotations

import argparse
import functools
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from .families import (
    GroupDescriptor,
    bundled_spectra,
    is_prime_power,
    load_spectrum_file,
)
from .graph import GkGraph, graph_from_json_dict, graph_to_json_dict
from .spectrum import (
    Spectrum,
    gk_graph_of_spectrum,
    spectrum_from_json_dict,
    spectrum_to_json_dict,
)
from .theorems import (
    OPEN,
    analyze,
    check_tau_union_of_cliques,
    classify_srg,
    multipartite_realizability,
)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_INPUT = 2
EXIT_UNDECIDED = 3

DEFAULT_SWEEP = "alt:5..100,sym:5..100,psl2:3..2000,pgl2:3..2000,bundled"


def _emit(obj: dict, output: str | None) -> None:
    text = json.dumps(obj)
    if output:
        Path(output).write_text(text + "\n", encoding="utf-8")
    else:
        print(text)


def _load_input_file(path: str) -> tuple[GkGraph, str]:
    """Auto-detect a spectrum or graph JSON file; return graph and name."""
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ValueError(f"{path}: malformed JSON ({exc})") from exc
    if isinstance(data, dict) and "maximal_orders" in data:
        spec = spectrum_from_json_dict(data)
        return gk_graph_of_spectrum(spec), spec.name
    if isinstance(data, dict) and "vertices" in data:
        return graph_from_json_dict(data), Path(path).stem
    raise ValueError(f"{path}: neither a spectrum nor a graph JSON object")


def _cmd_family(args) -> int:
    desc = GroupDescriptor(kind=args.kind, n=args.n, q=args.q)
    spec = desc.spectrum()
    if args.emit == "spectrum":
        _emit(spectrum_to_json_dict(spec), args.output)
    elif args.emit == "graph":
        _emit(graph_to_json_dict(gk_graph_of_spectrum(spec)), args.output)
    else:
        g = gk_graph_of_spectrum(spec)
        _emit(analyze(g, spec.name).to_dict(), args.output)
    return EXIT_OK


def _cmd_analyze(args) -> int:
    g, name = _load_input_file(args.file)
    _emit(analyze(g, name).to_dict(), args.output)
    return EXIT_OK


def _cmd_srg_classify(args) -> int:
    g, _ = _load_input_file(args.file)
    _emit(classify_srg(g).to_dict(), args.output)
    return EXIT_OK


def _cmd_realizable_multipartite(args) -> int:
    try:
        parts = [int(tok) for tok in args.parts.split(",") if tok.strip()]
    except ValueError as exc:
        raise ValueError(f"cannot parse part sizes {args.parts!r}") from exc
    verdict = multipartite_realizability(parts)
    _emit(verdict.to_dict(), args.output)
    return EXIT_UNDECIDED if verdict.verdict == OPEN else EXIT_OK


def _parse_sweep(spec: str) -> list[tuple]:
    tasks: list[tuple] = []
    for token in spec.split(","):
        token = token.strip()
        if not token:
            continue
        if token == "bundled":
            tasks.extend(("bundled", s.name) for s in bundled_spectra())
            continue
        kind, _, rng = token.partition(":")
        if kind in ("alt", "sym"):
            lo_def, hi_def = 5, 100
        elif kind in ("psl2", "pgl2"):
            lo_def, hi_def = 3, 2000
        else:
            raise ValueError(f"unknown sweep token {token!r}")
        lo_s, sep, hi_s = rng.partition("..")
        if rng and not sep:
            lo = hi = int(lo_s)
        else:
            lo = int(lo_s) if lo_s else lo_def
            hi = int(hi_s) if hi_s else hi_def
        for v in range(lo, hi + 1):
            if kind in ("psl2", "pgl2") and not is_prime_power(v):
                continue
            tasks.append((kind, v))
    return tasks


def _corpus_task(task: tuple, report_checks: bool) -> dict:
    kind = task[0]
    if kind == "file":
        spec = load_spectrum_file(task[1])
    elif kind == "bundled":
        spec = next(s for s in bundled_spectra() if s.name == task[1])
    elif kind in ("alt", "sym"):
        spec = GroupDescriptor(kind=kind, n=task[1]).spectrum()
    else:
        spec = GroupDescriptor(kind=kind, q=task[1]).spectrum()
    g = gk_graph_of_spectrum(spec)
    rec: dict = {"name": spec.name}
    if 2 in g.labels:
        ok, witness = check_tau_union_of_cliques(g)
        rec["tau_union_of_cliques"] = ok
        rec["witness"] = list(witness) if witness else None
    else:
        rec["tau_union_of_cliques"] = None
    if report_checks:
        report = analyze(g, spec.name)
        consistent = report.t_at_2 is None or (
            report.t_at_2 <= report.t
            and len(report.tau) + 1 + g.degree(2) == g.n
        )
        rec["report_consistent"] = consistent
    return rec


def _cmd_verify_corpus(args) -> int:
    if args.path and args.builtin:
        raise ValueError("give a spectrum directory or --builtin, not both")
    if args.path:
        directory = Path(args.path)
        if not directory.is_dir():
            raise ValueError(f"{args.path}: not a directory")
        files = sorted(directory.glob("*.json"))
        if not files:
            raise ValueError(f"{args.path}: no spectrum files found")
        tasks: list[tuple] = [("file", str(p)) for p in files]
    elif args.builtin:
        tasks = _parse_sweep(args.builtin)
    else:
        raise ValueError("nothing to verify: give a directory or --builtin")

    started = time.perf_counter()
    runner = functools.partial(_corpus_task, report_checks=args.report_checks)
    jobs = max(1, args.jobs)
    if jobs == 1 or len(tasks) < 4:
        records = [runner(t) for t in tasks]
    else:
        chunk = max(1, len(tasks) // (jobs * 8))
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            records = list(pool.map(runner, tasks, chunksize=chunk))
    duration = time.perf_counter() - started

    checked = [r for r in records if r["tau_union_of_cliques"] is not None]
    failures = [r for r in checked if not r["tau_union_of_cliques"]]
    summary = {
        "processed": len(records),
        "skipped_no_vertex_2": len(records) - len(checked),
        "checks": {
            "tau_union_of_cliques": {
                "processed": len(checked),
                "passed": len(checked) - len(failures),
                "failed": len(failures),
            }
        },
        "failures": [
            {"name": r["name"], "witness": r["witness"]} for r in failures
        ],
        "duration_seconds": round(duration, 3),
    }
    if args.report_checks:
        rc = [r for r in records if "report_consistent" in r]
        bad = [r for r in rc if not r["report_consistent"]]
        summary["checks"]["report_consistency"] = {
            "processed": len(rc),
            "passed": len(rc) - len(bad),
            "failed": len(bad),
        }
        for r in bad:
            summary["failures"].append({"name": r["name"], "witness": "report"})
    print(json.dumps(summary, indent=2))
    if summary["failures"]:
        for f in summary["failures"]:
            print(f"FAIL {f['name']}: witness {f['witness']}", file=sys.stderr)
        return EXIT_CHECK_FAILED
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gk",
        description="Prime graphs of finite groups: construction and analysis",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("family", help="emit spectrum/graph/report for a family member")
    p.add_argument("--kind", required=True, choices=["alt", "sym", "psl2", "pgl2"])
    p.add_argument("--n", type=int, help="degree for alt/sym")
    p.add_argument("--q", type=int, help="prime power for psl2/pgl2")
    p.add_argument("--emit", choices=["spectrum", "graph", "report"], default="report")
    p.add_argument("-o", "--output", help="write JSON here instead of stdout")
    p.set_defaults(func=_cmd_family)

    p = sub.add_parser("analyze", help="full report for a spectrum or graph file")
    p.add_argument("file")
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("srg-classify", help="strong-regularity verdict for a file")
    p.add_argument("file")
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_srg_classify)

    p = sub.add_parser(
        "realizable-multipartite",
        help="realizability verdict for complete multipartite part sizes",
    )
    p.add_argument("parts", help="comma-separated part sizes, e.g. 3,3,3")
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_realizable_multipartite)

    p = sub.add_parser("verify-corpus", help="sweep checks over many graphs")
    p.add_argument("path", nargs="?", help="directory of spectrum JSON files")
    p.add_argument(
        "--builtin",
        nargs="?",
        const=DEFAULT_SWEEP,
        help=f"family sweep spec (default: {DEFAULT_SWEEP})",
    )
    p.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    p.add_argument(
        "--report-checks",
        action="store_true",
        help="additionally re-derive report consistency for each graph",
    )
    p.set_defaults(func=_cmd_verify_corpus)
    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OverflowError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
