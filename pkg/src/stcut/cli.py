"""Command-line interface: bridges, cuts, verify, gen, bench.

Output is deterministic byte-for-byte for a given input and flag set: JSON
with a fixed key order (or a flat key/value TSV), LF line endings. Exit
codes are a stable contract: 0 success, 1 input error, 2 no s-t path,
3 verification mismatch.
"""
from __future__ import annotations

import argparse
import json
import os
import statistics
import sys
import time
from typing import Optional

import numpy as np

from .articulation import st_articulation_points
from .bridges import CutReport, st_bridges
from .gen import FAMILIES, BadSpec, GenSpec, generate
from .graph import (
    DirectedGraph,
    EndpointOutOfRange,
    MissingHeader,
    ParseError,
    UnknownEdgeId,
    parse_edge_list,
    serialize_edge_list,
)
from .oracle import PreconditionUnreachable, full_oracle_report

SCHEMA_VERSION = "1.0"

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_NO_PATH = 2
EXIT_MISMATCH = 3

_INPUT_ERRORS = (ParseError, MissingHeader, EndpointOutOfRange, UnknownEdgeId, BadSpec, OSError, ValueError)


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on usage errors; 2 is reserved for NoPath.
    def error(self, message):
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _read_input(path: str) -> bytes:
    if path == "-":
        return sys.stdin.buffer.read()
    with open(path, "rb") as fh:
        return fh.read()


def _load_labels(path: Optional[str], n: int) -> Optional[list[str]]:
    if path is None:
        return None
    with open(path, "r", encoding="utf-8") as fh:
        labels = [line.rstrip("\n") for line in fh]
    if len(labels) < n:
        raise ValueError(f"labels file has {len(labels)} lines, need {n}")
    return labels[:n]


def _sequence_json(report: CutReport, g: DirectedGraph):
    if report.kind == "bridge":
        return [
            {"id": e, "tail": int(g.tails[e]), "head": int(g.heads[e])}
            for e in report.sequence
        ]
    return list(report.sequence)


def _stats_json(g: DirectedGraph, report: Optional[CutReport]):
    if report is None:
        return {"n": g.n, "m": g.m, "path_len": None, "phases": None, "visited": None}
    st = report.stats
    return {"n": g.n, "m": g.m, "path_len": st.path_len, "phases": st.phases, "visited": st.visited}


def _report_document(
    kind: str,
    g: DirectedGraph,
    s: int,
    t: int,
    report: Optional[CutReport],
    show_path: bool,
    labels: Optional[list[str]],
) -> dict:
    doc = {
        "schema_version": SCHEMA_VERSION,
        "kind": kind,
        "no_path": report is None,
        "s": int(s),
        "t": int(t),
        "sequence": None if report is None else _sequence_json(report, g),
        "components": None if report is None else report.components,
        "comp": None if report is None else report.comp.tolist(),
        "path_used": report.path_used if (report is not None and show_path) else None,
        "labels": labels,
        "stats": _stats_json(g, report),
    }
    return doc


def _emit_json(doc) -> None:
    sys.stdout.write(json.dumps(doc, indent=2))
    sys.stdout.write("\n")


def _emit_report_tsv(doc: dict) -> None:
    out = []
    out.append(f"schema_version\t{doc['schema_version']}")
    out.append(f"kind\t{doc['kind']}")
    out.append(f"no_path\t{1 if doc['no_path'] else 0}")
    out.append(f"s\t{doc['s']}")
    out.append(f"t\t{doc['t']}")
    if not doc["no_path"]:
        if doc["kind"] == "bridge":
            seq = " ".join(f"{e['id']}:{e['tail']}->{e['head']}" for e in doc["sequence"])
        else:
            seq = " ".join(str(v) for v in doc["sequence"])
        out.append(f"sequence\t{seq}")
        out.append("comp\t" + " ".join(str(c) for c in doc["comp"]))
        for i, members in enumerate(doc["components"], start=1):
            out.append(f"component\t{i}\t" + " ".join(str(v) for v in members))
        if doc["path_used"] is not None:
            out.append("path_used\t" + " ".join(str(v) for v in doc["path_used"]))
    if doc["labels"] is not None:
        for i, lab in enumerate(doc["labels"]):
            out.append(f"label\t{i}\t{lab}")
    st = doc["stats"]
    out.append(
        "stats\t" + " ".join(f"{k}={'-' if st[k] is None else st[k]}" for k in ("n", "m", "path_len", "phases", "visited"))
    )
    sys.stdout.write("\n".join(out) + "\n")


def _run_report(args, kind: str) -> int:
    text = _read_input(args.input)
    g, s, t = parse_edge_list(text)
    labels = _load_labels(args.labels, g.n)
    if kind == "bridge":
        report = st_bridges(g, s, t)
    else:
        report = st_articulation_points(g, s, t)
    doc = _report_document(kind, g, s, t, report, args.path, labels)
    if args.format == "json":
        _emit_json(doc)
    else:
        _emit_report_tsv(doc)
    return EXIT_NO_PATH if report is None else EXIT_OK


def _spec_from_args(args, seed: Optional[int] = None) -> GenSpec:
    return GenSpec(
        family=args.family,
        n=args.n,
        density=args.density,
        seed=args.seed if seed is None else seed,
        planted=args.planted,
        unreachable=getattr(args, "unreachable", False),
    )


def _verify_instance(g: DirectedGraph, s: int, t: int, planted, limit: int, workers: int) -> dict:
    checks: dict[str, bool] = {}
    diff: dict = {}

    bridge_rep = st_bridges(g, s, t)
    artic_rep = st_articulation_points(g, s, t)
    try:
        oracle = full_oracle_report(g, s, t, limit=limit, max_workers=workers)
    except PreconditionUnreachable:
        oracle = None

    if oracle is None or bridge_rep is None:
        agree = oracle is None and bridge_rep is None and artic_rep is None
        checks["no_path_agreement"] = agree
        if not agree:
            diff["no_path"] = {"algorithm": bridge_rep is None, "oracle": oracle is None}
    else:
        pairs = {
            "bridge_set": (sorted(bridge_rep.sequence), sorted(oracle.bridges)),
            "bridge_order": (list(bridge_rep.sequence), oracle.bridge_order),
            "artic_set": (sorted(artic_rep.sequence), sorted(oracle.articulation)),
            "artic_order": (list(artic_rep.sequence), oracle.articulation_order),
            "comp_bridge": (bridge_rep.comp.tolist(), oracle.comp_bridge.tolist()),
            "comp_artic": (artic_rep.comp.tolist(), oracle.comp_artic.tolist()),
        }
        if planted is not None:
            pairs["planted_bridges"] = (list(bridge_rep.sequence), list(planted))
            if planted == []:
                pairs["planted_no_artic"] = (list(artic_rep.sequence), [])
        for name, (got, want) in pairs.items():
            ok = got == want
            checks[name] = ok
            if not ok:
                diff[name] = {"algorithm": got, "expected": want}
    return {"ok": all(checks.values()), "checks": checks, "diff": diff or None}


def _diff_documents(computed: dict, expected: dict) -> dict:
    diff = {}
    keys = sorted(set(computed) | set(expected))
    for key in keys:
        if computed.get(key) != expected.get(key):
            diff[key] = {"computed": computed.get(key), "expected": expected.get(key)}
    return diff


def _run_verify(args) -> int:
    workers = int(os.environ.get("STCUT_THREADS", "1") or "1")
    instances = []
    if args.input is not None:
        text = _read_input(args.input)
        g, s, t = parse_edge_list(text)
        instances.append((f"file:{args.input}", g, s, t, None))
    else:
        if args.family is None or args.n is None:
            raise ValueError("verify needs --input or a generator spec (--family and --n)")
        for i in range(args.count):
            spec = _spec_from_args(args, seed=args.seed + i)
            g, s, t, planted = generate(spec)
            instances.append((f"gen:{spec.family}/n={spec.n}/density={spec.density}/seed={spec.seed}", g, s, t, planted))

    results = []
    all_ok = True
    for name, g, s, t, planted in instances:
        res = _verify_instance(g, s, t, planted, args.limit_paths, workers)
        res = {"source": name, **res}
        results.append(res)
        all_ok = all_ok and res["ok"]

    if args.expect is not None:
        with open(args.expect, "r", encoding="utf-8") as fh:
            expected = json.load(fh)
        name, g, s, t, _ = instances[0]
        kind = expected.get("kind", "bridge")
        report = st_bridges(g, s, t) if kind == "bridge" else st_articulation_points(g, s, t)
        computed = _report_document(kind, g, s, t, report, expected.get("path_used") is not None, None)
        diff = _diff_documents(computed, expected)
        ok = not diff
        results.append({"source": f"expect:{args.expect}", "ok": ok, "checks": {"document": ok}, "diff": diff or None})
        all_ok = all_ok and ok

    doc = {
        "schema_version": SCHEMA_VERSION,
        "verdict": "PASS" if all_ok else "FAIL",
        "instances": results,
    }
    _emit_json(doc)
    return EXIT_OK if all_ok else EXIT_MISMATCH


def _run_gen(args) -> int:
    g, s, t, _ = generate(_spec_from_args(args))
    sys.stdout.write(serialize_edge_list(g, s, t))
    return EXIT_OK


def _target_nodes(family: str, m_target: int, density: float, planted: Optional[int]) -> int:
    """Node count whose generated instance lands near ``m_target`` edges."""
    k = (planted or 1) + 1
    if family == "planted_chain":
        # Each block carries ~(1 + density) * b edges plus constant scaffolding.
        n = (m_target - 5 * k) / (1.0 + density)
    elif family == "parallel_braid":
        n = (m_target - 4) / max(density, 1e-9)
    else:
        n = m_target / max(density, 1e-9)
    return max(int(n), 2)


def _run_bench(args) -> int:
    sizes = [int(float(tok)) for tok in args.sizes.split(",") if tok]
    rows = []
    for m_target in sizes:
        n = _target_nodes(args.family, m_target, args.density, args.planted)
        spec = GenSpec(family=args.family, n=n, density=args.density, seed=args.seed, planted=args.planted)
        g, s, t, _ = generate(spec)
        times = []
        report = None
        for _ in range(args.repeats):
            t0 = time.perf_counter()
            report = st_bridges(g, s, t)
            times.append(time.perf_counter() - t0)
        st = report.stats
        rows.append(
            {
                "family": args.family,
                "n": g.n,
                "m": g.m,
                "repeats": args.repeats,
                "median_ms": round(statistics.median(times) * 1000.0, 3),
                "visited": st.visited,
                "phases": st.phases,
                "edge_scans": st.edge_scans,
                "queue_pushes": st.queue_pushes,
                "path_len": st.path_len,
            }
        )
    if args.format == "json":
        _emit_json({"schema_version": SCHEMA_VERSION, "rows": rows})
    else:
        cols = ["family", "n", "m", "repeats", "median_ms", "visited", "phases", "edge_scans", "queue_pushes", "path_len"]
        lines = ["\t".join(cols)]
        lines.extend("\t".join(str(r[c]) for c in cols) for r in rows)
        sys.stdout.write("\n".join(lines) + "\n")
    return EXIT_OK


def _add_io_flags(p: _Parser) -> None:
    p.add_argument("--input", default="-", help="edge-list file, '-' for stdin")
    p.add_argument("--format", choices=("json", "tsv"), default="json")
    p.add_argument("--labels", default=None, help="optional node-label file, one label per line")
    p.add_argument("--path", action="store_true", help="include the s-t path used in the report")


def _add_gen_flags(p: _Parser, require: bool) -> None:
    p.add_argument("--family", choices=FAMILIES, required=require, default=None)
    p.add_argument("--n", type=int, required=require, default=None)
    p.add_argument("--density", type=float, default=1.0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--planted", type=int, default=None)


def build_parser() -> _Parser:
    parser = _Parser(prog="stcut", description="s-t bridges and articulation points of directed multigraphs")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bridges", parents=[], help="ordered s-t bridges and components")
    _add_io_flags(p)

    p = sub.add_parser("cuts", help="ordered s-t articulation points and components")
    _add_io_flags(p)

    p = sub.add_parser("verify", help="diff the traversal against the deletion oracle")
    p.add_argument("--input", default=None, help="edge-list file, '-' for stdin")
    _add_gen_flags(p, require=False)
    p.add_argument("--unreachable", action="store_true")
    p.add_argument("--count", type=int, default=1, help="number of consecutive seeds when generating")
    p.add_argument("--limit-paths", type=int, default=10_000, dest="limit_paths")
    p.add_argument("--expect", default=None, help="JSON report document to diff against")

    p = sub.add_parser("gen", help="emit a generated instance in edge-list format")
    _add_gen_flags(p, require=True)
    p.add_argument("--unreachable", action="store_true")

    p = sub.add_parser("bench", help="timing sweep over generated instances")
    p.add_argument("--family", choices=FAMILIES, default="planted_chain")
    p.add_argument("--sizes", default="100000,200000,400000,800000", help="comma-separated target edge counts")
    p.add_argument("--density", type=float, default=1.0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--planted", type=int, default=8)
    p.add_argument("--repeats", type=int, default=5)
    p.add_argument("--format", choices=("json", "tsv"), default="tsv")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "bridges":
            return _run_report(args, "bridge")
        if args.command == "cuts":
            return _run_report(args, "articulation")
        if args.command == "verify":
            return _run_verify(args)
        if args.command == "gen":
            return _run_gen(args)
        return _run_bench(args)
    except _INPUT_ERRORS as exc:
        print(f"stcut: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
