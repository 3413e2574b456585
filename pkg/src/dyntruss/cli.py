"""Command-line interface.

Subcommands: ``decompose`` (batch truss numbers of a file), ``bench``
(run one update strategy and emit a JSON report), ``verify`` (replay a
stream with full invariant checking), ``gen-updates`` (write a reusable
stream file).  Exit codes: 0 success, 1 verification failure, 2 input
error.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys

from .bench import BenchConfig, run_strategy, verify_mode
from .decompose import truss_decompose
from .edgelist import load_edge_list
from .errors import ParseError, TrussError, VerificationFailure
from .truss_index import query_k_truss_scan
from .updates import generate_updates, load_stream, save_stream


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="truss",
        description="Dynamic k-truss maintenance toolkit",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_dec = sub.add_parser("decompose", help="compute truss numbers of an edge list")
    p_dec.add_argument("file")
    p_dec.add_argument("--k", type=int, default=None, help="report only the k-trusses at this k")
    p_dec.add_argument("--json", action="store_true", help="emit a JSON summary")

    p_bench = sub.add_parser("bench", help="run one update strategy over a random stream")
    p_bench.add_argument("file")
    p_bench.add_argument("--strategy", required=True, choices=["batch", "progressive", "indexed"])
    p_bench.add_argument("--k", type=int, required=True)
    p_bench.add_argument("--updates", type=int, required=True)
    p_bench.add_argument("--seed", type=int, required=True)
    p_bench.add_argument("--delete-fraction", type=float, default=0.5)
    p_bench.add_argument("--query-every", type=int, default=None)
    p_bench.add_argument("--stream", default=None, help="replay this stream file instead of generating")
    p_bench.add_argument("--out", default=None, help="write the JSON report here (stdout otherwise)")
    p_bench.add_argument("--csv", default=None, help="append an (update_count, strategy, millis) row here")

    p_ver = sub.add_parser("verify", help="replay a stream with every invariant checked")
    p_ver.add_argument("file")
    p_ver.add_argument("--updates", type=int, required=True)
    p_ver.add_argument("--seed", type=int, required=True)
    p_ver.add_argument("--delete-fraction", type=float, default=0.5)

    p_gen = sub.add_parser("gen-updates", help="generate and store an update stream")
    p_gen.add_argument("file")
    p_gen.add_argument("--updates", type=int, required=True)
    p_gen.add_argument("--seed", type=int, required=True)
    p_gen.add_argument("--delete-fraction", type=float, default=0.5)
    p_gen.add_argument("--out", required=True)

    return parser


def _cmd_decompose(args) -> int:
    g, stats = load_edge_list(args.file)
    truss_decompose(g)
    max_phi = g.max_phi()
    levels = range(args.k, args.k + 1) if args.k else range(3, max_phi + 1)
    summary = {
        "vertices": g.vertex_count,
        "edges": g.edge_count,
        "duplicates_dropped": stats.duplicates,
        "self_loops_dropped": stats.self_loops,
        "max_truss": max_phi,
        "trusses": {},
    }
    for k in levels:
        comps = query_k_truss_scan(g, k)
        summary["trusses"][k] = {
            "components": len(comps),
            "edges": sum(len(c) for c in comps),
            "sizes": sorted((len(c) for c in comps), reverse=True),
        }
    if args.json:
        print(json.dumps(summary, indent=2, sort_keys=True))
    else:
        print(f"{args.file}: {summary['vertices']} vertices, {summary['edges']} edges "
              f"(dropped {stats.duplicates} duplicates, {stats.self_loops} self-loops)")
        print(f"max truss number: {max_phi}")
        for k, row in summary["trusses"].items():
            sizes = ", ".join(map(str, row["sizes"])) or "-"
            print(f"  k={k}: {row['components']} trusses, {row['edges']} edges (sizes: {sizes})")
    return 0


def _cmd_bench(args) -> int:
    g, _ = load_edge_list(args.file)
    if args.stream:
        stream = load_stream(args.stream, g)[: args.updates or None]
    else:
        stream = generate_updates(g, args.updates, args.seed, args.delete_fraction)
    cfg = BenchConfig(
        strategy=args.strategy,
        k=args.k,
        update_count=args.updates,
        seed=args.seed,
        delete_fraction=args.delete_fraction,
        query_every=args.query_every,
    )
    report = run_strategy(g, stream, cfg)
    payload = report.to_json()
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(payload + "\n")
        if not args.stream:
            # persist the stream next to the report so other strategies
            # can replay the identical workload
            stem, _ = os.path.splitext(args.out)
            save_stream(stream, stem + ".stream.txt")
        print(f"wrote {args.out}")
    else:
        print(payload)
    if args.csv:
        new_file = not os.path.exists(args.csv)
        with open(args.csv, "a", newline="", encoding="utf-8") as fh:
            writer = csv.writer(fh)
            if new_file:
                writer.writerow(["update_count", "strategy", "millis"])
            writer.writerow([report.update_count, report.strategy,
                             round(report.strategy_total * 1000.0, 3)])
    return 0


def _cmd_verify(args) -> int:
    g, _ = load_edge_list(args.file)
    stream = generate_updates(g, args.updates, args.seed, args.delete_fraction)
    try:
        summary = verify_mode(g, stream)
    except VerificationFailure as exc:
        print(f"FAIL: {exc}", file=sys.stderr)
        return 1
    print(f"verified {summary['ops']} updates: all invariants hold "
          f"({summary['edges_final']} edges at end)")
    return 0


def _cmd_gen_updates(args) -> int:
    g, _ = load_edge_list(args.file)
    stream = generate_updates(g, args.updates, args.seed, args.delete_fraction)
    save_stream(stream, args.out)
    print(f"wrote {len(stream)} ops to {args.out}")
    return 0


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "decompose": _cmd_decompose,
        "bench": _cmd_bench,
        "verify": _cmd_verify,
        "gen-updates": _cmd_gen_updates,
    }
    try:
        return handlers[args.command](args)
    except (OSError, ParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except TrussError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
