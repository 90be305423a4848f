"""Command-line interface: score, crawl, index, eval, stats.

Every subcommand is deterministic: identical inputs (and --rng-seed where
randomness is involved) produce byte-identical outputs. Diagnostics go to
stderr; summaries and reports go to stdout or the requested output files.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from pathlib import Path

from . import analytics, corpus, crawler, quality, retrieval
from .errors import QCrawlError

RECORD_FORMATS = ("jsonl", "csv")


def _parse_format(value: str) -> tuple[str, str]:
    """'in:out' format pair; a single name applies to both sides."""
    parts = value.split(":")
    if len(parts) == 1:
        pair = (parts[0], parts[0])
    elif len(parts) == 2:
        pair = (parts[0], parts[1])
    else:
        raise ValueError(f"bad --format {value!r}; expected IN or IN:OUT")
    for fmt in pair:
        if fmt not in RECORD_FORMATS:
            raise ValueError(f"unsupported format {fmt!r}; expected one of {RECORD_FORMATS}")
    return pair


def _load_corpus_args(args):
    return corpus.load_corpus(
        args.input, _parse_format(args.format)[0], edges_path=args.edges
    )


def _write_rows_jsonl(rows, path):
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for row in rows:
            fh.write(json.dumps(row) + "\n")


def _write_rows_csv(rows, path):
    fields = list(corpus.RECORD_FIELDS) + ["quality_score"]
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(fields)
        for row in rows:
            writer.writerow(
                [
                    row["doc_id"],
                    row.get("url") or "",
                    row["text"],
                    " ".join(row.get("outlinks", [])),
                    repr(row["quality_score"]),
                ]
            )


def cmd_score(args) -> int:
    in_fmt, out_fmt = _parse_format(args.format)
    rows = corpus.parse_records(args.input, in_fmt)
    table = None
    if args.scorer == "table":
        if not args.scores:
            raise QCrawlError("--scorer table requires --scores")
        table = quality.load_score_table(args.scores)
    scored = []
    for row in rows:
        if "quality_score" in row:
            raise QCrawlError(
                f"record {row['doc_id']!r} already has a quality_score field"
            )
        if table is not None:
            if row["doc_id"] not in table:
                raise QCrawlError(f"no table entry for {row['doc_id']!r}")
            score = table[row["doc_id"]]
        else:
            try:
                score = quality.score_text_reference(row["text"])
            except QCrawlError:
                raise QCrawlError(f"record {row['doc_id']!r} has zero tokens") from None
        out_row = dict(row)
        out_row["quality_score"] = score
        scored.append(out_row)
    if out_fmt == "jsonl":
        _write_rows_jsonl(scored, args.output)
    else:
        _write_rows_csv(scored, args.output)
    print(json.dumps({"records_scored": len(scored), "output": args.output}, sort_keys=True))
    return 0


def cmd_crawl(args) -> int:
    _, graph, stats = _load_corpus_args(args)
    seeds = corpus.load_seeds(args.seeds, graph)
    scores = None
    if args.strategy == "qoracle":
        if not args.scores:
            raise QCrawlError("qoracle strategy requires --scores")
        scores = quality.load_score_table(args.scores)
    trace = crawler.run_crawl(
        graph,
        seeds,
        args.strategy,
        budget=args.budget,
        checkpoint_interval=args.checkpoint_interval,
        scores=scores,
    )
    crawler.write_trace(trace, args.output)
    print(
        json.dumps(
            {
                "strategy": args.strategy,
                "pages_crawled": len(trace),
                "checkpoints": trace.checkpoint_ranks,
                "dangling_edges": stats.dangling_dropped,
                "output": args.output,
            },
            sort_keys=True,
        )
    )
    return 0


def cmd_index(args) -> int:
    docs, _, _ = _load_corpus_args(args)
    if args.trace:
        trace = crawler.read_trace(args.trace)
        rank = args.rank if args.rank else len(trace)
        doc_ids = crawler.trace_prefix(trace, rank)
    else:
        doc_ids = set(docs)
    index = retrieval.build_index(docs, doc_ids)
    stats = {
        "documents": index.doc_count,
        "avgdl": index.avgdl,
        "terms": len(index.postings),
        "postings": sum(len(p) for p in index.postings.values()),
        "tokens_total": sum(index.doc_lengths.values()),
    }
    payload = json.dumps(stats, sort_keys=True)
    if args.output:
        Path(args.output).write_text(payload + "\n", encoding="utf-8")
    print(payload)
    return 0


def cmd_eval(args) -> int:
    docs, _, _ = _load_corpus_args(args)
    traces = {}
    for entry in args.trace:
        name, _, path = entry.partition("=")
        if not name or not path:
            raise QCrawlError(f"bad --trace {entry!r}; expected NAME=PATH")
        if name in traces:
            raise QCrawlError(f"duplicate trace name {name!r}")
        traces[name] = crawler.read_trace(path)
    if not 0.0 < args.alpha <= 1.0:
        raise QCrawlError("--alpha must be in (0, 1]")
    queries = retrieval.load_queries(args.queries)
    qrels = retrieval.load_qrels(args.qrels)
    report = retrieval.evaluate_checkpoints(
        docs, traces, queries, qrels, k=args.k, alpha=args.alpha
    )
    Path(args.output).write_text(report.to_jsonl(), encoding="utf-8")
    print(
        json.dumps(
            {
                "strategies": sorted(traces),
                "checkpoints": sorted({r.checkpoint for r in report.recall_rows}),
                "queries_evaluated": len(report.query_ids),
                "output": args.output,
            },
            sort_keys=True,
        )
    )
    return 0


def _stats_histograms(tables: dict[str, dict[str, float]], bins: int):
    all_values = [v for table in tables.values() for v in table.values()]
    lo, hi = min(all_values), max(all_values)
    if lo == hi:
        raise QCrawlError("all scores identical across tables; histogram width is zero")
    hists = {
        label: analytics.histogram(list(table.values()), bins, (lo, hi))
        for label, table in tables.items()
    }
    payload = {
        "bins": bins,
        "range": [lo, hi],
        "tables": {
            label: {
                "n": len(tables[label]),
                "bin_edges": hist.bin_edges,
                "counts": hist.counts,
            }
            for label, hist in hists.items()
        },
    }
    return hists, payload


def cmd_stats(args) -> int:
    out_dir = Path(args.output)
    out_dir.mkdir(parents=True, exist_ok=True)
    tables: dict[str, dict[str, float]] = {}
    for path in args.scores:
        label = Path(path).stem
        if label in tables:
            raise QCrawlError(f"duplicate score-table label {label!r}; rename the files")
        tables[label] = quality.load_score_table(path)

    written = []
    skipped = {}

    hists, hist_payload = _stats_histograms(tables, args.bins)
    (out_dir / "histograms.json").write_text(
        json.dumps(hist_payload, sort_keys=True, indent=2) + "\n", encoding="utf-8"
    )
    written.append("histograms.json")

    if len(tables) >= 2:
        labels = sorted(tables)
        matrix = {
            a: {b: analytics.js_distance(hists[a], hists[b]) for b in labels} for a in labels
        }
        (out_dir / "js_matrix.json").write_text(
            json.dumps({"labels": labels, "distance": matrix}, sort_keys=True, indent=2) + "\n",
            encoding="utf-8",
        )
        written.append("js_matrix.json")
    else:
        skipped["js_matrix"] = "need at least two score tables"

    first_label = next(iter(tables))
    first_table = tables[first_label]

    if args.qrels:
        qrels = retrieval.load_qrels(args.qrels)
        relevant, irrelevant = analytics.split_by_relevance(first_table, qrels)
        payload = {
            "table": first_label,
            "n_relevant": len(relevant),
            "n_irrelevant": len(irrelevant),
            "undersampled": bool(args.undersample),
            "rng_seed": args.rng_seed,
        }
        if relevant and irrelevant:
            rel, irr = relevant, irrelevant
            if args.undersample:
                rel, irr = analytics.undersample(relevant, irrelevant, args.rng_seed)
            lo = min(min(rel), min(irr))
            hi = max(max(rel), max(irr))
            if lo < hi:
                h_rel = analytics.histogram(rel, args.bins, (lo, hi))
                h_irr = analytics.histogram(irr, args.bins, (lo, hi))
                payload["histograms"] = {
                    "bin_edges": h_rel.bin_edges,
                    "relevant": h_rel.counts,
                    "irrelevant": h_irr.counts,
                }
            payload["quartiles"] = {
                "relevant": analytics.quartiles(rel),
                "irrelevant": analytics.quartiles(irr),
            }
        (out_dir / "relevance_split.json").write_text(
            json.dumps(payload, sort_keys=True, indent=2) + "\n", encoding="utf-8"
        )
        written.append("relevance_split.json")
    else:
        skipped["relevance_split"] = "no qrels given"

    if args.input:
        _, graph, _ = _load_corpus_args(args)
        report, points = analytics.correlation_study(graph, first_table)
        (out_dir / "correlation.json").write_text(
            json.dumps(
                {
                    "table": first_label,
                    "pearson_r": report.pearson_r,
                    "ols_slope": report.ols_slope,
                    "ols_intercept": report.ols_intercept,
                    "n": report.n,
                },
                sort_keys=True,
                indent=2,
            )
            + "\n",
            encoding="utf-8",
        )
        written.append("correlation.json")
        grid = analytics.hexbin(points, args.gridsize, args.min_count)
        with open(out_dir / "hexbin.csv", "w", encoding="utf-8", newline="") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(["center_x", "center_y", "count"])
            for cx, cy, count in grid.cells:
                writer.writerow([repr(cx), repr(cy), count])
        written.append("hexbin.csv")
    else:
        skipped["correlation"] = "no corpus given"

    print(
        json.dumps(
            {"output_dir": str(out_dir), "written": written, "skipped": skipped},
            sort_keys=True,
        )
    )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qcrawl",
        description="Quality-driven crawl simulation and retrieval analytics",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_corpus_flags(p):
        p.add_argument("--input", required=True, help="record file (jsonl or csv)")
        p.add_argument("--format", default="jsonl", help="record format IN or IN:OUT")
        p.add_argument("--edges", help="optional tab-separated edge list (src<TAB>dst)")

    def add_config_flag(p):
        p.add_argument(
            "--config",
            help="JSON file of flag defaults; explicit flags take precedence",
        )

    p_score = sub.add_parser("score", help="add a quality_score column to a record file")
    p_score.add_argument("--input", required=True)
    p_score.add_argument("--output", required=True)
    p_score.add_argument("--format", default="jsonl", help="IN:OUT record formats")
    p_score.add_argument("--scorer", choices=quality.SCORER_KINDS, default="reference")
    p_score.add_argument("--scores", help="score table (doc_id<TAB>score) for --scorer table")
    p_score.set_defaults(func=cmd_score)

    p_crawl = sub.add_parser("crawl", help="simulate a crawl strategy over the graph")
    add_corpus_flags(p_crawl)
    p_crawl.add_argument("--seeds", required=True, help="seed file, one doc_id per line")
    p_crawl.add_argument("--strategy", choices=crawler.STRATEGIES, required=True)
    p_crawl.add_argument("--budget", type=int, required=True)
    p_crawl.add_argument("--checkpoint-interval", type=int, required=True)
    p_crawl.add_argument("--scores", help="score table, required for qoracle")
    p_crawl.add_argument("--output", required=True, help="trace file to write")
    p_crawl.set_defaults(func=cmd_crawl)

    p_index = sub.add_parser("index", help="build a BM25 index and dump its stats")
    add_corpus_flags(p_index)
    p_index.add_argument("--trace", help="index only this trace's prefix")
    p_index.add_argument("--rank", type=int, help="prefix length (default: full trace)")
    p_index.add_argument("--output", help="also write the stats JSON here")
    p_index.set_defaults(func=cmd_index)

    p_eval = sub.add_parser("eval", help="evaluate traces at shared checkpoints")
    add_corpus_flags(p_eval)
    p_eval.add_argument(
        "--trace",
        action="append",
        required=True,
        metavar="NAME=PATH",
        help="crawl trace with a strategy label (repeatable)",
    )
    p_eval.add_argument("--queries", required=True, help="query_id<TAB>text file")
    p_eval.add_argument("--qrels", required=True, help="TREC qrels file")
    p_eval.add_argument("--k", type=int, default=100)
    p_eval.add_argument("--alpha", type=float, default=0.01)
    p_eval.add_argument("--output", required=True, help="JSON-lines report file")
    p_eval.set_defaults(func=cmd_eval)

    p_stats = sub.add_parser("stats", help="score-distribution and homophily statistics")
    p_stats.add_argument(
        "--scores", action="append", required=True, help="score table (repeatable)"
    )
    p_stats.add_argument("--input", help="optional corpus for the correlation study")
    p_stats.add_argument("--format", default="jsonl")
    p_stats.add_argument("--edges", help="optional tab-separated edge list")
    p_stats.add_argument("--qrels", help="optional qrels for the relevance split")
    p_stats.add_argument("--bins", type=int, default=analytics.DEFAULT_BINS)
    p_stats.add_argument("--gridsize", type=int, default=analytics.DEFAULT_GRIDSIZE)
    p_stats.add_argument("--min-count", type=int, default=analytics.DEFAULT_MIN_COUNT)
    p_stats.add_argument("--rng-seed", type=int, default=0)
    p_stats.add_argument("--undersample", action="store_true")
    p_stats.add_argument("--output", required=True, help="output directory")
    p_stats.set_defaults(func=cmd_stats)

    for p in (p_score, p_crawl, p_index, p_eval, p_stats):
        add_config_flag(p)
    return parser


def _apply_config(argv: list[str]) -> list[str]:
    """Expand --config FILE into flag tokens; flags given explicitly win."""
    if "--config" not in argv:
        return argv
    at = argv.index("--config")
    if at + 1 >= len(argv):
        return argv  # let argparse report the missing value
    with open(argv[at + 1], encoding="utf-8") as fh:
        config = json.load(fh)
    if not isinstance(config, dict):
        raise QCrawlError("config file must hold a JSON object")
    tokens: list[str] = []
    for key, value in config.items():
        flag = "--" + key.replace("_", "-")
        if flag in argv:
            continue
        if isinstance(value, bool):
            if value:
                tokens.append(flag)
        elif isinstance(value, list):
            for item in value:
                tokens.extend([flag, str(item)])
        else:
            tokens.extend([flag, str(value)])
    # keep the subcommand first, then config-supplied defaults, then flags
    return argv[:1] + tokens + argv[1:]


def main(argv=None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    parser = build_parser()
    try:
        args = parser.parse_args(_apply_config(list(argv)))
        return args.func(args)
    except (QCrawlError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
