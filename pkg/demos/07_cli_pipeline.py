"""
The full pipeline through the command line
==========================================

Everything the library does is also reachable through the `qcrawl`
executable: score a record file (adding a quality_score column), crawl
with each strategy, evaluate the traces at shared checkpoints, and dump
distribution statistics. This script drives the CLI in-process and shows
the files it leaves behind.
"""

import json
import tempfile
from pathlib import Path

from qcrawl import synthetic_corpus
from qcrawl.cli import main

workdir = Path(tempfile.mkdtemp(prefix="qcrawl-demo-"))
print("working in", workdir)

rows, queries, qrels, seeds = synthetic_corpus(
    n_nodes=400, n_queries=12, rel_per_query=2, n_seeds=20, rng_seed=3
)
(workdir / "corpus.jsonl").write_text("".join(json.dumps(r) + "\n" for r in rows))
(workdir / "seeds.txt").write_text("".join(s + "\n" for s in seeds))
(workdir / "queries.tsv").write_text("".join(f"{q}\t{t}\n" for q, t in queries.items()))
(workdir / "qrels.txt").write_text(
    "".join(f"{q} 0 {d} {g}\n" for q, js in qrels.items() for d, g in js.items())
)


def run(*args):
    print("\n$ qcrawl " + " ".join(args))
    rc = main(list(args))
    assert rc == 0, f"exit code {rc}"


# 1. add a quality_score column (jsonl in, csv out: formats are independent)
run("score", "--input", str(workdir / "corpus.jsonl"),
    "--output", str(workdir / "scored.csv"), "--format", "jsonl:csv")

# 2. a score table for the qoracle strategy, produced from the scored records
scored_jsonl = workdir / "scored.jsonl"
run("score", "--input", str(workdir / "corpus.jsonl"), "--output", str(scored_jsonl))
with open(workdir / "scores.tsv", "w") as fh:
    for line in scored_jsonl.read_text().splitlines():
        obj = json.loads(line)
        fh.write(f"{obj['doc_id']}\t{obj['quality_score']!r}\n")

# 3. crawl with all three strategies
for strategy in ("bfs", "dfs", "qoracle"):
    args = ["crawl", "--input", str(workdir / "corpus.jsonl"),
            "--seeds", str(workdir / "seeds.txt"), "--strategy", strategy,
            "--budget", "400", "--checkpoint-interval", "40",
            "--output", str(workdir / f"{strategy}.tsv")]
    if strategy == "qoracle":
        args += ["--scores", str(workdir / "scores.tsv")]
    run(*args)

# 4. index stats for one crawl prefix
run("index", "--input", str(workdir / "corpus.jsonl"),
    "--trace", str(workdir / "bfs.tsv"), "--rank", "120")

# 5. evaluate all traces at the shared checkpoints
run("eval", "--input", str(workdir / "corpus.jsonl"),
    "--trace", f"bfs={workdir / 'bfs.tsv'}",
    "--trace", f"dfs={workdir / 'dfs.tsv'}",
    "--trace", f"qoracle={workdir / 'qoracle.tsv'}",
    "--queries", str(workdir / "queries.tsv"), "--qrels", str(workdir / "qrels.txt"),
    "--output", str(workdir / "report.jsonl"))

# 6. distribution statistics, relevance split, homophily study
run("stats", "--scores", str(workdir / "scores.tsv"),
    "--input", str(workdir / "corpus.jsonl"), "--qrels", str(workdir / "qrels.txt"),
    "--undersample", "--rng-seed", "11", "--min-count", "5",
    "--output", str(workdir / "stats"))

print("\nfiles produced:")
for path in sorted(workdir.rglob("*")):
    if path.is_file():
        print(f"  {path.relative_to(workdir)}  ({path.stat().st_size} bytes)")
