"""Quality-driven web-crawl prioritisation simulator and analytics toolkit.

Replays crawl strategies (bfs, dfs, qoracle) over a stored web graph,
evaluates downstream BM25 retrieval recall at crawl checkpoints, and
computes quality-distribution and quality-homophily statistics.
"""

from .analytics import (
    CorrelationReport,
    HexbinGrid,
    Histogram,
    correlation_study,
    hexbin,
    histogram,
    js_distance,
    ols_regression,
    pearson,
    quartiles,
    split_by_relevance,
    undersample,
)
from .corpus import (
    DocumentRecord,
    LoadStats,
    WebGraph,
    build_corpus,
    load_corpus,
    load_edges,
    load_seeds,
    oracle_text,
    outlinks,
)
from .crawler import (
    STRATEGIES,
    CrawlTrace,
    read_trace,
    run_crawl,
    trace_prefix,
    write_trace,
)
from .errors import (
    CorpusFormatError,
    EmptyText,
    MissingScore,
    NoOutlinks,
    QCrawlError,
    SkippedQuery,
    UndefinedCorrelation,
    UnknownDoc,
    ZeroWidth,
)
from .quality import (
    ScorerConfig,
    load_score_table,
    mean_outlink_quality,
    score_batch,
    score_text_reference,
    write_score_table,
)
from .retrieval import (
    EvalReport,
    InvertedIndex,
    TTestResult,
    bm25_score,
    build_index,
    evaluate_checkpoints,
    load_qrels,
    load_queries,
    paired_t_test_bonferroni,
    recall_at_k,
    search_topk,
    t_p_value,
    tokenize,
)
from .synth import synthetic_corpus

__version__ = "0.1.0"

__all__ = [
    "CorrelationReport",
    "CorpusFormatError",
    "CrawlTrace",
    "DocumentRecord",
    "EmptyText",
    "EvalReport",
    "HexbinGrid",
    "Histogram",
    "InvertedIndex",
    "LoadStats",
    "MissingScore",
    "NoOutlinks",
    "QCrawlError",
    "STRATEGIES",
    "ScorerConfig",
    "SkippedQuery",
    "TTestResult",
    "UndefinedCorrelation",
    "UnknownDoc",
    "WebGraph",
    "ZeroWidth",
    "bm25_score",
    "build_corpus",
    "build_index",
    "correlation_study",
    "evaluate_checkpoints",
    "hexbin",
    "histogram",
    "js_distance",
    "load_corpus",
    "load_edges",
    "load_qrels",
    "load_queries",
    "load_score_table",
    "load_seeds",
    "mean_outlink_quality",
    "ols_regression",
    "oracle_text",
    "outlinks",
    "paired_t_test_bonferroni",
    "pearson",
    "quartiles",
    "read_trace",
    "recall_at_k",
    "run_crawl",
    "score_batch",
    "score_text_reference",
    "search_topk",
    "split_by_relevance",
    "synthetic_corpus",
    "t_p_value",
    "tokenize",
    "trace_prefix",
    "undersample",
    "write_score_table",
    "write_trace",
]
