"""BM25 retrieval over crawl prefixes and checkpointed recall evaluation.

The index is a plain in-memory inverted file. Scoring follows the
Lucene-style BM25 with k1=1.2, b=0.75 and idf(t) = ln(1 + (N-df+0.5)/(df+0.5)),
which keeps idf strictly positive for every indexed term. Recall@k counts
all judged-relevant documents in the denominator, crawled or not, so the
metric measures crawl coverage rather than pure ranking quality.
"""

from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass, field
from itertools import combinations

from scipy.special import betainc

from .corpus import DocumentRecord
from .crawler import CrawlTrace, trace_prefix
from .errors import CorpusFormatError, SkippedQuery, UnknownDoc

K1 = 1.2
B = 0.75

_TOKEN_RE = re.compile(r"[^\W_]+", re.UNICODE)


def tokenize(text: str) -> list[str]:
    """Lowercase and split on every non-alphanumeric character."""
    return _TOKEN_RE.findall(text.lower())


def _distinct(terms) -> list[str]:
    seen = set()
    out = []
    for t in terms:
        if t not in seen:
            seen.add(t)
            out.append(t)
    return out


@dataclass
class InvertedIndex:
    postings: dict[str, dict[str, int]] = field(default_factory=dict)
    doc_lengths: dict[str, int] = field(default_factory=dict)
    doc_count: int = 0
    avgdl: float = 0.0


def build_index(corpus: dict[str, DocumentRecord], doc_ids) -> InvertedIndex:
    """Index exactly the given doc_ids (zero-token docs count with length 0)."""
    ids = sorted(doc_ids)
    if not ids:
        raise ValueError("cannot build an index over an empty doc_id set")
    index = InvertedIndex()
    total_tokens = 0
    for doc_id in ids:
        if doc_id not in corpus:
            raise UnknownDoc(f"doc_id not in corpus: {doc_id!r}")
        tokens = tokenize(corpus[doc_id].text)
        index.doc_lengths[doc_id] = len(tokens)
        total_tokens += len(tokens)
        tf: dict[str, int] = {}
        for tok in tokens:
            tf[tok] = tf.get(tok, 0) + 1
        for term, count in tf.items():
            index.postings.setdefault(term, {})[doc_id] = count
    if total_tokens == 0:
        raise ValueError("every document in the index has zero tokens")
    index.doc_count = len(ids)
    index.avgdl = total_tokens / len(ids)
    return index


def _idf(index: InvertedIndex, term: str) -> float:
    df = len(index.postings.get(term, ()))
    return math.log(1.0 + (index.doc_count - df + 0.5) / (df + 0.5))


def bm25_score(index: InvertedIndex, query_terms, doc_id: str) -> float:
    """BM25 score of one document; distinct query terms, absent terms add 0."""
    if doc_id not in index.doc_lengths:
        raise UnknownDoc(f"doc_id not in index: {doc_id!r}")
    dl = index.doc_lengths[doc_id]
    norm = K1 * (1.0 - B + B * dl / index.avgdl)
    score = 0.0
    for term in _distinct(query_terms):
        tf = index.postings.get(term, {}).get(doc_id, 0)
        if tf == 0:
            continue
        score += _idf(index, term) * tf * (K1 + 1.0) / (tf + norm)
    return score


def search_topk(index: InvertedIndex, query_terms, k: int) -> list[tuple[str, float]]:
    """Top-k matching documents, score descending, ties by doc_id ascending."""
    if k < 1:
        raise ValueError("k must be >= 1")
    scores: dict[str, float] = {}
    for term in _distinct(query_terms):
        posting = index.postings.get(term)
        if not posting:
            continue
        idf = _idf(index, term)
        for doc_id, tf in posting.items():
            dl = index.doc_lengths[doc_id]
            norm = K1 * (1.0 - B + B * dl / index.avgdl)
            scores[doc_id] = scores.get(doc_id, 0.0) + idf * tf * (K1 + 1.0) / (tf + norm)
    ranked = sorted(scores.items(), key=lambda item: (-item[1], item[0]))
    return ranked[:k]


def load_queries(path: str) -> dict[str, str]:
    """Load a tab-separated ``query_id<TAB>text`` file."""
    queries: dict[str, str] = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.rstrip("\n")
            if not line:
                continue
            parts = line.split("\t", 1)
            if len(parts) != 2 or not parts[0]:
                raise CorpusFormatError(f"{path}:{lineno}: expected 'query_id<TAB>text'")
            qid, text = parts
            if qid in queries:
                raise CorpusFormatError(f"{path}:{lineno}: duplicate query_id {qid!r}")
            queries[qid] = text
    return queries


def load_qrels(path: str) -> dict[str, dict[str, int]]:
    """Load TREC-layout qrels: whitespace-separated ``query_id 0 doc_id grade``."""
    qrels: dict[str, dict[str, int]] = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            parts = line.split()
            if not parts:
                continue
            if len(parts) != 4:
                raise CorpusFormatError(f"{path}:{lineno}: expected 'query_id 0 doc_id grade'")
            qid, _, doc_id, grade_s = parts
            try:
                grade = int(grade_s)
            except ValueError:
                raise CorpusFormatError(f"{path}:{lineno}: grade must be an integer") from None
            if grade < 0:
                raise CorpusFormatError(f"{path}:{lineno}: grade must be >= 0")
            per_query = qrels.setdefault(qid, {})
            if doc_id in per_query:
                raise CorpusFormatError(
                    f"{path}:{lineno}: duplicate judgment for ({qid!r}, {doc_id!r})"
                )
            per_query[doc_id] = grade
    return qrels


def relevant_docs(qrels: dict[str, dict[str, int]], query_id: str) -> set[str]:
    return {d for d, g in qrels.get(query_id, {}).items() if g >= 1}


def recall_at_k(ranked, qrels: dict[str, dict[str, int]], query_id: str, k: int) -> float:
    """Fraction of ALL judged-relevant docs of the query found in the top k."""
    relevant = relevant_docs(qrels, query_id)
    if not relevant:
        raise SkippedQuery(f"query {query_id!r} has no judged-relevant documents")
    top = {doc_id for doc_id, _ in ranked[:k]}
    return len(top & relevant) / len(relevant)


def t_p_value(t_stat: float, df: int) -> float:
    """Two-sided Student-t p-value via the regularized incomplete beta."""
    if df < 1:
        raise ValueError("degrees of freedom must be >= 1")
    if math.isinf(t_stat):
        return 0.0
    x = df / (df + t_stat * t_stat)
    return float(betainc(df / 2.0, 0.5, x))


@dataclass(frozen=True)
class TTestResult:
    t_stat: float
    p_raw: float
    p_corrected: float
    significant: bool


def paired_t_test_bonferroni(
    per_query_scores: dict[str, list[float]], alpha: float = 0.01
) -> dict[tuple[str, str], TTestResult]:
    """Two-sided paired t-tests over all strategy pairs, Bonferroni-corrected.

    Degenerate conventions: all-zero differences give t=0, p=1; constant
    nonzero differences give t=+/-inf, p=0.
    """
    names = sorted(per_query_scores)
    if len(names) < 2:
        raise ValueError("need at least two strategies")
    n = len(per_query_scores[names[0]])
    if n < 2:
        raise ValueError("need at least two aligned scores per strategy")
    for name in names:
        if len(per_query_scores[name]) != n:
            raise ValueError(f"score list length mismatch for {name!r}")
    pairs = list(combinations(names, 2))
    results: dict[tuple[str, str], TTestResult] = {}
    for a, b in pairs:
        diffs = [x - y for x, y in zip(per_query_scores[a], per_query_scores[b])]
        mean = sum(diffs) / n
        var = sum((d - mean) ** 2 for d in diffs) / (n - 1)
        if var == 0.0:
            if mean == 0.0:
                t_stat, p = 0.0, 1.0
            else:
                t_stat, p = math.copysign(math.inf, mean), 0.0
        else:
            t_stat = mean / math.sqrt(var / n)
            p = t_p_value(t_stat, n - 1)
        corrected = min(1.0, p * len(pairs))
        results[(a, b)] = TTestResult(t_stat, p, corrected, corrected <= alpha)
    return results


@dataclass
class RecallRow:
    strategy: str
    checkpoint: int
    per_query: dict[str, float]
    mean_recall: float


@dataclass
class SignificanceRow:
    checkpoint: int
    pair: tuple[str, str]
    t_stat: float
    p_raw: float
    p_corrected: float
    significant: bool


@dataclass
class EvalReport:
    k: int
    alpha: float
    query_ids: list[str]
    recall_rows: list[RecallRow]
    significance_rows: list[SignificanceRow]

    def to_jsonl(self) -> str:
        """One JSON object per (strategy, checkpoint) plus one per pair."""
        lines = []
        for row in self.recall_rows:
            lines.append(
                json.dumps(
                    {
                        "type": "recall",
                        "strategy": row.strategy,
                        "checkpoint": row.checkpoint,
                        "k": self.k,
                        "mean_recall": row.mean_recall,
                        "per_query": row.per_query,
                    },
                    sort_keys=True,
                )
            )
        for row in self.significance_rows:
            t_out = None if math.isinf(row.t_stat) else row.t_stat
            lines.append(
                json.dumps(
                    {
                        "type": "significance",
                        "checkpoint": row.checkpoint,
                        "pair": list(row.pair),
                        "t_stat": t_out,
                        "t_infinite": math.isinf(row.t_stat),
                        "p_raw": row.p_raw,
                        "p_corrected": row.p_corrected,
                        "alpha": self.alpha,
                        "significant": row.significant,
                    },
                    sort_keys=True,
                )
            )
        return "\n".join(lines) + "\n"


def evaluate_checkpoints(
    corpus: dict[str, DocumentRecord],
    traces: dict[str, CrawlTrace],
    queries: dict[str, str],
    qrels: dict[str, dict[str, int]],
    k: int = 100,
    alpha: float = 0.01,
) -> EvalReport:
    """Index every common checkpoint prefix, run all evaluable queries,
    and test pairwise significance across strategies per checkpoint."""
    if not traces:
        raise ValueError("need at least one trace")
    common = set.intersection(*(set(t.checkpoint_ranks) for t in traces.values()))
    if not common:
        raise ValueError("traces have no common checkpoints")
    checkpoints = sorted(common)
    eval_qids = sorted(q for q in queries if relevant_docs(qrels, q))
    if not eval_qids:
        raise ValueError("no query has judged-relevant documents")
    query_terms = {qid: tokenize(queries[qid]) for qid in eval_qids}

    strategies = sorted(traces)
    recall_rows: list[RecallRow] = []
    significance_rows: list[SignificanceRow] = []
    per_checkpoint_scores: dict[int, dict[str, list[float]]] = {c: {} for c in checkpoints}
    for strategy in strategies:
        trace = traces[strategy]
        for checkpoint in checkpoints:
            prefix = trace_prefix(trace, checkpoint)
            index = build_index(corpus, prefix)
            per_query: dict[str, float] = {}
            for qid in eval_qids:
                ranked = search_topk(index, query_terms[qid], k)
                per_query[qid] = recall_at_k(ranked, qrels, qid, k)
            mean = sum(per_query.values()) / len(eval_qids)
            recall_rows.append(RecallRow(strategy, checkpoint, per_query, mean))
            per_checkpoint_scores[checkpoint][strategy] = [per_query[q] for q in eval_qids]

    if len(strategies) >= 2 and len(eval_qids) >= 2:
        for checkpoint in checkpoints:
            tests = paired_t_test_bonferroni(per_checkpoint_scores[checkpoint], alpha)
            for pair in sorted(tests):
                res = tests[pair]
                significance_rows.append(
                    SignificanceRow(
                        checkpoint, pair, res.t_stat, res.p_raw, res.p_corrected, res.significant
                    )
                )
    return EvalReport(k, alpha, eval_qids, recall_rows, significance_rows)
