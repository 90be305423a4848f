"""Corpus and link-graph loading.

A corpus is a mapping doc_id -> DocumentRecord built from a JSON-lines or
CSV record file. The web graph is an adjacency over doc_ids built from the
records' outlinks (or from a separate tab-separated edge list). Outlinks
whose target is not in the corpus are dropped from the graph but counted,
so the crawl frontier stays closed over scoreable pages.
"""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass, field

from .errors import CorpusFormatError, UnknownDoc

RECORD_FIELDS = ("doc_id", "url", "text", "outlinks")


@dataclass(frozen=True)
class DocumentRecord:
    """One web page: id, optional URL, extracted text, ordered outlinks."""

    doc_id: str
    url: str | None
    text: str
    outlinks: tuple[str, ...]


@dataclass
class WebGraph:
    """Directed adjacency over corpus doc_ids, in file order."""

    nodes: set[str] = field(default_factory=set)
    adjacency: dict[str, list[str]] = field(default_factory=dict)

    def __contains__(self, doc_id: str) -> bool:
        return doc_id in self.nodes

    @property
    def edge_count(self) -> int:
        return sum(len(v) for v in self.adjacency.values())


@dataclass
class LoadStats:
    """Bookkeeping from a corpus load.

    edges_loaded == edges_kept + dangling_dropped + duplicate_dropped.
    """

    records: int = 0
    edges_loaded: int = 0
    edges_kept: int = 0
    dangling_dropped: int = 0
    duplicate_dropped: int = 0


def _check_doc_id(doc_id, lineno: int, path: str) -> str:
    if not isinstance(doc_id, str) or not doc_id or any(c.isspace() for c in doc_id):
        raise CorpusFormatError(
            f"{path}:{lineno}: doc_id must be a non-empty token without whitespace"
        )
    return doc_id


def parse_jsonl(path: str) -> list[dict]:
    """Parse a JSON-lines record file into raw row dicts (extra keys kept)."""
    rows = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            try:
                obj = json.loads(line)
            except json.JSONDecodeError as exc:
                raise CorpusFormatError(f"{path}:{lineno}: invalid JSON ({exc.msg})") from exc
            if not isinstance(obj, dict):
                raise CorpusFormatError(f"{path}:{lineno}: expected a JSON object")
            _check_doc_id(obj.get("doc_id"), lineno, path)
            text = obj.get("text")
            if not isinstance(text, str):
                raise CorpusFormatError(f"{path}:{lineno}: missing or non-string 'text'")
            url = obj.get("url")
            if url is not None and not isinstance(url, str):
                raise CorpusFormatError(f"{path}:{lineno}: 'url' must be a string or null")
            outlinks = obj.get("outlinks", [])
            if not isinstance(outlinks, list) or not all(isinstance(x, str) for x in outlinks):
                raise CorpusFormatError(f"{path}:{lineno}: 'outlinks' must be a list of strings")
            rows.append(obj)
    return rows


def parse_csv(path: str) -> list[dict]:
    """Parse a CSV record file (header doc_id,url,text,outlinks) into raw rows.

    The outlinks column holds a space-separated doc_id list in one field.
    """
    rows = []
    with open(path, encoding="utf-8", newline="") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise CorpusFormatError(f"{path}:1: empty CSV file") from None
        if [h.strip() for h in header] != list(RECORD_FIELDS):
            raise CorpusFormatError(
                f"{path}:1: CSV header must be {','.join(RECORD_FIELDS)}"
            )
        for lineno, row in enumerate(reader, start=2):
            if not row:
                continue
            if len(row) != len(RECORD_FIELDS):
                raise CorpusFormatError(
                    f"{path}:{lineno}: expected {len(RECORD_FIELDS)} fields, got {len(row)}"
                )
            doc_id, url, text, outlinks = row
            _check_doc_id(doc_id, lineno, path)
            rows.append(
                {
                    "doc_id": doc_id,
                    "url": url or None,
                    "text": text,
                    "outlinks": outlinks.split(),
                }
            )
    return rows


def parse_records(path: str, fmt: str) -> list[dict]:
    if fmt == "jsonl":
        return parse_jsonl(path)
    if fmt == "csv":
        return parse_csv(path)
    raise ValueError(f"unsupported record format: {fmt!r}")


def load_edges(path: str) -> list[tuple[str, str]]:
    """Load a tab-separated edge list (``src<TAB>dst``, one edge per line)."""
    edges = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.rstrip("\n")
            if not line:
                continue
            parts = line.split("\t")
            if len(parts) != 2 or not parts[0] or not parts[1]:
                raise CorpusFormatError(f"{path}:{lineno}: expected 'src<TAB>dst'")
            edges.append((parts[0], parts[1]))
    return edges


def build_corpus(
    rows: list[dict], edges: list[tuple[str, str]] | None = None
) -> tuple[dict[str, DocumentRecord], WebGraph, LoadStats]:
    """Assemble corpus and graph from raw rows (and an optional edge list).

    Duplicate outlinks within one source keep the first occurrence; outlinks
    pointing outside the corpus are dropped from the graph. Both drops are
    counted so that edges_loaded = kept + dangling + duplicates.
    """
    stats = LoadStats()
    doc_ids = set()
    raw_order = []
    for row in rows:
        if row["doc_id"] in doc_ids:
            raise CorpusFormatError(f"duplicate doc_id: {row['doc_id']!r}")
        doc_ids.add(row["doc_id"])
        raw_order.append(row["doc_id"])
    stats.records = len(rows)

    # Outlink lists per source, in file order. When an edge list is given it
    # replaces the records' outlinks entirely (outlinks shipped separately).
    if edges is not None:
        raw_outlinks: dict[str, list[str]] = {d: [] for d in raw_order}
        for src, dst in edges:
            stats.edges_loaded += 1
            if src not in doc_ids:
                stats.dangling_dropped += 1
                continue
            raw_outlinks[src].append(dst)
    else:
        raw_outlinks = {row["doc_id"]: list(row.get("outlinks", [])) for row in rows}
        stats.edges_loaded = sum(len(v) for v in raw_outlinks.values())

    corpus: dict[str, DocumentRecord] = {}
    graph = WebGraph(nodes=set(doc_ids))
    for row in rows:
        doc_id = row["doc_id"]
        seen: set[str] = set()
        deduped: list[str] = []
        for target in raw_outlinks[doc_id]:
            if target in seen:
                stats.duplicate_dropped += 1
                continue
            seen.add(target)
            deduped.append(target)
        kept = [t for t in deduped if t in doc_ids]
        stats.dangling_dropped += len(deduped) - len(kept)
        stats.edges_kept += len(kept)
        corpus[doc_id] = DocumentRecord(
            doc_id=doc_id,
            url=row.get("url"),
            text=row["text"],
            outlinks=tuple(deduped),
        )
        graph.adjacency[doc_id] = kept
    return corpus, graph, stats


def load_corpus(
    path: str, fmt: str = "jsonl", edges_path: str | None = None
) -> tuple[dict[str, DocumentRecord], WebGraph, LoadStats]:
    """Load a record file (jsonl or csv) into (corpus, graph, stats)."""
    rows = parse_records(path, fmt)
    edges = load_edges(edges_path) if edges_path else None
    return build_corpus(rows, edges)


def load_seeds(path: str, graph: WebGraph) -> list[str]:
    """Load a seed file (one doc_id per line); duplicates keep the first."""
    seeds: list[str] = []
    seen: set[str] = set()
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            doc_id = line.strip()
            if not doc_id:
                continue
            if doc_id not in graph:
                raise UnknownDoc(f"{path}:{lineno}: seed {doc_id!r} not in graph")
            if doc_id in seen:
                continue
            seen.add(doc_id)
            seeds.append(doc_id)
    return seeds


def oracle_text(corpus: dict[str, DocumentRecord], doc_id: str) -> str:
    """Text lookup for a page; the stored corpus stands in for page fetches."""
    try:
        return corpus[doc_id].text
    except KeyError:
        raise UnknownDoc(f"unknown doc_id: {doc_id!r}") from None


def outlinks(graph: WebGraph, doc_id: str) -> list[str]:
    """Ordered successors of a page in the graph."""
    if doc_id not in graph.nodes:
        raise UnknownDoc(f"unknown doc_id: {doc_id!r}")
    return list(graph.adjacency.get(doc_id, []))
