import numpy as np
import pytest

from qcrawl import (
    CorpusFormatError,
    UnknownDoc,
    build_corpus,
    load_corpus,
    load_edges,
    load_seeds,
    oracle_text,
    outlinks,
)


def test_dangling_target_dropped_and_counted():
    rows = [{"doc_id": "a", "url": None, "text": "x", "outlinks": ["b"]}]
    corpus, graph, stats = build_corpus(rows)
    assert graph.nodes == {"a"}
    assert graph.edge_count == 0
    assert stats.dangling_dropped == 1
    # the record itself still remembers the dangling target
    assert corpus["a"].outlinks == ("b",)


def test_two_node_cycle():
    rows = [
        {"doc_id": "a", "url": None, "text": "x", "outlinks": ["b"]},
        {"doc_id": "b", "url": None, "text": "y", "outlinks": ["a"]},
    ]
    _, graph, stats = build_corpus(rows)
    assert len(graph.nodes) == 2
    assert graph.edge_count == 2
    assert stats.dangling_dropped == 0


def test_duplicate_outlinks_keep_first():
    rows = [
        {"doc_id": "a", "url": None, "text": "x", "outlinks": ["b", "b", "c"]},
        {"doc_id": "b", "url": None, "text": "y", "outlinks": []},
        {"doc_id": "c", "url": None, "text": "z", "outlinks": []},
    ]
    _, graph, stats = build_corpus(rows)
    assert graph.adjacency["a"] == ["b", "c"]
    assert stats.duplicate_dropped == 1


def test_duplicate_doc_id_error_names_id():
    rows = [
        {"doc_id": "dup", "url": None, "text": "x", "outlinks": []},
        {"doc_id": "dup", "url": None, "text": "y", "outlinks": []},
    ]
    with pytest.raises(CorpusFormatError, match="dup"):
        build_corpus(rows)


def test_jsonl_malformed_line_reports_lineno(tmp_path):
    path = tmp_path / "bad.jsonl"
    path.write_text('{"doc_id": "a", "text": "ok", "outlinks": []}\nnot json\n')
    with pytest.raises(CorpusFormatError, match=":2:"):
        load_corpus(str(path), "jsonl")


def test_jsonl_doc_id_with_whitespace_rejected(tmp_path):
    path = tmp_path / "bad.jsonl"
    path.write_text('{"doc_id": "a b", "text": "", "outlinks": []}\n')
    with pytest.raises(CorpusFormatError, match=":1:"):
        load_corpus(str(path), "jsonl")


def test_csv_roundtrip(tmp_path):
    path = tmp_path / "corpus.csv"
    path.write_text(
        'doc_id,url,text,outlinks\n'
        'a,http://a,"hello there","b c"\n'
        'b,,"second doc",\n'
        'c,,"third, with comma",a\n'
    )
    corpus, graph, stats = load_corpus(str(path), "csv")
    assert corpus["a"].outlinks == ("b", "c")
    assert corpus["a"].url == "http://a"
    assert corpus["b"].url is None
    assert corpus["c"].text == "third, with comma"
    assert graph.adjacency["c"] == ["a"]
    assert stats.records == 3


def test_csv_bad_header(tmp_path):
    path = tmp_path / "corpus.csv"
    path.write_text("id,url,text,outlinks\na,,x,\n")
    with pytest.raises(CorpusFormatError, match="header"):
        load_corpus(str(path), "csv")


def test_reload_determinism(tmp_path, five_node_rows, jsonl_writer):
    path = jsonl_writer(five_node_rows, tmp_path / "c.jsonl")
    c1, g1, s1 = load_corpus(path, "jsonl")
    c2, g2, s2 = load_corpus(path, "jsonl")
    assert list(c1) == list(c2)
    assert g1.nodes == g2.nodes
    assert g1.adjacency == g2.adjacency
    assert s1 == s2


def test_edge_conservation_on_random_corpora():
    rng = np.random.default_rng(42)
    for _ in range(20):
        n = int(rng.integers(2, 30))
        ids = [f"n{i}" for i in range(n)]
        rows = []
        for doc_id in ids:
            # targets drawn from a superset so some dangle, with duplicates
            n_out = int(rng.integers(0, 8))
            targets = [f"n{int(rng.integers(0, n + 5))}" for _ in range(n_out)]
            rows.append({"doc_id": doc_id, "url": None, "text": "t", "outlinks": targets})
        _, graph, stats = build_corpus(rows)
        assert stats.edges_loaded == (
            stats.edges_kept + stats.dangling_dropped + stats.duplicate_dropped
        )
        assert stats.edges_kept == graph.edge_count
        for targets in graph.adjacency.values():
            assert set(targets) <= graph.nodes


def test_separate_edge_list(tmp_path, jsonl_writer):
    rows = [
        {"doc_id": "a", "url": None, "text": "x"},
        {"doc_id": "b", "url": None, "text": "y"},
    ]
    corpus_path = jsonl_writer(rows, tmp_path / "c.jsonl")
    edges_path = tmp_path / "edges.tsv"
    edges_path.write_text("a\tb\na\tb\na\tmissing\nghost\tb\nb\ta\n")
    _, graph, stats = load_corpus(corpus_path, "jsonl", edges_path=str(edges_path))
    assert graph.adjacency["a"] == ["b"]
    assert graph.adjacency["b"] == ["a"]
    assert stats.edges_loaded == 5
    assert stats.duplicate_dropped == 1
    assert stats.dangling_dropped == 2  # unknown target + unknown source
    assert stats.edges_kept == 2


def test_edge_list_malformed_line(tmp_path):
    path = tmp_path / "edges.tsv"
    path.write_text("a\tb\nc only\n")
    with pytest.raises(CorpusFormatError, match=":2:"):
        load_edges(str(path))


def test_oracle_text_lookup(five_node_corpus):
    corpus, _, _ = five_node_corpus
    assert oracle_text(corpus, "a") == "alpha beta gamma"
    with pytest.raises(UnknownDoc):
        oracle_text(corpus, "zz")


def test_oracle_text_empty_document():
    rows = [{"doc_id": "a", "url": None, "text": "", "outlinks": []}]
    corpus, _, _ = build_corpus(rows)
    assert oracle_text(corpus, "a") == ""


def test_outlinks_contract(five_node_corpus):
    _, graph, _ = five_node_corpus
    assert outlinks(graph, "d") == []
    assert outlinks(graph, "a") == ["b", "c"]
    assert outlinks(graph, "a") == outlinks(graph, "a")
    with pytest.raises(UnknownDoc):
        outlinks(graph, "zz")


def test_load_seeds(tmp_path, five_node_corpus):
    _, graph, _ = five_node_corpus
    path = tmp_path / "seeds.txt"
    path.write_text("a\n\nb\na\n")
    assert load_seeds(str(path), graph) == ["a", "b"]
    path.write_text("a\nnope\n")
    with pytest.raises(UnknownDoc, match="nope"):
        load_seeds(str(path), graph)
