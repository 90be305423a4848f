import json

import pytest

from qcrawl import build_corpus


@pytest.fixture
def five_node_rows():
    # a -> b,c ; b -> d ; c -> d,e ; d,e leaves
    return [
        {"doc_id": "a", "url": None, "text": "alpha beta gamma", "outlinks": ["b", "c"]},
        {"doc_id": "b", "url": "http://b", "text": "beta beta delta", "outlinks": ["d"]},
        {"doc_id": "c", "url": None, "text": "gamma gamma gamma", "outlinks": ["d", "e"]},
        {"doc_id": "d", "url": None, "text": "delta epsilon", "outlinks": []},
        {"doc_id": "e", "url": None, "text": "epsilon zeta eta", "outlinks": []},
    ]


@pytest.fixture
def five_node_corpus(five_node_rows):
    return build_corpus(five_node_rows)


def write_jsonl(rows, path):
    with open(path, "w", encoding="utf-8") as fh:
        for row in rows:
            fh.write(json.dumps(row) + "\n")
    return str(path)


@pytest.fixture
def jsonl_writer():
    return write_jsonl
