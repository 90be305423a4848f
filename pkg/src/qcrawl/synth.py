"""Synthetic corpora with controlled quality structure.

Builds link graphs where edges are biased toward targets of similar
(or, mirrored, dissimilar) quality under the reference scorer, with a
planted set of relevant pages holding the top quality scores. Useful for
demos and for exercising the full crawl -> index -> evaluate pipeline
without any external data.
"""

from __future__ import annotations

import numpy as np

TOKENS_PER_DOC = 48


def synthetic_corpus(
    n_nodes: int = 2400,
    n_queries: int = 60,
    rel_per_query: int = 3,
    out_degree: int = 6,
    window: int = 20,
    n_seeds: int = 100,
    rng_seed: int = 7,
    anti_homophilic: bool = False,
):
    """Generate (rows, queries, qrels, seeds) for a quality-structured graph.

    Pages get a hidden quality rank (0 = best). Texts are built so the
    reference scorer reproduces that ranking: the n_queries*rel_per_query
    top-ranked pages are all-distinct-token texts (score 0) and also carry
    their query's topic terms; lower ranks repeat tokens increasingly.
    Each page links to a ring successor (keeps the graph strongly
    connected) plus sampled targets within ``window`` quality ranks of its
    own rank, or of the mirrored rank when ``anti_homophilic`` is set.
    """
    n_rel = n_queries * rel_per_query
    if n_rel >= n_nodes:
        raise ValueError("too many relevant pages for the corpus size")
    if n_seeds > n_nodes:
        raise ValueError("more seeds than nodes")
    rng = np.random.default_rng(rng_seed)

    width = len(str(n_nodes - 1))
    ids = [f"d{i:0{width}d}" for i in range(n_nodes)]
    # quality rank -> doc_id, shuffled so id order carries no quality signal
    ranked_ids = list(ids)
    rng.shuffle(ranked_ids)

    texts: dict[str, str] = {}
    for rank, doc_id in enumerate(ranked_ids):
        if rank < n_rel:
            query_idx, slot = divmod(rank, rel_per_query)
            topic = [f"q{query_idx:03d}topic{j}" for j in range(3)]
            fillers = [f"u{rank}x{j}" for j in range(TOKENS_PER_DOC - len(topic))]
            tokens = topic + fillers
        else:
            # distinct-token count decreases linearly with rank: quality
            # strictly below the planted relevant set, down to near-minimum
            frac = (rank - n_rel) / max(1, n_nodes - n_rel - 1)
            distinct = 2 + int(round((TOKENS_PER_DOC - 3) * (1.0 - frac)))
            uniq = [f"u{rank}x{j}" for j in range(distinct)]
            tokens = uniq + [uniq[0]] * (TOKENS_PER_DOC - distinct)
        texts[doc_id] = " ".join(tokens)

    def window_targets(rank: int) -> list[str]:
        center = (n_nodes - 1 - rank) if anti_homophilic else rank
        lo = max(0, center - window)
        hi = min(n_nodes - 1, center + window)
        pool = [r for r in range(lo, hi + 1) if r != rank]
        take = min(out_degree - 1, len(pool))
        chosen = rng.choice(len(pool), size=take, replace=False)
        return [ranked_ids[pool[i]] for i in chosen]

    rows = []
    for rank, doc_id in enumerate(ranked_ids):
        ring = ranked_ids[(rank + 1) % n_nodes]
        outlinks = [ring] + window_targets(rank)
        rows.append({"doc_id": doc_id, "url": None, "text": texts[doc_id], "outlinks": outlinks})
    rows.sort(key=lambda row: row["doc_id"])

    queries = {
        f"q{i:03d}": " ".join(f"q{i:03d}topic{j}" for j in range(3)) for i in range(n_queries)
    }
    qrels: dict[str, dict[str, int]] = {qid: {} for qid in queries}
    for rank in range(n_rel):
        query_idx = rank // rel_per_query
        qrels[f"q{query_idx:03d}"][ranked_ids[rank]] = 1

    seed_idx = rng.choice(n_nodes, size=n_seeds, replace=False)
    seeds = [ids[i] for i in seed_idx]
    return rows, queries, qrels, seeds
