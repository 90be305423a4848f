"""
Score distributions: histograms, JS distance, relevance split
=============================================================

Comparing quality-score distributions across collections uses 15-bin
histograms over shared edges and the Jensen-Shannon distance (base-2
logs, so 0 = identical and 1 = disjoint). The relevance split contrasts
judged-relevant against irrelevant pages, undersampling the larger side
so the two distributions are comparable.
"""

import numpy as np

from qcrawl import histogram, js_distance, quartiles, split_by_relevance, undersample

rng = np.random.default_rng(123)

# three synthetic "collections" with related but shifted score profiles
collections = {
    "main": (-np.abs(rng.normal(2.0, 1.0, size=4000))).tolist(),
    "legal": (-np.abs(rng.normal(2.2, 1.0, size=2500))).tolist(),
    "headpages": (-np.abs(rng.normal(1.2, 0.7, size=5000))).tolist(),
}

lo = min(min(v) for v in collections.values())
hi = max(max(v) for v in collections.values())
hists = {name: histogram(values, bins=15, value_range=(lo, hi))
         for name, values in collections.items()}

print("pairwise Jensen-Shannon distances (15 shared bins):")
names = list(collections)
print(f"{'':12s}" + "".join(f"{n:>12s}" for n in names))
for a in names:
    cells = "".join(f"{js_distance(hists[a], hists[b]):12.4f}" for b in names)
    print(f"{a:12s}{cells}")
print()

# relevance split over a score table: relevant pages skew high
table = {f"d{i}": float(s) for i, s in enumerate(rng.normal(-2.0, 0.8, size=2000))}
top = sorted(table, key=table.get, reverse=True)
qrels = {"q0": {d: 1 for d in top[:150]}, "q1": {d: 1 for d in top[100:250]}}
relevant, irrelevant = split_by_relevance(table, qrels)
print(f"relevant n={len(relevant)}, irrelevant n={len(irrelevant)}")
print("relevant quartiles  :", {k: round(v, 3) for k, v in quartiles(relevant).items()})
print("irrelevant quartiles:", {k: round(v, 3) for k, v in quartiles(irrelevant).items()})

rel_u, irr_u = undersample(relevant, irrelevant, rng_seed=9)
print(f"after undersampling: {len(rel_u)} vs {len(irr_u)} samples")
