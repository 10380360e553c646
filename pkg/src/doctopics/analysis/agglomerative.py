"""Bottom-up hierarchical clustering over a precomputed distance matrix."""

from __future__ import annotations

import numpy as np

from ..errors import BadK
from .clusters import ClusterResult, canonical_labels
from .divergence import DistanceMatrix

LINKAGES = ("single", "average", "complete")


def agglomerative(dist: DistanceMatrix, linkage: str = "average", k: int = 2) -> ClusterResult:
    """Merge until k clusters remain; ties break on the smallest (i, j) pair.

    The merge list uses scipy-style indexing: original points are 0..n-1,
    the cluster created by merge step s gets index n+s.
    """
    if linkage not in LINKAGES:
        raise ValueError(f"unknown linkage {linkage!r}")
    n = dist.n
    if not (1 <= k <= n):
        raise BadK(f"k must be in [1, {n}], got {k}")

    # active cluster state: id -> member set; pairwise distances via Lance-Williams
    members: dict[int, list[int]] = {i: [i] for i in range(n)}
    d = {}
    for i in range(n):
        for j in range(i + 1, n):
            d[(i, j)] = float(dist.values[i, j])

    merges: list[tuple[int, int, float, int]] = []
    next_id = n
    active = list(range(n))
    while len(active) > 1:
        best = None
        for ai in range(len(active)):
            for aj in range(ai + 1, len(active)):
                i, j = active[ai], active[aj]
                key = (i, j) if i < j else (j, i)
                val = d[key]
                if best is None or val < best[0]:
                    best = (val, key[0], key[1])
        height, i, j = best
        size = len(members[i]) + len(members[j])
        merges.append((i, j, height, size))

        # Lance-Williams update against every other active cluster
        new = next_id
        next_id += 1
        for other in active:
            if other in (i, j):
                continue
            di = d[(min(i, other), max(i, other))]
            dj = d[(min(j, other), max(j, other))]
            if linkage == "single":
                val = min(di, dj)
            elif linkage == "complete":
                val = max(di, dj)
            else:
                ni, nj = len(members[i]), len(members[j])
                val = (ni * di + nj * dj) / (ni + nj)
            d[(min(new, other), max(new, other))] = val
        members[new] = members[i] + members[j]
        del members[i], members[j]
        active = [c for c in active if c not in (i, j)] + [new]

    labels = _cut(merges, n, k)
    return ClusterResult(
        algorithm="agglomerative",
        labels=labels,
        params={"linkage": linkage, "k": k, "metric": dist.metric},
        doc_ids=list(dist.doc_ids),
        merges=merges,
    )


def _cut(merges, n: int, k: int) -> np.ndarray:
    """Apply the first n-k merges, then relabel clusters by first occurrence."""
    parent = list(range(n + len(merges)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for s, (i, j, _, _) in enumerate(merges[: n - k]):
        new = n + s
        parent[find(i)] = new
        parent[find(j)] = new

    raw = np.array([find(i) for i in range(n)], dtype=np.int64)
    return canonical_labels(raw)
