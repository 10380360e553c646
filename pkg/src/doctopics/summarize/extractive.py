"""Extractive selection: cluster sentence vectors, keep centroid-nearest ones."""

from __future__ import annotations

import numpy as np

from ..errors import BadN
from ..analysis.kmeans import kmeans

_SELECT_SEED = 0


def extractive_select(vectors: np.ndarray, n_sentences: int) -> list[int]:
    """Indices of the n most representative sentences, in original order.

    k-means with k = n over the vectors (fixed seed); each centroid
    contributes its nearest sentence; duplicate picks are backfilled with
    the next-nearest unused sentence.
    """
    vectors = np.asarray(vectors, dtype=np.float64)
    total = vectors.shape[0]
    if not (1 <= n_sentences <= total):
        raise BadN(f"n_sentences must be in [1, {total}], got {n_sentences}")
    if n_sentences == total:
        return list(range(total))

    result = kmeans(vectors, k=n_sentences, seed=_SELECT_SEED, restarts=4)
    # centroids are not returned; recover them from the labels. A cluster can
    # end up empty on degenerate inputs (duplicate vectors); the global mean
    # stands in so the backfill still yields exactly n picks.
    global_mean = vectors.mean(axis=0)
    centroids = []
    for c in range(n_sentences):
        mask = result.labels == c
        centroids.append(vectors[mask].mean(axis=0) if mask.any() else global_mean)

    chosen: list[int] = []
    for centroid in centroids:
        d = np.linalg.norm(vectors - centroid, axis=1)
        for idx in np.argsort(d, kind="stable"):
            if int(idx) not in chosen:
                chosen.append(int(idx))
                break
    return sorted(chosen)
