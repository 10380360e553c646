"""K-means over topic distributions (k-means++ seeding, Lloyd iterations)."""

from __future__ import annotations

import numpy as np

from ..errors import BadK
from .clusters import ClusterResult, canonical_labels

SPACES = ("euclidean", "hellinger")


def _lloyd(X: np.ndarray, k: int, rng: np.random.Generator, max_iter: int = 300):
    n = X.shape[0]
    # k-means++ seeding
    centroids = np.empty((k, X.shape[1]), dtype=np.float64)
    first = int(rng.integers(n))
    centroids[0] = X[first]
    closest = np.sum((X - centroids[0]) ** 2, axis=1)
    for c in range(1, k):
        total = closest.sum()
        if total <= 0:
            idx = int(np.argmin(closest))  # all points coincide with a centroid
        else:
            r = rng.random() * total
            idx = int(np.searchsorted(np.cumsum(closest), r, side="right"))
            idx = min(idx, n - 1)
        centroids[c] = X[idx]
        closest = np.minimum(closest, np.sum((X - centroids[c]) ** 2, axis=1))

    labels = np.zeros(n, dtype=np.int64)
    trace: list[float] = []
    for _ in range(max_iter):
        d2 = ((X[:, None, :] - centroids[None, :, :]) ** 2).sum(axis=2)
        labels = np.argmin(d2, axis=1)
        inertia = float(d2[np.arange(n), labels].sum())
        trace.append(inertia)
        new_centroids = centroids.copy()
        for c in range(k):
            mask = labels == c
            if mask.any():
                new_centroids[c] = X[mask].mean(axis=0)
            else:
                # re-seed an empty cluster at the farthest point
                far = int(np.argmax(d2[np.arange(n), labels]))
                new_centroids[c] = X[far]
        if np.allclose(new_centroids, centroids, rtol=0, atol=0):
            break
        centroids = new_centroids
    d2 = ((X[:, None, :] - centroids[None, :, :]) ** 2).sum(axis=2)
    labels = np.argmin(d2, axis=1)
    inertia = float(d2[np.arange(n), labels].sum())
    if not trace or inertia < trace[-1]:
        trace.append(inertia)
    return labels, centroids, inertia, trace


def kmeans(
    thetas,
    k: int,
    seed: int = 0,
    restarts: int = 10,
    space: str = "euclidean",
    doc_ids: list[str] | None = None,
) -> ClusterResult:
    """Best-of-restarts k-means; ``hellinger`` space clusters sqrt(theta).

    Deterministic for a fixed seed: restarts use spawned child seeds and the
    winner is the lowest inertia, ties broken by restart index.
    """
    X = np.asarray(thetas, dtype=np.float64)
    n = X.shape[0]
    if not (1 <= k <= n):
        raise BadK(f"k must be in [1, {n}], got {k}")
    if space not in SPACES:
        raise ValueError(f"unknown space {space!r}")
    if space == "hellinger":
        X = np.sqrt(X)

    best = None
    seqs = np.random.SeedSequence(seed).spawn(restarts)
    for r in range(restarts):
        rng = np.random.default_rng(seqs[r])
        labels, centroids, inertia, trace = _lloyd(X, k, rng)
        if best is None or inertia < best[0]:
            best = (inertia, labels, centroids, trace)

    inertia, labels, centroids, trace = best
    return ClusterResult(
        algorithm="kmeans",
        labels=canonical_labels(labels),
        params={"k": k, "space": space, "seed": seed, "restarts": restarts},
        doc_ids=list(doc_ids) if doc_ids is not None else [str(i) for i in range(n)],
        inertia=inertia,
        inertia_trace=trace,
    )
