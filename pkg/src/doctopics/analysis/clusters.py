"""Shared cluster result container."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np


@dataclass
class ClusterResult:
    algorithm: str                 # "agglomerative" | "kmeans" | "hdbscan"
    labels: np.ndarray             # int per document; -1 = noise (hdbscan only)
    params: dict = field(default_factory=dict)
    doc_ids: list[str] = field(default_factory=list)
    # agglomerative: (i, j, height, size) merges, scipy-style cluster indexing
    merges: list[tuple[int, int, float, int]] | None = None
    # hdbscan condensed tree rows: (parent, child, lambda, child_size)
    condensed_tree: list[tuple[int, int, float, int]] | None = None
    inertia: float | None = None   # kmeans
    inertia_trace: list[float] | None = None

    @property
    def n_clusters(self) -> int:
        labs = self.labels[self.labels >= 0]
        return int(labs.max()) + 1 if len(labs) else 0


def canonical_labels(raw: np.ndarray) -> np.ndarray:
    """Relabel non-noise clusters to 0..C-1 by first occurrence; keeps -1."""
    out = np.full(len(raw), -1, dtype=np.int64)
    mapping: dict[int, int] = {}
    for i, lab in enumerate(raw):
        if lab < 0:
            continue
        if lab not in mapping:
            mapping[lab] = len(mapping)
        out[i] = mapping[lab]
    return out
