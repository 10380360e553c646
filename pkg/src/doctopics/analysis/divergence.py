"""Distances between probability distributions on the topic simplex.

Natural logarithm throughout; JSD is bounded by ln 2, Hellinger by 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ..errors import DimensionMismatch, NotADistribution

_SUM_TOL = 1e-6

METRICS = ("jsd", "hellinger")


def _check_pair(p, q) -> tuple[np.ndarray, np.ndarray]:
    p = np.asarray(p, dtype=np.float64)
    q = np.asarray(q, dtype=np.float64)
    if p.shape != q.shape or p.ndim != 1:
        raise DimensionMismatch(f"distribution shapes differ: {p.shape} vs {q.shape}")
    for name, x in (("p", p), ("q", q)):
        if np.any(x < 0):
            raise NotADistribution(f"{name} has negative entries")
        if abs(x.sum() - 1.0) > _SUM_TOL:
            raise NotADistribution(f"{name} sums to {x.sum():.8f}, not 1")
    return p, q


def hellinger(p, q) -> float:
    """(1/sqrt(2)) * l2 distance of the elementwise square roots; in [0, 1]."""
    p, q = _check_pair(p, q)
    return math.sqrt(np.sum((np.sqrt(p) - np.sqrt(q)) ** 2)) / math.sqrt(2.0)


def kl_divergence(p, q) -> float:
    """KL(p || q), natural log, 0*log0 = 0. Rejects q_i = 0 where p_i > 0.

    No smoothing on purpose: inside JSD the mixture m is positive wherever
    p is, so this guard only ever fires on direct misuse.
    """
    p = np.asarray(p, dtype=np.float64)
    q = np.asarray(q, dtype=np.float64)
    mask = p > 0
    if np.any(q[mask] == 0):
        raise NotADistribution("KL undefined: q has a zero where p is positive")
    return float(np.sum(p[mask] * np.log(p[mask] / q[mask])))


def jensen_shannon(p, q) -> float:
    """JSD(p, q) = KL(p||m)/2 + KL(q||m)/2 with m = (p+q)/2; in [0, ln 2]."""
    p, q = _check_pair(p, q)
    m = 0.5 * (p + q)
    return 0.5 * kl_divergence(p, m) + 0.5 * kl_divergence(q, m)


@dataclass
class DistanceMatrix:
    values: np.ndarray       # n x n, symmetric, zero diagonal
    metric: str              # "jsd" | "hellinger" (other tags allowed for precomputed inputs)
    doc_ids: list[str]

    @property
    def n(self) -> int:
        return self.values.shape[0]

    def validate(self):
        v = self.values
        if v.shape[0] != v.shape[1]:
            raise DimensionMismatch("distance matrix must be square")
        if np.any(np.abs(np.diag(v)) > 0):
            raise NotADistribution("distance matrix diagonal must be zero")
        if np.max(np.abs(v - v.T)) > 1e-12:
            raise NotADistribution("distance matrix must be symmetric within 1e-12")
        if self.metric in METRICS:
            bound = math.log(2.0) if self.metric == "jsd" else 1.0
            if np.any(v > bound + 1e-12):
                raise NotADistribution(f"{self.metric} distances exceed {bound}")


def distance_matrix(thetas, metric: str = "jsd", doc_ids: list[str] | None = None) -> DistanceMatrix:
    """Pairwise divergence matrix over distribution rows.

    Entries are computed once per unordered pair in a fixed (i, j) order and
    mirrored, so results never depend on scheduling.
    """
    thetas = np.asarray(thetas, dtype=np.float64)
    if thetas.ndim != 2 or thetas.shape[0] < 2:
        raise DimensionMismatch("need at least 2 distribution rows")
    if metric not in METRICS:
        raise ValueError(f"unknown metric {metric!r}")
    fn = jensen_shannon if metric == "jsd" else hellinger
    n = thetas.shape[0]
    out = np.zeros((n, n), dtype=np.float64)
    for i in range(n):
        for j in range(i + 1, n):
            try:
                d = fn(thetas[i], thetas[j])
            except NotADistribution as exc:
                raise NotADistribution(f"rows ({i}, {j}): {exc}") from exc
            out[i, j] = out[j, i] = d
    ids = doc_ids if doc_ids is not None else [str(i) for i in range(n)]
    dm = DistanceMatrix(values=out, metric=metric, doc_ids=list(ids))
    dm.validate()
    return dm
