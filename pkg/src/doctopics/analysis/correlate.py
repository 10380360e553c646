"""Correlations between per-topic probabilities and document covariates."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.stats import t as t_dist

from ..errors import InsufficientPairs

METHODS = ("pearson", "spearman")


@dataclass
class CorrelationResult:
    method: str
    topic_labels: list[str]
    covariate_names: list[str]
    # K x C entries; None marks an undefined cell (constant input)
    r: list[list[float | None]]
    p: list[list[float | None]]
    note: list[list[str | None]]


def _rank(x: np.ndarray) -> np.ndarray:
    """Average ranks (1-based) with ties sharing the mean rank."""
    order = np.argsort(x, kind="stable")
    ranks = np.empty(len(x), dtype=np.float64)
    i = 0
    while i < len(x):
        j = i
        while j + 1 < len(x) and x[order[j + 1]] == x[order[i]]:
            j += 1
        ranks[order[i : j + 1]] = (i + j) / 2.0 + 1.0
        i = j + 1
    return ranks


def _pearson(x: np.ndarray, y: np.ndarray) -> tuple[float | None, float | None, str | None]:
    n = len(x)
    sx = x.std()
    sy = y.std()
    if sx == 0 or sy == 0:
        return None, None, "constant input"
    r = float(((x - x.mean()) * (y - y.mean())).sum() / (n * sx * sy))
    r = max(-1.0, min(1.0, r))
    if abs(r) == 1.0:
        return r, 0.0, None
    t = r * np.sqrt((n - 2) / (1.0 - r * r))
    p = float(2.0 * t_dist.sf(abs(t), n - 2))
    return r, p, None


def correlation_matrix(
    thetas,
    covariates: dict[str, list[float | None]],
    method: str = "pearson",
    topic_labels: list[str] | None = None,
) -> CorrelationResult:
    """K x C correlation matrix with two-sided p-values (t approximation).

    Null covariate values are dropped pairwise; a cell with fewer than 3
    complete pairs raises InsufficientPairs. Constant columns yield a null
    cell with an explanatory note.
    """
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}")
    X = np.asarray(thetas, dtype=np.float64)
    K = X.shape[1]
    names = sorted(covariates)
    labels = topic_labels if topic_labels is not None else [f"topic-{k}" for k in range(K)]

    r_out: list[list[float | None]] = []
    p_out: list[list[float | None]] = []
    notes: list[list[str | None]] = []
    for k in range(K):
        r_row, p_row, n_row = [], [], []
        for name in names:
            vals = covariates[name]
            mask = np.array([v is not None for v in vals], dtype=bool)
            n_pairs = int(mask.sum())
            if n_pairs < 3:
                raise InsufficientPairs(
                    f"cell (topic {k}, covariate {name!r}) has {n_pairs} complete pairs (< 3)"
                )
            x = X[mask, k]
            y = np.array([v for v in vals if v is not None], dtype=np.float64)
            if method == "spearman":
                x, y = _rank(x), _rank(y)
            r, p, note = _pearson(x, y)
            r_row.append(r)
            p_row.append(p)
            n_row.append(note)
        r_out.append(r_row)
        p_out.append(p_row)
        notes.append(n_row)
    return CorrelationResult(
        method=method,
        topic_labels=list(labels),
        covariate_names=names,
        r=r_out,
        p=p_out,
        note=notes,
    )
