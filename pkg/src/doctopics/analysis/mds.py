"""Classical (Torgerson) multidimensional scaling."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .divergence import DistanceMatrix


@dataclass
class Embedding2D:
    coords: np.ndarray            # n x dim, centered at the origin
    method: str                   # "mds" | "tsne"
    doc_ids: list[str] = field(default_factory=list)
    objective_trace: list[float] = field(default_factory=list)  # t-SNE KL per iteration
    eigenvalues: list[float] = field(default_factory=list)      # MDS only


def _top_eigenpairs(B: np.ndarray, dim: int, max_iter: int = 20000, tol: float = 1e-15):
    """Leading algebraic eigenpairs by shifted power iteration with deflation.

    The Gershgorin shift makes the iteration track the largest *algebraic*
    eigenvalue even when a negative one dominates in magnitude. Iterations
    run until the eigenvector itself stabilizes so the deflation residue
    stays at machine scale.
    """
    n = B.shape[0]
    shift = float(np.abs(B).sum(axis=1).max()) or 1.0
    work = B.copy()
    rng = np.random.default_rng(0)
    values, vectors = [], []
    for _ in range(dim):
        v = rng.standard_normal(n)
        v /= np.linalg.norm(v)
        for _ in range(max_iter):
            w = work @ v + shift * v
            norm = np.linalg.norm(w)
            if norm == 0:
                break
            w /= norm
            if w @ v < 0:
                w = -w
            delta = float(np.abs(w - v).max())
            v = w
            if delta <= tol:
                break
        lam = float(v @ work @ v)
        values.append(lam)
        vectors.append(v)
        work = work - lam * np.outer(v, v)
    return np.array(values), np.column_stack(vectors)


def classical_mds(dist: DistanceMatrix, dim: int = 2) -> Embedding2D:
    """Double-center the squared distances and embed on the top eigenpairs.

    Negative eigenvalues (non-Euclidean inputs) are clamped to zero, which
    collapses the corresponding coordinate.
    """
    D2 = dist.values ** 2
    n = D2.shape[0]
    J = np.eye(n) - np.ones((n, n)) / n
    B = -0.5 * J @ D2 @ J
    values, vectors = _top_eigenpairs(B, dim)
    lead = max(values[0], 0.0)
    coords = np.zeros((n, dim))
    for d in range(dim):
        lam = values[d]
        # negative or numerically-zero eigenvalues collapse the coordinate
        if lam <= 0 or lam <= lead * 1e-12:
            continue
        coords[:, d] = np.sqrt(lam) * vectors[:, d]
    coords -= coords.mean(axis=0, keepdims=True)
    return Embedding2D(
        coords=coords,
        method="mds",
        doc_ids=list(dist.doc_ids),
        eigenvalues=[float(v) for v in values],
    )
