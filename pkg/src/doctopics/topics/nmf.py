"""NMF topic models via Lee-Seung multiplicative updates (Frobenius objective)."""

from __future__ import annotations

import numpy as np

from ..corpus.vocabulary import BowMatrix
from ..errors import AllZeroRow, NegativeInput
from .model import TopicModel

_EPS = 1e-12


def tfidf_matrix(bow: BowMatrix, use_tfidf: bool = True) -> np.ndarray:
    """Dense term-weight matrix: counts, optionally scaled by smoothed idf.

    idf(t) = ln((1 + D) / (1 + df_t)) + 1, so every observed term keeps
    positive weight.
    """
    X = bow.to_dense()
    if use_tfidf:
        df = bow.term_doc_freq()
        idf = np.log((1.0 + bow.n_docs) / (1.0 + df)) + 1.0
        X = X * idf[None, :]
    return X


def nmf_fit(
    X: np.ndarray,
    K: int,
    max_iter: int = 500,
    tol: float = 1e-4,
    seed: int = 0,
    bow: BowMatrix | None = None,
) -> TopicModel:
    """Factor X ~= W H with non-negative factors, then normalize to distributions.

    phi is H with rows renormalized; theta_d is W_d weighted by the row sums
    of H and renormalized, which preserves each document's reconstruction
    mass. The Frobenius error after every full update is recorded in
    ``trace`` and is non-increasing (multiplicative updates are monotone).
    When ``bow`` is given its ids/vocab/doc lengths annotate the model;
    otherwise placeholders are used.
    """
    X = np.asarray(X, dtype=np.float64)
    if np.any(X < 0):
        raise NegativeInput("input matrix must be non-negative")
    row_mass = X.sum(axis=1)
    dead = np.flatnonzero(row_mass == 0)
    if len(dead):
        raise AllZeroRow(f"input row {int(dead[0])} is all zeros")

    D, V = X.shape
    rng = np.random.default_rng(seed)
    scale = np.sqrt(X.mean() / K)
    W = rng.random((D, K)) * scale + _EPS
    H = rng.random((K, V)) * scale + _EPS

    trace: list[float] = []
    prev = None
    for _ in range(max_iter):
        H *= (W.T @ X) / (W.T @ W @ H + _EPS)
        W *= (X @ H.T) / (W @ H @ H.T + _EPS)
        err = float(np.linalg.norm(X - W @ H))
        trace.append(err)
        if prev is not None and abs(prev - err) <= tol * max(prev, _EPS):
            break
        prev = err

    h_mass = H.sum(axis=1)
    phi = np.where(h_mass[:, None] > 0, H / np.maximum(h_mass[:, None], _EPS), 1.0 / V)
    weights = W * h_mass[None, :]
    w_mass = weights.sum(axis=1)
    theta = np.where(w_mass[:, None] > 0, weights / np.maximum(w_mass[:, None], _EPS), 1.0 / K)
    # exact row-stochasticity after the guards
    phi = phi / phi.sum(axis=1, keepdims=True)
    theta = theta / theta.sum(axis=1, keepdims=True)

    if bow is not None:
        vocab_tokens = bow.vocab.tokens
        doc_ids = list(bow.doc_ids)
        doc_lengths = bow.doc_lengths()
    else:
        vocab_tokens = tuple(f"term-{v}" for v in range(V))
        doc_ids = [f"doc-{d}" for d in range(D)]
        doc_lengths = np.maximum(row_mass.round().astype(np.int64), 1)

    return TopicModel(
        method="NMF",
        K=K,
        phi=phi,
        theta=theta,
        vocab_tokens=vocab_tokens,
        doc_ids=doc_ids,
        doc_lengths=doc_lengths,
        seed=seed,
        trace=trace,
    )
