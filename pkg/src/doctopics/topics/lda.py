"""LDA via collapsed Gibbs sampling.

The per-token resampling loop dominates runtime, so it lives in a compiled
kernel (_gibbs.pyx) with a NumPy fallback (_gibbs_py); the two are
bit-identical by construction. GIBBS_BACKEND names the one in use.
"""

from __future__ import annotations

import numpy as np
from scipy.special import gammaln

from ..corpus.vocabulary import BowMatrix
from ..errors import DegenerateK, EmptyCorpus
from .model import TopicModel
from .rng import Pcg32

try:
    from . import _gibbs as _kernel
except ImportError:  # extension not built; fall back to NumPy
    from . import _gibbs_py as _kernel

GIBBS_BACKEND = _kernel.BACKEND


def _expand_tokens(bow: BowMatrix) -> tuple[np.ndarray, np.ndarray]:
    """Flatten the BoW into one token-instance array per document slot.

    Token instances appear in vocabulary-id order within each document,
    repeated by count, so the sweep order is deterministic.
    """
    indptr = np.zeros(bow.n_docs + 1, dtype=np.int64)
    chunks = []
    for d in range(bow.n_docs):
        ids, counts = bow.row(d)
        chunks.append(np.repeat(ids, counts))
        indptr[d + 1] = indptr[d] + int(counts.sum())
    word_ids = np.concatenate(chunks).astype(np.int32) if chunks else np.empty(0, dtype=np.int32)
    return indptr, word_ids


def _log_likelihood(n_dk, n_kv, n_k, n_d, alpha, beta) -> float:
    """Joint log p(w, z) under the collapsed model (Dirichlet-multinomial)."""
    K, V = n_kv.shape
    D = n_dk.shape[0]
    lw = K * (gammaln(V * beta) - V * gammaln(beta))
    lw += float(gammaln(n_kv + beta).sum() - gammaln(n_k + V * beta).sum())
    lz = D * (gammaln(K * alpha) - K * gammaln(alpha))
    lz += float(gammaln(n_dk + alpha).sum() - gammaln(n_d + K * alpha).sum())
    return lw + lz


def lda_fit(
    bow: BowMatrix,
    K: int,
    alpha: float | None = None,
    beta: float = 0.01,
    iterations: int = 1000,
    burn_in: int = 100,
    seed: int = 0,
) -> TopicModel:
    """Fit LDA by collapsed Gibbs sampling; deterministic for a fixed seed.

    phi and theta are read from the final-state counts:
    phi_kv = (n_kv + beta) / (n_k + V*beta), theta_dk = (n_dk + alpha) / (n_d + K*alpha).
    The per-iteration joint log-likelihood is recorded in ``trace``.
    """
    if bow.n_docs == 0 or len(bow.counts) == 0:
        raise EmptyCorpus("bag-of-words matrix has no rows")
    if K > bow.n_terms:
        raise DegenerateK(f"K={K} exceeds the {bow.n_terms} distinct vocabulary tokens")
    if not (iterations > burn_in >= 0):
        raise ValueError("need iterations > burn_in >= 0")
    if alpha is None:
        alpha = 50.0 / K

    V = bow.n_terms
    D = bow.n_docs
    indptr, word_ids = _expand_tokens(bow)
    n_tokens = len(word_ids)
    if n_tokens == 0:
        raise EmptyCorpus("bag-of-words matrix has no tokens")

    rng = Pcg32(seed)
    z = np.empty(n_tokens, dtype=np.int32)
    n_dk = np.zeros((D, K), dtype=np.float64)
    n_kv = np.zeros((K, V), dtype=np.float64)
    n_k = np.zeros(K, dtype=np.float64)
    for d in range(D):
        for t in range(indptr[d], indptr[d + 1]):
            k = rng.next_below(K)
            z[t] = k
            n_dk[d, k] += 1.0
            n_kv[k, word_ids[t]] += 1.0
            n_k[k] += 1.0
    n_d = n_dk.sum(axis=1)

    state = rng.state_array()
    trace: list[float] = []
    for _ in range(iterations):
        _kernel.gibbs_sweep(indptr, word_ids, z, n_dk, n_kv, n_k, alpha, beta, state)
        trace.append(_log_likelihood(n_dk, n_kv, n_k, n_d, alpha, beta))

    phi = (n_kv + beta) / (n_k + V * beta)[:, None]
    theta = (n_dk + alpha) / (n_d + K * alpha)[:, None]

    return TopicModel(
        method="LDA",
        K=K,
        phi=phi,
        theta=theta,
        vocab_tokens=bow.vocab.tokens,
        doc_ids=list(bow.doc_ids),
        doc_lengths=n_d.astype(np.int64),
        seed=seed,
        alpha=alpha,
        beta=beta,
        trace=trace,
    )
