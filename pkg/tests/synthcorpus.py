"""Seeded synthetic corpus generators shared by the test suite.

The bag-of-words generator plants a known topic-word matrix (three
disjoint 20-word blocks) and samples documents from it, so recovery tests
can compare fitted topics against the ground truth.
"""

from __future__ import annotations

import numpy as np

from doctopics.corpus.vocabulary import BowMatrix, Vocabulary

N_TOPICS = 3
# block size matches the coherence top_n so a split topic cannot improve its
# top-word co-occurrence, keeping the coherence peak at the true K
WORDS_PER_TOPIC = 10


def true_phi(n_topics: int = N_TOPICS, words_per_topic: int = WORDS_PER_TOPIC) -> np.ndarray:
    """Block-structured topic-word matrix with a mild within-block tilt."""
    V = n_topics * words_per_topic
    phi = np.zeros((n_topics, V))
    weights = np.linspace(1.0, 0.3, words_per_topic)
    for k in range(n_topics):
        block = slice(k * words_per_topic, (k + 1) * words_per_topic)
        phi[k, block] = weights / weights.sum()
    return phi


def synthetic_bow(
    n_docs: int = 60,
    doc_length: int = 40,
    concentration: float = 0.2,
    seed: int = 7,
) -> tuple[BowMatrix, np.ndarray, np.ndarray]:
    """Sample documents from the planted model.

    Returns (bow, true_phi, true_theta).
    """
    rng = np.random.default_rng(seed)
    phi = true_phi()
    K, V = phi.shape
    theta = rng.dirichlet([concentration] * K, size=n_docs)

    tokens = tuple(f"w{v:03d}" for v in range(V))
    vocab = Vocabulary(tokens=tokens, doc_freq=tuple([n_docs] * V))

    doc_ids = []
    indptr = [0]
    all_ids: list[np.ndarray] = []
    all_counts: list[np.ndarray] = []
    for d in range(n_docs):
        z = rng.choice(K, size=doc_length, p=theta[d])
        words = np.array([rng.choice(V, p=phi[k]) for k in z])
        ids, counts = np.unique(words, return_counts=True)
        doc_ids.append(f"D{d:02d}")
        all_ids.append(ids.astype(np.int32))
        all_counts.append(counts.astype(np.int32))
        indptr.append(indptr[-1] + len(ids))

    bow = BowMatrix(
        section_id="synthetic",
        doc_ids=doc_ids,
        indptr=np.array(indptr, dtype=np.int64),
        token_ids=np.concatenate(all_ids),
        counts=np.concatenate(all_counts),
        vocab=vocab,
    )
    return bow, phi, theta


def greedy_matched_cosines(fitted_phi: np.ndarray, planted_phi: np.ndarray) -> list[float]:
    """Greedy one-to-one matching of fitted to planted topics by cosine."""
    def cos(a, b):
        return float(a @ b / (np.linalg.norm(a) * np.linalg.norm(b)))

    remaining = list(range(planted_phi.shape[0]))
    out = []
    for k in range(fitted_phi.shape[0]):
        pairs = [(cos(fitted_phi[k], planted_phi[j]), j) for j in remaining]
        best, j = max(pairs)
        out.append(best)
        remaining.remove(j)
        if not remaining:
            break
    return out
