"""Topic coherence: UMass and NPMI, computed from document co-occurrence."""

from __future__ import annotations

import math

import numpy as np

from ..corpus.vocabulary import BowMatrix
from .model import TopicModel


def _presence(bow: BowMatrix, term_ids: np.ndarray) -> np.ndarray:
    """Boolean docs x terms matrix for the requested term ids."""
    col_of = {int(t): j for j, t in enumerate(term_ids)}
    P = np.zeros((bow.n_docs, len(term_ids)), dtype=bool)
    for d in range(bow.n_docs):
        ids, _ = bow.row(d)
        for t in ids:
            j = col_of.get(int(t))
            if j is not None:
                P[d, j] = True
    return P


def _top_ids(model: TopicModel, k: int, top_n: int) -> np.ndarray:
    order = np.lexsort((np.arange(model.phi.shape[1]), -model.phi[k]))
    return order[:top_n]


def coherence(model: TopicModel, bow: BowMatrix, metric: str = "umass", top_n: int = 10) -> float:
    """Mean per-topic coherence over the top_n words ranked by phi.

    umass: sum over pairs i<j of ln((D(w_i,w_j)+1)/D(w_j)), D counted on the
    fitting corpus.
    npmi: mean over pairs of ln(p_ij/(p_i p_j)) / -ln(p_ij), with the two
    degenerate cases pinned: never co-occurring -> -1, and p_ij = 1 (where
    pmi and -ln p_ij both vanish) -> 0.
    """
    if top_n > len(model.vocab_tokens):
        raise ValueError(f"top_n={top_n} exceeds vocabulary size {len(model.vocab_tokens)}")
    if metric not in ("umass", "npmi"):
        raise ValueError(f"unknown coherence metric {metric!r}")

    n_docs = bow.n_docs
    scores = []
    for k in range(model.K):
        ids = _top_ids(model, k, top_n)
        P = _presence(bow, ids).astype(np.float64)
        df = P.sum(axis=0)
        co = P.T @ P
        pair_scores = []
        for i in range(len(ids)):
            for j in range(i + 1, len(ids)):
                if metric == "umass":
                    denom = max(df[j], 1.0)
                    pair_scores.append(math.log((co[i, j] + 1.0) / denom))
                else:
                    p_ij = co[i, j] / n_docs
                    if p_ij == 0.0:
                        pair_scores.append(-1.0)
                    elif p_ij == 1.0:
                        pair_scores.append(0.0)
                    else:
                        pmi = math.log(p_ij * n_docs * n_docs / (df[i] * df[j]))
                        pair_scores.append(pmi / -math.log(p_ij))
        if metric == "umass":
            scores.append(sum(pair_scores))
        else:
            scores.append(sum(pair_scores) / len(pair_scores) if pair_scores else 0.0)
    return float(np.mean(scores))
