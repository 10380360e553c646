"""Term ranking: per-topic relevance and corpus-level saliency.

relevance(w, t | lam) = lam * ln p(w|t) + (1 - lam) * ln(p(w|t) / p(w))
saliency(w) = p(w) * sum_t p(t|w) ln(p(t|w) / p(t))

p(t) weights documents by token count, and p(w) = sum_t p(w|t) p(t), so
both scores live on corpus-frequency semantics.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .. topics.model import TopicModel


@dataclass
class TermRanking:
    lam: float
    # per topic: list of (token, score) sorted by descending relevance
    topics: list[list[tuple[str, float]]]
    # corpus-level: (token, saliency) sorted descending
    saliency: list[tuple[str, float]]
    topic_weights: list[float]          # p(t)
    term_frequency: list[float]         # p(w)


def topic_weights(model: TopicModel) -> np.ndarray:
    """p(t): mean document-topic distribution weighted by document token counts."""
    w = model.doc_lengths.astype(np.float64)
    pt = (model.theta * w[:, None]).sum(axis=0) / w.sum()
    return pt


def term_frequency(model: TopicModel) -> np.ndarray:
    """p(w) = sum_t p(w|t) p(t)."""
    return topic_weights(model) @ model.phi


def relevance_scores(model: TopicModel, lam: float) -> np.ndarray:
    """K x V relevance score matrix at the given lambda."""
    if not (0.0 <= lam <= 1.0):
        raise ValueError(f"lambda must be in [0, 1], got {lam}")
    pw = term_frequency(model)
    with np.errstate(divide="ignore"):
        log_phi = np.log(model.phi)
        log_lift = log_phi - np.log(pw)[None, :]
    return lam * log_phi + (1.0 - lam) * log_lift


def _ranked(tokens, scores) -> list[tuple[str, float]]:
    order = np.lexsort((np.arange(len(scores)), -scores))
    return [(tokens[i], float(scores[i])) for i in order]


def relevance(model: TopicModel, lam: float = 0.6, top_n: int | None = None) -> TermRanking:
    """Per-topic term rankings by relevance, plus the saliency ranking."""
    scores = relevance_scores(model, lam)
    sal = saliency(model)
    top = top_n if top_n is not None else len(model.vocab_tokens)
    topics = [_ranked(model.vocab_tokens, scores[k])[:top] for k in range(model.K)]
    sal_ranked = _ranked(model.vocab_tokens, sal)[:top]
    pt = topic_weights(model)
    pw = term_frequency(model)
    return TermRanking(
        lam=lam,
        topics=topics,
        saliency=sal_ranked,
        topic_weights=[float(x) for x in pt],
        term_frequency=[float(x) for x in pw],
    )


def saliency(model: TopicModel) -> np.ndarray:
    """Per-term saliency scores (non-negative; identically 0 when K = 1)."""
    pt = topic_weights(model)
    pw = term_frequency(model)
    # p(t|w) = phi_tw * p(t) / p(w)
    with np.errstate(divide="ignore", invalid="ignore"):
        ptw = model.phi * pt[:, None] / pw[None, :]
        ratio = np.where(ptw > 0, ptw / pt[:, None], 1.0)
        distinct = np.where(ptw > 0, ptw * np.log(ratio), 0.0).sum(axis=0)
    return pw * distinct
