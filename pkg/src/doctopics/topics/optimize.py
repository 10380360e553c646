"""Model selection over a (K, seed) candidate grid by coherence."""

from __future__ import annotations

from dataclasses import replace

from ..corpus.vocabulary import BowMatrix
from ..errors import DocTopicsError, FitError
from .coherence import coherence
from .lda import lda_fit
from .model import FitConfig, TopicModel
from .nmf import nmf_fit, tfidf_matrix


def optimize_model(bow: BowMatrix, config: FitConfig) -> TopicModel:
    """Fit every (K, seed) candidate, return the coherence argmax.

    Ties break toward smaller K, then smaller seed. Every candidate's score
    is retained on the returned model's ``selection`` report so callers can
    apply their own criteria afterwards.
    """
    X = tfidf_matrix(bow, use_tfidf=config.use_tfidf) if config.method == "nmf" else None

    fits: list[tuple[float, int, int, TopicModel]] = []
    report: list[dict] = []
    for K in config.K_candidates:
        for seed in config.seeds:
            try:
                if config.method == "lda":
                    model = lda_fit(
                        bow,
                        K,
                        alpha=config.alpha,
                        beta=config.beta,
                        iterations=config.iterations,
                        burn_in=config.burn_in,
                        seed=seed,
                    )
                else:
                    model = nmf_fit(
                        X, K, max_iter=config.iterations, tol=config.tol, seed=seed, bow=bow
                    )
            except DocTopicsError as exc:
                raise FitError(f"candidate (K={K}, seed={seed}) failed: {exc}") from exc
            score = coherence(model, bow, metric=config.coherence_metric, top_n=config.top_n)
            model = replace(model, coherence=score)
            fits.append((score, K, seed, model))
            report.append(
                {"K": K, "seed": seed, "coherence": score, "method": config.method}
            )

    best = max(fits, key=lambda item: (item[0], -item[1], -item[2]))
    return replace(best[3], selection=report)
