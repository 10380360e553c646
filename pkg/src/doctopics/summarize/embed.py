"""Sentence embedding providers.

The builtin provider is purely lexical (L2-normalized TF-IDF) so the whole
summarization path can run offline and deterministically. The external
provider posts to any OpenAI-compatible /embeddings endpoint.
"""

from __future__ import annotations

import numpy as np

from ..corpus.preprocess import PreprocessOptions, preprocess
from ..corpus.vocabulary import Vocabulary
from ..errors import DimensionMismatch, ProviderUnavailable
from .sentences import SentenceSet


class BuiltinLexicalProvider:
    """TF-IDF sentence vectors over a fixed vocabulary.

    When constructed without a vocabulary, one is built per embed() call
    from the sentences themselves (df counted over sentences).
    """

    kind = "builtin_lexical"

    def __init__(self, vocab: Vocabulary | None = None, options: PreprocessOptions | None = None):
        self.vocab = vocab
        self.options = options or PreprocessOptions()

    @property
    def dimension(self) -> int | None:
        return len(self.vocab) if self.vocab is not None else None

    def embed(self, sentences: SentenceSet) -> np.ndarray:
        token_lists = [preprocess(t, self.options) for t in sentences.texts()]
        if self.vocab is not None:
            vocab_ids = self.vocab.id_of
            V = len(self.vocab)
        else:
            seen = sorted({t for toks in token_lists for t in toks})
            vocab_ids = {t: i for i, t in enumerate(seen)}
            V = max(len(seen), 1)
        n = len(token_lists)
        X = np.zeros((n, V), dtype=np.float64)
        for i, toks in enumerate(token_lists):
            for t in toks:
                j = vocab_ids.get(t)
                if j is not None:
                    X[i, j] += 1.0
        df = (X > 0).sum(axis=0)
        idf = np.log((1.0 + n) / (1.0 + df)) + 1.0
        X *= idf[None, :]
        norms = np.linalg.norm(X, axis=1, keepdims=True)
        np.divide(X, norms, out=X, where=norms > 0)
        return X


class ExternalHttpProvider:
    """OpenAI-compatible embeddings endpoint client."""

    kind = "external_http"

    def __init__(self, endpoint: str, model: str, dimension: int, api_key: str | None = None,
                 timeout: float = 30.0, transport=None):
        self.endpoint = endpoint.rstrip("/")
        self.model = model
        self.dimension = dimension
        self._api_key = api_key
        self.timeout = timeout
        self._transport = transport  # injection point for tests

    def embed(self, sentences: SentenceSet) -> np.ndarray:
        import httpx

        headers = {}
        if self._api_key:
            headers["Authorization"] = f"Bearer {self._api_key}"
        payload = {"model": self.model, "input": sentences.texts()}
        try:
            with httpx.Client(timeout=self.timeout, transport=self._transport) as client:
                resp = client.post(f"{self.endpoint}/embeddings", json=payload, headers=headers)
                resp.raise_for_status()
                data = resp.json()
        except Exception as exc:
            raise ProviderUnavailable(f"embedding endpoint failed: {exc}") from exc

        vectors = [item["embedding"] for item in data["data"]]
        X = np.asarray(vectors, dtype=np.float64)
        if X.ndim != 2 or X.shape != (len(sentences), self.dimension):
            raise DimensionMismatch(
                f"provider returned shape {X.shape}, expected ({len(sentences)}, {self.dimension})"
            )
        if not np.all(np.isfinite(X)):
            raise DimensionMismatch("provider returned non-finite embedding values")
        return X


def embed_sentences(sentences: SentenceSet, provider) -> np.ndarray:
    """One finite fixed-dimension vector per sentence."""
    return provider.embed(sentences)
