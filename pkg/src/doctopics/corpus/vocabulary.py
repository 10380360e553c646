"""Vocabulary construction and bag-of-words matrices."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

import numpy as np

from ..errors import EmptyVocabulary
from .sections import Section


@dataclass(frozen=True)
class Vocabulary:
    tokens: tuple[str, ...]               # index -> token, lexicographic
    doc_freq: tuple[int, ...]             # aligned with tokens
    id_of: dict[str, int] = field(default_factory=dict, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "id_of", {t: i for i, t in enumerate(self.tokens)})

    def __len__(self) -> int:
        return len(self.tokens)

    def token_of(self, token_id: int) -> str:
        return self.tokens[token_id]


def build_vocabulary(sections: list[Section], min_df: int = 2, max_df: float = 0.95) -> Vocabulary:
    """Retain tokens with min_df <= doc-frequency and df/D <= max_df.

    Document frequency counts distinct doc_ids, so repeating a token within
    one document contributes once. Ids are assigned lexicographically and
    are therefore stable across runs.
    """
    if min_df < 1:
        raise ValueError("min_df must be >= 1")
    if not (0 < max_df <= 1):
        raise ValueError("max_df must be in (0, 1]")

    docs_of: dict[str, set[str]] = {}
    doc_ids = set()
    for section in sections:
        doc_ids.add(section.doc_id)
        for token in set(section.tokens):
            docs_of.setdefault(token, set()).add(section.doc_id)
    n_docs = len(doc_ids)

    retained = sorted(
        token
        for token, docs in docs_of.items()
        if len(docs) >= min_df and len(docs) / n_docs <= max_df
    )
    if not retained:
        raise EmptyVocabulary(
            f"no token satisfies min_df={min_df}, max_df={max_df} over {n_docs} documents"
        )
    return Vocabulary(tokens=tuple(retained), doc_freq=tuple(len(docs_of[t]) for t in retained))


def to_bow(section_tokens: list[str], vocab: Vocabulary) -> tuple[np.ndarray, np.ndarray]:
    """Count in-vocabulary tokens; OOV tokens are silently dropped.

    Returns (token_ids, counts) sorted by token id, counts all positive.
    """
    counts = Counter(vocab.id_of[t] for t in section_tokens if t in vocab.id_of)
    if not counts:
        return np.empty(0, dtype=np.int32), np.empty(0, dtype=np.int32)
    ids = np.array(sorted(counts), dtype=np.int32)
    vals = np.array([counts[i] for i in ids], dtype=np.int32)
    return ids, vals


@dataclass
class BowMatrix:
    """CSR-style sparse document-term counts for one section across documents.

    Documents whose section is absent, or whose tokens are all out of
    vocabulary, have no row (the downstream models skip them).
    """

    section_id: str
    doc_ids: list[str]
    indptr: np.ndarray    # int64, len n_docs+1
    token_ids: np.ndarray  # int32
    counts: np.ndarray    # int32, all > 0
    vocab: Vocabulary

    @property
    def n_docs(self) -> int:
        return len(self.doc_ids)

    @property
    def n_terms(self) -> int:
        return len(self.vocab)

    def row(self, i: int) -> tuple[np.ndarray, np.ndarray]:
        s, e = self.indptr[i], self.indptr[i + 1]
        return self.token_ids[s:e], self.counts[s:e]

    def doc_lengths(self) -> np.ndarray:
        out = np.zeros(self.n_docs, dtype=np.int64)
        for i in range(self.n_docs):
            _, c = self.row(i)
            out[i] = int(c.sum())
        return out

    def to_dense(self) -> np.ndarray:
        dense = np.zeros((self.n_docs, self.n_terms), dtype=np.float64)
        for i in range(self.n_docs):
            ids, c = self.row(i)
            dense[i, ids] = c
        return dense

    def term_doc_freq(self) -> np.ndarray:
        df = np.zeros(self.n_terms, dtype=np.int64)
        for i in range(self.n_docs):
            ids, _ = self.row(i)
            df[ids] += 1
        return df


def build_bow_matrix(sections: list[Section], vocab: Vocabulary, section_id: str) -> BowMatrix:
    """Assemble the BoW matrix for one section_id, rows in input doc order."""
    doc_ids: list[str] = []
    indptr = [0]
    all_ids: list[np.ndarray] = []
    all_counts: list[np.ndarray] = []
    for section in sections:
        if section.section_id != section_id:
            continue
        ids, counts = to_bow(section.tokens, vocab)
        if len(ids) == 0:
            continue
        doc_ids.append(section.doc_id)
        all_ids.append(ids)
        all_counts.append(counts)
        indptr.append(indptr[-1] + len(ids))
    return BowMatrix(
        section_id=section_id,
        doc_ids=doc_ids,
        indptr=np.array(indptr, dtype=np.int64),
        token_ids=np.concatenate(all_ids) if all_ids else np.empty(0, dtype=np.int32),
        counts=np.concatenate(all_counts) if all_counts else np.empty(0, dtype=np.int32),
        vocab=vocab,
    )
