"""Fitted topic model container and its JSON file format."""

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace
from pathlib import Path

import numpy as np

from ..errors import SchemaViolation

MODEL_FILE_VERSION = 1

ROW_SUM_TOL = 1e-9


@dataclass
class TopicModel:
    method: str                      # "LDA" | "NMF"
    K: int
    phi: np.ndarray                  # K x V, rows sum to 1
    theta: np.ndarray                # D x K, rows sum to 1
    vocab_tokens: tuple[str, ...]
    doc_ids: list[str]
    doc_lengths: np.ndarray          # token count per document (raw counts)
    seed: int
    alpha: float | None = None       # LDA only
    beta: float | None = None        # LDA only
    coherence: float | None = None
    topic_labels: list[str] = field(default_factory=list)
    trace: list[float] = field(default_factory=list)  # per-iteration log-likelihood (LDA) or Frobenius error (NMF)
    selection: list[dict] | None = None  # optimize_model candidate report

    def __post_init__(self):
        if not self.topic_labels:
            self.topic_labels = [f"topic-{k}" for k in range(self.K)]
        self.validate()

    def validate(self):
        # K >= 2 for user-facing fits (enforced by FitConfig); K = 1 is kept
        # legal here for degenerate diagnostic models.
        if self.K < 1:
            raise SchemaViolation(f"topic count must be >= 1, got {self.K}")
        if self.phi.shape[0] != self.K or self.theta.shape[1] != self.K:
            raise SchemaViolation("phi/theta shapes inconsistent with K")
        if len(self.topic_labels) != self.K:
            raise SchemaViolation("topic_labels length must equal K")
        for name, m in (("phi", self.phi), ("theta", self.theta)):
            if np.any(m < 0):
                raise SchemaViolation(f"{name} has negative entries")
            sums = m.sum(axis=1)
            if np.any(np.abs(sums - 1.0) > ROW_SUM_TOL):
                raise SchemaViolation(f"{name} rows must sum to 1 within {ROW_SUM_TOL}")

    def with_labels(self, labels: list[str]) -> "TopicModel":
        return replace(self, topic_labels=list(labels))

    def top_terms(self, k: int, top_n: int = 10) -> list[str]:
        """Top terms of topic k by phi, ties broken by token id."""
        order = np.lexsort((np.arange(len(self.vocab_tokens)), -self.phi[k]))
        return [self.vocab_tokens[i] for i in order[:top_n]]


@dataclass(frozen=True)
class FitConfig:
    K_candidates: tuple[int, ...]
    seeds: tuple[int, ...] = (0,)
    method: str = "lda"              # "lda" | "nmf"
    iterations: int = 1000           # Gibbs sweeps (LDA) / max iterations (NMF)
    burn_in: int = 100
    tol: float = 1e-4                # NMF relative-error stop
    coherence_metric: str = "umass"  # "umass" | "npmi"
    alpha: float | None = None       # default 50/K
    beta: float = 0.01
    top_n: int = 10
    use_tfidf: bool = True

    def __post_init__(self):
        if not self.K_candidates:
            raise ValueError("K_candidates must be non-empty")
        if any(k < 2 for k in self.K_candidates):
            raise ValueError("all K candidates must be >= 2")
        if not self.seeds:
            raise ValueError("seeds must be non-empty")
        if not (self.iterations > self.burn_in >= 0):
            raise ValueError("need iterations > burn_in >= 0")
        if self.tol <= 0:
            raise ValueError("tol must be > 0")
        if self.method not in ("lda", "nmf"):
            raise ValueError(f"unknown method {self.method!r}")
        if self.coherence_metric not in ("umass", "npmi"):
            raise ValueError(f"unknown coherence metric {self.coherence_metric!r}")

    @classmethod
    def from_dict(cls, raw: dict) -> "FitConfig":
        known = {f for f in cls.__dataclass_fields__}
        unknown = set(raw) - known
        if unknown:
            raise ValueError(f"unknown fit config fields: {sorted(unknown)}")
        kwargs = dict(raw)
        for key in ("K_candidates", "seeds"):
            if key in kwargs:
                kwargs[key] = tuple(kwargs[key])
        return cls(**kwargs)


def save_model(model: TopicModel, path) -> None:
    """Write the model file (full-precision decimals, canonical key order)."""
    payload = {
        "version": MODEL_FILE_VERSION,
        "method": model.method,
        "K": model.K,
        "alpha": model.alpha,
        "beta": model.beta,
        "seed": model.seed,
        "coherence": model.coherence,
        "labels": model.topic_labels,
        "phi": [[float(x) for x in row] for row in model.phi],
        "theta": [[float(x) for x in row] for row in model.theta],
        "vocab": list(model.vocab_tokens),
        "doc_ids": list(model.doc_ids),
        "doc_lengths": [int(x) for x in model.doc_lengths],
    }
    if model.selection is not None:
        payload["selection"] = model.selection
    Path(path).write_text(
        json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n", encoding="utf-8"
    )


def load_model(path) -> TopicModel:
    path = Path(path)
    try:
        raw = json.loads(path.read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise SchemaViolation(f"cannot read model file {path}: {exc}") from exc
    if raw.get("version") != MODEL_FILE_VERSION:
        raise SchemaViolation(f"unsupported model file version in {path}")
    try:
        return TopicModel(
            method=raw["method"],
            K=raw["K"],
            phi=np.asarray(raw["phi"], dtype=np.float64),
            theta=np.asarray(raw["theta"], dtype=np.float64),
            vocab_tokens=tuple(raw["vocab"]),
            doc_ids=list(raw["doc_ids"]),
            doc_lengths=np.asarray(raw["doc_lengths"], dtype=np.int64),
            seed=raw["seed"],
            alpha=raw.get("alpha"),
            beta=raw.get("beta"),
            coherence=raw.get("coherence"),
            topic_labels=list(raw["labels"]),
            selection=raw.get("selection"),
        )
    except KeyError as exc:
        raise SchemaViolation(f"model file {path} missing field {exc}") from exc
