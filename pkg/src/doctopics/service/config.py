"""Pipeline and app configuration files."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from ..errors import MissingFile, SchemaViolation

DEFAULT_PIPELINE_CONFIG = {
    "fit": {
        "method": "lda",
        "K_candidates": [2, 3, 4],
        "seeds": [0],
        "iterations": 400,
        "burn_in": 50,
        "tol": 1e-4,
        "coherence_metric": "umass",
        "min_df": 2,
        "max_df": 0.95,
    },
    "analysis": {
        "metric": "jsd",
        "agglomerative": {"linkages": ["average"], "k": [2, 3]},
        "kmeans": {"k": [2, 3], "space": "euclidean", "seed": 0, "restarts": 10},
        "hdbscan": {"min_cluster_size": 3, "min_samples": 2},
        "tsne": {"seed": 0, "iters": 500, "perplexity": None},
        "relevance_lambda": 0.6,
        "correlation_method": "pearson",
    },
    "summarize": {"budget": 3000, "endpoint": None, "model": None, "parallelism": 2},
    "ui_defaults": {"mapping": "mds", "algorithm": "agglomerative", "lambda": 0.6},
}


def _merge(base: dict, override: dict) -> dict:
    out = dict(base)
    for key, value in override.items():
        if isinstance(value, dict) and isinstance(out.get(key), dict):
            out[key] = _merge(out[key], value)
        else:
            out[key] = value
    return out


@dataclass
class PipelineConfig:
    raw: dict

    @classmethod
    def load(cls, path) -> "PipelineConfig":
        path = Path(path)
        if not path.is_file():
            raise MissingFile(f"config file not found: {path}")
        try:
            user = json.loads(path.read_text(encoding="utf-8"))
        except json.JSONDecodeError as exc:
            raise SchemaViolation(f"config file {path} is not valid JSON: {exc}") from exc
        unknown = set(user) - set(DEFAULT_PIPELINE_CONFIG)
        if unknown:
            raise ValueError(f"unknown config sections: {sorted(unknown)}")
        return cls(raw=_merge(DEFAULT_PIPELINE_CONFIG, user))

    @classmethod
    def defaults(cls) -> "PipelineConfig":
        return cls(raw=json.loads(json.dumps(DEFAULT_PIPELINE_CONFIG)))

    @property
    def fit(self) -> dict:
        return self.raw["fit"]

    @property
    def analysis(self) -> dict:
        return self.raw["analysis"]

    @property
    def summarize(self) -> dict:
        return self.raw["summarize"]

    @property
    def ui_defaults(self) -> dict:
        return self.raw["ui_defaults"]


@dataclass
class AppConfig:
    bundle: Path
    host: str = "127.0.0.1"
    port: int = 8000
    cors_origins: list[str] = field(default_factory=list)
    ui: dict = field(default_factory=dict)
    ui_dir: Path | None = None

    @classmethod
    def load(cls, path) -> "AppConfig":
        path = Path(path)
        if not path.is_file():
            raise MissingFile(f"app config file not found: {path}")
        try:
            raw = json.loads(path.read_text(encoding="utf-8"))
        except json.JSONDecodeError as exc:
            raise SchemaViolation(f"app config {path} is not valid JSON: {exc}") from exc
        if "bundle" not in raw:
            raise SchemaViolation("app config must name a 'bundle' directory")
        port = raw.get("port", 8000)
        if not isinstance(port, int) or not (0 < port < 65536):
            raise ValueError(f"invalid port {port!r}")
        base = path.parent
        ui_dir = raw.get("ui_dir")
        return cls(
            bundle=(base / raw["bundle"]).resolve(),
            host=raw.get("host", "127.0.0.1"),
            port=port,
            cors_origins=list(raw.get("cors_origins", [])),
            ui=dict(raw.get("ui", {})),
            ui_dir=(base / ui_dir).resolve() if ui_dir else None,
        )
