"""Read-only HTTP API over a loaded analysis bundle.

Every response is a pure function of (bundle, query): clustering and
mapping variants were precomputed at export time and are only selected
here; the lambda-dependent term ranking is arithmetic over stored phi and
p(w). Repeated identical requests therefore return byte-identical bodies.
"""

from __future__ import annotations

import math

import numpy as np
from fastapi import FastAPI, HTTPException, Query
from fastapi.middleware.cors import CORSMiddleware

from .bundle import AnalysisBundle
from .config import AppConfig


def _section_or_404(bundle: AnalysisBundle, sid: str):
    data = bundle.sections.get(sid)
    if data is None:
        raise HTTPException(status_code=404, detail=f"unknown section id {sid!r}")
    return data


def _rank_terms(phi_row: np.ndarray, p_w: np.ndarray, vocab: list[str], lam: float, top_n: int):
    """Relevance ordering for one topic; zero-support terms are excluded."""
    mask = phi_row > 0
    scores = np.full(len(vocab), -math.inf)
    scores[mask] = lam * np.log(phi_row[mask]) + (1.0 - lam) * np.log(phi_row[mask] / p_w[mask])
    order = np.lexsort((np.arange(len(vocab)), -scores))
    out = []
    for i in order:
        if not mask[i] or len(out) >= top_n:
            break
        out.append([vocab[i], float(scores[i])])
    return out


def create_app(bundle: AnalysisBundle, config: AppConfig | None = None) -> FastAPI:
    app = FastAPI(title="doctopics bundle API", docs_url=None, redoc_url=None)
    if config and config.cors_origins:
        app.add_middleware(
            CORSMiddleware,
            allow_origins=config.cors_origins,
            allow_methods=["GET"],
            allow_headers=["*"],
        )

    # immutable per-section arrays, prepared once
    phi_cache = {
        sid: np.asarray(data.model["phi"], dtype=np.float64)
        for sid, data in bundle.sections.items()
    }
    pw_cache = {
        sid: np.asarray(data.terms["term_frequency"], dtype=np.float64)
        for sid, data in bundle.sections.items()
    }

    manifest = bundle.manifest
    # app-config UI defaults override the ones baked into the bundle
    ui_defaults = dict(manifest.get("ui_defaults", {}))
    if config and config.ui:
        ui_defaults.update(config.ui)

    # variants are config-driven and identical across sections
    first_section = next(iter(bundle.sections.values()))
    clustering_variants = {
        algo: [v["params"] for v in first_section.clusters.get(algo, {}).get("variants", [])]
        for algo in ("agglomerative", "kmeans", "hdbscan")
    }
    mapping_methods = sorted(first_section.mapping)

    @app.get("/api/meta")
    def meta():
        return {
            "version": manifest["version"],
            "created": manifest["created"],
            "doc_ids": manifest["doc_ids"],
            "entity_ids": manifest["entity_ids"],
            "covariates": sorted(manifest.get("covariates", {})),
            "section_ids": manifest["section_ids"],
            "geo": manifest.get("geo", False),
            "defaults": ui_defaults,
            "clustering": clustering_variants,
            "mapping_methods": mapping_methods,
        }

    @app.get("/api/sections")
    def sections():
        return [
            {
                "id": sid,
                "topics": bundle.sections[sid].model["labels"],
                "K": bundle.sections[sid].model["K"],
                "method": bundle.sections[sid].model["method"],
            }
            for sid in manifest["section_ids"]
        ]

    @app.get("/api/sections/{sid}/model")
    def model(sid: str):
        data = _section_or_404(bundle, sid)
        return {**data.model, "intertopic": data.terms["intertopic"]}

    @app.get("/api/sections/{sid}/terms")
    def terms(
        sid: str,
        lam: float = Query(default=None, alias="lambda"),
        top_n: int = Query(default=30, ge=1),
    ):
        data = _section_or_404(bundle, sid)
        if lam is None:
            lam = data.terms["lambda_default"]
        if not (0.0 <= lam <= 1.0):
            raise HTTPException(status_code=400, detail="parameter 'lambda' must be in [0, 1]")
        phi = phi_cache[sid]
        p_w = pw_cache[sid]
        vocab = data.model["vocab"]
        return {
            "lambda": lam,
            "labels": data.model["labels"],
            "topics": [_rank_terms(phi[k], p_w, vocab, lam, top_n) for k in range(data.model["K"])],
            "saliency": data.terms["saliency"][:top_n],
            "topic_weights": data.terms["topic_weights"],
        }

    def _variant(data, algo: str | None, k: int | None, linkage: str | None):
        if algo is None:
            raise HTTPException(status_code=400, detail="parameter 'algo' is required")
        payload = data.clusters.get(algo)
        if payload is None:
            raise HTTPException(status_code=400, detail=f"parameter 'algo' unknown: {algo!r}")
        for variant in payload["variants"]:
            params = variant["params"]
            if k is not None and params.get("k") != k:
                continue
            if linkage is not None and params.get("linkage") != linkage:
                continue
            return variant
        raise HTTPException(
            status_code=400,
            detail=f"no precomputed variant for algo={algo!r} k={k!r} linkage={linkage!r}",
        )

    @app.get("/api/sections/{sid}/clusters")
    def clusters(sid: str, algo: str = None, k: int = None, linkage: str = None):
        data = _section_or_404(bundle, sid)
        variant = _variant(data, algo, k, linkage)
        doc_ids = data.model["doc_ids"]
        return {
            "algo": algo,
            "params": variant["params"],
            "doc_ids": doc_ids,
            "labels": variant["labels"],
            "n_clusters": variant["n_clusters"],
            "manova": variant["manova"],
        }

    @app.get("/api/sections/{sid}/manova")
    def manova_report(sid: str, algo: str = None, k: int = None, linkage: str = None):
        data = _section_or_404(bundle, sid)
        variant = _variant(data, algo, k, linkage)
        return {"algo": algo, "params": variant["params"], "manova": variant["manova"]}

    @app.get("/api/sections/{sid}/mapping")
    def mapping(sid: str, method: str = None):
        data = _section_or_404(bundle, sid)
        if method is None:
            raise HTTPException(status_code=400, detail="parameter 'method' is required")
        payload = data.mapping.get(method)
        if payload is None:
            raise HTTPException(status_code=400, detail=f"parameter 'method' unknown: {method!r}")
        return payload

    @app.get("/api/documents/{doc_id}/summary")
    def summary(doc_id: str, section: str = None):
        if doc_id not in manifest["doc_ids"]:
            raise HTTPException(status_code=404, detail=f"unknown document id {doc_id!r}")
        if section is None:
            raise HTTPException(status_code=400, detail="parameter 'section' is required")
        data = _section_or_404(bundle, section)
        entry = data.summaries.get(doc_id)
        if entry is None:
            raise HTTPException(
                status_code=404, detail=f"no summary for document {doc_id!r} in section {section!r}"
            )
        # dominant topic's terms annotate the summary panel
        doc_ids = data.model["doc_ids"]
        top_words: list[str] = []
        dominant = None
        if doc_id in doc_ids:
            theta_row = np.asarray(data.model["theta"][doc_ids.index(doc_id)])
            dominant = int(np.argmax(theta_row))
            top_words = [t for t, _ in _rank_terms(
                phi_cache[section][dominant], pw_cache[section], data.model["vocab"],
                data.terms["lambda_default"], 10,
            )]
        return {
            "doc_id": doc_id,
            "section": section,
            "summary": entry["summary"],
            "path": entry["path"],
            "sentences": entry["sentences"],
            "sentence_indices": entry["sentence_indices"],
            "dominant_topic": dominant,
            "top_words": top_words,
        }

    @app.get("/api/compare")
    def compare(section: str = None, ids: str = None):
        if section is None:
            raise HTTPException(status_code=400, detail="parameter 'section' is required")
        data = _section_or_404(bundle, section)
        if not ids:
            raise HTTPException(status_code=400, detail="parameter 'ids' is required")
        requested = [s for s in ids.split(",") if s]
        doc_ids = data.model["doc_ids"]
        unknown = [d for d in requested if d not in doc_ids]
        if unknown:
            raise HTTPException(status_code=404, detail=f"unknown document ids {unknown}")
        theta = data.model["theta"]
        K = data.model["K"]
        return {
            "section": section,
            "topics": data.model["labels"],
            "docs": [
                {"doc_id": d, "theta": theta[doc_ids.index(d)]} for d in requested
            ],
            "distribution": [
                {
                    "topic": data.model["labels"][kk],
                    "values": [row[kk] for row in theta],
                    "doc_ids": doc_ids,
                }
                for kk in range(K)
            ],
        }

    @app.get("/api/correlations")
    def correlations(section: str = None):
        if section is None:
            raise HTTPException(status_code=400, detail="parameter 'section' is required")
        data = _section_or_404(bundle, section)
        return data.correlations

    if config and config.ui_dir and config.ui_dir.is_dir():
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=str(config.ui_dir), html=True), name="ui")

    return app
