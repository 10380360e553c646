"""CLI stage implementations: ingest -> fit -> analyze -> summarize -> export.

Each stage reads from and writes into one shared work directory and is
resumable: a completed stage becomes a no-op unless forced. All outputs
are canonical JSON so repeated runs are byte-stable.
"""

from __future__ import annotations

import json
import os
from concurrent.futures import ThreadPoolExecutor, as_completed
from datetime import datetime, timezone
from pathlib import Path

import numpy as np

from ..analysis import (
    agglomerative,
    classical_mds,
    correlation_matrix,
    distance_matrix,
    hdbscan,
    kmeans,
    manova,
    relevance,
    tsne,
)
from ..corpus import (
    PreprocessOptions,
    build_bow_matrix,
    build_vocabulary,
    load_manifest,
    preprocess,
    split_sections,
)
from ..errors import DocTopicsError, PerplexityTooLarge, TooFewGroups, GroupTooSmall, TooFewPoints
from ..summarize import BuiltinLexicalProvider, LlmClient, StubLlmClient, summarize_section
from ..corpus.sections import Section
from ..topics import FitConfig, load_model, optimize_model, save_model
from ..topics.model import TopicModel
from .bundle import AnalysisBundle, SectionData, save_bundle
from .config import PipelineConfig
from .geo import all_iso_alpha2

CORPUS_FILE = "corpus/corpus.json"
CONFIG_FILE = "config.json"


def _write_json(path: Path, obj) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(
        json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=False) + "\n",
        encoding="utf-8",
    )


def _read_json(path: Path):
    return json.loads(path.read_text(encoding="utf-8"))


def jsonable(obj):
    """Recursively convert numpy scalars/arrays for JSON serialization."""
    if isinstance(obj, dict):
        return {k: jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return [jsonable(v) for v in obj.tolist()]
    if isinstance(obj, (np.integer,)):
        return int(obj)
    if isinstance(obj, (np.floating,)):
        return float(obj)
    return obj


def stage_ingest(manifest_path, out_dir, force: bool = False, log=lambda e: None) -> Path:
    """Build the token corpus from a manifest; writes <out>/corpus/corpus.json."""
    out = Path(out_dir)
    target = out / CORPUS_FILE
    if target.exists() and not force:
        log({"stage": "ingest", "event": "skip", "reason": "corpus exists"})
        return target

    manifest = load_manifest(manifest_path)
    options = PreprocessOptions().with_extra_stopwords(manifest.stopwords_extra)
    sections_out = []
    section_ids_seen: list[str] = []
    for doc in manifest.documents:
        text = doc.text_path.read_text(encoding="utf-8")
        secs = split_sections(text, manifest.structure, doc_id=doc.doc_id)
        for sec in secs:
            tokens = preprocess(sec.body, options)
            sections_out.append(
                {
                    "doc_id": doc.doc_id,
                    "section_id": sec.section_id,
                    "body": sec.body,
                    "tokens": tokens,
                }
            )
            if sec.section_id not in section_ids_seen:
                section_ids_seen.append(sec.section_id)
        log({"stage": "ingest", "event": "document", "doc_id": doc.doc_id, "sections": len(secs)})

    ordered_ids = [s for s in manifest.structure.section_ids() if s in section_ids_seen]
    payload = {
        "version": 1,
        "language": manifest.language,
        "doc_ids": manifest.doc_ids,
        "entity_ids": {d.doc_id: d.entity_id for d in manifest.documents},
        "covariates": {
            name: {d.doc_id: d.covariates.get(name) for d in manifest.documents}
            for name in manifest.covariate_names
        },
        "section_ids": ordered_ids,
        "sections": sections_out,
    }
    _write_json(target, payload)
    log({"stage": "ingest", "event": "done", "documents": len(manifest.documents)})
    return target


def _corpus_sections(corpus: dict, section_id: str) -> list[Section]:
    out = []
    for rec in corpus["sections"]:
        if rec["section_id"] == section_id:
            out.append(
                Section(
                    doc_id=rec["doc_id"],
                    section_id=section_id,
                    raw_text=rec["body"],
                    body=rec["body"],
                    tokens=list(rec["tokens"]),
                )
            )
    return out


def _requested_sections(corpus: dict, sections: str) -> list[str]:
    if sections in ("all", "", None):
        return list(corpus["section_ids"])
    requested = [s.strip() for s in sections.split(",") if s.strip()]
    unknown = [s for s in requested if s not in corpus["section_ids"]]
    if unknown:
        raise DocTopicsError(f"unknown section ids requested: {unknown}")
    return requested


def stage_fit(work_dir, sections: str = "all", config: PipelineConfig | None = None,
              force: bool = False, log=lambda e: None) -> Path:
    """Fit the best topic model per section; writes <work>/models/<sid>.json."""
    work = Path(work_dir)
    config = config or PipelineConfig.defaults()
    models_dir = work / "models"
    marker = models_dir / ".done"
    if marker.exists() and not force:
        log({"stage": "fit", "event": "skip", "reason": "models exist"})
        return models_dir

    corpus = _read_json(work / CORPUS_FILE)
    fit_cfg = dict(config.fit)
    min_df = fit_cfg.pop("min_df", 2)
    max_df = fit_cfg.pop("max_df", 0.95)
    fc = FitConfig.from_dict(fit_cfg)

    for sid in _requested_sections(corpus, sections):
        secs = _corpus_sections(corpus, sid)
        vocab = build_vocabulary(secs, min_df=min_df, max_df=max_df)
        bow = build_bow_matrix(secs, vocab, sid)
        model = optimize_model(bow, fc)
        models_dir.mkdir(parents=True, exist_ok=True)
        save_model(model, models_dir / f"{sid}.json")
        log(
            {
                "stage": "fit",
                "event": "section",
                "section": sid,
                "K": model.K,
                "coherence": model.coherence,
                "method": model.method,
            }
        )

    _write_json(work / CONFIG_FILE, config.raw)
    marker.write_text("")
    log({"stage": "fit", "event": "done"})
    return models_dir


def _manova_payload(theta: np.ndarray, labels: np.ndarray) -> dict:
    try:
        report = manova(theta, labels)
    except (TooFewGroups, GroupTooSmall) as exc:
        return {"error": str(exc)}
    return jsonable(
        {
            "wilks_lambda": report.wilks_lambda,
            "F_stat": report.F_stat,
            "df1": report.df1,
            "df2": report.df2,
            "p_value": report.p_value,
            "fallback_used": report.fallback_used,
            "n_groups": report.n_groups,
            "n_obs": report.n_obs,
        }
    )


def _analyze_section(sid: str, model: TopicModel, corpus: dict, acfg: dict, log) -> dict[str, dict]:
    theta = model.theta
    doc_ids = model.doc_ids
    metric = acfg["metric"]
    dist = distance_matrix(theta, metric=metric, doc_ids=doc_ids)

    files: dict[str, dict] = {}
    files["distances.json"] = {
        "metric": metric,
        "doc_ids": doc_ids,
        "values": jsonable(dist.values),
    }

    # clustering variants (precomputed; the service never recomputes)
    agg_variants = []
    for linkage in acfg["agglomerative"]["linkages"]:
        for k in acfg["agglomerative"]["k"]:
            if k > dist.n:
                continue
            res = agglomerative(dist, linkage=linkage, k=k)
            agg_variants.append(
                {
                    "params": {"linkage": linkage, "k": k, "metric": metric},
                    "labels": jsonable(res.labels),
                    "n_clusters": res.n_clusters,
                    "manova": _manova_payload(theta, res.labels),
                }
            )
    files["clusters/agglomerative.json"] = {"algo": "agglomerative", "variants": agg_variants}

    km_variants = []
    km = acfg["kmeans"]
    for k in km["k"]:
        if k > len(doc_ids):
            continue
        res = kmeans(theta, k=k, seed=km["seed"], restarts=km["restarts"], space=km["space"], doc_ids=doc_ids)
        km_variants.append(
            {
                "params": {"k": k, "space": km["space"], "seed": km["seed"], "restarts": km["restarts"]},
                "labels": jsonable(res.labels),
                "n_clusters": res.n_clusters,
                "inertia": res.inertia,
                "manova": _manova_payload(theta, res.labels),
            }
        )
    files["clusters/kmeans.json"] = {"algo": "kmeans", "variants": km_variants}

    hd = acfg["hdbscan"]
    hd_variants = []
    try:
        res = hdbscan(dist, min_cluster_size=hd["min_cluster_size"], min_samples=hd["min_samples"])
        hd_variants.append(
            {
                "params": {"min_cluster_size": hd["min_cluster_size"], "min_samples": hd["min_samples"], "metric": metric},
                "labels": jsonable(res.labels),
                "n_clusters": res.n_clusters,
                "manova": _manova_payload(theta, res.labels),
            }
        )
    except (TooFewPoints, DocTopicsError) as exc:
        log({"stage": "analyze", "event": "hdbscan-skipped", "section": sid, "reason": str(exc)})
    files["clusters/hdbscan.json"] = {"algo": "hdbscan", "variants": hd_variants}

    # 2D mappings
    mds_emb = classical_mds(dist)
    files["mapping/mds.json"] = {"method": "mds", "doc_ids": doc_ids, "coords": jsonable(mds_emb.coords)}
    ts = acfg["tsne"]
    try:
        perplexity = ts["perplexity"]
        tsne_emb = tsne(dist, perplexity=perplexity, seed=ts["seed"], iters=ts["iters"])
        files["mapping/tsne.json"] = {
            "method": "tsne",
            "doc_ids": doc_ids,
            "coords": jsonable(tsne_emb.coords),
        }
    except PerplexityTooLarge as exc:
        log({"stage": "analyze", "event": "tsne-skipped", "section": sid, "reason": str(exc)})

    # term rankings + intertopic view
    lam = acfg["relevance_lambda"]
    ranking = relevance(model, lam=lam)
    topic_dist = distance_matrix(model.phi, metric="jsd", doc_ids=[str(k) for k in range(model.K)])
    if model.K >= 2:
        intertopic = classical_mds(topic_dist)
        intertopic_coords = jsonable(intertopic.coords)
    else:
        intertopic_coords = [[0.0, 0.0]]
    files["terms.json"] = {
        "lambda_default": lam,
        "topic_weights": ranking.topic_weights,
        "term_frequency": ranking.term_frequency,
        "saliency": [[t, s] for t, s in ranking.saliency],
        "topics_default": [[[t, s] for t, s in topic] for topic in ranking.topics],
        "intertopic": {"coords": intertopic_coords, "prevalence": ranking.topic_weights, "metric": "jsd"},
    }

    # covariate correlations, restricted to the docs present in this section
    covs = corpus["covariates"]
    cov_cols = {
        name: [covs[name].get(d) for d in doc_ids] for name in sorted(covs)
    }
    if cov_cols and len(doc_ids) >= 3:
        corr = correlation_matrix(
            theta, cov_cols, method=acfg["correlation_method"], topic_labels=model.topic_labels
        )
        files["correlations.json"] = {
            "method": corr.method,
            "topic_labels": corr.topic_labels,
            "covariate_names": corr.covariate_names,
            "r": corr.r,
            "p": corr.p,
            "note": corr.note,
        }
    else:
        files["correlations.json"] = {
            "method": acfg["correlation_method"],
            "topic_labels": model.topic_labels,
            "covariate_names": [],
            "r": [],
            "p": [],
            "note": [],
        }
    return files


def stage_analyze(work_dir, config: PipelineConfig | None = None, force: bool = False,
                  log=lambda e: None) -> Path:
    """Distances, clusterings (+MANOVA), 2D mappings, term rankings, correlations."""
    work = Path(work_dir)
    out_dir = work / "analysis"
    marker = out_dir / ".done"
    if marker.exists() and not force:
        log({"stage": "analyze", "event": "skip", "reason": "analysis exists"})
        return out_dir

    if config is None:
        cfg_path = work / CONFIG_FILE
        config = PipelineConfig(raw=_read_json(cfg_path)) if cfg_path.exists() else PipelineConfig.defaults()
    corpus = _read_json(work / CORPUS_FILE)
    models_dir = work / "models"

    for sid in corpus["section_ids"]:
        model_path = models_dir / f"{sid}.json"
        if not model_path.exists():
            log({"stage": "analyze", "event": "no-model", "section": sid})
            continue
        model = load_model(model_path)
        files = _analyze_section(sid, model, corpus, config.analysis, log)
        for rel, payload in files.items():
            _write_json(out_dir / sid / rel, payload)
        log({"stage": "analyze", "event": "section", "section": sid})

    marker.write_text("")
    log({"stage": "analyze", "event": "done"})
    return out_dir


def stage_summarize(work_dir, stub: bool = False, config: PipelineConfig | None = None,
                    force: bool = False, log=lambda e: None) -> Path:
    """Hybrid summaries per (document, section); writes <work>/summaries/<sid>.json."""
    work = Path(work_dir)
    out_dir = work / "summaries"
    marker = out_dir / ".done"
    if marker.exists() and not force:
        log({"stage": "summarize", "event": "skip", "reason": "summaries exist"})
        return out_dir

    if config is None:
        cfg_path = work / CONFIG_FILE
        config = PipelineConfig(raw=_read_json(cfg_path)) if cfg_path.exists() else PipelineConfig.defaults()
    scfg = config.summarize
    corpus = _read_json(work / CORPUS_FILE)

    if stub:
        client = StubLlmClient()
    else:
        if not scfg.get("endpoint") or not scfg.get("model"):
            raise DocTopicsError(
                "summarize needs config.summarize.endpoint and .model (or pass --stub)"
            )
        client = LlmClient(endpoint=scfg["endpoint"], model=scfg["model"])
    provider = BuiltinLexicalProvider()
    budget = scfg.get("budget", 3000)
    parallelism = max(1, int(scfg.get("parallelism", 2)))

    # sections run concurrently up to the limit; results are keyed by
    # (section, doc), so completion order never shows in the output
    jobs = [
        (sid, sec)
        for sid in corpus["section_ids"]
        for sec in _corpus_sections(corpus, sid)
    ]
    results: dict[tuple[str, str], dict] = {}
    with ThreadPoolExecutor(max_workers=parallelism) as pool:
        futures = {
            pool.submit(summarize_section, sec, client, provider, budget): (sid, sec.doc_id)
            for sid, sec in jobs
        }
        for future in as_completed(futures):
            sid, doc_id = futures[future]
            result = future.result()
            results[(sid, doc_id)] = {
                "summary": result.summary,
                "path": result.path,
                "sentence_indices": result.selected_indices,
                "sentences": result.selected_sentences,
            }

    for sid in corpus["section_ids"]:
        payload = {
            doc_id: results[(s, doc_id)]
            for (s, doc_id) in sorted(results)
            if s == sid
        }
        _write_json(out_dir / f"{sid}.json", payload)
        log({"stage": "summarize", "event": "section", "section": sid, "documents": len(payload)})

    marker.write_text("")
    log({"stage": "summarize", "event": "done"})
    return out_dir


def _created_timestamp(explicit: str | None) -> str:
    if explicit:
        return explicit
    epoch = os.environ.get("SOURCE_DATE_EPOCH")
    if epoch:
        return datetime.fromtimestamp(int(epoch), tz=timezone.utc).isoformat()
    return datetime.now(tz=timezone.utc).isoformat()


def stage_export(work_dir, out_path, force: bool = False, log=lambda e: None,
                 timestamp: str | None = None) -> Path:
    """Assemble the analysis bundle from completed stage outputs."""
    work = Path(work_dir)
    out = Path(out_path)
    if (out / "manifest.json").exists() and not force:
        log({"stage": "export", "event": "skip", "reason": "bundle exists"})
        return out

    corpus = _read_json(work / CORPUS_FILE)
    cfg_path = work / CONFIG_FILE
    config = _read_json(cfg_path) if cfg_path.exists() else PipelineConfig.defaults().raw

    sections: dict[str, SectionData] = {}
    kept_section_ids = []
    for sid in corpus["section_ids"]:
        model_path = work / "models" / f"{sid}.json"
        adir = work / "analysis" / sid
        if not model_path.exists() or not adir.is_dir():
            log({"stage": "export", "event": "incomplete-section", "section": sid})
            continue
        clusters = {
            f.stem: _read_json(f) for f in sorted((adir / "clusters").glob("*.json"))
        }
        mapping = {
            f.stem: _read_json(f) for f in sorted((adir / "mapping").glob("*.json"))
        }
        summaries_path = work / "summaries" / f"{sid}.json"
        sections[sid] = SectionData(
            model=_read_json(model_path),
            distances=_read_json(adir / "distances.json"),
            clusters=clusters,
            mapping=mapping,
            terms=_read_json(adir / "terms.json"),
            summaries=_read_json(summaries_path) if summaries_path.exists() else {},
            correlations=_read_json(adir / "correlations.json"),
        )
        kept_section_ids.append(sid)

    if not sections:
        raise DocTopicsError("nothing to export: no section has both a model and analysis output")

    manifest = {
        "version": 1,
        "created": _created_timestamp(timestamp),
        "language": corpus.get("language", "en"),
        "doc_ids": corpus["doc_ids"],
        "entity_ids": corpus["entity_ids"],
        "covariates": corpus["covariates"],
        "section_ids": kept_section_ids,
        "geo": all_iso_alpha2(corpus["entity_ids"].values()),
        "config": config,
        "ui_defaults": config.get("ui_defaults", {}),
    }
    bundle = AnalysisBundle(manifest=manifest, sections=sections)
    save_bundle(bundle, out)
    log({"stage": "export", "event": "done", "sections": len(sections), "path": str(out)})
    return out
