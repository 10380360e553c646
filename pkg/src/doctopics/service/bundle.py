"""Versioned on-disk analysis bundle: everything the exploration UI needs.

Layout:
    manifest.json
    sections/<id>/model.json
    sections/<id>/distances.json
    sections/<id>/clusters/<algo>.json
    sections/<id>/mapping/<method>.json
    sections/<id>/terms.json
    sections/<id>/summaries.json
    sections/<id>/correlations.json

All files are canonical JSON (sorted keys, compact separators, trailing
newline, repr-precision floats), so save -> load -> save is byte-stable.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from ..errors import DanglingReference, MissingFile, SchemaViolation, VersionMismatch

BUNDLE_VERSION = 1

SECTION_FILES = ("model", "distances", "terms", "summaries", "correlations")
CLUSTER_ALGOS = ("agglomerative", "kmeans", "hdbscan")
MAPPING_METHODS = ("mds", "tsne")


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=False, allow_nan=False) + "\n"


@dataclass
class SectionData:
    model: dict
    distances: dict
    clusters: dict[str, dict]          # algo -> {"algo", "variants": [...]}
    mapping: dict[str, dict]           # method -> {"method", "doc_ids", "coords"}
    terms: dict
    summaries: dict
    correlations: dict


@dataclass
class AnalysisBundle:
    manifest: dict
    sections: dict[str, SectionData] = field(default_factory=dict)

    @property
    def doc_ids(self) -> list[str]:
        return list(self.manifest["doc_ids"])

    @property
    def section_ids(self) -> list[str]:
        return list(self.manifest["section_ids"])

    def validate(self):
        """Referential integrity across the whole bundle."""
        doc_ids = set(self.doc_ids)
        for field_name in ("version", "created", "doc_ids", "entity_ids", "section_ids"):
            if field_name not in self.manifest:
                raise SchemaViolation(f"bundle manifest missing field {field_name!r}")
        for sid in self.section_ids:
            if sid not in self.sections:
                raise DanglingReference(f"manifest lists section {sid!r} with no section data")
        for sid, data in self.sections.items():
            if sid not in self.manifest["section_ids"]:
                raise DanglingReference(f"section data {sid!r} not listed in manifest")
            model_docs = data.model["doc_ids"]
            unknown = set(model_docs) - doc_ids
            if unknown:
                raise DanglingReference(f"section {sid!r} model references unknown doc_ids {sorted(unknown)}")
            K = data.model["K"]
            if len(data.model["labels"]) != K:
                raise DanglingReference(f"section {sid!r} has {len(data.model['labels'])} labels for K={K}")
            if data.distances["doc_ids"] != model_docs:
                raise DanglingReference(f"section {sid!r} distances doc_ids misaligned with model")
            for algo, payload in data.clusters.items():
                for variant in payload["variants"]:
                    if len(variant["labels"]) != len(model_docs):
                        raise DanglingReference(
                            f"section {sid!r} {algo} variant labels misaligned with model doc_ids"
                        )
            for method, payload in data.mapping.items():
                if payload["doc_ids"] != model_docs:
                    raise DanglingReference(f"section {sid!r} mapping {method!r} doc_ids misaligned")
            for doc_id in data.summaries:
                if doc_id not in doc_ids:
                    raise DanglingReference(f"section {sid!r} summary references unknown doc_id {doc_id!r}")


def save_bundle(bundle: AnalysisBundle, path) -> None:
    """Write the directory layout after an integrity check."""
    bundle.validate()
    root = Path(path)
    root.mkdir(parents=True, exist_ok=True)
    (root / "manifest.json").write_text(canonical_json(bundle.manifest), encoding="utf-8")
    for sid, data in bundle.sections.items():
        sdir = root / "sections" / sid
        (sdir / "clusters").mkdir(parents=True, exist_ok=True)
        (sdir / "mapping").mkdir(parents=True, exist_ok=True)
        for name in SECTION_FILES:
            (sdir / f"{name}.json").write_text(canonical_json(getattr(data, name)), encoding="utf-8")
        for algo, payload in data.clusters.items():
            (sdir / "clusters" / f"{algo}.json").write_text(canonical_json(payload), encoding="utf-8")
        for method, payload in data.mapping.items():
            (sdir / "mapping" / f"{method}.json").write_text(canonical_json(payload), encoding="utf-8")


def _read_json(path: Path) -> dict:
    try:
        return json.loads(path.read_text(encoding="utf-8"))
    except FileNotFoundError as exc:
        raise SchemaViolation(f"bundle file missing: {path}") from exc
    except json.JSONDecodeError as exc:
        raise SchemaViolation(f"bundle file {path} is not valid JSON: {exc}") from exc


def load_bundle(path) -> AnalysisBundle:
    root = Path(path)
    if not root.is_dir():
        raise MissingFile(f"bundle directory not found: {root}")
    manifest = _read_json(root / "manifest.json")
    version = manifest.get("version")
    if version != BUNDLE_VERSION:
        raise VersionMismatch(f"bundle version {version!r}, expected {BUNDLE_VERSION}")

    sections: dict[str, SectionData] = {}
    for sid in manifest.get("section_ids", []):
        sdir = root / "sections" / sid
        clusters = {}
        for algo_file in sorted((sdir / "clusters").glob("*.json")):
            clusters[algo_file.stem] = _read_json(algo_file)
        mapping = {}
        for method_file in sorted((sdir / "mapping").glob("*.json")):
            mapping[method_file.stem] = _read_json(method_file)
        sections[sid] = SectionData(
            model=_read_json(sdir / "model.json"),
            distances=_read_json(sdir / "distances.json"),
            clusters=clusters,
            mapping=mapping,
            terms=_read_json(sdir / "terms.json"),
            summaries=_read_json(sdir / "summaries.json"),
            correlations=_read_json(sdir / "correlations.json"),
        )
    bundle = AnalysisBundle(manifest=manifest, sections=sections)
    bundle.validate()
    return bundle
