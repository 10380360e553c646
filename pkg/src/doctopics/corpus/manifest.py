"""Corpus manifest: the entry point contract for ingestion.

Manifest JSON schema (version 1):

    {
      "version": 1,
      "language": "en",
      "stopwords_extra": ["foo", ...],
      "structure": {"sections": [{"id": "S1", "header_pattern": "^1\\\\."}, ...]}
                   or {"offsets": {"DOC": [{"id": "S1", "start": 0}, ...]}},
      "documents": [
        {"doc_id": "AT", "entity_id": "AT", "text": "texts/at.txt",
         "covariates": {"gdp": 4.2, "pop": null}},
        ...
      ]
    }

`text` paths are resolved relative to the manifest file. Covariate keys
must be identical across documents; a missing value is an explicit null.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from pathlib import Path

from ..errors import DuplicateDocId, MissingFile, SchemaViolation

MANIFEST_VERSION = 1


@dataclass(frozen=True)
class SectionSpec:
    # header-pattern mode: ordered (section_id, regex source) pairs
    sections: tuple[tuple[str, str], ...] = ()
    # offset mode: doc_id -> ordered (section_id, start) pairs
    offsets: dict[str, list[tuple[str, int]]] | None = None

    def compiled_sections(self):
        return [(sid, re.compile(pat, re.MULTILINE)) for sid, pat in self.sections]

    def section_ids(self) -> list[str]:
        if self.offsets is not None:
            seen: list[str] = []
            for table in self.offsets.values():
                for sid, _ in table:
                    if sid not in seen:
                        seen.append(sid)
            return seen
        return [sid for sid, _ in self.sections]


@dataclass(frozen=True)
class DocumentEntry:
    doc_id: str
    entity_id: str
    text_path: Path
    covariates: dict[str, float | None] = field(default_factory=dict)


@dataclass(frozen=True)
class CorpusManifest:
    documents: tuple[DocumentEntry, ...]
    structure: SectionSpec
    language: str = "en"
    stopwords_extra: tuple[str, ...] = ()

    @property
    def doc_ids(self) -> list[str]:
        return [d.doc_id for d in self.documents]

    @property
    def covariate_names(self) -> list[str]:
        return sorted(self.documents[0].covariates) if self.documents else []


def _require(obj: dict, key: str, where: str):
    if key not in obj:
        raise SchemaViolation(f"missing field {key!r} in {where}")
    return obj[key]


def _parse_structure(raw: dict) -> SectionSpec:
    if "sections" in raw:
        entries = []
        seen = set()
        for i, sec in enumerate(raw["sections"]):
            sid = _require(sec, "id", f"structure.sections[{i}]")
            pattern = _require(sec, "header_pattern", f"structure.sections[{i}]")
            if sid in seen:
                raise SchemaViolation(f"duplicate section id {sid!r} in structure.sections")
            seen.add(sid)
            try:
                re.compile(pattern)
            except re.error as exc:
                raise SchemaViolation(
                    f"structure.sections[{i}].header_pattern does not compile: {exc}"
                ) from exc
            entries.append((sid, pattern))
        return SectionSpec(sections=tuple(entries))
    if "offsets" in raw:
        offsets: dict[str, list[tuple[str, int]]] = {}
        for doc_id, table in raw["offsets"].items():
            parsed = []
            prev = -1
            for i, entry in enumerate(table):
                sid = _require(entry, "id", f"structure.offsets[{doc_id}][{i}]")
                start = _require(entry, "start", f"structure.offsets[{doc_id}][{i}]")
                if not isinstance(start, int) or start <= prev:
                    raise SchemaViolation(
                        f"structure.offsets[{doc_id}] starts must be strictly increasing integers"
                    )
                prev = start
                parsed.append((sid, start))
            offsets[doc_id] = parsed
        return SectionSpec(offsets=offsets)
    raise SchemaViolation("structure must define either 'sections' or 'offsets'")


def load_manifest(path) -> CorpusManifest:
    """Load and validate a corpus manifest file."""
    path = Path(path)
    if not path.is_file():
        raise MissingFile(f"manifest file not found: {path}")
    try:
        raw = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise SchemaViolation(f"manifest is not valid JSON: {exc}") from exc
    if not isinstance(raw, dict):
        raise SchemaViolation("manifest root must be a JSON object")

    version = _require(raw, "version", "manifest")
    if version != MANIFEST_VERSION:
        raise SchemaViolation(f"unsupported manifest version {version!r} (expected {MANIFEST_VERSION})")

    structure = _parse_structure(_require(raw, "structure", "manifest"))
    language = raw.get("language", "en")
    stopwords_extra = tuple(raw.get("stopwords_extra", ()))

    docs_raw = _require(raw, "documents", "manifest")
    if not isinstance(docs_raw, list) or not docs_raw:
        raise SchemaViolation("manifest.documents must be a non-empty list")

    base = path.parent
    documents: list[DocumentEntry] = []
    seen_ids: set[str] = set()
    covariate_keys: set[str] | None = None
    for i, doc in enumerate(docs_raw):
        doc_id = _require(doc, "doc_id", f"documents[{i}]")
        if not doc_id:
            raise SchemaViolation(f"documents[{i}].doc_id is empty")
        if doc_id in seen_ids:
            raise DuplicateDocId(f"duplicate doc_id {doc_id!r}")
        seen_ids.add(doc_id)
        entity_id = doc.get("entity_id", doc_id)
        text_rel = _require(doc, "text", f"documents[{i}]")
        text_path = (base / text_rel).resolve()
        if not text_path.is_file():
            raise MissingFile(f"document {doc_id!r} text file not found: {text_path}")
        covs = doc.get("covariates", {})
        for key, value in covs.items():
            if value is not None and not isinstance(value, (int, float)):
                raise SchemaViolation(f"documents[{i}].covariates[{key!r}] must be a number or null")
            if isinstance(value, float) and (value != value or value in (float("inf"), float("-inf"))):
                raise SchemaViolation(f"documents[{i}].covariates[{key!r}] must be finite")
        keys = set(covs)
        if covariate_keys is None:
            covariate_keys = keys
        elif keys != covariate_keys:
            diff = keys.symmetric_difference(covariate_keys)
            raise SchemaViolation(
                f"documents[{i}].covariates keys differ from earlier documents "
                f"(offending: {sorted(diff)}); use explicit null for missing values"
            )
        documents.append(
            DocumentEntry(doc_id=doc_id, entity_id=entity_id, text_path=text_path, covariates=dict(covs))
        )

    return CorpusManifest(
        documents=tuple(documents),
        structure=structure,
        language=language,
        stopwords_extra=stopwords_extra,
    )
