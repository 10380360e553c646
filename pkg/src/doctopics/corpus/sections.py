"""Split raw document text into labeled sections.

A SectionSpec either lists header regexes (sections run from one header to
the next) or gives explicit per-document start offsets. Splitting is
lossless: preamble + all raw_texts reassemble the input byte-for-byte.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..errors import NoSectionMatched


@dataclass
class Section:
    doc_id: str
    section_id: str
    raw_text: str          # full slice, header line included
    body: str = ""         # text after the header line
    tokens: list[str] = field(default_factory=list)


def split_sections(document_text: str, spec, doc_id: str = "") -> list[Section]:
    """Cut a document into sections per the spec, in spec order.

    Returns only the sections whose headers were found; a document missing
    a header simply lacks that section. Raises NoSectionMatched when no
    header matches at all (almost always a wrong spec).
    """
    if spec.offsets is not None:
        return _split_by_offsets(document_text, spec, doc_id)

    found: list[tuple[int, int, str]] = []  # (start, header_end, section_id)
    pos = 0
    for section_id, pattern in spec.compiled_sections():
        m = pattern.search(document_text, pos)
        if m is None:
            continue
        found.append((m.start(), m.end(), section_id))
        pos = m.start() + 1

    if not found:
        raise NoSectionMatched(
            f"no section header matched in document {doc_id!r}; check the structure spec"
        )

    sections = []
    for i, (start, header_end, section_id) in enumerate(found):
        end = found[i + 1][0] if i + 1 < len(found) else len(document_text)
        raw = document_text[start:end]
        # body starts after the header's line
        newline = document_text.find("\n", header_end)
        body_start = newline + 1 if newline != -1 and newline < end else header_end
        sections.append(
            Section(
                doc_id=doc_id,
                section_id=section_id,
                raw_text=raw,
                body=document_text[body_start:end],
            )
        )
    return sections


def _split_by_offsets(text: str, spec, doc_id: str) -> list[Section]:
    table = spec.offsets.get(doc_id)
    if not table:
        raise NoSectionMatched(f"no offset entries for document {doc_id!r}")
    sections = []
    for i, (section_id, start) in enumerate(table):
        end = table[i + 1][1] if i + 1 < len(table) else len(text)
        raw = text[start:end]
        sections.append(Section(doc_id=doc_id, section_id=section_id, raw_text=raw, body=raw))
    return sections


def preamble(document_text: str, sections: list[Section]) -> str:
    """Text before the first section header (empty when a header opens the doc)."""
    if not sections:
        return document_text
    body_len = sum(len(s.raw_text) for s in sections)
    return document_text[: len(document_text) - body_len]
