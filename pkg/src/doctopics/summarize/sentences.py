"""Rule-based sentence splitting with an abbreviation guard."""

from __future__ import annotations

import re
from dataclasses import dataclass

ABBREVIATIONS = frozenset(
    """dr mr mrs ms prof sr jr st no vs etc al fig eq sec ch pp
    e.g i.e cf approx dept est min max vol""".split()
)

_BOUNDARY = re.compile(r"([.!?]+)(\s+)")


@dataclass
class SentenceSet:
    sentences: list[tuple[int, str]]   # (index, text), indices dense from 0
    doc_id: str = ""
    section_id: str = ""

    def __len__(self) -> int:
        return len(self.sentences)

    def texts(self) -> list[str]:
        return [t for _, t in self.sentences]


def _is_abbreviation(prefix: str) -> bool:
    """True when the text before a period ends in a guarded abbreviation."""
    m = re.search(r"([A-Za-z][A-Za-z.]*)$", prefix)
    if not m:
        return False
    word = m.group(1).lower().rstrip(".")
    if word in ABBREVIATIONS or word.replace(".", "") in {"eg", "ie"}:
        return True
    return len(word) == 1  # single initials like "J."


def split_sentences(text: str, doc_id: str = "", section_id: str = "") -> SentenceSet:
    """Split on terminal punctuation followed by whitespace, guarding
    abbreviations; deterministic; empty input yields an empty set."""
    sentences: list[str] = []
    start = 0
    for m in _BOUNDARY.finditer(text):
        end = m.end(1)
        if m.group(1) == "." and _is_abbreviation(text[start : m.start(1)]):
            continue
        chunk = text[start:end].strip()
        if chunk:
            sentences.append(chunk)
        start = m.end()
    tail = text[start:].strip()
    if tail:
        sentences.append(tail)
    return SentenceSet(
        sentences=list(enumerate(sentences)), doc_id=doc_id, section_id=section_id
    )
