"""Hybrid summarization: extractive reduction, then an abstractive pass."""

from __future__ import annotations

from dataclasses import dataclass

from ..corpus.sections import Section
from ..errors import InputTooLarge
from .embed import embed_sentences
from .extractive import extractive_select
from .sentences import SentenceSet, split_sentences

DEFAULT_PROMPT = "Summarize the text above in three sentences"
DEFAULT_BUDGET_WORDS = 3000
# rough words->tokens factor documented for sizing provider context windows
WORDS_TO_TOKENS = 1.3
EXTRACT_RATIO = 0.2
EXTRACT_MIN = 3


@dataclass
class SummaryResult:
    doc_id: str
    section_id: str
    summary: str
    path: str                      # "direct" | "extractive"
    selected_indices: list[int]    # extractive picks (all indices on direct path)
    selected_sentences: list[str]


def word_count(text: str) -> int:
    return len(text.split())


def abstractive_summary(client, text: str, prompt: str = DEFAULT_PROMPT,
                        budget: int = DEFAULT_BUDGET_WORDS) -> str:
    """Send text + prompt at temperature 0; guard the word budget strictly."""
    words = word_count(text)
    if words > budget:
        raise InputTooLarge(f"input is {words} words, budget is {budget}")
    completion = client.complete(f"{text}\n\n{prompt}")
    return completion.strip()


def summarize_section(
    section: Section,
    client,
    provider,
    budget: int = DEFAULT_BUDGET_WORDS,
    prompt: str = DEFAULT_PROMPT,
) -> SummaryResult:
    """Summarize one section, reducing through extractive selection when the
    text exceeds the abstractive input budget.

    The reduction starts from ratio*count sentences (min 3) and steps down
    until the selected text fits, so the abstractive call never sees more
    than ``budget`` words.
    """
    text = section.body.strip()
    sentences = split_sentences(text, doc_id=section.doc_id, section_id=section.section_id)

    if word_count(text) <= budget:
        summary = abstractive_summary(client, text, prompt=prompt, budget=budget)
        return SummaryResult(
            doc_id=section.doc_id,
            section_id=section.section_id,
            summary=summary,
            path="direct",
            selected_indices=[i for i, _ in sentences.sentences],
            selected_sentences=sentences.texts(),
        )

    vectors = embed_sentences(sentences, provider)
    total = len(sentences)
    n = min(total, max(EXTRACT_MIN, round(EXTRACT_RATIO * total)))
    chosen: list[int] = []
    reduced = ""
    while n >= 1:
        chosen = extractive_select(vectors, n)
        reduced = " ".join(sentences.sentences[i][1] for i in chosen)
        if word_count(reduced) <= budget:
            break
        n -= 1
    if n == 0:
        # even one sentence is over budget: hard-truncate the first pick
        first = sentences.sentences[0][1].split()[:budget]
        chosen, reduced = [0], " ".join(first)

    summary = abstractive_summary(client, reduced, prompt=prompt, budget=budget)
    return SummaryResult(
        doc_id=section.doc_id,
        section_id=section.section_id,
        summary=summary,
        path="extractive",
        selected_indices=chosen,
        selected_sentences=[sentences.sentences[i][1] for i in chosen],
    )
