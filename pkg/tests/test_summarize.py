import re

import numpy as np
import pytest

from doctopics.corpus.sections import Section
from doctopics.errors import BadN, DimensionMismatch, InputTooLarge, LlmUnavailable
from doctopics.summarize import (
    BuiltinLexicalProvider,
    StubLlmClient,
    abstractive_summary,
    extractive_select,
    split_sentences,
    summarize_section,
)
from doctopics.summarize.llm import LlmClient
from doctopics.summarize.pipeline import DEFAULT_PROMPT


class TestSplitSentences:
    def test_three_sentences(self):
        s = split_sentences("A plan. A goal. Done.")
        assert s.texts() == ["A plan.", "A goal.", "Done."]
        assert [i for i, _ in s.sentences] == [0, 1, 2]

    def test_abbreviation_guard(self):
        s = split_sentences("Dr. Smith approved. It passed.")
        assert s.texts() == ["Dr. Smith approved.", "It passed."]

    def test_more_abbreviations(self):
        s = split_sentences("See Fig. 3 for details. The e.g. case holds.")
        assert len(s) == 2

    def test_empty(self):
        assert split_sentences("").texts() == []

    def test_concatenation_modulo_whitespace(self):
        text = "First point.  Second point!\nThird?"
        s = split_sentences(text)
        joined = re.sub(r"\s+", " ", " ".join(s.texts()))
        assert joined == re.sub(r"\s+", " ", text).strip()


class TestBuiltinProvider:
    def test_identical_sentences_cosine_one(self):
        s = split_sentences("Solar power grows. Solar power grows.")
        X = BuiltinLexicalProvider().embed(s)
        cos = X[0] @ X[1]
        assert cos == pytest.approx(1.0, abs=1e-12)

    def test_disjoint_vocabulary_cosine_zero(self):
        s = split_sentences("Solar panels shine. Railway transit expands.")
        X = BuiltinLexicalProvider().embed(s)
        assert X[0] @ X[1] == pytest.approx(0.0, abs=1e-12)

    def test_unit_norm(self):
        s = split_sentences("Solar wind hydro. Carbon methane smog. Budget deficit debt.")
        X = BuiltinLexicalProvider().embed(s)
        norms = np.linalg.norm(X, axis=1)
        assert np.allclose(norms, 1.0, atol=1e-12)


class StubEmbeddingProvider:
    """External-provider double returning preset vectors."""

    kind = "external_http"

    def __init__(self, vectors, dimension):
        self.vectors = np.asarray(vectors, dtype=np.float64)
        self.dimension = dimension

    def embed(self, sentences):
        X = self.vectors[: len(sentences)]
        if X.shape != (len(sentences), self.dimension):
            raise DimensionMismatch(
                f"provider returned shape {X.shape}, expected ({len(sentences)}, {self.dimension})"
            )
        return X


class TestExternalProviderContract:
    def test_passthrough_with_dimension_check(self):
        s = split_sentences("One. Two.")
        provider = StubEmbeddingProvider([[1.0, 0.0], [0.0, 1.0]], dimension=2)
        X = provider.embed(s)
        assert X.shape == (2, 2)

    def test_dimension_mismatch(self):
        s = split_sentences("One. Two. Three.")
        provider = StubEmbeddingProvider([[1.0, 0.0], [0.0, 1.0]], dimension=2)
        with pytest.raises(DimensionMismatch):
            provider.embed(s)


class TestExtractiveSelect:
    def test_n_equals_count(self):
        X = np.eye(4)
        assert extractive_select(X, 4) == [0, 1, 2, 3]

    def test_two_blobs_one_each(self):
        X = np.array(
            [[0.0, 0.0], [0.05, 0.0], [0.0, 0.05], [5.0, 5.0], [5.05, 5.0], [5.0, 5.05]]
        )
        picked = extractive_select(X, 2)
        assert len(picked) == 2
        assert (picked[0] in (0, 1, 2)) and (picked[1] in (3, 4, 5))

    def test_n_one_nearest_global_centroid(self):
        X = np.array([[0.0], [1.0], [2.0], [9.0]])
        # centroid = 3.0; nearest sentence is index 2
        assert extractive_select(X, 1) == [2]

    def test_subset_in_original_order_with_backfill(self):
        rng = np.random.default_rng(0)
        X = rng.random((7, 3))
        X[3] = X[1]  # duplicate vectors force a backfill
        picked = extractive_select(X, 5)
        assert picked == sorted(set(picked))
        assert len(picked) == 5
        assert all(0 <= i < 7 for i in picked)

    def test_bad_n(self):
        with pytest.raises(BadN):
            extractive_select(np.eye(3), 4)
        with pytest.raises(BadN):
            extractive_select(np.eye(3), 0)


class TestAbstractive:
    def test_stub_returns_first_three_sentences(self):
        client = StubLlmClient()
        text = "One fact. Two facts. Three facts. Four facts. Five facts."
        out = abstractive_summary(client, text)
        assert out == "One fact. Two facts. Three facts."

    def test_prompt_is_appended(self):
        class Recorder:
            offline = True

            def complete(self, prompt):
                self.prompt = prompt
                return "ok"

        rec = Recorder()
        abstractive_summary(rec, "Some text.")
        assert rec.prompt == f"Some text.\n\n{DEFAULT_PROMPT}"
        assert DEFAULT_PROMPT == "Summarize the text above in three sentences"

    def test_input_too_large_names_budget(self):
        client = StubLlmClient()
        text = "word " * 3001
        with pytest.raises(InputTooLarge, match="3000"):
            abstractive_summary(client, text)

    def test_retry_then_success(self):
        client = StubLlmClient(fail_times=2)
        out = client.complete("Alpha. Beta. Gamma.\n\nprompt")
        assert out == "Alpha. Beta. Gamma."
        assert client.retries == 2
        assert client.backoffs == [1.0, 2.0]  # exponential: 1s then 2s

    def test_unavailable_after_retries(self):
        client = StubLlmClient(fail_times=10)
        with pytest.raises(LlmUnavailable):
            client.complete("Alpha.\n\nprompt")

    def test_real_client_backoff_schedule(self):
        sleeps = []

        class FailTransport:
            def __call__(self, *a, **k):
                raise RuntimeError("no network in tests")

        client = LlmClient(
            endpoint="http://invalid.example", model="m",
            transport=None, sleep=sleeps.append, timeout=0.01, max_retries=3,
        )
        with pytest.raises(LlmUnavailable):
            client.complete("hi")
        assert sleeps == [1.0, 2.0, 4.0]


def section_of(text: str) -> Section:
    return Section(doc_id="AT", section_id="s", raw_text=text, body=text)


class BudgetAssertingClient(StubLlmClient):
    """Stub that also enforces the word budget on every single call."""

    def __init__(self, budget):
        super().__init__()
        self.budget = budget

    def complete(self, prompt):
        text = prompt.rsplit("\n\n", 1)[0]
        assert len(text.split()) <= self.budget, "word budget exceeded on the wire"
        return super().complete(prompt)


class TestSummarizeSection:
    def test_short_section_direct_path(self):
        client = BudgetAssertingClient(budget=50)
        res = summarize_section(section_of("Small text. Tiny note."), client,
                                BuiltinLexicalProvider(), budget=50)
        assert res.path == "direct"

    def test_long_section_extractive_path(self):
        sentences = " ".join(
            f"Sentence number {i} talks about solar wind hydro storage grid power plant output." for i in range(40)
        )
        budget = len(sentences.split()) // 2
        client = BudgetAssertingClient(budget=budget)
        res = summarize_section(section_of(sentences), client,
                                BuiltinLexicalProvider(), budget=budget)
        assert res.path == "extractive"
        reduced = " ".join(res.selected_sentences)
        assert len(reduced.split()) <= budget
        assert res.selected_indices == sorted(res.selected_indices)

    def test_deterministic(self):
        text = " ".join(f"Point {i} concerns carbon methane offset warming pollution levels." for i in range(30))
        budget = 60
        args = lambda: (section_of(text), StubLlmClient(), BuiltinLexicalProvider())
        a = summarize_section(*args(), budget=budget)
        b = summarize_section(*args(), budget=budget)
        assert a == b
