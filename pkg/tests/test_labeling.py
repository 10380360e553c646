import numpy as np
import pytest

from doctopics.errors import LabelCountMismatch
from doctopics.topics import LABEL_PROMPT, label_topics
from doctopics.topics.model import TopicModel


def toy_model():
    phi = np.array([[0.6, 0.3, 0.1], [0.1, 0.2, 0.7]])
    theta = np.array([[0.5, 0.5], [0.2, 0.8]])
    return TopicModel(
        method="LDA", K=2, phi=phi, theta=theta,
        vocab_tokens=("energy", "grid", "transport"),
        doc_ids=["A", "B"], doc_lengths=np.array([10, 10]), seed=0,
    )


class RecordingClient:
    offline = False

    def __init__(self):
        self.prompts = []

    def complete(self, prompt):
        self.prompts.append(prompt)
        return f"label {len(self.prompts)} "


class OfflineStub:
    offline = True

    def complete(self, prompt):  # pragma: no cover - never called in stub mode
        raise AssertionError("stub labeling must not hit the client")


def test_manual_labels_verbatim():
    model = label_topics(toy_model(), labels=["energy", "transport"])
    assert model.topic_labels == ["energy", "transport"]


def test_manual_count_mismatch():
    with pytest.raises(LabelCountMismatch):
        label_topics(toy_model(), labels=["only-one"])


def test_llm_mode_sends_top_words_prompt():
    client = RecordingClient()
    model = label_topics(toy_model(), client=client)
    assert model.topic_labels == ["label 1", "label 2"]  # trimmed
    assert client.prompts[0] == LABEL_PROMPT.format(words="energy, grid, transport")
    assert "concise label" in client.prompts[0]


def test_stub_mode_deterministic_labels():
    model = label_topics(toy_model(), client=OfflineStub())
    assert model.topic_labels == ["topic-0: energy/grid", "topic-1: transport/grid"]


def test_requires_labels_or_client():
    with pytest.raises(ValueError):
        label_topics(toy_model())
