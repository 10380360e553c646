"""Topic labeling: manual lists or a chat-completion client."""

from __future__ import annotations

from ..errors import LabelCountMismatch
from .model import TopicModel

LABEL_PROMPT = (
    "Give a concise label (at most three words) for a topic whose most "
    "important words are: {words}."
)


def label_topics(model: TopicModel, labels: list[str] | None = None, client=None) -> TopicModel:
    """Attach labels, either verbatim (manual) or via the LLM client.

    The client contract is ``complete(prompt) -> str``; clients exposing
    ``offline = True`` (the stub) short-circuit to the deterministic
    "topic-{k}: w1/w2" form so CI never depends on a provider.
    """
    if labels is not None:
        if len(labels) != model.K:
            raise LabelCountMismatch(f"got {len(labels)} labels for {model.K} topics")
        return model.with_labels(list(labels))
    if client is None:
        raise ValueError("either labels or an LLM client is required")

    out = []
    for k in range(model.K):
        words = model.top_terms(k, top_n=10)
        if getattr(client, "offline", False):
            head = "/".join(words[:2]) if words else "empty"
            out.append(f"topic-{k}: {head}")
        else:
            prompt = LABEL_PROMPT.format(words=", ".join(words))
            out.append(client.complete(prompt).strip())
    return model.with_labels(out)
