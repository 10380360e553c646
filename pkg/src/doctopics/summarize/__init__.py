from .embed import BuiltinLexicalProvider, ExternalHttpProvider, embed_sentences
from .extractive import extractive_select
from .llm import LlmClient, StubLlmClient
from .pipeline import DEFAULT_PROMPT, SummaryResult, abstractive_summary, summarize_section
from .sentences import SentenceSet, split_sentences

__all__ = [
    "SentenceSet",
    "split_sentences",
    "BuiltinLexicalProvider",
    "ExternalHttpProvider",
    "embed_sentences",
    "extractive_select",
    "LlmClient",
    "StubLlmClient",
    "DEFAULT_PROMPT",
    "SummaryResult",
    "abstractive_summary",
    "summarize_section",
]
