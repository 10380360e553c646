"""Exception types shared across the pipeline.

Every error raised on a documented contract derives from DocTopicsError so
the CLI can map any pipeline failure to a runtime exit code.
"""


class DocTopicsError(Exception):
    """Base class for all pipeline errors."""


# corpus

class MissingFile(DocTopicsError):
    pass


class SchemaViolation(DocTopicsError):
    pass


class DuplicateDocId(DocTopicsError):
    pass


class NoSectionMatched(DocTopicsError):
    pass


class EmptyVocabulary(DocTopicsError):
    pass


# topics

class EmptyCorpus(DocTopicsError):
    pass


class DegenerateK(DocTopicsError):
    pass


class NegativeInput(DocTopicsError):
    pass


class AllZeroRow(DocTopicsError):
    pass


class LabelCountMismatch(DocTopicsError):
    pass


class FitError(DocTopicsError):
    """Wraps a fit failure inside optimize_model with the failing candidate."""


# analysis

class DimensionMismatch(DocTopicsError):
    pass


class NotADistribution(DocTopicsError):
    pass


class BadK(DocTopicsError):
    pass


class TooFewPoints(DocTopicsError):
    pass


class TooFewGroups(DocTopicsError):
    pass


class GroupTooSmall(DocTopicsError):
    pass


class InsufficientPairs(DocTopicsError):
    pass


class PerplexityTooLarge(DocTopicsError):
    pass


# summarize

class BadN(DocTopicsError):
    pass


class ProviderUnavailable(DocTopicsError):
    pass


class InputTooLarge(DocTopicsError):
    pass


class LlmUnavailable(DocTopicsError):
    pass


# service

class DanglingReference(DocTopicsError):
    pass


class VersionMismatch(DocTopicsError):
    pass
