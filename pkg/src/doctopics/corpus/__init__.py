from .manifest import CorpusManifest, DocumentEntry, SectionSpec, load_manifest
from .preprocess import PreprocessOptions, preprocess, stem
from .sections import Section, split_sections
from .stopwords import ENGLISH_STOPWORDS
from .vocabulary import BowMatrix, Vocabulary, build_bow_matrix, build_vocabulary, to_bow

__all__ = [
    "CorpusManifest",
    "DocumentEntry",
    "SectionSpec",
    "load_manifest",
    "PreprocessOptions",
    "preprocess",
    "stem",
    "Section",
    "split_sections",
    "ENGLISH_STOPWORDS",
    "Vocabulary",
    "BowMatrix",
    "build_vocabulary",
    "build_bow_matrix",
    "to_bow",
]
