from .coherence import coherence
from .labeling import LABEL_PROMPT, label_topics
from .lda import GIBBS_BACKEND, lda_fit
from .model import FitConfig, TopicModel, load_model, save_model
from .nmf import nmf_fit, tfidf_matrix
from .optimize import optimize_model

__all__ = [
    "TopicModel",
    "FitConfig",
    "save_model",
    "load_model",
    "lda_fit",
    "GIBBS_BACKEND",
    "nmf_fit",
    "tfidf_matrix",
    "coherence",
    "optimize_model",
    "label_topics",
    "LABEL_PROMPT",
]
