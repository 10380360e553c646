from .agglomerative import agglomerative
from .clusters import ClusterResult
from .correlate import correlation_matrix
from .divergence import DistanceMatrix, distance_matrix, hellinger, jensen_shannon, kl_divergence
from .hdbscan_ import hdbscan
from .kmeans import kmeans
from .manova import ManovaReport, manova
from .mds import classical_mds
from .terms import TermRanking, relevance, saliency
from .tsne import Embedding2D, tsne

__all__ = [
    "hellinger",
    "jensen_shannon",
    "kl_divergence",
    "DistanceMatrix",
    "distance_matrix",
    "ClusterResult",
    "agglomerative",
    "kmeans",
    "hdbscan",
    "ManovaReport",
    "manova",
    "TermRanking",
    "relevance",
    "saliency",
    "correlation_matrix",
    "classical_mds",
    "Embedding2D",
    "tsne",
]
