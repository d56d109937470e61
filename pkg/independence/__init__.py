"""
Módulo de estimación de independencia entre fuentes
"""
from models.independencia import (
    FRAME_INDEPENDENCIA,
    Decision,
    IndependenceReport,
    Matching,
    MultiSourceReport,
    Orientacion,
    SimilarityMatrix,
)
from .emparejamiento import similarity_matrices, match_clusters
from .masas import (
    reliability_factor,
    cluster_independence_mass,
    source_independence_mass,
    independence_degree,
)
from .estimador import (
    EstimadorIndependencia,
    independence_from_partitions,
    pairwise_independence,
    multi_source_report,
    multi_source_independence,
)

__all__ = [
    'FRAME_INDEPENDENCIA', 'Decision', 'IndependenceReport', 'Matching', 'MultiSourceReport',
    'Orientacion', 'SimilarityMatrix', 'similarity_matrices', 'match_clusters',
    'reliability_factor', 'cluster_independence_mass', 'source_independence_mass',
    'independence_degree', 'EstimadorIndependencia', 'independence_from_partitions',
    'pairwise_independence', 'multi_source_report', 'multi_source_independence',
]
