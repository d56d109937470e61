"""
Módulo del marco de discernimiento y el álgebra de subconjuntos
"""
from models.frame import Frame, Subset
from .subconjuntos import (
    jaccard_index,
    jaccard_bits,
    enumerate_subsets,
    supersets,
    popcount,
    cardinalidades,
    jaccard_matrix,
)

__all__ = [
    'Frame', 'Subset', 'jaccard_index', 'jaccard_bits', 'enumerate_subsets',
    'supersets', 'popcount', 'cardinalidades', 'jaccard_matrix',
]
