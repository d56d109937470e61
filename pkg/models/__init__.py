"""
Modelos de datos de la fusión de creencias
"""
from .errores import (
    EvidenciaError,
    FrameMismatchError,
    InvalidMassError,
    OutOfRangeError,
    EmptyInputError,
    LengthMismatchError,
    DogmaticMassError,
    TotalConflictError,
)
from .frame import Frame, Subset
from .masa import MassFunction, WeightFunction
from .particion import DistanceMatrix, ClusterPartition
from .regla import Regla, parse_regla
from .independencia import (
    FRAME_INDEPENDENCIA,
    Decision,
    Orientacion,
    SimilarityMatrix,
    Matching,
    IndependenceReport,
    MultiSourceReport,
)
from .experimento import ExperimentConfig, ModoExperimento

__all__ = [
    'EvidenciaError', 'FrameMismatchError', 'InvalidMassError', 'OutOfRangeError',
    'EmptyInputError', 'LengthMismatchError', 'DogmaticMassError', 'TotalConflictError',
    'Frame', 'Subset', 'MassFunction', 'WeightFunction', 'DistanceMatrix', 'ClusterPartition',
    'Regla', 'parse_regla', 'FRAME_INDEPENDENCIA', 'Decision', 'Orientacion',
    'SimilarityMatrix', 'Matching', 'IndependenceReport', 'MultiSourceReport',
    'ExperimentConfig', 'ModoExperimento',
]
