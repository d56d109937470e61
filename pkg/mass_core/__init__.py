"""
Módulo de funciones de masa y sus transformaciones
"""
from models.masa import MassFunction, WeightFunction
from .transformaciones import (
    check_frames,
    vacuous,
    categorical,
    simple_support,
    focal_elements,
    core,
    conflict,
    is_dogmatic,
    is_consistent,
    belief,
    plausibility,
    commonality,
    commonality_vector,
    from_commonality,
    pignistic,
    discount,
    dempster_normalize,
    prediscount,
)
from .descomposicion import canonical_decompose, recompose, recompose_log, log_weights

__all__ = [
    'MassFunction', 'WeightFunction', 'check_frames', 'vacuous', 'categorical', 'simple_support',
    'focal_elements', 'core', 'conflict', 'is_dogmatic', 'is_consistent',
    'belief', 'plausibility', 'commonality', 'commonality_vector', 'from_commonality',
    'pignistic', 'discount', 'dempster_normalize', 'prediscount',
    'canonical_decompose', 'recompose', 'recompose_log', 'log_weights',
]
