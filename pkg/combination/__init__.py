"""
Módulo de reglas de combinación
"""
from models.regla import Regla, parse_regla
from .reglas import (
    check_frames,
    conjunctive,
    conjunctive_dense,
    disjunctive,
    dempster,
    yager,
    dubois_prade,
    mean_rule,
    cautious,
    cautious_n,
)
from .mixta import conjunctive_n, mixed, combine_n

__all__ = [
    'Regla', 'parse_regla', 'check_frames', 'conjunctive', 'conjunctive_dense',
    'disjunctive', 'dempster', 'yager', 'dubois_prade', 'mean_rule', 'cautious',
    'cautious_n', 'conjunctive_n', 'mixed', 'combine_n',
]
