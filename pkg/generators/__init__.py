"""
Módulo de generación de masas aleatorias y derivación de semillas
"""
from .semillas import derive_seed
from .generador import (
    Decision,
    stick_breaking,
    gen_independent,
    gen_consistent,
    gen_dependent,
    decision_of,
)

__all__ = [
    'derive_seed', 'Decision', 'stick_breaking', 'gen_independent',
    'gen_consistent', 'gen_dependent', 'decision_of',
]
