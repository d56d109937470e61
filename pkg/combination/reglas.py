"""
Reglas de combinación binarias: conjuntiva, disyuntiva, Dempster, Yager, Dubois-Prade, media y prudente
"""
from typing import Callable, Dict, Sequence

import numpy as np

from mass_core.descomposicion import log_weights, recompose_log
from mass_core.transformaciones import (
    check_frames,
    commonality_vector,
    dempster_normalize,
    from_commonality,
    is_dogmatic,
)
from models.errores import DogmaticMassError
from models.masa import MassFunction


def _combinar_pares(m1: MassFunction, m2: MassFunction, destino: Callable[[int, int], int]) -> MassFunction:
    """Recorre los pares de focales y acumula m1(B)·m2(C) en destino(B, C)"""
    check_frames([m1, m2])
    acumuladas: Dict[int, float] = {}
    for b, v1 in m1.masses.items():
        for c, v2 in m2.masses.items():
            a = destino(b, c)
            acumuladas[a] = acumuladas.get(a, 0.0) + v1 * v2
    return MassFunction(m1.frame, acumuladas)


def conjunctive(m1: MassFunction, m2: MassFunction) -> MassFunction:
    """
    Regla conjuntiva (mundo abierto): m(A) = Σ_{B∩C=A} m1(B)·m2(C)

    Puede asignar masa a ∅.
    """
    return _combinar_pares(m1, m2, lambda b, c: b & c)


def conjunctive_dense(m1: MassFunction, m2: MassFunction) -> MassFunction:
    """Regla conjuntiva por producto de comunalidades, q12 = q1·q2"""
    check_frames([m1, m2])
    return from_commonality(m1.frame, commonality_vector(m1) * commonality_vector(m2))


def disjunctive(m1: MassFunction, m2: MassFunction) -> MassFunction:
    """Regla disyuntiva: m(A) = Σ_{B∪C=A} m1(B)·m2(C)"""
    return _combinar_pares(m1, m2, lambda b, c: b | c)


def dempster(m1: MassFunction, m2: MassFunction) -> MassFunction:
    """
    Regla de Dempster: conjuntiva normalizada (mundo cerrado)

    Raises:
        TotalConflictError: si el conflicto combinado es 1
    """
    return dempster_normalize(conjunctive(m1, m2))


def yager(m1: MassFunction, m2: MassFunction) -> MassFunction:
    """Regla de Yager: el conflicto conjuntivo se transfiere a Ω"""
    conjunta = conjunctive(m1, m2)
    vacio = conjunta.masses.get(0, 0.0)
    if vacio == 0.0:
        return conjunta
    omega = conjunta.frame.omega
    masas = {b: v for b, v in conjunta.masses.items() if b}
    masas[omega] = masas.get(omega, 0.0) + vacio
    return MassFunction(conjunta.frame, masas)


def dubois_prade(m1: MassFunction, m2: MassFunction) -> MassFunction:
    """
    Regla de Dubois y Prade: los pares en conflicto (B∩C=∅) van a B∪C

    Si también B∪C=∅ (ambos focales vacíos) el producto va a Ω, como en Yager,
    de modo que el resultado nunca asigna masa a ∅.
    """
    omega = m1.frame.omega
    return _combinar_pares(m1, m2, lambda b, c: (b & c) or (b | c) or omega)


def mean_rule(masas: Sequence[MassFunction]) -> MassFunction:
    """
    Regla de la media: promedio punto a punto de las masas

    Args:
        masas: Secuencia no vacía sobre el mismo marco

    Returns:
        Masa media
    """
    masas = list(masas)
    check_frames(masas)
    acumuladas: Dict[int, float] = {}
    for m in masas:
        for b, v in m.masses.items():
            acumuladas[b] = acumuladas.get(b, 0.0) + v
    total = len(masas)
    return MassFunction(masas[0].frame, {b: v / total for b, v in acumuladas.items()})


def cautious_n(masas: Sequence[MassFunction]) -> MassFunction:
    """
    Regla prudente n-aria: mínimo punto a punto de los pesos canónicos

    Raises:
        DogmaticMassError: si alguna masa es dogmática
    """
    masas = list(masas)
    check_frames(masas)
    for indice, m in enumerate(masas):
        if is_dogmatic(m):
            raise DogmaticMassError(f"La masa #{indice + 1} es dogmática; la regla prudente no está definida")
    minimos = np.minimum.reduce([log_weights(m) for m in masas])
    return recompose_log(masas[0].frame, minimos)


def cautious(m1: MassFunction, m2: MassFunction) -> MassFunction:
    """Regla prudente de dos masas no dogmáticas"""
    return cautious_n([m1, m2])
