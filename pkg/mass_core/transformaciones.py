"""
Transformaciones de una única función de masa: bel, pl, q, BetP, descuento y soportes simples
"""
import math
from functools import reduce
from typing import Dict, List, Sequence

import numpy as np

from config import get_tolerancia
from frame_powerset.subconjuntos import popcount
from mass_core.mobius import zeta_superconjuntos, mobius_superconjuntos
from models.errores import (
    EmptyInputError,
    EvidenciaError,
    OutOfRangeError,
    TotalConflictError,
    comprobar_rango,
)
from models.frame import Frame, Subset
from models.masa import MassFunction, SubsetLike, resolver_bits


def check_frames(masas: Sequence[MassFunction]) -> None:
    """Comprueba que la secuencia no esté vacía y que todas las masas compartan marco"""
    if not masas:
        raise EmptyInputError("Se necesita al menos una función de masa")
    primero = masas[0].frame
    for m in masas[1:]:
        primero.check_same(m.frame)


# ---------------------------------------------------------------------------
# Constructores básicos
# ---------------------------------------------------------------------------

def vacuous(frame: Frame) -> MassFunction:
    """Masa vacua: ignorancia total, m(Ω) = 1"""
    return MassFunction(frame, {frame.omega: 1.0})


def categorical(frame: Frame, subconjunto: SubsetLike) -> MassFunction:
    """Masa categórica sobre A: m(A) = 1"""
    return MassFunction(frame, {resolver_bits(frame, subconjunto): 1.0})


def simple_support(frame: Frame, subconjunto: SubsetLike, w: float) -> MassFunction:
    """
    Función de soporte simple A^w

    Args:
        frame: Marco de discernimiento
        subconjunto: Foco A ⊂ Ω estricto
        w: Peso sobre Ω, en [0, 1]

    Returns:
        Masa con m(A) = 1 - w y m(Ω) = w
    """
    bits = resolver_bits(frame, subconjunto)
    if bits == frame.omega:
        raise EvidenciaError("El foco de un soporte simple debe ser un subconjunto estricto de Ω")
    w = comprobar_rango("w", w)
    return MassFunction(frame, {bits: 1.0 - w, frame.omega: w})


# ---------------------------------------------------------------------------
# Consultas
# ---------------------------------------------------------------------------

def focal_elements(m: MassFunction) -> List[Subset]:
    """Elementos focales en orden canónico"""
    return [Subset(m.frame, bits) for bits in m.masses]


def core(m: MassFunction) -> Subset:
    """Núcleo: unión de los elementos focales"""
    return Subset(m.frame, reduce(lambda a, b: a | b, m.masses, 0))


def conflict(m: MassFunction) -> float:
    """Masa del conjunto vacío"""
    return m.masses.get(0, 0.0)


def is_dogmatic(m: MassFunction) -> bool:
    """Dogmática ⇔ m(Ω) = 0"""
    return m.masses.get(m.frame.omega, 0.0) <= 0.0


def is_consistent(m: MassFunction) -> bool:
    """Consistente ⇔ todos los elementos focales comparten al menos una hipótesis"""
    return reduce(lambda a, b: a & b, m.masses, m.frame.omega) != 0


# ---------------------------------------------------------------------------
# Funciones derivadas
# ---------------------------------------------------------------------------

def belief(m: MassFunction, subconjunto: SubsetLike) -> float:
    """bel(A) = Σ_{B⊆A, B≠∅} m(B)"""
    a = resolver_bits(m.frame, subconjunto)
    return math.fsum(v for b, v in m.masses.items() if b and b & ~a == 0)


def plausibility(m: MassFunction, subconjunto: SubsetLike) -> float:
    """pl(A) = Σ_{A∩B≠∅} m(B)"""
    a = resolver_bits(m.frame, subconjunto)
    return math.fsum(v for b, v in m.masses.items() if b & a)


def commonality(m: MassFunction, subconjunto: SubsetLike) -> float:
    """q(A) = Σ_{B⊇A} m(B)"""
    a = resolver_bits(m.frame, subconjunto)
    return math.fsum(v for b, v in m.masses.items() if a & ~b == 0)


def commonality_vector(m: MassFunction) -> np.ndarray:
    """Comunalidades de los 2^N subconjuntos en orden canónico"""
    return zeta_superconjuntos(m.to_dense())


def from_commonality(frame: Frame, q: np.ndarray) -> MassFunction:
    """Masa cuya comunalidad es q (inversa de Möbius sobre superconjuntos)"""
    return MassFunction.from_dense(frame, mobius_superconjuntos(q))


def pignistic(m: MassFunction) -> Dict[str, float]:
    """
    Probabilidad pignística sobre los singletons

    Args:
        m: Función de masa con m(∅) < 1

    Returns:
        Diccionario etiqueta -> BetP, en el orden del marco
    """
    vacio = conflict(m)
    if vacio >= 1.0 - get_tolerancia():
        raise TotalConflictError(vacio, "BetP no está definida cuando m(∅) = 1")
    escala = 1.0 - vacio
    probabilidades = [0.0] * m.frame.size
    for bits, valor in m.masses.items():
        if not bits:
            continue
        parte = valor / (popcount(bits) * escala)
        for i in range(m.frame.size):
            if bits >> i & 1:
                probabilidades[i] += parte
    return dict(zip(m.frame.labels, probabilidades))


def discount(m: MassFunction, alpha: float) -> MassFunction:
    """
    Descuento por fiabilidad α: m^α(A) = α·m(A) para A ⊂ Ω, m^α(Ω) = 1 - α·(1 - m(Ω))

    Args:
        m: Función de masa
        alpha: Fiabilidad de la fuente en [0, 1] (1 - α es la tasa de descuento)

    Returns:
        Masa descontada
    """
    alpha = comprobar_rango("alpha", alpha)
    omega = m.frame.omega
    descontadas = {bits: alpha * valor for bits, valor in m.masses.items() if bits != omega}
    descontadas[omega] = 1.0 - alpha * (1.0 - m.masses.get(omega, 0.0))
    return MassFunction(m.frame, descontadas)


def dempster_normalize(m: MassFunction) -> MassFunction:
    """
    Normalización de Dempster: pasa a mundo cerrado repartiendo m(∅)

    Raises:
        TotalConflictError: si m(∅) = 1
    """
    vacio = conflict(m)
    if vacio == 0.0:
        return m
    if vacio >= 1.0 - get_tolerancia():
        raise TotalConflictError(vacio)
    escala = 1.0 - vacio
    return MassFunction(m.frame, {b: v / escala for b, v in m.masses.items() if b})


def prediscount(m: MassFunction, epsilon: float) -> MassFunction:
    """Descuenta con tasa ε sólo si la masa es dogmática"""
    if not is_dogmatic(m):
        return m
    if not (0.0 < epsilon <= 1.0):
        raise OutOfRangeError(f"epsilon={epsilon} fuera de ]0, 1]")
    return discount(m, 1.0 - epsilon)
