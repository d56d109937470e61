"""
Álgebra de subconjuntos sobre el marco de discernimiento
"""
from functools import lru_cache
from typing import List, Union

import numpy as np

from models.frame import Frame, Subset


def popcount(bits: int) -> int:
    """Cardinal de un patrón de bits"""
    return bin(bits).count("1")


def jaccard_index(a: Subset, b: Subset) -> float:
    """
    Índice de Jaccard entre dos subconjuntos

    Vale 1 si A = B = ∅; en otro caso |A∩B| / |A∪B| (0 si sólo uno es vacío).

    Args:
        a: Primer subconjunto
        b: Segundo subconjunto (mismo marco)

    Returns:
        Escalar en [0, 1]
    """
    a.frame.check_same(b.frame)
    return jaccard_bits(a.bits, b.bits)


def jaccard_bits(a: int, b: int) -> float:
    union = a | b
    if union == 0:
        return 1.0
    return popcount(a & b) / popcount(union)


def enumerate_subsets(frame: Frame) -> List[Subset]:
    """Los 2^N subconjuntos en orden canónico (patrón de bits ascendente)"""
    return [Subset(frame, bits) for bits in range(frame.n_subsets)]


def supersets(frame: Frame, ancla: Union[Subset, int]) -> List[int]:
    """
    Patrones de bits de todos los superconjuntos de un subconjunto (incluido él mismo)

    Args:
        frame: Marco de discernimiento
        ancla: Subconjunto de partida

    Returns:
        Lista en orden canónico
    """
    bits = ancla.bits if isinstance(ancla, Subset) else frame.check_bits(ancla)
    libres = frame.omega & ~bits
    # Enumeración de los submáscaras de los bits libres
    resultado = []
    sub = libres
    while True:
        resultado.append(bits | sub)
        if sub == 0:
            break
        sub = (sub - 1) & libres
    return sorted(resultado)


@lru_cache(maxsize=None)
def cardinalidades(n: int) -> np.ndarray:
    """Vector de cardinales |A| para los 2^n subconjuntos en orden canónico"""
    card = np.zeros(1 << n, dtype=np.int64)
    for i in range(n):
        card[1 << i:1 << (i + 1)] = card[:1 << i] + 1
    return card


@lru_cache(maxsize=8)
def jaccard_matrix(n: int) -> np.ndarray:
    """
    Matriz D de Jaccard (2^n × 2^n) en orden canónico, con D(∅, ∅) = 1

    Se construye una vez por tamaño de marco y queda en caché; no debe modificarse.
    """
    indices = np.arange(1 << n)
    card = cardinalidades(n)
    interseccion = card[indices[:, None] & indices[None, :]]
    union = card[indices[:, None] | indices[None, :]]
    matriz = np.divide(interseccion, union, out=np.zeros(union.shape), where=union > 0)
    matriz[0, 0] = 1.0
    matriz.setflags(write=False)
    return matriz
