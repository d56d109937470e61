"""
Generadores aleatorios de funciones de masa para simular fuentes independientes y dependientes
"""
from typing import List, Sequence, Tuple

import numpy as np

from frame_powerset.subconjuntos import supersets
from mass_core.transformaciones import pignistic
from models.errores import EvidenciaError, LengthMismatchError
from models.frame import Frame, Subset
from models.masa import MassFunction, SubsetLike, resolver_bits


# Una decisión es un subconjunto no vacío de Ω (un singleton en el caso pignístico)
Decision = Subset


def stick_breaking(rng: np.random.Generator, piezas: int) -> np.ndarray:
    """
    Divide [0, 1] en piezas contiguas con puntos de corte uniformes ordenados

    Args:
        rng: Generador de numpy
        piezas: Número de subintervalos (≥ 1)

    Returns:
        Longitudes de los subintervalos, que suman 1
    """
    cortes = np.sort(rng.random(piezas - 1))
    return np.diff(np.concatenate(([0.0], cortes, [1.0])))


def _masa_sobre(frame: Frame, rng: np.random.Generator, elegibles: Sequence[int]) -> MassFunction:
    """Masa con |F| uniforme en [1, |elegibles|], focales sin reemplazo y masas por stick-breaking"""
    cuantos = int(rng.integers(1, len(elegibles), endpoint=True))
    focales = rng.choice(np.asarray(elegibles), size=cuantos, replace=False)
    longitudes = stick_breaking(rng, cuantos)
    return MassFunction(frame, {int(b): float(v) for b, v in zip(focales, longitudes)})


def _comprobar_n(n: int) -> None:
    if n < 1:
        raise EvidenciaError(f"Se necesita al menos una masa (n={n})")


def gen_independent(frame: Frame, n: int, seed: int) -> List[MassFunction]:
    """
    Masas de una fuente independiente

    Los focales se eligen entre los subconjuntos no vacíos de Ω.

    Args:
        frame: Marco de discernimiento
        n: Número de masas
        seed: Semilla

    Returns:
        Lista de n masas
    """
    _comprobar_n(n)
    rng = np.random.default_rng(seed)
    elegibles = list(range(1, frame.n_subsets))
    return [_masa_sobre(frame, rng, elegibles) for _ in range(n)]


def gen_consistent(frame: Frame, n: int, seed: int) -> Tuple[List[MassFunction], List[Decision]]:
    """
    Masas consistentes: todos los focales contienen un ancla aleatoria no vacía

    Args:
        frame: Marco de discernimiento
        n: Número de masas
        seed: Semilla

    Returns:
        Tupla (masas, anclas); las anclas sirven de decisiones para gen_dependent
    """
    _comprobar_n(n)
    rng = np.random.default_rng(seed)
    masas, anclas = [], []
    for _ in range(n):
        ancla = int(rng.integers(1, frame.n_subsets))
        masas.append(_masa_sobre(frame, rng, supersets(frame, ancla)))
        anclas.append(Subset(frame, ancla))
    return masas, anclas


def gen_dependent(frame: Frame, n: int, decisions: Sequence[SubsetLike], seed: int) -> List[MassFunction]:
    """
    Masas de una fuente que conoce las decisiones de otra

    Args:
        frame: Marco de discernimiento
        n: Número de masas
        decisions: Una decisión no vacía por masa
        seed: Semilla

    Returns:
        Lista de n masas cuyos focales contienen la decisión correspondiente
    """
    _comprobar_n(n)
    if len(decisions) != n:
        raise LengthMismatchError(f"Se esperaban {n} decisiones y hay {len(decisions)}")
    rng = np.random.default_rng(seed)
    masas = []
    for indice, decision in enumerate(decisions):
        bits = resolver_bits(frame, decision)
        if bits == 0:
            raise EvidenciaError(f"La decisión #{indice + 1} es el conjunto vacío")
        masas.append(_masa_sobre(frame, rng, supersets(frame, bits)))
    return masas


def decision_of(m: MassFunction) -> Decision:
    """
    Decisión pignística: el singleton de mayor BetP (empates por orden del marco)

    Args:
        m: Masa con m(∅) < 1

    Returns:
        Singleton elegido
    """
    probabilidades = pignistic(m)
    etiqueta = max(m.frame.labels, key=lambda label: probabilidades[label])
    return m.frame.singleton(etiqueta)
