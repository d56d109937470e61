"""
Fixtures compartidas de los tests
"""
import sys
from pathlib import Path

# Agregar el directorio raíz al path para importaciones
sys.path.insert(0, str(Path(__file__).parent.parent))

import numpy as np
import pytest

from models.frame import Frame
from models.masa import MassFunction


@pytest.fixture
def abc() -> Frame:
    return Frame(("a", "b", "c"))


@pytest.fixture
def m1(abc) -> MassFunction:
    return MassFunction.from_labels(abc, {"a": 0.3, "c": 0.2, "a|c": 0.2, "*": 0.3})


@pytest.fixture
def m2(abc) -> MassFunction:
    return MassFunction.from_labels(abc, {"a": 0.3, "a|c": 0.4, "*": 0.3})


@pytest.fixture
def m3s(abc):
    return [
        MassFunction.from_labels(abc, {"c": 0.03, "a|c": 0.39, "b|c": 0.3, "*": 0.28}),
        MassFunction.from_labels(abc, {"c": 0.05, "a|c": 0.07, "b|c": 0.47, "*": 0.41}),
        MassFunction.from_labels(abc, {"a|c": 0.04, "b|c": 0.22, "*": 0.74}),
    ]


def masa_aleatoria(rng: np.random.Generator, frame: Frame, max_focales: int = 6,
                   dogmatica: bool = False) -> MassFunction:
    """Masa aleatoria con m(Ω) > 0 salvo que se pida dogmática"""
    omega = frame.omega
    candidatos = np.arange(0, omega)
    cuantos = int(rng.integers(1, min(max_focales, len(candidatos)) + 1))
    focales = [int(b) for b in rng.choice(candidatos, size=cuantos, replace=False)]
    if not dogmatica:
        focales.append(omega)
    valores = rng.dirichlet(np.ones(len(focales)))
    # Evita masas de Ω demasiado pequeñas, que hacen inestable el logaritmo
    valores = 0.9 * valores + 0.1 / len(valores)
    return MassFunction(frame, dict(zip(focales, valores)))


@pytest.fixture
def masa_factory():
    """Fábrica de masas aleatorias no dogmáticas con generador sembrado"""
    return masa_aleatoria
