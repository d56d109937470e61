"""
Modelos de datos para la estimación de independencia entre fuentes
"""
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Tuple

import numpy as np

from models.errores import EvidenciaError
from models.frame import Frame
from models.masa import MassFunction

# Marco de la independencia: {Dep, Ind}
FRAME_INDEPENDENCIA = Frame(("Dep", "Ind"))
DEP = 0b01
IND = 0b10


class Orientacion(Enum):
    """Fuente hacia la que se normaliza una matriz de similitud"""
    FUENTE_1 = "s1"
    FUENTE_2 = "s2"


class Decision(Enum):
    """Decisión sobre la independencia de dos fuentes"""
    INDEPENDIENTE = "independent"
    DEPENDIENTE = "dependent"

    @classmethod
    def desde_grados(cls, independencia: float, dependencia: float) -> 'Decision':
        """Independientes sólo si I_d > Ī_d"""
        return cls.INDEPENDIENTE if independencia > dependencia else cls.DEPENDIENTE


@dataclass(frozen=True, eq=False)
class SimilarityMatrix:
    """Matriz K×K de proporciones β; cada fila suma 1"""
    values: np.ndarray
    orientacion: Orientacion = Orientacion.FUENTE_1

    def __post_init__(self):
        matriz = np.array(self.values, dtype=float, copy=True)
        if matriz.ndim != 2 or matriz.shape[0] != matriz.shape[1]:
            raise EvidenciaError(f"La matriz de similitud debe ser cuadrada, forma {matriz.shape}")
        matriz.setflags(write=False)
        object.__setattr__(self, 'values', matriz)

    @property
    def K(self) -> int:
        return self.values.shape[0]

    def to_dict(self) -> Dict:
        return {"orientation": self.orientacion.value, "values": self.values.tolist()}


@dataclass(frozen=True)
class Matching:
    """
    Biyección clúster fila -> clúster columna

    betas[k] es la similitud emparejada de la fila k; orden guarda los pares
    (fila, columna) en el orden en que se eligieron.
    """
    pairs: Tuple[int, ...]
    betas: Tuple[float, ...] = ()
    orden: Tuple[Tuple[int, int], ...] = ()

    def __post_init__(self):
        pares = tuple(int(c) for c in self.pairs)
        object.__setattr__(self, 'pairs', pares)
        if sorted(pares) != list(range(len(pares))):
            raise EvidenciaError(f"El emparejamiento {pares} no es una biyección")

    @property
    def K(self) -> int:
        return len(self.pairs)

    def __getitem__(self, k: int) -> int:
        return self.pairs[k]

    def to_dict(self) -> Dict:
        return {
            "pairs": list(self.pairs),
            "selection_order": [list(par) for par in self.orden],
            "betas": list(self.betas),
        }


@dataclass(frozen=True, eq=False)
class IndependenceReport:
    """Resultado completo de la estimación de independencia entre dos fuentes"""
    M1: SimilarityMatrix
    M2: SimilarityMatrix
    matching1: Matching
    matching2: Matching
    cluster_masses_1: List[MassFunction]
    cluster_masses_2: List[MassFunction]
    source_mass_1: MassFunction
    source_mass_2: MassFunction
    id_12: float
    id_bar_12: float
    id_21: float
    id_bar_21: float
    fuentes: Tuple[int, int] = (0, 1)
    reliabilities_1: List[float] = field(default_factory=list)
    reliabilities_2: List[float] = field(default_factory=list)

    @property
    def I(self) -> float:
        """Independencia global: mínimo de los dos grados dirigidos"""
        return min(self.id_12, self.id_21)

    @property
    def decision_12(self) -> Decision:
        return Decision.desde_grados(self.id_12, self.id_bar_12)

    @property
    def decision_21(self) -> Decision:
        return Decision.desde_grados(self.id_21, self.id_bar_21)

    @property
    def decision(self) -> Decision:
        """Dependientes si al menos una de las dos fuentes depende de la otra"""
        return Decision.desde_grados(self.I, 1.0 - self.I)

    def to_dict(self) -> Dict:
        """Convierte el informe a diccionario JSON"""
        s1, s2 = (f"s{i + 1}" for i in self.fuentes)
        return {
            "sources": [s1, s2],
            "M1": self.M1.to_dict(),
            "M2": self.M2.to_dict(),
            "matching1": self.matching1.to_dict(),
            "matching2": self.matching2.to_dict(),
            "reliabilities1": list(self.reliabilities_1),
            "reliabilities2": list(self.reliabilities_2),
            "cluster_masses1": [m.to_dict()["masses"] for m in self.cluster_masses_1],
            "cluster_masses2": [m.to_dict()["masses"] for m in self.cluster_masses_2],
            "source_mass1": self.source_mass_1.to_dict()["masses"],
            "source_mass2": self.source_mass_2.to_dict()["masses"],
            f"I_d({s1},{s2})": self.id_12,
            f"I_d_bar({s1},{s2})": self.id_bar_12,
            f"I_d({s2},{s1})": self.id_21,
            f"I_d_bar({s2},{s1})": self.id_bar_21,
            f"I({s1},{s2})": self.I,
            "decision": self.decision.value,
        }


@dataclass(frozen=True, eq=False)
class MultiSourceReport:
    """Informes por pares (i < j) y la independencia global γ como máximo de los pares"""
    reports: List[IndependenceReport]
    n_sources: int

    @property
    def gamma(self) -> float:
        return max(r.I for r in self.reports)

    def pair(self, i: int, j: int) -> Optional[IndependenceReport]:
        for informe in self.reports:
            if informe.fuentes == (i, j):
                return informe
        return None

    def to_dict(self) -> Dict:
        return {
            "n_sources": self.n_sources,
            "pairs": [r.to_dict() for r in self.reports],
            "gamma": self.gamma,
            "decision": Decision.desde_grados(self.gamma, 1.0 - self.gamma).value,
        }
