"""
Modelos de datos para matrices de distancias y particiones en clústeres
"""
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from models.errores import EvidenciaError


def _solo_lectura(valores) -> np.ndarray:
    matriz = np.array(valores, dtype=float, copy=True)
    matriz.setflags(write=False)
    return matriz


@dataclass(frozen=True, eq=False)
class DistanceMatrix:
    """Matriz simétrica n×n de distancias en [0, 1] con diagonal nula"""
    values: np.ndarray

    def __post_init__(self):
        matriz = _solo_lectura(self.values)
        if matriz.ndim != 2 or matriz.shape[0] != matriz.shape[1]:
            raise EvidenciaError(f"La matriz de distancias debe ser cuadrada, forma {matriz.shape}")
        if not np.allclose(matriz, matriz.T, atol=1e-12):
            raise EvidenciaError("La matriz de distancias no es simétrica")
        if np.any(np.diag(matriz) != 0.0):
            raise EvidenciaError("La diagonal de la matriz de distancias debe ser nula")
        object.__setattr__(self, 'values', matriz)

    @property
    def n(self) -> int:
        return self.values.shape[0]

    def __getitem__(self, indices: Tuple[int, int]) -> float:
        return float(self.values[indices])

    def to_rows(self) -> List[List[float]]:
        """Filas para exportar a CSV (orden de fila, cabecera = ids de objeto)"""
        return self.values.tolist()


@dataclass(frozen=True, eq=False)
class ClusterPartition:
    """Asignación de n objetos a K clústeres"""
    assignment: Tuple[int, ...]
    K: int
    iteraciones: int = 0
    convergida: bool = True
    distances: Optional[DistanceMatrix] = field(default=None, repr=False)

    def __post_init__(self):
        asignacion = tuple(int(c) for c in self.assignment)
        object.__setattr__(self, 'assignment', asignacion)
        if self.K < 1:
            raise EvidenciaError("K debe ser al menos 1")
        if any(c < 0 or c >= self.K for c in asignacion):
            raise EvidenciaError(f"Identificador de clúster fuera de [0, {self.K})")

    @property
    def n(self) -> int:
        return len(self.assignment)

    @property
    def sizes(self) -> List[int]:
        """Número de objetos n_k de cada clúster"""
        tamanos = [0] * self.K
        for c in self.assignment:
            tamanos[c] += 1
        return tamanos

    def members(self, k: int) -> List[int]:
        """Objetos del clúster k en orden de id"""
        return [i for i, c in enumerate(self.assignment) if c == k]

    def clusters(self) -> List[List[int]]:
        return [self.members(k) for k in range(self.K)]

    def to_rows(self) -> List[Tuple[int, int]]:
        """Pares (objeto, clúster) para CSV"""
        return list(enumerate(self.assignment))

    def to_dict(self) -> Dict:
        return {
            "K": self.K,
            "assignment": list(self.assignment),
            "sizes": self.sizes,
            "iterations": self.iteraciones,
            "converged": self.convergida,
        }

    @classmethod
    def from_clusters(cls, clusters: Sequence[Sequence[int]], n: int = None) -> 'ClusterPartition':
        """Crea una partición desde listas de miembros por clúster"""
        n = n if n is not None else sum(len(c) for c in clusters)
        asignacion = [-1] * n
        for k, miembros in enumerate(clusters):
            for i in miembros:
                if asignacion[i] != -1:
                    raise EvidenciaError(f"El objeto {i} aparece en dos clústeres")
                asignacion[i] = k
        if -1 in asignacion:
            raise EvidenciaError("Hay objetos sin clúster")
        return cls(tuple(asignacion), len(clusters))
