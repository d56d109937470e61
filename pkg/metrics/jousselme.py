"""
Distancia de Jousselme entre funciones de masa y distancias objeto-clúster
"""
import logging
import math
from typing import Collection, Sequence

import numpy as np

from mass_core.transformaciones import check_frames
from config import FUSION_CONFIG
from frame_powerset.subconjuntos import jaccard_bits, jaccard_matrix
from models.errores import EmptyInputError, EvidenciaError
from models.masa import MassFunction
from models.particion import DistanceMatrix

logger = logging.getLogger(__name__)


def _usar_denso(n_hipotesis: int) -> bool:
    return n_hipotesis <= FUSION_CONFIG.get('jousselme_denso_max', 12)


def _distancia_focal(m1: MassFunction, m2: MassFunction) -> float:
    """Forma cuadrática restringida a la unión de los focales (marcos grandes)"""
    focales = sorted(set(m1.masses) | set(m2.masses))
    diferencia = np.array([m1.masses.get(b, 0.0) - m2.masses.get(b, 0.0) for b in focales])
    jaccard = np.array([[jaccard_bits(a, b) for b in focales] for a in focales])
    forma = float(diferencia @ jaccard @ diferencia)
    return math.sqrt(max(0.5 * forma, 0.0))


def jousselme_distance(m1: MassFunction, m2: MassFunction) -> float:
    """
    Distancia de Jousselme: sqrt(½ · vᵀ D v) con v = m1 - m2 en orden canónico

    Args:
        m1: Primera masa
        m2: Segunda masa (mismo marco)

    Returns:
        Distancia en [0, 1]
    """
    check_frames([m1, m2])
    n = m1.frame.size
    if not _usar_denso(n):
        return _distancia_focal(m1, m2)
    diferencia = m1.to_dense() - m2.to_dense()
    forma = float(diferencia @ jaccard_matrix(n) @ diferencia)
    # Residuos negativos de redondeo cuando m1 ≈ m2
    return math.sqrt(max(0.5 * forma, 0.0))


def pairwise_distances(masas: Sequence[MassFunction]) -> DistanceMatrix:
    """
    Matriz de distancias de Jousselme entre todos los pares, calculada una sola vez

    Args:
        masas: Secuencia no vacía sobre el mismo marco

    Returns:
        DistanceMatrix simétrica con diagonal nula
    """
    masas = list(masas)
    check_frames(masas)
    total = len(masas)
    n = masas[0].frame.size
    if _usar_denso(n):
        vectores = np.vstack([m.to_dense() for m in masas])
        gram = vectores @ jaccard_matrix(n) @ vectores.T
        diagonal = np.diag(gram)
        cuadrados = 0.5 * (diagonal[:, None] + diagonal[None, :] - 2.0 * gram)
        distancias = np.sqrt(np.clip(cuadrados, 0.0, None))
    else:
        distancias = np.zeros((total, total))
        for i in range(total):
            for j in range(i + 1, total):
                distancias[i, j] = _distancia_focal(masas[i], masas[j])
    distancias = 0.5 * (distancias + distancias.T)
    np.fill_diagonal(distancias, 0.0)
    logger.debug("Matriz de distancias %dx%d calculada", total, total)
    return DistanceMatrix(distancias)


def object_to_cluster_distance(i: int, cluster: Collection[int], distancias: DistanceMatrix) -> float:
    """
    Distancia media de un objeto a los objetos de un clúster

    Si el objeto pertenece al clúster, su distancia a sí mismo (0) entra en la media.

    Args:
        i: Id del objeto
        cluster: Ids de los objetos del clúster
        distancias: Matriz de distancias precalculada

    Returns:
        (1/|Cl|) · Σ_{q∈Cl} D(i, q)
    """
    miembros = list(cluster)
    if not miembros:
        raise EmptyInputError("La distancia a un clúster vacío no está definida")
    if not (0 <= i < distancias.n) or any(not (0 <= q < distancias.n) for q in miembros):
        raise EvidenciaError(f"Índices fuera de [0, {distancias.n})")
    return float(np.mean(distancias.values[i, miembros]))
