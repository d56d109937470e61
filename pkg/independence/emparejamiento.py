"""
Matrices de similitud entre dos particiones y emparejamiento de clústeres
"""
import logging
from typing import Tuple

import numpy as np
from scipy.optimize import linear_sum_assignment

from models.errores import EmptyInputError, EvidenciaError, LengthMismatchError
from models.independencia import Matching, Orientacion, SimilarityMatrix
from models.particion import ClusterPartition

logger = logging.getLogger(__name__)

METODOS_EMPAREJAMIENTO = ("greedy", "hungarian")


def matriz_conteos(P1: ClusterPartition, P2: ClusterPartition) -> np.ndarray:
    """C[k1, k2] = |Cl¹_k1 ∩ Cl²_k2|"""
    if P1.n != P2.n:
        raise LengthMismatchError(f"Las particiones tienen {P1.n} y {P2.n} objetos")
    if P1.K != P2.K:
        raise LengthMismatchError(f"Las particiones tienen K={P1.K} y K={P2.K}")
    conteos = np.zeros((P1.K, P2.K))
    np.add.at(conteos, (np.asarray(P1.assignment), np.asarray(P2.assignment)), 1.0)
    return conteos


def _normalizar_filas(conteos: np.ndarray, fuente: str) -> np.ndarray:
    tamanos = conteos.sum(axis=1)
    if np.any(tamanos == 0):
        vacios = np.flatnonzero(tamanos == 0).tolist()
        raise EmptyInputError(f"La partición de {fuente} tiene clústeres vacíos: {vacios}")
    return conteos / tamanos[:, None]


def similarity_matrices(P1: ClusterPartition, P2: ClusterPartition) -> Tuple[SimilarityMatrix, SimilarityMatrix]:
    """
    Matrices de similitud de ambas orientaciones

    Args:
        P1: Partición de los objetos según la fuente 1
        P2: Partición de los mismos objetos según la fuente 2

    Returns:
        (M1, M2): M1[k1, k2] = |Cl¹_k1 ∩ Cl²_k2| / |Cl¹_k1| y
        M2[k2, k1] = |Cl¹_k1 ∩ Cl²_k2| / |Cl²_k2|
    """
    conteos = matriz_conteos(P1, P2)
    M1 = SimilarityMatrix(_normalizar_filas(conteos, "s1"), Orientacion.FUENTE_1)
    M2 = SimilarityMatrix(_normalizar_filas(conteos.T, "s2"), Orientacion.FUENTE_2)
    return M1, M2


def _voraz(valores: np.ndarray) -> Matching:
    K = valores.shape[0]
    restante = valores.astype(float, copy=True)
    pares = [-1] * K
    betas = [0.0] * K
    orden = []
    for paso in range(K):
        # argmax devuelve la primera aparición: menor fila y después menor columna
        fila, columna = np.unravel_index(int(np.argmax(restante)), restante.shape)
        fila, columna = int(fila), int(columna)
        pares[fila] = columna
        betas[fila] = float(valores[fila, columna])
        orden.append((fila, columna))
        logger.debug("Paso %d: clúster %d <-> %d (β=%.6g)", paso + 1, fila, columna, betas[fila])
        restante[fila, :] = -np.inf
        restante[:, columna] = -np.inf
    return Matching(tuple(pares), tuple(betas), tuple(orden))


def _hungaro(valores: np.ndarray) -> Matching:
    filas, columnas = linear_sum_assignment(valores, maximize=True)
    pares = [int(c) for _, c in sorted(zip(filas.tolist(), columnas.tolist()))]
    betas = tuple(float(valores[k, c]) for k, c in enumerate(pares))
    orden = tuple(sorted(enumerate(pares), key=lambda par: (-betas[par[0]], par[0])))
    return Matching(tuple(pares), betas, orden)


def match_clusters(M: SimilarityMatrix, method: str = "greedy") -> Matching:
    """
    Empareja los clústeres de las filas con los de las columnas

    Args:
        M: Matriz de similitud K×K
        method: "greedy" (máximo global repetido, borrando fila y columna) o
            "hungarian" (asignación de similitud total máxima)

    Returns:
        Matching biyectivo con la β emparejada de cada fila
    """
    valores = M.values if isinstance(M, SimilarityMatrix) else np.asarray(M, dtype=float)
    if valores.ndim != 2 or valores.shape[0] != valores.shape[1]:
        raise EvidenciaError(f"Se esperaba una matriz cuadrada, forma {valores.shape}")
    if method == "greedy":
        return _voraz(valores)
    if method == "hungarian":
        return _hungaro(valores)
    raise EvidenciaError(f"Método de emparejamiento desconocido: {method!r} (opciones: {', '.join(METODOS_EMPAREJAMIENTO)})")
