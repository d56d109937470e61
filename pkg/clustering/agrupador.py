"""
Agrupamiento evidencial: reasignación iterativa al clúster de menor distancia media, sin modos
"""
import logging
from typing import Optional, Sequence

import numpy as np

from config import get_max_iter
from generators.semillas import derive_seed
from metrics.jousselme import pairwise_distances
from models.errores import EvidenciaError
from models.frame import Frame
from models.masa import MassFunction
from models.particion import ClusterPartition, DistanceMatrix

logger = logging.getLogger(__name__)

# Criterios de reasignación: variación exacta del objetivo o distancia media al clúster
CRITERIOS = ("objective", "mean")


class AgrupadorEvidencial:
    """Agrupa objetos a partir de una matriz de distancias calculada una sola vez"""

    # Intentos de inicialización aleatoria antes de forzar clústeres no vacíos
    MAX_REINTENTOS_INICIO = 1000
    # Una reasignación debe mejorar el criterio al menos en esta cantidad
    MEJORA_MINIMA = 1e-12

    def __init__(self, distancias: DistanceMatrix, K: int, seed: int = 0,
                 max_iter: Optional[int] = None, criterio: str = "objective"):
        """
        Inicializa el agrupador

        Args:
            distancias: Matriz de distancias entre los n objetos
            K: Número de clústeres (1 ≤ K ≤ n)
            seed: Semilla de la inicialización aleatoria
            max_iter: Número máximo de barridos (por defecto el de config)
            criterio: "objective" mueve un objeto solo si baja el objetivo (monótono);
                "mean" lo mueve al clúster de menor distancia media
        """
        if K < 1:
            raise EvidenciaError("K debe ser al menos 1")
        if K > distancias.n:
            raise EvidenciaError(f"K={K} es mayor que el número de objetos n={distancias.n}")
        if criterio not in CRITERIOS:
            raise EvidenciaError(f"Criterio desconocido: {criterio!r}; se admite {list(CRITERIOS)}")
        self.distancias = distancias
        self.K = K
        self.seed = seed
        self.max_iter = max_iter if max_iter is not None else get_max_iter()
        self.criterio = criterio

    def inicializar(self, rng: np.random.Generator) -> np.ndarray:
        """
        Asignación inicial uniforme por objeto, repetida si algún clúster queda vacío

        Con K = n se parte de la identidad.
        """
        n, K = self.distancias.n, self.K
        if K == n:
            return np.arange(n)
        for _ in range(self.MAX_REINTENTOS_INICIO):
            asignacion = rng.integers(0, K, size=n)
            if np.bincount(asignacion, minlength=K).min() > 0:
                return asignacion
        logger.debug("Inicialización sin clústeres vacíos no encontrada; se fuerza un objeto por clúster")
        asignacion = rng.integers(0, K, size=n)
        asignacion[rng.permutation(n)[:K]] = np.arange(K)
        return asignacion

    def _distancias_a_clusteres(self, sumas: np.ndarray, tamanos: np.ndarray) -> np.ndarray:
        with np.errstate(divide='ignore', invalid='ignore'):
            return np.where(tamanos > 0, sumas / np.maximum(tamanos, 1), np.inf)

    @staticmethod
    def _variaciones_objetivo(fila: np.ndarray, actual: int, totales: np.ndarray,
                              tamanos: np.ndarray) -> np.ndarray:
        """
        Variación exacta del objetivo al mover el objeto a cada clúster

        El objetivo es Σ_k T_k / n_k con T_k = Σ_{i,q ∈ Cl_k} D(i, q). Sacar el objeto
        de su clúster resta 2·fila[actual] a T, y meterlo en k suma 2·fila[k].
        Un objeto solo en su clúster no se mueve (inf en todos los destinos).
        """
        n_a = tamanos[actual]
        if n_a <= 1:
            return np.full(tamanos.shape, np.inf)
        salida = (totales[actual] - 2.0 * n_a * fila[actual]) / (n_a * (n_a - 1))
        with np.errstate(divide='ignore', invalid='ignore'):
            entrada = np.where(tamanos > 0, (2.0 * tamanos * fila - totales) / (tamanos * (tamanos + 1)), 0.0)
        variaciones = salida + entrada
        variaciones[actual] = 0.0
        return variaciones

    def _reparar_vacios(self, asignacion: np.ndarray, sumas: np.ndarray, tamanos: np.ndarray,
                        totales: np.ndarray) -> int:
        """Mueve a cada clúster vacío el objeto más alejado de su propio clúster"""
        D = self.distancias.values
        movidos = 0
        for vacio in np.flatnonzero(tamanos == 0):
            candidatos = np.flatnonzero(tamanos[asignacion] > 1)
            propias = sumas[candidatos, asignacion[candidatos]] / tamanos[asignacion[candidatos]]
            i = int(candidatos[int(np.argmax(propias))])
            self._mover(i, asignacion[i], vacio, asignacion, sumas, tamanos, totales)
            movidos += 1
            logger.warning("Clúster %d vacío: se le asigna el objeto %d", vacio, i)
        return movidos

    def _mover(self, i: int, origen: int, destino: int, asignacion: np.ndarray,
               sumas: np.ndarray, tamanos: np.ndarray, totales: np.ndarray) -> None:
        D = self.distancias.values
        totales[origen] -= 2.0 * sumas[i, origen]
        totales[destino] += 2.0 * sumas[i, destino]
        sumas[:, origen] -= D[:, i]
        sumas[:, destino] += D[:, i]
        tamanos[origen] -= 1
        tamanos[destino] += 1
        asignacion[i] = destino

    def _destino(self, i: int, actual: int, sumas: np.ndarray, tamanos: np.ndarray,
                 totales: np.ndarray) -> int:
        """Clúster al que se mueve el objeto i, o el actual si ningún cambio mejora"""
        if self.criterio == "mean":
            distancia = self._distancias_a_clusteres(sumas[i], tamanos)
            mejor = int(np.argmin(distancia))
            if distancia[mejor] < distancia[actual] - self.MEJORA_MINIMA:
                return mejor
            return actual
        variaciones = self._variaciones_objetivo(sumas[i], actual, totales, tamanos)
        mejor = int(np.argmin(variaciones))
        if variaciones[mejor] < -self.MEJORA_MINIMA:
            return mejor
        return actual

    def agrupar(self) -> ClusterPartition:
        """
        Barridos secuenciales en orden de id hasta que ningún objeto cambia de clúster

        Returns:
            ClusterPartition con la asignación final, los barridos realizados y si convergió
        """
        D = self.distancias.values
        n, K = self.distancias.n, self.K
        rng = np.random.default_rng(self.seed)
        asignacion = self.inicializar(rng)
        tamanos = np.bincount(asignacion, minlength=K).astype(float)
        # sumas[i, k] = Σ_{q ∈ Cl_k} D(i, q)
        sumas = np.zeros((n, K))
        for k in range(K):
            sumas[:, k] = D[:, asignacion == k].sum(axis=1)
        # totales[k] = Σ_{i ∈ Cl_k} sumas[i, k]
        totales = np.array([sumas[asignacion == k, k].sum() for k in range(K)])

        convergida = False
        iteracion = 0
        for iteracion in range(1, self.max_iter + 1):
            cambios = 0
            for i in range(n):
                actual = int(asignacion[i])
                mejor = self._destino(i, actual, sumas, tamanos, totales)
                if mejor != actual:
                    self._mover(i, actual, mejor, asignacion, sumas, tamanos, totales)
                    cambios += 1
            cambios += self._reparar_vacios(asignacion, sumas, tamanos, totales)
            logger.debug("Barrido %d: %d reasignaciones", iteracion, cambios)
            if cambios == 0:
                convergida = True
                break

        if not convergida:
            logger.warning("Agrupamiento sin converger tras %d barridos", self.max_iter)
        return ClusterPartition(tuple(asignacion.tolist()), K, iteracion, convergida, self.distancias)


def objective(particion: ClusterPartition, distancias: DistanceMatrix) -> float:
    """Suma sobre los objetos de su distancia media a su propio clúster"""
    D = distancias.values
    clusteres = particion.clusters()
    return float(sum(D[i, clusteres[c]].mean() for i, c in enumerate(particion.assignment)))


def cluster_distances(distancias: DistanceMatrix, K: int, seed: int = 0,
                      max_iter: Optional[int] = None, n_init: int = 1,
                      criterio: str = "objective") -> ClusterPartition:
    """
    Agrupa a partir de una matriz de distancias precalculada

    Args:
        distancias: Matriz de distancias
        K: Número de clústeres
        seed: Semilla; el reinicio r > 0 usa una semilla derivada de (seed, r)
        max_iter: Número máximo de barridos
        n_init: Reinicios; se conserva la partición de menor objetivo (la primera en empate)
        criterio: Criterio de reasignación, "objective" o "mean"

    Returns:
        ClusterPartition
    """
    if n_init < 1:
        raise EvidenciaError("n_init debe ser al menos 1")
    mejor, mejor_objetivo = None, np.inf
    for reinicio in range(n_init):
        semilla = seed if reinicio == 0 else derive_seed(seed, reinicio)
        particion = AgrupadorEvidencial(distancias, K, semilla, max_iter, criterio).agrupar()
        valor = objective(particion, distancias) if n_init > 1 else 0.0
        if mejor is None or valor < mejor_objetivo:
            mejor, mejor_objetivo = particion, valor
    return mejor


def cluster(masas: Sequence[MassFunction], K: int, seed: int = 0,
            max_iter: Optional[int] = None, n_init: int = 1,
            criterio: str = "objective") -> ClusterPartition:
    """
    Agrupamiento evidencial de una secuencia de masas

    Args:
        masas: n masas sobre el mismo marco
        K: Número de clústeres, 1 ≤ K ≤ n
        seed: Semilla de la inicialización
        max_iter: Número máximo de barridos (por defecto 100)
        n_init: Reinicios con semillas derivadas
        criterio: Criterio de reasignación, "objective" o "mean"

    Returns:
        ClusterPartition determinista dada la semilla
    """
    masas = list(masas)
    if K < 1:
        raise EvidenciaError("K debe ser al menos 1")
    if K > len(masas):
        raise EvidenciaError(f"K={K} es mayor que el número de masas n={len(masas)}")
    return cluster_distances(pairwise_distances(masas), K, seed, max_iter, n_init, criterio)


def default_k(frame: Frame) -> int:
    """Número de clústeres por defecto: el número de hipótesis |Ω|"""
    return frame.size
