"""
Estimación del grado de independencia entre fuentes a partir de las masas que emiten
"""
import logging
from itertools import combinations
from typing import List, Optional, Sequence, Tuple

from clustering.agrupador import cluster, default_k
from generators.semillas import derive_seed
from mass_core.transformaciones import check_frames
from models.errores import EmptyInputError, EvidenciaError, LengthMismatchError
from models.independencia import IndependenceReport, Matching, MultiSourceReport, SimilarityMatrix
from models.masa import MassFunction
from models.particion import ClusterPartition
from .emparejamiento import match_clusters, similarity_matrices
from .masas import (
    cluster_independence_mass,
    independence_degree,
    reliability_factor,
    source_independence_mass,
)

logger = logging.getLogger(__name__)


def _masas_de_clusteres(M: SimilarityMatrix, emparejamiento: Matching,
                        particion: ClusterPartition, frame_size: int) -> Tuple[List[MassFunction], List[float]]:
    """Una masa por clúster de la fuente propia, con su β emparejada y su fiabilidad"""
    tamanos = particion.sizes
    fiabilidades = [reliability_factor(frame_size, tamanos[k]) for k in range(M.K)]
    masas = [cluster_independence_mass(emparejamiento.betas[k], fiabilidades[k]) for k in range(M.K)]
    return masas, fiabilidades


def independence_from_partitions(P1: ClusterPartition, P2: ClusterPartition, frame_size: int,
                                 method: str = "greedy",
                                 fuentes: Tuple[int, int] = (0, 1)) -> IndependenceReport:
    """
    Informe de independencia entre dos fuentes ya agrupadas

    Args:
        P1: Partición de la fuente 1
        P2: Partición de la fuente 2 (mismos objetos, mismo K)
        frame_size: |Ω| del marco de las masas agrupadas
        method: Método de emparejamiento ("greedy" o "hungarian")
        fuentes: Índices de las fuentes para etiquetar el informe

    Returns:
        IndependenceReport con ambas orientaciones
    """
    M1, M2 = similarity_matrices(P1, P2)
    matching1 = match_clusters(M1, method)
    matching2 = match_clusters(M2, method)

    masas1, fiabilidades1 = _masas_de_clusteres(M1, matching1, P1, frame_size)
    masas2, fiabilidades2 = _masas_de_clusteres(M2, matching2, P2, frame_size)
    fuente1 = source_independence_mass(masas1)
    fuente2 = source_independence_mass(masas2)
    id_12, id_bar_12 = independence_degree(fuente1)
    id_21, id_bar_21 = independence_degree(fuente2)

    informe = IndependenceReport(
        M1=M1, M2=M2,
        matching1=matching1, matching2=matching2,
        cluster_masses_1=masas1, cluster_masses_2=masas2,
        source_mass_1=fuente1, source_mass_2=fuente2,
        id_12=id_12, id_bar_12=id_bar_12,
        id_21=id_21, id_bar_21=id_bar_21,
        fuentes=fuentes,
        reliabilities_1=fiabilidades1, reliabilities_2=fiabilidades2,
    )
    logger.debug("Fuentes %s: I_d=%.4f / %.4f, I=%.4f", fuentes, id_12, id_21, informe.I)
    return informe


class EstimadorIndependencia:
    """Agrupa cada fuente y compara sus particiones por pares"""

    def __init__(self, K: Optional[int] = None, seed: int = 0, shared_seed: bool = False,
                 method: str = "greedy", max_iter: Optional[int] = None, n_init: int = 1):
        """
        Inicializa el estimador

        Args:
            K: Número de clústeres (por defecto |Ω|)
            seed: Semilla del informe; la fuente i se agrupa con derive_seed(seed, i)
            shared_seed: Si es True todas las fuentes se agrupan con la misma semilla
            method: Método de emparejamiento
            max_iter: Barridos máximos del agrupamiento
            n_init: Reinicios del agrupamiento
        """
        self.K = K
        self.seed = seed
        self.shared_seed = shared_seed
        self.method = method
        self.max_iter = max_iter
        self.n_init = n_init

    def semilla_fuente(self, indice: int) -> int:
        return derive_seed(self.seed, 0 if self.shared_seed else indice)

    def validar(self, streams: Sequence[Sequence[MassFunction]]) -> None:
        """Mismo número de objetos y mismo marco en todas las fuentes"""
        if any(len(s) == 0 for s in streams):
            raise EmptyInputError("Hay fuentes sin masas")
        longitudes = {len(s) for s in streams}
        if len(longitudes) > 1:
            raise LengthMismatchError(f"Las fuentes tienen longitudes distintas: {[len(s) for s in streams]}")
        check_frames([m for s in streams for m in s])

    def agrupar_fuente(self, masas: Sequence[MassFunction], indice: int) -> ClusterPartition:
        K = self.K if self.K is not None else default_k(masas[0].frame)
        return cluster(masas, K, self.semilla_fuente(indice), self.max_iter, self.n_init)

    def estimar_par(self, ms1: Sequence[MassFunction], ms2: Sequence[MassFunction]) -> IndependenceReport:
        """
        Independencia entre dos fuentes

        Args:
            ms1: Masas de la fuente 1
            ms2: Masas de la fuente 2; la i-ésima masa se refiere al mismo objeto que en ms1

        Returns:
            IndependenceReport
        """
        ms1, ms2 = list(ms1), list(ms2)
        self.validar([ms1, ms2])
        P1 = self.agrupar_fuente(ms1, 0)
        P2 = self.agrupar_fuente(ms2, 1)
        return independence_from_partitions(P1, P2, ms1[0].frame.size, self.method)

    def estimar_fuentes(self, streams: Sequence[Sequence[MassFunction]]) -> MultiSourceReport:
        """
        Independencia de ns ≥ 2 fuentes: un informe por par i < j

        Cada fuente se agrupa una sola vez y su partición se reutiliza en todos sus pares.
        """
        streams = [list(s) for s in streams]
        if len(streams) < 2:
            raise EvidenciaError(f"Se necesitan al menos 2 fuentes (hay {len(streams)})")
        self.validar(streams)
        particiones = [self.agrupar_fuente(s, i) for i, s in enumerate(streams)]
        frame_size = streams[0][0].frame.size
        informes = [
            independence_from_partitions(particiones[i], particiones[j], frame_size, self.method, (i, j))
            for i, j in combinations(range(len(streams)), 2)
        ]
        return MultiSourceReport(informes, len(streams))


def pairwise_independence(ms1: Sequence[MassFunction], ms2: Sequence[MassFunction],
                          K: Optional[int] = None, seed: int = 0, shared_seed: bool = False,
                          method: str = "greedy") -> IndependenceReport:
    """
    Agrupa ambas fuentes, las empareja en las dos orientaciones y calcula I = min(I_d(s1,s2), I_d(s2,s1))

    Args:
        ms1: Masas de la fuente 1
        ms2: Masas de la fuente 2, mismo número y mismo marco
        K: Número de clústeres (por defecto |Ω|)
        seed: Semilla del informe
        shared_seed: Agrupar ambas fuentes con la misma semilla
        method: "greedy" o "hungarian"

    Returns:
        IndependenceReport
    """
    return EstimadorIndependencia(K, seed, shared_seed, method).estimar_par(ms1, ms2)


def multi_source_report(streams: Sequence[Sequence[MassFunction]], K: Optional[int] = None,
                        seed: int = 0, shared_seed: bool = False,
                        method: str = "greedy") -> MultiSourceReport:
    """Informes de todos los pares i < j y γ"""
    return EstimadorIndependencia(K, seed, shared_seed, method).estimar_fuentes(streams)


def multi_source_independence(streams: Sequence[Sequence[MassFunction]], K: Optional[int] = None,
                              seed: int = 0, shared_seed: bool = False,
                              method: str = "greedy") -> float:
    """
    Independencia de varias fuentes: γ = máximo sobre los pares i < j de I(s_i, s_j)

    Returns:
        γ en [0, 1]
    """
    return multi_source_report(streams, K, seed, shared_seed, method).gamma
