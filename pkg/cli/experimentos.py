"""
Ensayos de Monte-Carlo: fuentes simuladas, estimación de independencia y medias
"""
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import replace
from functools import partial
from itertools import combinations
from typing import Dict, List, Sequence, Tuple

import numpy as np

from generators.generador import gen_consistent, gen_dependent, gen_independent
from generators.semillas import derive_seed
from independence.estimador import EstimadorIndependencia
from models.experimento import ExperimentConfig, ModoExperimento
from models.frame import Frame
from models.masa import MassFunction

logger = logging.getLogger(__name__)


def generar_fuentes(config: ExperimentConfig, ensayo: int) -> List[List[MassFunction]]:
    """
    Flujos de las n_sources fuentes de un ensayo

    La fuente s usa la subsemilla (seed, ensayo, s). En modo dependiente la fuente 1
    es consistente y el resto conoce sus anclas.
    """
    frame = Frame.of_size(config.omega_size)
    semillas = [derive_seed(config.seed, ensayo, s) for s in range(config.n_sources)]
    if config.mode is ModoExperimento.INDEPENDIENTE:
        return [gen_independent(frame, config.n_masses, semilla) for semilla in semillas]
    primera, anclas = gen_consistent(frame, config.n_masses, semillas[0])
    return [primera] + [gen_dependent(frame, config.n_masses, anclas, semilla) for semilla in semillas[1:]]


def columnas(n_sources: int) -> List[str]:
    """Cabecera de la tabla por ensayo"""
    cabecera = ["trial"]
    for i, j in combinations(range(n_sources), 2):
        si, sj = f"s{i + 1}", f"s{j + 1}"
        cabecera += [
            f"I_d({si},{sj})", f"I_d_bar({si},{sj})",
            f"I_d({sj},{si})", f"I_d_bar({sj},{si})",
            f"I({si},{sj})",
        ]
    cabecera.append("gamma")
    return cabecera


def ejecutar_ensayo(config: ExperimentConfig, ensayo: int) -> List[float]:
    """
    Un ensayo completo

    Returns:
        Valores de la fila del ensayo (sin la columna trial)
    """
    fuentes = generar_fuentes(config, ensayo)
    estimador = EstimadorIndependencia(K=config.clusters, seed=derive_seed(config.seed, ensayo))
    informe = estimador.estimar_fuentes(fuentes)
    fila = []
    for par in informe.reports:
        fila += [par.id_12, par.id_bar_12, par.id_21, par.id_bar_21, par.I]
    fila.append(informe.gamma)
    logger.debug("Ensayo %d: γ=%.4f", ensayo, informe.gamma)
    return fila


def run_experiment(config: ExperimentConfig, workers: int = 1) -> List[List[float]]:
    """
    Ejecuta los n_trials ensayos

    Args:
        config: Configuración validada
        workers: Procesos en paralelo; los resultados se devuelven en orden de ensayo

    Returns:
        Una fila de valores por ensayo
    """
    tarea = partial(ejecutar_ensayo, config)
    ensayos = range(config.n_trials)
    if workers <= 1:
        return [tarea(t) for t in ensayos]
    with ProcessPoolExecutor(max_workers=workers) as ejecutor:
        return list(ejecutor.map(tarea, ensayos))


def resumen(filas: Sequence[Sequence[float]]) -> List[float]:
    """Media por columna de las filas de ensayo"""
    return np.asarray(filas, dtype=float).mean(axis=0).tolist()


def tabla_experimento(config: ExperimentConfig, workers: int = 1) -> Tuple[List[str], List[List]]:
    """
    Tabla por ensayo con una última fila de medias

    Returns:
        (cabecera, filas) listas para escribir_csv
    """
    filas = run_experiment(config, workers)
    tabla = [[t] + fila for t, fila in enumerate(filas)]
    tabla.append(["mean"] + resumen(filas))
    return columnas(config.n_sources), tabla


def medias_por_modo(config: ExperimentConfig, workers: int = 1) -> Dict[ModoExperimento, List[float]]:
    """Medias de la misma configuración en modo independiente y dependiente"""
    medias = {}
    for modo in ModoExperimento:
        medias[modo] = resumen(run_experiment(replace(config, mode=modo), workers))
    return medias
