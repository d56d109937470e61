"""
Regla mixta y combinación n-aria
"""
import logging
from functools import reduce
from typing import Optional, Sequence, Union

from combination.reglas import (
    check_frames,
    conjunctive,
    disjunctive,
    dempster,
    yager,
    dubois_prade,
    mean_rule,
    cautious_n,
)
from models.errores import EvidenciaError, comprobar_rango
from models.masa import MassFunction
from models.regla import Regla, parse_regla

logger = logging.getLogger(__name__)

_BINARIAS = {
    Regla.CONJUNCTIVE: conjunctive,
    Regla.DISJUNCTIVE: disjunctive,
    Regla.DEMPSTER: dempster,
    Regla.YAGER: yager,
    Regla.DUBOIS_PRADE: dubois_prade,
}


def conjunctive_n(masas: Sequence[MassFunction]) -> MassFunction:
    """Plegado conjuntivo de una secuencia"""
    masas = list(masas)
    check_frames(masas)
    return reduce(conjunctive, masas)


def mixed(masas: Sequence[MassFunction], gamma: float) -> MassFunction:
    """
    Regla mixta: m(A) = γ·m_conjuntiva(A) + (1 - γ)·m_prudente(A)

    Args:
        masas: Masas no dogmáticas sobre el mismo marco
        gamma: Grado de independencia de las fuentes en [0, 1]

    Returns:
        Masa combinada. Con γ = 1 coincide con la conjuntiva y con γ = 0 con la prudente.
    """
    gamma = comprobar_rango("gamma", gamma)
    masas = list(masas)
    check_frames(masas)
    prudente = cautious_n(masas)
    conjunta = conjunctive_n(masas)
    return MassFunction.from_dense(
        masas[0].frame,
        gamma * conjunta.to_dense() + (1.0 - gamma) * prudente.to_dense(),
    )


def combine_n(regla: Union[Regla, str], masas: Sequence[MassFunction],
              gamma: Optional[float] = None) -> MassFunction:
    """
    Combina una secuencia de masas con la regla indicada

    Las reglas asociativas se pliegan por pares; media y mixta son n-arias.
    Yager y Dubois-Prade se pliegan por la izquierda en el orden de entrada,
    y el resultado depende de ese orden.

    Args:
        regla: Regla o identificador ('mixed(0.3)' admite γ en el texto)
        masas: Secuencia no vacía sobre el mismo marco
        gamma: Grado de independencia, obligatorio para la regla mixta

    Returns:
        Masa combinada
    """
    if isinstance(regla, str):
        regla, gamma_texto = parse_regla(regla)
        gamma = gamma if gamma is not None else gamma_texto
    masas = list(masas)
    check_frames(masas)
    if regla is Regla.MIXED and gamma is None:
        raise EvidenciaError("La regla mixta necesita gamma")
    if len(masas) == 1:
        return masas[0]
    if regla is Regla.MEAN:
        return mean_rule(masas)
    if regla is Regla.CAUTIOUS:
        return cautious_n(masas)
    if regla is Regla.MIXED:
        return mixed(masas, gamma)
    if not regla.asociativa and len(masas) > 2:
        logger.warning("La regla %s no es asociativa: se pliega por la izquierda en el orden de entrada", regla.value)
    return reduce(_BINARIAS[regla], masas)
