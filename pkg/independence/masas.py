"""
Masas de independencia sobre Ω_I = {Dep, Ind}
"""
from typing import Sequence, Tuple

from combination.reglas import mean_rule
from mass_core.transformaciones import pignistic
from models.errores import EmptyInputError, EvidenciaError, comprobar_rango
from models.independencia import DEP, FRAME_INDEPENDENCIA, IND
from models.masa import MassFunction


def reliability_factor(frame_size: int, cluster_size: int) -> float:
    """
    Fiabilidad de un clúster: α = 1 - |Cl|^(-1/|Ω|)

    Args:
        frame_size: Número de hipótesis |Ω| (≥ 1)
        cluster_size: Número de objetos del clúster (≥ 1)

    Returns:
        α en [0, 1[; crece con el tamaño del clúster
    """
    if frame_size < 1:
        raise EvidenciaError(f"|Ω|={frame_size} debe ser al menos 1")
    if cluster_size < 1:
        raise EmptyInputError("Un clúster vacío no tiene fiabilidad")
    return 1.0 - float(cluster_size) ** (-1.0 / frame_size)


def cluster_independence_mass(beta: float, alpha: float) -> MassFunction:
    """
    Masa de independencia de un par de clústeres emparejados

    Args:
        beta: Similitud β del par
        alpha: Fiabilidad α del clúster

    Returns:
        m(Dep) = αβ, m(Ind) = α(1-β), m(Ω_I) = 1-α
    """
    beta = comprobar_rango("beta", beta)
    alpha = comprobar_rango("alpha", alpha)
    return MassFunction(FRAME_INDEPENDENCIA, {
        DEP: alpha * beta,
        IND: alpha * (1.0 - beta),
        FRAME_INDEPENDENCIA.omega: 1.0 - alpha,
    })


def _comprobar_marco(m: MassFunction) -> None:
    FRAME_INDEPENDENCIA.check_same(m.frame)


def source_independence_mass(cluster_masses: Sequence[MassFunction]) -> MassFunction:
    """Independencia global de una fuente: regla de la media sobre sus K clústeres"""
    cluster_masses = list(cluster_masses)
    if not cluster_masses:
        raise EmptyInputError("Se necesita al menos una masa de clúster")
    for m in cluster_masses:
        _comprobar_marco(m)
    return mean_rule(cluster_masses)


def independence_degree(m: MassFunction) -> Tuple[float, float]:
    """
    Grados pignísticos de independencia y dependencia

    Returns:
        (I_d, Ī_d) = (BetP(Ind), BetP(Dep)); suman 1
    """
    _comprobar_marco(m)
    probabilidades = pignistic(m)
    return probabilidades["Ind"], probabilidades["Dep"]
