"""
Descomposición canónica de masas no dogmáticas en soportes simples generalizados

Se trabaja en el dominio del logaritmo de la comunalidad:
    ln w(A) = -Σ_{B⊇A} (-1)^{|B|-|A|} ln q(B),   A ⊂ Ω
y la recomposición suma los ln w sobre superconjuntos, exponencia y aplica Möbius.
"""
import logging

import numpy as np

from mass_core.mobius import zeta_superconjuntos, mobius_superconjuntos
from mass_core.transformaciones import commonality_vector, from_commonality, is_dogmatic
from models.errores import DogmaticMassError
from models.masa import MassFunction, WeightFunction

logger = logging.getLogger(__name__)


def canonical_decompose(m: MassFunction) -> WeightFunction:
    """
    Pesos canónicos w(A) de una masa no dogmática

    Args:
        m: Función de masa con m(Ω) > 0

    Returns:
        WeightFunction tal que recompose(w) = m

    Raises:
        DogmaticMassError: si m(Ω) = 0
    """
    if is_dogmatic(m):
        raise DogmaticMassError(f"La masa {m} es dogmática (m(Ω) = 0); no admite descomposición canónica")
    q = commonality_vector(m)
    log_pesos = -mobius_superconjuntos(np.log(q))
    pesos = WeightFunction.from_log_dense(m.frame, log_pesos)
    if any(w > 1.0 for w in pesos.weights.values()):
        logger.debug("Masa no separable: %d pesos mayores que 1", sum(w > 1.0 for w in pesos.weights.values()))
    return pesos


def log_weights(m: MassFunction) -> np.ndarray:
    """ln w denso (entrada de Ω a 0), usado por la regla prudente"""
    return canonical_decompose(m).to_log_dense()


def recompose_log(frame, log_pesos: np.ndarray) -> MassFunction:
    """
    Combinación conjuntiva de los soportes A^{w(A)} a partir de ln w denso

    Args:
        frame: Marco de discernimiento
        log_pesos: ln w en orden canónico; la entrada de Ω se ignora

    Returns:
        Masa recompuesta
    """
    completo = np.array(log_pesos, dtype=float, copy=True)
    # Con q(∅) = 1 la suma de todos los ln w es nula, lo que fija el término de Ω
    completo[-1] = -completo[:-1].sum()
    q = np.exp(-zeta_superconjuntos(completo))
    return from_commonality(frame, q)


def recompose(w: WeightFunction) -> MassFunction:
    """
    Masa a partir de sus pesos canónicos

    Args:
        w: Pesos positivos (ausentes = 1)

    Returns:
        Combinación conjuntiva de todos los soportes simples generalizados
    """
    return recompose_log(w.frame, w.to_log_dense())
