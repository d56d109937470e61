"""
Excepciones del dominio de funciones de creencia
"""
from typing import Optional


class EvidenciaError(ValueError):
    """Error base de todas las operaciones sobre funciones de creencia"""


class FrameMismatchError(EvidenciaError):
    """Los operandos están definidos sobre marcos de discernimiento distintos"""


class InvalidMassError(EvidenciaError):
    """La función de masa no cumple las restricciones (no negativa, suma 1)"""


class OutOfRangeError(EvidenciaError):
    """Un parámetro escalar está fuera de su intervalo permitido"""


class EmptyInputError(EvidenciaError):
    """Se esperaba al menos un elemento"""


class LengthMismatchError(EvidenciaError):
    """Secuencias que deberían tener la misma longitud no la tienen"""


class DogmaticMassError(EvidenciaError):
    """La operación requiere una masa no dogmática (m(Ω) > 0)"""


class TotalConflictError(EvidenciaError):
    """Conflicto total: la normalización de Dempster no está definida"""

    def __init__(self, conflicto: float, mensaje: Optional[str] = None):
        self.conflicto = conflicto
        super().__init__(mensaje or f"Conflicto total (m(∅) = {conflicto:.6g}), no se puede normalizar")


def comprobar_rango(nombre: str, valor: float, minimo: float = 0.0, maximo: float = 1.0) -> float:
    """
    Comprueba que un escalar esté en [minimo, maximo]

    Args:
        nombre: Nombre del parámetro para el mensaje de error
        valor: Valor a comprobar
        minimo: Límite inferior (incluido)
        maximo: Límite superior (incluido)

    Returns:
        El valor como float
    """
    valor = float(valor)
    if not (minimo <= valor <= maximo):
        raise OutOfRangeError(f"{nombre}={valor} fuera de [{minimo}, {maximo}]")
    return valor
