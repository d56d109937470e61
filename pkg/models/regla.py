"""
Identificadores de las reglas de combinación
"""
import re
from enum import Enum
from typing import Optional, Tuple

from models.errores import EvidenciaError


class Regla(Enum):
    """Reglas de combinación disponibles en la CLI y en JSON"""
    CONJUNCTIVE = "conjunctive"
    DISJUNCTIVE = "disjunctive"
    DEMPSTER = "dempster"
    YAGER = "yager"
    DUBOIS_PRADE = "dubois_prade"
    MEAN = "mean"
    CAUTIOUS = "cautious"
    MIXED = "mixed"

    @property
    def asociativa(self) -> bool:
        return self in (Regla.CONJUNCTIVE, Regla.DISJUNCTIVE, Regla.DEMPSTER, Regla.CAUTIOUS)


_PATRON_MIXTA = re.compile(r"^mixed\(\s*([0-9.eE+-]+)\s*\)$")


def parse_regla(texto: str) -> Tuple[Regla, Optional[float]]:
    """
    Interpreta un identificador de regla

    Args:
        texto: 'conjunctive', 'dubois-prade', 'mixed' o 'mixed(0.3)'

    Returns:
        Tupla (regla, gamma) con gamma sólo si viene en el texto
    """
    texto = texto.strip().lower()
    coincidencia = _PATRON_MIXTA.match(texto)
    if coincidencia:
        try:
            return Regla.MIXED, float(coincidencia.group(1))
        except ValueError:
            raise EvidenciaError(f"gamma no válido en '{texto}'") from None
    texto = texto.replace("-", "_")
    try:
        return Regla(texto), None
    except ValueError:
        validas = ", ".join(r.value for r in Regla)
        raise EvidenciaError(f"Regla desconocida '{texto}'. Reglas válidas: {validas}") from None
