"""
Modelo de datos para funciones de masa y funciones de pesos canónicos
"""
import math
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Any, Dict, List, Mapping, Sequence, Union

import numpy as np

from config import FUSION_TOLERANCIA_SUMA, get_tolerancia
from models.errores import InvalidMassError, EvidenciaError
from models.frame import Frame, Subset

# Un subconjunto puede darse como Subset, patrón de bits o texto ('a|c', '{}', '*')
SubsetLike = Union[Subset, int, str, Sequence[str]]


def resolver_bits(frame: Frame, subconjunto: SubsetLike) -> int:
    """
    Convierte cualquier representación de subconjunto a patrón de bits

    Args:
        frame: Marco sobre el que se interpreta
        subconjunto: Subset, entero, texto o lista de etiquetas

    Returns:
        Patrón de bits validado
    """
    if isinstance(subconjunto, Subset):
        frame.check_same(subconjunto.frame)
        return subconjunto.bits
    if isinstance(subconjunto, (str, list, tuple)):
        return frame.parse_bits(subconjunto)
    return frame.check_bits(subconjunto)


@dataclass(frozen=True)
class MassFunction:
    """Asignación básica de creencia: masas no negativas sobre 2^Ω que suman 1"""
    frame: Frame
    masses: Mapping[int, float] = field(hash=False)

    def __post_init__(self):
        tolerancia = get_tolerancia()
        limpias: Dict[int, float] = {}
        for bits, valor in self.masses.items():
            bits = self.frame.check_bits(bits)
            valor = float(valor)
            if math.isnan(valor):
                raise InvalidMassError(f"Masa NaN en {self.frame.format_bits(bits)}")
            if valor < -tolerancia:
                raise InvalidMassError(f"Masa negativa {valor} en {self.frame.format_bits(bits)}")
            if valor > 0.0:
                limpias[bits] = limpias.get(bits, 0.0) + valor
        total = math.fsum(limpias.values())
        if abs(total - 1.0) > tolerancia:
            raise InvalidMassError(f"Las masas suman {total:.12g}, se esperaba 1")
        # Orden canónico: patrón de bits ascendente
        ordenadas = {bits: limpias[bits] for bits in sorted(limpias)}
        object.__setattr__(self, 'masses', MappingProxyType(ordenadas))

    def __reduce__(self):
        return (self.__class__, (self.frame, dict(self.masses)))

    # -- constructores -----------------------------------------------------

    @classmethod
    def from_labels(cls, frame: Frame, masses: Mapping[Any, float]) -> 'MassFunction':
        """Crea una masa a partir de claves textuales ('a', 'a|c', '{}', '*')"""
        acumuladas: Dict[int, float] = {}
        for clave, valor in masses.items():
            bits = resolver_bits(frame, clave)
            acumuladas[bits] = acumuladas.get(bits, 0.0) + float(valor)
        return cls(frame, acumuladas)

    @classmethod
    def from_dense(cls, frame: Frame, vector: np.ndarray) -> 'MassFunction':
        """
        Crea una masa desde un vector denso de longitud 2^N en orden canónico

        Los residuos negativos de redondeo (por debajo de la tolerancia) se anulan.
        """
        vector = np.asarray(vector, dtype=float)
        if vector.shape != (frame.n_subsets,):
            raise EvidenciaError(f"Vector de longitud {vector.shape} para un marco de {frame.size} hipótesis")
        tolerancia = get_tolerancia()
        indices = np.nonzero(vector > tolerancia * 1e-3)[0]
        if np.any(vector < -tolerancia):
            peor = int(np.argmin(vector))
            raise InvalidMassError(f"Masa negativa {vector[peor]:.3g} en {frame.format_bits(peor)}")
        return cls(frame, {int(i): float(vector[i]) for i in indices})

    @classmethod
    def from_dict(cls, data: dict, tolerancia: float = FUSION_TOLERANCIA_SUMA) -> 'MassFunction':
        """
        Crea una masa desde su representación JSON

        Args:
            data: {"frame": [...], "masses": {"a": 0.3, "a|c": 0.2, ...}}
            tolerancia: Desviación admitida de la suma antes de renormalizar

        Returns:
            MassFunction renormalizada exactamente por su suma
        """
        if 'frame' not in data or 'masses' not in data:
            raise InvalidMassError("El JSON de masa necesita las claves 'frame' y 'masses'")
        frame = Frame.from_list(data['frame'])
        acumuladas: Dict[int, float] = {}
        for clave, valor in data['masses'].items():
            valor = float(valor)
            if valor < 0:
                raise InvalidMassError(f"Masa negativa {valor} en '{clave}'")
            bits = resolver_bits(frame, clave)
            acumuladas[bits] = acumuladas.get(bits, 0.0) + valor
        total = math.fsum(acumuladas.values())
        if abs(total - 1.0) > tolerancia:
            raise InvalidMassError(f"Las masas suman {total:.9g} (tolerancia {tolerancia:g})")
        return cls(frame, {bits: valor / total for bits, valor in acumuladas.items()})

    # -- acceso --------------------------------------------------------------

    def mass(self, subconjunto: SubsetLike) -> float:
        """m(A); 0 si A no es focal"""
        return self.masses.get(resolver_bits(self.frame, subconjunto), 0.0)

    def __getitem__(self, subconjunto: SubsetLike) -> float:
        return self.mass(subconjunto)

    def focal_bits(self) -> List[int]:
        """Patrones de bits de los elementos focales, en orden canónico"""
        return list(self.masses)

    def to_dense(self) -> np.ndarray:
        """Vector denso de longitud 2^N en orden canónico de subconjuntos"""
        vector = np.zeros(self.frame.n_subsets)
        for bits, valor in self.masses.items():
            vector[bits] = valor
        return vector

    def to_dict(self) -> dict:
        """Convierte la masa a diccionario JSON"""
        return {
            "frame": self.frame.to_list(),
            "masses": {self.frame.format_bits(bits): valor for bits, valor in self.masses.items()},
        }

    def __str__(self) -> str:
        partes = [f"{self.frame.format_bits(b)}:{v:.4g}" for b, v in self.masses.items()]
        return "{" + ", ".join(partes) + "}"


@dataclass(frozen=True)
class WeightFunction:
    """
    Pesos de la descomposición canónica: un peso positivo por cada A ⊂ Ω estricto.

    Los pesos ausentes valen 1. Pueden superar 1 (masas no separables).
    """
    frame: Frame
    weights: Mapping[int, float] = field(hash=False)

    def __post_init__(self):
        limpios: Dict[int, float] = {}
        for bits, peso in self.weights.items():
            bits = self.frame.check_bits(bits)
            peso = float(peso)
            if bits == self.frame.omega:
                raise EvidenciaError("Ω no tiene peso en la descomposición canónica")
            if not (peso > 0.0) or math.isinf(peso):
                raise EvidenciaError(f"Peso no positivo {peso} en {self.frame.format_bits(bits)}")
            if peso != 1.0:
                limpios[bits] = peso
        object.__setattr__(self, 'weights', MappingProxyType({b: limpios[b] for b in sorted(limpios)}))

    def __reduce__(self):
        return (self.__class__, (self.frame, dict(self.weights)))

    @classmethod
    def from_log_dense(cls, frame: Frame, log_pesos: np.ndarray, umbral: float = 1e-13) -> 'WeightFunction':
        """Crea los pesos desde ln w en orden canónico (la entrada de Ω se ignora)"""
        pesos = {
            int(bits): float(np.exp(valor))
            for bits, valor in enumerate(log_pesos[:-1])
            if abs(valor) > umbral
        }
        return cls(frame, pesos)

    def weight(self, subconjunto: SubsetLike) -> float:
        """w(A); 1 si A no participa"""
        return self.weights.get(resolver_bits(self.frame, subconjunto), 1.0)

    def __getitem__(self, subconjunto: SubsetLike) -> float:
        return self.weight(subconjunto)

    def to_log_dense(self) -> np.ndarray:
        """ln w en orden canónico; la entrada de Ω vale 0"""
        vector = np.zeros(self.frame.n_subsets)
        for bits, peso in self.weights.items():
            vector[bits] = math.log(peso)
        return vector

    def to_dict(self) -> dict:
        """Convierte los pesos a diccionario JSON"""
        return {
            "frame": self.frame.to_list(),
            "weights": {self.frame.format_bits(bits): peso for bits, peso in self.weights.items()},
        }

    @classmethod
    def from_dict(cls, data: dict) -> 'WeightFunction':
        frame = Frame.from_list(data['frame'])
        return cls(frame, {resolver_bits(frame, k): float(v) for k, v in data.get('weights', {}).items()})
