"""
Modelo de datos para el marco de discernimiento y sus subconjuntos
"""
import operator
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Sequence, Tuple, Union

from config import FUSION_CONFIG
from models.errores import EvidenciaError, FrameMismatchError

# Representaciones textuales aceptadas en la entrada
TEXTO_VACIO = "{}"
TEXTO_OMEGA = "*"
SEPARADOR = "|"
# Límite absoluto del marco; FUSION_MAX_HIPOTESIS solo puede reducirlo
MAX_HIPOTESIS = 20


@dataclass(frozen=True)
class Frame:
    """Marco de discernimiento: conjunto ordenado de hipótesis exclusivas"""
    labels: Tuple[str, ...]
    _indices: Dict[str, int] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        labels = tuple(str(label) for label in self.labels)
        object.__setattr__(self, 'labels', labels)
        if not labels:
            raise EvidenciaError("El marco de discernimiento no puede estar vacío")
        if len(set(labels)) != len(labels):
            raise EvidenciaError(f"Hipótesis repetidas en el marco: {list(labels)}")
        max_hipotesis = min(FUSION_CONFIG.get('max_hipotesis', MAX_HIPOTESIS), MAX_HIPOTESIS)
        if len(labels) > max_hipotesis:
            raise EvidenciaError(f"El marco tiene {len(labels)} hipótesis; el máximo es {max_hipotesis}")
        object.__setattr__(self, '_indices', {label: i for i, label in enumerate(labels)})

    @classmethod
    def of_size(cls, n: int, prefijo: str = "w") -> 'Frame':
        """Crea un marco con hipótesis w1..wN"""
        return cls(tuple(f"{prefijo}{i + 1}" for i in range(n)))

    @property
    def size(self) -> int:
        """N = |Ω|"""
        return len(self.labels)

    @property
    def omega(self) -> int:
        """Patrón de bits de Ω"""
        return (1 << self.size) - 1

    @property
    def n_subsets(self) -> int:
        return 1 << self.size

    def check_bits(self, bits: int) -> int:
        """Valida que un patrón de bits pertenezca a 2^Ω"""
        try:
            bits = operator.index(bits)
        except TypeError:
            raise EvidenciaError(f"Patrón {bits!r} no es un entero") from None
        if bits < 0 or bits > self.omega:
            raise EvidenciaError(f"Patrón {bits} fuera del marco de {self.size} hipótesis")
        return bits

    def subset(self, labels: Iterable[str]) -> 'Subset':
        """
        Construye un subconjunto a partir de sus etiquetas

        Args:
            labels: Etiquetas de hipótesis del marco

        Returns:
            Subset sobre este marco
        """
        bits = 0
        for label in labels:
            if label not in self._indices:
                raise EvidenciaError(f"Hipótesis desconocida '{label}' para el marco {list(self.labels)}")
            bits |= 1 << self._indices[label]
        return Subset(self, bits)

    def from_bits(self, bits: int) -> 'Subset':
        return Subset(self, self.check_bits(bits))

    def empty(self) -> 'Subset':
        return Subset(self, 0)

    def full(self) -> 'Subset':
        return Subset(self, self.omega)

    def singleton(self, label: str) -> 'Subset':
        return self.subset([label])

    def labels_of(self, bits: int) -> List[str]:
        """Etiquetas de un patrón de bits, en el orden del marco"""
        return [label for i, label in enumerate(self.labels) if bits >> i & 1]

    def format_bits(self, bits: int) -> str:
        """Texto legible de un subconjunto: 'a|c', '{}' para ∅"""
        if bits == 0:
            return TEXTO_VACIO
        return SEPARADOR.join(self.labels_of(bits))

    def parse_bits(self, texto: Union[str, Sequence[str]]) -> int:
        """
        Interpreta un subconjunto escrito en JSON o en la línea de comandos

        Acepta '{}' (o cadena vacía) para ∅, '*' para Ω, etiquetas unidas por '|',
        una lista de etiquetas o una cadena de bits de longitud N con el primer
        carácter correspondiente a la primera hipótesis ('101').

        Args:
            texto: Representación del subconjunto

        Returns:
            Patrón de bits
        """
        if not isinstance(texto, str):
            return self.subset(texto).bits
        texto = texto.strip()
        if texto in ("", TEXTO_VACIO, "∅"):
            return 0
        if texto in (TEXTO_OMEGA, "Ω"):
            return self.omega
        if texto in self._indices:
            return 1 << self._indices[texto]
        if len(texto) == self.size and set(texto) <= {"0", "1"}:
            bits = 0
            for i, caracter in enumerate(texto):
                if caracter == "1":
                    bits |= 1 << i
            return bits
        return self.subset(parte.strip() for parte in texto.split(SEPARADOR)).bits

    def parse(self, texto: Union[str, Sequence[str]]) -> 'Subset':
        return Subset(self, self.parse_bits(texto))

    def check_same(self, otro: 'Frame') -> None:
        """Lanza FrameMismatchError si los marcos no coinciden"""
        if self != otro:
            raise FrameMismatchError(f"Marcos distintos: {list(self.labels)} vs {list(otro.labels)}")

    def to_list(self) -> List[str]:
        """Convierte el marco a lista JSON de etiquetas"""
        return list(self.labels)

    @classmethod
    def from_list(cls, data: Sequence[str]) -> 'Frame':
        """Crea un marco desde una lista JSON de etiquetas"""
        return cls(tuple(data))


@dataclass(frozen=True)
class Subset:
    """Subconjunto de Ω codificado como patrón de bits (bit i ⇔ ω_i presente)"""
    frame: Frame
    bits: int

    def __post_init__(self):
        object.__setattr__(self, 'bits', self.frame.check_bits(self.bits))

    @property
    def cardinality(self) -> int:
        return bin(self.bits).count("1")

    @property
    def is_empty(self) -> bool:
        return self.bits == 0

    @property
    def is_full(self) -> bool:
        return self.bits == self.frame.omega

    def _otro(self, otro: 'Subset') -> int:
        self.frame.check_same(otro.frame)
        return otro.bits

    def __and__(self, otro: 'Subset') -> 'Subset':
        return Subset(self.frame, self.bits & self._otro(otro))

    def __or__(self, otro: 'Subset') -> 'Subset':
        return Subset(self.frame, self.bits | self._otro(otro))

    def complement(self) -> 'Subset':
        return Subset(self.frame, self.frame.omega & ~self.bits)

    def issubset(self, otro: 'Subset') -> bool:
        return self.bits & ~self._otro(otro) == 0

    def labels(self) -> List[str]:
        return self.frame.labels_of(self.bits)

    def __str__(self) -> str:
        return self.frame.format_bits(self.bits)

    def to_list(self) -> List[str]:
        """Lista de etiquetas (orden del marco) para JSON"""
        return self.labels()
