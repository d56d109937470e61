"""
Modelo de configuración de los experimentos de Monte-Carlo
"""
from dataclasses import asdict, dataclass
from enum import Enum
from typing import Any, Dict, Optional

from models.errores import EvidenciaError


class ModoExperimento(Enum):
    """Tipo de fuentes simuladas"""
    INDEPENDIENTE = "independent"
    DEPENDIENTE = "dependent"


@dataclass(frozen=True)
class ExperimentConfig:
    """Parámetros de una tanda de ensayos"""
    omega_size: int = 5
    n_masses: int = 100
    n_trials: int = 100
    K: Optional[int] = None
    seed: int = 0
    mode: ModoExperimento = ModoExperimento.INDEPENDIENTE
    n_sources: int = 2

    def __post_init__(self):
        if isinstance(self.mode, str):
            object.__setattr__(self, 'mode', ModoExperimento(self.mode))
        for nombre in ('omega_size', 'n_masses', 'n_trials'):
            if getattr(self, nombre) < 1:
                raise EvidenciaError(f"{nombre} debe ser al menos 1")
        if not (1 <= self.clusters <= self.n_masses):
            raise EvidenciaError(f"K={self.clusters} debe estar en [1, {self.n_masses}]")
        if self.n_sources < 2:
            raise EvidenciaError("Se necesitan al menos 2 fuentes")

    @property
    def clusters(self) -> int:
        """K efectivo: por defecto |Ω|"""
        return self.K if self.K is not None else self.omega_size

    def to_dict(self) -> Dict[str, Any]:
        datos = asdict(self)
        datos['mode'] = self.mode.value
        datos['K'] = self.clusters
        return datos
