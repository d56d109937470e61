"""
Derivación de semillas reproducibles a partir de una semilla maestra

Regla: la subsemilla de (maestra, c1, c2, ...) es la primera palabra de 63 bits del
estado de numpy.random.SeedSequence(maestra, spawn_key=(c1, c2, ...)). Cada ensayo,
fuente o reinicio se identifica por su tupla de contadores, así que puede
reproducirse por separado.
"""
import numpy as np


def derive_seed(maestra: int, *contadores: int) -> int:
    """
    Subsemilla determinista para una tupla de contadores

    Args:
        maestra: Semilla maestra (entero no negativo)
        *contadores: Índices de ensayo, fuente, reinicio...

    Returns:
        Entero no negativo utilizable como semilla de numpy
    """
    secuencia = np.random.SeedSequence(int(maestra), spawn_key=tuple(int(c) for c in contadores))
    estado = secuencia.generate_state(2, dtype=np.uint32)
    return int((int(estado[0]) << 31) ^ int(estado[1]))
