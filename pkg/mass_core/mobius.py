"""
Transformadas zeta y de Möbius rápidas sobre vectores densos de 2^N entradas

Cada transformada recorre los N bits; para el bit i el vector se ve como
(2^(N-i-1), 2, 2^i) y el eje central separa los subconjuntos sin/con ese bit.
"""
import numpy as np


def _vistas(vector: np.ndarray):
    n = int(vector.shape[0]).bit_length() - 1
    if vector.ndim != 1 or (1 << n) != vector.shape[0]:
        raise ValueError(f"Longitud {vector.shape[0]} no es potencia de 2")
    for i in range(n):
        yield vector.reshape(-1, 2, 1 << i)


def zeta_superconjuntos(vector: np.ndarray) -> np.ndarray:
    """f(A) = Σ_{B⊇A} v(B)  (masa → comunalidad)"""
    resultado = np.array(vector, dtype=float, copy=True)
    for vista in _vistas(resultado):
        vista[:, 0, :] += vista[:, 1, :]
    return resultado


def mobius_superconjuntos(vector: np.ndarray) -> np.ndarray:
    """Inversa de zeta_superconjuntos: v(A) = Σ_{B⊇A} (-1)^{|B|-|A|} f(B)"""
    resultado = np.array(vector, dtype=float, copy=True)
    for vista in _vistas(resultado):
        vista[:, 0, :] -= vista[:, 1, :]
    return resultado

