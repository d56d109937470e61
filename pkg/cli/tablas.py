"""
Regeneración de las tablas de ejemplo de combinación y de la curva de fiabilidad
"""
from typing import List, Sequence, Tuple

from combination.mixta import combine_n, mixed
from combination.reglas import cautious_n
from frame_powerset.subconjuntos import enumerate_subsets
from independence.masas import reliability_factor
from models.frame import Frame
from models.masa import MassFunction

Tabla = Tuple[List[str], List[List]]

FRAME_ABC = Frame(("a", "b", "c"))

# Dos fuentes sobre Ω = {a, b, c}
M1_EJEMPLO = MassFunction.from_labels(FRAME_ABC, {"a": 0.3, "c": 0.2, "a|c": 0.2, "*": 0.3})
M2_EJEMPLO = MassFunction.from_labels(FRAME_ABC, {"a": 0.3, "a|c": 0.4, "*": 0.3})

# Tres fuentes dependientes sobre Ω = {a, b, c}
M3_EJEMPLO = (
    MassFunction.from_labels(FRAME_ABC, {"c": 0.03, "a|c": 0.39, "b|c": 0.3, "*": 0.28}),
    MassFunction.from_labels(FRAME_ABC, {"c": 0.05, "a|c": 0.07, "b|c": 0.47, "*": 0.41}),
    MassFunction.from_labels(FRAME_ABC, {"a|c": 0.04, "b|c": 0.22, "*": 0.74}),
)
GAMMA_TRES_FUENTES = 0.35

GAMMAS_COMBINACION = (0.0, 0.3, 0.6, 1.0)
# La tabla publicada etiqueta con 1-γ las columnas de la regla mixta
GAMMAS_MIXTA = (0.34, 0.68)


def _tabla(masas: Sequence[MassFunction], cabecera: List[str],
           columnas: Sequence[MassFunction]) -> Tabla:
    """Una fila por subconjunto en orden canónico, con las masas de entrada y los resultados"""
    frame = masas[0].frame
    filas = []
    for subconjunto in enumerate_subsets(frame):
        fila = [str(subconjunto)]
        fila += [m[subconjunto.bits] for m in masas]
        fila += [c[subconjunto.bits] for c in columnas]
        filas.append(fila)
    return cabecera, filas


def table_combination(m1: MassFunction = M1_EJEMPLO, m2: MassFunction = M2_EJEMPLO) -> Tabla:
    """Prudente, conjuntiva y mixta con γ ∈ {0, 0.3, 0.6, 1}"""
    columnas = [combine_n("cautious", [m1, m2]), combine_n("conjunctive", [m1, m2])]
    columnas += [mixed([m1, m2], g) for g in GAMMAS_COMBINACION]
    cabecera = ["subset", "m1", "m2", "cautious", "conjunctive"]
    cabecera += [f"mixed_{g:g}" for g in GAMMAS_COMBINACION]
    return _tabla([m1, m2], cabecera, columnas)


def table_mixed(m1: MassFunction = M1_EJEMPLO, m2: MassFunction = M2_EJEMPLO) -> Tabla:
    """
    Regla mixta con γ = 0.34 y γ = 0.68

    La cabecera indica la columna publicada equivalente, que corresponde a 1 - γ.
    """
    columnas = [mixed([m1, m2], g) for g in GAMMAS_MIXTA]
    cabecera = ["subset", "m1", "m2"]
    cabecera += [f"mixed_{g:g} (published gamma={1 - g:g})" for g in GAMMAS_MIXTA]
    return _tabla([m1, m2], cabecera, columnas)


def table_mixed_three(masas: Sequence[MassFunction] = M3_EJEMPLO, gamma: float = GAMMA_TRES_FUENTES) -> Tabla:
    """Tres fuentes: conjuntiva, prudente y mixta con el γ dado"""
    masas = list(masas)
    columnas = [combine_n("conjunctive", masas), cautious_n(masas), mixed(masas, gamma)]
    cabecera = ["subset"] + [f"m{i + 1}" for i in range(len(masas))]
    cabecera += ["conjunctive", "cautious", f"mixed_{gamma:g}"]
    return _tabla(masas, cabecera, columnas)


def reliability_curve(omegas: Sequence[int], max_size: int) -> Tabla:
    """α(|Ω|, |Cl|) para |Cl| = 1..max_size, una columna por |Ω|"""
    cabecera = ["cluster_size"] + [f"omega_{n}" for n in omegas]
    filas = [[s] + [reliability_factor(n, s) for n in omegas] for s in range(1, max_size + 1)]
    return cabecera, filas
