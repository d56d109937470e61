"""
Subcomandos de la línea de comandos

Cada comando recibe los argumentos ya parseados y el flujo de salida; los
mensajes de estado van a stderr para que stdout sea JSON o CSV.
"""
import argparse
import sys
from typing import List, Optional, TextIO

from clustering.agrupador import cluster, default_k
from combination.mixta import combine_n, mixed
from generators.generador import decision_of, gen_consistent, gen_dependent, gen_independent
from generators.semillas import derive_seed
from independence.estimador import multi_source_report
from mass_core.descomposicion import canonical_decompose
from mass_core.transformaciones import prediscount
from metrics.jousselme import jousselme_distance
from models.errores import EvidenciaError
from models.experimento import ExperimentConfig, ModoExperimento
from models.frame import Frame
from models.masa import MassFunction
from models.regla import Regla
from .entrada_salida import escribir_csv, escribir_json, leer_masas, leer_varias, parse_rejilla
from .experimentos import columnas, medias_por_modo, tabla_experimento
from .tablas import reliability_curve, table_combination, table_mixed, table_mixed_three

# Reglas comparadas con la mixta en la curva de distancias
REGLAS_CURVA = ("conjunctive", "dempster", "yager", "disjunctive", "cautious", "mean")


def informar(mensaje: str) -> None:
    """Mensaje de estado para el usuario"""
    print(mensaje, file=sys.stderr)


def _aplicar_prediscount(masas: List[MassFunction], epsilon: Optional[float]) -> List[MassFunction]:
    if epsilon is None:
        return masas
    descontadas = [prediscount(m, epsilon) for m in masas]
    cambiadas = sum(1 for a, b in zip(masas, descontadas) if a is not b)
    if cambiadas:
        informar(f"⚠️  {cambiadas} masa(s) dogmática(s) descontada(s) con ε={epsilon:g}")
    return descontadas


def cmd_combine(args: argparse.Namespace, salida: TextIO) -> None:
    """Combina las masas de los ficheros con la regla indicada"""
    regla, gamma = args.rule
    if args.gamma is not None:
        gamma = args.gamma
    if regla is Regla.MIXED and gamma is None:
        raise EvidenciaError("La regla mixta necesita --gamma")
    if regla is not Regla.MIXED and gamma is not None:
        raise EvidenciaError(f"--gamma sólo se usa con la regla mixta, no con {regla.value}")
    masas = _aplicar_prediscount(leer_varias(args.files), args.prediscount)
    if len(masas) < 2:
        raise EvidenciaError(f"Se necesitan al menos 2 masas para combinar (hay {len(masas)})")
    resultado = combine_n(regla, masas, gamma)
    escribir_json(resultado.to_dict(), salida)
    informar(f"✅ {len(masas)} masas combinadas con la regla {regla.value}")


def cmd_decompose(args: argparse.Namespace, salida: TextIO) -> None:
    """Descomposición canónica de cada masa del fichero"""
    masas = _aplicar_prediscount(leer_masas(args.file), args.prediscount)
    pesos = [canonical_decompose(m).to_dict() for m in masas]
    escribir_json(pesos[0] if len(pesos) == 1 else pesos, salida)


def cmd_cluster(args: argparse.Namespace, salida: TextIO) -> None:
    """Agrupamiento evidencial de un flujo de masas"""
    masas = leer_masas(args.file)
    K = args.k if args.k is not None else default_k(masas[0].frame)
    particion = cluster(masas, K, args.seed, args.max_iter, args.n_init, args.criterion)
    if args.format == "csv":
        escribir_csv(["object", "cluster"], particion.to_rows(), salida)
    else:
        escribir_json(particion.to_dict(), salida)
    estado = "✅ Convergido" if particion.convergida else "⚠️  Sin converger"
    informar(f"{estado} en {particion.iteraciones} barrido(s); tamaños {particion.sizes}")


def cmd_independence(args: argparse.Namespace, salida: TextIO) -> None:
    """Informe de independencia de dos o más flujos"""
    if len(args.files) < 2:
        raise EvidenciaError("Se necesitan al menos 2 ficheros de flujo")
    flujos = [leer_masas(ruta) for ruta in args.files]
    informe = multi_source_report(flujos, args.k, args.seed, args.shared_seed, args.method)
    escribir_json(informe.to_dict(), salida)
    informar("📊 Independencia por pares:")
    for par in informe.reports:
        i, j = (f"s{f + 1}" for f in par.fuentes)
        informar(f"   {i}-{j}: I_d({i},{j})={par.id_12:.4f}  I_d({j},{i})={par.id_21:.4f}  "
                 f"I={par.I:.4f} ({par.decision.value})")
    informar(f"   γ = {informe.gamma:.4f}")


def cmd_generate(args: argparse.Namespace, salida: TextIO) -> None:
    """Genera un flujo de masas aleatorias"""
    frame = Frame(tuple(args.labels.split(","))) if args.labels else Frame.of_size(args.omega)
    if args.mode == "independent":
        masas = gen_independent(frame, args.n, args.seed)
    elif args.mode == "consistent":
        masas, anclas = gen_consistent(frame, args.n, args.seed)
        if args.anchors:
            with open(args.anchors, 'w', encoding='utf-8') as f:
                escribir_json([a.to_list() for a in anclas], f)
    else:
        if args.decisions:
            decisiones = [decision_of(m) for m in leer_masas(args.decisions)]
        else:
            # Las anclas del flujo consistente generado con la misma semilla
            _, decisiones = gen_consistent(frame, args.n, args.seed)
        masas = gen_dependent(frame, args.n, decisiones, derive_seed(args.seed, 1))
    escribir_json([m.to_dict() for m in masas], salida)
    informar(f"✅ {len(masas)} masas generadas ({args.mode}, |Ω|={frame.size}, semilla {args.seed})")


def cmd_distance_curve(args: argparse.Namespace, salida: TextIO) -> None:
    """Distancia de Jousselme de la regla mixta a las demás reglas para cada γ"""
    masas = _aplicar_prediscount(leer_varias(args.files), args.prediscount)
    if len(masas) < 2:
        raise EvidenciaError(f"Se necesitan al menos 2 masas (hay {len(masas)})")
    referencias = [combine_n(regla, masas) for regla in REGLAS_CURVA]
    filas = []
    for gamma in parse_rejilla(args.gammas):
        mixta = mixed(masas, gamma)
        filas.append([gamma] + [jousselme_distance(mixta, r) for r in referencias])
    escribir_csv(["gamma"] + list(REGLAS_CURVA), filas, salida)


def _config_experimento(args: argparse.Namespace, modo: str, n_sources: int) -> ExperimentConfig:
    return ExperimentConfig(args.omega, args.n, args.trials, args.k, args.seed, ModoExperimento(modo), n_sources)


def cmd_experiment(args: argparse.Namespace, salida: TextIO) -> None:
    """Ensayos de Monte-Carlo: tabla por ensayo y fila final de medias"""
    config = _config_experimento(args, args.mode, args.sources)
    informar(f"📊 {config.n_trials} ensayos ({config.mode.value}, {config.n_sources} fuentes, "
             f"|Ω|={config.omega_size}, n={config.n_masses})")
    cabecera, filas = tabla_experimento(config, args.workers)
    escribir_csv(cabecera, filas, salida)
    informar(f"✅ γ medio = {filas[-1][-1]:.4f}")


def _tabla_fuentes(args: argparse.Namespace, salida: TextIO, n_sources: int) -> None:
    config = _config_experimento(args, "independent", n_sources)
    medias = medias_por_modo(config, args.workers)
    cabecera = ["mode"] + columnas(n_sources)[1:]
    escribir_csv(cabecera, [[modo.value] + valores for modo, valores in medias.items()], salida)


def cmd_table_two_sources(args: argparse.Namespace, salida: TextIO) -> None:
    """Medias de los ensayos con dos fuentes independientes y dependientes"""
    _tabla_fuentes(args, salida, 2)


def cmd_table_three_sources(args: argparse.Namespace, salida: TextIO) -> None:
    """Medias de los ensayos con tres fuentes independientes y dependientes"""
    _tabla_fuentes(args, salida, 3)


def cmd_table_combination(args: argparse.Namespace, salida: TextIO) -> None:
    escribir_csv(*table_combination(), salida)


def cmd_table_mixed(args: argparse.Namespace, salida: TextIO) -> None:
    escribir_csv(*table_mixed(), salida)


def cmd_table_mixed_three(args: argparse.Namespace, salida: TextIO) -> None:
    escribir_csv(*table_mixed_three(gamma=args.gamma), salida)


def cmd_reliability_curve(args: argparse.Namespace, salida: TextIO) -> None:
    if args.max_size < 1:
        raise EvidenciaError("--max-size debe ser al menos 1")
    escribir_csv(*reliability_curve(args.omega, args.max_size), salida)
