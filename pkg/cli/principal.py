"""
Punto de entrada de la línea de comandos de fusión de creencias
"""
import argparse
import logging
import sys
from typing import List, Optional, TextIO

from clustering import CRITERIOS
from config import FUSION_CONFIG, get_seed
from models.errores import EvidenciaError
from models.regla import parse_regla
from . import comandos
from .entrada_salida import ErrorEntrada

# Códigos de salida
EXITO = 0
ERROR_USO = 1
ERROR_DOMINIO = 2


class ParserFusion(argparse.ArgumentParser):
    """ArgumentParser que sale con el código de error de uso"""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        print(f"❌ {message}", file=sys.stderr)
        sys.exit(ERROR_USO)


def _regla(texto: str):
    try:
        return parse_regla(texto)
    except EvidenciaError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def _entero_positivo(texto: str) -> int:
    valor = int(texto)
    if valor < 1:
        raise argparse.ArgumentTypeError(f"se esperaba un entero ≥ 1, no {texto}")
    return valor


def _anadir_prediscount(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--prediscount", nargs="?", type=float, default=None,
        const=FUSION_CONFIG.get('epsilon_descuento', 1e-6), metavar="EPS",
        help="descuenta con tasa EPS las masas dogmáticas antes de combinar",
    )


def _anadir_experimento(parser: argparse.ArgumentParser, trials: int = 100) -> None:
    parser.add_argument("--omega", type=_entero_positivo, default=5, help="|Ω|")
    parser.add_argument("--n", type=_entero_positivo, default=100, help="masas por fuente")
    parser.add_argument("--trials", type=_entero_positivo, default=trials, help="número de ensayos")
    parser.add_argument("--k", type=_entero_positivo, default=None, help="clústeres (por defecto |Ω|)")
    parser.add_argument("--seed", type=int, default=get_seed(), help="semilla maestra")
    parser.add_argument("--workers", type=_entero_positivo, default=FUSION_CONFIG.get('workers', 1),
                        help="procesos en paralelo")


def build_parser() -> argparse.ArgumentParser:
    """Construye el parser con todos los subcomandos"""
    parser = ParserFusion(prog="fusion", description="Combinación de funciones de creencia de fuentes parcialmente independientes")
    parser.add_argument("--log-level", default=FUSION_CONFIG.get('log_level', 'WARNING'),
                        help="nivel de logging (DEBUG, INFO, WARNING...)")
    sub = parser.add_subparsers(dest="command", metavar="COMANDO")
    sub.required = True

    p = sub.add_parser("combine", help="combina masas con una regla")
    p.add_argument("files", nargs="+", help="ficheros JSON de masas")
    p.add_argument("--rule", type=_regla, required=True, help="conjunctive, dempster, mixed(0.3)...")
    p.add_argument("--gamma", type=float, default=None, help="γ de la regla mixta")
    _anadir_prediscount(p)
    p.set_defaults(func=comandos.cmd_combine)

    p = sub.add_parser("decompose", help="descomposición canónica")
    p.add_argument("file")
    _anadir_prediscount(p)
    p.set_defaults(func=comandos.cmd_decompose)

    p = sub.add_parser("cluster", help="agrupamiento evidencial de un flujo")
    p.add_argument("file")
    p.add_argument("--k", type=_entero_positivo, default=None)
    p.add_argument("--seed", type=int, default=get_seed())
    p.add_argument("--max-iter", type=_entero_positivo, default=None)
    p.add_argument("--n-init", type=_entero_positivo, default=1)
    p.add_argument("--criterion", choices=CRITERIOS, default="objective",
                   help="objective: solo cambios que bajan el objetivo; mean: clúster de menor distancia media")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(func=comandos.cmd_cluster)

    p = sub.add_parser("independence", help="grado de independencia entre flujos")
    p.add_argument("files", nargs="+", help="un fichero de flujo por fuente")
    p.add_argument("--k", type=_entero_positivo, default=None)
    p.add_argument("--seed", type=int, default=get_seed())
    p.add_argument("--shared-seed", action="store_true", help="agrupa todas las fuentes con la misma semilla")
    p.add_argument("--method", choices=("greedy", "hungarian"), default="greedy")
    p.set_defaults(func=comandos.cmd_independence)

    p = sub.add_parser("generate", help="genera un flujo de masas aleatorias")
    p.add_argument("--mode", choices=("independent", "consistent", "dependent"), default="independent")
    p.add_argument("--omega", type=_entero_positivo, default=5)
    p.add_argument("--labels", default=None, help="etiquetas separadas por comas (sustituye a --omega)")
    p.add_argument("--n", type=_entero_positivo, default=100)
    p.add_argument("--seed", type=int, default=get_seed())
    p.add_argument("--decisions", default=None, help="flujo cuyas decisiones pignísticas guían el modo dependent")
    p.add_argument("--anchors", default=None, help="fichero donde guardar las anclas del modo consistent")
    p.set_defaults(func=comandos.cmd_generate)

    p = sub.add_parser("distance-curve", help="distancias de la regla mixta a las demás reglas")
    p.add_argument("files", nargs="+")
    p.add_argument("--gammas", default="0:1:0.1", help="inicio:fin:paso o lista separada por comas")
    _anadir_prediscount(p)
    p.set_defaults(func=comandos.cmd_distance_curve)

    p = sub.add_parser("experiment", help="ensayos de Monte-Carlo")
    _anadir_experimento(p)
    p.add_argument("--mode", choices=("independent", "dependent"), default="independent")
    p.add_argument("--sources", type=int, default=2)
    p.set_defaults(func=comandos.cmd_experiment)

    p = sub.add_parser("table-two-sources", help="medias con dos fuentes")
    _anadir_experimento(p)
    p.set_defaults(func=comandos.cmd_table_two_sources)

    p = sub.add_parser("table-three-sources", help="medias con tres fuentes")
    _anadir_experimento(p)
    p.set_defaults(func=comandos.cmd_table_three_sources)

    p = sub.add_parser("table-combination", help="tabla de combinación de dos masas")
    p.set_defaults(func=comandos.cmd_table_combination)

    p = sub.add_parser("table-mixed", help="regla mixta con γ = 0.34 y 0.68")
    p.set_defaults(func=comandos.cmd_table_mixed)

    p = sub.add_parser("table-mixed-three", help="regla mixta de tres fuentes")
    p.add_argument("--gamma", type=float, default=0.35)
    p.set_defaults(func=comandos.cmd_table_mixed_three)

    p = sub.add_parser("reliability-curve", help="factor de fiabilidad según el tamaño del clúster")
    p.add_argument("--omega", type=_entero_positivo, nargs="+", default=[3, 5, 10])
    p.add_argument("--max-size", type=int, default=100)
    p.set_defaults(func=comandos.cmd_reliability_curve)

    return parser


def main(argv: Optional[List[str]] = None, salida: Optional[TextIO] = None) -> int:
    """
    Ejecuta un subcomando

    Args:
        argv: Argumentos (por defecto sys.argv[1:])
        salida: Flujo de salida de datos (por defecto stdout)

    Returns:
        0 si todo fue bien, 1 en errores de uso, 2 en errores del dominio
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else ERROR_USO
    salida = salida if salida is not None else sys.stdout
    try:
        logging.basicConfig(level=str(args.log_level).upper(), stream=sys.stderr,
                            format="%(levelname)s %(name)s: %(message)s")
        args.func(args, salida)
    except ErrorEntrada as e:
        print(f"❌ {e}", file=sys.stderr)
        return ERROR_USO
    except EvidenciaError as e:
        print(f"❌ {e}", file=sys.stderr)
        return ERROR_DOMINIO
    except (OSError, ValueError) as e:
        print(f"❌ Entrada no válida: {e}", file=sys.stderr)
        return ERROR_USO
    return EXITO
