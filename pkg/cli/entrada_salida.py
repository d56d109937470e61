"""
Lectura y escritura de masas en JSON y de tablas en CSV
"""
import csv
import json
from pathlib import Path
from typing import Any, Iterable, List, Sequence, TextIO, Union

import numpy as np

from config import get_formato_csv
from models.masa import MassFunction


class ErrorEntrada(Exception):
    """Fichero ilegible o JSON mal formado (error de uso)"""


def leer_json(ruta: Union[str, Path]) -> Any:
    """
    Lee un fichero JSON

    Raises:
        ErrorEntrada: si el fichero no existe o no es JSON válido
    """
    try:
        with open(ruta, 'r', encoding='utf-8') as f:
            return json.load(f)
    except OSError as e:
        raise ErrorEntrada(f"No se puede leer {ruta}: {e.strerror or e}") from e
    except json.JSONDecodeError as e:
        raise ErrorEntrada(f"JSON no válido en {ruta}: {e}") from e


def leer_masas(ruta: Union[str, Path]) -> List[MassFunction]:
    """
    Lee una masa (objeto) o un flujo de masas (array) de un fichero

    Returns:
        Lista de masas en el orden del fichero
    """
    datos = leer_json(ruta)
    if isinstance(datos, dict):
        return [MassFunction.from_dict(datos)]
    if isinstance(datos, list):
        return [MassFunction.from_dict(d) for d in datos]
    raise ErrorEntrada(f"{ruta}: se esperaba un objeto o un array de funciones de masa")


def leer_varias(rutas: Iterable[Union[str, Path]]) -> List[MassFunction]:
    """Concatena las masas de varios ficheros"""
    return [m for ruta in rutas for m in leer_masas(ruta)]


def escribir_json(datos: Any, salida: TextIO) -> None:
    json.dump(datos, salida, indent=2, ensure_ascii=False)
    salida.write("\n")


def formatear(valor: Any) -> Any:
    """Formatea los reales con las cifras significativas configuradas"""
    if isinstance(valor, (float, np.floating)):
        texto = format(float(valor), get_formato_csv())
        # -0 aparece por errores de redondeo en restas de masas iguales
        return "0" if texto == "-0" else texto
    return valor


def escribir_csv(cabecera: Sequence[str], filas: Iterable[Sequence[Any]], salida: TextIO) -> None:
    """Escribe una tabla CSV con cabecera y punto decimal"""
    escritor = csv.writer(salida, lineterminator="\n")
    escritor.writerow(cabecera)
    for fila in filas:
        escritor.writerow([formatear(v) for v in fila])


def parse_rejilla(texto: str) -> List[float]:
    """
    Rejilla de valores: "inicio:fin:paso" o lista separada por comas

    Returns:
        Valores en orden
    """
    texto = texto.strip()
    if ":" in texto:
        partes = [float(p) for p in texto.split(":")]
        if len(partes) != 3 or partes[2] <= 0:
            raise ValueError(f"Rejilla no válida: {texto!r} (formato inicio:fin:paso)")
        inicio, fin, paso = partes
        pasos = int(round((fin - inicio) / paso))
        return [float(v) for v in np.round(np.linspace(inicio, inicio + pasos * paso, pasos + 1), 12)]
    return [float(p) for p in texto.split(",") if p.strip()]
