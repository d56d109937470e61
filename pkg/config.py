"""
Configuración de la librería de fusión de creencias
"""
import os
from pathlib import Path
from dotenv import load_dotenv

# Cargar variables de entorno desde archivo .env
load_dotenv()

# Directorio base del proyecto
BASE_DIR = Path(__file__).parent

# Semilla maestra por defecto de los subcomandos
FUSION_SEED = int(os.getenv("FUSION_SEED", "2014"))

# Tolerancias numéricas
FUSION_TOLERANCIA_SUMA = float(os.getenv("FUSION_TOLERANCIA_SUMA", "1e-6"))  # al leer JSON
FUSION_TOLERANCIA = float(os.getenv("FUSION_TOLERANCIA", "1e-9"))  # validez interna

# Configuración en formato diccionario
FUSION_CONFIG = {
    'seed': FUSION_SEED,
    'tolerancia_suma': FUSION_TOLERANCIA_SUMA,
    'tolerancia': FUSION_TOLERANCIA,
    'max_iter': int(os.getenv("FUSION_MAX_ITER", "100")),
    'epsilon_descuento': float(os.getenv("FUSION_EPSILON_DESCUENTO", "1e-6")),
    'max_hipotesis': int(os.getenv("FUSION_MAX_HIPOTESIS", "20")),
    # Por encima de este tamaño de marco la matriz de Jaccard no se densifica
    'jousselme_denso_max': int(os.getenv("FUSION_JOUSSELME_DENSO_MAX", "12")),
    'decimales_csv': int(os.getenv("FUSION_DECIMALES_CSV", "6")),
    'workers': int(os.getenv("FUSION_WORKERS", "1")),
    'log_level': os.getenv("FUSION_LOG_LEVEL", "WARNING").upper(),
}


def get_fusion_config() -> dict:
    """Obtiene una copia de la configuración completa"""
    return dict(FUSION_CONFIG)


def get_tolerancia() -> float:
    """Obtiene la tolerancia numérica interna (sumas, ida y vuelta de Möbius)"""
    return FUSION_CONFIG.get('tolerancia', FUSION_TOLERANCIA)


def get_seed() -> int:
    """Obtiene la semilla maestra configurada"""
    return FUSION_CONFIG.get('seed', FUSION_SEED)


def get_max_iter() -> int:
    """Obtiene el número máximo de barridos del agrupamiento"""
    return FUSION_CONFIG.get('max_iter', 100)


def get_formato_csv() -> str:
    """
    Obtiene el formato numérico de las celdas CSV.

    Returns:
        Especificador de formato, p. ej. '.6g'
    """
    return f".{FUSION_CONFIG.get('decimales_csv', 6)}g"
