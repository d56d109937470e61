"""
Módulo de línea de comandos
"""
from .principal import main, build_parser, EXITO, ERROR_USO, ERROR_DOMINIO

__all__ = ['main', 'build_parser', 'EXITO', 'ERROR_USO', 'ERROR_DOMINIO']
