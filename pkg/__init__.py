"""
Fusión de funciones de creencia de fuentes parcialmente independientes
"""
__version__ = "0.1.0"
