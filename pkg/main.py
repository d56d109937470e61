"""
Punto de entrada: python main.py <comando> [opciones]
"""
import sys
from pathlib import Path

# Agregar el directorio raíz al path para importaciones
sys.path.insert(0, str(Path(__file__).parent))

from cli import main


if __name__ == "__main__":
    sys.exit(main())
