"""
Script de verificación rápida
Verifica que todos los paquetes se importen y que el ejemplo más rápido se reproduzca
"""

import sys
import logging
from pathlib import Path

# Agregar el directorio src al path
src_path = Path(__file__).parent / "src"
sys.path.insert(0, str(src_path))

# Configurar logging
logging.basicConfig(
    level=logging.INFO,
    format='%(levelname)s - %(message)s'
)

logger = logging.getLogger(__name__)

PAQUETES = ('config', 'core', 'fields', 'geometry', 'localfields', 'forms', 'brauer', 'cli', 'utils')


def verificar() -> bool:
    """Importa cada paquete y reproduce ex5.8; True si todo está en orden"""
    import importlib

    for paquete in PAQUETES:
        logger.info(f"Importando {paquete}...")
        importlib.import_module(paquete)
        logger.info(f"✅ {paquete} importado correctamente")

    from core.version import get_version_string
    from cli.reproduce import reproducir
    logger.info(f"   Versión: {get_version_string()}")

    informe = reproducir('ex5.8')
    logger.info(f"✅ ex5.8: {informe.estado}")
    return informe.aprobado


if __name__ == "__main__":
    logger.info("=" * 60)
    logger.info("VERIFICANDO ESTRUCTURA DE LA APLICACIÓN")
    logger.info("=" * 60)

    try:
        ok = verificar()
    except Exception as e:
        logger.error("")
        logger.error("=" * 60)
        logger.error("❌ ERROR EN VERIFICACIÓN")
        logger.error("=" * 60)
        logger.error(f"Tipo: {type(e).__name__}")
        logger.error(f"Mensaje: {str(e)}")
        logger.error("")
        logger.error("Stack trace:", exc_info=True)
        sys.exit(1)

    logger.info("")
    logger.info("=" * 60)
    logger.info("✅ VERIFICACIÓN EXITOSA" if ok else "❌ ex5.8 NO REPRODUCIDO")
    logger.info("=" * 60)
    logger.info("La aplicación está lista para ser ejecutada con:")
    logger.info("  python run.py reproduce ex5.6")
    sys.exit(0 if ok else 1)
