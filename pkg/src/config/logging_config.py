"""
Configuración de logging para la aplicación
"""

import logging
from datetime import datetime
from .constants import get_logs_dir


def setup_logging(nivel: int = logging.INFO, archivo: bool = True):
    """
    Configura el sistema de logging.

    Los mensajes van a standard error (el JSON del reporte ocupa standard output)
    y, si se pide, a un archivo con marca de tiempo en la carpeta de logs.
    """
    handlers = [logging.StreamHandler()]

    if archivo:
        logs_dir = get_logs_dir()
        log_file = logs_dir / f'calculos_brauer_{datetime.now().strftime("%Y%m%d_%H%M%S")}.log'
        handlers.insert(0, logging.FileHandler(log_file))

    logging.basicConfig(
        level=nivel,
        format='%(asctime)s - %(levelname)s - %(message)s',
        handlers=handlers,
        force=True
    )
    return logging.getLogger(__name__)
