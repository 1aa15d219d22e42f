"""
Línea de comandos: lectura de opciones, despacho, reportes y reproducción de ejemplos
"""

from .report import Informe, a_serializable, informe_error
from .commands import (
    OrdenComando, ejecutar_comando, ComandoDesconocidoError, OpcionDesconocidaError
)
from .reproduce import REPRODUCCIONES, reproducir

__all__ = [
    'Informe', 'a_serializable', 'informe_error', 'OrdenComando', 'ejecutar_comando',
    'ComandoDesconocidoError', 'OpcionDesconocidaError', 'REPRODUCCIONES', 'reproducir'
]
