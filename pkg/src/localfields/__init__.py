"""
Cuerpos locales: Q_p y extensiones cuadráticas
"""

from .padic import (
    CuerpoLocal, ValorPadico, ClaseCuadrado, PuntoSuperficiePadico,
    descomponer, es_cuadrado, oraculo_isotropia, simbolo_hilbert, levantar_hensel
)

__all__ = [
    'CuerpoLocal', 'ValorPadico', 'ClaseCuadrado', 'PuntoSuperficiePadico',
    'descomponer', 'es_cuadrado', 'oraculo_isotropia', 'simbolo_hilbert', 'levantar_hensel'
]
