"""
Polinomios homogéneos y superficies sobre cuerpos finitos
"""

from .polynomials import PolinomioHomogeneo, parsear_polinomio
from .surface_fp import (
    PuntoProyectivo, InformeOrdinariedad, contar_puntos, es_k3_ordinaria, semillas_lisas, puntos_en
)

__all__ = [
    'PolinomioHomogeneo', 'parsear_polinomio', 'PuntoProyectivo', 'InformeOrdinariedad',
    'contar_puntos', 'es_k3_ordinaria', 'semillas_lisas', 'puntos_en'
]
