"""
Evaluación de álgebras de Brauer, filtración de Swan y descenso en superficies de Kummer
"""

from .brauer_eval import (
    ParSimbolo, InformeEvaluacion, evaluar_simbolo, barrer_evaluacion, sondear_residuo,
    superficie_cuartica_ciclica, superficie_familia_alfa
)
from .swan import (
    FormaLocal, SimboloCiclico, ParRsw, crear_forma_local, rsw_ciclico, residuo_fil0,
    rsw_potencia_tensorial, rsw_cambio_base, veredicto_rol
)
from .kummer import (
    ParametrosCurva, DatosTorsion, CurvaLegendre, MatrizDescenso, dos_torsion,
    transformada_legendre, construir_matriz_descenso, verificar_descenso, simbolo_azumaya
)

__all__ = [
    'ParSimbolo', 'InformeEvaluacion', 'evaluar_simbolo', 'barrer_evaluacion', 'sondear_residuo',
    'superficie_cuartica_ciclica', 'superficie_familia_alfa',
    'FormaLocal', 'SimboloCiclico', 'ParRsw', 'crear_forma_local', 'rsw_ciclico', 'residuo_fil0',
    'rsw_potencia_tensorial', 'rsw_cambio_base', 'veredicto_rol',
    'ParametrosCurva', 'DatosTorsion', 'CurvaLegendre', 'MatrizDescenso', 'dos_torsion',
    'transformada_legendre', 'construir_matriz_descenso', 'verificar_descenso', 'simbolo_azumaya'
]
