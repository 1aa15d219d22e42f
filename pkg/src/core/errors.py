"""
Excepción base de los módulos de cálculo
"""


class ErrorCalculo(Exception):
    """Error de un módulo de cálculo; `modulo` identifica el origen en los reportes"""
    modulo = "core"
