"""
Formas diferenciales en característica p y operador de Cartier
"""

from .function_field import ContextoFunciones, FuncionRacional
from .charp_forms import (
    FormaDiferencial, algebra_formas, cartier, cartier_inverso, clasificar_forma,
    contexto_carta, forma_carta_k3
)

__all__ = [
    'ContextoFunciones', 'FuncionRacional', 'FormaDiferencial', 'algebra_formas', 'cartier',
    'cartier_inverso', 'clasificar_forma', 'contexto_carta', 'forma_carta_k3'
]
