"""
Cuerpos finitos F_p y F_{p^n}
"""

from .finite_field import CuerpoFinito, ElementoCuerpo, crear_cuerpo, operar

__all__ = ['CuerpoFinito', 'ElementoCuerpo', 'crear_cuerpo', 'operar']
