"""
Utilidades de exportación
"""

from .excel_report import exportar_excel

__all__ = ['exportar_excel']
