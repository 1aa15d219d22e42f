"""
Módulo core con la versión y la excepción base
"""

from .version import __version__, APP_NAME, VERSION_INFO
from .errors import ErrorCalculo

__all__ = ['__version__', 'APP_NAME', 'VERSION_INFO', 'ErrorCalculo']
