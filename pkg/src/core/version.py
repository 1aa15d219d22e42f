"""
Información de versión de la aplicación
Sistema de control de versiones centralizado
"""

__version__ = "1.0.0"
APP_NAME = "Calculadora de Obstrucciones de Brauer-Manin"
BUILD_DATE = "2026-10-17"

# Información detallada de versión
VERSION_INFO = {
    'version': __version__,
    'app_name': APP_NAME,
    'build_date': BUILD_DATE,
    'description': (
        'Ordinariedad por conteo de puntos, mapas de evaluación p-ádicos, '
        'formas diferenciales en característica p y conductores de Swan'
    ),

    # Comandos disponibles en la línea de comandos
    'supported_commands': [
        'count', 'ordinary', 'evaluate', 'residue',
        'forms', 'kummer', 'verdict', 'reproduce'
    ]
}


def get_version_string() -> str:
    """Retorna la versión en formato legible"""
    return f"{APP_NAME} v{__version__}"


def get_full_version_info() -> dict:
    """Retorna información completa de la versión"""
    return VERSION_INFO.copy()
