"""
Constantes y configuración para los cálculos de obstrucciones de Brauer–Manin
"""

import os
from pathlib import Path
from datetime import datetime

# Primos para los que se construyen cuerpos finitos
PRIMOS_SOPORTADOS = (2, 3, 5, 7)

# Grado máximo para el que existe módulo por defecto (tabla o búsqueda)
GRADO_MAXIMO_TABLA = 4

# Módulos irreducibles predefinidos: (p, n) -> coeficientes de menor a mayor grado
MODULOS_PREDEFINIDOS = {
    (2, 2): (1, 1, 1),        # t^2 + t + 1
    (2, 3): (1, 1, 0, 1),     # t^3 + t + 1
    (2, 4): (1, 1, 0, 0, 1),  # t^4 + t + 1
    (3, 2): (1, 0, 1),        # t^2 + 1
    (5, 2): (2, 0, 1),        # t^2 + 2
}

# Profundidades n de F_{p^n} usadas por el criterio de conteo
PROFUNDIDADES_DEFECTO = (1, 2)

# Parámetros de los barridos de evaluación
ESCANEO_CONFIG = {
    'profundidad_disco': 4,
    'precision': 12,
    'presupuesto': 200,
    'semilla': 0,
    # Muestras aleatorias adicionales dentro de los discos cuando sobra presupuesto
    'max_muestras_extra': 400,
}

PADIC_CONFIG = {
    # Margen sobre la valoración para leer la clase de cuadrados
    'margen_q2': 3,
    'margen_impar': 1,
    # La profundidad del oráculo es al menos 2e + desplazamiento
    'desplazamiento_oraculo': 3,
    'max_iteraciones_newton': 64,
}

KUMMER_CONFIG = {
    'precision_raices': 40,
    # Valores impresos en el ejemplo trabajado (se comparan, no se adoptan)
    'gamma2_impreso': -21,
    'fila1_impresa': (1, 63, 63, -9),
}

REPORTE_CONFIG = {
    'version_esquema': '1.0',
    'indentacion': 2,
    'color_encabezado': '366092',
    'subcarpeta_excel': 'reportes',
}

# Superficies de los ejemplos (texto en la gramática del CLI)
SUPERFICIES_EJEMPLO = {
    'ex5.7': 'x^3*y + y^3*z + z^3*w + w^3*x + x*y*z*w',
    'thm7.2:fibra_ordinaria': 'x^3*y + y^3*z + z^3*w + w^4 + x*y*z*w',
    'thm7.2:fibra_2mod4': 'x^3*y + y^3*z + z^3*w + w^4',
    'thm7.2:fibra_0mod4': 'x^3*y + y^3*z + z^3*w + w^4 + x*z*w^2',
    'ex5.9': 'x^4 - 4*y^4 - z^4 - w^4',
    'sec6.4': 'x^4 - y^4 - 4*z^4 + w^4',
}

VARIABLES_DEFECTO = ('x', 'y', 'z', 'w')


def get_app_data_dir() -> Path:
    """
    Retorna el directorio base para datos de la aplicación según el sistema operativo.
    En Windows usa APPDATA para evitar problemas de permisos.

    Returns:
        Path al directorio base de datos de la aplicación
    """
    if os.name == 'nt':  # Windows
        appdata = Path(os.environ.get('APPDATA', '.'))
        app_dir = appdata / 'ObstruccionBrauer'
    else:
        app_dir = Path('.')

    app_dir.mkdir(parents=True, exist_ok=True)
    return app_dir


def get_logs_dir() -> Path:
    """
    Retorna el directorio para logs de la aplicación.

    Returns:
        Path al directorio de logs
    """
    if os.name == 'nt':
        logs_dir = get_app_data_dir() / 'logs'
    else:
        logs_dir = Path('logs')

    logs_dir.mkdir(parents=True, exist_ok=True)
    return logs_dir


def get_data_dir() -> Path:
    """
    Retorna el directorio base para los reportes exportados.

    Returns:
        Path al directorio de datos
    """
    if os.name == 'nt':
        data_dir = get_app_data_dir() / 'data'
    else:
        data_dir = Path('data')

    data_dir.mkdir(parents=True, exist_ok=True)
    return data_dir


def get_data_output_path(subfolder: str = "") -> Path:
    """
    Crea y retorna la ruta de salida para reportes.
    Estructura: data/YYYY-MM-DD/subfolder/

    Args:
        subfolder: Subcarpeta opcional dentro de la fecha

    Returns:
        Path a la carpeta de salida
    """
    data_dir = get_data_dir()

    today = datetime.now().strftime('%Y-%m-%d')
    date_dir = data_dir / today
    date_dir.mkdir(exist_ok=True)

    if subfolder:
        output_dir = date_dir / subfolder
        output_dir.mkdir(exist_ok=True)
        return output_dir

    return date_dir
