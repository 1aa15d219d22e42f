"""
Calculadora de Obstrucciones de Brauer-Manin
Punto de entrada de la línea de comandos

El reporte JSON va a la salida estándar y los mensajes de log a la salida de error.
Códigos de salida: 0 correcto, 1 afirmación fallida, 2 error de entrada.
"""

import argparse
import json
import logging
import sys
from typing import List, Optional

from config.constants import ESCANEO_CONFIG
from config.logging_config import setup_logging
from core.errors import ErrorCalculo
from core.version import get_version_string
from cli.commands import OPCIONES_COMANDO, OrdenComando, ejecutar_comando
from cli.report import informe_error
from cli.reproduce import REPRODUCCIONES

logger = logging.getLogger(__name__)

SALIDA_OK = 0
SALIDA_FALLO = 1
SALIDA_ENTRADA = 2
SALIDA_INTERNA = 3

# Banderas sin valor; el resto de opciones toman un texto
BANDERAS = {'k3', 'sin-1-formas', 'h1-trivial'}

AYUDAS = {
    'poly': "polinomio homogéneo, p. ej. 'x^3*y + y^3*z + z^3*w + w^3*x + x*y*z*w'",
    'vars': "nombres de variables separados por comas (por defecto x,y,z,w)",
    'p': "primo",
    'n': "grado de la extensión F_{p^n} (en residue: lista '1,2')",
    'depths': "profundidades n separadas por comas",
    'symbol': "'f_num;f_den;g_num;g_den'",
    'family': "'ex5.7' o 'alpha:N'",
    'd': "entero libre de cuadrados para trabajar en Q_p(√d)",
    'depth': "profundidad de los discos residuales",
    'precision': "precisión de los levantamientos",
    'budget': "número de puntos a evaluar",
    'chart': "carta 'p,q' (x_p = 1, x_q algebraica)",
    'consistency': "pares de cartas 'p,q;p,q' a comparar",
    'curve1': "curva 'delta,a,b,c'",
    'curve2': "curva 'delta,a,b,c'",
    'e': "índice de ramificación",
    'reduction': "ordinary o nonOrdinary",
    'k3': "la fibra especial es una K3",
    'sin-1-formas': "H^0(Ω^1) = 0",
    'h1-trivial': "H^1(Z/p) = 0",
}


def crear_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="brauer", description=get_version_string())
    parser.add_argument("--version", action="version", version=get_version_string())
    parser.add_argument("--verbose", action="store_true", help="mensajes de depuración")
    parser.add_argument("--sin-log-archivo", action="store_true", help="no escribir el archivo de log")
    parser.add_argument("--xlsx", action="store_true", help="exportar además el reporte a Excel")

    sub = parser.add_subparsers(dest="comando", required=True)
    for nombre, (obligatorias, opcionales) in OPCIONES_COMANDO.items():
        p = sub.add_parser(nombre)
        p.add_argument("--seed", dest="seed", type=int, default=ESCANEO_CONFIG['semilla'],
                       help="semilla de los barridos aleatorios")
        if nombre == 'reproduce':
            p.add_argument("id", choices=sorted(REPRODUCCIONES), help="ejemplo a reproducir")
            continue
        for opcion in sorted(obligatorias | opcionales):
            if opcion in BANDERAS:
                p.add_argument(f"--{opcion}", dest=opcion, action="store_true", help=AYUDAS.get(opcion))
            else:
                p.add_argument(f"--{opcion}", dest=opcion, required=opcion in obligatorias,
                               help=AYUDAS.get(opcion))
    return parser


def orden_desde_args(args: argparse.Namespace) -> OrdenComando:
    valores = vars(args)
    obligatorias, opcionales = OPCIONES_COMANDO[args.comando]
    opciones = {'seed': str(args.seed)}
    for opcion in obligatorias | opcionales:
        valor = valores.get(opcion)
        if opcion in BANDERAS:
            if valor:
                opciones[opcion] = "true"
        elif valor is not None:
            opciones[opcion] = str(valor)
    return OrdenComando(args.comando, opciones)


def main(argv: Optional[List[str]] = None) -> int:
    args = crear_parser().parse_args(argv)
    setup_logging(logging.DEBUG if args.verbose else logging.INFO, archivo=not args.sin_log_archivo)
    logger.info(f"Iniciando {get_version_string()}")

    try:
        orden = orden_desde_args(args)
        informe = ejecutar_comando(orden)
    except (ErrorCalculo, ValueError) as e:
        logger.error(f"Error en '{args.comando}': {e}", exc_info=args.verbose)
        print(json.dumps(informe_error(args.comando, e), indent=2, sort_keys=True, ensure_ascii=False))
        return SALIDA_ENTRADA
    except Exception as e:
        # el 1 queda para afirmaciones fallidas
        logger.exception(f"Error interno en '{args.comando}': {e}")
        print(json.dumps(informe_error(args.comando, e), indent=2, sort_keys=True, ensure_ascii=False))
        return SALIDA_INTERNA

    if args.xlsx:
        from utils.excel_report import exportar_excel
        informe.diagnosticos['excel'] = str(exportar_excel(informe.como_dict()))

    print(informe.a_json())
    return SALIDA_OK if informe.aprobado else SALIDA_FALLO


if __name__ == "__main__":
    sys.exit(main())
