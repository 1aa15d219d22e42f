"""
Lectura de las opciones de texto del CLI: polinomios, curvas, listas de enteros,
cartas y símbolos.
"""

from typing import List, Optional, Sequence, Tuple

from config.constants import VARIABLES_DEFECTO
from geometry.polynomials import PolinomioHomogeneo, parsear_polinomio

__all__ = [
    'parsear_polinomio', 'leer_polinomio', 'leer_variables', 'leer_enteros',
    'leer_carta', 'leer_pares', 'leer_simbolo',
]


def leer_variables(texto: Optional[str]) -> Tuple[str, ...]:
    if not texto:
        return VARIABLES_DEFECTO
    variables = tuple(v.strip() for v in texto.split(",") if v.strip())
    if len(variables) != len(set(variables)):
        raise ValueError(f"Variables repetidas: {texto}")
    return variables


def leer_polinomio(texto: str, variables: Optional[str] = None,
                   grado: Optional[int] = None) -> PolinomioHomogeneo:
    return parsear_polinomio(texto, leer_variables(variables), grado)


def leer_enteros(texto: str) -> List[int]:
    """"1,2" -> [1, 2]"""
    try:
        return [int(t) for t in texto.split(",") if t.strip()]
    except ValueError as e:
        raise ValueError(f"Lista de enteros inválida: '{texto}'") from e


def leer_carta(texto: str) -> Tuple[int, int]:
    valores = leer_enteros(texto)
    if len(valores) != 2:
        raise ValueError(f"Una carta son dos índices: '{texto}'")
    return valores[0], valores[1]


def leer_pares(texto: str) -> List[Tuple[int, int]]:
    """"0,1;0,2" -> [(0, 1), (0, 2)]"""
    return [leer_carta(t) for t in texto.split(";") if t.strip()]


def leer_simbolo(texto: str) -> Sequence[str]:
    """"f_num;f_den;g_num;g_den" -> los cuatro textos"""
    partes = [t.strip() for t in texto.split(";")]
    if len(partes) != 4 or not all(partes):
        raise ValueError(f"Un símbolo son cuatro polinomios separados por ';': '{texto}'")
    return partes
