"""
Polinomios homogéneos en x, y, z, w con coeficientes exactos (racionales o en Q(√d)),
y su lectura desde texto
"""

import logging
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from config.constants import VARIABLES_DEFECTO
from core.errors import ErrorCalculo

logger = logging.getLogger(__name__)

Exponentes = Tuple[int, ...]


class ErrorPolinomio(ErrorCalculo):
    """Error al construir o leer un polinomio"""
    modulo = "cli"


class PolinomioInvalidoError(ErrorPolinomio):
    """Polinomio nulo o con términos de grados distintos a los declarados"""
    modulo = "surface_fp"


class ErrorSintaxisPolinomio(ErrorPolinomio):
    """Texto que no respeta la gramática; incluye la posición"""

    def __init__(self, mensaje: str, posicion: int):
        super().__init__(f"{mensaje} (posición {posicion})")
        self.posicion = posicion


class NoHomogeneoError(ErrorPolinomio):
    """Los términos no tienen todos el mismo grado"""
    pass


class VariableDesconocidaError(ErrorPolinomio):
    """Variable fuera del conjunto declarado"""
    pass


def _normalizar_coeficiente(c):
    """Fraction siempre que el coeficiente sea racional; a + b√d con b ≠ 0 se conserva"""
    if isinstance(c, (int, Fraction, str)):
        return Fraction(c)
    if hasattr(c, "d") and hasattr(c, "b"):
        return c.a if c.b == 0 else c
    return Fraction(c)


@dataclass(frozen=True)
class PolinomioHomogeneo:
    """
    Polinomio homogéneo: términos ordenados (exponentes, coeficiente) y grado total.
    Nunca es el polinomio nulo.
    """
    terminos: Tuple[Tuple[Exponentes, Fraction], ...]
    grado: int
    variables: Tuple[str, ...] = VARIABLES_DEFECTO

    @classmethod
    def desde_dict(cls, coeficientes: Dict[Exponentes, object],
                   variables: Sequence[str] = VARIABLES_DEFECTO) -> "PolinomioHomogeneo":
        limpios = {}
        for exps, c in coeficientes.items():
            c = _normalizar_coeficiente(c)
            if c == 0:
                continue
            if len(exps) != len(variables):
                raise PolinomioInvalidoError(f"Exponentes {exps} no corresponden a {len(variables)} variables")
            limpios[tuple(exps)] = limpios.get(tuple(exps), Fraction(0)) + c
        limpios = {e: _normalizar_coeficiente(c) for e, c in limpios.items() if c != 0}
        if not limpios:
            raise PolinomioInvalidoError("El polinomio nulo no define una superficie")
        grados = {sum(e) for e in limpios}
        if len(grados) != 1:
            raise PolinomioInvalidoError(f"Términos de grados distintos: {sorted(grados)}")
        terminos = tuple(sorted(limpios.items(), key=lambda t: t[0], reverse=True))
        return cls(terminos, grados.pop(), tuple(variables))

    def como_dict(self) -> Dict[Exponentes, Fraction]:
        return dict(self.terminos)

    @property
    def nvars(self) -> int:
        return len(self.variables)

    @property
    def es_racional(self) -> bool:
        return all(isinstance(c, Fraction) for _, c in self.terminos)

    def es_entero(self) -> bool:
        return self.es_racional and all(c.denominator == 1 for _, c in self.terminos)

    def _exigir_racional(self):
        if not self.es_racional:
            raise PolinomioInvalidoError(f"{self} tiene coeficientes irracionales: redúzcalo en el cuerpo local")

    def coeficientes_mod(self, p: int) -> Dict[Exponentes, int]:
        """Reducción coeficiente a coeficiente módulo p (sin los que se anulan)"""
        self._exigir_racional()
        reducidos = {}
        for exps, c in self.terminos:
            if c.denominator % p == 0:
                raise PolinomioInvalidoError(f"El coeficiente {c} no es entero en p = {p}")
            valor = c.numerator * pow(c.denominator, -1, p) % p
            if valor:
                reducidos[exps] = valor
        return reducidos

    def derivada(self, i: int) -> Optional["PolinomioHomogeneo"]:
        """Derivada parcial respecto a la variable i (None si es idénticamente nula)"""
        nuevos = {}
        for exps, c in self.terminos:
            if exps[i] == 0:
                continue
            e = list(exps)
            e[i] -= 1
            nuevos[tuple(e)] = c * exps[i]
        nuevos = {e: c for e, c in nuevos.items() if c != 0}
        if not nuevos:
            return None
        return PolinomioHomogeneo.desde_dict(nuevos, self.variables)

    def evaluar(self, valores: Sequence, coeficiente: Callable[[Fraction], object] = lambda c: c):
        """
        Evalúa en `valores` con la aritmética de esos objetos; `coeficiente`
        convierte cada coeficiente racional al anillo de los valores.
        """
        total = None
        for exps, c in self.terminos:
            termino = coeficiente(c)
            for v, e in zip(valores, exps):
                if e:
                    termino = termino * (v ** e)
            total = termino if total is None else total + termino
        return total

    def evaluar_en(self, ctx, coords: Sequence):
        """Valor en un punto con coordenadas en el cuerpo finito `ctx` (coeficientes reducidos)"""
        self._exigir_racional()
        p = ctx.p
        return self.evaluar(coords, lambda c: ctx.desde_entero(c.numerator * pow(c.denominator, -1, p)))

    def __mul__(self, otro: "PolinomioHomogeneo") -> "PolinomioHomogeneo":
        if not isinstance(otro, PolinomioHomogeneo):
            return NotImplemented
        producto: Dict[Exponentes, Fraction] = {}
        for e1, c1 in self.terminos:
            for e2, c2 in otro.terminos:
                clave = tuple(a + b for a, b in zip(e1, e2))
                producto[clave] = producto.get(clave, Fraction(0)) + c1 * c2
        return PolinomioHomogeneo.desde_dict(producto, self.variables)

    def permutar(self, permutacion: Sequence[int]) -> "PolinomioHomogeneo":
        """Polinomio f(x_{perm[0]}, ..., x_{perm[3]})"""
        nuevos = {}
        for exps, c in self.terminos:
            e = [0] * self.nvars
            for i, k in enumerate(permutacion):
                e[k] += exps[i]
            nuevos[tuple(e)] = c
        return PolinomioHomogeneo.desde_dict(nuevos, self.variables)

    def __str__(self) -> str:
        partes = []
        for exps, c in self.terminos:
            monomio = "*".join(
                v if e == 1 else f"{v}^{e}" for v, e in zip(self.variables, exps) if e
            )
            if not isinstance(c, Fraction):
                partes.append(("+", f"({c})*{monomio}" if monomio else f"({c})"))
                continue
            absoluto = abs(c)
            signo = "-" if c < 0 else "+"
            if not monomio:
                cuerpo = str(absoluto)
            elif absoluto == 1:
                cuerpo = monomio
            else:
                cuerpo = f"{absoluto}*{monomio}"
            partes.append((signo, cuerpo))

        texto = ("-" if partes[0][0] == "-" else "") + partes[0][1]
        for signo, cuerpo in partes[1:]:
            texto += f" {signo} {cuerpo}"
        return texto


# ---------------------------------------------------------------------------
# Lectura desde texto
# ---------------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\S))")


def _tokenizar(texto: str) -> List[Tuple[str, str, int]]:
    tokens = []
    pos = 0
    texto = texto.replace("−", "-")
    while pos < len(texto):
        m = _TOKEN.match(texto, pos)
        if not m or m.end() == pos:
            break
        if m.group(1) is not None:
            tokens.append(("num", m.group(1), m.start(1)))
        elif m.group(2) is not None:
            tokens.append(("id", m.group(2), m.start(2)))
        elif m.group(3) is not None:
            simbolo = m.group(3)
            if simbolo not in "+-*/^":
                raise ErrorSintaxisPolinomio(f"Carácter inesperado '{simbolo}'", m.start(3))
            tokens.append(("op", simbolo, m.start(3)))
        pos = m.end()
    return tokens


def _separar_identificador(ident: str, variables: Sequence[str], posicion: int) -> List[str]:
    """Divide 'xyzw' en variables declaradas (coincidencia más larga primero)"""
    if ident in variables:
        return [ident]
    ordenadas = sorted(variables, key=len, reverse=True)
    resultado = []
    resto = ident
    while resto:
        for v in ordenadas:
            if resto.startswith(v):
                resultado.append(v)
                resto = resto[len(v):]
                break
        else:
            raise VariableDesconocidaError(f"Variable desconocida '{ident}' (posición {posicion})")
    return resultado


def parsear_polinomio(texto: str, variables: Sequence[str] = VARIABLES_DEFECTO,
                      grado_esperado: Optional[int] = None) -> PolinomioHomogeneo:
    """
    Lee un polinomio homogéneo.

    Gramática: términos unidos por + o -, cada uno con coeficiente racional opcional
    (entero o entero/entero), '*' opcional y variables con exponentes '^' opcionales.
    """
    tokens = _tokenizar(texto)
    if not tokens:
        raise ErrorSintaxisPolinomio("Texto vacío", 0)

    coeficientes: Dict[Exponentes, Fraction] = {}
    i = 0
    primero = True

    def actual():
        return tokens[i] if i < len(tokens) else None

    while i < len(tokens):
        signo = 1
        tok = actual()
        if tok[0] == "op" and tok[1] in "+-":
            signo = -1 if tok[1] == "-" else 1
            i += 1
        elif not primero:
            raise ErrorSintaxisPolinomio(f"Se esperaba '+' o '-' antes de '{tok[1]}'", tok[2])
        primero = False

        tok = actual()
        if tok is None:
            raise ErrorSintaxisPolinomio("Término vacío al final", len(texto))

        coef = Fraction(1)
        hay_coef = False
        if tok[0] == "num":
            coef = Fraction(int(tok[1]))
            hay_coef = True
            i += 1
            tok = actual()
            if tok is not None and tok[0] == "op" and tok[1] == "/":
                i += 1
                tok = actual()
                if tok is None or tok[0] != "num":
                    raise ErrorSintaxisPolinomio("Denominador inválido", tok[2] if tok else len(texto))
                if int(tok[1]) == 0:
                    raise ErrorSintaxisPolinomio("Denominador cero", tok[2])
                coef /= int(tok[1])
                i += 1

        exps = [0] * len(variables)
        hay_variable = False
        while True:
            tok = actual()
            if tok is None:
                break
            if tok[0] == "op" and tok[1] == "*":
                i += 1
                tok = actual()
                if tok is None or tok[0] != "id":
                    raise ErrorSintaxisPolinomio("Se esperaba una variable tras '*'",
                                                 tok[2] if tok else len(texto))
            if tok[0] != "id":
                break
            nombres = _separar_identificador(tok[1], variables, tok[2])
            i += 1
            exponente = 1
            siguiente = actual()
            if siguiente is not None and siguiente[0] == "op" and siguiente[1] == "^":
                i += 1
                siguiente = actual()
                if siguiente is None or siguiente[0] != "num":
                    raise ErrorSintaxisPolinomio("Exponente inválido",
                                                 siguiente[2] if siguiente else len(texto))
                exponente = int(siguiente[1])
                i += 1
            for nombre in nombres[:-1]:
                exps[variables.index(nombre)] += 1
            exps[variables.index(nombres[-1])] += exponente
            hay_variable = True

        if not hay_coef and not hay_variable:
            tok = actual()
            raise ErrorSintaxisPolinomio("Término sin coeficiente ni variables",
                                         tok[2] if tok else len(texto))

        clave = tuple(exps)
        coeficientes[clave] = coeficientes.get(clave, Fraction(0)) + signo * coef

    grados = {sum(e) for e, c in coeficientes.items() if c != 0}
    if len(grados) > 1:
        raise NoHomogeneoError(f"Términos de grados {sorted(grados)} en '{texto}'")
    if grado_esperado is not None and grados and grados != {grado_esperado}:
        raise NoHomogeneoError(f"Se esperaba grado {grado_esperado} y se obtuvo {grados.pop()}")

    return PolinomioHomogeneo.desde_dict(coeficientes, variables)
