"""
Cuerpos de funciones en característica p: F_p(u, v) y extensiones monógenas
K = F_p(u, v)[w]/(m(w)) con m separable en w.

Los coeficientes viven en el cuerpo de fracciones de sympy `field("u,v", GF(p))`;
los elementos de K se guardan como listas de coeficientes en w de grado < deg m.
"""

import logging
from fractions import Fraction
from functools import cached_property
from typing import Dict, List, Optional, Sequence, Tuple

from sympy.polys.domains import GF
from sympy.polys.fields import field

from core.errors import ErrorCalculo

logger = logging.getLogger(__name__)


class ErrorFunciones(ErrorCalculo):
    """Error en la aritmética de cuerpos de funciones"""
    modulo = "charp_forms"


class ContextoFormasError(ErrorFunciones):
    """Operandos de contextos distintos"""
    pass


class NoInvertibleError(ErrorFunciones):
    """Elemento nulo o divisor de cero módulo m"""
    pass


# ---------------------------------------------------------------------------
# Polinomios en w con coeficientes en F (listas, grado creciente)
# ---------------------------------------------------------------------------

def _recortar(a: List) -> List:
    while a and not a[-1]:
        a.pop()
    return a


def _sumar(a: Sequence, b: Sequence, cero) -> List:
    n = max(len(a), len(b))
    return _recortar([(a[i] if i < len(a) else cero) + (b[i] if i < len(b) else cero) for i in range(n)])


def _escalar(a: Sequence, c) -> List:
    return _recortar([x * c for x in a])


def _multiplicar(a: Sequence, b: Sequence, cero) -> List:
    if not a or not b:
        return []
    res = [cero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            if y:
                res[i + j] = res[i + j] + x * y
    return _recortar(res)


def _dividir(a: Sequence, b: Sequence, cero) -> Tuple[List, List]:
    a = _recortar(list(a))
    b = _recortar(list(b))
    if not b:
        raise ZeroDivisionError("División por el polinomio nulo")
    cociente = [cero] * max(len(a) - len(b) + 1, 0)
    inv_lider = 1 / b[-1]
    while len(a) >= len(b) and a:
        grado = len(a) - len(b)
        factor = a[-1] * inv_lider
        cociente[grado] = factor
        for i, y in enumerate(b):
            a[grado + i] = a[grado + i] - factor * y
        _recortar(a)
    return _recortar(cociente), a


def _derivar_w(a: Sequence) -> List:
    return _recortar([a[j] * j for j in range(1, len(a))])


# ---------------------------------------------------------------------------
# Raíces p-ésimas y descomposición sobre F^p
# ---------------------------------------------------------------------------

def raiz_p_polinomio(poli, p: int):
    """Raíz p-ésima de un polinomio de F_p[u, v] cuyos exponentes son múltiplos de p"""
    terminos = {}
    for monomio, c in poli.terms():
        if any(e % p for e in monomio):
            raise ArithmeticError(f"{poli} no es una potencia p-ésima")
        terminos[tuple(e // p for e in monomio)] = c
    return poli.ring.from_dict(terminos) if terminos else poli.ring.zero


def descomponer_en_base(h, p: int) -> Dict[Tuple[int, int], object]:
    """
    h = Σ u^a v^b R_ab^p con 0 <= a, b < p; devuelve {(a, b): R_ab}.

    Se usa h = N/D = N·D^{p-1}/D^p y se reparte N·D^{p-1} según los exponentes módulo p.
    """
    F = h.field
    num = h.numer * h.denom ** (p - 1)
    partes: Dict[Tuple[int, int], dict] = {}
    for (e1, e2), c in num.terms():
        a, b = e1 % p, e2 % p
        partes.setdefault((a, b), {})[(e1 - a, e2 - b)] = c
    resultado = {}
    for clave, terminos in partes.items():
        raiz = raiz_p_polinomio(num.ring.from_dict(terminos), p)
        resultado[clave] = F.new(raiz, h.denom)
    return resultado


# ---------------------------------------------------------------------------
# Contexto y elementos
# ---------------------------------------------------------------------------

class ContextoFunciones:
    """
    K = F_p(u, v)[w]/(m). Sin extensión se toma m = w, de modo que K = F_p(u, v)
    y todo el código trata ambos casos igual.
    """

    def __init__(self, p: int, modulo: Optional[Sequence] = None, nombre: str = ""):
        self.p = p
        self.F, self.u, self.v = field("u,v", GF(p))
        if modulo is None:
            modulo = [self.F.zero, self.F.one]
            self.es_extension = False
        else:
            modulo = [self._coeficiente(c) for c in modulo]
            self.es_extension = True
        modulo = _recortar(list(modulo))
        if len(modulo) < 2:
            raise ValueError("El módulo debe tener grado >= 1 en w")
        lider = modulo[-1]
        self.modulo = [c / lider for c in modulo]
        self.grado = len(self.modulo) - 1
        self.nombre = nombre or (f"F_{p}(u,v)" if not self.es_extension else f"F_{p}(u,v)[w]/(m)")

        if not _derivar_w(self.modulo):
            raise ValueError("El módulo es inseparable en w")

    @classmethod
    def racional(cls, p: int) -> "ContextoFunciones":
        return cls(p)

    def __repr__(self) -> str:
        return f"<ContextoFunciones {self.nombre}>"

    # -- constructores de elementos --

    def elemento(self, coefs: Sequence) -> "FuncionRacional":
        return FuncionRacional(self, self._reducir([self._coeficiente(c) for c in coefs]))

    def _coeficiente(self, c):
        if isinstance(c, Fraction):
            return self.F(c.numerator % self.p) / self.F(c.denominator % self.p)
        if isinstance(c, int):
            return self.F(c % self.p)
        return c

    def constante(self, c) -> "FuncionRacional":
        if isinstance(c, Fraction) and c.denominator % self.p == 0:
            raise ValueError(f"{c} no es entero en p = {self.p}")
        return self.elemento([c])

    @property
    def cero(self) -> "FuncionRacional":
        return self.elemento([])

    @property
    def uno(self) -> "FuncionRacional":
        return self.elemento([1])

    @property
    def gen_u(self) -> "FuncionRacional":
        return self.elemento([self.u])

    @property
    def gen_v(self) -> "FuncionRacional":
        return self.elemento([self.v])

    @property
    def gen_w(self) -> "FuncionRacional":
        if not self.es_extension:
            raise ValueError("El contexto racional no tiene variable w")
        return self.elemento([self.F.zero, self.F.one])

    # -- aritmética interna --

    def _reducir(self, coefs: List) -> List:
        coefs = _recortar(list(coefs))
        if len(coefs) <= self.grado:
            return coefs
        _, resto = _dividir(coefs, self.modulo, self.F.zero)
        return resto

    def _inverso(self, coefs: List) -> List:
        """Euclides extendido en F[w] contra m"""
        r0, r1 = list(self.modulo), _recortar(list(coefs))
        s0, s1 = [], [self.F.one]
        if not r1:
            raise NoInvertibleError("Inverso de 0")
        while len(r1) > 1:
            q, r = _dividir(r0, r1, self.F.zero)
            r0, r1 = r1, r
            s0, s1 = s1, _sumar(s0, _escalar(_multiplicar(q, s1, self.F.zero), -self.F.one), self.F.zero)
            if not r1:
                raise NoInvertibleError("El elemento comparte factor con m")
        return self._reducir(_escalar(s1, 1 / r1[0]))

    @cached_property
    def derivadas_w(self) -> Tuple["FuncionRacional", "FuncionRacional"]:
        """(∂w/∂u, ∂w/∂v) = (-m_u/m_w, -m_v/m_w)"""
        if not self.es_extension:
            return self.cero, self.cero
        m_w = FuncionRacional(self, self._reducir(_derivar_w(self.modulo)))
        m_u = FuncionRacional(self, self._reducir([c.diff(self.u) for c in self.modulo]))
        m_v = FuncionRacional(self, self._reducir([c.diff(self.v) for c in self.modulo]))
        return -m_u / m_w, -m_v / m_w

    @cached_property
    def matriz_descomposicion(self) -> List[List]:
        """
        Inversa de la matriz (con raíces p-ésimas tomadas) cuyas columnas son
        u^a v^b w^{pc} en la base {u^a v^b w^j} de K sobre F^p.
        """
        p, D = self.p, self.grado
        indices = [(a, b, j) for a in range(p) for b in range(p) for j in range(D)]
        w = FuncionRacional(self, [self.F.zero, self.F.one]) if D > 1 else None
        columnas = []
        for a, b, c in indices:
            potencia = w ** (p * c) if w is not None else self.uno
            elem = potencia * FuncionRacional(self, [self.u ** a * self.v ** b])
            columnas.append(self.coordenadas_raiz(elem))
        n = len(indices)
        matriz = [[columnas[col][fila] for col in range(n)] for fila in range(n)]
        logger.debug(f"Invirtiendo la matriz de descomposición {n}x{n} en {self.nombre}")
        return _invertir(matriz, self.F.zero, self.F.one)

    def coordenadas_raiz(self, g: "FuncionRacional") -> List:
        """Raíces p-ésimas de las coordenadas de g sobre F^p en la base {u^a v^b w^j}"""
        p, D = self.p, self.grado
        coefs = list(g.coefs) + [self.F.zero] * (D - len(g.coefs))
        partes = [descomponer_en_base(c, p) if c else {} for c in coefs]
        return [partes[j].get((a, b), self.F.zero) for a in range(p) for b in range(p) for j in range(D)]

    def descomponer_potencias(self, g: "FuncionRacional") -> Dict[Tuple[int, int], "FuncionRacional"]:
        """g = Σ_{a,b<p} u^a v^b G_ab^p con G_ab en K"""
        p, D = self.p, self.grado
        vector = self.coordenadas_raiz(g)
        inversa = self.matriz_descomposicion
        solucion = []
        for fila in inversa:
            total = self.F.zero
            for x, y in zip(fila, vector):
                if x and y:
                    total = total + x * y
            solucion.append(total)
        resultado = {}
        k = 0
        for a in range(p):
            for b in range(p):
                resultado[(a, b)] = FuncionRacional(self, self._reducir(solucion[k:k + D]))
                k += D
        return resultado


def _invertir(matriz: List[List], cero, uno) -> List[List]:
    """Gauss-Jordan sobre un cuerpo genérico"""
    n = len(matriz)
    aumentada = [list(fila) + [uno if i == j else cero for j in range(n)] for i, fila in enumerate(matriz)]
    for col in range(n):
        pivote = next((f for f in range(col, n) if aumentada[f][col]), None)
        if pivote is None:
            raise NoInvertibleError("Matriz de descomposición singular: {u, v} no es una p-base")
        aumentada[col], aumentada[pivote] = aumentada[pivote], aumentada[col]
        inv = 1 / aumentada[col][col]
        aumentada[col] = [x * inv if x else x for x in aumentada[col]]
        for f in range(n):
            if f != col and aumentada[f][col]:
                factor = aumentada[f][col]
                aumentada[f] = [x - factor * y if y else x for x, y in zip(aumentada[f], aumentada[col])]
    return [fila[n:] for fila in aumentada]


class FuncionRacional:
    """Elemento de K: Σ c_j w^j con c_j en F_p(u, v) y j < deg m"""
    __slots__ = ("ctx", "coefs")

    def __init__(self, ctx: ContextoFunciones, coefs: Sequence):
        self.ctx = ctx
        self.coefs = tuple(_recortar(list(coefs)))

    def _comprobar(self, otro) -> Optional["FuncionRacional"]:
        if isinstance(otro, FuncionRacional):
            if otro.ctx is not self.ctx:
                raise ContextoFormasError(f"Funciones de {self.ctx} y {otro.ctx}")
            return otro
        if isinstance(otro, (int, Fraction)):
            return self.ctx.constante(otro)
        return None

    def es_cero(self) -> bool:
        return not self.coefs

    def __bool__(self) -> bool:
        return not self.es_cero()

    def __eq__(self, otro) -> bool:
        o = self._comprobar(otro)
        if o is None:
            return NotImplemented
        return (self - o).es_cero()

    __hash__ = None

    def __add__(self, otro):
        o = self._comprobar(otro)
        if o is None:
            return NotImplemented
        return FuncionRacional(self.ctx, _sumar(self.coefs, o.coefs, self.ctx.F.zero))

    __radd__ = __add__

    def __neg__(self):
        return FuncionRacional(self.ctx, [-c for c in self.coefs])

    def __sub__(self, otro):
        o = self._comprobar(otro)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, otro):
        return (-self) + otro

    def __mul__(self, otro):
        o = self._comprobar(otro)
        if o is None:
            return NotImplemented
        producto = _multiplicar(self.coefs, o.coefs, self.ctx.F.zero)
        return FuncionRacional(self.ctx, self.ctx._reducir(producto))

    __rmul__ = __mul__

    def inverso(self) -> "FuncionRacional":
        return FuncionRacional(self.ctx, self.ctx._inverso(list(self.coefs)))

    def __truediv__(self, otro):
        o = self._comprobar(otro)
        if o is None:
            return NotImplemented
        return self * o.inverso()

    def __rtruediv__(self, otro):
        return self.inverso() * otro

    def __pow__(self, k: int):
        if k < 0:
            return self.inverso() ** (-k)
        resultado = self.ctx.uno
        base = self
        while k:
            if k & 1:
                resultado = resultado * base
            base = base * base
            k >>= 1
        return resultado

    def derivada(self, variable: str) -> "FuncionRacional":
        """∂/∂u o ∂/∂v en K, con w función implícita de (u, v)"""
        ctx = self.ctx
        gen = ctx.u if variable == "u" else ctx.v
        directa = FuncionRacional(ctx, [c.diff(gen) for c in self.coefs])
        if not ctx.es_extension:
            return directa
        w_u, w_v = ctx.derivadas_w
        por_w = FuncionRacional(ctx, _derivar_w(self.coefs))
        return directa + por_w * (w_u if variable == "u" else w_v)

    def potencia_p(self) -> "FuncionRacional":
        return self ** self.ctx.p

    def __str__(self) -> str:
        if not self.coefs:
            return "0"
        partes = []
        for j, c in enumerate(self.coefs):
            if not c:
                continue
            monomio = "" if j == 0 else ("*w" if j == 1 else f"*w^{j}")
            partes.append(f"({c}){monomio}")
        return " + ".join(partes)

    __repr__ = __str__
