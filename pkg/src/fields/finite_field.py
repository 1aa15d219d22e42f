"""
Aritmética exacta en F_p y F_{p^n} para primos y grados pequeños

Los elementos son valores inmutables ligados explícitamente a su contexto
(no hay registro global de cuerpos). Para la enumeración masiva de puntos se
generan tablas de suma, producto y potencias sobre la codificación por índice
i = c_0 + c_1 p + ... + c_{n-1} p^{n-1}.
"""

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, List, Optional, Sequence, Tuple, Union

import numpy as np

from config.constants import GRADO_MAXIMO_TABLA, MODULOS_PREDEFINIDOS, PRIMOS_SOPORTADOS
from core.errors import ErrorCalculo

logger = logging.getLogger(__name__)


class ErrorCuerpoFinito(ErrorCalculo):
    """Error en la aritmética de cuerpos finitos"""
    modulo = "finite_field"


class ModuloReducibleError(ErrorCuerpoFinito):
    """El módulo dado no es irreducible sobre F_p"""
    pass


class TamanoNoSoportadoError(ErrorCuerpoFinito):
    """Primo o grado fuera del rango soportado"""
    pass


class DivisionPorCeroError(ErrorCuerpoFinito):
    """Inverso de cero"""
    pass


class ContextoIncompatibleError(ErrorCuerpoFinito):
    """Operandos de cuerpos distintos"""
    pass


# ---------------------------------------------------------------------------
# Polinomios en una variable sobre F_p (listas de coeficientes, grado creciente)
# ---------------------------------------------------------------------------

def _recortar(a: List[int]) -> List[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _restar(a: List[int], b: List[int], p: int) -> List[int]:
    n = max(len(a), len(b))
    res = [((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n)]
    return _recortar(res)


def _multiplicar(a: List[int], b: List[int], p: int) -> List[int]:
    if not a or not b:
        return []
    res = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                res[i + j] = (res[i + j] + ai * bj) % p
    return _recortar(res)


def _resto(a: List[int], b: List[int], p: int) -> List[int]:
    a = _recortar(list(a))
    b = _recortar(list(b))
    inv_lider = pow(b[-1], -1, p)
    while len(a) >= len(b):
        factor = a[-1] * inv_lider % p
        desplazamiento = len(a) - len(b)
        for i, bi in enumerate(b):
            a[desplazamiento + i] = (a[desplazamiento + i] - factor * bi) % p
        _recortar(a)
    return a


def _mcd(a: List[int], b: List[int], p: int) -> List[int]:
    a = _recortar(list(a))
    b = _recortar(list(b))
    while b:
        a, b = b, _resto(a, b, p)
    if a:
        inv = pow(a[-1], -1, p)
        a = [c * inv % p for c in a]
    return a


def _potencia_mod(base: List[int], exponente: int, modulo: List[int], p: int) -> List[int]:
    resultado = [1]
    base = _resto(base, modulo, p)
    while exponente:
        if exponente & 1:
            resultado = _resto(_multiplicar(resultado, base, p), modulo, p)
        base = _resto(_multiplicar(base, base, p), modulo, p)
        exponente >>= 1
    return resultado


def es_irreducible(modulo: Sequence[int], p: int) -> bool:
    """
    Prueba de irreducibilidad: mcd(m, t^{p^k} - t) = 1 para k <= n/2.

    Un factor de grado k <= n/2 tendría sus raíces en F_{p^k}, y por tanto
    dividiría a t^{p^k} - t.
    """
    m = _recortar([c % p for c in modulo])
    n = len(m) - 1
    if n < 1:
        return False
    if n == 1:
        return True

    t = [0, 1]
    x = t
    for _ in range(1, n // 2 + 1):
        x = _potencia_mod(x, p, m, p)
        if len(_mcd(m, _restar(x, t, p), p)) > 1:
            return False
    return True


def _buscar_modulo(p: int, n: int) -> Tuple[int, ...]:
    """Primer polinomio mónico irreducible de grado n en el orden de los índices"""
    for indice in range(p ** n):
        coefs = []
        resto = indice
        for _ in range(n):
            resto, c = divmod(resto, p)
            coefs.append(c)
        candidato = tuple(coefs) + (1,)
        if es_irreducible(candidato, p):
            return candidato
    raise TamanoNoSoportadoError(f"No existe módulo irreducible para ({p}, {n})")


# ---------------------------------------------------------------------------
# Contexto y elementos
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TablasCuerpo:
    """Tablas de operaciones sobre índices de elementos, para enumeraciones vectorizadas"""
    q: int
    suma: np.ndarray
    producto: np.ndarray
    opuesto: np.ndarray
    inverso: np.ndarray
    logaritmo: np.ndarray
    exponencial: np.ndarray
    cuadrados: np.ndarray

    def potencia(self, exponente: int) -> np.ndarray:
        """Vector con a^exponente para cada índice a (0^0 = 1)"""
        if exponente == 0:
            return np.ones(self.q, dtype=np.int64)
        res = self.exponencial[(self.logaritmo * exponente) % (self.q - 1)]
        res = res.copy()
        res[0] = 0
        return res


@dataclass(frozen=True)
class CuerpoFinito:
    """Contexto F_{p^n} = F_p[t]/(modulo); modulo mónico, grado creciente"""
    p: int
    n: int
    modulo: Tuple[int, ...]

    @property
    def q(self) -> int:
        return self.p ** self.n

    def __str__(self) -> str:
        return f"F_{self.q}" if self.n > 1 else f"F_{self.p}"

    # -- construcción de elementos --

    def elemento(self, coefs: Sequence[int]) -> "ElementoCuerpo":
        """Elemento a partir de coeficientes en t (se reduce módulo el polinomio)"""
        lista = [c % self.p for c in coefs]
        if len(lista) > self.n:
            lista = _resto(lista, list(self.modulo), self.p)
        lista = lista + [0] * (self.n - len(lista))
        return ElementoCuerpo(self, tuple(lista))

    def desde_entero(self, k: int) -> "ElementoCuerpo":
        return self.elemento([k % self.p])

    def desde_indice(self, indice: int) -> "ElementoCuerpo":
        coefs = []
        for _ in range(self.n):
            indice, c = divmod(indice, self.p)
            coefs.append(c)
        return ElementoCuerpo(self, tuple(coefs))

    @property
    def cero(self) -> "ElementoCuerpo":
        return self.desde_entero(0)

    @property
    def uno(self) -> "ElementoCuerpo":
        return self.desde_entero(1)

    @property
    def generador(self) -> "ElementoCuerpo":
        """La clase de t (igual a 0 cuando n = 1 y el módulo es t)"""
        return self.elemento([0, 1])

    def elementos(self) -> Iterator["ElementoCuerpo"]:
        """Todos los elementos en orden de índice"""
        for i in range(self.q):
            yield self.desde_indice(i)

    def es_cuadrado(self, a: "ElementoCuerpo") -> bool:
        """Cuadrado no nulo de F_q"""
        if a.es_cero():
            return False
        if self.p == 2:
            return True
        return (a ** ((self.q - 1) // 2)) == self.uno

    @cached_property
    def primitivo(self) -> "ElementoCuerpo":
        """Primer elemento (por índice) que genera el grupo multiplicativo"""
        orden = self.q - 1
        primos = [r for r in range(2, orden + 1) if orden % r == 0 and all(r % s for s in range(2, r))]
        for candidato in self.elementos():
            if candidato.es_cero():
                continue
            if all(candidato ** (orden // r) != self.uno for r in primos):
                return candidato
        raise ErrorCuerpoFinito(f"Sin elemento primitivo en {self}")

    @cached_property
    def tablas(self) -> TablasCuerpo:
        """Tablas de índices (suma por dígitos, producto por logaritmos discretos)"""
        q, p, n = self.q, self.p, self.n
        logger.debug(f"Construyendo tablas de {self}")

        indices = np.arange(q)
        digitos = np.stack([(indices // p ** k) % p for k in range(n)], axis=1)
        pesos = p ** np.arange(n)
        suma = (((digitos[:, None, :] + digitos[None, :, :]) % p) * pesos).sum(axis=2)
        opuesto = (((-digitos) % p) * pesos).sum(axis=1)

        exponencial = np.zeros(q - 1, dtype=np.int64)
        logaritmo = np.zeros(q, dtype=np.int64)
        g = self.primitivo
        actual = self.uno
        for k in range(q - 1):
            exponencial[k] = actual.indice
            logaritmo[actual.indice] = k
            actual = actual * g

        log_a = logaritmo[:, None]
        log_b = logaritmo[None, :]
        producto = exponencial[(log_a + log_b) % (q - 1)]
        producto[0, :] = 0
        producto[:, 0] = 0

        inverso = exponencial[(-logaritmo) % (q - 1)]
        inverso[0] = 0

        if p == 2:
            cuadrados = np.ones(q, dtype=bool)
        else:
            cuadrados = (logaritmo % 2) == 0
        cuadrados[0] = False

        return TablasCuerpo(q, suma.astype(np.int64), producto.astype(np.int64),
                            opuesto.astype(np.int64), inverso.astype(np.int64),
                            logaritmo, exponencial, cuadrados)


@dataclass(frozen=True)
class ElementoCuerpo:
    """Elemento inmutable de F_{p^n}: coeficientes del representante reducido"""
    ctx: CuerpoFinito
    coefs: Tuple[int, ...]

    def _comprobar(self, otro) -> "ElementoCuerpo":
        if isinstance(otro, int):
            return self.ctx.desde_entero(otro)
        if not isinstance(otro, ElementoCuerpo):
            return NotImplemented
        if otro.ctx != self.ctx:
            raise ContextoIncompatibleError(f"Operandos en {self.ctx} y {otro.ctx}")
        return otro

    def es_cero(self) -> bool:
        return not any(self.coefs)

    def __bool__(self) -> bool:
        return not self.es_cero()

    @property
    def indice(self) -> int:
        return sum(c * self.ctx.p ** k for k, c in enumerate(self.coefs))

    def __add__(self, otro):
        otro = self._comprobar(otro)
        if otro is NotImplemented:
            return otro
        p = self.ctx.p
        return ElementoCuerpo(self.ctx, tuple((a + b) % p for a, b in zip(self.coefs, otro.coefs)))

    __radd__ = __add__

    def __neg__(self):
        p = self.ctx.p
        return ElementoCuerpo(self.ctx, tuple((-a) % p for a in self.coefs))

    def __sub__(self, otro):
        otro = self._comprobar(otro)
        if otro is NotImplemented:
            return otro
        return self + (-otro)

    def __rsub__(self, otro):
        return (-self) + otro

    def __mul__(self, otro):
        otro = self._comprobar(otro)
        if otro is NotImplemented:
            return otro
        producto = _multiplicar(_recortar(list(self.coefs)), _recortar(list(otro.coefs)), self.ctx.p)
        return self.ctx.elemento(producto)

    __rmul__ = __mul__

    def inverso(self) -> "ElementoCuerpo":
        if self.es_cero():
            raise DivisionPorCeroError(f"Inverso de 0 en {self.ctx}")
        return self ** (self.ctx.q - 2)

    def __truediv__(self, otro):
        otro = self._comprobar(otro)
        if otro is NotImplemented:
            return otro
        return self * otro.inverso()

    def __pow__(self, exponente: int):
        if exponente < 0:
            return self.inverso() ** (-exponente)
        resultado = self.ctx.uno
        base = self
        while exponente:
            if exponente & 1:
                resultado = resultado * base
            base = base * base
            exponente >>= 1
        return resultado

    def frobenius(self) -> "ElementoCuerpo":
        return self ** self.ctx.p

    def raiz_p(self) -> "ElementoCuerpo":
        """Inverso del Frobenius: a^{q/p}"""
        return self ** (self.ctx.q // self.ctx.p)

    def __str__(self) -> str:
        terminos = []
        for k, c in enumerate(self.coefs):
            if c == 0:
                continue
            if k == 0:
                terminos.append(str(c))
            else:
                monomio = "t" if k == 1 else f"t^{k}"
                terminos.append(monomio if c == 1 else f"{c}*{monomio}")
        return " + ".join(reversed(terminos)) if terminos else "0"


# ---------------------------------------------------------------------------
# Operaciones públicas
# ---------------------------------------------------------------------------

def crear_cuerpo(p: int, n: int = 1, modulo: Optional[Sequence[int]] = None) -> CuerpoFinito:
    """
    Construye el contexto F_{p^n} con módulo irreducible verificado.

    Args:
        p: Primo soportado
        n: Grado de la extensión (>= 1)
        modulo: Coeficientes del módulo mónico, de menor a mayor grado. Si se omite se
            usa la tabla predefinida o, para n <= 4, el primer irreducible en orden.

    Raises:
        TamanoNoSoportadoError: primo fuera de la lista o grado sin módulo por defecto
        ModuloReducibleError: el módulo dado no es irreducible
    """
    if p not in PRIMOS_SOPORTADOS:
        raise TamanoNoSoportadoError(f"Primo no soportado: {p}")
    if n < 1:
        raise TamanoNoSoportadoError(f"Grado inválido: {n}")

    if n == 1 and modulo is None:
        return CuerpoFinito(p, 1, (0, 1))

    if modulo is None:
        if (p, n) in MODULOS_PREDEFINIDOS:
            modulo = MODULOS_PREDEFINIDOS[(p, n)]
        elif n <= GRADO_MAXIMO_TABLA:
            modulo = _buscar_modulo(p, n)
            logger.info(f"Módulo para F_{p ** n} obtenido por búsqueda: {modulo}")
        else:
            raise TamanoNoSoportadoError(f"Sin módulo por defecto para ({p}, {n}); indique uno")

    coefs = tuple(c % p for c in modulo)
    if len(_recortar(list(coefs))) != n + 1:
        raise ModuloReducibleError(f"El módulo {modulo} no tiene grado {n}")
    if coefs[-1] != 1:
        inv = pow(coefs[-1], -1, p)
        coefs = tuple(c * inv % p for c in coefs)
    if not es_irreducible(coefs, p):
        raise ModuloReducibleError(f"El módulo {modulo} es reducible sobre F_{p}")

    return CuerpoFinito(p, n, coefs)


def operar(op: str, a: ElementoCuerpo, b: Union[ElementoCuerpo, int, None] = None) -> ElementoCuerpo:
    """
    Despacho de la aritmética: add, mul, inv, pow (b es el exponente) y frobenius.
    """
    if op == 'add':
        return a + b
    if op == 'mul':
        return a * b
    if op == 'inv':
        return a.inverso()
    if op == 'pow':
        if not isinstance(b, int):
            raise ValueError("pow requiere un exponente entero")
        return a ** b
    if op == 'frobenius':
        return a.frobenius()
    raise ValueError(f"Operación desconocida: {op}")
