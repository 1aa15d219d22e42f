"""
Aritmética p-ádica exacta sobre Q_p y extensiones cuadráticas Q_p(√d)

Los números son racionales exactos (Fraction) o elementos exactos de Q(√d);
las aproximaciones solo aparecen como salidas del levantamiento de Hensel y
llevan su precisión absoluta. La valoración está normalizada: v(π) = 1.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import product
from typing import Iterator, List, Optional, Sequence, Tuple, Union

from config.constants import PADIC_CONFIG
from core.errors import ErrorCalculo
from fields.finite_field import CuerpoFinito, ElementoCuerpo, crear_cuerpo
from geometry.polynomials import PolinomioHomogeneo, PolinomioInvalidoError

logger = logging.getLogger(__name__)

MEDIO = Fraction(1, 2)


class ErrorPadico(ErrorCalculo):
    """Error en la aritmética p-ádica"""
    modulo = "padic"


class ValorCeroError(ErrorPadico):
    """Operación que exige un valor no nulo"""
    pass


class PrecisionInsuficienteError(ErrorPadico):
    """La precisión no permite leer la valoración o la clase de cuadrados"""
    pass


class ProfundidadInsuficienteError(ErrorPadico):
    """Profundidad del oráculo por debajo de 2e + 3"""
    pass


class NewtonEstancadoError(ErrorPadico):
    """La valoración del residuo no crece en la iteración de Newton"""
    pass


class SemillaInvalidaError(ErrorPadico):
    """La semilla no está en la reducción de la superficie"""
    pass


# ---------------------------------------------------------------------------
# Números de Q(√d)
# ---------------------------------------------------------------------------

def valoracion_p(x: Fraction, p: int) -> int:
    """v_p de un racional no nulo"""
    x = Fraction(x)
    if x == 0:
        raise ValorCeroError("v_p(0) no está definida")
    v = 0
    num, den = x.numerator, x.denominator
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    return v


class ElementoCuadratico:
    """a + b√d con a, b racionales"""
    __slots__ = ("a", "b", "d")

    def __init__(self, a, b, d: int):
        self.a = Fraction(a)
        self.b = Fraction(b)
        self.d = d

    def _convertir(self, otro):
        if isinstance(otro, ElementoCuadratico):
            if otro.d != self.d:
                raise ValueError(f"Q(√{self.d}) y Q(√{otro.d}) no son compatibles")
            return otro
        if isinstance(otro, (int, Fraction)):
            return ElementoCuadratico(otro, 0, self.d)
        return None

    def __add__(self, otro):
        o = self._convertir(otro)
        if o is None:
            return NotImplemented
        return ElementoCuadratico(self.a + o.a, self.b + o.b, self.d)

    __radd__ = __add__

    def __neg__(self):
        return ElementoCuadratico(-self.a, -self.b, self.d)

    def __sub__(self, otro):
        o = self._convertir(otro)
        if o is None:
            return NotImplemented
        return ElementoCuadratico(self.a - o.a, self.b - o.b, self.d)

    def __rsub__(self, otro):
        return (-self) + otro

    def __mul__(self, otro):
        o = self._convertir(otro)
        if o is None:
            return NotImplemented
        return ElementoCuadratico(self.a * o.a + self.d * self.b * o.b,
                                  self.a * o.b + self.b * o.a, self.d)

    __rmul__ = __mul__

    def conjugado(self) -> "ElementoCuadratico":
        return ElementoCuadratico(self.a, -self.b, self.d)

    def norma(self) -> Fraction:
        return self.a * self.a - self.d * self.b * self.b

    def inverso(self) -> "ElementoCuadratico":
        n = self.norma()
        if n == 0:
            raise ZeroDivisionError("Inverso de 0 en Q(√d)")
        return ElementoCuadratico(self.a / n, -self.b / n, self.d)

    def __truediv__(self, otro):
        o = self._convertir(otro)
        if o is None:
            return NotImplemented
        return self * o.inverso()

    def __rtruediv__(self, otro):
        return self.inverso() * otro

    def __pow__(self, k: int):
        if k < 0:
            return self.inverso() ** (-k)
        resultado = ElementoCuadratico(1, 0, self.d)
        base = self
        while k:
            if k & 1:
                resultado = resultado * base
            base = base * base
            k >>= 1
        return resultado

    def __bool__(self) -> bool:
        return self.a != 0 or self.b != 0

    def __eq__(self, otro) -> bool:
        o = self._convertir(otro) if not isinstance(otro, ElementoCuadratico) or otro.d == self.d else None
        if o is None:
            return False
        return self.a == o.a and self.b == o.b

    def __hash__(self) -> int:
        return hash((self.a, self.b, self.d))

    def __str__(self) -> str:
        if self.b == 0:
            return str(self.a)
        raiz = f"√{self.d}" if self.b == 1 else f"{self.b}*√{self.d}"
        return raiz if self.a == 0 else f"{self.a} + {raiz}"

    __repr__ = __str__


Numero = Union[Fraction, ElementoCuadratico]


def _es_cuadrado_racional_qp(p: int, x: Fraction) -> bool:
    """¿Es x un cuadrado en Q_p? (fórmula clásica, usada para validar d)"""
    v = valoracion_p(x, p)
    if v % 2:
        return False
    u = x / Fraction(p) ** v
    if p == 2:
        return u.numerator * pow(u.denominator, -1, 8) % 8 == 1
    r = u.numerator * pow(u.denominator, -1, p) % p
    return pow(r, (p - 1) // 2, p) == 1


# ---------------------------------------------------------------------------
# Cuerpos locales
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CuerpoLocal:
    """Q_p (d = None) o la extensión cuadrática Q_p(√d) con d libre de cuadrados"""
    p: int
    d: Optional[int] = None

    def __post_init__(self):
        if self.d is None:
            return
        if self.d in (0, 1) or any(self.d % (k * k) == 0 for k in range(2, abs(self.d) + 1) if k * k <= abs(self.d)):
            raise ValueError(f"d = {self.d} no es libre de cuadrados")
        if _es_cuadrado_racional_qp(self.p, Fraction(self.d)):
            raise ValueError(f"{self.d} es un cuadrado en Q_{self.p}: Q_p(√d) no es un cuerpo")

    # -- forma del cuerpo --

    @property
    def es_qp(self) -> bool:
        return self.d is None

    @cached_property
    def e(self) -> int:
        """Índice de ramificación"""
        if self.es_qp:
            return 1
        if valoracion_p(Fraction(self.d), self.p) % 2:
            return 2
        if self.p == 2 and self.d % 4 == 3:
            return 2
        return 1

    @property
    def f(self) -> int:
        return 1 if self.es_qp else 2 // self.e

    @property
    def valoracion_de_p(self) -> int:
        return self.e

    @cached_property
    def uniformizador(self) -> Numero:
        if self.es_qp or self.e == 1:
            return self._numero(self.p)
        if valoracion_p(Fraction(self.d), self.p) % 2:
            return ElementoCuadratico(0, 1, self.d)
        return ElementoCuadratico(1, 1, self.d)

    @cached_property
    def _omega(self) -> Optional[ElementoCuadratico]:
        """Generador del cuerpo residual en el caso no ramificado"""
        if self.f == 1:
            return None
        if self.p == 2:
            return ElementoCuadratico(MEDIO, MEDIO, self.d)
        return ElementoCuadratico(0, 1, self.d)

    @cached_property
    def ctx_residuo(self) -> CuerpoFinito:
        """Cuerpo residual como F_p[t]/(polinomio mínimo de ω mod p)"""
        if self.f == 1:
            return crear_cuerpo(self.p, 1)
        if self.p == 2:
            return crear_cuerpo(2, 2, ((-(self.d - 1) // 4) % 2, 1, 1))
        return crear_cuerpo(self.p, 2, ((-self.d) % self.p, 0, 1))

    @cached_property
    def digitos(self) -> List[Numero]:
        """Representantes exactos del cuerpo residual, en el orden de sus índices"""
        if self.f == 1:
            return [self._numero(c) for c in range(self.p)]
        return [self._numero(c0) + c1 * self._omega for c1 in range(self.p) for c0 in range(self.p)]

    @cached_property
    def valoracion_de_2(self) -> int:
        return self.e if self.p == 2 else 0

    @property
    def umbral_cuadrado(self) -> int:
        """Una unidad u es cuadrado si u ≡ r² mod π^umbral (criterio de Hensel)"""
        return 2 * self.valoracion_de_2 + 1

    def descriptor(self) -> dict:
        return {'p': self.p, 'd': self.d, 'e': self.e, 'f': self.f}

    def __str__(self) -> str:
        return f"Q_{self.p}" if self.es_qp else f"Q_{self.p}(√{self.d})"

    # -- números --

    def _numero(self, x) -> Numero:
        if self.es_qp:
            if isinstance(x, ElementoCuadratico):
                if x.b != 0:
                    raise ValueError("Elemento irracional en Q_p")
                return x.a
            return Fraction(x)
        if isinstance(x, ElementoCuadratico):
            return x
        return ElementoCuadratico(x, 0, self.d)

    def numero(self, x) -> Numero:
        return self._numero(x)

    def valuacion(self, x) -> int:
        x = self._numero(x)
        if self.es_qp:
            return valoracion_p(x, self.p)
        if not x:
            raise ValorCeroError("Valoración de 0")
        doble = self.e * valoracion_p(x.norma(), self.p)
        if doble % 2:
            raise ArithmeticError(f"Valoración no entera para {x}")
        return doble // 2

    def es_entero(self, x) -> bool:
        return not x or self.valuacion(x) >= 0

    def potencia_pi(self, k: int) -> Numero:
        return self.uniformizador ** k

    def unidad(self, x) -> Tuple[int, Numero]:
        v = self.valuacion(x)
        return v, self._numero(x) / self.potencia_pi(v)

    def reducir(self, x, k: int) -> Numero:
        """Representante canónico de x módulo π^k (x entero)"""
        x = self._numero(x)
        if k <= 0 or not x:
            return self._numero(0)
        if not self.es_entero(x):
            raise ValueError(f"{x} no es entero en {self}")
        if self.es_qp:
            m = self.p ** k
            return Fraction(x.numerator * pow(x.denominator, -1, m) % m)
        rep = self._numero(0)
        pi = self.uniformizador
        potencia = self._numero(1)
        for _ in range(k):
            r = self._digito(x)
            rep = rep + r * potencia
            x = (x - r) / pi
            potencia = potencia * pi
        return rep

    def _digito(self, x) -> Numero:
        for r in self.digitos:
            diferencia = x - r
            if not diferencia or self.valuacion(diferencia) >= 1:
                return r
        raise ArithmeticError(f"{x} no tiene residuo en {self}")

    def residuo(self, x) -> ElementoCuerpo:
        """Imagen de x (entero) en el cuerpo residual"""
        r = self._digito(self._numero(x))
        return self.ctx_residuo.desde_indice(self.digitos.index(r))

    def levantar(self, a: ElementoCuerpo) -> Numero:
        if a.ctx != self.ctx_residuo:
            raise ValueError(f"{a} no pertenece al cuerpo residual de {self}")
        return self.digitos[a.indice]

    def representantes(self, k: int) -> Iterator[Numero]:
        """Todos los representantes Σ r_i π^i de O/π^k"""
        if k <= 0:
            yield self._numero(0)
            return
        if self.es_qp:
            for i in range(self.p ** k):
                yield Fraction(i)
            return
        potencias = [self.potencia_pi(i) for i in range(k)]
        for digitos in product(self.digitos, repeat=k):
            total = self._numero(0)
            for r, pot in zip(digitos, potencias):
                if r:
                    total = total + r * pot
            yield total

    def representantes_unidad(self, k: int) -> Iterator[Numero]:
        for r in self.representantes(k):
            if r and self.valuacion(r) == 0:
                yield r


def campo_qp(p: int) -> CuerpoLocal:
    return CuerpoLocal(p)


# ---------------------------------------------------------------------------
# Valores p-ádicos
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ValorPadico:
    """
    Valor en un cuerpo local: representante exacto y precisión absoluta
    (None si el valor es exacto; si no, el valor se conoce módulo π^precision).
    """
    cuerpo: CuerpoLocal
    valor: object
    precision: Optional[int] = None

    @classmethod
    def exacto(cls, cuerpo: CuerpoLocal, x) -> "ValorPadico":
        return cls(cuerpo, cuerpo.numero(x), None)

    @classmethod
    def aproximado(cls, cuerpo: CuerpoLocal, unidad, valuacion: int, precision_relativa: int) -> "ValorPadico":
        valor = cuerpo.numero(unidad) * cuerpo.potencia_pi(valuacion)
        return cls(cuerpo, valor, valuacion + precision_relativa)

    @property
    def es_exacto(self) -> bool:
        return self.precision is None

    def valuacion(self) -> int:
        if not self.valor:
            if self.es_exacto:
                raise ValorCeroError("El valor es 0")
            raise PrecisionInsuficienteError(f"Valor indistinguible de 0 módulo π^{self.precision}")
        v = self.cuerpo.valuacion(self.valor)
        if not self.es_exacto and v >= self.precision:
            raise PrecisionInsuficienteError(f"Valor indistinguible de 0 módulo π^{self.precision}")
        return v

    def __mul__(self, otro: "ValorPadico") -> "ValorPadico":
        if self.cuerpo != otro.cuerpo:
            raise ValueError("Valores de cuerpos distintos")
        producto = self.valor * otro.valor
        if self.es_exacto and otro.es_exacto:
            return ValorPadico(self.cuerpo, producto, None)
        cotas = []
        if not otro.es_exacto:
            cotas.append(otro.precision + (self.valuacion() if self.valor else otro.precision))
        if not self.es_exacto:
            cotas.append(self.precision + (otro.valuacion() if otro.valor else self.precision))
        return ValorPadico(self.cuerpo, producto, min(cotas))

    def __str__(self) -> str:
        sufijo = "" if self.es_exacto else f" + O(π^{self.precision})"
        return f"{self.valor}{sufijo}"


@dataclass(frozen=True)
class ClaseCuadrado:
    """Clase de x en K^×/K^×2"""
    es_cuadrado: bool
    paridad: str
    clase_unidad: Union[int, Tuple[int, ...]]


def _residuo_entero(u: Fraction, m: int) -> int:
    return u.numerator * pow(u.denominator, -1, m) % m


def _margen(cuerpo: CuerpoLocal) -> int:
    if cuerpo.es_qp:
        return PADIC_CONFIG['margen_q2'] if cuerpo.p == 2 else PADIC_CONFIG['margen_impar']
    return cuerpo.umbral_cuadrado


def _exigir_legible(x: ValorPadico) -> int:
    v = x.valuacion()
    if not x.es_exacto and x.precision < v + _margen(x.cuerpo):
        raise PrecisionInsuficienteError(
            f"Precisión {x.precision} insuficiente para leer la clase de un valor de valoración {v}"
        )
    return v


def descomponer(x: ValorPadico) -> Tuple[int, ValorPadico]:
    """x = π^v · unidad con v(unidad) = 0"""
    v = x.valuacion()
    unidad = x.valor / x.cuerpo.potencia_pi(v)
    precision = None if x.es_exacto else x.precision - v
    return v, ValorPadico(x.cuerpo, x.cuerpo.numero(unidad), precision)


def _unidad_es_cuadrado(cuerpo: CuerpoLocal, u) -> bool:
    """Criterio de Hensel: u ≡ r² mod π^umbral para alguna unidad r (mod π^{v(2)+1})"""
    umbral = cuerpo.umbral_cuadrado
    for r in cuerpo.representantes_unidad(cuerpo.valoracion_de_2 + 1):
        diferencia = u - r * r
        if not diferencia or cuerpo.valuacion(diferencia) >= umbral:
            return True
    return False


def es_cuadrado(x: ValorPadico) -> ClaseCuadrado:
    """
    Clase de cuadrados de x.

    Sobre Q_p se usa el criterio de Legendre (p impar) o la clase módulo 8 (p = 2);
    en extensiones cuadráticas, la búsqueda acotada de raíz certificada por Hensel.
    """
    cuerpo = x.cuerpo
    v = _exigir_legible(x)
    _, unidad = descomponer(x)
    u = unidad.valor
    paridad = "even" if v % 2 == 0 else "odd"

    if cuerpo.es_qp:
        if cuerpo.p == 2:
            clase = _residuo_entero(u, 8)
            unidad_cuadrada = clase == 1
        else:
            r = _residuo_entero(u, cuerpo.p)
            unidad_cuadrada = pow(r, (cuerpo.p - 1) // 2, cuerpo.p) == 1
            no_residuo = next(k for k in range(2, cuerpo.p) if pow(k, (cuerpo.p - 1) // 2, cuerpo.p) != 1)
            clase = 1 if unidad_cuadrada else no_residuo
    else:
        unidad_cuadrada = _unidad_es_cuadrado(cuerpo, u)
        if unidad_cuadrada:
            clase = 1
        else:
            rep = cuerpo.reducir(u, cuerpo.umbral_cuadrado)
            clase = tuple(cuerpo.digitos.index(cuerpo._digito(r)) for r in _digitos_de(cuerpo, rep))

    return ClaseCuadrado(paridad == "even" and unidad_cuadrada, paridad, clase)


def _digitos_de(cuerpo: CuerpoLocal, x) -> List[Numero]:
    digitos = []
    for _ in range(cuerpo.umbral_cuadrado):
        r = cuerpo._digito(x)
        digitos.append(r)
        x = (x - r) / cuerpo.uniformizador
    return digitos


# ---------------------------------------------------------------------------
# Símbolo de Hilbert
# ---------------------------------------------------------------------------

def oraculo_isotropia(a: ValorPadico, b: ValorPadico, profundidad: int) -> bool:
    """
    ¿Tiene z² = a·x² + b·y² solución primitiva certificada por Hensel?

    Tras dividir a y b por potencias pares de π, toda solución primitiva tiene
    (x, y) primitivo; se recorren los pares normalizados (1, y) y (x, 1) con x ∈ πO
    módulo π^profundidad y se busca z con v(F) > 2·v(∂F/∂z) = 2·v(2z).
    """
    cuerpo = a.cuerpo
    if profundidad < 2 * cuerpo.e + PADIC_CONFIG['desplazamiento_oraculo']:
        raise ProfundidadInsuficienteError(
            f"Profundidad {profundidad} < 2e + 3 = {2 * cuerpo.e + 3}"
        )
    _exigir_legible(a)
    _exigir_legible(b)

    def normalizar(x: ValorPadico):
        v = x.valuacion()
        return x.valor / cuerpo.potencia_pi(2 * (v // 2))

    a0 = normalizar(a)
    b0 = normalizar(b)
    uno = cuerpo.numero(1)
    pi = cuerpo.uniformizador

    pares = [(uno, y) for y in cuerpo.representantes(profundidad)]
    pares += [(pi * x, uno) for x in cuerpo.representantes(profundidad - 1)]

    candidatos_z = list(cuerpo.representantes_unidad(cuerpo.valoracion_de_2 + 1))
    v2 = cuerpo.valoracion_de_2

    for x, y in pares:
        t = a0 * x * x + b0 * y * y
        if not t:
            return True
        vt = cuerpo.valuacion(t)
        if vt % 2:
            continue
        escala = cuerpo.potencia_pi(vt // 2)
        for r in candidatos_z:
            z = r * escala
            residuo = t - z * z
            jacobiano = v2 + vt // 2
            if not residuo or cuerpo.valuacion(residuo) > 2 * jacobiano:
                return True
    return False


def _hilbert_formula_qp(p: int, a: Fraction, b: Fraction) -> int:
    """Exponente de (a, b)_p ∈ {±1} por las fórmulas locales clásicas"""
    alfa = valoracion_p(a, p)
    beta = valoracion_p(b, p)
    u = a / Fraction(p) ** alfa
    w = b / Fraction(p) ** beta

    if p == 2:
        ru = _residuo_entero(u, 8)
        rw = _residuo_entero(w, 8)
        eps = lambda r: ((r - 1) // 2) % 2
        omega = lambda r: ((r * r - 1) // 8) % 2
        return (eps(ru) * eps(rw) + alfa * omega(rw) + beta * omega(ru)) % 2

    def no_residuo(x: Fraction) -> int:
        r = _residuo_entero(x, p)
        return 0 if pow(r, (p - 1) // 2, p) == 1 else 1

    return (alfa * beta * ((p - 1) // 2) + beta * no_residuo(u) + alfa * no_residuo(w)) % 2


def simbolo_hilbert(a: ValorPadico, b: ValorPadico) -> Fraction:
    """
    (a, b) con valores en {0, 1/2}.

    Sobre Q_p por fórmula; en extensiones cuadráticas por el oráculo de isotropía
    a profundidad 2e + 3.
    """
    if a.cuerpo != b.cuerpo:
        raise ValueError("Valores de cuerpos distintos")
    cuerpo = a.cuerpo
    _exigir_legible(a)
    _exigir_legible(b)

    if cuerpo.es_qp:
        exponente = _hilbert_formula_qp(cuerpo.p, a.valor, b.valor)
        return MEDIO if exponente else Fraction(0)

    profundidad = 2 * cuerpo.e + PADIC_CONFIG['desplazamiento_oraculo']
    return Fraction(0) if oraculo_isotropia(a, b, profundidad) else MEDIO


# ---------------------------------------------------------------------------
# Levantamiento de Hensel
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PuntoSuperficiePadico:
    """
    Punto de X(L): coordenadas enteras exactas con v(f(P)) >= precision.
    `precision_coordenadas` acota la distancia al punto verdadero de la superficie.
    """
    cuerpo: CuerpoLocal
    coords: Tuple[Numero, ...]
    superficie: PolinomioHomogeneo
    precision: int
    precision_coordenadas: Optional[int]

    @property
    def valores(self) -> Tuple[ValorPadico, ...]:
        return tuple(ValorPadico(self.cuerpo, c, self.precision_coordenadas) for c in self.coords)

    def escalar(self, factor) -> "PuntoSuperficiePadico":
        """Mismo punto proyectivo con coordenadas multiplicadas por una unidad"""
        factor = self.cuerpo.numero(factor)
        if self.cuerpo.valuacion(factor) != 0:
            raise ValueError("El factor de escala debe ser una unidad")
        return PuntoSuperficiePadico(self.cuerpo, tuple(c * factor for c in self.coords),
                                     self.superficie, self.precision, self.precision_coordenadas)

    def resumen(self, k: int) -> str:
        """Coordenadas módulo π^k, para los reportes"""
        return ":".join(str(self.cuerpo.reducir(c, k)) for c in self.coords)


def levantar_desde(f: PolinomioHomogeneo, cuerpo: CuerpoLocal, coords: List[Numero],
                   indice_libre: int, precision: int) -> PuntoSuperficiePadico:
    """Newton sobre la coordenada libre a partir de coordenadas enteras exactas"""
    derivada = f.derivada(indice_libre)
    if derivada is None:
        raise NewtonEstancadoError(f"∂f/∂x_{indice_libre} es idénticamente nula")

    coords = [cuerpo.numero(c) for c in coords]
    valor = f.evaluar(coords)
    v_anterior = None
    v_derivada = 0
    for _ in range(PADIC_CONFIG['max_iteraciones_newton']):
        if not valor:
            logger.debug(f"Punto exacto encontrado: {coords}")
            return PuntoSuperficiePadico(cuerpo, tuple(coords), f, precision, None)

        v_valor = cuerpo.valuacion(valor)
        d = derivada.evaluar(coords)
        if not d:
            raise NewtonEstancadoError("La derivada se anula en la aproximación")
        v_derivada = cuerpo.valuacion(d)

        if v_valor <= 2 * v_derivada:
            raise NewtonEstancadoError(
                f"Criterio de Hensel no satisfecho: v(f) = {v_valor}, v(f') = {v_derivada}"
            )
        if v_anterior is not None and v_valor <= v_anterior:
            raise NewtonEstancadoError(f"El residuo no mejora (v = {v_valor})")
        if v_valor >= precision:
            return PuntoSuperficiePadico(cuerpo, tuple(coords), f, precision, precision - v_derivada)

        v_anterior = v_valor
        trabajo = precision + v_derivada + 2
        coords[indice_libre] = cuerpo.reducir(coords[indice_libre] - valor / d, trabajo)
        valor = f.evaluar(coords)

    raise NewtonEstancadoError("Número máximo de iteraciones alcanzado")


def levantar_hensel(f: PolinomioHomogeneo, semilla, indice_libre: int, precision: int,
                    cuerpo: Optional[CuerpoLocal] = None) -> PuntoSuperficiePadico:
    """
    Levanta una semilla de la reducción a un punto con v(f(P)) >= precision y P ≡ semilla.

    Solo se mueve la coordenada libre; el criterio v(f) > 2·v(∂f) permite derivadas
    no unitarias (por ejemplo X² - 17 desde 1 sobre Q_2).
    """
    cuerpo = cuerpo or CuerpoLocal(semilla.coords[0].ctx.p)
    ctx = cuerpo.ctx_residuo
    if any(c.ctx != ctx for c in semilla.coords):
        raise SemillaInvalidaError(f"La semilla no está en el cuerpo residual {ctx}")

    if not polinomio_residual(f, cuerpo).evaluar_en(ctx, semilla.coords).es_cero():
        raise SemillaInvalidaError(f"La semilla {semilla} no está en la reducción de la superficie")

    coords = [cuerpo.levantar(c) for c in semilla.coords]
    return levantar_desde(f, cuerpo, coords, indice_libre, precision)


def polinomio_residual(f: PolinomioHomogeneo, cuerpo: CuerpoLocal) -> PolinomioHomogeneo:
    """
    Polinomio racional con la misma reducción módulo π que f. Los coeficientes en
    Q(√d) deben ser enteros y tener residuo en F_p.
    """
    if f.es_racional:
        return f
    reducidos = {}
    for exps, c in f.terminos:
        if isinstance(c, ElementoCuadratico) and c.d != cuerpo.d:
            raise PolinomioInvalidoError(f"El coeficiente {c} no pertenece a {cuerpo}")
        if not cuerpo.es_entero(c):
            raise PolinomioInvalidoError(f"El coeficiente {c} no es entero en {cuerpo}")
        indice = cuerpo.residuo(c).indice
        if indice >= cuerpo.p:
            raise PolinomioInvalidoError(f"El residuo de {c} no está en F_{cuerpo.p}")
        reducidos[exps] = indice
    logger.debug(f"Reducción de {f} en {cuerpo}")
    return PolinomioHomogeneo.desde_dict(reducidos, f.variables)


def refinar_disco(semilla, indice_libre: int, cuerpo: CuerpoLocal, profundidad: int) -> Iterator[List[Numero]]:
    """
    Representantes de los discos residuales módulo π^profundidad sobre una semilla:
    la coordenada normalizada queda en 1, la libre la fija Hensel y las demás
    recorren levantamiento + π·r.
    """
    base = [cuerpo.levantar(c) for c in semilla.coords]
    variables = coordenadas_variables(semilla, indice_libre)
    pi = cuerpo.uniformizador
    desplazamientos = list(cuerpo.representantes(profundidad - 1))
    for combinacion in product(desplazamientos, repeat=len(variables)):
        coords = list(base)
        for i, r in zip(variables, combinacion):
            coords[i] = base[i] + pi * r
        yield coords


def coordenadas_variables(semilla, indice_libre: int) -> List[int]:
    """Coordenadas que recorren el disco: todas salvo la libre y la normalizada"""
    lider = semilla.indice_normalizado
    n = len(semilla.coords)
    if lider == indice_libre:
        return [i for i in range(n) if i != indice_libre]
    return [i for i in range(n) if i not in (indice_libre, lider)]


def punto_exacto(f: PolinomioHomogeneo, coords: Sequence, cuerpo: CuerpoLocal) -> PuntoSuperficiePadico:
    """Punto con coordenadas exactas que anulan f"""
    coords = tuple(cuerpo.numero(c) for c in coords)
    if f.evaluar(coords):
        raise SemillaInvalidaError(f"{coords} no está en la superficie")
    return PuntoSuperficiePadico(cuerpo, coords, f, 0, None)
