"""
2-torsión de curvas elípticas con buena reducción en 2 y descenso de álgebras
de cuaterniones de E1 × E2 a la superficie de Kummer asociada.

Las curvas vienen dadas por y² + xy + δy = x³ + ax² + bx + c. Las raíces de la
cúbica de 2-división se buscan primero en Q y después en Z_2 (árbol de residuos
certificado por Hensel); las que no son racionales se guardan como ValorPadico
con su precisión absoluta.
"""

import logging
import math
import random
from dataclasses import dataclass, field, replace
from fractions import Fraction
from itertools import product
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
import sympy

from config.constants import KUMMER_CONFIG, PADIC_CONFIG
from core.errors import ErrorCalculo
from forms.function_field import ContextoFunciones, FuncionRacional
from localfields.padic import (
    CuerpoLocal, PrecisionInsuficienteError, ValorPadico, campo_qp, es_cuadrado,
    simbolo_hilbert, valoracion_p
)
from brauer.swan import SimboloCiclico, crear_forma_local, residuo_fil0, rsw_ciclico

logger = logging.getLogger(__name__)

Q2 = campo_qp(2)

ALGEBRAS_DESCENSO = ("A(γ1,γ2)", "A(γ1,0)", "A(0,γ2)", "A(0,0)")


class ErrorKummer(ErrorCalculo):
    """Error en los cálculos de 2-torsión y descenso"""
    modulo = "kummer"


class TorsionNoRacionalError(ErrorKummer):
    """La 2-torsión no está definida sobre Q_2 (menos de tres raíces)"""
    pass


class PerfilValoracionError(ErrorKummer):
    """Las valoraciones de las raíces no corresponden a buena reducción ordinaria"""
    pass


# ---------------------------------------------------------------------------
# Valores 2-ádicos exactos o aproximados
# ---------------------------------------------------------------------------

def _exacto(x) -> ValorPadico:
    return ValorPadico.exacto(Q2, Fraction(x))


def _precision(*valores: ValorPadico) -> Optional[int]:
    precisiones = [x.precision for x in valores if x.precision is not None]
    return min(precisiones) if precisiones else None


def _suma(x: ValorPadico, y: ValorPadico) -> ValorPadico:
    return ValorPadico(x.cuerpo, x.valor + y.valor, _precision(x, y))


def _escalar(x: ValorPadico, k) -> ValorPadico:
    k = Fraction(k)
    if x.es_exacto:
        return ValorPadico(x.cuerpo, x.valor * k, None)
    return ValorPadico(x.cuerpo, x.valor * k, x.precision + valoracion_p(k, 2))


def _diferencia(x: ValorPadico, y: ValorPadico) -> ValorPadico:
    return _suma(x, _escalar(y, -1))


def texto_valor(x: ValorPadico) -> str:
    """Cadena exacta del valor ('a/b' o 'r + O(2^k)')"""
    if x.es_exacto:
        return str(x.valor)
    return f"{x.valor} + O(2^{x.precision})"


def _valuacion_o_inf(x: ValorPadico) -> float:
    if x.es_exacto and not x.valor:
        return math.inf
    return x.valuacion()


# ---------------------------------------------------------------------------
# Curvas y 2-torsión
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ParametrosCurva:
    """Coeficientes (δ, a, b, c) de y² + xy + δy = x³ + ax² + bx + c"""
    delta: int
    a: int
    b: int
    c: int

    def __post_init__(self):
        if self.delta not in (0, 1):
            raise ValueError(f"δ debe ser 0 o 1 (recibido {self.delta})")
        if self.discriminante() == 0:
            raise ValueError(f"La curva {self} es singular")

    @classmethod
    def desde_texto(cls, texto: str) -> "ParametrosCurva":
        """Lee 'delta,a,b,c'"""
        partes = [t.strip() for t in texto.replace("−", "-").split(",")]
        if len(partes) != 4:
            raise ValueError(f"Se esperaban cuatro enteros 'delta,a,b,c': '{texto}'")
        try:
            return cls(*(int(t) for t in partes))
        except ValueError as e:
            raise ValueError(f"Curva inválida '{texto}': {e}") from e

    def discriminante(self) -> int:
        d, a, b, c = self.delta, self.a, self.b, self.c
        b2 = 1 + 4 * a
        b4 = 2 * b + d
        b6 = d * d + 4 * c
        b8 = c + 4 * a * c - d * b + a * d * d - b * b
        return -b2 * b2 * b8 - 8 * b4 ** 3 - 27 * b6 * b6 + 9 * b2 * b4 * b6

    @property
    def buena_reduccion_en_2(self) -> bool:
        return self.discriminante() % 2 == 1

    def coeficientes_phi(self) -> Tuple[int, int, int, int]:
        """Φ(y) = 8y³ + c₂y² + c₁y + c₀ con Φ(y) = F(-2y - δ, y)"""
        d, a, b, c = self.delta, self.a, self.b, self.c
        return (8, 12 * d - 4 * a - 1, 6 * d * d - 4 * a * d + 2 * b, d ** 3 - a * d * d + b * d - c)

    def ecuacion(self, x, y):
        """F(x, y) = y² + xy + δy - (x³ + ax² + bx + c)"""
        return y * y + x * y + self.delta * y - (x ** 3 + self.a * x * x + self.b * x + self.c)

    def __str__(self) -> str:
        return f"{self.delta},{self.a},{self.b},{self.c}"


@dataclass(frozen=True)
class DatosTorsion:
    curva: ParametrosCurva
    phi: Tuple[int, int, int, int]
    betas: Tuple[ValorPadico, ValorPadico, ValorPadico]
    alfas: Tuple[ValorPadico, ValorPadico, ValorPadico]
    perfil_ord: Tuple[float, float, float]
    precision: int

    @property
    def exacto(self) -> bool:
        return all(b.es_exacto for b in self.betas)

    def intercambiar(self) -> "DatosTorsion":
        """Mismos datos con β₂ y β₃ (y sus α) intercambiados"""
        b, a, o = self.betas, self.alfas, self.perfil_ord
        return replace(self, betas=(b[0], b[2], b[1]), alfas=(a[0], a[2], a[1]), perfil_ord=(o[0], o[2], o[1]))


def _evaluar(coefs: Sequence[int], x):
    total = 0
    for c in coefs:
        total = total * x + c
    return total


def _v2(n: int) -> float:
    return math.inf if n == 0 else valoracion_p(Fraction(n), 2)


def _raices_racionales(phi: Sequence[int]) -> List[Fraction]:
    y = sympy.Symbol("y")
    raices = sympy.Poly(list(phi), y, domain="QQ").ground_roots()
    return sorted(Fraction(int(r.p), int(r.q)) for r in raices)


def _newton_z2(g: Sequence[int], dg: Sequence[int], r: int, precision: int) -> int:
    """Refina una raíz aislada de g en Z_2 hasta conocerla módulo 2^precision"""
    for _ in range(PADIC_CONFIG['max_iteraciones_newton']):
        valor = _evaluar(g, r)
        derivada = _evaluar(dg, r)
        vd = _v2(derivada)
        if valor == 0 or _v2(valor) - vd >= precision:
            return r % 2 ** precision
        potencia = 2 ** int(vd)
        modulo = 2 ** (precision + int(vd) + 2)
        r = (r - (valor // potencia) * pow(derivada // potencia, -1, modulo)) % modulo
    raise PrecisionInsuficienteError("Newton no converge en Z_2")


def raices_z2(g: Sequence[int], precision: int) -> List[int]:
    """
    Raíces en Z_2 de un polinomio mónico entero sin raíces múltiples, módulo 2^precision.

    Un disco r + 2^k Z_2 se descarta si g(r) ≢ 0 mod 2^k; se certifica como
    portador de una única raíz si k > v(g'(r)) y v(g(r)) >= k + v(g'(r)).
    """
    n = len(g) - 1
    dg = [c * (n - i) for i, c in enumerate(g[:-1])]
    raices = []
    pendientes = [(0, 0)]
    limite = 4 * precision + 64
    while pendientes:
        r, k = pendientes.pop()
        if k > limite:
            raise PrecisionInsuficienteError(f"Raíces no separadas a profundidad {k}")
        valor = _evaluar(g, r)
        if valor % 2 ** k:
            continue
        vd = _v2(_evaluar(dg, r))
        if k > vd and _v2(valor) >= k + vd:
            raices.append(_newton_z2(g, dg, r, precision))
            continue
        pendientes.extend([(r, k + 1), (r + 2 ** k, k + 1)])
    return sorted(raices)


def dos_torsion(curva: ParametrosCurva, precision: Optional[int] = None) -> DatosTorsion:
    """
    Puntos de 2-torsión (α_i, β_i) con α = -2β - δ y β raíz de Φ.

    Con z = 8y, Φ(y)·64 es mónico entero; sus raíces se obtienen en Z_2 módulo
    2^precision y se sustituyen por el racional exacto cuando coinciden.
    Orden: valoración creciente, exactas primero, luego valor (o residuo).
    """
    precision = precision or KUMMER_CONFIG['precision_raices']
    phi = curva.coeficientes_phi()
    _, c2, c1, c0 = phi
    g = [1, c2, 8 * c1, 64 * c0]

    racionales = _raices_racionales(phi)
    en_z2 = raices_z2(g, precision)
    if len(en_z2) < 3:
        raise TorsionNoRacionalError(
            f"Φ tiene {len(en_z2)} raíces en Q_2 para la curva {curva}; la 2-torsión no es racional"
        )

    betas = []
    for z in en_z2:
        exacta = next((q for q in racionales if (8 * q - z) % 2 ** precision == 0), None)
        if exacta is not None:
            betas.append(_exacto(exacta))
        elif z % 2 ** precision == 0:
            raise PrecisionInsuficienteError(f"Raíz indistinguible de 0 módulo 2^{precision}")
        else:
            betas.append(ValorPadico(Q2, Fraction(z, 8), precision - 3))

    def clave(beta: ValorPadico):
        orden = _valuacion_o_inf(beta)
        if beta.es_exacto:
            return (orden, 0, beta.valor)
        return (orden, 1, Q2.reducir(beta.valor * 8, precision))

    betas.sort(key=clave)
    perfil = tuple(_valuacion_o_inf(b) for b in betas)
    if perfil[0] != -3 or min(perfil[1:]) < 0:
        raise PerfilValoracionError(
            f"Valoraciones {perfil} de las raíces de Φ incompatibles con buena reducción ordinaria en 2"
        )

    alfas = tuple(_suma(_escalar(b, -2), _exacto(-curva.delta)) for b in betas)
    datos = DatosTorsion(curva, phi, tuple(betas), alfas, perfil, precision)
    logger.info(
        f"2-torsión de {curva}: β = {[texto_valor(b) for b in betas]}, α = {[texto_valor(a) for a in alfas]}"
    )
    return datos


def verificar_torsion(datos: DatosTorsion) -> Dict[str, bool]:
    """
    Φ(β) = 0, F(α, β) = 0 y 2β + α + δ = 0 en cada punto; las aproximaciones se
    comprueban módulo 2^(precisión de β - 3).
    """
    curva = datos.curva

    def nulo(valor: Fraction, referencia: ValorPadico) -> bool:
        if referencia.es_exacto:
            return valor == 0
        return valor == 0 or valoracion_p(valor, 2) >= referencia.precision - 3

    resultado = {"phi": True, "ecuacion": True, "dos_division": True}
    for alfa, beta in zip(datos.alfas, datos.betas):
        resultado["phi"] &= nulo(_evaluar(datos.phi, beta.valor), beta)
        resultado["ecuacion"] &= nulo(curva.ecuacion(alfa.valor, beta.valor), beta)
        resultado["dos_division"] &= (2 * beta.valor + alfa.valor + curva.delta) == 0
    resultado["perfil"] = datos.perfil_ord[0] == -3 and all(o >= 0 for o in datos.perfil_ord[1:])
    return resultado


# ---------------------------------------------------------------------------
# Forma de Legendre
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class InformeOraculo:
    """Comprobación simbólica de u = 4x - 4α₁, v = 4(2y + x + δ)"""
    exacto: bool
    identidad: bool
    raices: Tuple[str, ...]
    cubica_u1: Tuple[int, int, int, int]
    constante_impresa: int

    @property
    def constante_difiere(self) -> bool:
        return self.cubica_u1[3] != self.constante_impresa


@dataclass(frozen=True)
class CurvaLegendre:
    """v² = u(u - γ₁)(u - γ₂)"""
    gamma1: ValorPadico
    gamma2: ValorPadico
    torsion: Optional[DatosTorsion] = None
    oraculo: Optional[InformeOraculo] = None

    @classmethod
    def desde_gammas(cls, gamma1, gamma2) -> "CurvaLegendre":
        return cls(_exacto(gamma1), _exacto(gamma2))

    def escalar(self, k) -> "CurvaLegendre":
        return CurvaLegendre(_escalar(self.gamma1, k), _escalar(self.gamma2, k), None, None)

    @property
    def exacta(self) -> bool:
        return self.gamma1.es_exacto and self.gamma2.es_exacto


def _racional(x) -> sympy.Rational:
    x = Fraction(x)
    return sympy.Rational(x.numerator, x.denominator)


def oraculo_sustitucion(datos: DatosTorsion, gamma1: ValorPadico, gamma2: ValorPadico) -> InformeOraculo:
    """
    Sustituye x = u/4 + α₁, y = (v/4 - x - δ)/2 en v² - 64·F(x, y) y compara el
    resultado con u(u - γ₁)(u - γ₂). Con datos aproximados la identidad se lee
    módulo la precisión de los γ.
    """
    curva = datos.curva
    x, y, u, v = sympy.symbols("x y u v")
    d = curva.delta
    F = y ** 2 + x * y + d * y - (x ** 3 + curva.a * x ** 2 + curva.b * x + curva.c)

    def transformada(desplazamiento):
        xs = u / 4 + desplazamiento
        return sympy.expand(v ** 2 - 64 * F.subs({x: xs, y: (v / 4 - xs - d) / 2}, simultaneous=True))

    cubica15 = sympy.Poly(transformada(0), u)
    coefs15 = tuple(int(c) for c in cubica15.all_coeffs())

    alfa1 = _racional(datos.alfas[0].valor)
    g1, g2 = _racional(gamma1.valor), _racional(gamma2.valor)
    cubica = transformada(alfa1)
    if v in cubica.free_symbols:
        return InformeOraculo(datos.exacto, False, (), coefs15, 16 * curva.c + 16 * d * d)

    diferencia = sympy.Poly(sympy.expand(cubica - u * (u - g1) * (u - g2)), u)
    if datos.exacto:
        identidad = diferencia.is_zero
        raices = tuple(str(r) for r in sorted(sympy.roots(sympy.Poly(cubica, u)).keys()))
    else:
        cota = min(gamma1.precision, gamma2.precision) - 2
        identidad = all(
            c == 0 or valoracion_p(Fraction(int(c.p), int(c.q)), 2) >= cota for c in diferencia.all_coeffs()
        )
        raices = ("0", texto_valor(gamma1), texto_valor(gamma2))
    informe = InformeOraculo(datos.exacto, bool(identidad), raices, coefs15, 16 * curva.c + 16 * d * d)
    if informe.constante_difiere:
        logger.debug(f"Término constante de la cúbica en u₁: {coefs15[3]} (forma 16c + 16δ²: {informe.constante_impresa})")
    return informe


def transformada_legendre(datos: DatosTorsion) -> CurvaLegendre:
    """γ₁ = 4(α₂ - α₁), γ₂ = 4(α₃ - α₁), verificados con el oráculo simbólico"""
    alfas = datos.alfas
    gamma1 = _escalar(_diferencia(alfas[1], alfas[0]), 4)
    gamma2 = _escalar(_diferencia(alfas[2], alfas[0]), 4)
    if gamma1.valor == gamma2.valor or not gamma1.valor or not gamma2.valor:
        raise ValueError("Raíces de 2-torsión repetidas: la curva es singular")

    oraculo = oraculo_sustitucion(datos, gamma1, gamma2)
    if not oraculo.identidad:
        raise ArithmeticError(f"La sustitución no produce v² = u(u - γ₁)(u - γ₂) para {datos.curva}")
    logger.info(f"Forma de Legendre de {datos.curva}: γ₁ = {texto_valor(gamma1)}, γ₂ = {texto_valor(gamma2)}")
    return CurvaLegendre(gamma1, gamma2, datos, oraculo)


def congruencia_gamma1(curva: CurvaLegendre) -> bool:
    """γ₁ ≡ 1 + 4(δ - a) mod 8, que se sigue de 8β₂, 8β₃ ≡ 0 mod 8"""
    if curva.torsion is None:
        raise ValueError("La congruencia necesita los datos de torsión")
    c = curva.torsion.curva
    return Q2.reducir(curva.gamma1.valor, 3) == (1 + 4 * (c.delta - c.a)) % 8


# ---------------------------------------------------------------------------
# Matriz de descenso
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MatrizDescenso:
    entradas: Tuple[Tuple[ValorPadico, ...], ...]

    @classmethod
    def desde_racionales(cls, filas: Sequence[Sequence]) -> "MatrizDescenso":
        return cls(tuple(tuple(_exacto(x) for x in fila) for fila in filas))

    def como_array(self) -> np.ndarray:
        return np.array([[x.valor for x in fila] for fila in self.entradas], dtype=object)

    def es_simetrica(self) -> bool:
        m = self.como_array()
        return bool((m == m.T).all())

    def diagonal_unitaria(self) -> bool:
        return all(self.entradas[i][i].valor == 1 for i in range(len(self.entradas)))

    def filas_texto(self) -> List[List[str]]:
        return [[texto_valor(x) for x in fila] for fila in self.entradas]


def construir_matriz_descenso(g1: CurvaLegendre, g2: CurvaLegendre) -> MatrizDescenso:
    """Matriz simétrica 4×4 cuyas filas deciden el descenso de A(γ1,γ2), A(γ1,0), A(0,γ2), A(0,0)"""
    uno = _exacto(1)
    a11, a12 = g1.gamma1, g1.gamma2
    a21, a22 = g2.gamma1, g2.gamma2
    p1 = a11 * a12
    p2 = a21 * a22
    cruz = a11 * a21
    menos_cruz = _escalar(cruz, -1)
    d2 = a21 * _diferencia(a21, a22)
    d1 = a11 * _diferencia(a11, a12)
    matriz = MatrizDescenso((
        (uno, p1, p2, menos_cruz),
        (p1, uno, cruz, d2),
        (p2, cruz, uno, d1),
        (menos_cruz, d2, d1, uno),
    ))
    if not (matriz.es_simetrica() and matriz.diagonal_unitaria()):
        raise ArithmeticError("La matriz de descenso no es simétrica con diagonal 1")
    return matriz


@dataclass(frozen=True)
class VeredictoAlgebra:
    algebra: str
    desciende: bool
    no_cuadrados: Tuple[int, ...]


@dataclass(frozen=True)
class InformeDescenso:
    matriz: MatrizDescenso
    cuerpo: CuerpoLocal
    veredictos: Tuple[VeredictoAlgebra, ...]

    @property
    def filas_veredicto(self) -> Tuple[bool, ...]:
        return tuple(v.desciende for v in self.veredictos)


def _en_cuerpo(x: ValorPadico, cuerpo: CuerpoLocal) -> ValorPadico:
    if x.cuerpo == cuerpo:
        return x
    precision = None if x.es_exacto else x.precision * cuerpo.e
    return ValorPadico(cuerpo, cuerpo.numero(x.valor), precision)


def verificar_descenso(matriz: MatrizDescenso, cuerpo: Optional[CuerpoLocal] = None) -> InformeDescenso:
    """El álgebra de la fila i desciende si todas las entradas de la fila son cuadrados no nulos"""
    cuerpo = cuerpo or Q2
    veredictos = []
    for etiqueta, fila in zip(ALGEBRAS_DESCENSO, matriz.entradas):
        malas = []
        for j, x in enumerate(fila):
            if not x.valor:
                malas.append(j)
            elif not es_cuadrado(_en_cuerpo(x, cuerpo)).es_cuadrado:
                malas.append(j)
        veredictos.append(VeredictoAlgebra(etiqueta, not malas, tuple(malas)))
    informe = InformeDescenso(matriz, cuerpo, tuple(veredictos))
    logger.info(f"Descenso sobre {cuerpo}: {dict(zip(ALGEBRAS_DESCENSO, informe.filas_veredicto))}")
    return informe


# ---------------------------------------------------------------------------
# Símbolos de Azumaya
# ---------------------------------------------------------------------------

U1, U2 = sympy.symbols("u1 u2")
X1, X2 = sympy.symbols("x1 x2")


@dataclass(frozen=True)
class SimboloAzumaya:
    """
    A(ε₁, ε₂) = ((u₁ - ε₁)(u₁ - γ₁,₂), (u₂ - ε₂)(u₂ - γ₂,₂)) junto con su
    reescritura módulo cuadrados y su expresión en las coordenadas x originales.
    """
    eps1: bool
    eps2: bool
    g1: CurvaLegendre
    g2: CurvaLegendre
    par: Tuple[sympy.Expr, sympy.Expr]
    reescrito: Tuple[sympy.Expr, sympy.Expr]
    retroceso: Optional[Tuple[sympy.Expr, sympy.Expr]] = None
    descomposicion: Tuple[Tuple[sympy.Expr, sympy.Expr], ...] = field(default_factory=tuple)

    @property
    def etiqueta(self) -> str:
        return f"A({'γ1' if self.eps1 else '0'},{'γ2' if self.eps2 else '0'})"

    @property
    def es_nulo(self) -> bool:
        return not (self.eps1 or self.eps2)

    @property
    def exacto(self) -> bool:
        return self.g1.exacta and self.g2.exacta


def _es_epsilon(eps, gamma: ValorPadico) -> bool:
    """True si ε = γ_{i,1}, False si ε = 0"""
    if isinstance(eps, str):
        eps = eps.strip()
        if eps == "0":
            return False
        if eps in ("gamma", "γ", "g"):
            return True
        eps = Fraction(eps)
    if isinstance(eps, ValorPadico):
        eps = eps.valor
    if eps == 0:
        return False
    if Fraction(eps) == gamma.valor:
        return True
    raise ValueError(f"ε = {eps} no es 0 ni γ = {texto_valor(gamma)}")


def _cubica(u, g: CurvaLegendre):
    return u * (u - _racional(g.gamma1.valor)) * (u - _racional(g.gamma2.valor))


def _f(u, eps: bool, g: CurvaLegendre):
    e = _racional(g.gamma1.valor) if eps else 0
    return (u - e) * (u - _racional(g.gamma2.valor))


def _g_retroceso(x, eps: bool, torsion: DatosTorsion):
    """g_ε(x) con f_ε(4x - 4α₁) = 16·g_γ(x) o 4·g_0(x)"""
    a1, a2, a3 = (_racional(a.valor) for a in torsion.alfas)
    if eps:
        return (x - a2) * (x - a3)
    return (4 * x - 4 * a1) * (x - a3)


def simbolo_azumaya(eps1, eps2, g1: CurvaLegendre, g2: CurvaLegendre) -> SimboloAzumaya:
    """
    Construye A(ε₁, ε₂) con ε_i ∈ {0, γ_{i,1}}.

    Si algún ε_i ≠ 0 el factor correspondiente se reescribe como u_i (su producto
    con él es la cúbica, un cuadrado en la curva); A(0,0) se reescribe como
    (u₁ - γ₁,₁, u₂ - γ₂,₁). Con datos de torsión se añade la expresión en x.
    """
    e1 = _es_epsilon(eps1, g1.gamma1)
    e2 = _es_epsilon(eps2, g2.gamma1)
    par = (sympy.expand(_f(U1, e1, g1)), sympy.expand(_f(U2, e2, g2)))

    if e1:
        reescrito = (U1, par[1])
    elif e2:
        reescrito = (par[0], U2)
    else:
        reescrito = (U1 - _racional(g1.gamma1.valor), U2 - _racional(g2.gamma1.valor))

    retroceso = None
    descomposicion: Tuple = ()
    if g1.torsion is not None and g2.torsion is not None:
        t1, t2 = g1.torsion, g2.torsion
        if e1 or e2:
            if e1:
                alfa = _racional(t1.alfas[0].valor)
                x, g = X1, _g_retroceso(X2, e2, t2)
                retroceso = (X1 - alfa, sympy.expand(g))
            else:
                alfa = _racional(t2.alfas[0].valor)
                x, g = X2, _g_retroceso(X1, e1, t1)
                retroceso = (sympy.expand(g), X2 - alfa)
            g = sympy.expand(g)
            descomposicion = ((-1 / alfa, g), (1 + x / alfa, g))
        else:
            b12 = _racional(t1.betas[1].valor)
            b22 = _racional(t2.betas[1].valor)
            retroceso = (X1 + 2 * b12 + t1.curva.delta, X2 + 2 * b22 + t2.curva.delta)

    simbolo = SimboloAzumaya(e1, e2, g1, g2, par, reescrito, retroceso, descomposicion)
    logger.debug(f"{simbolo.etiqueta} = {par}, reescrito {reescrito}")
    return simbolo


def _cociente_es_cuadrado(num, den) -> bool:
    cociente = sympy.cancel(num / den)
    if cociente == 0 or not cociente.is_Rational:
        return False
    q = Fraction(int(cociente.p), int(cociente.q))
    return q > 0 and math.isqrt(q.numerator) ** 2 == q.numerator and math.isqrt(q.denominator) ** 2 == q.denominator


def verificar_reescritura(simbolo: SimboloAzumaya) -> Dict[str, bool]:
    """
    Cada factor reescrito coincide con el original o su producto con él es la
    cúbica de la curva; la expresión en x es la sustitución u = 4x - 4α₁ salvo
    constantes cuadradas.
    """
    resultado = {}
    ok = True
    for u, original, nuevo, g in ((U1, simbolo.par[0], simbolo.reescrito[0], simbolo.g1),
                                   (U2, simbolo.par[1], simbolo.reescrito[1], simbolo.g2)):
        igual = sympy.expand(original - nuevo) == 0
        producto = sympy.expand(original * nuevo - _cubica(u, g)) == 0
        ok &= igual or producto
    resultado["reescritura"] = bool(ok)

    if simbolo.retroceso is not None:
        t1, t2 = simbolo.g1.torsion, simbolo.g2.torsion
        sust = {
            U1: 4 * X1 - 4 * _racional(t1.alfas[0].valor),
            U2: 4 * X2 - 4 * _racional(t2.alfas[0].valor),
        }
        resultado["retroceso"] = all(
            _cociente_es_cuadrado(sympy.expand(r.subs(sust, simultaneous=True)), x)
            for r, x in zip(simbolo.reescrito, simbolo.retroceso)
        )
    return resultado


# ---------------------------------------------------------------------------
# Conductores en la reducción
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ConductorSimbolo:
    etiqueta: str
    tipo: str
    detalle: str
    nulo: bool


def _residuo_entero(x: ValorPadico) -> int:
    return int(Q2.reducir(x.valor, 1))


def conductor_simbolo(simbolo: SimboloAzumaya) -> ConductorSimbolo:
    """
    Para ε ≠ (0,0): el factor 1 + α₁⁻¹x es 1 + 4·(s⁻¹x) con s = 4α₁ unidad, así que
    el símbolo está en fil_0 y se calcula su residuo. Para A(0,0): rsw del par
    (x₁ + 2β₁,₂ + δ₁, x₂ + 2β₂,₂ + δ₂), cuyas reducciones son x̄_i + δ_i.
    """
    if simbolo.g1.torsion is None or simbolo.g2.torsion is None:
        raise ValueError("El conductor necesita los datos de torsión")
    forma = crear_forma_local(2, 1, "p")
    ctx = ContextoFunciones.racional(2)
    x1, x2 = ctx.gen_u, ctx.gen_v
    t1, t2 = simbolo.g1.torsion, simbolo.g2.torsion

    if simbolo.es_nulo:
        ciclico = SimboloCiclico(0, x1 + t1.curva.delta, "unidad", x2 + t2.curva.delta)
        par = rsw_ciclico(ciclico, forma)
        return ConductorSimbolo(simbolo.etiqueta, "rsw", f"nivel {par.nivel}: ({par.alfa}, {par.beta})", par.es_nulo())

    def g_barra(x: FuncionRacional, eps: bool, t: DatosTorsion) -> FuncionRacional:
        a1, a2, a3 = t.alfas
        if eps:
            return (x + _residuo_entero(a2)) * (x + _residuo_entero(a3))
        s = _escalar(a1, 4)
        return (x + _residuo_entero(a3)) * _residuo_entero(s)

    if simbolo.eps1:
        ciclico = SimboloCiclico(2, x1, "unidad", g_barra(x2, simbolo.eps2, t2))
    else:
        ciclico = SimboloCiclico(2, x2, "unidad", g_barra(x1, simbolo.eps1, t1))
    residuo = residuo_fil0(ciclico, forma)
    return ConductorSimbolo(simbolo.etiqueta, "residuo", f"{residuo.descripcion} ({residuo.evanescencia})", residuo.nulo)


# ---------------------------------------------------------------------------
# Invariancia frente al intercambio β₂ ↔ β₃
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class InformeIntercambio:
    muestras: int
    rango_original: int
    rango_intercambiado: int
    rango_conjunto: int

    @property
    def invariante(self) -> bool:
        return self.rango_original == self.rango_intercambiado == self.rango_conjunto


def rango_f2(filas: np.ndarray) -> int:
    """Rango sobre F_2 de una matriz de 0/1"""
    m = (np.array(filas, dtype=np.uint8) % 2).copy()
    if m.size == 0:
        return 0
    rango = 0
    nfilas, ncols = m.shape
    for col in range(ncols):
        pivote = next((i for i in range(rango, nfilas) if m[i, col]), None)
        if pivote is None:
            continue
        m[[rango, pivote]] = m[[pivote, rango]]
        for i in range(nfilas):
            if i != rango and m[i, col]:
                m[i] ^= m[rango]
        rango += 1
        if rango == nfilas:
            break
    return rango


def _abscisas_locales(g: CurvaLegendre, rng: random.Random) -> List[Fraction]:
    """u ∈ Q con u(u - γ₁)(u - γ₂) cuadrado no nulo de Q_2: abscisas de puntos de E(Q_2)"""
    g1, g2 = g.gamma1.valor, g.gamma2.valor
    candidatos = [Fraction(k, 4 ** j) for j in range(3) for k in range(-64, 65)]
    rng.shuffle(candidatos)
    validas = []
    for u in dict.fromkeys(candidatos):
        valor = u * (u - g1) * (u - g2)
        if valor and es_cuadrado(_exacto(valor)).es_cuadrado:
            validas.append(u)
    return validas


def _vectores_evaluacion(g1: CurvaLegendre, g2: CurvaLegendre, puntos: Sequence[Tuple[Fraction, Fraction]]) -> np.ndarray:
    filas = []
    for e1, e2 in product((True, False), repeat=2):
        fila = []
        for u1, u2 in puntos:
            a = (u1 - (g1.gamma1.valor if e1 else 0)) * (u1 - g1.gamma2.valor)
            b = (u2 - (g2.gamma1.valor if e2 else 0)) * (u2 - g2.gamma2.valor)
            fila.append(1 if simbolo_hilbert(_exacto(a), _exacto(b)) else 0)
        filas.append(fila)
    return np.array(filas, dtype=np.uint8)


def invariancia_intercambio(t1: DatosTorsion, t2: DatosTorsion, muestras: int = 24,
                            semilla: int = 0) -> InformeIntercambio:
    """
    Compara los subgrupos de (Z/2)^muestras generados por las evaluaciones de los
    cuatro símbolos con y sin intercambiar β₂ y β₃ en la primera curva.
    """
    if not (t1.exacto and t2.exacto):
        raise ValueError("La comparación de evaluaciones necesita 2-torsión racional")
    rng = random.Random(semilla)
    g1, g2 = transformada_legendre(t1), transformada_legendre(t2)
    g1_bis = transformada_legendre(t1.intercambiar())

    abscisas1 = _abscisas_locales(g1, rng)
    abscisas2 = _abscisas_locales(g2, rng)
    if not abscisas1 or not abscisas2:
        raise ValueError("No se encontraron puntos locales para las curvas")
    puntos = [(rng.choice(abscisas1), rng.choice(abscisas2)) for _ in range(muestras)]

    original = _vectores_evaluacion(g1, g2, puntos)
    intercambiado = _vectores_evaluacion(g1_bis, g2, puntos)
    informe = InformeIntercambio(
        muestras, rango_f2(original), rango_f2(intercambiado), rango_f2(np.vstack([original, intercambiado]))
    )
    logger.info(f"Invariancia β₂ ↔ β₃: rangos {informe.rango_original}, {informe.rango_intercambiado}, "
                f"{informe.rango_conjunto}")
    return informe


# ---------------------------------------------------------------------------
# Producto de dos curvas
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class InformeKummer:
    torsiones: Tuple[DatosTorsion, DatosTorsion]
    curvas: Tuple[CurvaLegendre, CurvaLegendre]
    matriz: MatrizDescenso
    descenso: InformeDescenso
    simbolos: Tuple[SimboloAzumaya, ...]
    conductores: Tuple[ConductorSimbolo, ...]
    congruencias: Tuple[bool, bool]


def analizar_producto(curva1: ParametrosCurva, curva2: ParametrosCurva, precision: Optional[int] = None,
                      cuerpo: Optional[CuerpoLocal] = None) -> InformeKummer:
    """Torsión, forma de Legendre, matriz, veredictos y símbolos de A = E1 × E2"""
    t1 = dos_torsion(curva1, precision)
    t2 = dos_torsion(curva2, precision)
    g1, g2 = transformada_legendre(t1), transformada_legendre(t2)
    matriz = construir_matriz_descenso(g1, g2)
    descenso = verificar_descenso(matriz, cuerpo)
    simbolos = tuple(
        simbolo_azumaya(e1, e2, g1, g2)
        for e1, e2 in (("gamma", "gamma"), ("gamma", "0"), ("0", "gamma"), ("0", "0"))
    )
    conductores = tuple(conductor_simbolo(s) for s in simbolos)
    return InformeKummer((t1, t2), (g1, g2), matriz, descenso, simbolos, conductores,
                         (congruencia_gamma1(g1), congruencia_gamma1(g2)))
