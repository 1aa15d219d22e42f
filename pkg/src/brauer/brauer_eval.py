"""
Evaluación de álgebras de cuaterniones (f, g) en puntos p-ádicos de superficies,
búsqueda de no constancia de la evaluación y residuos moderados a lo largo de divisores
"""

import logging
import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple, Union

from config.constants import ESCANEO_CONFIG
from core.errors import ErrorCalculo
from fields.finite_field import CuerpoFinito, ElementoCuerpo
from geometry.polynomials import PolinomioHomogeneo, parsear_polinomio
from geometry.surface_fp import puntos_en, semillas_lisas
from localfields.padic import (
    CuerpoLocal, ElementoCuadratico, NewtonEstancadoError, PrecisionInsuficienteError, PuntoSuperficiePadico,
    ValorCeroError, ValorPadico, coordenadas_variables, levantar_desde, polinomio_residual, refinar_disco,
    simbolo_hilbert
)

logger = logging.getLogger(__name__)

NO_CONSTANTE = "nonConstant"
SIN_CONTRAEJEMPLO = "noCounterexampleFound"


class ErrorEvaluacion(ErrorCalculo):
    """Error al evaluar símbolos de Brauer"""
    modulo = "brauer_eval"


class SimboloIndefinidoError(ErrorEvaluacion):
    """f o g vale 0 (o no se distingue de 0) en el punto"""
    pass


class SinSemillasLisasError(ErrorEvaluacion):
    """La reducción no tiene puntos lisos sobre el cuerpo residual"""
    pass


class MuestraVaciaError(ErrorEvaluacion):
    """El muestreador del divisor no produjo ningún punto"""
    pass


@dataclass(frozen=True)
class ParSimbolo:
    """Álgebra de cuaterniones (f_num/f_den, g_num/g_den) sobre P^3"""
    f_num: PolinomioHomogeneo
    f_den: PolinomioHomogeneo
    g_num: PolinomioHomogeneo
    g_den: PolinomioHomogeneo
    etiqueta: str = ""

    def __post_init__(self):
        if self.f_num.grado != self.f_den.grado or self.g_num.grado != self.g_den.grado:
            raise ValueError("Numerador y denominador deben tener el mismo grado")

    @classmethod
    def desde_texto(cls, f_num: str, f_den: str, g_num: str, g_den: str,
                    etiqueta: str = "") -> "ParSimbolo":
        return cls(*(parsear_polinomio(t) for t in (f_num, f_den, g_num, g_den)), etiqueta=etiqueta)

    @property
    def polinomios(self) -> Tuple[PolinomioHomogeneo, ...]:
        return (self.f_num, self.f_den, self.g_num, self.g_den)

    def __str__(self) -> str:
        return f"(({self.f_num})/({self.f_den}), ({self.g_num})/({self.g_den}))"


@dataclass
class InformeEvaluacion:
    """Muestras (resumen del punto, valor), histograma y veredicto del barrido"""
    muestras: List[Tuple[str, Fraction]] = field(default_factory=list)
    diagnosticos: Dict[str, object] = field(default_factory=dict)

    @property
    def histograma(self) -> Dict[str, int]:
        conteo = {"0": 0, "1/2": 0}
        for _, valor in self.muestras:
            conteo[str(valor)] += 1
        return conteo

    @property
    def veredicto(self) -> str:
        h = self.histograma
        return NO_CONSTANTE if h["0"] and h["1/2"] else SIN_CONTRAEJEMPLO

    def unir(self, otro: "InformeEvaluacion") -> "InformeEvaluacion":
        diagnosticos = dict(self.diagnosticos)
        for clave, valor in otro.diagnosticos.items():
            if isinstance(valor, int) and isinstance(diagnosticos.get(clave), int):
                diagnosticos[clave] += valor
            else:
                diagnosticos.setdefault(clave, valor)
        return InformeEvaluacion(self.muestras + otro.muestras, diagnosticos)


# ---------------------------------------------------------------------------
# Evaluación puntual
# ---------------------------------------------------------------------------

def evaluar_simbolo(simbolo: ParSimbolo, punto: PuntoSuperficiePadico) -> Fraction:
    """
    Valor de (f(P), g(P)) en {0, 1/2}.

    Como f = f_num/f_den ≡ f_num·f_den módulo cuadrados, se usa el producto y así
    el resultado no depende del representante homogéneo de P.
    """
    cuerpo = punto.cuerpo
    valores = []
    for poly in simbolo.polinomios:
        valor = ValorPadico(cuerpo, cuerpo.numero(poly.evaluar(punto.coords)), punto.precision_coordenadas)
        try:
            valor.valuacion()
        except (PrecisionInsuficienteError, ValorCeroError, ArithmeticError) as e:
            raise SimboloIndefinidoError(f"{poly} no se distingue de 0 en el punto") from e
        valores.append(valor)

    a = valores[0] * valores[1]
    b = valores[2] * valores[3]
    return simbolo_hilbert(a, b)


def _evaluar_con_alternativas(simbolos: Sequence[ParSimbolo], punto: PuntoSuperficiePadico) -> Tuple[Fraction, int]:
    for i, simbolo in enumerate(simbolos):
        try:
            return evaluar_simbolo(simbolo, punto), i
        except SimboloIndefinidoError:
            continue
    raise SimboloIndefinidoError("Ninguna representación está definida en el punto")


# ---------------------------------------------------------------------------
# Barrido de discos residuales
# ---------------------------------------------------------------------------

def _digitos_aleatorios(cuerpo: CuerpoLocal, desde: int, hasta: int, rng: random.Random):
    total = cuerpo.numero(0)
    for i in range(desde, hasta):
        total = total + rng.choice(cuerpo.digitos) * cuerpo.potencia_pi(i)
    return total


def barrer_evaluacion(simbolo: ParSimbolo, f: PolinomioHomogeneo, cuerpo: CuerpoLocal,
                      profundidad: int = ESCANEO_CONFIG['profundidad_disco'],
                      precision: int = ESCANEO_CONFIG['precision'],
                      presupuesto: int = ESCANEO_CONFIG['presupuesto'],
                      semilla: int = ESCANEO_CONFIG['semilla'],
                      alternativas: Sequence[ParSimbolo] = ()) -> InformeEvaluacion:
    """
    Recorre los discos residuales módulo π^profundidad sobre las semillas lisas,
    levanta un representante por disco y evalúa el símbolo.

    El veredicto solo es `nonConstant` cuando ambos valores se han observado; en otro
    caso es `noCounterexampleFound`, nunca una afirmación de constancia. Si el número
    de discos no alcanza el presupuesto se añaden puntos aleatorios dentro de los discos.
    """
    if presupuesto < 1:
        raise ValueError("El presupuesto debe ser positivo")
    if profundidad < 1 or precision <= profundidad:
        raise ValueError("Se requiere 1 <= profundidad < precision")

    semillas = semillas_lisas(polinomio_residual(f, cuerpo), cuerpo.ctx_residuo)
    if not semillas:
        raise SinSemillasLisasError(f"Sin puntos lisos sobre {cuerpo.ctx_residuo}")

    discos = [(s, i, coords) for s, i in semillas for coords in refinar_disco(s, i, cuerpo, profundidad)]
    rng = random.Random(semilla)
    orden = list(range(len(discos)))
    rng.shuffle(orden)
    simbolos = [simbolo, *alternativas]

    informe = InformeEvaluacion(diagnosticos={
        'semillas': len(semillas), 'discos': len(discos), 'omitidos': 0,
        'alternativas_usadas': 0, 'muestras_extra': 0, 'precision': precision,
        'profundidad': profundidad, 'presupuesto': presupuesto, 'semilla': semilla,
    })
    logger.info(f"Barrido sobre {cuerpo}: {len(semillas)} semillas, {len(discos)} discos")

    def evaluar_coords(indice_libre: int, coords) -> bool:
        for extra in (0, 8):
            try:
                punto = levantar_desde(f, cuerpo, coords, indice_libre, precision + extra)
                valor, usada = _evaluar_con_alternativas(simbolos, punto)
            except PrecisionInsuficienteError:
                continue
            except (NewtonEstancadoError, SimboloIndefinidoError) as e:
                logger.debug(f"Punto omitido: {e}")
                break
            if usada:
                informe.diagnosticos['alternativas_usadas'] += 1
            informe.muestras.append((punto.resumen(profundidad), valor))
            return True
        informe.diagnosticos['omitidos'] += 1
        return False

    for k in orden:
        if len(informe.muestras) >= presupuesto:
            break
        s, i, coords = discos[k]
        evaluar_coords(i, coords)

    intentos = 0
    while len(informe.muestras) < presupuesto and intentos < ESCANEO_CONFIG['max_muestras_extra']:
        intentos += 1
        s, i, coords = discos[rng.randrange(len(discos))]
        coords = list(coords)
        for j in coordenadas_variables(s, i):
            coords[j] = coords[j] + _digitos_aleatorios(cuerpo, profundidad, precision, rng)
        if evaluar_coords(i, coords):
            informe.diagnosticos['muestras_extra'] += 1

    logger.info(f"Barrido terminado: {informe.histograma} -> {informe.veredicto}")
    if informe.diagnosticos['omitidos']:
        logger.warning(f"{informe.diagnosticos['omitidos']} puntos omitidos por símbolo indefinido")
    return informe


# ---------------------------------------------------------------------------
# Residuos moderados
# ---------------------------------------------------------------------------

Muestreador = Callable[[CuerpoFinito], Iterable[Tuple[ElementoCuerpo, ElementoCuerpo]]]


@dataclass(frozen=True)
class DatoDivisor:
    """Divisor D con ν_D(a), ν_D(b) y un muestreador de las partes unitarias (ā, b̄) en puntos de D"""
    etiqueta: str
    va: int
    vb: int
    muestreador: Muestreador


@dataclass(frozen=True)
class ExpresionResiduo:
    """(-1)^{va·vb} ā^{vb} / b̄^{va} módulo cuadrados: exponentes reducidos mod 2"""
    etiqueta: str
    exponente_signo: int
    exponente_a: int
    exponente_b: int

    @property
    def es_trivial(self) -> bool:
        return not (self.exponente_signo or self.exponente_a or self.exponente_b)

    def __str__(self) -> str:
        factores = []
        if self.exponente_signo:
            factores.append("-1")
        if self.exponente_a:
            factores.append("a")
        if self.exponente_b:
            factores.append("1/b")
        return "·".join(factores) if factores else "1"


@dataclass(frozen=True)
class InformeSondeo:
    etiqueta: str
    total: int
    cuadrados: int
    por_cuerpo: Tuple[Tuple[str, int, int], ...]

    @property
    def fraccion(self) -> Fraction:
        return Fraction(self.cuadrados, self.total)

    @property
    def todos_cuadrados(self) -> bool:
        return self.cuadrados == self.total


def residuo_moderado(divisor: DatoDivisor) -> ExpresionResiduo:
    return ExpresionResiduo(
        divisor.etiqueta,
        (divisor.va * divisor.vb) % 2,
        divisor.vb % 2,
        divisor.va % 2,
    )


def valor_residuo(divisor: DatoDivisor, a: ElementoCuerpo, b: ElementoCuerpo) -> ElementoCuerpo:
    signo = -1 if (divisor.va * divisor.vb) % 2 else 1
    return signo * (a ** divisor.vb) / (b ** divisor.va)


def sondear_residuo(divisor: DatoDivisor, cuerpos: Sequence[CuerpoFinito]) -> InformeSondeo:
    """
    Evalúa el residuo en los puntos muestreados de D y cuenta cuántos valores son
    cuadrados. Que todos lo sean es un indicio, no una prueba, de residuo trivial.
    """
    por_cuerpo = []
    total = cuadrados = 0
    for ctx in cuerpos:
        n = c = 0
        for a, b in divisor.muestreador(ctx):
            n += 1
            if ctx.es_cuadrado(valor_residuo(divisor, a, b)):
                c += 1
        por_cuerpo.append((str(ctx), n, c))
        total += n
        cuadrados += c
        logger.debug(f"{divisor.etiqueta} sobre {ctx}: {c}/{n} cuadrados")

    if total == 0:
        raise MuestraVaciaError(f"Sin puntos muestreados en {divisor.etiqueta}")
    logger.info(f"Residuo en {divisor.etiqueta}: {cuadrados}/{total} cuadrados")
    return InformeSondeo(divisor.etiqueta, total, cuadrados, tuple(por_cuerpo))


def muestreador_en_curva(ecuaciones: Sequence[PolinomioHomogeneo],
                         a: Tuple[PolinomioHomogeneo, PolinomioHomogeneo],
                         b: Tuple[PolinomioHomogeneo, PolinomioHomogeneo]) -> Muestreador:
    """
    Muestreador sobre los puntos F_q de la curva {ecuaciones = 0}; ā y b̄ se dan como
    cocientes de polinomios y se omiten los puntos donde no están definidas o se anulan.
    """
    def muestrear(ctx: CuerpoFinito):
        for punto in puntos_en(ecuaciones, ctx):
            valores = [poly.evaluar_en(ctx, punto.coords) for poly in (*a, *b)]
            if any(v.es_cero() for v in valores):
                continue
            yield valores[0] / valores[1], valores[2] / valores[3]
    return muestrear


def muestreador_constante(a: ElementoCuerpo, b: ElementoCuerpo) -> Muestreador:
    def muestrear(ctx: CuerpoFinito):
        if ctx == a.ctx:
            yield a, b
    return muestrear


# ---------------------------------------------------------------------------
# Familias de superficies con sus álgebras
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FamiliaSuperficie:
    """Superficie, su álgebra, representaciones equivalentes y divisores de la pureza"""
    superficie: PolinomioHomogeneo
    simbolo: ParSimbolo
    alternativas: Tuple[ParSimbolo, ...] = ()
    divisores: Tuple[DatoDivisor, ...] = ()
    d: Optional[int] = None


def superficie_cuartica_ciclica() -> FamiliaSuperficie:
    """x³y + y³z + z³w + w³x + xyzw con ((z³ + w²x + xyz)/x³, -z/x)"""
    superficie = parsear_polinomio("x^3*y + y^3*z + z^3*w + w^3*x + x*y*z*w")
    simbolo = ParSimbolo.desde_texto("z^3 + w^2*x + x*y*z", "x^3", "-z", "x", etiqueta="cuartica_ciclica")
    return FamiliaSuperficie(superficie, simbolo)


def _alfa_cuadrado(alfa) -> int:
    """α² como entero; α es un entero o b√m con b racional"""
    if isinstance(alfa, ElementoCuadratico):
        if alfa.a != 0 or alfa.b == 0:
            raise ValueError(f"α = {alfa} debe ser de la forma b√m")
        if alfa.d in (0, 1) or (alfa.d > 0 and isqrt(alfa.d) ** 2 == alfa.d):
            raise ValueError(f"√{alfa.d} es racional: use α entero")
        a2 = alfa.b * alfa.b * alfa.d
    else:
        a2 = Fraction(alfa) ** 2
    if a2 == 0:
        raise ValueError("α debe ser no nulo")
    if a2.denominator != 1:
        raise ValueError(f"α² = {a2} debe ser entero")
    return int(a2)


def superficie_familia_alfa(alfa: Union[int, ElementoCuadratico]) -> FamiliaSuperficie:
    """
    x³y + y³z + z³w - w⁴ + α²xyzw - (2/α)xzw² con ((z² + α²xy)/z², -z/x), su reescritura
    ((z² + α²xy)/x², -z/x) y los divisores x = 0, z = 0 y {z² + α²xy = 0}.

    Con α = b√m la superficie vive sobre Q(√m) y no lleva divisores: sus residuos se
    muestrean sobre F_p con α racional.
    """
    a2 = _alfa_cuadrado(alfa)
    if isinstance(alfa, ElementoCuadratico):
        coef_alfa = Fraction(-2) / alfa
        d = alfa.d
    else:
        coef_alfa = Fraction(-2, alfa)
        d = None
    base = parsear_polinomio(f"x^3*y + y^3*z + z^3*w - w^4 + {a2}*x*y*z*w")
    superficie = PolinomioHomogeneo.desde_dict({**base.como_dict(), (1, 0, 1, 2): coef_alfa})
    conica = parsear_polinomio(f"z^2 + {a2}*x*y")
    simbolo = ParSimbolo(conica, parsear_polinomio("z^2"), parsear_polinomio("-z"), parsear_polinomio("x"),
                         etiqueta=f"familia_alfa_{alfa}")
    alternativa = ParSimbolo(conica, parsear_polinomio("x^2"), parsear_polinomio("-z"), parsear_polinomio("x"),
                             etiqueta=f"familia_alfa_{alfa}_reescrita")
    if d is not None:
        return FamiliaSuperficie(superficie, simbolo, (alternativa,), d=d)

    uno = parsear_polinomio("1")
    menos_uno = parsear_polinomio("-1")
    x, z = parsear_polinomio("x"), parsear_polinomio("z")
    divisores = (
        DatoDivisor("D1: x = 0", 0, -1,
                    muestreador_en_curva([superficie, x], (conica, parsear_polinomio("z^2")), (menos_uno, uno))),
        DatoDivisor("D2: z = 0", -2, 1,
                    muestreador_en_curva([superficie, z], (conica, parsear_polinomio("x^2")), (menos_uno, uno))),
        DatoDivisor("D3: z^2 + α^2·x·y = 0", 1, 0,
                    muestreador_en_curva([superficie, conica], (uno, uno), (parsear_polinomio("-z"), x))),
    )
    return FamiliaSuperficie(superficie, simbolo, (alternativa,), divisores)
