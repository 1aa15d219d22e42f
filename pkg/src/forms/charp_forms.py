"""
Formas diferenciales sobre cuerpos de funciones de característica p

Una q-forma se guarda por sus coordenadas en la base {1}, {du, dv} o {du∧dv};
dw nunca aparece porque se elimina con dm = 0.
"""

import logging
from dataclasses import dataclass
from typing import Dict, Optional, Sequence, Tuple

from core.errors import ErrorCalculo
from forms.function_field import ContextoFormasError, ContextoFunciones, FuncionRacional
from geometry.polynomials import PolinomioHomogeneo

logger = logging.getLogger(__name__)


class ErrorFormas(ErrorCalculo):
    """Error en el cálculo de formas diferenciales"""
    modulo = "charp_forms"


class DLogCeroError(ErrorFormas):
    """dlog de la función nula"""
    pass


class NoCerradaError(ErrorFormas):
    """Se pidió el operador de Cartier sobre una forma no cerrada"""
    pass


class CartaInseparableError(ErrorFormas):
    """∂f/∂x_q es idénticamente nula en la carta"""
    pass


@dataclass(frozen=True)
class FormaDiferencial:
    ctx: ContextoFunciones
    grado: int
    coords: Tuple[FuncionRacional, ...]

    def __post_init__(self):
        esperadas = {0: 1, 1: 2, 2: 1}
        if self.grado not in esperadas:
            raise ValueError(f"Grado {self.grado} fuera de 0..2")
        if len(self.coords) != esperadas[self.grado]:
            raise ValueError(f"Una {self.grado}-forma lleva {esperadas[self.grado]} coordenadas")
        if any(c.ctx is not self.ctx for c in self.coords):
            raise ContextoFormasError("Coordenadas de otro contexto")

    def _comprobar(self, otra: "FormaDiferencial"):
        if otra.ctx is not self.ctx:
            raise ContextoFormasError(f"Formas de {self.ctx} y {otra.ctx}")
        if otra.grado != self.grado:
            raise ValueError(f"Grados distintos: {self.grado} y {otra.grado}")

    def __add__(self, otra: "FormaDiferencial") -> "FormaDiferencial":
        self._comprobar(otra)
        return FormaDiferencial(self.ctx, self.grado, tuple(a + b for a, b in zip(self.coords, otra.coords)))

    def __neg__(self) -> "FormaDiferencial":
        return FormaDiferencial(self.ctx, self.grado, tuple(-a for a in self.coords))

    def __sub__(self, otra: "FormaDiferencial") -> "FormaDiferencial":
        return self + (-otra)

    def escalar(self, g) -> "FormaDiferencial":
        if not isinstance(g, FuncionRacional):
            g = self.ctx.constante(g)
        return FormaDiferencial(self.ctx, self.grado, tuple(g * a for a in self.coords))

    def es_cero(self) -> bool:
        return all(c.es_cero() for c in self.coords)

    def __eq__(self, otra) -> bool:
        if not isinstance(otra, FormaDiferencial):
            return NotImplemented
        if otra.ctx is not self.ctx or otra.grado != self.grado:
            return False
        return (self - otra).es_cero()

    __hash__ = None

    def __str__(self) -> str:
        if self.grado == 0:
            return str(self.coords[0])
        if self.grado == 2:
            return f"({self.coords[0]}) du∧dv"
        return f"({self.coords[0]}) du + ({self.coords[1]}) dv"


# ---------------------------------------------------------------------------
# Álgebra de formas
# ---------------------------------------------------------------------------

def funcion(g: FuncionRacional) -> FormaDiferencial:
    return FormaDiferencial(g.ctx, 0, (g,))


def uno_forma(a: FuncionRacional, b: FuncionRacional) -> FormaDiferencial:
    return FormaDiferencial(a.ctx, 1, (a, b))


def dos_forma(g: FuncionRacional) -> FormaDiferencial:
    return FormaDiferencial(g.ctx, 2, (g,))


def forma_nula(ctx: ContextoFunciones, grado: int) -> FormaDiferencial:
    return FormaDiferencial(ctx, grado, (ctx.cero,) * (2 if grado == 1 else 1))


def diferencial(forma) -> FormaDiferencial:
    """d: Ω^q → Ω^{q+1} (una función se trata como 0-forma)"""
    if isinstance(forma, FuncionRacional):
        forma = funcion(forma)
    if forma.grado == 0:
        g = forma.coords[0]
        return uno_forma(g.derivada("u"), g.derivada("v"))
    if forma.grado == 1:
        a, b = forma.coords
        return dos_forma(b.derivada("u") - a.derivada("v"))
    raise ValueError("Las formas de grado 3 quedan fuera del cálculo")


def cuna(alfa: FormaDiferencial, beta: FormaDiferencial) -> FormaDiferencial:
    if alfa.ctx is not beta.ctx:
        raise ContextoFormasError("Producto exterior de formas de contextos distintos")
    if alfa.grado + beta.grado > 2:
        raise ValueError("Las formas de grado 3 quedan fuera del cálculo")
    if alfa.grado == 0:
        return beta.escalar(alfa.coords[0])
    if beta.grado == 0:
        return alfa.escalar(beta.coords[0])
    a1, b1 = alfa.coords
    a2, b2 = beta.coords
    return dos_forma(a1 * b2 - b1 * a2)


def dlog(g: FuncionRacional) -> FormaDiferencial:
    if g.es_cero():
        raise DLogCeroError("dlog(0) no está definido")
    return diferencial(g).escalar(g.inverso())


def reducir_a_base(cu: FuncionRacional, cv: FuncionRacional, cw: FuncionRacional) -> FormaDiferencial:
    """cu du + cv dv + cw dw con dw = w_u du + w_v dv"""
    w_u, w_v = cu.ctx.derivadas_w
    return uno_forma(cu + cw * w_u, cv + cw * w_v)


def algebra_formas(operacion: str, *args) -> FormaDiferencial:
    """Despacho: differential, wedge, dlog, reduceToBase"""
    if operacion == "differential":
        return diferencial(*args)
    if operacion == "wedge":
        return cuna(*args)
    if operacion == "dlog":
        return dlog(*args)
    if operacion == "reduceToBase":
        return reducir_a_base(*args)
    raise ValueError(f"Operación desconocida: {operacion}")


# ---------------------------------------------------------------------------
# Operador de Cartier
# ---------------------------------------------------------------------------

def es_cerrada(forma: FormaDiferencial) -> bool:
    if forma.grado == 2:
        return True
    return diferencial(forma).es_cero()


def cartier(forma: FormaDiferencial, exigir_cerrada: bool = True) -> FormaDiferencial:
    """
    C sobre formas cerradas: con g = Σ u^a v^b G_ab^p,
    C(g) = G_00, C(a du + b dv) = A_{p-1,0} du + B_{0,p-1} dv y C(g du∧dv) = G_{p-1,p-1} du∧dv.
    """
    if exigir_cerrada and not es_cerrada(forma):
        raise NoCerradaError(f"La forma {forma} no es cerrada")
    ctx = forma.ctx
    p = ctx.p
    if forma.grado == 0:
        return funcion(ctx.descomponer_potencias(forma.coords[0])[(0, 0)])
    if forma.grado == 1:
        a, b = forma.coords
        ca = ctx.descomponer_potencias(a)[(p - 1, 0)] if a else ctx.cero
        cb = ctx.descomponer_potencias(b)[(0, p - 1)] if b else ctx.cero
        return uno_forma(ca, cb)
    g = forma.coords[0]
    if not g:
        return forma
    return dos_forma(ctx.descomponer_potencias(g)[(p - 1, p - 1)])


def cartier_inverso(forma: FormaDiferencial) -> FormaDiferencial:
    """Representante de C^{-1}(ω) módulo formas exactas"""
    ctx = forma.ctx
    p = ctx.p
    u, v = ctx.gen_u, ctx.gen_v
    if forma.grado == 0:
        return funcion(forma.coords[0].potencia_p())
    if forma.grado == 1:
        a, b = forma.coords
        return uno_forma(a.potencia_p() * u ** (p - 1), b.potencia_p() * v ** (p - 1))
    return dos_forma(forma.coords[0].potencia_p() * (u * v) ** (p - 1))


@dataclass(frozen=True)
class ClasificacionForma:
    cerrada: bool
    exacta: bool
    logaritmica: bool
    imagen_cartier: Optional[FormaDiferencial]


def clasificar_forma(forma: FormaDiferencial) -> ClasificacionForma:
    """Exacta si es cerrada con C(ω) = 0; logarítmica si es cerrada con C(ω) = ω"""
    if not es_cerrada(forma):
        return ClasificacionForma(False, False, False, None)
    imagen = cartier(forma, exigir_cerrada=False)
    return ClasificacionForma(True, imagen.es_cero(), imagen == forma, imagen)


# ---------------------------------------------------------------------------
# 2-formas de cartas de superficies
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CartaSuperficie:
    """
    Cuerpo de funciones de {f = 0} presentado en la carta x_p = 1 con x_q algebraica:
    las otras dos coordenadas son u, v y x_q es w. `coordenadas` son las cuatro
    funciones x_i/x_p en ese cuerpo.
    """
    ctx: ContextoFunciones
    superficie: PolinomioHomogeneo
    carta: Tuple[int, int]
    coordenadas: Tuple[FuncionRacional, ...]

    def evaluar(self, poly: PolinomioHomogeneo) -> FuncionRacional:
        """Valor de un polinomio homogéneo en (x_0/x_p : ... : x_3/x_p)"""
        ctx = self.ctx
        return poly.evaluar(self.coordenadas, ctx.constante)

    def cociente(self, num: PolinomioHomogeneo, den: PolinomioHomogeneo) -> FuncionRacional:
        if num.grado != den.grado:
            raise ValueError("El cociente debe ser homogéneo de grado 0")
        return self.evaluar(num) / self.evaluar(den)


def contexto_carta(f: PolinomioHomogeneo, p: int, carta: Tuple[int, int]) -> CartaSuperficie:
    """Construye K = F_p(u, v)[w]/(f deshomogeneizado) para la carta (p_idx, q_idx)"""
    i_p, i_q = carta
    if i_p == i_q or not (0 <= i_p < f.nvars and 0 <= i_q < f.nvars):
        raise ValueError(f"Carta inválida: {carta}")
    libres = [i for i in range(f.nvars) if i not in (i_p, i_q)]

    base = ContextoFunciones.racional(p)
    F, u, v = base.F, base.u, base.v
    valores = {libres[0]: u, libres[1]: v, i_p: F.one}

    coeficientes: Dict[int, object] = {}
    for exps, c in f.coeficientes_mod(p).items():
        termino = F(c)
        for i, e in enumerate(exps):
            if i != i_q and e:
                termino = termino * valores[i] ** e
        coeficientes[exps[i_q]] = coeficientes.get(exps[i_q], F.zero) + termino
    grado_w = max((k for k, c in coeficientes.items() if c), default=0)
    if grado_w == 0:
        raise CartaInseparableError(f"La variable {f.variables[i_q]} no aparece en f mod {p}")
    modulo = [coeficientes.get(k, F.zero) for k in range(grado_w + 1)]

    try:
        ctx = ContextoFunciones(p, modulo, nombre=f"carta {f.variables[i_p]}=1, w={f.variables[i_q]}")
    except ValueError as e:
        raise CartaInseparableError(str(e)) from e

    coords = [None] * f.nvars
    coords[i_p] = ctx.uno
    coords[libres[0]] = ctx.gen_u
    coords[libres[1]] = ctx.gen_v
    coords[i_q] = ctx.gen_w
    logger.debug(f"Contexto de carta {carta} con módulo de grado {grado_w} en w")
    return CartaSuperficie(ctx, f, carta, tuple(coords))


def forma_carta_en(carta: CartaSuperficie, indices: Tuple[int, int]) -> FormaDiferencial:
    """
    ω_{p',q'} = d(x_a/x_{p'}) ∧ d(x_b/x_{p'}) / (∂f/∂x_{q'})(x/x_{p'}) calculada en el
    cuerpo de funciones de `carta`, con (a, b) las dos coordenadas restantes en orden.
    """
    i_p, i_q = indices
    f = carta.superficie
    derivada = f.derivada(i_q)
    if derivada is None:
        raise CartaInseparableError(f"∂f/∂{f.variables[i_q]} es idénticamente nula")
    x = carta.coordenadas
    a, b = [i for i in range(f.nvars) if i not in (i_p, i_q)]
    denominador = derivada.evaluar([c / x[i_p] for c in x], carta.ctx.constante)
    if denominador.es_cero():
        raise CartaInseparableError(f"∂f/∂{f.variables[i_q]} se anula sobre la superficie")
    numerador = cuna(diferencial(x[a] / x[i_p]), diferencial(x[b] / x[i_p]))
    return numerador.escalar(denominador.inverso())


def forma_carta_k3(f: PolinomioHomogeneo, p: int, carta: Tuple[int, int]) -> FormaDiferencial:
    """2-forma ω_{p,q} = du∧dv / (∂f/∂x_q) en el cuerpo de funciones de la carta"""
    return forma_carta_en(contexto_carta(f, p, carta), carta)


def consistencia_cartas(carta: CartaSuperficie, pares: Sequence[Tuple[int, int]]) -> Dict[Tuple[int, int], bool]:
    """¿Coincide ω de cada par con la ω de la carta base? (en característica 2 sin signos)"""
    referencia = forma_carta_en(carta, carta.carta)
    resultado = {}
    for par in pares:
        otra = forma_carta_en(carta, par)
        resultado[par] = otra == referencia or (carta.ctx.p != 2 and otra == -referencia)
    logger.info(f"Consistencia de cartas respecto a {carta.carta}: {resultado}")
    return resultado
