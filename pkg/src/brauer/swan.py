"""
Filtración por conductores de Swan en el grupo de Brauer de cuerpos locales

Se trabaja con símbolos cíclicos de orden p descritos por su índice m en la
filtración de unidades y por las reducciones de sus entradas; el conductor de
Swan refinado es un par (α, β) de formas sobre el cuerpo residual.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Optional

from core.errors import ErrorCalculo
from forms.charp_forms import (
    FormaDiferencial, cartier, clasificar_forma, cuna, diferencial, dlog, forma_nula
)
from forms.function_field import ContextoFunciones, FuncionRacional

logger = logging.getLogger(__name__)

NO_JUEGA_PAPEL = "cannotPlayRole"
POSIBLE = "possible"


class ErrorSwan(ErrorCalculo):
    """Error en la aritmética de la filtración de Swan"""
    modulo = "swan"


class EPrimaNoEnteraError(ErrorSwan):
    """e' = ep/(p-1) no es entero"""
    pass


class FaltaCBarraError(ErrorSwan):
    """c̄ no está disponible (ζ_p no declarada en el cuerpo)"""
    pass


class NivelCeroError(ErrorSwan):
    """El símbolo está en fil_0: no hay conductor refinado"""
    pass


class CasoNoCubiertoError(ErrorSwan):
    """p no divide n y n ≠ e'"""
    pass


class FaltanHipotesisError(ErrorSwan):
    """No se aseguraron las hipótesis sobre la fibra especial"""
    pass


@dataclass(frozen=True)
class FormaLocal:
    """Constantes locales: e, e' = ep/(p-1), ū = p·π^{-e} y c̄ = (ζ-1)^p·π^{-e'} (si existe)"""
    p: int
    e: int
    e_prima: Fraction
    u_barra: int
    c_barra: Optional[int]
    uniformizador: str
    ctx_residuo: Optional[ContextoFunciones] = None

    @property
    def e_prima_entera(self) -> int:
        if self.e_prima.denominator != 1:
            raise EPrimaNoEnteraError(f"e' = {self.e_prima} no es entero (p = {self.p}, e = {self.e})")
        return int(self.e_prima)


def crear_forma_local(p: int, e: int, uniformizador: str = "p", u_barra: Optional[int] = None,
                      c_barra: Optional[int] = None, raiz_unidad: bool = False,
                      ctx_residuo: Optional[ContextoFunciones] = None) -> FormaLocal:
    """
    Constantes para la elección de uniformizador:
      "p": π = p (e = 1); "zeta": π = ζ_p - 1 (e = p - 1); "radical": π^e = p/u con
      ū = u (1 por defecto); "explicito": ū y c̄ dados.
    c̄ solo se calcula si ζ_p está en el cuerpo (siempre para p = 2) y e' es entero.
    """
    if e < 1:
        raise ValueError("e debe ser >= 1")
    e_prima = Fraction(e * p, p - 1)
    tiene_zeta = raiz_unidad or p == 2 or uniformizador == "zeta" or (uniformizador == "explicito" and c_barra is not None)

    if uniformizador == "p":
        if e != 1:
            raise ValueError("π = p solo es uniformizador si e = 1")
        ub = 1
        cb = 1 if p == 2 else None
    elif uniformizador == "zeta":
        if e != p - 1:
            raise ValueError("π = ζ_p - 1 exige e = p - 1")
        ub = (-1) % p
        cb = 1
    elif uniformizador == "radical":
        ub = (u_barra if u_barra is not None else 1) % p
        if p == 2 and e_prima.denominator == 1:
            cb = ub * ub % p
        else:
            cb = c_barra % p if (c_barra is not None and tiene_zeta) else None
    elif uniformizador == "explicito":
        if u_barra is None:
            raise ValueError("Con uniformizador explícito hay que dar ū")
        ub = u_barra % p
        cb = c_barra % p if c_barra is not None else None
    else:
        raise ValueError(f"Uniformizador desconocido: {uniformizador}")

    if ub == 0:
        raise ValueError("ū debe ser no nulo")
    if cb is not None and (e_prima.denominator != 1 or not tiene_zeta):
        cb = None
    forma = FormaLocal(p, e, e_prima, ub, cb, uniformizador, ctx_residuo)
    logger.debug(f"Forma local: {forma}")
    return forma


@dataclass(frozen=True)
class SimboloCiclico:
    """
    {1 + π^m x, y} (o {x, y} de unidades si m = 0). `segundo` es "unidad" (con ȳ)
    o "uniformizador".
    """
    m: int
    x_barra: FuncionRacional
    segundo: str = "unidad"
    y_barra: Optional[FuncionRacional] = None

    def __post_init__(self):
        if self.m < 0:
            raise ValueError("m debe ser >= 0")
        if self.segundo not in ("unidad", "uniformizador"):
            raise ValueError(f"Entrada desconocida: {self.segundo}")
        if self.segundo == "unidad" and self.y_barra is None:
            raise ValueError("Falta ȳ para la entrada unidad")


@dataclass(frozen=True)
class ParRsw:
    """rsw_n = (α, β) con dα = 0 y dβ = n·α"""
    nivel: int
    alfa: FormaDiferencial
    beta: FormaDiferencial

    @property
    def p(self) -> int:
        return self.alfa.ctx.p

    def cumple_invariantes(self) -> bool:
        if self.alfa.grado != 2 or self.beta.grado != 1:
            return False
        return diferencial(self.beta) == self.alfa.escalar(self.nivel % self.p)

    def es_nulo(self) -> bool:
        return self.alfa.es_cero() and self.beta.es_cero()


@dataclass(frozen=True)
class VeredictoFiltracion:
    veredicto: str
    motivo: str


# ---------------------------------------------------------------------------
# Operaciones
# ---------------------------------------------------------------------------

def nivel_filtracion(simbolo: SimboloCiclico, forma: FormaLocal) -> int:
    """Nivel e' - m del símbolo (fil_n con n < 0 se informa como fil_0)"""
    return max(forma.e_prima_entera - simbolo.m, 0)


def rsw_ciclico(simbolo: SimboloCiclico, forma: FormaLocal) -> ParRsw:
    """
    Conductor refinado del símbolo:
      m = 0, unidades: (c̄⁻¹ dlog x̄ ∧ dlog ȳ, 0); m = 0, uniformizador: (0, c̄⁻¹ dlog x̄);
      0 < m, unidad: α = c̄⁻¹ d(x̄ dlog ȳ) con β = c̄⁻¹ x̄ dlog ȳ y α normalizada por n⁻¹ si p ∤ n;
      0 < m, uniformizador: (0, c̄⁻¹ dx̄).
    """
    if forma.c_barra is None:
        raise FaltaCBarraError(f"Sin c̄ para p = {forma.p}, e = {forma.e}")
    n = nivel_filtracion(simbolo, forma)
    if n == 0:
        raise NivelCeroError("El símbolo está en fil_0")

    p = forma.p
    x = simbolo.x_barra
    ctx = x.ctx
    c_inv = pow(forma.c_barra, -1, p)
    cero1 = forma_nula(ctx, 1)
    cero2 = forma_nula(ctx, 2)

    if simbolo.m == 0:
        if simbolo.segundo == "unidad":
            par = ParRsw(n, cuna(dlog(x), dlog(simbolo.y_barra)).escalar(c_inv), cero1)
        else:
            par = ParRsw(n, cero2, dlog(x).escalar(c_inv))
    elif simbolo.segundo == "unidad":
        eta = dlog(simbolo.y_barra).escalar(x)
        d_eta = diferencial(eta).escalar(c_inv)
        if n % p == 0:
            par = ParRsw(n, d_eta, cero1)
        else:
            par = ParRsw(n, d_eta.escalar(pow(n, -1, p)), eta.escalar(c_inv))
    else:
        par = ParRsw(n, cero2, diferencial(x).escalar(c_inv))

    if not par.cumple_invariantes():
        raise ArithmeticError("El par producido no cumple dβ = n·α")
    logger.debug(f"rsw_{n} = ({par.alfa}, {par.beta})")
    return par


@dataclass(frozen=True)
class ResiduoFil0:
    """Residuo de un símbolo en fil_0: nulo o clase de Artin-Schreier de x̄"""
    nulo: bool
    clase: Optional[FuncionRacional]
    evanescencia: str

    @property
    def descripcion(self) -> str:
        return "zeroResidue" if self.nulo else f"artinSchreierClass({self.clase})"


def reducir_artin_schreier(x: FuncionRacional) -> FuncionRacional:
    """
    Representante canónico de x módulo ℘(F) = {f^p - f} para x polinómico en u, v:
    c·u^{pa}v^{pb} se sustituye por c·u^a v^b hasta que ningún monomio no constante
    tenga todos sus exponentes divisibles por p.
    """
    ctx = x.ctx
    p = ctx.p
    if len(x.coefs) > 1 or (x.coefs and x.coefs[0].denom != 1):
        raise ValueError("La reducción de Artin-Schreier solo es exacta para polinomios en u, v")
    if not x.coefs:
        return x
    poli = x.coefs[0].numer
    terminos: Dict[tuple, object] = {}
    pendientes = list(poli.terms())
    while pendientes:
        monomio, c = pendientes.pop()
        if any(monomio) and all(e % p == 0 for e in monomio):
            pendientes.append((tuple(e // p for e in monomio), c))
            continue
        terminos[monomio] = terminos.get(monomio, poli.ring.domain.zero) + c
    reducido = poli.ring.from_dict({k: c for k, c in terminos.items() if c})
    return ctx.elemento([ctx.F.new(reducido)])


def residuo_fil0(simbolo: SimboloCiclico, forma: FormaLocal) -> ResiduoFil0:
    """Residuo de {1 + (ζ-1)^p x, ·} en fil_0"""
    if simbolo.m != forma.e_prima_entera:
        raise ValueError(f"El símbolo no está en fil_0 (m = {simbolo.m}, e' = {forma.e_prima})")
    if simbolo.segundo == "unidad":
        return ResiduoFil0(True, None, "Ev-2")
    clase = reducir_artin_schreier(simbolo.x_barra)
    if clase.es_cero():
        return ResiduoFil0(True, None, "Ev-2")
    constante = all(sum(m) == 0 for m in clase.coefs[0].numer.monoms())
    return ResiduoFil0(False, clase, "Ev-1" if constante else "ninguna")


def rsw_potencia_tensorial(par: ParRsw, forma: FormaLocal) -> ParRsw:
    """
    rsw de A^{⊗p}: si n < e' (p | n) es (C(α), C(β)) en n/p; si n = e' es
    ((ū + C)(α), (ū + C)(β)) en n - e; si n > e' (p | n) es (ū·α, ū·β) en n - e.
    """
    n, p = par.nivel, forma.p
    e_prima = forma.e_prima
    if n == e_prima:
        ub = forma.u_barra
        alfa = par.alfa.escalar(ub) + cartier(par.alfa)
        beta = par.beta.escalar(ub) + cartier(par.beta)
        return ParRsw(n - forma.e, alfa, beta)
    if n % p:
        raise CasoNoCubiertoError(f"p = {p} no divide n = {n} y n ≠ e' = {e_prima}")
    if n < e_prima:
        return ParRsw(n // p, cartier(par.alfa), cartier(par.beta))
    return ParRsw(n - forma.e, par.alfa.escalar(forma.u_barra), par.beta.escalar(forma.u_barra))


def rsw_cambio_base(par: ParRsw, e_ext: int, a_barra: int) -> ParRsw:
    """Restricción a L'/L con índice e_ext y ā = π·π'^{-e_ext} mod π'"""
    p = par.p
    if a_barra % p == 0:
        raise ValueError("ā debe ser no nulo")
    if e_ext < 1:
        raise ValueError("e_ext debe ser >= 1")
    factor = pow(a_barra, -par.nivel, p)
    return ParRsw(e_ext * par.nivel, par.alfa.escalar(factor), par.beta.escalar(factor * (e_ext % p) % p))


def veredicto_rol(p: int, e: int, reduccion: str, hipotesis: Dict[str, bool]) -> VeredictoFiltracion:
    """
    ¿Puede la p-torsión intervenir en la obstrucción? No puede si la reducción es
    ordinaria y (p-1) ∤ e, o si es no ordinaria con e <= p-1.
    """
    if reduccion not in ("ordinary", "nonOrdinary"):
        raise ValueError(f"Tipo de reducción desconocido: {reduccion}")
    if not (hipotesis.get("es_k3") or (hipotesis.get("sin_1_formas") and hipotesis.get("h1_trivial"))):
        raise FaltanHipotesisError("Se requiere fibra K3 o bien H^0(Ω^1) = 0 y H^1(Z/p) = 0")

    if reduccion == "ordinary" and e % (p - 1) != 0:
        return VeredictoFiltracion(NO_JUEGA_PAPEL, f"reducción ordinaria con (p-1) = {p - 1} ∤ e = {e}")
    if reduccion == "nonOrdinary" and e <= p - 1:
        return VeredictoFiltracion(NO_JUEGA_PAPEL, f"reducción no ordinaria con e = {e} <= p-1 = {p - 1}")
    return VeredictoFiltracion(POSIBLE, "ningún criterio de anulación aplica")


def testigo_trascendencia(par: ParRsw) -> bool:
    """α ≠ 0 implica que la clase no es algebraica"""
    if par.nivel < 1:
        raise ValueError("Se requiere nivel >= 1")
    return not par.alfa.es_cero()


def es_par_logaritmico(par: ParRsw, forma: FormaLocal) -> bool:
    """c̄·α y c̄·β logarítmicas (pares de nivel e' de p-torsión)"""
    if forma.c_barra is None:
        raise FaltaCBarraError("Sin c̄")
    alfa = par.alfa.escalar(forma.c_barra)
    beta = par.beta.escalar(forma.c_barra)
    return clasificar_forma(alfa).logaritmica and clasificar_forma(beta).logaritmica


def es_par_exacto(par: ParRsw) -> bool:
    return clasificar_forma(par.alfa).exacta and clasificar_forma(par.beta).exacta
