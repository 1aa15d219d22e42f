"""
Reproducción de los ejemplos trabajados: cada identificador recalcula sus datos y
los compara con los valores fijados, afirmación por afirmación.
"""

import logging
from dataclasses import dataclass
from typing import Any, Callable, Dict, List

from config.constants import KUMMER_CONFIG, SUPERFICIES_EJEMPLO
from geometry.polynomials import parsear_polinomio
from geometry.surface_fp import es_k3_ordinaria
from localfields.padic import campo_qp
from brauer.brauer_eval import (
    NO_CONSTANTE, SIN_CONTRAEJEMPLO, barrer_evaluacion, superficie_cuartica_ciclica, superficie_familia_alfa
)
from brauer.kummer import (
    ParametrosCurva, analizar_producto, invariancia_intercambio, texto_valor, verificar_reescritura,
    verificar_torsion
)
from brauer.swan import (
    NO_JUEGA_PAPEL, POSIBLE, SimboloCiclico, crear_forma_local, es_par_logaritmico, nivel_filtracion,
    residuo_fil0, rsw_ciclico, testigo_trascendencia, veredicto_rol
)
from forms.charp_forms import clasificar_forma, consistencia_cartas, contexto_carta, forma_carta_en
from forms.function_field import ContextoFunciones
from cli.commands import resumen_kummer
from cli.report import Informe

logger = logging.getLogger(__name__)

K3 = {'es_k3': True}


@dataclass(frozen=True)
class Afirmacion:
    nombre: str
    esperado: Any
    obtenido: Any
    ok: bool


class Registro:
    """Acumula afirmaciones, datos calculados y avisos de una reproducción"""

    def __init__(self, ident: str, semilla: int):
        self.ident = ident
        self.semilla = semilla
        self.afirmaciones: List[Afirmacion] = []
        self.datos: Dict[str, Any] = {}
        self.avisos: List[str] = []
        self.cuerpo: Dict[str, Any] = {}

    def afirmar(self, nombre: str, esperado, obtenido) -> bool:
        ok = esperado == obtenido
        self.afirmaciones.append(Afirmacion(nombre, esperado, obtenido, ok))
        if ok:
            logger.debug(f"[{self.ident}] {nombre}: ok")
        else:
            logger.warning(f"[{self.ident}] {nombre}: esperado {esperado}, obtenido {obtenido}")
        return ok

    def informe(self) -> Informe:
        estado = "pass" if all(a.ok for a in self.afirmaciones) else "fail"
        return Informe(
            'reproduce', entradas={'id': self.ident, 'semilla': self.semilla}, cuerpo=self.cuerpo,
            resultado={
                'afirmaciones': [
                    {'nombre': a.nombre, 'esperado': a.esperado, 'obtenido': a.obtenido, 'ok': a.ok}
                    for a in self.afirmaciones
                ],
                'datos': self.datos,
            },
            avisos=self.avisos, estado=estado,
        )


def _superficie(clave: str):
    return parsear_polinomio(SUPERFICIES_EJEMPLO[clave])


def _ordinariedad(reg: Registro, clave: str, p: int, profundidades, esperado: str):
    informe = es_k3_ordinaria(_superficie(clave), p, profundidades)
    reg.datos['conteos'] = [{'n': n, 'puntos': c} for n, c in informe.conteos]
    reg.afirmar(f"reducción de {clave} sobre F_{p}^{list(profundidades)}", esperado, informe.veredicto)


def _carta_k3(clave: str, p: int = 2, indices=(0, 3)):
    carta = contexto_carta(_superficie(clave), p, indices)
    return carta, forma_carta_en(carta, indices)


def _barrido(reg: Registro, familia, esperado: str, minimo: int = 0):
    informe = barrer_evaluacion(familia.simbolo, familia.superficie, campo_qp(2),
                                semilla=reg.semilla, alternativas=familia.alternativas)
    reg.datos['evaluacion'] = {'histograma': informe.histograma, 'diagnosticos': informe.diagnosticos}
    reg.afirmar(f"evaluación de {familia.simbolo.etiqueta} sobre Q_2", esperado, informe.veredicto)
    if minimo:
        reg.afirmar("puntos evaluados", True, len(informe.muestras) >= minimo)


# ---------------------------------------------------------------------------
# Ejemplos
# ---------------------------------------------------------------------------

def _ex56(reg: Registro):
    curva = ParametrosCurva(1, 0, -7, 5)
    informe = analizar_producto(curva, curva)
    torsion, legendre = informe.torsiones[0], informe.curvas[0]
    reg.cuerpo = informe.descenso.cuerpo.descriptor()
    reg.datos.update(resumen_kummer(informe))

    reg.afirmar("Φ", [8, 11, -8, -11], list(torsion.phi))
    reg.afirmar("β", ["-11/8", "-1", "1"], [texto_valor(b) for b in torsion.betas])
    reg.afirmar("α", ["7/4", "1", "-3"], [texto_valor(a) for a in torsion.alfas])
    reg.afirmar("comprobaciones de torsión", True, all(verificar_torsion(torsion).values()))
    reg.afirmar("γ₁", "-3", texto_valor(legendre.gamma1))
    reg.afirmar("γ₂ recalculado por sustitución", "-19", texto_valor(legendre.gamma2))
    reg.afirmar("identidad del oráculo", True, legendre.oraculo.identidad)
    reg.afirmar("cúbica en u₁", [1, 1, -104, 336], list(legendre.oraculo.cubica_u1))

    impreso = KUMMER_CONFIG['gamma2_impreso']
    reg.datos['gamma2_impreso'] = impreso
    if legendre.gamma2.valor != impreso:
        reg.avisos.append(f"γ₂ impreso {impreso}; la sustitución da {texto_valor(legendre.gamma2)}")
    fila_impresa = [str(x) for x in KUMMER_CONFIG['fila1_impresa']]
    reg.datos['fila1_impresa'] = fila_impresa
    if informe.matriz.filas_texto()[0] != fila_impresa:
        reg.avisos.append(f"Primera fila impresa {fila_impresa}; recalculada {informe.matriz.filas_texto()[0]}")

    reg.afirmar("matriz de descenso", [
        ["1", "57", "57", "-9"],
        ["57", "1", "9", "-48"],
        ["57", "9", "1", "-48"],
        ["-9", "-48", "-48", "1"],
    ], informe.matriz.filas_texto())
    reg.afirmar("cada fila tiene un no cuadrado de Q_2", [True] * 4,
                [bool(v.no_cuadrados) for v in informe.descenso.veredictos])
    reg.afirmar("veredictos de descenso", [False] * 4, list(informe.descenso.filas_veredicto))
    reg.afirmar("reescrituras", True, all(all(verificar_reescritura(s).values()) for s in informe.simbolos))
    reg.afirmar("residuos nulos de A(γ1,γ2), A(γ1,0), A(0,γ2)", [True, True, True, False],
                [c.nulo for c in informe.conductores])
    reg.afirmar("congruencia de γ₁ módulo 8", [True, True], list(informe.congruencias))

    intercambio = invariancia_intercambio(*informe.torsiones, semilla=reg.semilla)
    reg.datos['intercambio'] = {
        'muestras': intercambio.muestras,
        'rangos': [intercambio.rango_original, intercambio.rango_intercambiado, intercambio.rango_conjunto],
    }
    reg.afirmar("evaluaciones invariantes por β₂ ↔ β₃", True, intercambio.invariante)


def _ex57(reg: Registro):
    reg.cuerpo = campo_qp(2).descriptor()
    _ordinariedad(reg, 'ex5.7', 2, (1, 2), "ordinary")

    carta, omega = _carta_k3('ex5.7')
    clase = clasificar_forma(omega)
    reg.datos['forma'] = str(omega)
    reg.afirmar("ω logarítmica", True, clase.logaritmica)
    reg.afirmar("consistencia de cartas", {(0, 1): True, (0, 2): True}, consistencia_cartas(carta, [(0, 1), (0, 2)]))

    familia = superficie_cuartica_ciclica()
    s = familia.simbolo
    forma = crear_forma_local(2, 1, "p")
    par = rsw_ciclico(SimboloCiclico(0, carta.cociente(s.f_num, s.f_den), "unidad",
                                     carta.cociente(s.g_num, s.g_den)), forma)
    reg.afirmar("nivel de rsw", 2, par.nivel)
    reg.afirmar("rsw = (ω, 0)", (True, True), (par.alfa == omega, par.beta.es_cero()))
    reg.afirmar("par logarítmico", True, es_par_logaritmico(par, forma))
    reg.afirmar("testigo de trascendencia", True, testigo_trascendencia(par))
    reg.afirmar("veredicto (2, 1, ordinaria)", POSIBLE, veredicto_rol(2, 1, "ordinary", K3).veredicto)
    _barrido(reg, familia, NO_CONSTANTE)


def _ex58(reg: Registro):
    ctx = ContextoFunciones.racional(3)
    s, t = ctx.gen_u, ctx.gen_v
    forma = crear_forma_local(3, 2, "zeta", ctx_residuo=ctx)
    reg.cuerpo = {'p': 3, 'e': 2, 'uniformizador': 'ζ_3 - 1'}
    reg.afirmar("(e', ū, c̄)", ("3", 2, 1), (str(forma.e_prima), forma.u_barra, forma.c_barra))

    par = rsw_ciclico(SimboloCiclico(0, t, "unidad", s), forma)
    reg.datos['rsw'] = {'nivel': par.nivel, 'alfa': str(par.alfa), 'beta': str(par.beta)}
    reg.afirmar("nivel de rsw", 3, par.nivel)
    reg.afirmar("α no nula", False, par.alfa.es_cero())
    reg.afirmar("dα = 0, dβ = nα", True, par.cumple_invariantes())
    reg.afirmar("par logarítmico", True, es_par_logaritmico(par, forma))
    reg.afirmar("testigo de trascendencia", True, testigo_trascendencia(par))
    reg.afirmar("veredicto (3, 2, ordinaria)", POSIBLE, veredicto_rol(3, 2, "ordinary", K3).veredicto)


def _ex59(reg: Registro):
    reg.cuerpo = {'p': 5, 'n': [1, 2]}
    _ordinariedad(reg, 'ex5.9', 5, (1, 2), "ordinary")
    reg.afirmar("veredicto (5, 4, ordinaria)", POSIBLE, veredicto_rol(5, 4, "ordinary", K3).veredicto)


def _sec64(reg: Registro):
    reg.cuerpo = {'p': 3, 'n': [2, 4]}
    _ordinariedad(reg, 'sec6.4', 3, (2, 4), "non-ordinary")
    reg.afirmar("veredicto (3, 4, no ordinaria)", POSIBLE, veredicto_rol(3, 4, "nonOrdinary", K3).veredicto)


def _simbolo_fibra(carta, m: int) -> SimboloCiclico:
    """{1 + π^m·xy/z², z/x} en el cuerpo de funciones de la fibra"""
    return SimboloCiclico(m, carta.cociente(parsear_polinomio("x*y"), parsear_polinomio("z^2")), "unidad",
                          carta.cociente(parsear_polinomio("z"), parsear_polinomio("x")))


def _thm72_impar(reg: Registro):
    reg.cuerpo = campo_qp(2).descriptor()
    _ordinariedad(reg, 'thm7.2:fibra_ordinaria', 2, (1, 2), "ordinary")
    carta, omega = _carta_k3('thm7.2:fibra_ordinaria')
    reg.afirmar("C(ω) = ω", True, clasificar_forma(omega).logaritmica)

    f = carta.cociente(parsear_polinomio("z^2 + x*y"), parsear_polinomio("z^2"))
    g = carta.cociente(parsear_polinomio("z"), parsear_polinomio("x"))
    forma = crear_forma_local(2, 1, "p")
    par = rsw_ciclico(SimboloCiclico(0, f, "unidad", g), forma)
    reg.afirmar("rsw = (ω, 0) en nivel 2", (2, True, True), (par.nivel, par.alfa == omega, par.beta.es_cero()))
    reg.afirmar("veredicto (2, 1, ordinaria)", POSIBLE, veredicto_rol(2, 1, "ordinary", K3).veredicto)
    _barrido(reg, superficie_familia_alfa(1), NO_CONSTANTE)


def _thm72_2mod4(reg: Registro):
    reg.cuerpo = {'p': 2, 'e': 2, 'uniformizador': 'π² = 2'}
    _ordinariedad(reg, 'thm7.2:fibra_2mod4', 2, (1, 2), "non-ordinary")
    carta, omega = _carta_k3('thm7.2:fibra_2mod4')
    reg.afirmar("C(ω) = 0", True, clasificar_forma(omega).exacta)

    forma = crear_forma_local(2, 2, "radical", u_barra=1)
    reg.afirmar("(e', c̄)", ("4", 1), (str(forma.e_prima), forma.c_barra))
    par = rsw_ciclico(_simbolo_fibra(carta, 2), forma)
    reg.afirmar("rsw = (ω, 0) en nivel 2", (2, True, True), (par.nivel, par.alfa == omega, par.beta.es_cero()))
    reg.afirmar("dα = 0, dβ = nα", True, par.cumple_invariantes())
    reg.afirmar("veredicto (2, 2, no ordinaria)", POSIBLE, veredicto_rol(2, 2, "nonOrdinary", K3).veredicto)


def _thm72_0mod4(reg: Registro):
    reg.cuerpo = campo_qp(2).descriptor()
    _ordinariedad(reg, 'thm7.2:fibra_0mod4', 2, (1, 2), "non-ordinary")
    carta, omega = _carta_k3('thm7.2:fibra_0mod4')
    reg.afirmar("C(ω) = 0", True, clasificar_forma(omega).exacta)

    forma = crear_forma_local(2, 2, "radical", u_barra=1)
    simbolo = _simbolo_fibra(carta, 4)
    reg.afirmar("nivel de filtración", 0, nivel_filtracion(simbolo, forma))
    residuo = residuo_fil0(simbolo, forma)
    reg.datos['residuo'] = {'descripcion': residuo.descripcion, 'evanescencia': residuo.evanescencia}
    reg.afirmar("residuo en fil_0", "zeroResidue", residuo.descripcion)
    reg.afirmar("veredicto (2, 1, no ordinaria)", NO_JUEGA_PAPEL, veredicto_rol(2, 1, "nonOrdinary", K3).veredicto)
    _barrido(reg, superficie_familia_alfa(2), SIN_CONTRAEJEMPLO, minimo=200)


REPRODUCCIONES: Dict[str, Callable[[Registro], None]] = {
    'ex5.6': _ex56,
    'ex5.7': _ex57,
    'ex5.8': _ex58,
    'ex5.9': _ex59,
    'sec6.4': _sec64,
    'thm7.2:odd': _thm72_impar,
    'thm7.2:2mod4': _thm72_2mod4,
    'thm7.2:0mod4': _thm72_0mod4,
}


def reproducir(ident: str, semilla: int = 0) -> Informe:
    if ident not in REPRODUCCIONES:
        raise ValueError(f"Identificador desconocido '{ident}'; disponibles: {', '.join(REPRODUCCIONES)}")
    reg = Registro(ident, semilla)
    logger.info(f"Reproduciendo {ident}")
    REPRODUCCIONES[ident](reg)
    informe = reg.informe()
    fallidas = [a.nombre for a in reg.afirmaciones if not a.ok]
    if fallidas:
        logger.error(f"{ident}: {len(fallidas)} afirmaciones fallidas: {fallidas}")
    else:
        logger.info(f"{ident}: {len(reg.afirmaciones)} afirmaciones correctas")
    return informe
