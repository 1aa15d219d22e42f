"""
Evaluación de símbolos en puntos 2-ádicos, barridos y residuos moderados
"""

from fractions import Fraction

import pytest

from fields.finite_field import crear_cuerpo
from geometry.polynomials import parsear_polinomio
from geometry.surface_fp import PuntoProyectivo
from localfields import padic
from localfields.padic import CuerpoLocal, ElementoCuadratico, levantar_hensel
from brauer.brauer_eval import (
    NO_CONSTANTE, SIN_CONTRAEJEMPLO, DatoDivisor, InformeEvaluacion, MuestraVaciaError, ParSimbolo,
    SimboloIndefinidoError, SinSemillasLisasError, barrer_evaluacion, evaluar_simbolo, muestreador_constante,
    residuo_moderado, sondear_residuo, superficie_cuartica_ciclica, superficie_familia_alfa
)


@pytest.fixture(scope="module")
def cuartica():
    return superficie_cuartica_ciclica()


@pytest.fixture(scope="module")
def punto_exacto(cuartica, f2):
    semilla = PuntoProyectivo(tuple(f2.desde_entero(c) for c in (1, 0, 1, 0)))
    return levantar_hensel(cuartica.superficie, semilla, 1, 12)


def test_par_simbolo_grados_distintos():
    with pytest.raises(ValueError):
        ParSimbolo.desde_texto("x^2", "x^3", "y", "z")


def test_evaluacion_en_punto_exacto(cuartica, punto_exacto):
    # (1, -1) es trivial sobre Q_2
    assert evaluar_simbolo(cuartica.simbolo, punto_exacto) == 0


def test_simbolo_nulo_en_punto_exacto(cuartica, q2):
    # -z se anula exactamente en (1:0:0:0)
    punto = padic.punto_exacto(cuartica.superficie, (1, 0, 0, 0), q2)
    with pytest.raises(SimboloIndefinidoError):
        evaluar_simbolo(cuartica.simbolo, punto)


def test_invariancia_por_reescalado(cuartica, punto_exacto):
    valor = evaluar_simbolo(cuartica.simbolo, punto_exacto)
    for factor in (3, 5, -7, Fraction(1, 3)):
        assert evaluar_simbolo(cuartica.simbolo, punto_exacto.escalar(factor)) == valor


def test_invariancia_por_cuadrados(cuartica, q2):
    original = cuartica.simbolo
    # numerador y denominador intercambiados y factores 9 y 25
    torcido = ParSimbolo.desde_texto("x^3", "9*z^3 + 9*w^2*x + 9*x*y*z", "-z", "25*x")
    a = barrer_evaluacion(original, cuartica.superficie, q2, presupuesto=24, semilla=3)
    b = barrer_evaluacion(torcido, cuartica.superficie, q2, presupuesto=24, semilla=3)
    assert a.muestras == b.muestras


def test_barrido_reproducible(cuartica, q2):
    a = barrer_evaluacion(cuartica.simbolo, cuartica.superficie, q2, presupuesto=16, semilla=11)
    b = barrer_evaluacion(cuartica.simbolo, cuartica.superficie, q2, presupuesto=16, semilla=11)
    assert a.muestras == b.muestras
    assert a.diagnosticos == b.diagnosticos
    assert len(a.muestras) == 16
    assert a.diagnosticos['semilla'] == 11


def test_barrido_con_ceros_exactos(cuartica, q2):
    # con profundidad 1 cada disco es una semilla y (1:0:0:0) se levanta sin pasos de Newton
    informe = barrer_evaluacion(cuartica.simbolo, cuartica.superficie, q2, profundidad=1, presupuesto=12, semilla=0)
    assert informe.diagnosticos['discos'] == informe.diagnosticos['semillas']
    assert informe.diagnosticos['omitidos'] >= 1
    assert sum(informe.histograma.values()) == len(informe.muestras)


def test_parametros_de_barrido_invalidos(cuartica, q2):
    with pytest.raises(ValueError):
        barrer_evaluacion(cuartica.simbolo, cuartica.superficie, q2, presupuesto=0)
    with pytest.raises(ValueError):
        barrer_evaluacion(cuartica.simbolo, cuartica.superficie, q2, profundidad=6, precision=6)


def test_sin_semillas_lisas(cuartica, q2):
    fermat = parsear_polinomio("x^4 + y^4 + z^4 + w^4")
    with pytest.raises(SinSemillasLisasError):
        barrer_evaluacion(cuartica.simbolo, fermat, q2, presupuesto=4)


def test_histograma_y_veredicto():
    informe = InformeEvaluacion([("1:0:1:0", Fraction(0)), ("1:1:1:0", Fraction(0))])
    assert informe.histograma == {"0": 2, "1/2": 0}
    assert informe.veredicto == SIN_CONTRAEJEMPLO
    otro = InformeEvaluacion([("1:0:3:0", Fraction(1, 2))], {'omitidos': 1})
    unido = informe.unir(otro)
    assert unido.histograma == {"0": 2, "1/2": 1}
    assert unido.veredicto == NO_CONSTANTE
    assert unido.diagnosticos == {'omitidos': 1}


@pytest.mark.lento
def test_cuartica_ciclica_no_constante(cuartica, q2):
    informe = barrer_evaluacion(cuartica.simbolo, cuartica.superficie, q2)
    assert informe.veredicto == NO_CONSTANTE


@pytest.mark.lento
def test_familia_alfa_impar_no_constante(q2):
    familia = superficie_familia_alfa(1)
    informe = barrer_evaluacion(familia.simbolo, familia.superficie, q2, alternativas=familia.alternativas)
    assert informe.veredicto == NO_CONSTANTE


@pytest.mark.lento
def test_familia_alfa_par_sin_contraejemplo(q2):
    familia = superficie_familia_alfa(2)
    informe = barrer_evaluacion(familia.simbolo, familia.superficie, q2, alternativas=familia.alternativas)
    assert informe.veredicto == SIN_CONTRAEJEMPLO
    assert len(informe.muestras) >= 200
    assert informe.histograma["1/2"] == 0


def test_familia_alfa_nula():
    with pytest.raises(ValueError):
        superficie_familia_alfa(0)


def test_familia_alfa_coeficientes():
    f = superficie_familia_alfa(2).superficie
    coefs = f.como_dict()
    assert coefs[(1, 1, 1, 1)] == 4
    assert coefs[(1, 0, 1, 2)] == -1
    assert coefs[(0, 0, 0, 4)] == -1


def test_familia_alfa_raiz_de_dos():
    familia = superficie_familia_alfa(ElementoCuadratico(0, 1, 2))
    coefs = familia.superficie.como_dict()
    assert coefs[(1, 1, 1, 1)] == 2
    assert coefs[(1, 0, 1, 2)] == ElementoCuadratico(0, -1, 2)
    assert familia.d == 2
    assert familia.divisores == ()
    assert familia.simbolo.polinomios[0] == parsear_polinomio("z^2 + 2*x*y")


@pytest.mark.parametrize("alfa", [ElementoCuadratico(0, 1, 4), ElementoCuadratico(1, 1, 2), Fraction(1, 2)])
def test_familia_alfa_invalida(alfa):
    with pytest.raises(ValueError):
        superficie_familia_alfa(alfa)


def test_barrido_sobre_extension_ramificada():
    familia = superficie_familia_alfa(ElementoCuadratico(0, 1, 2))
    k = CuerpoLocal(2, 2)
    informe = barrer_evaluacion(familia.simbolo, familia.superficie, k, profundidad=2, precision=10,
                                presupuesto=8, semilla=4, alternativas=familia.alternativas)
    assert informe.diagnosticos['semillas'] > 0
    assert informe.muestras
    assert sum(informe.histograma.values()) == len(informe.muestras)


@pytest.mark.lento
def test_familia_alfa_raiz_de_dos_no_constante():
    familia = superficie_familia_alfa(ElementoCuadratico(0, 1, 2))
    informe = barrer_evaluacion(familia.simbolo, familia.superficie, CuerpoLocal(2, 2),
                                alternativas=familia.alternativas)
    assert informe.veredicto == NO_CONSTANTE


# -- residuos moderados --

@pytest.mark.parametrize("va,vb,esperado", [
    (1, 1, "-1·a·1/b"),
    (0, -1, "a"),
    (-2, 1, "a"),
    (1, 0, "1/b"),
    (2, 2, "1"),
])
def test_expresion_del_residuo(va, vb, esperado):
    expresion = residuo_moderado(DatoDivisor("D", va, vb, muestreador_constante(None, None)))
    assert str(expresion) == esperado
    assert expresion.es_trivial == (esperado == "1")


def test_sondeo_con_muestra_constante():
    f3, f5 = crear_cuerpo(3), crear_cuerpo(5)
    divisor = DatoDivisor("D", 0, 1, muestreador_constante(f5.desde_entero(2), f5.uno))
    informe = sondear_residuo(divisor, [f3, f5])
    assert (informe.total, informe.cuadrados) == (1, 0)
    assert informe.por_cuerpo == (("F_3", 0, 0), ("F_5", 1, 0))
    assert not informe.todos_cuadrados

    cuadrado = DatoDivisor("D", 1, 1, muestreador_constante(f5.desde_entero(4), f5.desde_entero(4)))
    # -1·4/4 = -1 es cuadrado en F_5
    assert sondear_residuo(cuadrado, [f5]).todos_cuadrados


def test_sondeo_vacio():
    f5 = crear_cuerpo(5)
    divisor = DatoDivisor("D", 0, 1, muestreador_constante(f5.uno, f5.uno))
    with pytest.raises(MuestraVaciaError):
        sondear_residuo(divisor, [crear_cuerpo(3)])


def test_residuos_triviales_en_la_familia_alfa():
    familia = superficie_familia_alfa(1)
    cuerpos = [crear_cuerpo(3), crear_cuerpo(5), crear_cuerpo(7)]
    for divisor in familia.divisores:
        informe = sondear_residuo(divisor, cuerpos)
        assert informe.total > 0
        assert informe.todos_cuadrados, divisor.etiqueta


def test_evaluacion_en_extension_ramificada(cuartica):
    k = CuerpoLocal(2, 2)
    semilla = PuntoProyectivo(tuple(k.ctx_residuo.desde_entero(c) for c in (1, 0, 1, 0)))
    punto = levantar_hensel(cuartica.superficie, semilla, 1, 12, cuerpo=k)
    assert evaluar_simbolo(cuartica.simbolo, punto) == 0
