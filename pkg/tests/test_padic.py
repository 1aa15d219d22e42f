"""
Valoraciones, clases de cuadrados, símbolo de Hilbert y levantamiento de Hensel
"""

import itertools
from fractions import Fraction

import pytest

from fields.finite_field import crear_cuerpo
from geometry.polynomials import PolinomioHomogeneo, PolinomioInvalidoError, parsear_polinomio
from geometry.surface_fp import PuntoProyectivo, semillas_lisas
from localfields.padic import (
    CuerpoLocal, ElementoCuadratico, PrecisionInsuficienteError, ProfundidadInsuficienteError,
    SemillaInvalidaError, ValorCeroError, ValorPadico, campo_qp, descomponer, es_cuadrado, levantar_hensel,
    oraculo_isotropia, polinomio_residual, simbolo_hilbert
)

REPRESENTANTES = {
    2: [1, -1, 2, -2, 5, -5, 10, -10],
    3: [1, 2, 3, 6],
    5: [1, 2, 5, 10],
}


def _v(cuerpo, x):
    return ValorPadico.exacto(cuerpo, Fraction(x))


def _punto(ctx, *coords):
    return PuntoProyectivo(tuple(ctx.desde_entero(c) for c in coords))


# -- valoraciones --

def test_descomponer(q2):
    v, u = descomponer(_v(q2, 8))
    assert (v, u.valor) == (3, 1)
    v, u = descomponer(_v(q2, Fraction(-11, 8)))
    assert (v, u.valor) == (-3, -11)


def test_descomponer_y_recomponer(q2):
    for x in (Fraction(3, 40), Fraction(-96), Fraction(7, 2)):
        v, u = descomponer(_v(q2, x))
        assert u.valor * Fraction(2) ** v == x


def test_valor_cero(q2):
    with pytest.raises(ValorCeroError):
        descomponer(_v(q2, 0))


def test_extension_ramificada():
    k = CuerpoLocal(2, 2)
    assert k.descriptor() == {'p': 2, 'd': 2, 'e': 2, 'f': 1}
    assert str(k) == "Q_2(√2)"
    assert k.valuacion(k.uniformizador) == 1
    assert k.valuacion(2) == 2
    assert CuerpoLocal(2, 3).e == 2
    assert CuerpoLocal(2, 5).descriptor()['f'] == 2


def test_extension_invalida():
    with pytest.raises(ValueError):
        CuerpoLocal(2, 4)
    with pytest.raises(ValueError):
        CuerpoLocal(2, 17)


# -- cuadrados --

def test_cuadrados_en_q2(q2):
    assert es_cuadrado(_v(q2, 4)).es_cuadrado
    assert es_cuadrado(_v(q2, 17)).es_cuadrado
    dos = es_cuadrado(_v(q2, 2))
    assert not dos.es_cuadrado and dos.paridad == "odd"
    clase = es_cuadrado(_v(q2, 63))
    assert not clase.es_cuadrado and clase.clase_unidad == 7
    assert not es_cuadrado(_v(q2, -48)).es_cuadrado
    assert not es_cuadrado(_v(q2, -9)).es_cuadrado


def test_cuadrados_en_qp_impar():
    q5 = campo_qp(5)
    assert es_cuadrado(_v(q5, 4)).es_cuadrado
    assert es_cuadrado(_v(q5, Fraction(-1))).es_cuadrado
    assert not es_cuadrado(_v(q5, 2)).es_cuadrado
    assert not es_cuadrado(_v(campo_qp(3), -1)).es_cuadrado


def test_cuadrados_en_extension():
    k = CuerpoLocal(2, 2)
    assert es_cuadrado(ValorPadico.exacto(k, 2)).es_cuadrado
    assert not es_cuadrado(ValorPadico.exacto(k, 3)).es_cuadrado


def test_precision_insuficiente(q2):
    with pytest.raises(PrecisionInsuficienteError):
        es_cuadrado(ValorPadico(q2, Fraction(1), 2))
    assert es_cuadrado(ValorPadico(q2, Fraction(1), 3)).es_cuadrado


# -- símbolo de Hilbert --

def test_ejemplos_de_hilbert(q2):
    assert simbolo_hilbert(_v(q2, -1), _v(q2, -1)) == Fraction(1, 2)
    assert simbolo_hilbert(_v(q2, 2), _v(q2, 3)) == Fraction(1, 2)
    assert simbolo_hilbert(_v(q2, 1), _v(q2, 7)) == 0
    assert simbolo_hilbert(_v(q2, 5), _v(q2, -5)) == 0


@pytest.mark.parametrize("p", [2, 3, 5])
def test_formula_coincide_con_oraculo(p):
    cuerpo = campo_qp(p)
    profundidad = 2 * cuerpo.e + 3
    for a, b in itertools.product(REPRESENTANTES[p], repeat=2):
        formula = simbolo_hilbert(_v(cuerpo, a), _v(cuerpo, b))
        isotropa = oraculo_isotropia(_v(cuerpo, a), _v(cuerpo, b), profundidad)
        assert (formula == 0) == isotropa, (a, b)


@pytest.mark.parametrize("p", [2, 3, 5])
def test_propiedades_de_hilbert(p):
    cuerpo = campo_qp(p)
    reps = REPRESENTANTES[p]

    def h(a, b):
        return simbolo_hilbert(_v(cuerpo, a), _v(cuerpo, b))

    for a, b in itertools.product(reps, repeat=2):
        assert h(a, b) == h(b, a)
        assert h(a, -a) == 0
        assert h(a * 9 * p * p, b) == h(a, b)
        for c in reps:
            assert h(a, b * c) == (h(a, b) + h(a, c)) % 1


def test_oraculo_profundidad_minima(q2):
    with pytest.raises(ProfundidadInsuficienteError):
        oraculo_isotropia(_v(q2, 1), _v(q2, 1), 4)
    assert oraculo_isotropia(_v(q2, 1), _v(q2, 3), 5)


def test_hilbert_en_extension():
    k = CuerpoLocal(2, 2)
    # 2 es un cuadrado en Q_2(√2)
    assert simbolo_hilbert(ValorPadico.exacto(k, 2), ValorPadico.exacto(k, 3)) == 0
    assert simbolo_hilbert(ValorPadico.exacto(k, 5), ValorPadico.exacto(k, -5)) == 0


# -- Hensel --

def test_raiz_de_17():
    f2 = crear_cuerpo(2)
    f = parsear_polinomio("X^2 - 17*Y^2", ("X", "Y"))
    punto = levantar_hensel(f, _punto(f2, 1, 1), 0, 10)
    r = punto.coords[0]
    assert (r * r - 17 * punto.coords[1] ** 2) % 2 ** 10 == 0 or r * r == 17
    assert punto.cuerpo.reducir(r, 5) in (9, 23)


def test_punto_exacto_de_la_cuartica(cuartica_ciclica, f2, q2):
    punto = levantar_hensel(cuartica_ciclica, _punto(f2, 1, 0, 1, 0), 1, 12)
    assert [Fraction(c) for c in punto.coords] == [1, 0, 1, 0]


def test_semilla_fuera_de_la_superficie():
    f3 = crear_cuerpo(3)
    with pytest.raises(SemillaInvalidaError):
        levantar_hensel(parsear_polinomio("x + y + z + w"), _punto(f3, 1, 1, 0, 0), 1, 8)


def test_residuo_de_los_levantamientos(superficies, f2, q2):
    for clave in ('ex5.7', 'thm7.2:fibra_ordinaria'):
        f = superficies[clave]
        for semilla, indice in semillas_lisas(f, f2):
            punto = levantar_hensel(f, semilla, indice, 12)
            valor = f.evaluar(punto.coords)
            assert valor == 0 or q2.valuacion(valor) >= 12
            assert tuple(q2.residuo(c) for c in punto.coords) == semilla.coords


def test_reescalado_de_puntos(cuartica_ciclica, f2):
    punto = levantar_hensel(cuartica_ciclica, _punto(f2, 1, 0, 1, 0), 1, 12)
    otro = punto.escalar(3)
    assert [Fraction(c) for c in otro.coords] == [3, 0, 3, 0]
    with pytest.raises(ValueError):
        punto.escalar(2)


def test_reduccion_de_coeficientes_cuadraticos(q2):
    k = CuerpoLocal(2, 2)
    base = parsear_polinomio("x^3*y + y^3*z + z^3*w - w^4 + 2*x*y*z*w").como_dict()
    f = PolinomioHomogeneo.desde_dict({**base, (1, 0, 1, 2): ElementoCuadratico(0, -1, 2)})
    # 2 y √2 caen en el ideal maximal de Z_2[√2]
    assert polinomio_residual(f, k) == parsear_polinomio("x^3*y + y^3*z + z^3*w + w^4")
    with pytest.raises(PolinomioInvalidoError):
        polinomio_residual(f, q2)
    with pytest.raises(PolinomioInvalidoError):
        polinomio_residual(f, CuerpoLocal(2, -1))

    semilla = _punto(k.ctx_residuo, 1, 0, 1, 1)
    punto = levantar_hensel(f, semilla, 1, 12, cuerpo=k)
    valor = f.evaluar(punto.coords)
    assert valor == 0 or k.valuacion(valor) >= 12
    assert tuple(k.residuo(c) for c in punto.coords) == semilla.coords
