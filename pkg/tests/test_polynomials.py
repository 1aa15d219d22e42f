"""
Lectura y escritura de polinomios homogéneos
"""

from fractions import Fraction

import pytest

from geometry.polynomials import (
    ErrorSintaxisPolinomio, NoHomogeneoError, PolinomioHomogeneo, PolinomioInvalidoError,
    VariableDesconocidaError, parsear_polinomio
)
from localfields.padic import ElementoCuadratico
from cli.parser import leer_carta, leer_enteros, leer_pares, leer_polinomio, leer_simbolo


def test_superficie_cuartica_ciclica(cuartica_ciclica):
    f = cuartica_ciclica
    assert f.grado == 4
    assert len(f.terminos) == 5
    assert f.como_dict()[(1, 1, 1, 1)] == 1


def test_monomio():
    f = parsear_polinomio("x^4")
    assert f.como_dict() == {(4, 0, 0, 0): Fraction(1)}


def test_coeficientes_racionales_y_signos():
    f = parsear_polinomio("1/2*x^2 - 3 y z + w^2")
    assert f.como_dict() == {(2, 0, 0, 0): Fraction(1, 2), (0, 1, 1, 0): Fraction(-3), (0, 0, 0, 2): Fraction(1)}


def test_identificadores_pegados():
    assert parsear_polinomio("xyzw") == parsear_polinomio("x*y*z*w")


def test_grado_esperado():
    with pytest.raises(NoHomogeneoError):
        parsear_polinomio("x^3 + y^4", grado_esperado=4)
    with pytest.raises(NoHomogeneoError):
        parsear_polinomio("x^3 + y^3", grado_esperado=4)


def test_no_homogeneo():
    with pytest.raises(NoHomogeneoError):
        parsear_polinomio("x^3 + y^4")


def test_variable_desconocida():
    with pytest.raises(VariableDesconocidaError):
        parsear_polinomio("x^4 + q^4")


def test_error_de_sintaxis_con_posicion():
    with pytest.raises(ErrorSintaxisPolinomio) as info:
        parsear_polinomio("x^4 + y^4 ! z^4")
    assert info.value.posicion == 10


def test_polinomio_nulo_rechazado():
    with pytest.raises(PolinomioInvalidoError):
        parsear_polinomio("x^4 - x^4")


def test_ida_y_vuelta(superficies):
    for f in superficies.values():
        assert parsear_polinomio(str(f)) == f
    g = parsear_polinomio("-1/3*x*y + 2*z^2")
    assert parsear_polinomio(str(g)) == g


def test_variables_propias():
    f = leer_polinomio("a^2 + b*c", "a,b,c")
    assert f.nvars == 3
    assert f.variables == ("a", "b", "c")


def test_derivada_y_producto():
    f = parsear_polinomio("x^3*y + y^3*z")
    assert f.derivada(0) == parsear_polinomio("3*x^2*y")
    assert f.derivada(3) is None
    assert parsear_polinomio("x") * parsear_polinomio("y") == parsear_polinomio("x*y")


def test_reduccion_modular():
    f = parsear_polinomio("x^4 - 4*y^4 - z^4 - w^4")
    assert f.coeficientes_mod(2) == {(4, 0, 0, 0): 1, (0, 0, 4, 0): 1, (0, 0, 0, 4): 1}
    with pytest.raises(PolinomioInvalidoError):
        parsear_polinomio("1/2*x^2 + y^2").coeficientes_mod(2)


def test_desde_dict_mezcla_grados():
    with pytest.raises(PolinomioInvalidoError):
        PolinomioHomogeneo.desde_dict({(1, 0, 0, 0): 1, (2, 0, 0, 0): 1})


def test_opciones_de_texto():
    assert leer_enteros("1,2") == [1, 2]
    assert leer_carta("0,3") == (0, 3)
    assert leer_pares("0,1;0,2") == [(0, 1), (0, 2)]
    assert list(leer_simbolo("z^3 + w^2*x + x*y*z; x^3; -z; x")) == ["z^3 + w^2*x + x*y*z", "x^3", "-z", "x"]
    with pytest.raises(ValueError):
        leer_carta("0,1,2")
    with pytest.raises(ValueError):
        leer_simbolo("x;y")


def test_coeficientes_cuadraticos():
    raiz = ElementoCuadratico(0, 1, 2)
    f = PolinomioHomogeneo.desde_dict({(1, 0, 0, 0): raiz, (0, 1, 0, 0): 3})
    assert not f.es_racional
    assert f.como_dict()[(1, 0, 0, 0)] == raiz
    assert "√2" in str(f)
    # √2·√2 = 2 vuelve a ser racional
    g = f * PolinomioHomogeneo.desde_dict({(1, 0, 0, 0): raiz})
    assert g.como_dict()[(2, 0, 0, 0)] == Fraction(2)
    assert isinstance(g.como_dict()[(2, 0, 0, 0)], Fraction)
    with pytest.raises(PolinomioInvalidoError):
        f.coeficientes_mod(2)
