"""
Conteo de puntos, semillas lisas y criterio de ordinariedad
"""

import itertools

import pytest

from fields.finite_field import crear_cuerpo
from geometry import surface_fp
from geometry.polynomials import parsear_polinomio
from geometry.surface_fp import (
    ProfundidadesInconsistentesError, contar_puntos, es_k3_ordinaria, puntos_en, semillas_lisas
)


def test_hiperplano(f2):
    assert contar_puntos(parsear_polinomio("x"), f2) == 7


def test_potencia_de_hiperplano():
    assert contar_puntos(parsear_polinomio("x^4"), crear_cuerpo(3)) == 13


def test_cuartica_ciclica_sobre_f2(cuartica_ciclica, f2):
    total = contar_puntos(cuartica_ciclica, f2)
    assert total == 10
    assert total % 2 == 0


def test_conteo_coincide_con_enumeracion(cuartica_ciclica, f4):
    puntos = puntos_en([cuartica_ciclica], f4)
    assert len(puntos) == contar_puntos(cuartica_ciclica, f4)
    assert len({tuple(c.indice for c in pt.coords) for pt in puntos}) == len(puntos)
    for pt in puntos:
        assert cuartica_ciclica.evaluar_en(f4, pt.coords).es_cero()


def test_invariancia_por_permutaciones(cuartica_ciclica, f4):
    total = contar_puntos(cuartica_ciclica, f4)
    for permutacion in itertools.permutations(range(4)):
        assert contar_puntos(cuartica_ciclica.permutar(permutacion), f4) == total


def test_espacio_completo_por_cartas(f9):
    # 3·x^4 se reduce a 0 módulo 3: todos los puntos de P^3(F_9)
    q = f9.q
    assert len(puntos_en([parsear_polinomio("3*x^4")], f9)) == q ** 3 + q ** 2 + q + 1


def test_semilla_de_la_cuartica_ciclica(cuartica_ciclica, f2):
    semillas = dict(((tuple(c.indice for c in pt.coords)), i) for pt, i in semillas_lisas(cuartica_ciclica, f2))
    assert semillas[(1, 0, 1, 0)] == 1


def test_semillas_del_hiperplano(f2):
    semillas = semillas_lisas(parsear_polinomio("x"), f2)
    assert len(semillas) == 7
    assert all(i == 0 for _, i in semillas)


def test_fermat_sin_semillas_en_caracteristica_2(f2):
    assert semillas_lisas(parsear_polinomio("x^4 + y^4 + z^4 + w^4"), f2) == []


def test_semillas_validas(superficies, f4):
    f = superficies['thm7.2:fibra_ordinaria']
    for punto, indice in semillas_lisas(f, f4):
        assert f.evaluar_en(f4, punto.coords).es_cero()
        assert not f.derivada(indice).evaluar_en(f4, punto.coords).es_cero()


@pytest.mark.parametrize("clave,p,profundidades,veredicto", [
    ('ex5.7', 2, (1, 2), "ordinary"),
    ('thm7.2:fibra_ordinaria', 2, (1, 2), "ordinary"),
    ('thm7.2:fibra_2mod4', 2, (1, 2), "non-ordinary"),
    ('thm7.2:fibra_0mod4', 2, (1, 2), "non-ordinary"),
    ('ex5.9', 5, (1, 2), "ordinary"),
])
def test_tabla_de_ordinariedad(superficies, clave, p, profundidades, veredicto):
    informe = es_k3_ordinaria(superficies[clave], p, profundidades)
    assert informe.veredicto == veredicto
    assert informe.restos == tuple(c % p for _, c in informe.conteos)


@pytest.mark.lento
def test_ordinariedad_sobre_f9(superficies):
    informe = es_k3_ordinaria(superficies['sec6.4'], 3, (2, 4))
    assert informe.veredicto == "non-ordinary"
    assert not informe.es_ordinaria


def test_fibra_no_ordinaria_cuenta_impar(superficies, f2):
    assert contar_puntos(superficies['thm7.2:fibra_2mod4'], f2) == 9


def test_profundidades_invalidas(cuartica_ciclica):
    with pytest.raises(ValueError):
        es_k3_ordinaria(cuartica_ciclica, 2, ())
    with pytest.raises(ValueError):
        es_k3_ordinaria(cuartica_ciclica, 2, (0,))


def test_profundidades_inconsistentes(monkeypatch, cuartica_ciclica):
    # conteos impuestos: par sobre F_2 e impar sobre F_4
    monkeypatch.setattr(surface_fp, "contar_puntos", lambda f, ctx: {1: 10, 2: 21}[ctx.n])
    with pytest.raises(ProfundidadesInconsistentesError):
        es_k3_ordinaria(cuartica_ciclica, 2, (1, 2))
