"""
Aritmética en F_p y F_{p^n}
"""

import numpy as np
import pytest

from config.constants import MODULOS_PREDEFINIDOS
from fields.finite_field import (
    ContextoIncompatibleError, DivisionPorCeroError, ModuloReducibleError, TamanoNoSoportadoError,
    crear_cuerpo, es_irreducible, operar
)

ORDENES_HASTA_81 = [(2, 1), (3, 1), (5, 1), (7, 1), (2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (3, 4), (5, 2), (7, 2)]


def test_cuerpos_basicos():
    assert str(crear_cuerpo(2, 1)) == "F_2"
    f4 = crear_cuerpo(2, 2, (1, 1, 1))
    assert f4.q == 4
    assert str(crear_cuerpo(3, 2, (1, 0, 1))) == "F_9"


def test_modulos_predefinidos_irreducibles():
    for (p, n), modulo in MODULOS_PREDEFINIDOS.items():
        assert len(modulo) == n + 1
        assert es_irreducible(modulo, p)


def test_modulo_buscado_es_irreducible():
    f27 = crear_cuerpo(3, 3)
    assert es_irreducible(f27.modulo, 3)
    assert f27.modulo[-1] == 1


def test_modulo_reducible_rechazado():
    # t^2 + 1 = (t + 1)^2 sobre F_2
    with pytest.raises(ModuloReducibleError):
        crear_cuerpo(2, 2, (1, 0, 1))
    # t^2 + 2 tiene la raíz 1 sobre F_3
    with pytest.raises(ModuloReducibleError):
        crear_cuerpo(3, 2, (2, 0, 1))


def test_tamanos_no_soportados():
    with pytest.raises(TamanoNoSoportadoError):
        crear_cuerpo(11, 1)
    with pytest.raises(TamanoNoSoportadoError):
        crear_cuerpo(2, 5)
    with pytest.raises(TamanoNoSoportadoError):
        crear_cuerpo(2, 0)


def test_ejemplos_de_aritmetica(f2, f4, f9):
    assert operar('add', f2.uno, f2.uno) == f2.cero
    t = f4.generador
    assert operar('mul', t, t) == t + 1
    assert operar('pow', f9.generador, 4) == f9.uno
    assert operar('frobenius', t) == t * t


def test_errores_de_aritmetica(f4, f9):
    with pytest.raises(DivisionPorCeroError):
        operar('inv', f4.cero)
    with pytest.raises(ContextoIncompatibleError):
        f4.uno + f9.uno
    with pytest.raises(ValueError):
        operar('raiz', f4.uno)


@pytest.mark.parametrize("p,n", ORDENES_HASTA_81)
def test_inversos_y_frobenius(p, n):
    ctx = crear_cuerpo(p, n)
    for a in ctx.elementos():
        if not a.es_cero():
            assert a * a.inverso() == ctx.uno
        frob = a
        for _ in range(n):
            frob = frob.frobenius()
        assert frob == a
        assert a.raiz_p().frobenius() == a


@pytest.mark.parametrize("p,n", ORDENES_HASTA_81)
def test_tablas_coinciden_con_la_aritmetica(p, n):
    ctx = crear_cuerpo(p, n)
    tablas = ctx.tablas
    elementos = list(ctx.elementos())
    for a in elementos:
        for b in elementos:
            assert tablas.suma[a.indice, b.indice] == (a + b).indice
            assert tablas.producto[a.indice, b.indice] == (a * b).indice


@pytest.mark.parametrize("p,n", ORDENES_HASTA_81)
def test_axiomas_de_cuerpo_exhaustivos(p, n):
    ctx = crear_cuerpo(p, n)
    s, m = ctx.tablas.suma, ctx.tablas.producto
    q = ctx.q
    a, b, c = np.meshgrid(np.arange(q), np.arange(q), np.arange(q), indexing="ij")

    assert (s == s.T).all() and (m == m.T).all()
    assert (s[s[a, b], c] == s[a, s[b, c]]).all()
    assert (m[m[a, b], c] == m[a, m[b, c]]).all()
    assert (m[a, s[b, c]] == s[m[a, b], m[a, c]]).all()

    uno = ctx.uno.indice
    assert (s[0, :] == np.arange(q)).all()
    assert (m[uno, :] == np.arange(q)).all()
    # cada elemento tiene opuesto y cada no nulo inverso
    assert all((s[i, :] == 0).sum() == 1 for i in range(q))
    assert all((m[i, :] == uno).sum() == 1 for i in range(1, q))


def test_frobenius_aditivo_y_multiplicativo(f9):
    for a in f9.elementos():
        for b in f9.elementos():
            assert (a + b).frobenius() == a.frobenius() + b.frobenius()
            assert (a * b).frobenius() == a.frobenius() * b.frobenius()


def test_cuadrados(f9):
    cuadrados = {(a * a).indice for a in f9.elementos() if not a.es_cero()}
    assert len(cuadrados) == 4
    for a in f9.elementos():
        assert f9.es_cuadrado(a) == (a.indice in cuadrados)
