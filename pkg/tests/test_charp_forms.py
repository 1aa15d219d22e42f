"""
Formas diferenciales en característica p: d, ∧, dlog, Cartier y 2-formas de cartas
"""

import random

import pytest

from forms.charp_forms import (
    CartaInseparableError, DLogCeroError, NoCerradaError, algebra_formas, cartier, cartier_inverso,
    clasificar_forma, consistencia_cartas, contexto_carta, cuna, diferencial, dlog, dos_forma,
    es_cerrada, forma_carta_k3, forma_nula, funcion, uno_forma
)
from forms.function_field import ContextoFormasError, ContextoFunciones, NoInvertibleError
from geometry.polynomials import parsear_polinomio


@pytest.fixture(scope="module", params=[2, 3])
def ctx(request):
    return ContextoFunciones.racional(request.param)


@pytest.fixture(scope="module")
def carta(cuartica_ciclica):
    return contexto_carta(cuartica_ciclica, 2, (0, 3))


def _aleatoria(ctx, rng, con_w=False):
    u, v = ctx.gen_u, ctx.gen_v
    g = ctx.cero
    for a in range(3):
        for b in range(3):
            g = g + rng.randrange(ctx.p) * u ** a * v ** b
    if con_w:
        g = g + rng.randrange(1, ctx.p) * ctx.gen_w * u
    if g.es_cero():
        g = ctx.uno
    if rng.random() < 0.5:
        g = g / (u + v + 1)
    return g


def test_dlog_de_coordenadas(ctx):
    u = ctx.gen_u
    assert dlog(u) == uno_forma(u.inverso(), ctx.cero)
    with pytest.raises(DLogCeroError):
        dlog(ctx.cero)


@pytest.mark.parametrize("cantidad", [6, pytest.param(100, marks=pytest.mark.lento)])
def test_propiedades_aleatorias(ctx, cantidad):
    rng = random.Random(7)
    for _ in range(cantidad):
        g, h = _aleatoria(ctx, rng), _aleatoria(ctx, rng)
        dg = diferencial(g)
        assert diferencial(dg).es_cero()
        assert diferencial(g * h) == cuna(funcion(g), diferencial(h)) + cuna(funcion(h), dg)
        assert dlog(g * h) == dlog(g) + dlog(h)
        assert clasificar_forma(dlog(g)).logaritmica
        if not dg.es_cero():
            assert clasificar_forma(dg).exacta
            assert not clasificar_forma(dg).logaritmica


@pytest.mark.parametrize("cantidad", [4, pytest.param(100, marks=pytest.mark.lento)])
def test_cartier_deshace_su_inverso(ctx, cantidad):
    rng = random.Random(13)
    for _ in range(cantidad):
        a, b = _aleatoria(ctx, rng), _aleatoria(ctx, rng)
        for forma in (funcion(a), uno_forma(a, b), dos_forma(b)):
            levantada = cartier_inverso(forma)
            assert es_cerrada(levantada)
            assert cartier(levantada) == forma


def test_cartier_de_dos_formas(ctx):
    u, v = ctx.gen_u, ctx.gen_v
    p = ctx.p
    # C(du∧dv/(uv)) = du∧dv/(uv)
    forma = dos_forma((u * v).inverso())
    assert cartier(forma) == forma
    assert cartier(dos_forma(u ** p)).es_cero()
    assert cartier(dos_forma(ctx.cero)).es_cero()


def test_cartier_exige_forma_cerrada(ctx):
    forma = uno_forma(ctx.cero, ctx.gen_u)
    assert not es_cerrada(forma)
    with pytest.raises(NoCerradaError):
        cartier(forma)
    clase = clasificar_forma(forma)
    assert not clase.cerrada and clase.imagen_cartier is None


def test_cuna_antisimetrica(ctx):
    du, dv = diferencial(ctx.gen_u), diferencial(ctx.gen_v)
    assert cuna(du, dv) == -cuna(dv, du)
    assert cuna(du, du).es_cero()
    with pytest.raises(ValueError):
        cuna(cuna(du, dv), du)


def test_despacho_de_operaciones(ctx):
    u, v = ctx.gen_u, ctx.gen_v
    assert algebra_formas("differential", u) == diferencial(u)
    assert algebra_formas("dlog", v) == dlog(v)
    assert algebra_formas("wedge", diferencial(u), diferencial(v)) == dos_forma(ctx.uno)
    assert algebra_formas("reduceToBase", u, v, ctx.cero) == uno_forma(u, v)
    with pytest.raises(ValueError):
        algebra_formas("pullback", u)


def test_contextos_distintos():
    f2, f3 = ContextoFunciones.racional(2), ContextoFunciones.racional(3)
    with pytest.raises(ContextoFormasError):
        diferencial(f2.gen_u) + diferencial(f3.gen_u)
    with pytest.raises(ContextoFormasError):
        f2.gen_u + f3.gen_v
    with pytest.raises(ValueError):
        forma_nula(f2, 1) + forma_nula(f2, 2)


def test_inverso_de_cero():
    with pytest.raises(NoInvertibleError):
        ContextoFunciones.racional(3).cero.inverso()


# -- cartas --

def test_descomposicion_en_potencias_p(carta):
    ctx = carta.ctx
    rng = random.Random(5)
    for _ in range(3):
        g = _aleatoria(ctx, rng, con_w=True)
        partes = ctx.descomponer_potencias(g)
        total = ctx.cero
        for (a, b), G in partes.items():
            total = total + ctx.gen_u ** a * ctx.gen_v ** b * G.potencia_p()
        assert total == g


def test_formas_en_la_carta(carta):
    ctx = carta.ctx
    w = ctx.gen_w
    assert diferencial(diferencial(w)).es_cero()
    assert clasificar_forma(dlog(w)).logaritmica
    assert cartier(cartier_inverso(uno_forma(w, ctx.gen_u))) == uno_forma(w, ctx.gen_u)


def test_forma_de_la_cuartica_ciclica_es_logaritmica(cuartica_ciclica, carta):
    omega = forma_carta_k3(cuartica_ciclica, 2, (0, 3))
    clase = clasificar_forma(omega)
    assert clase.cerrada and clase.logaritmica and not clase.exacta
    assert consistencia_cartas(carta, [(0, 1), (0, 2)]) == {(0, 1): True, (0, 2): True}


@pytest.mark.parametrize("clave,logaritmica,exacta", [
    ('thm7.2:fibra_ordinaria', True, False),
    ('thm7.2:fibra_2mod4', False, True),
    ('thm7.2:fibra_0mod4', False, True),
])
def test_formas_de_las_fibras(superficies, clave, logaritmica, exacta):
    clase = clasificar_forma(forma_carta_k3(superficies[clave], 2, (0, 3)))
    assert (clase.logaritmica, clase.exacta) == (logaritmica, exacta)


def test_cartas_invalidas(cuartica_ciclica):
    with pytest.raises(ValueError):
        contexto_carta(cuartica_ciclica, 2, (1, 1))
    with pytest.raises(ValueError):
        contexto_carta(cuartica_ciclica, 2, (0, 4))
    with pytest.raises(CartaInseparableError):
        contexto_carta(parsear_polinomio("x^4 + y^4 + z^4 + w^4"), 2, (0, 3))
    with pytest.raises(CartaInseparableError):
        contexto_carta(parsear_polinomio("x^3*y + y^3*z + z^3*x + 2*w^4"), 2, (0, 3))
