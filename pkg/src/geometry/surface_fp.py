"""
Puntos de hipersuperficies de P^3 sobre F_{p^n}: conteo, semillas lisas y
criterio de ordinariedad por conteo de puntos

La enumeración recorre las cartas normalizadas (primera coordenada no nula = 1)
en el orden x=1, luego x=0,y=1, luego x=y=0,z=1 y por último (0:0:0:1), de modo
que cada punto proyectivo se visita una sola vez. Las evaluaciones se hacen
vectorizadas con las tablas de índices del cuerpo.
"""

import logging
from dataclasses import dataclass
from typing import Iterator, List, Optional, Sequence, Tuple

import numpy as np

from config.constants import PROFUNDIDADES_DEFECTO
from core.errors import ErrorCalculo
from fields.finite_field import CuerpoFinito, ElementoCuerpo, crear_cuerpo
from geometry.polynomials import PolinomioHomogeneo

logger = logging.getLogger(__name__)


class ErrorSuperficie(ErrorCalculo):
    """Error en los cálculos sobre la reducción"""
    modulo = "surface_fp"


class ProfundidadesInconsistentesError(ErrorSuperficie):
    """El criterio de conteo da veredictos distintos según n"""
    pass


@dataclass(frozen=True)
class PuntoProyectivo:
    """Punto de P^3(F_q) con la primera coordenada no nula igual a 1"""
    coords: Tuple[ElementoCuerpo, ...]

    def __post_init__(self):
        if all(c.es_cero() for c in self.coords):
            raise ValueError("El punto (0:0:0:0) no es proyectivo")
        lider = next(c for c in self.coords if not c.es_cero())
        if lider != lider.ctx.uno:
            raise ValueError("El punto no está normalizado")

    @property
    def indice_normalizado(self) -> int:
        return next(i for i, c in enumerate(self.coords) if not c.es_cero())

    def __str__(self) -> str:
        return "(" + ":".join(str(c) for c in self.coords) + ")"


@dataclass(frozen=True)
class InformeOrdinariedad:
    """Conteos |Y(F_{p^n})|, sus restos módulo p y el veredicto"""
    p: int
    conteos: Tuple[Tuple[int, int], ...]
    restos: Tuple[int, ...]
    veredicto: str

    @property
    def es_ordinaria(self) -> bool:
        return self.veredicto == "ordinary"


# ---------------------------------------------------------------------------
# Enumeración vectorizada
# ---------------------------------------------------------------------------

def _cartas(ctx: CuerpoFinito, nvars: int = 4) -> Iterator[np.ndarray]:
    """Bloques de puntos (matriz de índices, una fila por punto) carta por carta"""
    q = ctx.q
    uno = ctx.uno.indice
    for lider in range(nvars):
        libres = nvars - lider - 1
        total = q ** libres
        bloque = np.zeros((total, nvars), dtype=np.int64)
        bloque[:, lider] = uno
        if libres:
            rejilla = np.indices((q,) * libres).reshape(libres, -1).T
            bloque[:, lider + 1:] = rejilla
        yield bloque


def _evaluar_indices(f: PolinomioHomogeneo, ctx: CuerpoFinito, puntos: np.ndarray) -> np.ndarray:
    """Valor (como índice) de f reducido mod p en cada fila de `puntos`"""
    tablas = ctx.tablas
    coeficientes = f.coeficientes_mod(ctx.p)
    acumulado = np.zeros(len(puntos), dtype=np.int64)
    potencias = {}
    for exps, c in coeficientes.items():
        termino = np.full(len(puntos), ctx.desde_entero(c).indice, dtype=np.int64)
        for var, e in enumerate(exps):
            if e == 0:
                continue
            if e not in potencias:
                potencias[e] = tablas.potencia(e)
            termino = tablas.producto[termino, potencias[e][puntos[:, var]]]
        acumulado = tablas.suma[acumulado, termino]
    return acumulado


def _evaluar_opcional(f: Optional[PolinomioHomogeneo], ctx: CuerpoFinito, puntos: np.ndarray) -> np.ndarray:
    if f is None:
        return np.zeros(len(puntos), dtype=np.int64)
    return _evaluar_indices(f, ctx, puntos)


def _a_punto(ctx: CuerpoFinito, fila: Sequence[int]) -> PuntoProyectivo:
    return PuntoProyectivo(tuple(ctx.desde_indice(int(i)) for i in fila))


def puntos_en(ecuaciones: Sequence[PolinomioHomogeneo], ctx: CuerpoFinito) -> List[PuntoProyectivo]:
    """Puntos de P^3(F_q) donde se anulan todas las ecuaciones, en orden de enumeración"""
    if not ecuaciones:
        raise ValueError("Se necesita al menos una ecuación")
    nvars = ecuaciones[0].nvars
    resultado = []
    for bloque in _cartas(ctx, nvars):
        mascara = np.ones(len(bloque), dtype=bool)
        for g in ecuaciones:
            mascara &= _evaluar_indices(g, ctx, bloque) == 0
        resultado.extend(_a_punto(ctx, fila) for fila in bloque[mascara])
    return resultado


# ---------------------------------------------------------------------------
# Operaciones públicas
# ---------------------------------------------------------------------------

def contar_puntos(f: PolinomioHomogeneo, ctx: CuerpoFinito) -> int:
    """Número exacto de puntos de {f = 0} en P^3(F_q), reduciendo f módulo p"""
    total = 0
    for bloque in _cartas(ctx, f.nvars):
        total += int(np.count_nonzero(_evaluar_indices(f, ctx, bloque) == 0))
    logger.debug(f"|{{f = 0}}({ctx})| = {total}")
    return total


def es_k3_ordinaria(f: PolinomioHomogeneo, p: int,
                    profundidades: Sequence[int] = PROFUNDIDADES_DEFECTO) -> InformeOrdinariedad:
    """
    Criterio de conteo: Y es ordinaria si y solo si |Y(F_{p^n})| no es 1 módulo p.

    Se exige que el criterio coincida en todas las profundidades pedidas; una
    discrepancia indica que la hipótesis de K3 lisa no se cumple.
    """
    if not profundidades:
        raise ValueError("Se necesita al menos una profundidad")
    if any(n < 1 for n in profundidades):
        raise ValueError("Las profundidades deben ser >= 1")

    conteos = []
    for n in profundidades:
        ctx = crear_cuerpo(p, n)
        conteos.append((n, contar_puntos(f, ctx)))
    restos = tuple(c % p for _, c in conteos)
    veredictos = {"ordinary" if r != 1 else "non-ordinary" for r in restos}

    logger.info(f"Conteos sobre F_{p}^n: {conteos}; restos mod {p}: {restos}")
    if len(veredictos) != 1:
        raise ProfundidadesInconsistentesError(
            f"El criterio discrepa entre profundidades: conteos {conteos}"
        )
    return InformeOrdinariedad(p, tuple(conteos), restos, veredictos.pop())


def semillas_lisas(f: PolinomioHomogeneo, ctx: CuerpoFinito) -> List[Tuple[PuntoProyectivo, int]]:
    """
    Puntos de {f = 0} sobre F_q con una parcial no nula, junto con su índice.

    Se prefiere la primera variable (en orden x, y, z, w) con parcial no nula que no
    sea la coordenada normalizada; solo si ninguna otra sirve se usa esa.
    """
    derivadas = [f.derivada(i) for i in range(f.nvars)]
    semillas = []
    singulares = 0
    for bloque in _cartas(ctx, f.nvars):
        en_superficie = bloque[_evaluar_indices(f, ctx, bloque) == 0]
        if len(en_superficie) == 0:
            continue
        parciales = np.stack([_evaluar_opcional(d, ctx, en_superficie) for d in derivadas], axis=1)
        for fila, valores in zip(en_superficie, parciales):
            no_nulas = [i for i in range(f.nvars) if valores[i] != 0]
            if not no_nulas:
                singulares += 1
                continue
            lider = next(i for i in range(f.nvars) if fila[i] != 0)
            preferidas = [i for i in no_nulas if i != lider]
            indice = preferidas[0] if preferidas else no_nulas[0]
            semillas.append((_a_punto(ctx, fila), indice))

    if singulares:
        logger.warning(f"{singulares} puntos singulares visibles sobre {ctx}")
    logger.info(f"{len(semillas)} semillas lisas sobre {ctx}")
    return semillas
