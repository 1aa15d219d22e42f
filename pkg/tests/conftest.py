"""
Fixtures compartidas: cuerpos finitos, cuerpos locales y superficies de ejemplo
"""

import pytest

from config.constants import SUPERFICIES_EJEMPLO
from fields.finite_field import crear_cuerpo
from geometry.polynomials import parsear_polinomio
from localfields.padic import campo_qp


@pytest.fixture(scope="session")
def f2():
    return crear_cuerpo(2, 1)


@pytest.fixture(scope="session")
def f4():
    return crear_cuerpo(2, 2)


@pytest.fixture(scope="session")
def f9():
    return crear_cuerpo(3, 2)


@pytest.fixture(scope="session")
def q2():
    return campo_qp(2)


@pytest.fixture(scope="session")
def superficies():
    """Quárticas de los ejemplos, ya parseadas"""
    return {clave: parsear_polinomio(texto) for clave, texto in SUPERFICIES_EJEMPLO.items()}


@pytest.fixture(scope="session")
def cuartica_ciclica(superficies):
    return superficies['ex5.7']
