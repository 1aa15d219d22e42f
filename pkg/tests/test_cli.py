"""
Línea de comandos: despacho, validación de opciones, códigos de salida y reportes
"""

import json
from fractions import Fraction

import openpyxl
import pytest

from cli import (
    ComandoDesconocidoError, Informe, OpcionDesconocidaError, OrdenComando, REPRODUCCIONES,
    a_serializable, ejecutar_comando, informe_error, reproducir
)
from cli.commands import OPCIONES_COMANDO
from brauer.swan import FaltanHipotesisError
from core.version import VERSION_INFO
from localfields.padic import ValorPadico, campo_qp
from main import main
from utils.excel_report import exportar_excel

CUARTICA = "x^3*y + y^3*z + z^3*w + w^3*x + x*y*z*w"


def _ejecutar(capsys, *argv):
    codigo = main(["--sin-log-archivo", *argv])
    salida = capsys.readouterr().out
    return codigo, json.loads(salida)


# -- despacho --

def test_comandos_registrados():
    assert set(OPCIONES_COMANDO) == set(VERSION_INFO['supported_commands'])
    assert set(REPRODUCCIONES) == {
        'ex5.6', 'ex5.7', 'ex5.8', 'ex5.9', 'sec6.4', 'thm7.2:odd', 'thm7.2:2mod4', 'thm7.2:0mod4'
    }


def test_count():
    informe = ejecutar_comando(OrdenComando('count', {'poly': CUARTICA, 'p': '2'}))
    assert informe.resultado == {'puntos': 10}
    assert informe.entradas['semilla'] == 0
    assert informe.aprobado


def test_count_con_variables_propias():
    informe = ejecutar_comando(OrdenComando('count', {'poly': 'a', 'p': '3', 'vars': 'a,b,c'}))
    # hiperplano de P^2(F_3)
    assert informe.resultado['puntos'] == 4


def test_ordinary():
    informe = ejecutar_comando(OrdenComando('ordinary', {'poly': CUARTICA, 'p': '2', 'depths': '1,2'}))
    assert informe.resultado['veredicto'] == "ordinary"
    assert informe.resultado['conteos'][0] == {'n': 1, 'puntos': 10}


def test_comando_desconocido():
    with pytest.raises(ComandoDesconocidoError):
        ejecutar_comando(OrdenComando('integrate', {}))


def test_opciones_desconocidas_y_ausentes():
    with pytest.raises(OpcionDesconocidaError):
        ejecutar_comando(OrdenComando('count', {'poly': 'x', 'p': '2', 'budget': '5'}))
    with pytest.raises(OpcionDesconocidaError):
        ejecutar_comando(OrdenComando('count', {'poly': 'x'}))
    with pytest.raises(OpcionDesconocidaError):
        ejecutar_comando(OrdenComando('evaluate', {'family': 'ex5.7', 'poly': 'x'}))
    with pytest.raises(OpcionDesconocidaError):
        ejecutar_comando(OrdenComando('evaluate', {'p': '2'}))


def test_opciones_mal_formadas():
    with pytest.raises(ValueError):
        ejecutar_comando(OrdenComando('count', {'poly': 'x', 'p': 'dos'}))
    with pytest.raises(ValueError):
        ejecutar_comando(OrdenComando('residue', {'family': 'beta:1', 'p': '3'}))
    with pytest.raises(ValueError):
        ejecutar_comando(OrdenComando('residue', {'family': 'ex5.7', 'p': '3'}))


def test_semilla_explicita():
    informe = ejecutar_comando(OrdenComando('verdict', {'p': '3', 'e': '2', 'reduction': 'ordinary',
                                                        'k3': 'true', 'seed': '9'}))
    assert informe.entradas['semilla'] == 9
    assert informe.resultado['veredicto'] == "possible"


def test_evaluate_con_simbolo_propio():
    informe = ejecutar_comando(OrdenComando('evaluate', {
        'poly': CUARTICA, 'symbol': 'z^3 + w^2*x + x*y*z; x^3; -z; x', 'budget': '6', 'seed': '2',
    }))
    assert sum(informe.resultado['histograma'].values()) == 6
    assert informe.diagnosticos['presupuesto'] == 6
    assert informe.cuerpo == {'p': 2, 'd': None, 'e': 1, 'f': 1}


def test_evaluate_familia_alfa_raiz():
    informe = ejecutar_comando(OrdenComando('evaluate', {
        'family': 'alpha:sqrt2', 'depth': '2', 'precision': '10', 'budget': '4', 'seed': '4',
    }))
    assert informe.cuerpo == {'p': 2, 'd': 2, 'e': 2, 'f': 1}
    assert sum(informe.resultado['histograma'].values()) == len(informe.resultado['muestras'])
    with pytest.raises(ValueError):
        ejecutar_comando(OrdenComando('evaluate', {'family': 'alpha:sqrt2', 'd': '-1', 'budget': '1'}))
    with pytest.raises(ValueError):
        ejecutar_comando(OrdenComando('residue', {'family': 'alpha:sqrt2', 'p': '3'}))


def test_residue_de_la_familia_alfa():
    informe = ejecutar_comando(OrdenComando('residue', {'family': 'alpha:1', 'p': '5', 'n': '1'}))
    divisores = informe.resultado['divisores']
    assert len(divisores) == 3
    assert all(d['cuadrados'] == d['muestras'] for d in divisores)
    assert not informe.avisos


def test_forms():
    informe = ejecutar_comando(OrdenComando('forms', {
        'poly': CUARTICA, 'p': '2', 'chart': '0,3', 'consistency': '0,1;0,2',
    }))
    resultado = informe.resultado
    assert resultado['logaritmica'] and resultado['cerrada'] and not resultado['exacta']
    assert [c['coincide'] for c in resultado['consistencia']] == [True, True]


def test_kummer():
    informe = ejecutar_comando(OrdenComando('kummer', {'curve1': '1,0,-7,5', 'curve2': '1,0,-7,5'}))
    resultado = informe.resultado
    assert resultado['matriz'][0] == ["1", "57", "57", "-9"]
    assert [d['desciende'] for d in resultado['descenso']] == [False] * 4
    assert resultado['legendre'][0]['gamma2'] == "-19"
    assert len(informe.avisos) == 2


def test_verdict_sin_hipotesis():
    with pytest.raises(FaltanHipotesisError) as info:
        ejecutar_comando(OrdenComando('verdict', {'p': '3', 'e': '2', 'reduction': 'ordinary'}))
    assert info.value.modulo == "swan"


# -- reportes --

def test_serializacion_exacta():
    q2 = campo_qp(2)
    datos = {
        (0, 1): Fraction(1, 2),
        'inf': float('inf'),
        'valor': ValorPadico(q2, Fraction(3), 10),
        'tupla': (True, None, 3),
    }
    assert a_serializable(datos) == {
        '(0, 1)': "1/2", 'inf': "inf", 'valor': "3 + O(π^10)", 'tupla': [True, None, 3],
    }
    with pytest.raises(TypeError):
        a_serializable(0.5)


def test_informe_json_estable():
    informe = Informe('count', entradas={'poly': 'x'}, resultado={'puntos': 7})
    documento = json.loads(informe.a_json())
    assert documento['version_esquema'] == "1.0"
    assert documento['estado'] == "pass"
    assert documento['diagnosticos'] == {'avisos': []}
    assert informe.a_json() == Informe('count', entradas={'poly': 'x'}, resultado={'puntos': 7}).a_json()


def test_informe_de_error():
    error = OpcionDesconocidaError("Faltan opciones")
    documento = informe_error('count', error)
    assert documento['error'] == {'modulo': "cli", 'tipo': "OpcionDesconocidaError", 'mensaje': "Faltan opciones"}


def test_exportar_excel(tmp_path):
    informe = Informe('count', entradas={'poly': 'x'}, resultado={'puntos': 7, 'lista': [1, 2]})
    ruta = exportar_excel(informe.como_dict(), tmp_path)
    assert ruta.name.startswith("COUNT_") and ruta.suffix == ".xlsx"
    wb = openpyxl.load_workbook(ruta)
    assert wb.sheetnames == ["Resumen", "Entradas", "Cuerpo", "Resultado", "Diagnosticos"]
    resultado = wb["Resultado"]
    assert resultado["A1"].value == "Clave"
    assert resultado["A1"].font.bold
    filas = {resultado.cell(row=i, column=1).value: resultado.cell(row=i, column=2).value
             for i in range(2, resultado.max_row + 1)}
    assert filas == {'puntos': 7, 'lista': "[1, 2]"}


# -- main --

def test_main_correcto(capsys):
    codigo, documento = _ejecutar(capsys, "count", "--poly", "x", "--p", "2")
    assert codigo == 0
    assert documento['resultado'] == {'puntos': 7}
    assert documento['entradas']['semilla'] == 0


def test_main_error_de_entrada(capsys):
    codigo, documento = _ejecutar(capsys, "count", "--poly", "x^4 + y^4 ! z^4", "--p", "2")
    assert codigo == 2
    assert documento['error']['tipo'] == "ErrorSintaxisPolinomio"


def test_main_primo_no_soportado(capsys):
    codigo, documento = _ejecutar(capsys, "count", "--poly", "x", "--p", "11")
    assert codigo == 2
    assert documento['error']['modulo'] == "finite_field"


def test_main_semilla_invalida(capsys):
    codigo, documento = _ejecutar(capsys, "evaluate", "--poly", "x^4 + y^4 + z^4 + w^4",
                                  "--symbol", "x;y;z;w", "--budget", "3")
    assert codigo == 2
    assert documento['error']['modulo'] == "brauer_eval"


def test_main_error_interno(capsys, monkeypatch):
    def dividir(orden):
        raise ZeroDivisionError("división por cero inesperada")
    monkeypatch.setattr("main.ejecutar_comando", dividir)
    codigo, documento = _ejecutar(capsys, "count", "--poly", "x", "--p", "2")
    # 1 solo para afirmaciones fallidas
    assert codigo == 3
    assert documento['error']['tipo'] == "ZeroDivisionError"


def test_main_argumentos_obligatorios(capsys):
    with pytest.raises(SystemExit) as info:
        main(["--sin-log-archivo", "count", "--poly", "x"])
    assert info.value.code == 2
    with pytest.raises(SystemExit):
        main(["--sin-log-archivo", "reproduce", "ex9.9"])


def test_main_banderas(capsys):
    codigo, documento = _ejecutar(capsys, "verdict", "--p", "2", "--e", "1", "--reduction", "nonOrdinary",
                                  "--k3", "--seed", "5")
    assert codigo == 0
    assert documento['resultado']['veredicto'] == "cannotPlayRole"
    assert documento['entradas']['semilla'] == 5


# -- reproducciones --

def test_reproducir_identificador_desconocido():
    with pytest.raises(ValueError):
        reproducir('ex1.1')


@pytest.mark.parametrize("ident", ['ex5.6', 'ex5.8', 'ex5.9', 'thm7.2:2mod4'])
def test_reproducciones_rapidas(ident):
    informe = reproducir(ident)
    fallidas = [a['nombre'] for a in informe.resultado['afirmaciones'] if not a['ok']]
    assert fallidas == []
    assert informe.aprobado


def test_reproduccion_ex56_avisa_discrepancias():
    informe = reproducir('ex5.6')
    assert len(informe.avisos) == 2
    assert informe.resultado['datos']['gamma2_impreso'] == -21


@pytest.mark.lento
@pytest.mark.parametrize("ident", ['ex5.7', 'sec6.4', 'thm7.2:odd', 'thm7.2:0mod4'])
def test_reproducciones_lentas(ident):
    assert reproducir(ident).aprobado


def test_main_reproduce(capsys):
    codigo, documento = _ejecutar(capsys, "reproduce", "ex5.8")
    assert codigo == 0
    assert documento['comando'] == "reproduce"
    assert documento['estado'] == "pass"
