"""
Despacho de comandos: cada comando lee sus opciones de texto, llama a los módulos
de cálculo y arma un Informe.
"""

import logging
from dataclasses import dataclass, field
from typing import Callable, Dict, FrozenSet, Optional, Tuple

from config.constants import ESCANEO_CONFIG, PROFUNDIDADES_DEFECTO
from core.errors import ErrorCalculo
from core.version import VERSION_INFO
from fields.finite_field import crear_cuerpo
from geometry.surface_fp import contar_puntos, es_k3_ordinaria
from localfields.padic import CuerpoLocal, ElementoCuadratico
from brauer.brauer_eval import (
    FamiliaSuperficie, ParSimbolo, barrer_evaluacion, residuo_moderado, sondear_residuo,
    superficie_cuartica_ciclica, superficie_familia_alfa
)
from brauer.kummer import (
    ParametrosCurva, analizar_producto, texto_valor, verificar_reescritura, verificar_torsion
)
from brauer.swan import veredicto_rol
from forms.charp_forms import clasificar_forma, consistencia_cartas, contexto_carta, forma_carta_en
from cli.parser import leer_carta, leer_enteros, leer_pares, leer_polinomio, leer_simbolo, leer_variables
from cli.report import Informe

logger = logging.getLogger(__name__)


class ErrorComando(ErrorCalculo):
    """Error en la orden recibida por el CLI"""
    modulo = "cli"


class ComandoDesconocidoError(ErrorComando):
    """Comando fuera de la lista soportada"""
    pass


class OpcionDesconocidaError(ErrorComando):
    """Opción no admitida por el comando, u opción obligatoria ausente"""
    pass


@dataclass(frozen=True)
class OrdenComando:
    """Nombre del comando y sus opciones como texto ("true" para las banderas)"""
    nombre: str
    opciones: Dict[str, str] = field(default_factory=dict)

    def entero(self, clave: str, defecto=None) -> int:
        valor = self.opciones.get(clave)
        if valor is None:
            if defecto is None:
                raise OpcionDesconocidaError(f"Falta la opción --{clave} en '{self.nombre}'")
            return defecto
        try:
            return int(valor)
        except ValueError as e:
            raise ValueError(f"--{clave} debe ser entero: '{valor}'") from e

    def bandera(self, clave: str) -> bool:
        return self.opciones.get(clave, "false").lower() in ("true", "1", "si", "sí")

    @property
    def semilla(self) -> int:
        return self.entero('seed', ESCANEO_CONFIG['semilla'])


# Opciones obligatorias y opcionales por comando; 'seed' vale para todos
OPCIONES_COMANDO: Dict[str, Tuple[FrozenSet[str], FrozenSet[str]]] = {
    'count': (frozenset({'poly', 'p'}), frozenset({'n', 'vars'})),
    'ordinary': (frozenset({'poly', 'p'}), frozenset({'depths', 'vars'})),
    'evaluate': (frozenset(), frozenset({'poly', 'symbol', 'family', 'p', 'd', 'depth', 'precision',
                                         'budget', 'vars'})),
    'residue': (frozenset({'family', 'p'}), frozenset({'n'})),
    'forms': (frozenset({'poly', 'p', 'chart'}), frozenset({'consistency', 'vars'})),
    'kummer': (frozenset({'curve1', 'curve2'}), frozenset({'precision', 'd'})),
    'verdict': (frozenset({'p', 'e', 'reduction'}), frozenset({'k3', 'sin-1-formas', 'h1-trivial'})),
    'reproduce': (frozenset({'id'}), frozenset()),
}


def validar_orden(orden: OrdenComando):
    if orden.nombre not in OPCIONES_COMANDO:
        raise ComandoDesconocidoError(
            f"Comando desconocido '{orden.nombre}'; disponibles: {', '.join(VERSION_INFO['supported_commands'])}"
        )
    obligatorias, opcionales = OPCIONES_COMANDO[orden.nombre]
    desconocidas = set(orden.opciones) - obligatorias - opcionales - {'seed'}
    if desconocidas:
        raise OpcionDesconocidaError(
            f"Opciones no admitidas por '{orden.nombre}': {', '.join(sorted('--' + o for o in desconocidas))}"
        )
    faltan = obligatorias - set(orden.opciones)
    if faltan:
        raise OpcionDesconocidaError(
            f"Faltan opciones para '{orden.nombre}': {', '.join(sorted('--' + o for o in faltan))}"
        )


def _familia(texto: str) -> FamiliaSuperficie:
    """'ex5.7', 'alpha:N' o 'alpha:sqrtM' (α = √M)"""
    if texto == 'ex5.7':
        return superficie_cuartica_ciclica()
    if texto.startswith('alpha:'):
        valor = texto.split(':', 1)[1]
        try:
            if valor.startswith('sqrt'):
                alfa = ElementoCuadratico(0, 1, int(valor[4:]))
            else:
                alfa = int(valor)
        except ValueError as e:
            raise ValueError(f"Familia inválida: '{texto}'") from e
        return superficie_familia_alfa(alfa)
    raise ValueError(f"Familia desconocida: '{texto}' (se admiten ex5.7, alpha:N y alpha:sqrtM)")


def _cuerpo_local(orden: OrdenComando, p_defecto: int = 2, d_familia: Optional[int] = None) -> CuerpoLocal:
    """Q_p o Q_p(√d); una familia definida sobre Q(√m) fija d = m"""
    texto = orden.opciones.get('d')
    d = int(texto) if texto else d_familia
    if d_familia is not None and d != d_familia:
        raise ValueError(f"La familia está definida sobre Q(√{d_familia}); --d {d} no la contiene")
    return CuerpoLocal(orden.entero('p', p_defecto), d)


# ---------------------------------------------------------------------------
# Comandos
# ---------------------------------------------------------------------------

def _count(orden: OrdenComando) -> Informe:
    f = leer_polinomio(orden.opciones['poly'], orden.opciones.get('vars'))
    ctx = crear_cuerpo(orden.entero('p'), orden.entero('n', 1))
    total = contar_puntos(f, ctx)
    return Informe(
        'count', entradas={'poly': str(f), 'variables': list(f.variables)},
        cuerpo={'p': ctx.p, 'n': ctx.n, 'q': ctx.q},
        resultado={'puntos': total},
    )


def _ordinary(orden: OrdenComando) -> Informe:
    f = leer_polinomio(orden.opciones['poly'], orden.opciones.get('vars'))
    p = orden.entero('p')
    profundidades = leer_enteros(orden.opciones['depths']) if 'depths' in orden.opciones else list(PROFUNDIDADES_DEFECTO)
    informe = es_k3_ordinaria(f, p, profundidades)
    return Informe(
        'ordinary', entradas={'poly': str(f), 'profundidades': profundidades},
        cuerpo={'p': p, 'n': profundidades},
        resultado={
            'veredicto': informe.veredicto,
            'conteos': [{'n': n, 'puntos': c} for n, c in informe.conteos],
            'restos': list(informe.restos),
        },
    )


def _evaluate(orden: OrdenComando) -> Informe:
    op = orden.opciones
    if 'family' in op:
        if 'poly' in op or 'symbol' in op:
            raise OpcionDesconocidaError("--family excluye --poly y --symbol")
        familia = _familia(op['family'])
        superficie, simbolo, alternativas = familia.superficie, familia.simbolo, familia.alternativas
        d_familia = familia.d
    elif 'poly' in op and 'symbol' in op:
        superficie = leer_polinomio(op['poly'], op.get('vars'))
        variables = leer_variables(op.get('vars'))
        simbolo = ParSimbolo(*(leer_polinomio(t, ','.join(variables)) for t in leer_simbolo(op['symbol'])))
        alternativas = ()
        d_familia = None
    else:
        raise OpcionDesconocidaError("evaluate necesita --family o bien --poly y --symbol")

    cuerpo = _cuerpo_local(orden, d_familia=d_familia)
    parametros = {
        'profundidad': orden.entero('depth', ESCANEO_CONFIG['profundidad_disco']),
        'precision': orden.entero('precision', ESCANEO_CONFIG['precision']),
        'presupuesto': orden.entero('budget', ESCANEO_CONFIG['presupuesto']),
        'semilla': orden.semilla,
    }
    informe = barrer_evaluacion(simbolo, superficie, cuerpo, alternativas=alternativas, **parametros)
    return Informe(
        'evaluate', entradas={'poly': str(superficie), 'simbolo': str(simbolo), **parametros},
        cuerpo=cuerpo.descriptor(),
        resultado={
            'veredicto': informe.veredicto,
            'histograma': informe.histograma,
            'muestras': [{'punto': punto, 'valor': valor} for punto, valor in informe.muestras],
        },
        diagnosticos=dict(informe.diagnosticos),
    )


def _residue(orden: OrdenComando) -> Informe:
    familia = _familia(orden.opciones['family'])
    if not familia.divisores:
        raise ValueError(f"La familia '{orden.opciones['family']}' no tiene divisores registrados")
    p = orden.entero('p')
    profundidades = leer_enteros(orden.opciones['n']) if 'n' in orden.opciones else list(PROFUNDIDADES_DEFECTO)
    cuerpos = [crear_cuerpo(p, n) for n in profundidades]

    divisores = []
    avisos = []
    for divisor in familia.divisores:
        expresion = residuo_moderado(divisor)
        sondeo = sondear_residuo(divisor, cuerpos)
        divisores.append({
            'divisor': divisor.etiqueta,
            'valuaciones': [divisor.va, divisor.vb],
            'expresion': str(expresion),
            'muestras': sondeo.total,
            'cuadrados': sondeo.cuadrados,
            'fraccion': sondeo.fraccion,
            'por_cuerpo': [{'cuerpo': c, 'muestras': n, 'cuadrados': k} for c, n, k in sondeo.por_cuerpo],
        })
        if not sondeo.todos_cuadrados:
            avisos.append(f"{divisor.etiqueta}: residuo no cuadrado en {sondeo.total - sondeo.cuadrados} puntos")
    return Informe(
        'residue', entradas={'familia': orden.opciones['family'], 'profundidades': profundidades},
        cuerpo={'p': p, 'n': profundidades}, resultado={'divisores': divisores}, avisos=avisos,
    )


def _forms(orden: OrdenComando) -> Informe:
    f = leer_polinomio(orden.opciones['poly'], orden.opciones.get('vars'))
    p = orden.entero('p')
    indices = leer_carta(orden.opciones['chart'])
    carta = contexto_carta(f, p, indices)
    omega = forma_carta_en(carta, indices)
    clase = clasificar_forma(omega)

    resultado = {
        'forma': str(omega),
        'cerrada': clase.cerrada,
        'exacta': clase.exacta,
        'logaritmica': clase.logaritmica,
        'cartier': str(clase.imagen_cartier) if clase.imagen_cartier is not None else None,
    }
    if 'consistency' in orden.opciones:
        pares = leer_pares(orden.opciones['consistency'])
        resultado['consistencia'] = [
            {'carta': list(par), 'coincide': ok} for par, ok in consistencia_cartas(carta, pares).items()
        ]
    return Informe(
        'forms', entradas={'poly': str(f), 'carta': list(indices)},
        cuerpo={'p': p, 'contexto': carta.ctx.nombre}, resultado=resultado,
    )


def _kummer(orden: OrdenComando) -> Informe:
    curva1 = ParametrosCurva.desde_texto(orden.opciones['curve1'])
    curva2 = ParametrosCurva.desde_texto(orden.opciones['curve2'])
    precision = orden.entero('precision', 0) or None
    cuerpo = CuerpoLocal(2, int(orden.opciones['d'])) if orden.opciones.get('d') else None
    informe = analizar_producto(curva1, curva2, precision, cuerpo)
    resultado = resumen_kummer(informe)

    avisos = []
    for curva, legendre in zip((curva1, curva2), informe.curvas):
        if legendre.oraculo.constante_difiere:
            avisos.append(
                f"Curva {curva}: término constante de la cúbica en u₁ = {legendre.oraculo.cubica_u1[3]}, "
                f"distinto de 16c + 16δ² = {legendre.oraculo.constante_impresa}"
            )
    return Informe(
        'kummer', entradas={'curve1': str(curva1), 'curve2': str(curva2), 'precision': informe.torsiones[0].precision},
        cuerpo=informe.descenso.cuerpo.descriptor(), resultado=resultado, avisos=avisos,
    )


def resumen_kummer(informe) -> Dict[str, object]:
    """Vista serializable de un InformeKummer"""
    torsiones = []
    for t in informe.torsiones:
        torsiones.append({
            'curva': str(t.curva),
            'discriminante': t.curva.discriminante(),
            'phi': list(t.phi),
            'betas': [texto_valor(b) for b in t.betas],
            'alfas': [texto_valor(a) for a in t.alfas],
            'perfil_ord': list(t.perfil_ord),
            'exacta': t.exacto,
            'comprobaciones': verificar_torsion(t),
        })
    curvas = [{
        'gamma1': texto_valor(g.gamma1),
        'gamma2': texto_valor(g.gamma2),
        'cubica_u1': list(g.oraculo.cubica_u1),
        'raices_oraculo': list(g.oraculo.raices),
    } for g in informe.curvas]
    return {
        'torsion': torsiones,
        'legendre': curvas,
        'matriz': informe.matriz.filas_texto(),
        'descenso': [{'algebra': v.algebra, 'desciende': v.desciende, 'no_cuadrados': list(v.no_cuadrados)}
                     for v in informe.descenso.veredictos],
        'simbolos': [{
            'algebra': s.etiqueta,
            'par': [str(e) for e in s.par],
            'reescrito': [str(e) for e in s.reescrito],
            'retroceso': [str(e) for e in s.retroceso] if s.retroceso is not None else None,
            'comprobaciones': verificar_reescritura(s),
        } for s in informe.simbolos],
        'conductores': [{'algebra': c.etiqueta, 'tipo': c.tipo, 'detalle': c.detalle, 'nulo': c.nulo}
                        for c in informe.conductores],
        'congruencia_gamma1': list(informe.congruencias),
    }


def _verdict(orden: OrdenComando) -> Informe:
    p, e = orden.entero('p'), orden.entero('e')
    reduccion = orden.opciones['reduction']
    hipotesis = {
        'es_k3': orden.bandera('k3'),
        'sin_1_formas': orden.bandera('sin-1-formas'),
        'h1_trivial': orden.bandera('h1-trivial'),
    }
    veredicto = veredicto_rol(p, e, reduccion, hipotesis)
    return Informe(
        'verdict', entradas={'p': p, 'e': e, 'reduccion': reduccion, 'hipotesis': hipotesis},
        cuerpo={'p': p, 'e': e},
        resultado={'veredicto': veredicto.veredicto, 'motivo': veredicto.motivo},
    )


def _reproduce(orden: OrdenComando) -> Informe:
    from cli.reproduce import reproducir
    return reproducir(orden.opciones['id'], orden.semilla)


COMANDOS: Dict[str, Callable[[OrdenComando], Informe]] = {
    'count': _count,
    'ordinary': _ordinary,
    'evaluate': _evaluate,
    'residue': _residue,
    'forms': _forms,
    'kummer': _kummer,
    'verdict': _verdict,
    'reproduce': _reproduce,
}


def ejecutar_comando(orden: OrdenComando) -> Informe:
    """Valida la orden y la despacha; los errores de cálculo se propagan con su módulo"""
    validar_orden(orden)
    logger.info(f"Ejecutando '{orden.nombre}' con {orden.opciones}")
    informe = COMANDOS[orden.nombre](orden)
    informe.entradas.setdefault('semilla', orden.semilla)
    logger.info(f"'{orden.nombre}' terminado: estado {informe.estado}")
    return informe
