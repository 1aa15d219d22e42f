"""
Reporte estructurado de una ejecución y su serialización a JSON
"""

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List

from config.constants import REPORTE_CONFIG
from core.version import __version__
from localfields.padic import ValorPadico


def a_serializable(valor: Any) -> Any:
    """
    Convierte resultados a tipos JSON: racionales y valores p-ádicos como cadenas
    exactas, tuplas como listas y claves como texto.
    """
    if isinstance(valor, bool) or valor is None or isinstance(valor, (int, str)):
        return valor
    if isinstance(valor, Fraction):
        return str(valor)
    if isinstance(valor, float):
        if valor == float("inf"):
            return "inf"
        raise TypeError(f"Valor de coma flotante en un reporte: {valor}")
    if isinstance(valor, ValorPadico):
        return str(valor.valor) if valor.es_exacto else f"{valor.valor} + O(π^{valor.precision})"
    if isinstance(valor, dict):
        return {str(k): a_serializable(v) for k, v in valor.items()}
    if isinstance(valor, (list, tuple)):
        return [a_serializable(v) for v in valor]
    return str(valor)


@dataclass
class Informe:
    """Eco del comando, entradas, cuerpo de trabajo, resultado y diagnósticos"""
    comando: str
    entradas: Dict[str, Any] = field(default_factory=dict)
    cuerpo: Dict[str, Any] = field(default_factory=dict)
    resultado: Dict[str, Any] = field(default_factory=dict)
    diagnosticos: Dict[str, Any] = field(default_factory=dict)
    avisos: List[str] = field(default_factory=list)
    estado: str = "pass"

    @property
    def aprobado(self) -> bool:
        return self.estado == "pass"

    def como_dict(self) -> Dict[str, Any]:
        return a_serializable({
            "version_esquema": REPORTE_CONFIG['version_esquema'],
            "version": __version__,
            "comando": self.comando,
            "entradas": self.entradas,
            "cuerpo": self.cuerpo,
            "resultado": self.resultado,
            "diagnosticos": {**self.diagnosticos, "avisos": self.avisos},
            "estado": self.estado,
        })

    def a_json(self) -> str:
        return json.dumps(self.como_dict(), indent=REPORTE_CONFIG['indentacion'],
                          sort_keys=True, ensure_ascii=False)


def informe_error(comando: str, error: Exception) -> Dict[str, Any]:
    """Documento JSON de un error de entrada o de cálculo"""
    return {
        "version_esquema": REPORTE_CONFIG['version_esquema'],
        "comando": comando,
        "error": {
            "modulo": getattr(error, "modulo", "cli"),
            "tipo": type(error).__name__,
            "mensaje": str(error),
        },
    }
