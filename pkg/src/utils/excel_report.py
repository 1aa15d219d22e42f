"""
Exportación de un reporte a Excel: una hoja por sección con encabezado
(azul 366092, texto blanco en negrita).
"""

import json
import logging
from datetime import datetime
from pathlib import Path
from typing import Any, Dict, Iterator, Optional, Tuple

import openpyxl
from openpyxl.styles import Font, PatternFill, Alignment

from config.constants import REPORTE_CONFIG, get_data_output_path

logger = logging.getLogger(__name__)

ENCABEZADOS = ["Clave", "Valor"]
SECCIONES = (
    ("Entradas", "entradas"),
    ("Cuerpo", "cuerpo"),
    ("Resultado", "resultado"),
    ("Diagnosticos", "diagnosticos"),
)


def _aplanar(valor: Any, prefijo: str = "") -> Iterator[Tuple[str, Any]]:
    """Pares (ruta, valor) con rutas del tipo 'descenso[0].algebra'"""
    if isinstance(valor, dict):
        if not valor:
            yield prefijo, "{}"
        for clave, sub in valor.items():
            yield from _aplanar(sub, f"{prefijo}.{clave}" if prefijo else str(clave))
    elif isinstance(valor, list):
        if not valor:
            yield prefijo, "[]"
        # listas de escalares en una sola celda
        elif all(not isinstance(v, (dict, list)) for v in valor):
            yield prefijo, json.dumps(valor, ensure_ascii=False)
        else:
            for i, sub in enumerate(valor):
                yield from _aplanar(sub, f"{prefijo}[{i}]")
    else:
        yield prefijo, valor


def _llenar_hoja(ws, filas: Iterator[Tuple[str, Any]]):
    header_fill = PatternFill(start_color=REPORTE_CONFIG['color_encabezado'],
                              end_color=REPORTE_CONFIG['color_encabezado'], fill_type="solid")
    header_font = Font(bold=True, color="FFFFFF")

    for col, header in enumerate(ENCABEZADOS, 1):
        cell = ws.cell(row=1, column=col, value=header)
        cell.fill = header_fill
        cell.font = header_font
        cell.alignment = Alignment(horizontal='center', vertical='center')

    for idx, (clave, valor) in enumerate(filas, start=2):
        ws.cell(row=idx, column=1, value=clave)
        ws.cell(row=idx, column=2, value=valor if isinstance(valor, (int, str, bool)) or valor is None else str(valor))

    ws.column_dimensions['A'].width = 40
    ws.column_dimensions['B'].width = 80
    return ws


def exportar_excel(reporte: Dict[str, Any], carpeta: Optional[Path] = None) -> Path:
    """
    Escribe el reporte (ya serializado con `Informe.como_dict`) en un libro nuevo.

    Args:
        reporte: Documento del reporte
        carpeta: Carpeta de salida; por defecto data/YYYY-MM-DD/reportes

    Returns:
        Ruta del archivo guardado
    """
    carpeta = carpeta or get_data_output_path(REPORTE_CONFIG['subcarpeta_excel'])
    carpeta.mkdir(parents=True, exist_ok=True)

    wb = openpyxl.Workbook()
    ws = wb.active
    ws.title = "Resumen"
    resumen = {k: reporte.get(k) for k in ("comando", "version", "version_esquema", "estado")}
    _llenar_hoja(ws, iter(resumen.items()))
    for titulo, clave in SECCIONES:
        _llenar_hoja(wb.create_sheet(titulo), _aplanar(reporte.get(clave, {})))

    marca = datetime.now().strftime("%Y%m%d_%H%M%S")
    archivo_salida = carpeta / f"{reporte.get('comando', 'reporte').upper()}_{marca}.xlsx"
    wb.save(archivo_salida)
    logger.info(f"Excel guardado: {archivo_salida}")
    return archivo_salida
