# -*- coding: utf-8 -*-

"""
Lese- og skrivemodul for arrangementer i HammingBand.

JSON-formen er {"shape": [...], "order": "row-major", "values": [...]}.
CSV brukes bare for todimensjonale arrangementer: én rad per matriserad.
"""

import io
import json
import logging
from pathlib import Path
from typing import Any, Dict, Optional

import numpy as np
import pandas as pd

from arrangement.arrangement import Arrangement
from arrangement.shape import Shape
from core.exceptions import ArrangementError, HammingBandwidthError, InvalidArgumentError

logger = logging.getLogger(__name__)

ROW_MAJOR = 'row-major'
FORMATS = ('json', 'csv')

def arrangement_to_dict(a: Arrangement) -> Dict[str, Any]:
    """
    Gjør et arrangement om til JSON-formen.

    Args:
        a (Arrangement): Arrangementet

    Returns:
        Dict[str, Any]: Form, rekkefølge og flate verdier
    """
    return {
        'shape': a.shape.to_list(),
        'order': ROW_MAJOR,
        'values': [int(v) for v in a.values.ravel()],
    }

def arrangement_from_dict(data: Dict[str, Any]) -> Arrangement:
    """
    Leser et arrangement fra JSON-formen.

    Args:
        data (Dict[str, Any]): Innlest JSON-objekt

    Returns:
        Arrangement: Validert arrangement

    Raises:
        ArrangementError: Hvis objektet er feilformet
    """
    if not isinstance(data, dict):
        raise ArrangementError("Arrangementet må være et JSON-objekt")
    missing = [key for key in ('shape', 'values') if key not in data]
    if missing:
        raise ArrangementError(f"Arrangementet mangler feltene {missing}")
    order = data.get('order', ROW_MAJOR)
    if order != ROW_MAJOR:
        raise ArrangementError(f"Ukjent rekkefølge '{order}', bare '{ROW_MAJOR}' støttes")

    dims = data['shape']
    values = data['values']
    if not isinstance(dims, list) or not all(isinstance(n, int) and not isinstance(n, bool) for n in dims):
        raise ArrangementError("Feltet 'shape' må være en liste av heltall")
    if not isinstance(values, list) or not all(isinstance(v, int) and not isinstance(v, bool) for v in values):
        raise ArrangementError("Feltet 'values' må være en flat liste av heltall")

    try:
        shape = Shape(tuple(dims))
    except InvalidArgumentError as e:
        raise ArrangementError(f"Ugyldig form: {str(e)}") from e
    if shape.to_list() != dims:
        raise ArrangementError(f"Formen {dims} er ikke normalisert (forventet {shape.to_list()})")

    try:
        return Arrangement(shape, values)
    except HammingBandwidthError as e:
        raise ArrangementError(str(e)) from e

def to_json(a: Arrangement) -> str:
    return dumps(arrangement_to_dict(a))

def from_json(text: str) -> Arrangement:
    """
    Leser et arrangement fra JSON-tekst.

    Args:
        text (str): JSON-dokumentet

    Returns:
        Arrangement: Validert arrangement
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ArrangementError(f"Ugyldig JSON: {str(e)}") from e
    return arrangement_from_dict(data)

def to_csv(a: Arrangement) -> str:
    """
    Skriver et todimensjonalt arrangement som CSV.

    Args:
        a (Arrangement): Arrangementet

    Returns:
        str: Én linje per rad, kommaseparert
    """
    if a.shape.d != 2:
        raise InvalidArgumentError(f"CSV støtter bare todimensjonale arrangementer, fikk {a.shape}")
    frame = pd.DataFrame(a.values)
    return frame.to_csv(header=False, index=False, lineterminator='\n')

def from_csv(text: str) -> Arrangement:
    """
    Leser et arrangement fra CSV.

    En matrise med flere rader enn kolonner transponeres slik at n_1 <= n_2.

    Args:
        text (str): CSV-innholdet

    Returns:
        Arrangement: Validert arrangement
    """
    if not text.strip():
        raise ArrangementError("CSV-filen er tom")
    try:
        frame = pd.read_csv(io.StringIO(text), header=None, skip_blank_lines=True)
    except (pd.errors.ParserError, ValueError) as e:
        raise ArrangementError(f"Ugyldig CSV: {str(e)}") from e

    if frame.isna().any().any() or not all(pd.api.types.is_integer_dtype(t) for t in frame.dtypes):
        raise ArrangementError("CSV-filen må bare inneholde heltall i en full matrise")

    values = frame.to_numpy(dtype=np.int64)
    if values.shape[0] > values.shape[1]:
        logger.warning(f"CSV-matrisen {values.shape[0]}x{values.shape[1]} transponeres for å få n_1 <= n_2")
        values = values.T

    try:
        shape = Shape(values.shape)
        return Arrangement(shape, values.ravel())
    except HammingBandwidthError as e:
        raise ArrangementError(str(e)) from e

def infer_format(path: Path, fmt: Optional[str] = None) -> str:
    """Velger format fra flagg eller filendelse."""
    if fmt is not None:
        if fmt not in FORMATS:
            raise InvalidArgumentError(f"Ukjent format '{fmt}'")
        return fmt
    return 'csv' if Path(path).suffix.lower() == '.csv' else 'json'

def read_arrangement(path: Path, fmt: Optional[str] = None) -> Arrangement:
    """
    Leser et arrangement fra fil.

    Args:
        path (Path): Filsti
        fmt (Optional[str]): 'json' eller 'csv'; utledes fra endelsen hvis None

    Returns:
        Arrangement: Validert arrangement
    """
    path = Path(path)
    fmt = infer_format(path, fmt)
    text = path.read_text(encoding='utf-8')
    logger.debug(f"Leser arrangement fra {path} ({fmt})")
    return from_csv(text) if fmt == 'csv' else from_json(text)

def write_arrangement(a: Arrangement, path: Path, fmt: Optional[str] = None) -> Path:
    """
    Skriver et arrangement til fil.

    Args:
        a (Arrangement): Arrangementet
        path (Path): Filsti
        fmt (Optional[str]): 'json' eller 'csv'; utledes fra endelsen hvis None

    Returns:
        Path: Stien som ble skrevet
    """
    path = Path(path)
    fmt = infer_format(path, fmt)
    text = to_csv(a) if fmt == 'csv' else to_json(a) + '\n'
    if path.parent:
        path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding='utf-8')
    logger.info(f"Arrangement {a.shape} skrevet til {path}")
    return path

def dumps(obj: Any) -> str:
    """Deterministisk JSON-utskrift."""
    return json.dumps(obj, indent=2, ensure_ascii=False)
