# -*- coding: utf-8 -*-

"""
Konfigurasjonshåndtering for HammingBand.
"""

import os
import copy
import logging
from typing import Dict, Optional

import yaml

def load_config(config_path: Optional[str] = None) -> Dict:
    """
    Laster konfigurasjon fra en YAML-fil og fletter den over standardverdiene.

    Ingen fil leses med mindre en sti er gitt eksplisitt.

    Args:
        config_path (str, optional): Sti til konfigurasjonsfilen

    Returns:
        dict: Konfigurasjonsobjekt
    """
    defaults = get_default_config()
    if config_path is None:
        return defaults

    if not os.path.exists(config_path):
        logging.warning(f"Konfigurasjonsfil ikke funnet: {config_path}. Bruker standardkonfigurasjon.")
        return defaults

    with open(config_path, 'r', encoding='utf-8') as file:
        config = yaml.safe_load(file)

    # Valider konfigurasjon
    if not config:
        logging.warning("Tom konfigurasjonsfil. Bruker standardkonfigurasjon.")
        return defaults

    if not isinstance(config, dict):
        raise ValueError(f"Ugyldig konfigurasjonsfil {config_path}: forventet en YAML-mapping")

    return _merge(defaults, config)

def get_default_config() -> Dict:
    """
    Returnerer standardkonfigurasjon.

    Returns:
        dict: Standard konfigurasjonsobjekt
    """
    return {
        'oracle': {
            'budget': 10 ** 8,            # maks antall søkenoder
            'max_volume': 24,             # grense for lineære utvidelser
            'max_unrestricted_volume': 9,
            'max_count': 2 ** 63 - 1,     # metningsverdi for tellinger
            'progress_interval': 1_000_000
        },
        'construction': {
            'verify_bracket': True,
            'max_volume': 1_000_000
        },
        'hypercube': {
            'max_dimension': 20
        },
        'reporting': {
            'output_dir': 'rapporter',
            'save_raw_data': True
        },
        'logging': {
            'level': 'info',
            'file': None
        }
    }

def _merge(base: Dict, override: Dict) -> Dict:
    """
    Fletter en overstyring rekursivt inn i en kopi av basiskonfigurasjonen.

    Args:
        base (dict): Standardverdier
        override (dict): Verdier fra fil

    Returns:
        dict: Flettet konfigurasjon
    """
    merged = copy.deepcopy(base)
    for key, value in override.items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = _merge(merged[key], value)
        else:
            merged[key] = value
    return merged
