# -*- coding: utf-8 -*-

"""
Loggoppsett for HammingBand.
"""

import os
import logging
from typing import Optional

def setup_logger(level: int, log_file: Optional[str] = None) -> logging.Logger:
    """
    Setter opp logging for applikasjonen.

    Diagnostikk går til stderr slik at stdout kun bærer data.

    Args:
        level (int): Loggnivå (logging.DEBUG, logging.INFO, etc.)
        log_file (str, optional): Sti til loggfil

    Returns:
        logging.Logger: Konfigurert logger
    """
    # Konfigurer root logger
    logger = logging.getLogger()
    logger.setLevel(level)

    # Fjern eksisterende handlers for å unngå dupliserte logger
    for handler in logger.handlers[:]:
        logger.removeHandler(handler)
        handler.close()

    if log_file:
        # Opprett loggkatalog hvis den ikke eksisterer
        log_dir = os.path.dirname(log_file)
        if log_dir and not os.path.exists(log_dir):
            os.makedirs(log_dir)

        file_handler = logging.FileHandler(log_file, encoding='utf-8')
        file_format = logging.Formatter('%(asctime)s - %(name)s - %(levelname)s - %(message)s')
        file_handler.setFormatter(file_format)
        logger.addHandler(file_handler)

    # Opprett konsollhåndterer (stderr)
    console_handler = logging.StreamHandler()
    console_format = logging.Formatter('%(levelname)s: %(message)s')
    console_handler.setFormatter(console_format)
    logger.addHandler(console_handler)

    return logger

def parse_level(name: str) -> int:
    """
    Oversetter et nivånavn fra konfigurasjonen til et loggnivå.

    Args:
        name (str): Nivånavn, f.eks. 'info' eller 'debug'

    Returns:
        int: Loggnivå
    """
    level = logging.getLevelName(str(name).upper())
    return level if isinstance(level, int) else logging.INFO
