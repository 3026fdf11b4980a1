#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
ReportGenerator for HammingBand.
"""

import os
import logging
import itertools
from typing import Dict, List, Optional

import pandas as pd

from arrangement.shape import Shape
from bounds.bounds import compute_report, general_upper_bound
from construct.builder import ArrangementBuilder

class ReportGenerator:
    """Klasse for generering av grenserapporter i HammingBand."""

    COLUMNS = ['shape', 'volume', 'lower', 'upper', 'construction_spread', 'gap', 'sharp', 'general_upper']

    def __init__(self, config: Dict, builder: Optional[ArrangementBuilder] = None):
        """
        Initialiserer ReportGenerator.

        Args:
            config (Dict): 'reporting'-delen av konfigurasjonen
            builder (ArrangementBuilder, optional): Konstruktør for målt spredning
        """
        self.logger = logging.getLogger(__name__)
        self.config = config

        self.report_dir = config.get('output_dir', 'rapporter')
        self.save_raw_data = config.get('save_raw_data', True)
        self.builder = builder or ArrangementBuilder()

    def build_table(self, dimension: int, max_size: int) -> pd.DataFrame:
        """
        Regner grenser for alle sorterte former med gitt dimensjon.

        Args:
            dimension (int): Antall dimensjoner d >= 2
            max_size (int): Største klikkorden n_d

        Returns:
            pd.DataFrame: Én rad per form
        """
        rows: List[Dict] = []
        for dims in itertools.combinations_with_replacement(range(2, max_size + 1), dimension):
            shape = Shape(dims)
            measured = None
            if shape.volume <= self.builder.max_volume:
                measured = self.builder.construct(shape).measured_spread
            report = compute_report(shape, measured)
            rows.append({
                'shape': str(shape),
                'volume': shape.volume,
                'lower': report.lower,
                'upper': report.upper_formula,
                'construction_spread': measured,
                'gap': report.gap,
                'sharp': report.gap == 0,
                'general_upper': general_upper_bound(shape),
            })

        self.logger.info(f"Grensetabell for d={dimension}, n <= {max_size}: {len(rows)} former")
        return pd.DataFrame(rows, columns=self.COLUMNS)

    def generate_report(self, table: pd.DataFrame, dimension: int, max_size: int) -> str:
        """
        Skriver tabellen som en Markdown-rapport.

        Args:
            table (pd.DataFrame): Tabell fra build_table
            dimension (int): Dimensjonen tabellen gjelder
            max_size (int): Største klikkorden i tabellen

        Returns:
            str: Filbane til generert rapport
        """
        os.makedirs(self.report_dir, exist_ok=True)
        stem = f'grenser_d{dimension}_n{max_size}'
        filepath = os.path.join(self.report_dir, f'{stem}.md')

        with open(filepath, 'w', encoding='utf-8') as f:
            f.write(f'# Båndbreddegrenser for Hamming-grafer, d = {dimension}\n\n')

            # Skriv sammendrag
            f.write('## Sammendrag\n\n')
            f.write(f'- Antall former: {len(table)}\n')
            f.write(f'- Skarpe former (nedre = øvre): {int(table["sharp"].sum())}\n')
            f.write(f'- Største gap: {int(table["gap"].max()) if len(table) else 0}\n\n')

            f.write('## Grenser\n\n')
            f.write('| Form | Nedre | Øvre | Konstruksjon | Gap |\n')
            f.write('|------|-------|------|--------------|-----|\n')
            for row in table.itertuples(index=False):
                measured = '-' if pd.isna(row.construction_spread) else int(row.construction_spread)
                f.write(f'| {row.shape} | {row.lower} | {row.upper} | {measured} | {row.gap} |\n')

        if self.save_raw_data:
            self._save_raw_data(table, stem)

        self.logger.info(f"Rapport generert: {filepath}")
        return filepath

    def _save_raw_data(self, table: pd.DataFrame, stem: str) -> str:
        """
        Lagrer tabellen som CSV.

        Args:
            table (pd.DataFrame): Tabellen
            stem (str): Filnavn uten endelse

        Returns:
            str: Filbane til rådata
        """
        data_dir = os.path.join(self.report_dir, 'data')
        os.makedirs(data_dir, exist_ok=True)

        filepath = os.path.join(data_dir, f'{stem}.csv')
        table.to_csv(filepath, index=False, lineterminator='\n')

        self.logger.info(f"Rådata lagret: {filepath}")
        return filepath
