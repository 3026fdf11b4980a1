# -*- coding: utf-8 -*-

"""
Tester for grenserapporten.
"""

import json
import os

import pandas as pd

import main
from reporting import ReportGenerator

class TestReportGenerator:
    def test_two_dimensional_table(self, tmp_path, builder):
        generator = ReportGenerator({'output_dir': str(tmp_path)}, builder)
        table = generator.build_table(2, 6)
        assert len(table) == 15
        assert table['sharp'].all()
        assert (table['construction_spread'] == table['lower']).all()

    def test_three_dimensional_table(self, tmp_path, builder):
        generator = ReportGenerator({'output_dir': str(tmp_path)}, builder)
        table = generator.build_table(3, 4)
        row = table[table['shape'] == '2x2x2'].iloc[0]
        assert row['lower'] == row['upper'] == 4
        assert (table['lower'] <= table['construction_spread']).all()
        assert (table['construction_spread'] <= table['upper']).all()

    def test_four_dimensional_table(self, tmp_path, builder):
        generator = ReportGenerator({'output_dir': str(tmp_path)}, builder)
        table = generator.build_table(4, 6)
        assert len(table) == 70
        assert (table['lower'] <= table['construction_spread']).all()
        assert (table['construction_spread'] <= table['upper']).all()
        assert table[table['shape'] == '3x4x4x4'].iloc[0]['upper'] == 89

    def test_writes_markdown_and_csv(self, tmp_path, builder):
        generator = ReportGenerator({'output_dir': str(tmp_path), 'save_raw_data': True}, builder)
        table = generator.build_table(2, 4)
        path = generator.generate_report(table, 2, 4)

        text = open(path, encoding='utf-8').read()
        assert text.startswith('# Båndbreddegrenser')
        assert '| 3x4 | 7 | 7 | 7 | 0 |' in text

        raw = pd.read_csv(os.path.join(str(tmp_path), 'data', 'grenser_d2_n4.csv'))
        assert list(raw['shape']) == list(table['shape'])

    def test_raw_data_can_be_skipped(self, tmp_path, builder):
        generator = ReportGenerator({'output_dir': str(tmp_path), 'save_raw_data': False}, builder)
        generator.generate_report(generator.build_table(2, 3), 2, 3)
        assert not os.path.exists(os.path.join(str(tmp_path), 'data'))

    def test_cli(self, capsys, tmp_path):
        code = main.main(['report', '2', '5', '--out-dir', str(tmp_path)])
        payload = json.loads(capsys.readouterr().out)
        assert code == 0
        assert payload['rows'] == 10
        assert os.path.exists(payload['report'])
