# -*- coding: utf-8 -*-

"""
Tester for konfigurasjon og logging.
"""

import os
import logging

import pytest

from core.config import get_default_config, load_config
from core.logger import parse_level, setup_logger

class TestConfig:
    def test_defaults_without_path(self):
        assert load_config() == get_default_config()

    def test_missing_file_falls_back(self, tmp_path):
        assert load_config(str(tmp_path / 'nope.yaml')) == get_default_config()

    def test_empty_file_falls_back(self, tmp_path):
        path = tmp_path / 'empty.yaml'
        path.write_text('')
        assert load_config(str(path)) == get_default_config()

    def test_merges_sections(self, tmp_path):
        path = tmp_path / 'config.yaml'
        path.write_text("oracle:\n  budget: 500\nreporting:\n  output_dir: ut\n")
        config = load_config(str(path))
        assert config['oracle']['budget'] == 500
        assert config['oracle']['max_volume'] == 24
        assert config['reporting']['output_dir'] == 'ut'
        assert config['reporting']['save_raw_data'] is True

    def test_rejects_non_mapping(self, tmp_path):
        path = tmp_path / 'config.yaml'
        path.write_text("- 1\n")
        with pytest.raises(ValueError):
            load_config(str(path))

    def test_repository_file_matches_defaults(self):
        root = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
        assert load_config(os.path.join(root, 'config.yaml')) == get_default_config()

class TestLogger:
    @pytest.mark.parametrize("name, level", [('debug', logging.DEBUG), ('INFO', logging.INFO), ('ukjent', logging.INFO)])
    def test_parse_level(self, name, level):
        assert parse_level(name) == level

    def test_single_console_handler(self):
        setup_logger(logging.INFO)
        logger = setup_logger(logging.DEBUG)
        assert len(logger.handlers) == 1
        assert logger.level == logging.DEBUG
