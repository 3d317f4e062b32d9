# -*- coding: utf-8 -*-
import json
import os

from config import ENV_CACHE_DIR, ENV_LMFDB_URL, Config, ConfigManager


def test_defaults():
    config = Config()
    assert config.search_bound == 12
    assert config.completeness_factor == 1.5
    assert config.survey_bound == 6
    assert os.path.isdir(os.path.join(config.fixtures_dir, 'fields'))


def test_invalid_values_fall_back():
    config = Config({'threads': 0, 'fold_window': 'wide', 'search_cap': 1e6, 'completeness_factor': 0.5})
    assert config.threads == 1
    assert config.fold_window == 64
    assert config.search_cap == 10 ** 6
    assert config.completeness_factor == 1.5


def test_environment_overrides(monkeypatch, tmp_path):
    monkeypatch.setenv(ENV_CACHE_DIR, str(tmp_path))
    monkeypatch.setenv(ENV_LMFDB_URL, 'https://mirror.example.org/api')
    config = Config({'cache_dir': '/elsewhere'})
    assert config.cache_dir == str(tmp_path)
    assert config.lmfdb_url == 'https://mirror.example.org/api'


def test_manager(tmp_path):
    path = tmp_path / 'config.json'
    assert ConfigManager(str(path)).load() == Config()
    path.write_text(json.dumps({'search_bound': 20}), encoding='utf-8')
    assert ConfigManager(str(path)).load().search_bound == 20
    path.write_text('{not json', encoding='utf-8')
    assert ConfigManager(str(path)).load().search_bound == 12
