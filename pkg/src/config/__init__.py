# -*- coding: utf-8 -*-
import json
import os.path
import sys
from json import JSONDecodeError
from typing import Any, TypedDict

try:
    from ui.rich_cli import console
except ModuleNotFoundError:
    from ui.cli import console

__all__ = ['Config', 'ConfigManager', 'ENV_CACHE_DIR', 'ENV_LMFDB_URL']

ENV_LMFDB_URL = 'SUNIT_LMFDB_URL'
ENV_CACHE_DIR = 'SUNIT_CACHE_DIR'


class ConfigDict(TypedDict, total=False):
    """
    The class is a type hint of the config.

    Attributes:
        search_bound: The solver exponent bound when none is given.
        completeness_factor: The bound growth of the completeness check.
        search_cap: The largest admissible number of candidates.
        fold_window: The unit exponent window of fold.
        aux_primes: The number of auxiliary primes of the residue sieve.
        class_number_cap: The largest absolute discriminant for class numbers.
        generator_search_cap: The largest range scanned for ideal generators.
        threads: The worker processes of the sieve and the scans.
        cache_dir: The LMFDB cache directory.
        fixtures_dir: The directory of the field and newform fixtures.
        lmfdb_url: The LMFDB API base URL.
        probe_primes: The number of default probe primes.
        classify_bound: The exponent bound of the {2, L} search.
        survey_bound: The solver bound inside density scans.
    """
    search_bound: int
    completeness_factor: float
    search_cap: int
    fold_window: int
    aux_primes: int
    class_number_cap: int
    generator_search_cap: int
    threads: int
    cache_dir: str
    fixtures_dir: str
    lmfdb_url: str
    probe_primes: int
    classify_bound: int
    survey_bound: int


class Config(dict):
    """
    The class defines the config data structure.

    Missing keys read as their defaults; unknown keys are kept but ignored.
    """
    _DEFAULT_CONFIG: ConfigDict = {
        'search_bound': 12,
        'completeness_factor': 1.5,
        'search_cap': 2 * 10 ** 8,
        'fold_window': 64,
        'aux_primes': 6,
        'class_number_cap': 10 ** 6,
        'generator_search_cap': 2 * 10 ** 6,
        'threads': 1,
        'cache_dir': os.path.join('~', '.cache', 'sunit-fermat'),
        'fixtures_dir': os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), 'data'),
        'lmfdb_url': 'https://www.lmfdb.org/api',
        'probe_primes': 10,
        'classify_bound': 10,
        'survey_bound': 6,
    }

    def __init__(self, config: ConfigDict | dict[str, Any] | None = None) -> None:
        """ Initialize the config over the defaults. """
        super().__init__(self._DEFAULT_CONFIG)
        if config and isinstance(config, dict):
            self.update(config)

    def _positive(self, key: str) -> int:
        value = self.get(key, self._DEFAULT_CONFIG[key])
        if isinstance(value, float) and value.is_integer():
            value = int(value)
        if not isinstance(value, int) or value < 1:
            console.warning(f'invalid `{key}` = {value!r}, using {self._DEFAULT_CONFIG[key]}')
            return self._DEFAULT_CONFIG[key]
        return value

    @property
    def search_bound(self) -> int:
        return self._positive('search_bound')

    @property
    def completeness_factor(self) -> float:
        value = self.get('completeness_factor')
        if not isinstance(value, (int, float)) or value < 1:
            console.warning(f'invalid `completeness_factor` = {value!r}, using 1.5')
            return self._DEFAULT_CONFIG['completeness_factor']
        return float(value)

    @property
    def search_cap(self) -> int:
        return self._positive('search_cap')

    @property
    def fold_window(self) -> int:
        return self._positive('fold_window')

    @property
    def aux_primes(self) -> int:
        return self._positive('aux_primes')

    @property
    def class_number_cap(self) -> int:
        return self._positive('class_number_cap')

    @property
    def generator_search_cap(self) -> int:
        return self._positive('generator_search_cap')

    @property
    def threads(self) -> int:
        return self._positive('threads')

    @property
    def probe_primes(self) -> int:
        return self._positive('probe_primes')

    @property
    def classify_bound(self) -> int:
        return self._positive('classify_bound')

    @property
    def survey_bound(self) -> int:
        return self._positive('survey_bound')

    @property
    def cache_dir(self) -> str:
        """ Return the cache directory, the environment taking precedence over the file. """
        return os.path.expanduser(os.environ.get(ENV_CACHE_DIR) or self.get('cache_dir'))

    @property
    def fixtures_dir(self) -> str:
        return self.get('fixtures_dir')

    @property
    def lmfdb_url(self) -> str:
        """ Return the LMFDB base URL, the environment taking precedence over the file. """
        return os.environ.get(ENV_LMFDB_URL) or self.get('lmfdb_url')


class ConfigManager:
    """
    The class defines the config manager utils.

    Attributes:
        CONFIG_FILE: The default path of the config file, next to ``main.py``.

    Properties:
        config: The config of the manager.

    Methods:
        load: Load the config from the file.
    """
    CONFIG_FILE: str = os.path.join(sys.path[0], 'config.json')

    def __init__(self, path: str | None = None) -> None:
        self.path = path or self.CONFIG_FILE
        self._config = Config()

    @property
    def config(self) -> Config:
        """ Return the config. """
        return self._config

    def load(self) -> Config:
        """ Load the config from the file; a missing file leaves the defaults. """
        if os.path.isfile(self.path):
            self._read()
        return self._config

    def _read(self) -> None:
        """ Read the config from the JSON file."""
        try:
            with open(self.path, 'r', encoding='utf-8') as f:
                self._config = Config(json.load(f))
        except (IOError, JSONDecodeError):
            console.warning(f'Invalid JSON file `{self.path}`, using the default config.')
            self._config = Config()

