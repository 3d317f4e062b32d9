# -*- coding: utf-8 -*-
"""
Weight 2 newform data from the LMFDB API, cached on disk with an offline fixture fallback.
"""
import hashlib
import json
import os
import tempfile
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from datetime import datetime, timezone
from fractions import Fraction
from pathlib import Path
from typing import Any, Self
from urllib.error import URLError
from urllib.parse import urlencode
from urllib.request import Request, urlopen

from sympy import prime

from model.errors import ParseError, PreconditionError, TransportError
from model.newform import NewformRecord

try:
    from ui.rich_cli import console
except ModuleNotFoundError:
    from ui.cli import console

__all__ = ['CacheEntry', 'CacheSummary', 'LMFDBClient']

SCHEMA = 1
WEIGHT = 2
_TIMEOUT = 30


def _digest(forms: list[dict[str, Any]]) -> str:
    payload = json.dumps(forms, sort_keys=True, separators=(',', ':')).encode('utf-8')
    return hashlib.sha256(payload).hexdigest()


@dataclass(frozen=True)
class CacheEntry:
    """
    The class represents the cached newforms of one level.

    Attributes:
        level: The level N.
        retrieved: The ISO timestamp of the retrieval.
        digest: The sha256 of the serialized forms.
        records: The parsed newforms.
        weight: The weight, always 2.
        schema: The cache schema version.
    """
    level: int
    retrieved: str
    digest: str
    records: tuple[NewformRecord, ...]
    weight: int = WEIGHT
    schema: int = SCHEMA

    @classmethod
    def create(cls, level: int, records: list[NewformRecord]) -> Self:
        forms = [r.to_dict() for r in records]
        return cls(level, datetime.now(timezone.utc).isoformat(timespec='seconds'), _digest(forms), tuple(records))

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> Self:
        """
        Parse a cache file.

        :raises ParseError: If the digest does not match the forms or a form is malformed.
        """
        forms = data.get('forms', [])
        digest = _digest(forms)
        if digest != data.get('digest'):
            raise ParseError('cache digest mismatch', digest)
        records = tuple(NewformRecord.from_dict(form) for form in forms)
        return cls(int(data['level']), str(data.get('retrieved', '')), digest, records,
                   int(data.get('weight', WEIGHT)), int(data.get('schema', 0)))

    def to_dict(self) -> dict[str, Any]:
        return {
            'schema': self.schema,
            'level': self.level,
            'weight': self.weight,
            'retrieved': self.retrieved,
            'digest': self.digest,
            'forms': [r.to_dict() for r in self.records],
        }


@dataclass
class CacheSummary:
    """
    The class counts the outcome of warming the cache.

    Attributes:
        fetched: Levels newly stored, from the network or a fixture.
        hit: Levels already cached.
        missed: Levels that could not be obtained.
        entries: Map level -> number of forms.
    """
    fetched: list[int] = field(default_factory=list)
    hit: list[int] = field(default_factory=list)
    missed: list[int] = field(default_factory=list)
    entries: dict[int, int] = field(default_factory=dict)

    def to_dict(self) -> dict[str, Any]:
        return {
            'fetched': len(self.fetched),
            'hit': len(self.hit),
            'missed': len(self.missed),
            'levels': {str(level): count for level, count in sorted(self.entries.items())},
            'missed_levels': sorted(self.missed),
        }


class LMFDBClient:
    """
    The class fetches weight 2 newforms of trivial character by level.

    Lookups try the cache first. Offline, a miss falls back to the fixture of the
    level and fails with a TransportError when there is none. Online, the forms are
    requested from ``mf_newforms`` and ``mf_hecke_nf``; a network failure falls
    back to the fixture as well.

    Attributes:
        base_url: The API base URL.
        cache_dir: The directory of the cache files.
        fixtures_dir: The directory holding ``newforms/level_<N>.json``.
        offline: Whether the network is disabled.
        probe_count: How many a_p are kept per form.
    """

    def __init__(self, base_url: str, cache_dir: str | Path, fixtures_dir: str | Path | None = None,
                 offline: bool = False, probe_count: int = 25) -> None:
        self.base_url = base_url.rstrip('/')
        self.cache_dir = Path(cache_dir).expanduser()
        self.fixtures_dir = Path(fixtures_dir) if fixtures_dir else None
        self.offline = offline
        self.probe_count = probe_count

    def fetch_newforms(self, level: int) -> list[NewformRecord]:
        """
        Return the weight 2 newforms of trivial character at the level.

        :param level: A positive integer.
        :return: The newforms, ordered by label.
        :raises TransportError: If no cache, fixture or network answer is available.
        :raises ParseError: If a payload is malformed.
        """
        return list(self._lookup(level)[0].records)

    def warm_cache(self, levels: list[int], threads: int = 1) -> CacheSummary:
        """
        Make sure every level is cached.

        :param levels: The levels.
        :param threads: Concurrent fetches.
        :return: The summary, in level order.
        """
        summary = CacheSummary()
        with ThreadPoolExecutor(max_workers=max(1, threads)) as executor:
            outcomes = list(executor.map(self._warm_one, sorted(set(levels))))
        for level, outcome, count in outcomes:
            getattr(summary, outcome).append(level)
            if count is not None:
                summary.entries[level] = count
        console.info(f'cache: {len(summary.fetched)} fetched, {len(summary.hit)} hit, {len(summary.missed)} missed')
        return summary

    def purge_cache(self) -> int:
        """
        Remove the cache files.

        :return: The number of files removed.
        """
        if not self.cache_dir.is_dir():
            return 0
        removed = 0
        for path in self.cache_dir.glob('*.json'):
            path.unlink(missing_ok=True)
            removed += 1
        console.info(f'removed {removed} cache entries from {self.cache_dir}')
        return removed

    def _warm_one(self, level: int) -> tuple[int, str, int | None]:
        try:
            entry, cached = self._lookup(level)
        except (TransportError, ParseError) as e:
            console.warning(f'level {level}: {e}')
            return level, 'missed', None
        return level, 'hit' if cached else 'fetched', len(entry.records)

    def _lookup(self, level: int) -> tuple[CacheEntry, bool]:
        if level < 1:
            raise PreconditionError(f'level must be positive, got {level}')
        entry = self._read_cache(level)
        if entry is not None:
            return entry, True

        records = None
        if not self.offline:
            try:
                records = self._download(level)
            except TransportError as e:
                console.warning(f'{e}; trying the fixture')
        if records is None:
            records = self._read_fixture(level)
        if records is None:
            raise TransportError(f'no cached or fixture newforms for level {level}'
                                 + (' in offline mode' if self.offline else ''))
        entry = CacheEntry.create(level, records)
        self._write_cache(entry)
        return entry, False

    def _cache_path(self, level: int) -> Path:
        return self.cache_dir / f'newforms_{level}_{WEIGHT}_v{SCHEMA}.json'

    def _read_cache(self, level: int) -> CacheEntry | None:
        path = self._cache_path(level)
        if not path.is_file():
            return None
        try:
            with open(path, 'r', encoding='utf-8') as f:
                entry = CacheEntry.from_dict(json.load(f))
        except (json.JSONDecodeError, ParseError, KeyError, ValueError) as e:
            console.warning(f'ignoring cache entry {path.name}: {e}')
            return None
        if entry.schema != SCHEMA or entry.level != level:
            return None
        return entry

    def _write_cache(self, entry: CacheEntry) -> None:
        self.cache_dir.mkdir(parents=True, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=self.cache_dir, suffix='.tmp')
        try:
            with os.fdopen(fd, 'w', encoding='utf-8') as f:
                json.dump(entry.to_dict(), f, indent=1)
            os.replace(tmp, self._cache_path(entry.level))
        except BaseException:
            Path(tmp).unlink(missing_ok=True)
            raise

    def _read_fixture(self, level: int) -> list[NewformRecord] | None:
        if self.fixtures_dir is None:
            return None
        path = self.fixtures_dir / 'newforms' / f'level_{level}.json'
        if not path.is_file():
            return None
        with open(path, 'rb') as f:
            raw = f.read()
        try:
            data = json.loads(raw)
            return sorted((NewformRecord.from_dict(form) for form in data.get('forms', [])), key=lambda r: r.label)
        except (json.JSONDecodeError, ParseError) as e:
            raise ParseError(f'fixture {path.name}: {e}', hashlib.sha256(raw).hexdigest()) from e

    def _query(self, table: str, params: dict[str, str]) -> list[dict[str, Any]]:
        url = f'{self.base_url}/{table}/?{urlencode(params | {"_format": "json"})}'
        console.debug(f'GET {url}')
        try:
            with urlopen(Request(url, headers={'Accept': 'application/json'}), timeout=_TIMEOUT) as response:
                raw = response.read()
        except (URLError, TimeoutError, OSError) as e:
            raise TransportError(f'request to {table} failed: {e}') from e
        try:
            payload = json.loads(raw)
            data = payload['data']
            if not isinstance(data, list):
                raise TypeError('data is not a list')
            return data
        except (json.JSONDecodeError, KeyError, TypeError) as e:
            raise ParseError(f'malformed {table} payload: {e}', hashlib.sha256(raw).hexdigest()) from e

    def _download(self, level: int) -> list[NewformRecord]:
        forms = self._query('mf_newforms', {
            'level': f'i{level}',
            'weight': f'i{WEIGHT}',
            'char_order': 'i1',
            '_fields': 'label,dim,field_poly,traces',
        })
        records = [self._parse_form(level, form) for form in forms]
        console.info(f'level {level}: fetched {len(records)} newforms')
        return sorted(records, key=lambda r: r.label)

    def _parse_form(self, level: int, form: dict[str, Any]) -> NewformRecord:
        try:
            label, dim = str(form['label']), int(form['dim'])
            if dim == 1:
                traces = form['traces']
                eigenvalues = {
                    prime(i): [traces[prime(i) - 1]]
                    for i in range(1, self.probe_count + 1) if prime(i) - 1 < len(traces)
                }
                return NewformRecord.from_dict({
                    'label': label, 'level': level, 'weight': WEIGHT, 'field_poly': [0, 1], 'eigenvalues': eigenvalues,
                })
        except (KeyError, TypeError, ValueError) as e:
            raise ParseError(f'malformed mf_newforms record: {e}', _digest([form])) from e

        rows = self._query('mf_hecke_nf', {
            'label': label,
            '_fields': 'label,field_poly,hecke_ring_numerators,hecke_ring_denominators,ap',
        })
        if len(rows) != 1:
            raise ParseError(f'{label}: expected one mf_hecke_nf row, got {len(rows)}', _digest(rows))
        row = rows[0]
        try:
            numerators = row['hecke_ring_numerators']
            denominators = row['hecke_ring_denominators']
            eigenvalues = {}
            for i, ap in enumerate(row['ap'][:self.probe_count]):
                coords = [Fraction(0)] * dim
                for j, c in enumerate(ap):
                    for k, n in enumerate(numerators[j]):
                        coords[k] += Fraction(c * n, denominators[j])
                eigenvalues[prime(i + 1)] = [str(c) for c in coords]
            return NewformRecord.from_dict({
                'label': label, 'level': level, 'weight': WEIGHT,
                'field_poly': row['field_poly'], 'eigenvalues': eigenvalues,
            })
        except ParseError as e:
            raise ParseError(str(e), _digest(rows)) from e
        except (KeyError, TypeError, ValueError, IndexError) as e:
            raise ParseError(f'malformed mf_hecke_nf record for {label}: {e}', _digest(rows)) from e
