"""Known integer-sequence prefixes, checked offline.

Fixtures live in ``data/fixtures.txt``, one per line: ``id offset t0 t1 ...``.
A remote client can fetch other ids, but only when explicitly enabled.
"""

from __future__ import annotations

import json
import os
import re
import threading
import urllib.parse
import urllib.request
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Sequence

from .errors import DomainError
from .report import Report

ID_RE = re.compile(r"^[A-Z]\d{6}$")

DEFAULT_URL = os.environ.get("FAROWORDS_OEIS_URL", "https://oeis.org/search")
DEFAULT_TIMEOUT = float(os.environ.get("FAROWORDS_OEIS_TIMEOUT", "10"))
DEFAULT_CACHE = Path(os.environ.get("FAROWORDS_CACHE", Path.home() / ".cache" / "farowords"))


class RemoteDisabled(RuntimeError):
    pass


@dataclass(frozen=True)
class SequenceFixture:
    id: str
    offset: int
    terms: tuple[int, ...]

    def __post_init__(self):
        if not ID_RE.match(self.id):
            raise DomainError(f"bad sequence id {self.id!r}")
        if not self.terms:
            raise DomainError(f"{self.id}: no terms")

    def term(self, index: int) -> int:
        return self.terms[index - self.offset]


def parse_fixtures(text: str) -> dict[str, SequenceFixture]:
    out = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if len(fields) < 3:
            raise DomainError(f"fixture line {lineno}: need id, offset and terms")
        fx = SequenceFixture(fields[0], int(fields[1]), tuple(int(t) for t in fields[2:]))
        out[fx.id] = fx
    return out


@lru_cache(maxsize=None)
def fixtures() -> dict[str, SequenceFixture]:
    text = resources.files("farowords").joinpath("data/fixtures.txt").read_text()
    return parse_fixtures(text)


def fixture(seq_id: str) -> SequenceFixture:
    try:
        return fixtures()[seq_id]
    except KeyError:
        raise DomainError(f"no local fixture for {seq_id!r}") from None


def check_prefix(seq_id: str, computed: Sequence[int], start: int | None = None,
                 known: SequenceFixture | None = None) -> Report:
    """Compare ``computed`` against a known prefix.

    ``computed[0]`` is the term with index ``start`` (default: the sequence's
    offset).  Only the overlap is compared; an empty overlap is a failure.
    """
    fx = known or fixture(seq_id)
    start = fx.offset if start is None else start
    report = Report(f"{seq_id} prefix")
    lo = max(start, fx.offset)
    hi = min(start + len(computed), fx.offset + len(fx.terms))
    if hi <= lo:
        report.fail(f"no overlap between computed indices [{start}, {start + len(computed)}) and the fixture")
        return report
    for i in range(lo, hi):
        report.checked += 1
        got, want = computed[i - start], fx.term(i)
        if got != want:
            report.fail(f"first mismatch at index {i}: computed {got}, expected {want}")
            break
    return report


_cache_lock = threading.Lock()


def remote_lookup(seq_id: str, *, enabled: bool = False, cache_dir: Path | None = None,
                  url: str | None = None, timeout: float | None = None) -> SequenceFixture:
    """Fetch a sequence's terms from the public JSON endpoint, caching the result.

    Refuses unless ``enabled`` is set.  A cached copy is returned without
    touching the network.
    """
    if not ID_RE.match(seq_id):
        raise DomainError(f"bad sequence id {seq_id!r}")
    cache = Path(cache_dir or DEFAULT_CACHE) / f"{seq_id}.json"
    if cache.exists():
        data = json.loads(cache.read_text())
        return SequenceFixture(seq_id, data["offset"], tuple(data["terms"]))
    if not enabled:
        raise RemoteDisabled(f"remote lookup of {seq_id} refused: networking is off (use --online)")
    query = urllib.parse.urlencode({"q": f"id:{seq_id}", "fmt": "json"})
    try:
        with urllib.request.urlopen(f"{url or DEFAULT_URL}?{query}", timeout=timeout or DEFAULT_TIMEOUT) as resp:
            payload = json.load(resp)
    except (OSError, ValueError) as exc:
        raise ConnectionError(f"lookup of {seq_id} failed: {exc}") from exc
    fx = _parse_remote(seq_id, payload)
    with _cache_lock:
        cache.parent.mkdir(parents=True, exist_ok=True)
        tmp = cache.with_suffix(".tmp")
        tmp.write_text(json.dumps({"offset": fx.offset, "terms": list(fx.terms)}))
        tmp.replace(cache)
    return fx


def _parse_remote(seq_id: str, payload) -> SequenceFixture:
    # the endpoint has returned both a bare list and {"results": [...]}
    results = payload.get("results") if isinstance(payload, dict) else payload
    for entry in results or ():
        if f"A{entry.get('number', -1):06d}" == seq_id:
            terms = tuple(int(t) for t in entry["data"].split(","))
            offset = int(str(entry.get("offset", "0")).split(",")[0])
            return SequenceFixture(seq_id, offset, terms)
    raise ConnectionError(f"lookup of {seq_id}: not found in response")
