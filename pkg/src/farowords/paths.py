"""Lattice paths over the steps F (level), U (up) and D (down).

Paths are plain strings over ``"FUD"``.  A dispersed Dyck path never goes
below the axis, ends on it, and takes level steps only at height 0.
"""

from __future__ import annotations

import math
from itertools import groupby
from typing import Iterator, NamedTuple

from .errors import DomainError

STEPS = "FUD"
_DELTA = {"F": 0, "U": 1, "D": -1}


def parse_path(text: str) -> str:
    text = text.strip()
    if text in ("-", "ε"):
        return ""
    for i, c in enumerate(text):
        if c not in _DELTA:
            raise DomainError(f"invalid step {c!r} at position {i} in {text!r}")
    return text


def heights(path: str) -> list[int]:
    """Heights after each step, starting from 0 (length len(path) + 1)."""
    h = [0]
    for s in path:
        h.append(h[-1] + _DELTA[s])
    return h


def is_dispersed_dyck(path: str) -> bool:
    h = 0
    for s in path:
        if s == "F" and h != 0:
            return False
        h += _DELTA[s]
        if h < 0:
            return False
    return h == 0


def is_dyck(path: str) -> bool:
    return "F" not in path and is_dispersed_dyck(path)


def count_peaks(path: str) -> int:
    return sum(1 for a, b in zip(path, path[1:]) if a == "U" and b == "D")


def dispersed_count(n: int) -> int:
    """Ballot number b_n = C(n, floor(n/2))."""
    return math.comb(n, n // 2)


def dispersed_peak_count(n: int, k: int) -> int:
    """Dispersed Dyck paths of length n with exactly k peaks."""
    return math.comb(n // 2, k) * math.comb((n + 1) // 2, k)


def catalan(n: int) -> int:
    return math.comb(2 * n, n) // (n + 1)


def _walk(n: int, allow_level: bool) -> Iterator[str]:
    steps: list[str] = []

    def go(h: int) -> Iterator[str]:
        left = n - len(steps)
        if left == 0:
            if h == 0:
                yield "".join(steps)
            return
        if h > left:
            return
        if allow_level and h == 0:
            steps.append("F")
            yield from go(h)
            steps.pop()
        if h + 1 <= left - 1:
            steps.append("U")
            yield from go(h + 1)
            steps.pop()
        if h > 0:
            steps.append("D")
            yield from go(h - 1)
            steps.pop()

    return go(0)


def enumerate_dispersed(n: int) -> Iterator[str]:
    """Dispersed Dyck paths of length n, lexicographic in F < U < D."""
    if n < 0:
        raise DomainError(f"length must be >= 0, got {n}")
    return _walk(n, allow_level=True)


def enumerate_dispersed_with_peaks(n: int, k: int) -> Iterator[str]:
    if k < 0:
        raise DomainError(f"peak count must be >= 0, got {k}")
    return (p for p in enumerate_dispersed(n) if count_peaks(p) == k)


def enumerate_dyck(semilength: int) -> Iterator[str]:
    if semilength < 0:
        raise DomainError(f"semilength must be >= 0, got {semilength}")
    return _walk(2 * semilength, allow_level=False)


# --- run-length encoding ---------------------------------------------------------


class RunEncoding(NamedTuple):
    """Run lengths T_0..T_{3(k-1)} of ``F* U+ D+ ... F*`` for arity k.

    Index i = 0 mod 3 is an F-run, 1 mod 3 a U-run, 2 mod 3 a D-run.
    """

    runs: tuple[int, ...]
    arity: int


def run_encoding(path: str, k: int) -> RunEncoding:
    """Split ``path`` as ``F^T0 U^T1 D^T2 F^T3 ... F^T{3(k-1)}``.

    Raises DomainError unless the path has exactly k - 1 alternating
    U-run/D-run groups, each separated only by (possibly empty) F-runs.
    """
    if k < 1:
        raise DomainError(f"arity must be >= 1, got {k}")
    runs = [(s, len(list(g))) for s, g in groupby(path)]
    t: list[int] = []
    i = 0
    for group in range(k):
        if i < len(runs) and runs[i][0] == "F":
            t.append(runs[i][1])
            i += 1
        else:
            t.append(0)
        if group == k - 1:
            break
        for step in "UD":
            if i >= len(runs) or runs[i][0] != step:
                raise DomainError(
                    f"path {path!r} does not have the run structure of arity {k}"
                )
            t.append(runs[i][1])
            i += 1
    if i != len(runs):
        raise DomainError(f"path {path!r} has more than {k - 1} peaks")
    return RunEncoding(tuple(t), k)


def decode_runs(enc: RunEncoding) -> str:
    t, k = enc
    if len(t) != 3 * (k - 1) + 1:
        raise DomainError(f"expected {3 * (k - 1) + 1} run lengths, got {len(t)}")
    for i, v in enumerate(t):
        if v < 0 or (i % 3 != 0 and v < 1):
            raise DomainError(f"invalid run length T_{i} = {v}")
    return "".join(STEPS[i % 3] * v for i, v in enumerate(t))
