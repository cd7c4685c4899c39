"""Brute-force counts by exhaustive generation.

Nothing here touches the series code: every number comes from enumerating
faro words or faro permutations and scanning them for pattern occurrences.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache

from .errors import CapExceeded, DomainError
from .words import (
    count_consecutive_pattern,
    enumerate_faro_permutations,
    enumerate_faro_words,
)

# |S_{12,6}| = 213444 and |P_16| = 12870 keep any single call under a few seconds
MAX_WORD_LENGTH = 12
MAX_ARITY = 6
MAX_PERM_LENGTH = 16


def _pattern(p) -> tuple[int, ...]:
    if isinstance(p, str):
        if not p.isdigit() or not p:
            raise DomainError(f"bad pattern {p!r}")
        return tuple(int(c) for c in p)
    return tuple(p)


def _check_word_caps(n: int, k: int) -> None:
    if n > MAX_WORD_LENGTH or k > MAX_ARITY:
        raise CapExceeded(
            f"oracle refuses S_{{{n},{k}}}: caps are n <= {MAX_WORD_LENGTH}, k <= {MAX_ARITY}"
        )


def _check_perm_cap(n: int) -> None:
    if n > MAX_PERM_LENGTH:
        raise CapExceeded(f"oracle refuses P_{n}: cap is n <= {MAX_PERM_LENGTH}")


@lru_cache(maxsize=None)
def word_histogram(p: tuple[int, ...], n: int, k: int) -> dict[int, int]:
    """t -> number of words in S_{n,k} with exactly t occurrences of p."""
    _check_word_caps(n, k)
    return dict(Counter(count_consecutive_pattern(w, p) for w in enumerate_faro_words(n, k)))


@lru_cache(maxsize=None)
def perm_histogram(p: tuple[int, ...], n: int) -> dict[int, int]:
    _check_perm_cap(n)
    return dict(Counter(count_consecutive_pattern(w, p) for w in enumerate_faro_permutations(n)))


def enumeration_oracle(kind: str, pattern, n: int, k: int | None = None, t: int | None = None) -> int:
    """Exact count by exhaustive generation.

    kind:
      ``distribution``       words of S_{n,k} with exactly t occurrences;
      ``popularity``         total occurrences over S_{n,k};
      ``avoidance``          words of S_{n,k} with none;
      ``perm-distribution``  faro permutations of length n with exactly t;
      ``perm-popularity``    total occurrences over faro permutations of length n.
    """
    p = _pattern(pattern)
    if kind in ("distribution", "popularity", "avoidance"):
        if k is None:
            raise DomainError(f"{kind} needs an arity k")
        if k < 1:
            return 0
        hist = word_histogram(p, n, k)
    elif kind in ("perm-distribution", "perm-popularity"):
        hist = perm_histogram(p, n)
    else:
        raise DomainError(f"unknown oracle kind {kind!r}")
    if kind in ("distribution", "perm-distribution"):
        if t is None:
            raise DomainError(f"{kind} needs an occurrence count t")
        return hist.get(t, 0)
    if kind == "avoidance":
        return hist.get(0, 0)
    return sum(t_ * c for t_, c in hist.items())
