"""How f and g carry word pattern statistics to path pattern statistics.

Each identity pairs a consecutive word pattern with a path statistic.  The
symbol ``n`` is the word length.  Identities written with ``n - c`` count
factor positions, so they are only meaningful once there are at least
``c + 1`` letters; ``min_length`` records that.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Iterator

from .bijections import faro_to_path, perm_to_path
from .errors import DomainError
from .patterns import StatisticExpr, evaluate_statistic, parse_statistic
from .report import Report
from .words import (
    Word,
    count_consecutive_pattern,
    enumerate_faro_permutations,
    enumerate_faro_words,
)


@dataclass(frozen=True)
class Identity:
    word_pattern: tuple[int, ...]
    path_statistic: StatisticExpr
    min_length: int = 0

    def __str__(self) -> str:
        p = "".join(map(str, self.word_pattern))
        return f"{p} -> {self.path_statistic}"


def _ids(rows: Iterable[tuple]) -> tuple[Identity, ...]:
    out = []
    for row in rows:
        pattern, stat = row[0], row[1]
        min_length = row[2] if len(row) > 2 else 0
        out.append(
            Identity(tuple(int(c) for c in pattern), parse_statistic(stat), min_length)
        )
    return tuple(out)


LENGTH2_F = _ids([
    ("11", "FF"),
    ("21", "UU"),
    ("21", "DD"),
    ("12", "DD(UD)^*UU + DD(UD)^*D + DD(UD)^*F + F(UD)^+F + F(UD)^*UU"),
    ("12", "n - 1 - UU - FF", 1),
])

LENGTH3_F = _ids([
    ("111", "FFF"),
    ("112", "FF(UD)^+F + FF(UD)^*UU"),
    ("122", "F(UD)^+FF + DD(UD)^*FF"),
    ("121", "FUU + UUU"),
    ("212", "DDF + DDD"),
    ("132", "F(UD)^+UU + U(UD)^+UU + DD(UD)^*UU"),
    ("213", "DD(UD)^+F + DD(UD)^+D + DD(UD)^*UU"),
    ("123", "DD(UD)^*F(UD)^*UU + DD(UD)^*F(UD)^+F + F(UD)^+F(UD)^*UU + F(UD)^+F(UD)^+F"),
    ("211", "0"),
    ("221", "0"),
    ("231", "0"),
    ("312", "0"),
    ("321", "0"),
])

PERM_G = _ids([
    ("21", "U"),
    ("12", "DU + DD + DF + FF + FU"),
    ("12", "n - 1 - U", 1),
    ("132", "FU + UU + DU"),
    ("213", "DF + DD + DU"),
    ("123", "DFU + DFF + FFU + FFF"),
    ("123", "n - 2 - FU - UU - 2 DU - DF - DD", 2),
    ("231", "0"),
    ("312", "0"),
    ("321", "0"),
])

TABLES = {
    "length2-f": LENGTH2_F,
    "length3-f": LENGTH3_F,
    "perm-g": PERM_G,
}


def random_faro_word(n: int, k: int, rng: random.Random) -> Word:
    """Uniform sample from S_{n,k}: two independent uniform multisets."""
    def multiset(m: int) -> list[int]:
        # stars and bars: choose m star positions among m + k - 1 slots
        bars = sorted(rng.sample(range(m + k - 1), k - 1))
        out, letter, prev = [], 1, -1
        for b in bars + [m + k - 1]:
            out += [letter] * (b - prev - 1)
            letter += 1
            prev = b
        return out

    w = [0] * n
    w[0::2] = multiset((n + 1) // 2)
    w[1::2] = multiset(n // 2)
    return tuple(w)


def random_faro_permutation(n: int, rng: random.Random) -> Word:
    odd = sorted(rng.sample(range(1, n + 1), (n + 1) // 2))
    even = sorted(set(range(1, n + 1)) - set(odd))
    w = [0] * n
    w[0::2] = odd
    w[1::2] = even
    return tuple(w)


def check_objects(
    objects: Iterable[Word],
    image,
    identities: Iterable[Identity],
    report: Report,
) -> Report:
    identities = tuple(identities)
    for w in objects:
        path = image(w)
        for ident in identities:
            if len(w) < ident.min_length:
                continue
            lhs = count_consecutive_pattern(w, ident.word_pattern)
            rhs = evaluate_statistic(path, ident.path_statistic, len(w))
            report.checked += 1
            if lhs != rhs:
                word = "".join(map(str, w)) if all(x < 10 for x in w) else str(w)
                report.fail(f"{word} [{path}]: {ident} gives {lhs} != {rhs}")
    return report


def _objects(which: str, n: int, k: int | None, sample: int | None, seed: int) -> Iterator[Word]:
    if which == "perm-g":
        if sample is None:
            return enumerate_faro_permutations(n)
        rng = random.Random(seed)
        return (random_faro_permutation(n, rng) for _ in range(sample))
    if k is None:
        raise DomainError(f"{which} needs an arity")
    if sample is None:
        return enumerate_faro_words(n, k)
    rng = random.Random(seed)
    return (random_faro_word(n, k, rng) for _ in range(sample))


def statistic_transport_check(
    n: int,
    k: int | None,
    which: str,
    sample: int | None = None,
    seed: int = 0,
) -> Report:
    """Check every identity of one transport table on every object of one class.

    ``which`` is ``length2-f`` or ``length3-f`` (faro words of length n, arity
    k, mapped by f) or ``perm-g`` (faro permutations of length n, mapped by
    g).  With ``sample`` set, a seeded uniform sample replaces the exhaustive
    sweep.
    """
    if which not in TABLES:
        raise DomainError(f"unknown identity table {which!r}; choose from {sorted(TABLES)}")
    name = f"{which} n={n}" + (f" k={k}" if which != "perm-g" else "")
    if sample is not None:
        name += f" sample={sample} seed={seed}"
    report = Report(name)
    if which == "perm-g":
        image = perm_to_path
    else:
        image = lambda w: faro_to_path(w, k)  # noqa: E731
    return check_objects(_objects(which, n, k, sample, seed), image, TABLES[which], report)
