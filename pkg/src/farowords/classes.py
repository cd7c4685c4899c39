"""Subclasses of faro permutations and faro words.

Subexcedent faro words use the 0-based alphabet ``{0, ..., n-1}``
(``w[i] <= i - 1`` with 1-based positions); everything else here is 1-based.
The two never mix: ``subexcedent_stats`` and friends take 0-based words, and
``shift_to_one_based`` is the only crossing point.
"""

from __future__ import annotations

import math
from collections import Counter
from itertools import permutations
from typing import Iterator, NamedTuple, Sequence

from .bijections import (
    descents,
    excedances,
    foata,
    is_involution,
    perm_to_path,
)
from .errors import CapExceeded, DomainError
from .paths import catalan
from .report import Report
from .words import (
    Word,
    avoids_classical,
    enumerate_faro_permutations,
)

MAX_DUMONT_HALF_LENGTH = 6


# --- alternating, derangements, involutions -------------------------------------


def is_alternating(p: Sequence[int]) -> bool:
    """``p1 > p2 < p3 > ...``"""
    return all(
        (a > b) if i % 2 == 0 else (a < b) for i, (a, b) in enumerate(zip(p, p[1:]))
    )


def is_derangement(p: Sequence[int]) -> bool:
    return all(x != i for i, x in enumerate(p, start=1))


def alternating_faro_permutations(n: int) -> list[Word]:
    return [p for p in enumerate_faro_permutations(n) if is_alternating(p)]


def alternating_count(n: int) -> int:
    return len(alternating_faro_permutations(n))


def derangement_equivalence_check(half_length: int) -> Report:
    """For length 2m: alternating = derangements, count = c_m, and g-images have no F."""
    n = 2 * half_length
    report = Report(f"alternating/derangement length {n}")
    perms = list(enumerate_faro_permutations(n))
    alternating = {p for p in perms if is_alternating(p)}
    deranged = {p for p in perms if is_derangement(p)}
    report.checked += len(perms)
    if alternating != deranged:
        report.fail(f"alternating and derangement sets differ: {sorted(alternating ^ deranged)[:3]}")
    if len(alternating) != catalan(half_length):
        report.fail(f"{len(alternating)} alternating, expected c_{half_length} = {catalan(half_length)}")
    for p in perms:
        has_level = "F" in perm_to_path(p)
        if (p in alternating) == has_level:
            report.fail(f"{p}: alternating={p in alternating} but g-image has F={has_level}")
    return report


def fibonacci(n: int) -> int:
    """f_n with f_0 = f_1 = 1, f_2 = 2."""
    a, b = 1, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def fibonacci_class(n: int, pattern: str) -> list[Word]:
    """Faro permutations of length n avoiding the classical pattern 231 or 312."""
    if pattern not in ("231", "312"):
        raise DomainError(f"pattern must be 231 or 312, got {pattern!r}")
    pat = tuple(int(c) for c in pattern)
    return [p for p in enumerate_faro_permutations(n) if avoids_classical(p, pat)]


def fibonacci_class_count(n: int, pattern: str) -> int:
    return len(fibonacci_class(n, pattern))


def involution_equivalence_check(n: int) -> Report:
    report = Report(f"231-avoiders = involutions length {n}")
    perms = list(enumerate_faro_permutations(n))
    avoiders = set(fibonacci_class(n, "231"))
    involutions = {p for p in perms if is_involution(p)}
    report.checked += len(perms)
    if avoiders != involutions:
        report.fail(f"sets differ: {sorted(avoiders ^ involutions)[:3]}")
    for pattern in ("231", "312"):
        c = fibonacci_class_count(n, pattern)
        if c != fibonacci(n):
            report.fail(f"{pattern}-avoiders: {c} != f_{n} = {fibonacci(n)}")
    return report


def involutions_avoiding_321(n: int) -> Iterator[Word]:
    for p in permutations(range(1, n + 1)):
        if is_involution(p) and avoids_classical(p, (3, 2, 1)):
            yield p


def foata_check(n: int) -> Report:
    """Foata sends 321-avoiding involutions onto faro permutations, excedances to descents."""
    report = Report(f"foata I_n(321) -> P_n, n={n}")
    invs = list(involutions_avoiding_321(n))
    images = [foata(v) for v in invs]
    report.checked += len(invs)
    if set(images) != set(enumerate_faro_permutations(n)) or len(set(images)) != len(invs):
        report.fail(f"image of I_{n}(321) is not P_{n}")
    for v, w in zip(invs, images):
        if excedances(v) != descents(w):
            report.fail(f"{v}: {excedances(v)} excedances but foata image has {descents(w)} descents")
    return report


# --- subexcedent faro words ----------------------------------------------------


def is_subexcedent(w: Sequence[int]) -> bool:
    """0-based faro word with ``w[i] <= i - 1`` (1-based i)."""
    if any(x < 0 for x in w):
        raise DomainError(f"subexcedent words are 0-based, got {tuple(w)}")
    return all(x <= i for i, x in enumerate(w)) and all(
        w[i] <= w[i + 2] for i in range(len(w) - 2)
    )


def enumerate_subexcedent(n: int) -> Iterator[Word]:
    """Subexcedent faro words of length n in lexicographic order."""
    word = [0] * n

    def walk(i: int) -> Iterator[Word]:
        if i == n:
            yield tuple(word)
            return
        low = word[i - 2] if i >= 2 else 0
        for v in range(low, i + 1):
            word[i] = v
            yield from walk(i + 1)

    return walk(0)


def shift_to_one_based(w: Sequence[int]) -> Word:
    return tuple(x + 1 for x in w)


def ternary_count(n: int) -> int:
    """a_n with a_{2m} = C(3m, m)/(2m + 1), a_{2m+1} = C(3m + 1, m)/(m + 1)."""
    m, odd = divmod(n, 2)
    if odd:
        return math.comb(3 * m + 1, m) // (m + 1)
    return math.comb(3 * m, m) // (2 * m + 1)


def subexcedent_count(n: int) -> int:
    return ternary_count(n) * ternary_count(n + 1)


def subexcedent_count_check(n: int) -> Report:
    report = Report(f"subexcedent faro words n={n}")
    words = list(enumerate_subexcedent(n))
    report.checked += len(words)
    if len(words) != subexcedent_count(n):
        report.fail(f"{len(words)} words, expected a_n a_(n+1) = {subexcedent_count(n)}")
    if not all(is_subexcedent(w) for w in words) or len(set(words)) != len(words):
        report.fail("enumeration produced an invalid or repeated word")
    return report


# --- north-east paths and 2-Dyck paths ----------------------------------------------


def _ne_path(letters: Sequence[int], end: int) -> str:
    """N^{a1} E N^{a2-a1} E ... E N^{a_{k+1}-a_k} with a_{k+1} = end."""
    parts = []
    prev = 0
    for a in list(letters) + [end]:
        parts.append("N" * (a - prev))
        prev = a
    return "E".join(parts)


def subexcedent_to_path_pair(w: Sequence[int]) -> tuple[str, str]:
    """(P_o, P_e): the north-east paths of the odd- and even-position letters."""
    if not is_subexcedent(w):
        raise DomainError(f"{tuple(w)} is not a subexcedent faro word")
    odd, even = tuple(w[0::2]), tuple(w[1::2])
    return _ne_path(odd, 2 * len(odd)), _ne_path(even, 2 * len(even) + 1)


def nepath_to_2dyck(p: str) -> str:
    """Reverse, then N -> u and E -> d."""
    return "".join("u" if s == "N" else "d" for s in reversed(p))


def twodyck_heights(p: str) -> list[int]:
    h = [0]
    for s in p:
        h.append(h[-1] + (1 if s == "u" else -2))
    return h


def is_twodyck(p: str) -> bool:
    h = twodyck_heights(p)
    return set(p) <= {"u", "d"} and min(h) >= 0 and h[-1] in (0, 1)


class TwoDyckStats(NamedTuple):
    pk0: int
    pk1: int
    dd: int


def twodyck_stats(p: str) -> TwoDyckStats:
    """Peaks at even apex height, at odd apex height, and double descents."""
    h = twodyck_heights(p)
    pk0 = pk1 = dd = 0
    for i in range(len(p) - 1):
        if p[i] == "u" and p[i + 1] == "d":
            if h[i + 1] % 2 == 0:
                pk0 += 1
            else:
                pk1 += 1
        elif p[i] == "d" and p[i + 1] == "d":
            dd += 1
    return TwoDyckStats(pk0, pk1, dd)


def enumerate_twodyck(length: int, end: int) -> Iterator[str]:
    """2-Dyck paths with ``length`` steps ending at height ``end``."""
    steps: list[str] = []

    def go(h: int) -> Iterator[str]:
        left = length - len(steps)
        if left == 0:
            if h == end:
                yield "".join(steps)
            return
        steps.append("u")
        yield from go(h + 1)
        steps.pop()
        if h >= 2:
            steps.append("d")
            yield from go(h - 2)
            steps.pop()

    return go(0)


# --- statistics on subexcedent words ------------------------------------------------


class SubexcedentStats(NamedTuple):
    eOdis: int
    oOdis: int
    aOrpt: int
    eEdis: int
    oEdis: int
    aErpt: int


def _repeats(seq: Sequence[int]) -> int:
    return sum(1 for a, b in zip(seq, seq[1:]) if a == b)


def subexcedent_stats(w: Sequence[int]) -> SubexcedentStats:
    """The six statistics on the odd- and even-position subsequences.

    eOdis ignores the letter 0, which every nonempty odd subsequence starts with.
    """
    if not is_subexcedent(w):
        raise DomainError(f"{tuple(w)} is not a subexcedent faro word")
    odd, even = set(w[0::2]), set(w[1::2])
    return SubexcedentStats(
        eOdis=sum(1 for a in odd if a > 0 and a % 2 == 0),
        oOdis=sum(1 for a in odd if a % 2 == 1),
        aOrpt=_repeats(w[0::2]),
        eEdis=sum(1 for a in even if a % 2 == 0),
        oEdis=sum(1 for a in even if a % 2 == 1),
        aErpt=_repeats(w[1::2]),
    )


def stats_histogram(n: int) -> Counter:
    return Counter(subexcedent_stats(w) for w in enumerate_subexcedent(n))


def closed_form_count(n: int, r: Sequence[int]) -> int:
    """Subexcedent words of length n with the given six statistics.

    With n_o = ceil(n/2) and n_e = floor(n/2):
    (1/n_o) C(n_o,r1) C(n_o,r2) C(n_o,r3) * (r4+r5)/(n_e(n_e+1)) C(n_e+1,r4) C(n_e+1,r5) C(n_e,r6).
    The even factor is 1 for the empty even subsequence (n = 1).
    """
    r1, r2, r3, r4, r5, r6 = r
    n_o, n_e = (n + 1) // 2, n // 2
    if n < 1:
        raise DomainError("closed form needs n >= 1")
    if min(r) < 0 or r1 + r2 + r3 != n_o - 1 or r4 + r5 + r6 != n_e:
        raise DomainError(f"need r1+r2+r3 = {n_o - 1} and r4+r5+r6 = {n_e}, got {tuple(r)}")
    odd_num = math.comb(n_o, r1) * math.comb(n_o, r2) * math.comb(n_o, r3)
    if n_e == 0:
        value, rem = divmod(odd_num, n_o)
    else:
        even_num = (r4 + r5) * math.comb(n_e + 1, r4) * math.comb(n_e + 1, r5) * math.comb(n_e, r6)
        value, rem = divmod(odd_num * even_num, n_o * n_e * (n_e + 1))
    if rem:
        raise ArithmeticError(f"closed form is not integral at n={n}, r={tuple(r)}")
    return value


def admissible_tuples(n: int) -> Iterator[tuple[int, ...]]:
    n_o, n_e = (n + 1) // 2, n // 2
    for r1 in range(n_o):
        for r2 in range(n_o - r1):
            r3 = n_o - 1 - r1 - r2
            for r4 in range(n_e + 1):
                for r5 in range(n_e + 1 - r4):
                    yield (r1, r2, r3, r4, r5, n_e - r4 - r5)


def equidistribution_check(n: int) -> Report:
    """Symmetries of the statistic histogram, and the closed form against it."""
    report = Report(f"equidistribution n={n}")
    hist = stats_histogram(n)
    tri = Counter()
    bi = Counter()
    for s, c in hist.items():
        tri[s[:3]] += c
        bi[s[3:5]] += c
    for perm in permutations(range(3)):
        image = Counter({tuple(key[i] for i in perm): c for key, c in tri.items()})
        report.checked += 1
        if image != tri:
            report.fail(f"(eOdis, oOdis, aOrpt) not invariant under {perm}")
    report.checked += 1
    if Counter({(b, a): c for (a, b), c in bi.items()}) != bi:
        report.fail("(eEdis, oEdis) not symmetric")
    for r in admissible_tuples(n):
        report.checked += 1
        want = hist.get(SubexcedentStats(*r), 0)
        got = closed_form_count(n, r)
        if got != want:
            report.fail(f"r={r}: closed form {got} != tabulated {want}")
    for s in hist:
        if s not in set(admissible_tuples(n)):
            report.fail(f"observed statistics {tuple(s)} outside the admissible simplex")
    return report


def path_pair_check(n: int) -> Report:
    """Encoding injectivity, 2-Dyck endpoints, and the statistic transport."""
    report = Report(f"path pairs n={n}")
    seen: dict[tuple[str, str], Word] = {}
    for w in enumerate_subexcedent(n):
        report.checked += 1
        po, pe = subexcedent_to_path_pair(w)
        if (po, pe) in seen:
            report.fail(f"{w} and {seen[(po, pe)]} share the path pair")
        seen[(po, pe)] = w
        do, de = nepath_to_2dyck(po), nepath_to_2dyck(pe)
        if not (is_twodyck(do) and twodyck_heights(do)[-1] == 0):
            report.fail(f"{w}: phi(P_o) = {do} is not a 2-Dyck path ending at 0")
        if not (is_twodyck(de) and twodyck_heights(de)[-1] == 1):
            report.fail(f"{w}: phi(P_e) = {de} is not a 2-Dyck path ending at 1")
        st = subexcedent_stats(w)
        so, se = twodyck_stats(do), twodyck_stats(de)
        # P_o ends at an even height 2k, P_e at the odd height 2k + 1
        if (st.eOdis, st.oOdis, st.aOrpt) != (so.pk0 - 1, so.pk1, so.dd):
            report.fail(f"{w}: odd stats {st[:3]} vs (pk0-1, pk1, dd) {(so.pk0 - 1, so.pk1, so.dd)}")
        if (st.eEdis, st.oEdis) != (se.pk1, se.pk0):
            report.fail(f"{w}: even stats {st[3:5]} vs (pk1, pk0) {(se.pk1, se.pk0)}")
    return report


def peak_height_check(length: int) -> Report:
    """Symmetries of (pk0 - 1, pk1, dd) at end 0 and (pk0, pk1) at end 1 over all 2-Dyck paths.

    The empty path is left out: it has pk0 - 1 = -1 and is never a phi-image.
    """
    report = Report(f"2-Dyck peak heights, {length} steps")
    tri = Counter()
    for p in enumerate_twodyck(length, 0) if length else ():
        s = twodyck_stats(p)
        tri[(s.pk0 - 1, s.pk1, s.dd)] += 1
    bi = Counter()
    for p in enumerate_twodyck(length, 1):
        s = twodyck_stats(p)
        bi[(s.pk0, s.pk1)] += 1
    for perm in permutations(range(3)):
        report.checked += 1
        if Counter({tuple(k[i] for i in perm): c for k, c in tri.items()}) != tri:
            report.fail(f"end-0 tristatistic not invariant under {perm}")
    report.checked += 1
    if Counter({(b, a): c for (a, b), c in bi.items()}) != bi:
        report.fail("end-1 bistatistic not symmetric")
    return report


# --- Dumont permutations of the second kind -----------------------------------------


def is_dumont2(p: Sequence[int]) -> bool:
    """Odd positions hold weak excedances, even positions deficiencies."""
    return len(p) % 2 == 0 and all(
        (x >= i) if i % 2 == 1 else (x <= i - 1) for i, x in enumerate(p, start=1)
    )


def _creates_2143(p: list[int]) -> bool:
    """Does the last entry complete a 2143 occurrence (as the '3')?"""
    last = p[-1]
    m = len(p) - 1
    # need i1 < i2 < i3 < m with p[i2] < p[i1] < last < p[i3]
    for i3 in range(m):
        c = p[i3]
        if c <= last:
            continue
        for i1 in range(i3):
            b = p[i1]
            if not b < last:
                continue
            for i2 in range(i1 + 1, i3):
                if p[i2] < b:
                    return True
    return False


def enumerate_dumont_2143_avoiding(half_length: int) -> Iterator[Word]:
    """2143-avoiding Dumont permutations of the second kind of length 2n.

    Backtracking places position 2i-1 from the unused values >= 2i-1 and
    position 2i from the unused values <= 2i-1, rejecting any prefix that
    already contains 2143.
    """
    if half_length > MAX_DUMONT_HALF_LENGTH:
        raise CapExceeded(
            f"Dumont enumeration capped at 2n <= {2 * MAX_DUMONT_HALF_LENGTH}, got {2 * half_length}"
        )
    size = 2 * half_length
    used = [False] * (size + 1)
    prefix: list[int] = []

    def go(pos: int) -> Iterator[Word]:
        if pos > size:
            yield tuple(prefix)
            return
        values = range(pos, size + 1) if pos % 2 == 1 else range(1, pos)
        for v in values:
            if used[v]:
                continue
            prefix.append(v)
            if not _creates_2143(prefix):
                used[v] = True
                yield from go(pos + 1)
                used[v] = False
            prefix.pop()

    return go(1)


def dumont_count_check(half_length: int) -> Report:
    n = half_length
    report = Report(f"2143-avoiding Dumont length {2 * n}")
    perms = list(enumerate_dumont_2143_avoiding(n))
    report.checked += len(perms)
    if len(perms) != subexcedent_count(n):
        report.fail(f"{len(perms)} permutations, expected a_n a_(n+1) = {subexcedent_count(n)}")
    if len(perms) != sum(1 for _ in enumerate_subexcedent(n)):
        report.fail("count differs from the number of subexcedent faro words")
    for p in perms:
        if not is_dumont2(p) or not avoids_classical(p, (2, 1, 4, 3)):
            report.fail(f"{p} is not a 2143-avoiding Dumont permutation")
            continue
        even, odd = p[1::2], p[0::2]
        if set(even) != set(range(1, n + 1)) or set(odd) != set(range(n + 1, 2 * n + 1)):
            report.fail(f"{p}: even/odd value sets are not [1,n] / [n+1,2n]")
        if not avoids_classical(even, (2, 1, 3)) or not avoids_classical(odd, (1, 3, 2)):
            report.fail(f"{p}: even part contains 213 or odd part contains 132")
    return report
