"""The bijection f between faro words and dispersed Dyck paths, the derived
bijection g on faro permutations, and Foata's first fundamental transformation.

``faro_to_path(w, k)`` lays out ``F^T0 U^T1 D^T2 F^T3 ... F^T{3(k-1)}`` where,
for x in [1, k]:

* ``T[3(x-1)]``     = number of singletons x,
* ``T[3(x-1) - 1]`` = 1 + number of pairs whose first (larger) letter is x,
* ``T[3(x-1) + 1]`` = 1 + number of pairs whose second (smaller) letter is x.

The image is a dispersed Dyck path of length n + 2(k - 1) with k - 1 peaks.
"""

from __future__ import annotations

from collections import Counter
from typing import Sequence

from .errors import DomainError
from .paths import (
    RunEncoding,
    count_peaks,
    decode_runs,
    is_dispersed_dyck,
)
from .words import (
    Word,
    block_decomposition,
    is_faro_permutation,
    is_faro_word,
)


def run_lengths(w: Sequence[int], k: int) -> RunEncoding:
    """The T-sequence of f(w) for arity k."""
    if not is_faro_word(w, k):
        raise DomainError(f"{tuple(w)} is not a {k}-ary faro word")
    singles: Counter[int] = Counter()
    firsts: Counter[int] = Counter()
    seconds: Counter[int] = Counter()
    for b in block_decomposition(w):
        if b.is_pair:
            firsts[b.values[0]] += 1
            seconds[b.values[1]] += 1
        else:
            singles[b.values[0]] += 1
    t = [0] * (3 * (k - 1) + 1)
    for x in range(1, k + 1):
        t[3 * (x - 1)] = singles[x]
        if x >= 2:
            t[3 * (x - 1) - 1] = 1 + firsts[x]
        if x <= k - 1:
            t[3 * (x - 1) + 1] = 1 + seconds[x]
    return RunEncoding(tuple(t), k)


def faro_to_path(w: Sequence[int], k: int) -> str:
    """The bijection f; the arity matters (f(empty) is UD for k=2, UDUD for k=3)."""
    return decode_runs(run_lengths(w, k))


def path_to_faro(path: str, k: int) -> Word:
    """Inverse of f by a single left-to-right marking scan.

    D-steps that close a peak are marked up front.  Reading the path:

    * a D-step is skipped;
    * an F-step writes the singleton ``s``, where ``s - 1`` is the number of
      peaks already read;
    * a U-step in the i-th run of U-steps either starts a peak ``UD``, which is
      skipped, or writes the pair ``j i``, where j is the least integer whose
      (j-1)-th run of D-steps still holds an unmarked D-step; the first such
      D-step is then marked.
    """
    if k < 1:
        raise DomainError(f"arity must be >= 1, got {k}")
    if not is_dispersed_dyck(path):
        raise DomainError(f"{path!r} is not a dispersed Dyck path")
    if count_peaks(path) != k - 1:
        raise DomainError(
            f"{path!r} has {count_peaks(path)} peaks, arity {k} needs {k - 1}"
        )
    # index D-runs (1-based) and count their unmarked steps
    unmarked: list[int] = [0]  # unmarked[r] for D-run r; slot 0 unused
    u_run_of: dict[int, int] = {}
    u_runs = 0
    prev = ""
    for i, step in enumerate(path):
        if step == "D":
            if prev != "D":
                unmarked.append(0)
            if prev != "U":
                unmarked[-1] += 1
        elif step == "U" and prev != "U":
            u_runs += 1
        if step == "U":
            u_run_of[i] = u_runs
        prev = step

    out: list[int] = []
    peaks_read = 0
    i = 0
    while i < len(path):
        step = path[i]
        if step == "D":
            i += 1
        elif step == "F":
            out.append(peaks_read + 1)
            i += 1
        elif i + 1 < len(path) and path[i + 1] == "D":
            peaks_read += 1
            i += 2
        else:
            lower = u_run_of[i]
            j = next(r + 1 for r in range(1, len(unmarked)) if unmarked[r] > 0)
            unmarked[j - 1] -= 1
            out.extend((j, lower))
            i += 1
    word = tuple(out)
    if not is_faro_word(word, k):
        raise DomainError(f"{path!r} does not decode to a faro word")
    return word


# --- faro permutations -------------------------------------------------------------


def remove_peaks(path: str) -> str:
    """Delete every UD factor of ``path`` (they never overlap)."""
    out = []
    i = 0
    while i < len(path):
        if path.startswith("UD", i):
            i += 2
        else:
            out.append(path[i])
            i += 1
    return "".join(out)


def insert_peaks(path: str) -> str:
    """Insert one UD into each of the len(path) - 1 gaps between steps."""
    return "UD".join(path)


def perm_to_path(p: Sequence[int]) -> str:
    """The bijection g: f with arity n, then drop the peaks."""
    if not is_faro_permutation(p):
        raise DomainError(f"{tuple(p)} is not a faro permutation")
    if len(p) == 0:
        return ""
    return remove_peaks(faro_to_path(p, len(p)))


def path_to_perm(path: str) -> Word:
    """Inverse of g: put a peak in every gap, then invert f with arity n."""
    if not is_dispersed_dyck(path):
        raise DomainError(f"{path!r} is not a dispersed Dyck path")
    if not path:
        return ()
    return path_to_faro(insert_peaks(path), len(path))


# --- image characterizations --------------------------------------------------------


def image_is_surjective_word(path: str) -> bool:
    """Image test for surjective faro words: no UDUD, no UD at either end."""
    return "UDUD" not in path and not path.startswith("UD") and not path.endswith("UD")


INJECTIVE_FORBIDDEN = ("FF", "DDD", "UUU", "DDF", "FUU", "DDUU")


def image_is_injective_word(path: str) -> bool:
    return not any(p in path for p in INJECTIVE_FORBIDDEN)


def is_injective_word(w: Sequence[int]) -> bool:
    return len(set(w)) == len(w)


def is_surjective_word(w: Sequence[int], k: int) -> bool:
    return set(w) == set(range(1, k + 1))


# --- Foata's first fundamental transformation -----------------------------------------


def _check_permutation(w: Sequence[int]) -> None:
    if sorted(w) != list(range(1, len(w) + 1)):
        raise DomainError(f"{tuple(w)} is not a permutation of [1, {len(w)}]")


def standard_cycles(w: Sequence[int]) -> list[tuple[int, ...]]:
    """Cycles of ``w`` (one-line notation), each led by its maximum, sorted by leader."""
    _check_permutation(w)
    seen = set()
    cycles = []
    for start in range(1, len(w) + 1):
        if start in seen:
            continue
        cyc = [start]
        seen.add(start)
        x = w[start - 1]
        while x != start:
            cyc.append(x)
            seen.add(x)
            x = w[x - 1]
        top = cyc.index(max(cyc))
        cycles.append(tuple(cyc[top:] + cyc[:top]))
    cycles.sort(key=lambda c: c[0])
    return cycles


def foata(w: Sequence[int]) -> Word:
    """Write the standard cycle form and erase the parentheses."""
    return tuple(x for cyc in standard_cycles(w) for x in cyc)


def foata_inverse(w: Sequence[int]) -> Word:
    """Cut before each left-to-right maximum and read the pieces as cycles."""
    _check_permutation(w)
    out = [0] * len(w)
    cycles: list[list[int]] = []
    best = 0
    for x in w:
        if x > best:
            best = x
            cycles.append([x])
        else:
            cycles[-1].append(x)
    for cyc in cycles:
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            out[a - 1] = b
    return tuple(out)


def excedances(w: Sequence[int]) -> int:
    return sum(1 for i, x in enumerate(w, start=1) if x > i)


def descents(w: Sequence[int]) -> int:
    return sum(1 for a, b in zip(w, w[1:]) if a > b)


def is_involution(w: Sequence[int]) -> bool:
    return all(w[w[i] - 1] == i + 1 for i in range(len(w)))

