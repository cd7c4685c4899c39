"""Named verification suites, each a list of independent shardable tasks.

A task is ``(function name, args)`` so it pickles cleanly; results come back
in task order whatever the worker count.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from . import classes, oeis, verify
from .bijections import (
    faro_to_path,
    foata,
    foata_inverse,
    image_is_injective_word,
    image_is_surjective_word,
    is_injective_word,
    is_surjective_word,
    path_to_faro,
    path_to_perm,
    perm_to_path,
)
from .genfuncs import NAMES, PERM_PATTERNS, WORD_PATTERNS, diagonal, expand_named
from .paths import (
    count_peaks,
    dispersed_peak_count,
    enumerate_dispersed_with_peaks,
    enumerate_dyck,
    is_dispersed_dyck,
)
from .report import Report
from .transport import statistic_transport_check
from .words import enumerate_faro_permutations, enumerate_faro_words, faro_word_count


@dataclass(frozen=True)
class Limits:
    word_length: int = 8
    arity: int = 4
    perm_length: int = 10
    sample: int | None = None
    seed: int = 0


def bijection_f_check(n: int, k: int) -> Report:
    """f is a bijection S_{n,k} -> dispersed paths of length n + 2k - 2 with k - 1 peaks."""
    report = Report(f"bijection f n={n} k={k}")
    images = set()
    for w in enumerate_faro_words(n, k):
        report.checked += 1
        p = faro_to_path(w, k)
        if not is_dispersed_dyck(p) or count_peaks(p) != k - 1 or len(p) != n + 2 * k - 2:
            report.fail(f"{w}: f image {p} is not dispersed with {k - 1} peaks and length {n + 2 * k - 2}")
        if path_to_faro(p, k) != w:
            report.fail(f"{w}: f^-1(f(w)) = {path_to_faro(p, k)}")
        # the empty unary word is the one case the image test cannot see
        if (n, k) != (0, 1) and image_is_surjective_word(p) != is_surjective_word(w, k):
            report.fail(f"{w}: surjectivity not read off {p}")
        if image_is_injective_word(p) != is_injective_word(w):
            report.fail(f"{w}: injectivity not read off {p}")
        images.add(p)
    targets = set(enumerate_dispersed_with_peaks(n + 2 * k - 2, k - 1))
    if images != targets:
        report.fail(f"image has {len(images)} paths, target set has {len(targets)}")
    if len(images) != faro_word_count(n, k):
        report.fail("f is not injective")
    return report


def bijection_g_check(n: int) -> Report:
    """g is a bijection from faro permutations of length n to dispersed paths of length n."""
    report = Report(f"bijection g n={n}")
    images = set()
    for p in enumerate_faro_permutations(n):
        report.checked += 1
        path = perm_to_path(p)
        if not is_dispersed_dyck(path) or len(path) != n:
            report.fail(f"{p}: g image {path} is not a dispersed path of length {n}")
        if path_to_perm(path) != p:
            report.fail(f"{p}: g^-1(g(p)) = {path_to_perm(path)}")
        if foata_inverse(foata(p)) != p:
            report.fail(f"{p}: foata does not invert")
        images.add(path)
    return report


def series_check(name: str, limits: Limits) -> Report:
    n_max = limits.perm_length if name[0] in "KL" else limits.word_length
    return verify.series_vs_oracle(name, n_max, limits.arity if name[0] in "FGH" else None)


def _known_sequences() -> dict[str, tuple[list[int], int | None]]:
    """Locally computed terms for each fixture id, with the index of the first term."""
    h21 = diagonal(expand_named("H21", (11, 11)).series)
    g21 = expand_named("G21", (14, 2)).series
    g11 = expand_named("G11", (14, 2)).series
    l21 = expand_named("L21", (11,)).series
    return {
        "A000108": ([sum(1 for _ in enumerate_dyck(n)) for n in range(11)], 0),
        "A001405": ([sum(1 for _ in enumerate_faro_permutations(n)) for n in range(13)], 0),
        # term n of the diagonal is term n - 1 of the sequence
        "A001700": (h21[1:], 0),
        "A006918": ([int(g21.coefficient(n, 2)) for n in range(1, 15)], 0),
        "A047749": ([classes.ternary_count(n) for n in range(12)], 0),
        "A107373": ([int(l21.coefficient(n)) for n in range(1, 12)], 1),
        "A124428": ([sum(1 for _ in enumerate_dispersed_with_peaks(n, j))
                     for n in range(7) for j in range(n // 2 + 1)], 0),
        "A212964": ([int(g11.coefficient(n, 2)) for n in range(15)], 1),
    }


def oeis_check(seq_id: str) -> Report:
    terms, start = _known_sequences()[seq_id]
    return oeis.check_prefix(seq_id, terms, start)


def dispersed_peak_formula_check(n_max: int, k_max: int) -> Report:
    report = Report(f"dispersed paths with peaks n<={n_max} k<={k_max}")
    for n in range(n_max + 1):
        for k in range(k_max + 1):
            report.checked += 1
            got = sum(1 for _ in enumerate_dispersed_with_peaks(n, k))
            if got != dispersed_peak_count(n, k):
                report.fail(f"({n},{k}): {got} paths, formula {dispersed_peak_count(n, k)}")
    return report


TASKS = {
    "bijection_f_check": bijection_f_check,
    "bijection_g_check": bijection_g_check,
    "statistic_transport_check": statistic_transport_check,
    "series_check": series_check,
    "substitution_checks": verify.substitution_checks,
    "perm_popularity_consistency": verify.perm_popularity_consistency,
    "derangement_equivalence_check": classes.derangement_equivalence_check,
    "involution_equivalence_check": classes.involution_equivalence_check,
    "foata_check": classes.foata_check,
    "subexcedent_count_check": classes.subexcedent_count_check,
    "dumont_count_check": classes.dumont_count_check,
    "path_pair_check": classes.path_pair_check,
    "equidistribution_check": classes.equidistribution_check,
    "peak_height_check": classes.peak_height_check,
    "oeis_check": oeis_check,
    "dispersed_peak_formula_check": dispersed_peak_formula_check,
}


def suite_tasks(suite: str, limits: Limits) -> list[tuple[str, tuple]]:
    n, k, m = limits.word_length, limits.arity, limits.perm_length
    if suite == "bijections":
        return ([("bijection_f_check", (i, j)) for i in range(n + 1) for j in range(1, k + 1)]
                + [("bijection_g_check", (i,)) for i in range(m + 1)]
                + [("dispersed_peak_formula_check", (12, 5))])
    if suite == "transport":
        tasks = []
        for which in ("length2-f", "length3-f"):
            tasks += [("statistic_transport_check", (i, j, which, limits.sample, limits.seed))
                      for i in range(n + 1) for j in range(1, k + 1)]
        tasks += [("statistic_transport_check", (i, None, "perm-g", limits.sample, limits.seed))
                  for i in range(m + 1)]
        return tasks
    if suite == "series-vs-oracle":
        return ([("series_check", (name, limits)) for name in NAMES]
                + [("substitution_checks", (p, n, k)) for p in WORD_PATTERNS]
                + [("perm_popularity_consistency", (p, m)) for p in PERM_PATTERNS])
    if suite == "classes":
        return ([("derangement_equivalence_check", (i,)) for i in range(8)]
                + [("involution_equivalence_check", (i,)) for i in range(13)]
                + [("foata_check", (i,)) for i in range(10)]
                + [("subexcedent_count_check", (i,)) for i in range(9)]
                + [("dumont_count_check", (i,)) for i in range(1, 6)]
                + [("path_pair_check", (i,)) for i in range(1, 11)])
    if suite == "equidistribution":
        return ([("equidistribution_check", (i,)) for i in range(1, 11)]
                + [("peak_height_check", (i,)) for i in range(13)])
    if suite == "oeis":
        return [("oeis_check", (seq_id,)) for seq_id in sorted(oeis.fixtures())]
    raise KeyError(suite)


SUITES = ("bijections", "transport", "series-vs-oracle", "classes", "equidistribution", "oeis")


def _run_task(task: tuple[str, tuple]) -> Report:
    name, args = task
    return TASKS[name](*args)


def run_suite(suite: str, limits: Limits = Limits(), workers: int = 1) -> list[Report]:
    tasks = suite_tasks(suite, limits)
    if workers <= 1:
        return [_run_task(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_run_task, tasks))
