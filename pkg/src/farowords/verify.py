"""Cross-checks that tie closed forms to brute force and to each other."""

from __future__ import annotations

import math

from .genfuncs import expand_named, family
from .oracle import enumeration_oracle
from .report import Report
from .series import MultiSeries


def series_vs_oracle(name: str, n_max: int, k_max: int | None = None) -> Report:
    """Compare every coefficient of a named closed form with the oracle.

    Words: all n <= n_max, 1 <= k <= k_max and every t.  Permutations: all
    n <= n_max and every occurrence count.  Coefficients at k = 0 must vanish.
    """
    fam = family(name)
    report = Report(f"series-vs-oracle {name} n<={n_max}" + (f" k<={k_max}" if k_max else ""))
    if fam.kind == "word-distribution":
        # t never exceeds n - 1
        s = expand_named(name, (n_max, k_max, max(n_max, 1))).series
        for n in range(n_max + 1):
            for k in range(k_max + 1):
                for t in range(max(n_max, 1) + 1):
                    _compare(report, s, (n, k, t), enumeration_oracle("distribution", fam.pattern, n, k, t))
    elif fam.kind in ("word-popularity", "word-avoidance"):
        s = expand_named(name, (n_max, k_max)).series
        oracle_kind = "popularity" if fam.kind == "word-popularity" else "avoidance"
        for n in range(n_max + 1):
            for k in range(k_max + 1):
                _compare(report, s, (n, k, 0), enumeration_oracle(oracle_kind, fam.pattern, n, k))
    elif fam.kind == "perm-distribution":
        s = expand_named(name, (n_max, n_max)).series
        for n in range(n_max + 1):
            for t in range(n_max + 1):
                _compare(report, s, (n, t, 0), enumeration_oracle("perm-distribution", fam.pattern, n, t=t))
    else:
        s = expand_named(name, (n_max,)).series
        for n in range(n_max + 1):
            _compare(report, s, (n, 0, 0), enumeration_oracle("perm-popularity", fam.pattern, n))
    return report


def _compare(report: Report, s: MultiSeries, e: tuple[int, int, int], expected: int) -> None:
    got = s.coefficient(*e)
    report.checked += 1
    if got != expected:
        report.fail(f"coefficient {e}: series {got} != oracle {expected}")


def substitution_checks(pattern: str, n_max: int, k_max: int) -> Report:
    """F_p(x,y,0) = H_p, dF_p/dz at z=1 = G_p, F_p(x,y,1) = |S_{n,k}|."""
    report = Report(f"substitution F{pattern} n<={n_max} k<={k_max}")
    # t-cap of n_max + 1 keeps every z-polynomial whole after one derivative
    f = expand_named("F" + pattern, (n_max, k_max, n_max + 1)).series
    h = expand_named("H" + pattern, (n_max, k_max)).series
    g = expand_named("G" + pattern, (n_max, k_max)).series
    at_zero = f.substitute("z", 0)
    at_one = f.substitute("z", 1)
    pop = f.derivative("z").substitute("z", 1)
    for n in range(n_max + 1):
        for k in range(k_max + 1):
            total = (
                math.comb(n // 2 + k - 1, k - 1) * math.comb((n + 1) // 2 + k - 1, k - 1)
                if k >= 1 else 0
            )
            for label, got, want in (
                ("H = F|z=0", at_zero.coefficient(n, k), h.coefficient(n, k)),
                ("G = dF/dz|z=1", pop.coefficient(n, k), g.coefficient(n, k)),
                ("F|z=1 = |S_nk|", at_one.coefficient(n, k), total),
            ):
                report.checked += 1
                if got != want:
                    report.fail(f"{label} at ({n},{k}): {got} != {want}")
    return report


def perm_popularity_consistency(pattern: str, n_max: int) -> Report:
    """L_p = dK_p/dy at y = 1."""
    report = Report(f"L{pattern} = dK{pattern}/dy|y=1 n<={n_max}")
    k = expand_named("K" + pattern, (n_max, n_max + 1)).series
    lp = expand_named("L" + pattern, (n_max,)).series
    pop = k.derivative("y").substitute("y", 1)
    for n in range(n_max + 1):
        report.checked += 1
        if pop.coefficient(n) != lp.coefficient(n):
            report.fail(f"n={n}: dK/dy|y=1 = {pop.coefficient(n)} != L = {lp.coefficient(n)}")
    return report
