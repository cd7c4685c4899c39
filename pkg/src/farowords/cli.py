"""Command-line interface.

Exit status: 0 on success, 1 when a verification fails, 2 on bad usage or a
refused request (size caps, malformed input).
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from typing import Iterable, Sequence

from . import classes, oeis
from .bijections import (
    faro_to_path,
    foata,
    foata_inverse,
    path_to_faro,
    path_to_perm,
    perm_to_path,
)
from .errors import CapExceeded, DomainError, PatternSyntaxError, SeriesError
from .genfuncs import NAMES, coefficient_table, expand_named, family
from .oracle import word_histogram, perm_histogram, _check_perm_cap, _check_word_caps
from .paths import count_peaks, enumerate_dispersed, enumerate_dispersed_with_peaks, enumerate_dyck, parse_path
from .patterns import count_pattern, evaluate_statistic, parse_statistic
from .suites import SUITES, Limits, run_suite
from .words import (
    count_classical_pattern,
    count_consecutive_pattern,
    enumerate_faro_permutations,
    enumerate_faro_words,
    format_word,
    parse_word,
    reverse_complement,
)

MAX_LISTING = 1_000_000

CSV_HEADERS = {
    "word-distribution": ("n", "k", "t", "value"),
    "word-popularity": ("n", "k", "value"),
    "word-avoidance": ("n", "k", "value"),
    "perm-distribution": ("n", "t", "value"),
    "perm-popularity": ("n", "value"),
}


class UsageError(Exception):
    pass


def _parse_perm(text: str) -> tuple[int, ...]:
    text = text.strip()
    if text in ("", "-", "ε", "e"):
        return ()
    try:
        if "," in text:
            return tuple(int(t) for t in text.split(","))
        return tuple(int(c) for c in text)
    except ValueError:
        raise DomainError(f"malformed permutation {text!r}") from None


def _emit_rows(rows: Iterable[Sequence], header: Sequence[str], fmt: str, out) -> None:
    rows = list(rows)
    if fmt == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
    elif fmt == "json":
        json.dump([dict(zip(header, r)) for r in rows], out)
        out.write("\n")
    else:
        for r in rows:
            out.write(" ".join(str(v) for v in r) + "\n")


def _emit_items(items: Iterable[str], fmt: str, out, key: str = "item") -> None:
    if fmt == "json":
        json.dump(list(items), out)
        out.write("\n")
    else:
        if fmt == "csv":
            out.write(key + "\n")
        for it in items:
            out.write(it + "\n")


# --- enumerate ---------------------------------------------------------------------


def cmd_enumerate(args, out) -> int:
    n = args.n
    if args.what == "words":
        if args.k is None:
            raise UsageError("--words needs -k")
        from .words import faro_word_count
        if faro_word_count(n, args.k) > MAX_LISTING:
            raise CapExceeded(f"S_{{{n},{args.k}}} has more than {MAX_LISTING} words")
        items = (format_word(w, args.k) for w in enumerate_faro_words(n, args.k))
    elif args.what == "perms":
        if n > 20:
            raise CapExceeded("faro permutation listing capped at n <= 20")
        items = (format_word(p, n) for p in enumerate_faro_permutations(n))
    elif args.what == "dispersed":
        if n > 24:
            raise CapExceeded("dispersed path listing capped at length 24")
        gen = enumerate_dispersed(n) if args.k is None else enumerate_dispersed_with_peaks(n, args.k)
        items = (p or "-" for p in gen)
    else:
        if n > 12:
            raise CapExceeded("Dyck path listing capped at semilength 12")
        items = (p or "-" for p in enumerate_dyck(n))
    _emit_items(items, args.format, out, args.what[:-1] if args.what.endswith("s") else args.what)
    return 0


# --- map ---------------------------------------------------------------------------------


def cmd_map(args, out) -> int:
    d, text, k = args.direction, args.input, args.arity
    if d in ("f", "f-inv", "chi") and k is None:
        raise UsageError(f"map {d} needs --arity")
    if d == "f":
        result = faro_to_path(parse_word(text, k), k) or "-"
    elif d == "f-inv":
        path = parse_path(text)
        if count_peaks(path) != k - 1:
            raise DomainError(f"{text!r} has {count_peaks(path)} peaks; arity {k} needs {k - 1}")
        result = format_word(path_to_faro(path, k), k) or "-"
    elif d == "g":
        p = _parse_perm(text)
        result = perm_to_path(p) or "-"
    elif d == "g-inv":
        p = path_to_perm(parse_path(text))
        result = format_word(p, len(p)) or "-"
    elif d == "foata":
        p = foata(_parse_perm(text))
        result = format_word(p, len(p)) or "-"
    elif d == "foata-inv":
        p = foata_inverse(_parse_perm(text))
        result = format_word(p, len(p)) or "-"
    else:
        result = format_word(reverse_complement(parse_word(text, k), k), k) or "-"
    if args.format == "json":
        json.dump({"direction": d, "input": text, "arity": k, "output": result}, out)
        out.write("\n")
    else:
        out.write(result + "\n")
    return 0


# --- count -------------------------------------------------------------------------------


def cmd_count(args, out) -> int:
    if args.path is not None:
        path = parse_path(args.path)
        if args.statistic:
            n_value = args.n if args.n is not None else len(path)
            value = evaluate_statistic(path, parse_statistic(args.pattern), n_value)
        else:
            value = count_pattern(path, args.pattern)
        return _emit_scalar(args, out, value)
    pattern = _digits(args.pattern)
    if args.word is not None:
        if args.arity is None:
            raise UsageError("--word needs --arity")
        w = parse_word(args.word, args.arity)
        from .words import FaroWord
        FaroWord(w, args.arity)
        fn = count_classical_pattern if args.classical else count_consecutive_pattern
        return _emit_scalar(args, out, fn(w, pattern))
    if args.n is None:
        raise UsageError("count needs one of --path, --word, or -n")
    if args.classical:
        raise UsageError("--classical applies to a single --word only")
    if args.perms:
        _check_perm_cap(args.n)
        hist = perm_histogram(pattern, args.n)
    else:
        if args.k is None:
            raise UsageError("counting over S_{n,k} needs -k (or --perms)")
        _check_word_caps(args.n, args.k)
        hist = word_histogram(pattern, args.n, args.k) if args.k >= 1 else {}
    if args.kind == "distribution":
        _emit_rows(sorted(hist.items()), ("t", "count"), args.format, out)
        return 0
    if args.kind == "avoidance":
        value = hist.get(0, 0)
    else:
        value = sum(t * c for t, c in hist.items())
    return _emit_scalar(args, out, value)


def _digits(text: str) -> tuple[int, ...]:
    if not text.isdigit():
        raise DomainError(f"word pattern must be digits, got {text!r}")
    return tuple(int(c) for c in text)


def _emit_scalar(args, out, value: int) -> int:
    if args.format == "json":
        json.dump({"value": value}, out)
        out.write("\n")
    elif args.format == "csv":
        out.write(f"value\n{value}\n")
    else:
        out.write(f"{value}\n")
    return 0


# --- series ------------------------------------------------------------------------------


def _caps(args) -> tuple[int, ...]:
    if args.caps:
        try:
            caps = tuple(int(c) for c in args.caps.split(","))
        except ValueError:
            raise UsageError(f"--caps wants comma-separated integers, got {args.caps!r}") from None
    else:
        caps = (args.cap,) * 3
    if any(c < 0 for c in caps) or len(caps) > 3:
        raise UsageError("caps must be at most three nonnegative integers")
    if max(caps, default=0) > 64:
        raise CapExceeded("series caps are limited to 64 per variable")
    return caps


def cmd_series(args, out) -> int:
    fam = family(args.name)
    exp = expand_named(args.name, _caps(args))
    rows = coefficient_table(exp.series, args.name)
    if args.format == "json":
        json.dump({
            "name": args.name,
            "variables": list(fam.variables),
            "caps": list(exp.series.caps[: len(fam.variables)]),
            "signs": exp.signs,
            "coefficients": [list(r) for r in rows],
        }, out)
        out.write("\n")
    elif args.format == "csv":
        _emit_rows(rows, CSV_HEADERS[fam.kind], "csv", out)
    elif len(fam.variables) == 1:
        # terms for n = 1..cap, the range tables of popularities use
        cap = exp.series.caps[0]
        out.write(", ".join(str(int(exp.series.coefficient(n))) for n in range(1, cap + 1)) + "\n")
    else:
        _emit_rows(rows, CSV_HEADERS[fam.kind], "plain", out)
    return 0


# --- classes -------------------------------------------------------------------------------


def cmd_classes(args, out) -> int:
    n, which = args.n, args.which
    if which == "subexcedent-stats":
        if n > 14:
            raise CapExceeded("subexcedent tabulation capped at n <= 14")
        hist = classes.stats_histogram(n)
        header = classes.SubexcedentStats._fields + ("count",)
        _emit_rows(sorted(tuple(s) + (c,) for s, c in hist.items()), header, args.format, out)
        return 0
    if which == "alternating":
        _check_perm_cap(n)
        members = classes.alternating_faro_permutations(n)
    elif which in ("avoid231", "avoid312"):
        _check_perm_cap(n)
        members = classes.fibonacci_class(n, which[-3:])
    elif which == "involutions":
        _check_perm_cap(n)
        from .bijections import is_involution
        members = [p for p in enumerate_faro_permutations(n) if is_involution(p)]
    elif which == "subexcedent":
        if n > 14:
            raise CapExceeded("subexcedent enumeration capped at n <= 14")
        members = list(classes.enumerate_subexcedent(n))
    else:
        members = list(classes.enumerate_dumont_2143_avoiding(n))
    if args.count:
        return _emit_scalar(args, out, len(members))
    _emit_items((format_word(p) or "-" for p in members), args.format, out, "member")
    return 0


# --- verify --------------------------------------------------------------------------------


def cmd_verify(args, out) -> int:
    suites = args.suites or list(SUITES)
    for s in suites:
        if s not in SUITES:
            raise UsageError(f"unknown suite {s!r}; choose from {', '.join(SUITES)}")
    limits = Limits(sample=args.sample, seed=args.seed)
    if args.sample is not None:
        print(f"sampling {args.sample} objects per size with seed {args.seed}", file=sys.stderr)
    ok = True
    results = {}
    for s in suites:
        reports = run_suite(s, limits, workers=args.workers)
        passed = all(r.ok for r in reports)
        ok &= passed
        results[s] = reports
        if args.format == "plain":
            for r in reports:
                if not r.ok or args.verbose:
                    out.write(r.summary() + "\n")
            checked = sum(r.checked for r in reports)
            out.write(f"{'PASS' if passed else 'FAIL'} {s}: {len(reports)} checks, {checked} cases\n")
    if args.format == "json":
        json.dump({s: [r.to_dict() for r in rs] for s, rs in results.items()}, out)
        out.write("\n")
    return 0 if ok else 1


# --- oeis ------------------------------------------------------------------------------------


def cmd_oeis(args, out) -> int:
    if args.list:
        for fx in oeis.fixtures().values():
            out.write(f"{fx.id} {fx.offset} {' '.join(map(str, fx.terms))}\n")
        return 0
    if args.id is None:
        raise UsageError("oeis needs an id or --list")
    if args.id in oeis.fixtures():
        fx = oeis.fixture(args.id)
    else:
        fx = oeis.remote_lookup(args.id, enabled=args.online)
    if args.terms is None:
        out.write(f"{fx.id} {fx.offset} {' '.join(map(str, fx.terms))}\n")
        return 0
    try:
        terms = [int(t) for t in args.terms.split(",")]
    except ValueError:
        raise UsageError(f"--terms wants comma-separated integers, got {args.terms!r}") from None
    report = oeis.check_prefix(fx.id, terms, args.start, known=fx)
    out.write(report.summary() + "\n")
    return 0 if report.ok else 1


# --- parser --------------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="farowords", description="Faro words, lattice paths and their statistics.")
    sub = parser.add_subparsers(dest="command", required=True)

    def fmt(p, choices=("plain", "json", "csv")):
        p.add_argument("--format", choices=choices, default="plain")

    p = sub.add_parser("enumerate", help="list the objects of one class")
    group = p.add_mutually_exclusive_group(required=True)
    for what in ("words", "perms", "dispersed", "dyck"):
        group.add_argument(f"--{what}", dest="what", action="store_const", const=what)
    p.add_argument("-n", type=int, required=True, help="length (semilength for --dyck)")
    p.add_argument("-k", type=int, help="arity for --words, peak count for --dispersed")
    fmt(p)
    p.set_defaults(run=cmd_enumerate)

    p = sub.add_parser("map", help="apply one of the bijections")
    p.add_argument("direction", choices=("f", "f-inv", "g", "g-inv", "foata", "foata-inv", "chi"))
    p.add_argument("input", help="a word (digits, or commas when letters exceed 9) or an F/U/D path; '-' is empty")
    p.add_argument("--arity", "-k", type=int)
    fmt(p, ("plain", "json"))
    p.set_defaults(run=cmd_map)

    p = sub.add_parser("count", help="count pattern occurrences")
    p.add_argument("pattern", help="word pattern like 12, a path pattern like F(UD)^+F, or a statistic")
    p.add_argument("--path", help="count a path pattern (or --statistic) on this path")
    p.add_argument("--statistic", action="store_true", help="treat the pattern as a linear statistic")
    p.add_argument("--word", help="count in this single word")
    p.add_argument("--arity", type=int)
    p.add_argument("--classical", action="store_true", help="count subsequence occurrences in --word")
    p.add_argument("-n", type=int)
    p.add_argument("-k", type=int)
    p.add_argument("--perms", action="store_true", help="range over faro permutations of length n")
    p.add_argument("--kind", choices=("distribution", "popularity", "avoidance"), default="distribution")
    fmt(p)
    p.set_defaults(run=cmd_count)

    p = sub.add_parser("series", help="expand a named generating function")
    p.add_argument("name", choices=NAMES)
    p.add_argument("--cap", type=int, default=8, help="degree cap for every variable")
    p.add_argument("--caps", help="per-variable caps, e.g. 10,4,10")
    fmt(p)
    p.set_defaults(run=cmd_series)

    p = sub.add_parser("classes", help="list or count special classes")
    p.add_argument("which", choices=("alternating", "avoid231", "avoid312", "involutions",
                                     "subexcedent", "dumont", "subexcedent-stats"))
    p.add_argument("-n", type=int, required=True, help="length (half-length for dumont)")
    p.add_argument("--count", action="store_true")
    fmt(p)
    p.set_defaults(run=cmd_classes)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("suites", nargs="*", help=f"any of {', '.join(SUITES)} (default: all)")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--sample", type=int, help="sample this many objects per size instead of sweeping")
    p.add_argument("--verbose", "-v", action="store_true")
    fmt(p, ("plain", "json"))
    p.set_defaults(run=cmd_verify)

    p = sub.add_parser("oeis", help="show or check known sequence prefixes")
    p.add_argument("id", nargs="?")
    p.add_argument("--terms", help="comma-separated terms to check")
    p.add_argument("--start", type=int, help="index of the first given term (default: the offset)")
    p.add_argument("--list", action="store_true")
    net = p.add_mutually_exclusive_group()
    net.add_argument("--online", action="store_true", help="allow fetching ids without a local fixture")
    net.add_argument("--offline", dest="online", action="store_false")
    p.set_defaults(run=cmd_oeis)
    return parser


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.run(args, out)
    except UsageError as exc:
        parser.error(str(exc))
    except (CapExceeded, DomainError, PatternSyntaxError, SeriesError,
            oeis.RemoteDisabled, ConnectionError) as exc:
        print(f"farowords: error: {exc}", file=sys.stderr)
        return 2
    return 0  # pragma: no cover


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
