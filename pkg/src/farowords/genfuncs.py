"""Closed-form generating functions for pattern statistics on faro words and
faro permutations, and their exact expansions.

Families, by name prefix:

* ``F<p>(x, y, z)``: faro words of length n (x), arity k (y), with exactly t
  occurrences of the consecutive pattern p (z);
* ``G<p>(x, y)``: total occurrences of p over S_{n,k};
* ``H<p>(x, y)``: words of S_{n,k} avoiding p;
* ``K<p>(x, y)``: faro permutations of length n (x) with exactly k
  occurrences of p (y);
* ``L<p>(x)``: total occurrences of p over faro permutations of length n.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .closedform import Expr, expand, sqrt, square_roots, variables
from .errors import DomainError, SeriesError
from .series import Caps, MultiSeries

x, y, z = variables()

A1 = sqrt(x**4 - 2*x**2*y - 2*x**2 + y**2 - 2*y + 1, name="A1")
A2 = sqrt(x**4*z**2 - 2*x**2*y*z - 2*x**2*z + y**2 - 2*y + 1, name="A2")
A3 = x**5 - 2*x**4 - x**3*y - 3*x**3 + 4*x**2*y + 4*x**2 - 2*x*y - 2*y**2 + 2*x + 4*y - 2
S = sqrt(1 - 4*x**2*y, name="S")
R = sqrt(1 - 4*x**2, name="R")

_G_DEN = (1 - y - 2*x + x**2 + A1)**2

FORMULAS: dict[str, Expr] = {
    "F11": 2*y*(x*z - x - 1)
    / (-x*y*z + x*y + x**3*z - x**3 + y - x**2 + x*z + x - 1 + (x*z - x - 1)*A1),
    "F21": 2*y / (-y + x**2*z - 2*x + 1 + A2),
    "F12": y*(x**3*z**2 - x**3*z + x**2*z + x*y*z - x*y - 3*x*z + x + y - 1 + (x*z - x + 1)*A2)
    / ((x**3*z**2 - x**3*z + x**2*z - x*y*z + x*y - x*z - x - y + 1 + (x*z - x + 1)*A2)*(-1 + y)*z)
    + y / (1 - y),
    "G11": 4*x**2*y / _G_DEN,
    "G21": 2*x**2*y*(1 + y - x**2 - A1) / (_G_DEN*A1),
    "G12": 2*x*y*(A3 + (x**3 - 2*x**2 + 2*x*y - 2*x - 2*y + 2)*A1) / (_G_DEN*(1 - y)*A1),
    "H11": 2*y*(x + 1)
    / (1 - x - y - x*y + x**2 + x**3
       + (1 + x)*sqrt((x**2 - 2*x - y + 1)*(x**2 + 2*x - y + 1), name="H11root")),
    "H21": y / (1 - x - y),
    "H12": y*(-x**3*y + x**2*y - x*y**2 + x*y + y**2 - 2*y + 1)
    / (x*y**3 - 3*x*y**2 - y**3 + 3*x*y + 3*y**2 - x - 3*y + 1),
    "K21": 2 / (1 - 2*x + S),
    "K12": (1 + y + 2*x*y - 2*x*y**2 + (y - 1)*S) / (y*(1 - 2*x*y + S)),
    "K132": (1 + y + (y - 1)*S) / (y*(1 - 2*x + S)),
    "K123": (2 + 3*x - 3*x*y + 2*x**2 - 2*x**2*y - x*(1 - y)*R) / (1 - 2*x*y + R),
    "L21": (1 - R) / (2*(1 - 2*x)*R),
    "L12": 2*x*(-1 + 4*x**2 + x + R) / ((1 - 2*x)*(1 + R)*R),
    "L132": x*(-1 + 4*x**2 + 2*x + (1 - 2*x)*R) / ((1 - 2*x)*(1 + R)*R),
    "L123": x*(1 + 2*x)*(1 - R) / ((1 - 2*x)*(1 + R)),
}
FORMULAS["K213"] = FORMULAS["K132"]
FORMULAS["L213"] = FORMULAS["L132"]

NAMES = (
    "F11", "F21", "F12", "G11", "G21", "G12", "H11", "H21", "H12",
    "K21", "K12", "K132", "K213", "K123", "L21", "L12", "L132", "L213", "L123",
)

WORD_PATTERNS = ("11", "21", "12")
PERM_PATTERNS = ("21", "12", "132", "213", "123")

DEFAULT_CAPS: Caps = (16, 8, 16)


@dataclass(frozen=True)
class Family:
    kind: str
    pattern: str
    variables: tuple[str, ...]


def family(name: str) -> Family:
    if name not in FORMULAS:
        raise DomainError(f"unknown closed form {name!r}; choose from {', '.join(NAMES)}")
    kind = {
        "F": "word-distribution",
        "G": "word-popularity",
        "H": "word-avoidance",
        "K": "perm-distribution",
        "L": "perm-popularity",
    }[name[0]]
    nvars = {"F": 3, "G": 2, "H": 2, "K": 2, "L": 1}[name[0]]
    return Family(kind, name[1:], ("x", "y", "z")[:nvars])


def normalize_caps(name: str, caps) -> Caps:
    """Clamp caps to the variables a family actually uses."""
    fam = family(name)
    caps = tuple(caps) + (0,) * (3 - len(tuple(caps)))
    return tuple(c if i < len(fam.variables) else 0 for i, c in enumerate(caps[:3]))


@dataclass
class Expansion:
    name: str
    series: MultiSeries
    signs: dict[str, int]

    @property
    def flipped(self) -> list[str]:
        return sorted(k for k, v in self.signs.items() if v < 0)


def _counting_ok(s: MultiSeries) -> bool:
    return not s.nonnegative_integer_violations()


def expand_named(name: str, caps=DEFAULT_CAPS) -> Expansion:
    """Expand a named closed form and certify it is a counting series.

    The positive branch of every square root is tried first.  If that does
    not give nonnegative integer coefficients, every other sign pattern is
    tried and accepted only when exactly one of them does.
    """
    caps = normalize_caps(name, caps)
    expr = FORMULAS[name]
    default = expand(expr, caps)
    if _counting_ok(default):
        return Expansion(name, default, {r.name: 1 for r in square_roots(expr)})
    roots = [r.name for r in square_roots(expr)]
    winners = []
    for signs in itertools.product((1, -1), repeat=len(roots)):
        if all(s == 1 for s in signs):
            continue
        assignment = dict(zip(roots, signs))
        try:
            s = expand(expr, caps, assignment)
        except SeriesError:
            continue
        if _counting_ok(s):
            winners.append((s, assignment))
    if len(winners) == 1:
        return Expansion(name, winners[0][0], winners[0][1])
    bad = default.nonnegative_integer_violations()[:3]
    raise SeriesError(
        f"{name}: no unique square-root branch gives a counting series "
        f"(positive branch fails at {bad}; {len(winners)} alternatives qualify)"
    )


def _check_pattern(p: str, allowed: tuple[str, ...]) -> str:
    p = str(p)
    if p not in allowed:
        raise DomainError(f"pattern {p!r} not covered; choose from {allowed}")
    return p


def expand_distribution(p: str, caps=DEFAULT_CAPS) -> MultiSeries:
    """F_p(x, y, z): coefficient (n, k, t) counts S_{n,k} words with t occurrences."""
    return expand_named("F" + _check_pattern(p, WORD_PATTERNS), caps).series


def expand_popularity_words(p: str, caps=DEFAULT_CAPS[:2]) -> MultiSeries:
    """G_p(x, y): coefficient (n, k) is the total number of occurrences over S_{n,k}."""
    return expand_named("G" + _check_pattern(p, WORD_PATTERNS), caps).series


def expand_avoidance(p: str, caps=DEFAULT_CAPS[:2]) -> MultiSeries:
    """H_p(x, y): coefficient (n, k) counts the words of S_{n,k} avoiding p."""
    return expand_named("H" + _check_pattern(p, WORD_PATTERNS), caps).series


def expand_perm_distribution(p: str, caps=(DEFAULT_CAPS[0], DEFAULT_CAPS[0])) -> MultiSeries:
    """K_p(x, y): coefficient (n, k) counts faro permutations with k occurrences."""
    return expand_named("K" + _check_pattern(p, PERM_PATTERNS), caps).series


def expand_perm_popularity(p: str, cap: int = DEFAULT_CAPS[0]) -> list[int]:
    """First cap + 1 terms of L_p(x)."""
    s = expand_named("L" + _check_pattern(p, PERM_PATTERNS), (cap,)).series
    return [int(s.coefficient(n)) for n in range(cap + 1)]


def diagonal(s: MultiSeries) -> list[int]:
    """Coefficients of x^n y^n as integers."""
    out = []
    for v in s.diagonal():
        if v.denominator != 1:
            raise SeriesError(f"non-integral diagonal coefficient {v}")
        out.append(int(v))
    return out


def coefficient_table(s: MultiSeries, name: str) -> list[tuple[int, ...]]:
    """Rows (n, k, t, value) of nonzero coefficients, in exponent order."""
    fam = family(name)
    rows = []
    for e, v in s.items():
        if v.denominator != 1:
            raise SeriesError(f"{name}: non-integral coefficient {v} at {e}")
        rows.append(tuple(e[: len(fam.variables)]) + (int(v),))
    return rows
