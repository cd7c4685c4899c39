"""Step patterns with Kleene-style groups, and linear pattern statistics.

Pattern text follows the usual notation: literal step strings, optionally
mixed with quantified groups ``(X)^+`` / ``(X)^*``, for example
``DD(UD)^*UU`` or ``F(UD)^+F(UD)^*UU``.

Counting semantics:

* a pure literal counts its (possibly overlapping) factor occurrences;
* every quantified group matches a *maximal* run of copies of its body, so
  the repeat count is fixed by the start position; ``+`` needs at least one
  copy, ``*`` allows none;
* occurrences are counted by start position, and may overlap.

A bare ``(X)^+`` therefore counts the maximal runs of ``X``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence, Union

from .errors import PatternSyntaxError
from .paths import STEPS


@dataclass(frozen=True)
class Group:
    body: str
    quantifier: str  # "+" or "*"

    def __str__(self) -> str:
        return f"({self.body})^{self.quantifier}"


Segment = Union[str, Group]


@dataclass(frozen=True)
class PatternExpr:
    segments: tuple[Segment, ...]

    @property
    def is_literal(self) -> bool:
        return all(isinstance(s, str) for s in self.segments)

    @property
    def groups(self) -> tuple[Group, ...]:
        return tuple(s for s in self.segments if isinstance(s, Group))

    @property
    def prefix(self) -> str:
        """Literal text before the first group (the whole text if none)."""
        out = []
        for s in self.segments:
            if isinstance(s, Group):
                break
            out.append(s)
        return "".join(out)

    @property
    def suffix(self) -> str:
        """Literal text after the last group (empty for pure literals)."""
        if self.is_literal:
            return ""
        out = []
        for s in reversed(self.segments):
            if isinstance(s, Group):
                break
            out.append(s)
        return "".join(reversed(out))

    def __str__(self) -> str:
        return "".join(map(str, self.segments))


def parse_pattern(text: str) -> PatternExpr:
    """Parse pattern text; raises PatternSyntaxError with the offending position."""
    segments: list[Segment] = []
    literal: list[str] = []
    i = 0
    while i < len(text):
        c = text[i]
        if c in STEPS:
            literal.append(c)
            i += 1
        elif c == "(":
            if literal:
                segments.append("".join(literal))
                literal = []
            close = text.find(")", i + 1)
            if close < 0:
                raise PatternSyntaxError("unclosed group", text, i)
            body = text[i + 1:close]
            if not body:
                raise PatternSyntaxError("empty group body", text, i + 1)
            for j, b in enumerate(body, start=i + 1):
                if b not in STEPS:
                    raise PatternSyntaxError(f"invalid step {b!r} in group", text, j)
            q = text[close + 1:close + 3]
            if q not in ("^+", "^*"):
                raise PatternSyntaxError("group must be followed by ^+ or ^*", text, close + 1)
            segments.append(Group(body, q[1]))
            i = close + 3
        else:
            raise PatternSyntaxError(f"unexpected character {c!r}", text, i)
    if literal:
        segments.append("".join(literal))
    if not segments:
        raise PatternSyntaxError("empty pattern", text, 0)
    if all(isinstance(s, Group) and s.quantifier == "*" for s in segments):
        raise PatternSyntaxError(
            "a starred group needs a nonempty literal before or after it", text, 0
        )
    return PatternExpr(tuple(segments))


def _as_pattern(p: PatternExpr | str) -> PatternExpr:
    return p if isinstance(p, PatternExpr) else parse_pattern(p)


def _match_at(path: str, start: int, segments: Sequence[Segment]) -> int | None:
    """End position of the occurrence starting at ``start``, if any."""
    pos = start
    for seg in segments:
        if isinstance(seg, str):
            if not path.startswith(seg, pos):
                return None
            pos += len(seg)
            continue
        body = seg.body
        m = len(body)
        if pos >= m and path[pos - m:pos] == body:
            return None  # run would not be maximal on the left
        reps = 0
        while path.startswith(body, pos):
            pos += m
            reps += 1
        if seg.quantifier == "+" and reps == 0:
            return None
    return pos


def count_pattern(path: str, pattern: PatternExpr | str) -> int:
    """Number of start positions at which ``pattern`` occurs in ``path``."""
    pattern = _as_pattern(pattern)
    if pattern.is_literal:
        lit = pattern.prefix
        return sum(1 for i in range(len(path) - len(lit) + 1) if path.startswith(lit, i))
    return sum(
        1 for i in range(len(path) + 1) if _match_at(path, i, pattern.segments) is not None
    )


def occurrences(path: str, pattern: PatternExpr | str) -> list[tuple[int, int]]:
    """(start, end) windows of every occurrence."""
    pattern = _as_pattern(pattern)
    out = []
    for i in range(len(path) + 1):
        end = _match_at(path, i, pattern.segments)
        if end is not None and end > i:
            out.append((i, end))
    return out


# --- linear statistics -------------------------------------------------------------

LENGTH = "n"
ONE = "1"
Item = Union[PatternExpr, str]


@dataclass(frozen=True)
class StatisticExpr:
    """A Z-linear combination of pattern counts, the length symbol and 1."""

    terms: tuple[tuple[int, Item], ...]

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for c, item in self.terms:
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            body = str(item) if item != ONE else ""
            if not body:
                text = str(mag)
            elif mag == 1:
                text = body
            else:
                text = f"{mag} {body}"
            parts.append(f"{sign} {text}")
        out = " ".join(parts)
        return out[2:] if out.startswith("+ ") else "-" + out[2:]


def statistic(*terms: tuple[int, Item | str]) -> StatisticExpr:
    """Build a statistic from ``(coefficient, item)`` pairs; strings are parsed."""
    out = []
    for c, item in terms:
        if isinstance(item, str) and item not in (LENGTH, ONE):
            item = parse_pattern(item)
        out.append((c, item))
    return StatisticExpr(tuple(out))


_TERM = re.compile(r"^(\d+)?\s*\*?\s*(.*)$")


def parse_statistic(text: str) -> StatisticExpr:
    """Parse text like ``n - 1 - UU - FF`` or ``FU + UU + 2 DU``."""
    src = text.strip()
    if src == "0":
        return StatisticExpr(())
    # split on + and - that are not part of ^+ quantifiers
    pieces: list[tuple[int, str]] = []
    sign = 1
    seen_operator = False
    buf: list[str] = []
    for i, c in enumerate(src):
        if c in "+-" and not (i > 0 and src[i - 1] == "^"):
            chunk = "".join(buf).strip()
            if chunk:
                pieces.append((sign, chunk))
            elif seen_operator:
                raise PatternSyntaxError("two operators in a row", text, i)
            seen_operator = True
            buf = []
            sign = 1 if c == "+" else -1
        else:
            buf.append(c)
    if not "".join(buf).strip():
        raise PatternSyntaxError("statistic ends with an operator", text, len(src))
    pieces.append((sign, "".join(buf).strip()))
    terms: list[tuple[int, Item]] = []
    for sign, piece in pieces:
        m = _TERM.match(piece)
        coef_text, body = m.group(1), m.group(2).strip()
        if not body:
            terms.append((sign * int(coef_text), ONE))
            continue
        coef = int(coef_text) if coef_text else 1
        if body == LENGTH:
            terms.append((sign * coef, LENGTH))
        else:
            terms.append((sign * coef, parse_pattern(body)))
    return StatisticExpr(tuple(terms))


def evaluate_statistic(path: str, stat: StatisticExpr | str, n_value: int) -> int:
    """Evaluate a statistic on ``path``; ``n_value`` is what the symbol n means."""
    if isinstance(stat, str):
        stat = parse_statistic(stat)
    total = 0
    for c, item in stat.terms:
        if item == LENGTH:
            total += c * n_value
        elif item == ONE:
            total += c
        else:
            total += c * count_pattern(path, item)
    return total


def popularity(paths: Iterable[str], pattern: PatternExpr | str) -> int:
    pattern = _as_pattern(pattern)
    return sum(count_pattern(p, pattern) for p in paths)
