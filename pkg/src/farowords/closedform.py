"""Expression trees for algebraic generating functions, expanded exactly.

Build formulas with ordinary operators::

    x, y, z = variables()
    A1 = sqrt(x**4 - 2*x**2*y - 2*x**2 + y**2 - 2*y + 1, name="A1")
    F21 = 2*y / (-y + x**2*z - 2*x + 1 + A2)

and expand them with ``expand(expr, caps)``.  Evaluation is demand driven:
a division whose denominator is ``m * unit`` for a monomial m re-evaluates
both sides with the caps raised by m, cancels m, and divides by the unit, so
the quotient is exact up to the requested caps.  A square root takes the
branch with positive constant term unless told otherwise through ``signs``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping

from .errors import SeriesError
from .series import Caps, MultiSeries, VARIABLES


class Expr:
    def __add__(self, other):
        return Add(self, _lift(other))

    def __radd__(self, other):
        return Add(_lift(other), self)

    def __sub__(self, other):
        return Add(self, Neg(_lift(other)))

    def __rsub__(self, other):
        return Add(_lift(other), Neg(self))

    def __mul__(self, other):
        return Mul(self, _lift(other))

    def __rmul__(self, other):
        return Mul(_lift(other), self)

    def __truediv__(self, other):
        return Div(self, _lift(other))

    def __rtruediv__(self, other):
        return Div(_lift(other), self)

    def __neg__(self):
        return Neg(self)

    def __pow__(self, e: int):
        return Pow(self, e)

    def __hash__(self):
        return id(self)

    def __eq__(self, other):
        return self is other


class Const(Expr):
    def __init__(self, value):
        self.value = Fraction(value)

    def __repr__(self):
        return str(self.value)


class Var(Expr):
    def __init__(self, name: str):
        if name not in VARIABLES:
            raise SeriesError(f"unknown variable {name!r}")
        self.name = name

    def __repr__(self):
        return self.name


class Add(Expr):
    def __init__(self, a: Expr, b: Expr):
        self.a, self.b = a, b

    def __repr__(self):
        return f"({self.a!r} + {self.b!r})"


class Neg(Expr):
    def __init__(self, a: Expr):
        self.a = a

    def __repr__(self):
        return f"-{self.a!r}"


class Mul(Expr):
    def __init__(self, a: Expr, b: Expr):
        self.a, self.b = a, b

    def __repr__(self):
        return f"{self.a!r}*{self.b!r}"


class Div(Expr):
    def __init__(self, a: Expr, b: Expr):
        self.a, self.b = a, b

    def __repr__(self):
        return f"({self.a!r})/({self.b!r})"


class Pow(Expr):
    def __init__(self, a: Expr, e: int):
        if not isinstance(e, int) or e < 0:
            raise SeriesError("only nonnegative integer powers are supported")
        self.a, self.e = a, e

    def __repr__(self):
        return f"({self.a!r})^{self.e}"


class Sqrt(Expr):
    def __init__(self, a: Expr, name: str | None = None):
        self.a = a
        self.name = name or f"sqrt@{id(self):x}"

    def __repr__(self):
        return self.name


def _lift(v) -> Expr:
    return v if isinstance(v, Expr) else Const(v)


def variables() -> tuple[Var, Var, Var]:
    return Var("x"), Var("y"), Var("z")


def sqrt(a, name: str | None = None) -> Sqrt:
    return Sqrt(_lift(a), name)


def square_roots(expr: Expr) -> list[Sqrt]:
    """Distinct square-root nodes, in first-visit order."""
    seen: dict[int, Sqrt] = {}
    stack = [expr]
    visited = set()
    while stack:
        e = stack.pop()
        if id(e) in visited:
            continue
        visited.add(id(e))
        if isinstance(e, Sqrt):
            seen.setdefault(id(e), e)
        for attr in ("a", "b"):
            child = getattr(e, attr, None)
            if isinstance(child, Expr):
                stack.append(child)
    return sorted(seen.values(), key=lambda s: s.name)


class _Evaluator:
    def __init__(self, signs: Mapping[str, int]):
        self.signs = signs
        self.memo: dict[tuple[int, Caps], MultiSeries] = {}

    def __call__(self, e: Expr, caps: Caps) -> MultiSeries:
        key = (id(e), caps)
        hit = self.memo.get(key)
        if hit is None:
            hit = self._eval(e, caps)
            self.memo[key] = hit
        return hit

    def _eval(self, e: Expr, caps: Caps) -> MultiSeries:
        if isinstance(e, Const):
            return MultiSeries.constant(e.value, caps)
        if isinstance(e, Var):
            return MultiSeries.variable(e.name, caps)
        if isinstance(e, Add):
            return self(e.a, caps) + self(e.b, caps)
        if isinstance(e, Neg):
            return -self(e.a, caps)
        if isinstance(e, Mul):
            return self(e.a, caps) * self(e.b, caps)
        if isinstance(e, Pow):
            return self(e.a, caps) ** e.e
        if isinstance(e, Sqrt):
            root = self(e.a, caps).sqrt()
            return -root if self.signs.get(e.name, 1) < 0 else root
        if isinstance(e, Div):
            return self._divide(e, caps)
        raise SeriesError(f"unknown node {e!r}")  # pragma: no cover

    def _divide(self, e: Div, caps: Caps) -> MultiSeries:
        den = self(e.b, caps)
        if den.constant_term != 0:
            return self(e.a, caps) * den.inverse()
        m = den.lowest_monomial()
        if m is None:
            raise SeriesError(f"division by a series that vanishes up to {caps}")
        if den.coeffs[m] == 0:
            raise SeriesError(f"divisor is not a monomial times a unit: {e.b!r}")
        raised = tuple(c + d for c, d in zip(caps, m))
        den2 = self(e.b, raised)
        if den2.lowest_monomial() != m:
            raise SeriesError(f"divisor monomial is not stable under more precision: {e.b!r}")
        num2 = self(e.a, raised)
        try:
            num_q = num2.divide_monomial(m)
        except SeriesError:
            raise SeriesError(
                f"quotient is not a power series: numerator not divisible by {m}"
            ) from None
        return num_q * den2.divide_monomial(m).inverse()


def expand(expr: Expr, caps: Caps, signs: Mapping[str, int] | None = None) -> MultiSeries:
    """Exact expansion of ``expr`` up to ``caps`` = (deg x, deg y, deg z)."""
    caps = tuple(int(c) for c in caps)
    if len(caps) != 3 or min(caps) < 0:
        raise SeriesError(f"caps must be three nonnegative integers, got {caps}")
    return _Evaluator(signs or {})(_lift(expr), caps)
