"""Truncated power series in x, y, z with exact rational coefficients.

A series keeps every coefficient whose exponents fit in a box
``(nx, ny, nz)`` of per-variable degree caps.  The monomials outside a box
form an ideal, so sums, products, inverses and square roots computed inside
the box are exact there.

Coefficients are stored in a dense numpy object array of ``gmpy2.mpq``;
``coefficient`` hands back ``fractions.Fraction``.  No floating point is
used anywhere.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterator

import gmpy2
import numpy as np

from .errors import SeriesError

VARIABLES = ("x", "y", "z")
Caps = tuple[int, int, int]
Monomial = tuple[int, int, int]

_ZERO = gmpy2.mpq(0)
_ONE = gmpy2.mpq(1)


def _mpq(value) -> "gmpy2.mpq":
    if isinstance(value, Fraction):
        return gmpy2.mpq(value.numerator, value.denominator)
    return gmpy2.mpq(value)


def _zeros(caps: Caps) -> np.ndarray:
    arr = np.empty(tuple(c + 1 for c in caps), dtype=object)
    arr.fill(_ZERO)
    return arr


def _axis(var: str) -> int:
    try:
        return VARIABLES.index(var)
    except ValueError:
        raise SeriesError(f"unknown variable {var!r}") from None


class MultiSeries:
    """Power series in x, y, z truncated to a box of degree caps."""

    __slots__ = ("coeffs", "caps")

    def __init__(self, coeffs: np.ndarray, caps: Caps):
        self.coeffs = coeffs
        self.caps = tuple(caps)

    # --- construction ---------------------------------------------------------

    @classmethod
    def zero(cls, caps: Caps) -> "MultiSeries":
        return cls(_zeros(caps), caps)

    @classmethod
    def constant(cls, value, caps: Caps) -> "MultiSeries":
        s = cls.zero(caps)
        s.coeffs[0, 0, 0] = _mpq(value)
        return s

    @classmethod
    def monomial(cls, exponents: Monomial, caps: Caps, value=1) -> "MultiSeries":
        s = cls.zero(caps)
        if all(e <= c for e, c in zip(exponents, caps)):
            s.coeffs[exponents] = _mpq(value)
        return s

    @classmethod
    def variable(cls, var: str, caps: Caps) -> "MultiSeries":
        e = [0, 0, 0]
        e[_axis(var)] = 1
        return cls.monomial(tuple(e), caps)

    @classmethod
    def from_dict(cls, terms: dict[Monomial, object], caps: Caps) -> "MultiSeries":
        s = cls.zero(caps)
        for e, v in terms.items():
            if all(a <= c for a, c in zip(e, caps)):
                s.coeffs[e] += _mpq(v)
        return s

    # --- inspection -------------------------------------------------------------

    def coefficient(self, n: int, k: int = 0, t: int = 0) -> Fraction:
        e = (n, k, t)
        if any(a < 0 or a > c for a, c in zip(e, self.caps)):
            raise SeriesError(f"exponent {e} outside truncation {self.caps}")
        v = self.coeffs[e]
        return Fraction(int(v.numerator), int(v.denominator))

    def items(self) -> Iterator[tuple[Monomial, Fraction]]:
        """Nonzero terms in lexicographic exponent order."""
        for e in np.ndindex(self.coeffs.shape):
            v = self.coeffs[e]
            if v != 0:
                yield e, Fraction(int(v.numerator), int(v.denominator))

    def to_dict(self) -> dict[Monomial, Fraction]:
        return dict(self.items())

    @property
    def constant_term(self) -> Fraction:
        return self.coefficient(0, 0, 0)

    def is_zero(self) -> bool:
        return not any(v != 0 for v in self.coeffs.flat)

    def lowest_monomial(self) -> Monomial | None:
        """Componentwise minimum exponent over the nonzero terms."""
        nz = [e for e in np.ndindex(self.coeffs.shape) if self.coeffs[e] != 0]
        if not nz:
            return None
        return tuple(min(e[i] for e in nz) for i in range(3))

    def nonnegative_integer_violations(self) -> list[tuple[Monomial, Fraction]]:
        return [
            (e, v) for e, v in self.items() if v.denominator != 1 or v < 0
        ]

    def __eq__(self, other) -> bool:
        if not isinstance(other, MultiSeries):
            return NotImplemented
        caps = _meet(self.caps, other.caps)
        a = self.truncate(caps).coeffs
        b = other.truncate(caps).coeffs
        return bool(np.all(a == b))

    def __repr__(self) -> str:
        terms = list(self.items())[:8]
        body = " + ".join(f"{v}*x^{e[0]}y^{e[1]}z^{e[2]}" for e, v in terms)
        more = " + ..." if len(terms) == 8 else ""
        return f"MultiSeries({body or '0'}{more}; caps={self.caps})"

    # --- truncation and reshaping --------------------------------------------------

    def truncate(self, caps: Caps) -> "MultiSeries":
        caps = _meet(self.caps, caps)
        sl = tuple(slice(0, c + 1) for c in caps)
        return MultiSeries(self.coeffs[sl].copy(), caps)

    def divide_monomial(self, m: Monomial) -> "MultiSeries":
        """Exact division by x^a y^b z^c; every term must be divisible."""
        a, b, c = m
        head = self.coeffs.copy()
        head[a:, b:, c:] = _ZERO
        if any(v != 0 for v in head.flat):
            raise SeriesError(f"series is not divisible by the monomial {m}")
        caps = tuple(cap - e for cap, e in zip(self.caps, m))
        if min(caps) < 0:
            raise SeriesError(f"monomial {m} exceeds truncation {self.caps}")
        return MultiSeries(self.coeffs[a:, b:, c:].copy(), caps)

    def multiply_monomial(self, m: Monomial) -> "MultiSeries":
        out = _zeros(self.caps)
        a, b, c = m
        nx, ny, nz = self.caps
        if a <= nx and b <= ny and c <= nz:
            out[a:, b:, c:] = self.coeffs[: nx + 1 - a, : ny + 1 - b, : nz + 1 - c]
        return MultiSeries(out, self.caps)

    # --- ring operations ---------------------------------------------------------

    def _coerce(self, other) -> "MultiSeries":
        if isinstance(other, MultiSeries):
            return other
        return MultiSeries.constant(other, self.caps)

    def __add__(self, other) -> "MultiSeries":
        other = self._coerce(other)
        caps = _meet(self.caps, other.caps)
        return MultiSeries(self.truncate(caps).coeffs + other.truncate(caps).coeffs, caps)

    __radd__ = __add__

    def __neg__(self) -> "MultiSeries":
        return MultiSeries(-self.coeffs, self.caps)

    def __sub__(self, other) -> "MultiSeries":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "MultiSeries":
        return self._coerce(other) + (-self)

    def __mul__(self, other) -> "MultiSeries":
        if not isinstance(other, MultiSeries):
            return MultiSeries(self.coeffs * _mpq(other), self.caps)
        caps = _meet(self.caps, other.caps)
        a = self.truncate(caps).coeffs
        b = other.truncate(caps).coeffs
        # iterate over the sparser factor, adding shifted copies of the other
        if np.count_nonzero(a != 0) > np.count_nonzero(b != 0):
            a, b = b, a
        out = _zeros(caps)
        nx, ny, nz = caps
        for i, j, l in zip(*np.nonzero(a != 0)):
            out[i:, j:, l:] += a[i, j, l] * b[: nx + 1 - i, : ny + 1 - j, : nz + 1 - l]
        return MultiSeries(out, caps)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "MultiSeries":
        if not isinstance(e, int) or e < 0:
            raise SeriesError("only nonnegative integer powers are supported")
        result = MultiSeries.constant(1, self.caps)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inverse(self) -> "MultiSeries":
        """1/self for a unit (nonzero constant term), by Newton iteration."""
        c0 = self.coeffs[0, 0, 0]
        if c0 == 0:
            raise SeriesError("cannot invert a series with zero constant term")
        v = MultiSeries.constant(1 / c0, self.caps)
        two = MultiSeries.constant(2, self.caps)
        for _ in range(_newton_rounds(self.caps)):
            nxt = v * (two - self * v)
            if nxt == v:
                return v
            v = nxt
        raise SeriesError("Newton inversion did not reach a fixed point")  # pragma: no cover

    def __truediv__(self, other) -> "MultiSeries":
        if not isinstance(other, MultiSeries):
            return self * (1 / _mpq(other))
        return divide(self, other)

    def __rtruediv__(self, other) -> "MultiSeries":
        return divide(self._coerce(other), self)

    def sqrt(self) -> "MultiSeries":
        """Square root with positive constant term.

        Iterates r <- r + r(1 - a r^2)/2 towards a^(-1/2), which converges
        quadratically, then returns a * r.
        """
        c0 = self.coeffs[0, 0, 0]
        if c0 <= 0:
            raise SeriesError(f"square root needs a positive constant term, got {c0}")
        num, den = int(c0.numerator), int(c0.denominator)
        rn, rd = math.isqrt(num), math.isqrt(den)
        if rn * rn != num or rd * rd != den:
            raise SeriesError(f"constant term {c0} is not a rational square")
        r = MultiSeries.constant(gmpy2.mpq(rd, rn), self.caps)
        one = MultiSeries.constant(1, self.caps)
        for _ in range(_newton_rounds(self.caps)):
            nxt = r + r * (one - self * r * r) * gmpy2.mpq(1, 2)
            if nxt == r:
                return self * r
            r = nxt
        raise SeriesError("Newton square root did not reach a fixed point")  # pragma: no cover

    # --- calculus and substitution ---------------------------------------------------

    def derivative(self, var: str) -> "MultiSeries":
        """Partial derivative; the cap of ``var`` drops by one."""
        ax = _axis(var)
        if self.caps[ax] == 0:
            caps = self.caps
            return MultiSeries.zero(caps)
        sl = [slice(None)] * 3
        sl[ax] = slice(1, None)
        part = self.coeffs[tuple(sl)]
        shape = [1, 1, 1]
        shape[ax] = part.shape[ax]
        weights = np.array(
            [gmpy2.mpq(i) for i in range(1, part.shape[ax] + 1)], dtype=object
        ).reshape(shape)
        caps = list(self.caps)
        caps[ax] -= 1
        return MultiSeries(part * weights, tuple(caps))

    def substitute(self, var: str, value) -> "MultiSeries":
        """Set ``var`` to a constant.

        Exact only when the series is a polynomial in ``var`` of degree within
        the cap for every retained coefficient (always true for ``value=0``).
        """
        ax = _axis(var)
        value = _mpq(value)
        powers = [value ** i for i in range(self.caps[ax] + 1)]
        shape = [1, 1, 1]
        shape[ax] = len(powers)
        weights = np.array(powers, dtype=object).reshape(shape)
        total = (self.coeffs * weights).sum(axis=ax, keepdims=True)
        caps = list(self.caps)
        caps[ax] = 0
        return MultiSeries(total, tuple(caps))

    def diagonal(self) -> list[Fraction]:
        """Coefficients of x^n y^n (z^0), n = 0..min(cap_x, cap_y)."""
        if self.caps[2] and any(v != 0 for v in self.coeffs[:, :, 1:].flat):
            raise SeriesError("diagonal is defined for series free of z")
        return [self.coefficient(n, n, 0) for n in range(min(self.caps[0], self.caps[1]) + 1)]


def _meet(a: Caps, b: Caps) -> Caps:
    return tuple(min(p, q) for p, q in zip(a, b))


def _newton_rounds(caps: Caps) -> int:
    # correct total degree doubles each round; +2 rounds to observe the fixed point
    return max(1, (sum(caps) + 1).bit_length()) + 2


def divide(a: MultiSeries, b: MultiSeries) -> MultiSeries:
    """a / b where b is a unit; see ``closedform`` for monomial factoring."""
    caps = _meet(a.caps, b.caps)
    return a.truncate(caps) * b.truncate(caps).inverse()


def series_add(a: MultiSeries, b: MultiSeries) -> MultiSeries:
    return a + b


def series_mul(a: MultiSeries, b: MultiSeries) -> MultiSeries:
    return a * b


def series_div(a: MultiSeries, b: MultiSeries) -> MultiSeries:
    """a / b, factoring the largest common monomial out of b first.

    Both operands must already carry enough precision: after dividing by the
    monomial m the result is exact up to ``caps - m``.
    """
    if b.constant_term != 0:
        return divide(a, b)
    m = b.lowest_monomial()
    if m is None or b.coeffs[m] == 0:
        raise SeriesError("divisor is not a monomial times a unit")
    return divide(a.divide_monomial(m), b.divide_monomial(m))


def series_sqrt(a: MultiSeries) -> MultiSeries:
    return a.sqrt()
