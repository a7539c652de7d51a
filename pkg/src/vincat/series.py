"""Truncated formal power series over exact rationals.

A Series holds coefficients c0..cN of sum c_k t^k; N is the truncation
order.  Arithmetic keeps exact Fraction coefficients and propagates the
order conservatively: results are only claimed through the smallest order
of the operands (less any powers of t cancelled by division).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

DEFAULT_ORDER = 24


class Series:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[Fraction | int], order: int | None = None):
        cs = [Fraction(c) for c in coeffs]
        if order is not None:
            if order < 0:
                raise ValueError("order must be >= 0")
            cs = cs[: order + 1] + [Fraction(0)] * (order + 1 - len(cs))
        if not cs:
            raise ValueError("a series needs at least the constant term")
        self.coeffs = tuple(cs)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, k: int) -> Fraction:
        if not 0 <= k <= self.order:
            raise IndexError("coefficient %d beyond truncation order %d" % (k, self.order))
        return self.coeffs[k]

    def valuation(self) -> int | None:
        """Index of the first nonzero coefficient, or None if zero
        through the truncation order."""
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        return None

    def truncate(self, order: int) -> "Series":
        if order > self.order:
            raise ValueError("cannot extend a series by truncation")
        return Series(self.coeffs[: order + 1])

    def __eq__(self, other) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        shared = min(self.order, other.order)
        return self.coeffs[: shared + 1] == other.coeffs[: shared + 1]

    __hash__ = None  # type: ignore[assignment]

    def _coerce(self, other) -> "Series | None":
        if isinstance(other, Series):
            return other
        if isinstance(other, (int, Fraction)):
            return Series([other], order=self.order)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        shared = min(self.order, o.order)
        return Series(
            [self.coeffs[k] + o.coeffs[k] for k in range(shared + 1)]
        )

    __radd__ = __add__

    def __neg__(self):
        return Series([-c for c in self.coeffs])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        shared = min(self.order, o.order)
        out = [Fraction(0)] * (shared + 1)
        for i, ci in enumerate(self.coeffs[: shared + 1]):
            if not ci:
                continue
            for j in range(shared + 1 - i):
                cj = o.coeffs[j]
                if cj:
                    out[i + j] += ci * cj
        return Series(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return divide(self, o)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return divide(o, self)

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return divide(Series([1], order=self.order), self) ** (-k)
        result = Series([1], order=self.order)
        factor = self
        while k:
            if k & 1:
                result = result * factor
            k >>= 1
            if k:
                factor = factor * factor
        return result

    def is_zero(self) -> bool:
        return self.valuation() is None

    def integer_coefficients(self) -> list[int]:
        """Coefficients as ints; raises if any is not an integer."""
        out = []
        for k, c in enumerate(self.coeffs):
            if c.denominator != 1:
                raise ValueError("coefficient of t^%d is not an integer: %s" % (k, c))
            out.append(c.numerator)
        return out

    def __str__(self) -> str:
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            if k == 0:
                parts.append(str(c))
            elif k == 1:
                parts.append("%s*t" % c)
            else:
                parts.append("%s*t^%d" % (c, k))
        return " + ".join(parts) if parts else "0"

    def __repr__(self) -> str:
        return "Series(order=%d, %s)" % (self.order, self)


def zero(order: int = DEFAULT_ORDER) -> Series:
    return Series([0], order=order)


def one(order: int = DEFAULT_ORDER) -> Series:
    return Series([1], order=order)


def t(order: int = DEFAULT_ORDER) -> Series:
    return Series([0, 1], order=order)


def poly(coeffs: Sequence[Fraction | int], order: int = DEFAULT_ORDER) -> Series:
    """Polynomial c0 + c1 t + ... as a series of the given order."""
    if len(coeffs) > order + 1 and any(c for c in coeffs[order + 1 :]):
        raise ValueError("polynomial degree exceeds requested order")
    return Series(coeffs, order=order)


def divide(f: Series, g: Series) -> Series:
    """Valuation-aware division.

    If g = t^k * (unit), f must be divisible by t^k as well; the quotient
    is then claimed through min(order(f), order(g)) - k.
    """
    k = g.valuation()
    if k is None:
        raise ZeroDivisionError("division by a series that is zero through its order")
    shared = min(f.order, g.order)
    if k:
        if any(f.coeffs[i] for i in range(min(k, f.order + 1))):
            raise ZeroDivisionError(
                "numerator valuation below denominator valuation %d" % k
            )
        new_order = shared - k
        if new_order < 0:
            raise ZeroDivisionError("series too short to cancel t^%d" % k)
        fs = list(f.coeffs[k : shared + 1])
        fs += [Fraction(0)] * (new_order + 1 - len(fs))
        gs = g.coeffs[k : shared + 1]
    else:
        new_order = shared
        fs = list(f.coeffs[: shared + 1])
        gs = g.coeffs[: shared + 1]
    inv0 = Fraction(1) / gs[0]
    out = [Fraction(0)] * (new_order + 1)
    for i in range(new_order + 1):
        acc = fs[i]
        for j in range(1, i + 1):
            if j < len(gs) and gs[j]:
                acc -= gs[j] * out[i - j]
        out[i] = acc * inv0
    return Series(out)


def sqrt(f: Series) -> Series:
    """Square root of a series with constant term 1."""
    if f.coeffs[0] != 1:
        raise ValueError("sqrt requires constant term 1, got %s" % f.coeffs[0])
    out = [Fraction(1)] + [Fraction(0)] * f.order
    half = Fraction(1, 2)
    for k in range(1, f.order + 1):
        acc = f.coeffs[k]
        for i in range(1, k):
            acc -= out[i] * out[k - i]
        out[k] = acc * half
    return Series(out)


def compose(f: Series, g: Series) -> Series:
    """f(g(t)) for g with zero constant term."""
    if g.coeffs[0] != 0:
        raise ValueError("composition needs a zero constant term in the inner series")
    shared = min(f.order, g.order)
    result = Series([f.coeffs[shared]], order=shared)
    for k in range(shared - 1, -1, -1):
        result = result * g + f.coeffs[k]
    return result


class ChebStream:
    """Lazily extended family of polynomial-like series defined by a
    two-term recurrence, at a fixed truncation order.

    kind "V": V0 = V1 = 1 and Vn = V(n-1) - (t/(1+t)) V(n-2).  These are
    rescaled Chebyshev polynomials of the second kind evaluated at
    sqrt(1+t)/(2 sqrt(t)); the rescaling keeps every term a power series
    in t.

    kind "AB": pairs (alpha_n, beta_n) with alpha0 = alpha1 = 1, beta0 = 1,
    beta1 = 1 - t, and x(n+2) = (1-t) x(n+1) - t^2 x(n) for both.
    """

    def __init__(self, kind: str, order: int = DEFAULT_ORDER):
        if kind not in ("V", "AB"):
            raise ValueError("kind must be 'V' or 'AB'")
        self.kind = kind
        self.order = order
        if kind == "V":
            self._vals: list = [one(order), one(order)]
            self._ratio = divide(t(order), poly([1, 1], order))
        else:
            self._vals = [
                (one(order), one(order)),
                (one(order), poly([1, -1], order)),
            ]

    def __getitem__(self, n: int):
        if n < 0:
            raise IndexError("negative index")
        while len(self._vals) <= n:
            if self.kind == "V":
                self._vals.append(self._vals[-1] - self._ratio * self._vals[-2])
            else:
                shrink = poly([1, -1], self.order)
                t2 = poly([0, 0, 1], self.order)
                a = shrink * self._vals[-1][0] - t2 * self._vals[-2][0]
                b = shrink * self._vals[-1][1] - t2 * self._vals[-2][1]
                self._vals.append((a, b))
        return self._vals[n]


_STREAMS: dict[tuple[str, int], ChebStream] = {}


def _stream(kind: str, order: int) -> ChebStream:
    key = (kind, order)
    if key not in _STREAMS:
        _STREAMS[key] = ChebStream(kind, order)
    return _STREAMS[key]


def cheb_v(n: int, order: int = DEFAULT_ORDER) -> Series:
    """V_n at the given truncation order."""
    return _stream("V", order)[n]


def cheb_ab(n: int, order: int = DEFAULT_ORDER) -> tuple[Series, Series]:
    """(alpha_n, beta_n) at the given truncation order."""
    return _stream("AB", order)[n]
