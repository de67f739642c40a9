"""Univariate polynomials in t over Z and reduced rational series.

UniPoly stores coefficients as a tuple indexed by degree with no trailing
zeros, so equality of values is equality of tuples.  RationalSeries is a
fully reduced ratio of two integer polynomials, normalized so that the
lowest-degree nonzero coefficient of the denominator is positive -- the
power-series convention, under which products of (1 - t^w) stay printed
as such instead of being flipped to (t^w - 1).
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

__all__ = ["UniPoly", "RationalSeries", "one_minus_power", "weight_denominator"]


def _trim(coeffs: Sequence[int]) -> tuple[int, ...]:
    n = len(coeffs)
    while n and coeffs[n - 1] == 0:
        n -= 1
    return tuple(coeffs[:n])


class UniPoly:
    """Dense univariate polynomial over Z (display variable: t)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = [int(c) for c in coeffs]
        object.__setattr__(self, "coeffs", _trim(cs))

    @classmethod
    def term(cls, coeff: int, degree: int) -> "UniPoly":
        return cls([0] * degree + [coeff])

    @classmethod
    def one(cls) -> "UniPoly":
        return cls([1])

    def __setattr__(self, name, value):
        raise AttributeError("UniPoly is immutable")

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    @property
    def degree(self) -> int:
        """Degree; the zero polynomial is assigned -1."""
        return len(self.coeffs) - 1

    def coefficient(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = UniPoly([other])
        return isinstance(other, UniPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: "UniPoly") -> "UniPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return UniPoly(out)

    def __neg__(self) -> "UniPoly":
        return UniPoly([-c for c in self.coeffs])

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return UniPoly([other * c for c in self.coeffs])
        if not isinstance(other, UniPoly):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return UniPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return UniPoly(out)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __pow__(self, n: int) -> "UniPoly":
        if n < 0:
            raise ValueError("negative power")
        result = UniPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __call__(self, value):
        """Evaluate by Horner's rule; exact for int/Fraction arguments."""
        acc = value * 0
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def divide_exact(self, other: "UniPoly") -> "UniPoly":
        """Quotient self/other, raising ValueError unless division is exact."""
        q, r = _divmod_q(_to_frac(self.coeffs), _to_frac(other.coeffs))
        if any(r):
            raise ValueError("inexact polynomial division")
        out = []
        for c in q:
            if c.denominator != 1:
                raise ValueError("inexact polynomial division (non-integer quotient)")
            out.append(c.numerator)
        return UniPoly(out)

    def content(self) -> int:
        g = 0
        for c in self.coeffs:
            g = gcd(g, abs(c))
        return g

    def is_palindromic(self) -> bool:
        """coefficients read the same in both directions (zero: vacuously)."""
        return self.coeffs == tuple(reversed(self.coeffs))

    def is_monic_top(self) -> bool:
        """Leading (top-degree) coefficient equals 1."""
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def nonnegative(self) -> bool:
        return all(c >= 0 for c in self.coeffs)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                body = str(abs(c))
            else:
                mono = "t" if k == 1 else f"t^{k}"
                body = mono if abs(c) == 1 else f"{abs(c)}*{mono}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f" + {body}" if c > 0 else f" - {body}")
        return "".join(parts)

    def __repr__(self) -> str:
        return f"UniPoly({list(self.coeffs)!r})"


def one_minus_power(d: int) -> UniPoly:
    """1 - t^d."""
    if d <= 0:
        raise ValueError("power must be positive")
    return UniPoly([1] + [0] * (d - 1) + [-1])


def weight_denominator(weights: Iterable[int]) -> UniPoly:
    """Product of (1 - t^w) over a weight multiset."""
    out = UniPoly.one()
    for w in weights:
        out = out * one_minus_power(w)
    return out


# -- exact rational-coefficient division helpers ----------------------------


def _to_frac(coeffs: Sequence[int]) -> list[Fraction]:
    return [Fraction(c) for c in coeffs]


def _divmod_q(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    while a and not a[-1]:
        a.pop()
    while b and not b[-1]:
        b.pop()
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    r = list(a)
    while len(r) >= len(b) and any(r):
        while r and not r[-1]:
            r.pop()
        if len(r) < len(b):
            break
        shift = len(r) - len(b)
        factor = r[-1] / b[-1]
        q[shift] = factor
        for i, c in enumerate(b):
            r[shift + i] -= factor * c
    while r and not r[-1]:
        r.pop()
    return q, r


def _gcd_q(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a, b = list(a), list(b)
    while any(b):
        _, rem = _divmod_q(a, b)
        a, b = b, rem
    return a


class RationalSeries:
    """Reduced ratio numerator/denominator of integer polynomials in t.

    Canonical form: gcd(numerator, denominator) = 1 over Q, integer
    contents jointly reduced, and the lowest-degree nonzero coefficient
    of the denominator positive.  Two equal series therefore compare
    equal componentwise.
    """

    __slots__ = ("numerator", "denominator")

    def __init__(self, numerator: UniPoly, denominator: UniPoly):
        if denominator.is_zero():
            raise ZeroDivisionError("series denominator is zero")
        num, den = _reduce(numerator, denominator)
        object.__setattr__(self, "numerator", num)
        object.__setattr__(self, "denominator", den)

    def __setattr__(self, name, value):
        raise AttributeError("RationalSeries is immutable")

    @classmethod
    def from_polynomial(cls, p: UniPoly) -> "RationalSeries":
        return cls(p, UniPoly.one())

    @classmethod
    def from_weight_ratio(
        cls, codomain_degrees: Iterable[int], domain_weights: Iterable[int]
    ) -> "RationalSeries":
        """prod(1 - t^d) over codomain degrees / prod(1 - t^w) over weights."""
        return cls(weight_denominator(codomain_degrees), weight_denominator(domain_weights))

    def is_polynomial(self) -> bool:
        return self.denominator == UniPoly.one()

    def as_polynomial(self) -> UniPoly:
        if not self.is_polynomial():
            raise ValueError(f"series {self} is not a polynomial")
        return self.numerator

    def __eq__(self, other) -> bool:
        if isinstance(other, UniPoly):
            other = RationalSeries.from_polynomial(other)
        return (
            isinstance(other, RationalSeries)
            and self.numerator == other.numerator
            and self.denominator == other.denominator
        )

    def __hash__(self) -> int:
        return hash((self.numerator, self.denominator))

    def __mul__(self, other):
        if isinstance(other, UniPoly):
            other = RationalSeries.from_polynomial(other)
        if not isinstance(other, RationalSeries):
            return NotImplemented
        return RationalSeries(
            self.numerator * other.numerator, self.denominator * other.denominator
        )

    def __add__(self, other):
        if isinstance(other, UniPoly):
            other = RationalSeries.from_polynomial(other)
        if not isinstance(other, RationalSeries):
            return NotImplemented
        return RationalSeries(
            self.numerator * other.denominator + other.numerator * self.denominator,
            self.denominator * other.denominator,
        )

    def __str__(self) -> str:
        if self.is_polynomial():
            return str(self.numerator)
        return f"({self.numerator})/({self.denominator})"

    def __repr__(self) -> str:
        return f"RationalSeries({self.numerator!r}, {self.denominator!r})"


def _reduce(num: UniPoly, den: UniPoly) -> tuple[UniPoly, UniPoly]:
    if num.is_zero():
        return UniPoly(), UniPoly.one()
    g = _gcd_q(_to_frac(num.coeffs), _to_frac(den.coeffs))
    qn, rn = _divmod_q(_to_frac(num.coeffs), g)
    qd, rd = _divmod_q(_to_frac(den.coeffs), g)
    assert not any(rn) and not any(rd), "gcd does not divide its arguments"
    # clear denominators jointly, then remove the joint integer content
    mult = 1
    for c in qn + qd:
        mult = mult * c.denominator // gcd(mult, c.denominator)
    ni = [int(c * mult) for c in qn]
    di = [int(c * mult) for c in qd]
    content = 0
    for c in ni + di:
        content = gcd(content, abs(c))
    if content > 1:
        ni = [c // content for c in ni]
        di = [c // content for c in di]
    # sign: make the lowest-degree nonzero denominator coefficient positive
    low = next(c for c in di if c != 0)
    if low < 0:
        ni = [-c for c in ni]
        di = [-c for c in di]
    return UniPoly(ni), UniPoly(di)
