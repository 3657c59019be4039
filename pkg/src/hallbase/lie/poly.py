"""Exact polynomials in ``q`` with integer coefficients, and their quotients."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Union

Number = Union[int, Fraction]


class IntPolynomial:
    """An integer polynomial in ``q``; ``coeffs[i]`` multiplies ``q**i``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def q(cls) -> "IntPolynomial":
        return cls((0, 1))

    @classmethod
    def const(cls, c: int) -> "IntPolynomial":
        return cls((c,))

    @staticmethod
    def _lift(other) -> "IntPolynomial":
        if isinstance(other, IntPolynomial):
            return other
        if isinstance(other, int):
            return IntPolynomial((other,))
        return NotImplemented

    @property
    def degree(self) -> int:
        """Degree, with ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return IntPolynomial(x + (b[i] if i < len(b) else 0) for i, x in enumerate(a))

    __radd__ = __add__

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        if not self.coeffs or not other.coeffs:
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "IntPolynomial":
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        result, base = IntPolynomial((1,)), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __truediv__(self, other) -> "RationalExpr":
        return RationalExpr(self) / other

    def __eq__(self, other) -> bool:
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __call__(self, x: Number) -> Number:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def shift(self, q0: int) -> "IntPolynomial":
        """``p(q0 + t)`` expanded in ``t`` (Horner's scheme)."""
        acc = IntPolynomial()
        step = IntPolynomial((q0, 1))
        for c in reversed(self.coeffs):
            acc = acc * step + c
        return acc

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            mag = abs(c)
            mono = "" if i == 0 else ("q" if i == 1 else f"q^{i}")
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)!r})"


def q_power(n: int) -> IntPolynomial:
    return IntPolynomial([0] * n + [1])


def cyclotomic_like(d: int, sign: int = 1) -> IntPolynomial:
    """``q**d - sign``: the factors ``(q^d - 1)`` and ``(q^d + 1)``."""
    return q_power(d) - sign


class RationalExpr:
    """``num / den`` with integer polynomials, plus a human-readable label."""

    __slots__ = ("num", "den", "label")

    def __init__(self, num, den=None, label: str | None = None):
        self.num = IntPolynomial._lift(num)
        self.den = IntPolynomial._lift(1 if den is None else den)
        if self.num is NotImplemented or self.den is NotImplemented:
            raise TypeError("numerator and denominator must be integer polynomials")
        if self.den.is_zero():
            raise ZeroDivisionError("zero denominator")
        self.label = label

    @staticmethod
    def _lift(other) -> "RationalExpr":
        if isinstance(other, RationalExpr):
            return other
        if isinstance(other, (int, IntPolynomial)):
            return RationalExpr(other)
        return NotImplemented

    def named(self, label: str) -> "RationalExpr":
        return RationalExpr(self.num, self.den, label)

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return RationalExpr(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return RationalExpr(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other / self

    def __pow__(self, k: int) -> "RationalExpr":
        if k < 0:
            return RationalExpr(self.den**-k, self.num**-k)
        return RationalExpr(self.num**k, self.den**k)

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return RationalExpr(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return RationalExpr(self.num * other.den - other.num * self.den, self.den * other.den)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other - self

    def evaluate(self, q: int) -> Fraction:
        return Fraction(self.num(q), self.den(q))

    def canonical(self) -> str:
        if self.den == 1:
            return f"({self.num})"
        return f"({self.num}) / ({self.den})"

    def __str__(self) -> str:
        return self.label or self.canonical()

    def __repr__(self) -> str:
        return f"RationalExpr({self.canonical()!r}, label={self.label!r})"
