"""Univariate polynomials over Q with Sturm sequences.

Coefficients are Fractions, lowest degree first.  Integer polynomials
are the primitive representatives returned by :meth:`Polynomial.primitive`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from ..errors import ZeroPolynomial


def _frac(c) -> Fraction:
    return c if isinstance(c, Fraction) else Fraction(c)


@dataclass(frozen=True)
class Polynomial:
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        cs = [_frac(c) for c in self.coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def of(cls, *coeffs) -> "Polynomial":
        """Build from coefficients given lowest degree first."""
        return cls(tuple(coeffs))

    @classmethod
    def x(cls) -> "Polynomial":
        return cls((0, 1))

    @classmethod
    def const(cls, c) -> "Polynomial":
        return cls((c,))

    @classmethod
    def parse(cls, text: str) -> "Polynomial":
        from .parse import parse_polynomial

        return parse_polynomial(text)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self) -> Fraction:
        if not self.coeffs:
            raise ZeroPolynomial("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    @staticmethod
    def _lift(other) -> "Polynomial":
        return other if isinstance(other, Polynomial) else Polynomial((other,))

    def __add__(self, other) -> "Polynomial":
        other = self._lift(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(tuple(self[i] + other[i] for i in range(n)))

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other) -> "Polynomial":
        return self + (-self._lift(other))

    def __rsub__(self, other) -> "Polynomial":
        return self._lift(other) - self

    def __mul__(self, other) -> "Polynomial":
        other = self._lift(other)
        if self.is_zero() or other.is_zero():
            return Polynomial(())
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Polynomial(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Polynomial":
        result, base = Polynomial((1,)), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other) -> tuple["Polynomial", "Polynomial"]:
        other = self._lift(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        q = [Fraction(0)] * max(len(rem) - dq, 1)
        inv_lc = 1 / other.lc
        for i in range(len(rem) - 1, dq - 1, -1):
            c = rem[i] * inv_lc
            if c:
                q[i - dq] = c
                for j, b in enumerate(other.coeffs):
                    rem[i - dq + j] -= c * b
        return Polynomial(tuple(q)), Polynomial(tuple(rem[:dq] if dq > 0 else ()))

    def __floordiv__(self, other) -> "Polynomial":
        return divmod(self, other)[0]

    def __mod__(self, other) -> "Polynomial":
        return divmod(self, other)[1]

    def __call__(self, v):
        """Horner evaluation; works for any ring element supporting + and *."""
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * v + c
        return acc

    def eval_interval(self, lo: Fraction, hi: Fraction) -> tuple[Fraction, Fraction]:
        """Enclosure of the values on [lo, hi] by interval Horner."""
        a = b = Fraction(0)
        for c in reversed(self.coeffs):
            prods = (a * lo, a * hi, b * lo, b * hi)
            a, b = min(prods) + c, max(prods) + c
        return a, b

    def derivative(self) -> "Polynomial":
        return Polynomial(tuple(i * c for i, c in enumerate(self.coeffs) if i))

    def monic(self) -> "Polynomial":
        if self.is_zero():
            return self
        return Polynomial(tuple(c / self.lc for c in self.coeffs))

    def primitive(self) -> "Polynomial":
        """Integer coefficients with unit content and positive leading coefficient."""
        if self.is_zero():
            return self
        den = math.lcm(*(c.denominator for c in self.coeffs))
        ints = [int(c * den) for c in self.coeffs]
        g = math.gcd(*ints)
        if ints[-1] < 0:
            g = -g
        return Polynomial(tuple(i // g for i in ints))

    def int_coeffs(self) -> tuple[int, ...]:
        if any(c.denominator != 1 for c in self.coeffs):
            raise ValueError("polynomial has non-integer coefficients")
        return tuple(int(c) for c in self.coeffs)

    def gcd(self, other: "Polynomial") -> "Polynomial":
        """Monic gcd (zero if both are zero)."""
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def squarefree(self) -> "Polynomial":
        if self.is_zero():
            raise ZeroPolynomial("squarefree part of zero")
        if self.degree <= 0:
            return Polynomial((1,))
        return (self // self.gcd(self.derivative())).monic()

    def shift_scale(self, a, b) -> "Polynomial":
        """The polynomial p(a*x + b)."""
        lin = Polynomial((b, a))
        acc = Polynomial(())
        for c in reversed(self.coeffs):
            acc = acc * lin + c
        return acc

    def sign_at(self, v: Fraction) -> int:
        val = self(v)
        return (val > 0) - (val < 0)

    def sturm_sequence(self) -> list["Polynomial"]:
        seq = [self, self.derivative()]
        while not seq[-1].is_zero():
            seq.append(-(seq[-2] % seq[-1]))
        seq.pop()
        return seq

    def cauchy_bound(self) -> Fraction:
        """All complex roots have absolute value below this bound."""
        lc = abs(self.lc)
        return 1 + max((abs(c) / lc for c in self.coeffs[:-1]), default=Fraction(0))

    def __str__(self) -> str:
        return self.to_str("x")

    def to_str(self, var: str = "x") -> str:
        if self.is_zero():
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                mono = var if i == 1 else f"{var}^{i}"
                if mag == 1:
                    body = mono
                elif mag.denominator == 1:
                    body = f"{mag}*{mono}"
                else:
                    body = f"({mag})*{mono}"
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"Polynomial({self})"


def sign_variations(seq: list[Polynomial], v: Fraction) -> int:
    signs = [s for s in (p.sign_at(v) for p in seq) if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_roots(seq: list[Polynomial], lo: Fraction, hi: Fraction) -> int:
    """Distinct real roots in (lo, hi] of the squarefree head of a Sturm sequence."""
    return sign_variations(seq, lo) - sign_variations(seq, hi)


def char_poly_of(rows) -> Polynomial:
    """det(x*I - A) for a square matrix of rationals (Faddeev-LeVerrier)."""
    a = [[_frac(x) for x in r] for r in rows]
    n = len(a)
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    m = [[Fraction(0)] * n for _ in range(n)]
    for k in range(1, n + 1):
        # m <- a*m + c_{n-k+1} I
        am = [[sum(a[i][t] * m[t][j] for t in range(n)) for j in range(n)] for i in range(n)]
        for i in range(n):
            am[i][i] += coeffs[n - k + 1]
        m = am
        tr = sum(sum(a[i][t] * m[t][i] for t in range(n)) for i in range(n))
        coeffs[n - k] = -tr / k
    return Polynomial(tuple(coeffs))


def char_poly(m) -> Polynomial:
    """Monic characteristic polynomial det(x*I - m) of an IntMatrix."""
    return char_poly_of(m.rows)
