"""Elements of a real number field Q(a), a a real algebraic number.

An element is a polynomial in the generator reduced modulo its
irreducible minimal polynomial.  Signs are exact: the value is nonzero
whenever its coordinates are, and interval evaluation on a refined
isolating interval decides which side of zero it is on.
"""

from __future__ import annotations

from fractions import Fraction

from ..errors import MixedFields
from .algebraic import AlgebraicReal, algebraic_compare
from .factor import irreducible_factors
from .poly import Polynomial, char_poly_of, count_roots


class NumberField:
    """Q(a) for a real algebraic generator a.

    The generator's polynomial is replaced by the irreducible factor that
    vanishes at it, so the field degree is the true degree of a.
    """

    def __init__(self, generator: AlgebraicReal, name: str = "a"):
        for f in irreducible_factors(generator.minpoly):
            if count_roots(f.sturm_sequence(), generator.lo, generator.hi) > 0:
                break
        else:  # pragma: no cover - the generator's polynomial vanishes in its interval
            raise ValueError("generator interval contains no root")
        self.generator = AlgebraicReal(f, generator.lo, generator.hi)
        self.modulus = f.monic()
        self.degree = f.degree
        self.name = name
        # narrowest isolating interval seen so far; only ever shrinks
        self._bounds = (self.generator.lo, self.generator.hi)

    @classmethod
    def from_polynomial(cls, poly: Polynomial, lo, hi, name: str = "a") -> "NumberField":
        return cls(AlgebraicReal.from_interval(poly, lo, hi), name)

    @classmethod
    def rationals(cls) -> "NumberField":
        return cls(AlgebraicReal.from_rational(0))

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, NumberField):
            return NotImplemented
        return self.modulus == other.modulus and algebraic_compare(self.generator, other.generator) == 0

    def __hash__(self):
        return hash(self.modulus)

    def __call__(self, value) -> "FieldElement":
        """Coerce an int, Fraction, Polynomial or coordinate tuple into the field."""
        if isinstance(value, FieldElement):
            if value.field == self:
                return value
            if value.is_rational():
                return self.rational(value.rational_value())
            raise MixedFields("element belongs to a different field")
        if isinstance(value, Polynomial):
            return FieldElement(self, value)
        if isinstance(value, (tuple, list)):
            return FieldElement(self, Polynomial(tuple(value)))
        return self.rational(value)

    def rational(self, q) -> "FieldElement":
        return FieldElement(self, Polynomial((Fraction(q),)))

    def gen(self) -> "FieldElement":
        return FieldElement(self, Polynomial.x())

    def zero(self) -> "FieldElement":
        return self.rational(0)

    def one(self) -> "FieldElement":
        return self.rational(1)

    def bounds(self, width: Fraction | None = None) -> tuple[Fraction, Fraction]:
        """Current isolating interval of the generator, refined to ``width`` if given."""
        if width is not None:
            lo, hi = self._bounds
            if hi - lo > width:
                g = AlgebraicReal(self.generator.minpoly, lo, hi).refine(width)
                self._bounds = (g.lo, g.hi)
        return self._bounds

    def _refine(self) -> None:
        lo, hi = self._bounds
        g = AlgebraicReal(self.generator.minpoly, lo, hi)
        for _ in range(16):
            g = g.bisect()
        self._bounds = (g.lo, g.hi)

    def poly_sign(self, p: Polynomial) -> int:
        """Sign of p(a); p must already be reduced (or be a nonzero residue)."""
        if p.is_zero():
            return 0
        if p.degree == 0:
            return 1 if p[0] > 0 else -1
        while True:
            lo, hi = p.eval_interval(*self._bounds)
            if lo > 0:
                return 1
            if hi < 0:
                return -1
            self._refine()

    def describe(self) -> str:
        lo, hi = self.generator.lo, self.generator.hi
        return f"{self.name}: {self.generator.minpoly.to_str('x').replace(' ', '')} in ({lo},{hi})"

    def __repr__(self) -> str:
        return f"NumberField({self.describe()})"


def _inverse_mod(g: Polynomial, f: Polynomial) -> Polynomial:
    r0, r1 = f, g
    s0, s1 = Polynomial(()), Polynomial((1,))
    while not r1.is_zero():
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
    if r0.degree != 0:
        raise ZeroDivisionError("element is not invertible")
    return (s0 * (1 / r0[0])) % f


class FieldElement:
    """An element of a NumberField, immutable."""

    __slots__ = ("field", "poly")

    def __init__(self, field: NumberField, poly: Polynomial):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "poly", poly % field.modulus if poly.degree >= field.degree else poly)

    def __setattr__(self, name, value):
        raise AttributeError("FieldElement is immutable")

    @property
    def coords(self) -> tuple[Fraction, ...]:
        return tuple(self.poly[i] for i in range(self.field.degree))

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.field is self.field or other.field == self.field:
                return other.poly
            if other.is_rational():
                return Polynomial((other.rational_value(),))
            if self.is_rational():
                return None
            raise MixedFields(f"cannot combine elements of {self.field.describe()} and {other.field.describe()}")
        if isinstance(other, (int, Fraction)):
            return Polynomial((other,))
        return NotImplemented

    def _lift_self(self, other):
        """When self is rational and other is not, redo the operation in other's field."""
        return other.field(self.rational_value())

    def __add__(self, other):
        p = self._coerce(other)
        if p is NotImplemented:
            return p
        if p is None:
            return self._lift_self(other) + other
        return FieldElement(self.field, self.poly + p)

    __radd__ = __add__

    def __sub__(self, other):
        p = self._coerce(other)
        if p is NotImplemented:
            return p
        if p is None:
            return self._lift_self(other) - other
        return FieldElement(self.field, self.poly - p)

    def __rsub__(self, other):
        p = self._coerce(other)
        if p is NotImplemented:
            return p
        return FieldElement(self.field, p - self.poly)

    def __mul__(self, other):
        p = self._coerce(other)
        if p is NotImplemented:
            return p
        if p is None:
            return self._lift_self(other) * other
        return FieldElement(self.field, self.poly * p)

    __rmul__ = __mul__

    def __neg__(self):
        return FieldElement(self.field, -self.poly)

    def __pos__(self):
        return self

    def inverse(self) -> "FieldElement":
        if self.poly.is_zero():
            raise ZeroDivisionError("division by zero in a number field")
        return FieldElement(self.field, _inverse_mod(self.poly, self.field.modulus))

    def __truediv__(self, other):
        p = self._coerce(other)
        if p is NotImplemented:
            return p
        if p is None:
            return self._lift_self(other) / other
        if p.is_zero():
            raise ZeroDivisionError("division by zero in a number field")
        if p.degree == 0:
            return FieldElement(self.field, self.poly * (1 / p[0]))
        return self * FieldElement(self.field, p).inverse()

    def __rtruediv__(self, other):
        p = self._coerce(other)
        if p is NotImplemented:
            return p
        return FieldElement(self.field, p) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result, base = self.field.one(), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def is_zero(self) -> bool:
        return self.poly.is_zero()

    def is_rational(self) -> bool:
        return self.poly.degree <= 0

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("element is irrational")
        return self.poly[0]

    def sign(self) -> int:
        return self.field.poly_sign(self.poly)

    def __bool__(self):
        return not self.poly.is_zero()

    def _compare_same_field(self, other):
        if isinstance(other, (int, Fraction)):
            return (self - other).sign()
        if isinstance(other, FieldElement):
            try:
                return (self - other).sign()
            except MixedFields:
                return None
        return None

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            if other.field is self.field or other.field == self.field:
                return self.poly == other.poly
            if self.is_rational() and other.is_rational():
                return self.rational_value() == other.rational_value()
            if self.is_rational() or other.is_rational():
                return False
            return algebraic_compare(self, other) == 0
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.poly[0] == other
        if isinstance(other, AlgebraicReal):
            return algebraic_compare(self, other) == 0
        return NotImplemented

    def __hash__(self):
        if self.is_rational():
            return hash(self.poly[0])
        return hash((hash(self.field), self.poly))

    def __lt__(self, other):
        return algebraic_compare(self, other) < 0

    def __le__(self, other):
        return algebraic_compare(self, other) <= 0

    def __gt__(self, other):
        return algebraic_compare(self, other) > 0

    def __ge__(self, other):
        return algebraic_compare(self, other) >= 0

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def enclosure(self, width=Fraction(1, 10**12)) -> tuple[Fraction, Fraction]:
        """Rational interval of width at most ``width`` containing the value."""
        width = Fraction(width)
        if self.is_rational():
            return self.poly[0], self.poly[0]
        while True:
            lo, hi = self.poly.eval_interval(*self.field._bounds)
            if hi - lo <= width:
                return lo, hi
            self.field._refine()

    def approx(self, width=Fraction(1, 10**12)) -> Fraction:
        lo, hi = self.enclosure(width)
        return (lo + hi) / 2

    def __float__(self):
        return float(self.approx(Fraction(1, 2**60)))

    def __floor__(self) -> int:
        lo, hi = self.enclosure(Fraction(1, 4))
        n = lo.__floor__()
        while self >= n + 1:
            n += 1
        while self < n:
            n -= 1
        return n

    def multiplication_matrix(self) -> list[list[Fraction]]:
        """Matrix of y -> self*y on the power basis (columns are images)."""
        n = self.field.degree
        cols = []
        for j in range(n):
            img = (self.poly * Polynomial.x() ** j) % self.field.modulus
            cols.append([img[i] for i in range(n)])
        return [[cols[j][i] for j in range(n)] for i in range(n)]

    def minpoly(self) -> Polynomial:
        """Primitive integer minimal polynomial of the value over Q."""
        if self.is_rational():
            return Polynomial((-self.poly[0], 1)).primitive()
        return char_poly_of(self.multiplication_matrix()).squarefree().primitive()

    def to_algebraic_real(self) -> AlgebraicReal:
        m = self.minpoly()
        if m.degree == 1:
            return AlgebraicReal.from_rational(self.poly[0] if self.is_rational() else -m[0] / m[1])
        seq = m.sturm_sequence()
        width = Fraction(1, 2**10)
        while True:
            lo, hi = self.enclosure(width)
            if m(lo) != 0 and m(hi) != 0 and count_roots(seq, lo, hi) == 1:
                return AlgebraicReal(m, lo, hi)
            width /= 2**8

    def to_str(self) -> str:
        return self.poly.to_str(self.field.name).replace(" ", "")

    def __str__(self):
        if self.is_rational():
            return str(self.poly[0])
        return f"{self.to_str()} where {self.field.describe()}"

    def __repr__(self):
        return f"FieldElement({self})"


def common_field(values) -> NumberField | None:
    """The single field of the irrational FieldElements among ``values``."""
    field = None
    for v in values:
        if isinstance(v, FieldElement) and not v.is_rational():
            if field is None:
                field = v.field
            elif not (v.field is field or v.field == field):
                raise MixedFields("values lie in different number fields")
    return field
