"""Real algebraic numbers as (squarefree polynomial, isolating interval)."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..errors import ZeroPolynomial
from .poly import Polynomial, count_roots

DEFAULT_WIDTH = Fraction(1, 10**12)


def _split_point(p: Polynomial, lo: Fraction, hi: Fraction) -> Fraction:
    """A point strictly inside (lo, hi) that is not a root of p."""
    mid = (lo + hi) / 2
    step = (hi - lo) / 3
    while p(mid) == 0:
        step /= 2
        mid = (lo + hi) / 2 + step
    return mid


@dataclass(frozen=True, eq=False)
class AlgebraicReal:
    """The unique root of ``minpoly`` inside ``[lo, hi]``.

    ``minpoly`` is squarefree with integer coefficients; neither endpoint
    is a root.  Refinement returns new values.
    """

    minpoly: Polynomial
    lo: Fraction
    hi: Fraction

    __hash__ = None

    def __post_init__(self):
        p = self.minpoly
        if not isinstance(p, Polynomial):
            p = Polynomial(tuple(p))
        if p.is_zero():
            raise ZeroPolynomial("algebraic number needs a nonzero polynomial")
        object.__setattr__(self, "minpoly", p.squarefree().primitive())
        object.__setattr__(self, "lo", Fraction(self.lo))
        object.__setattr__(self, "hi", Fraction(self.hi))

    @classmethod
    def from_interval(cls, poly: Polynomial, lo, hi) -> "AlgebraicReal":
        """The root of ``poly`` in the closed interval; it must be unique there."""
        q = poly.squarefree().primitive()
        lo, hi = Fraction(lo), Fraction(hi)
        if lo > hi:
            raise ValueError("empty interval")
        inside = count_roots(q.sturm_sequence(), lo, hi) + (q(lo) == 0)
        if inside != 1:
            raise ValueError(f"{q} has {inside} roots in [{lo}, {hi}], expected exactly one")
        for end in (lo, hi):
            if q(end) == 0:
                return cls.from_rational(end)
        return cls(q, lo, hi)

    @classmethod
    def from_rational(cls, r) -> "AlgebraicReal":
        r = Fraction(r)
        return cls(Polynomial((-r, 1)), r - 1, r + 1)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def bisect(self) -> "AlgebraicReal":
        p = self.minpoly
        mid = (self.lo + self.hi) / 2
        sm = p.sign_at(mid)
        if sm == 0:
            q = self.width / 4
            return AlgebraicReal(p, mid - q, mid + q)
        if sm == p.sign_at(self.lo):
            return AlgebraicReal(p, mid, self.hi)
        return AlgebraicReal(p, self.lo, mid)

    def refine(self, width=DEFAULT_WIDTH) -> "AlgebraicReal":
        """A copy whose interval is no wider than ``width``."""
        width = Fraction(width)
        a = self
        while a.width > width:
            a = a.bisect()
        return a

    def rational_value(self) -> Fraction | None:
        """The value when it is rational, else None."""
        for den_root in _rational_root_candidates(self.minpoly, self.lo, self.hi):
            return den_root
        return None

    def approx(self, width=DEFAULT_WIDTH) -> Fraction:
        a = self.refine(width)
        return (a.lo + a.hi) / 2

    def __float__(self) -> float:
        return float(self.approx(Fraction(1, 2**60)))

    def compare(self, other) -> int:
        return algebraic_compare(self, other)

    def sign(self) -> int:
        return algebraic_compare(self, Fraction(0))

    def __eq__(self, other):
        try:
            return algebraic_compare(self, other) == 0
        except TypeError:
            return NotImplemented

    def __lt__(self, other):
        return algebraic_compare(self, other) < 0

    def __le__(self, other):
        return algebraic_compare(self, other) <= 0

    def __gt__(self, other):
        return algebraic_compare(self, other) > 0

    def __ge__(self, other):
        return algebraic_compare(self, other) >= 0

    def __neg__(self) -> "AlgebraicReal":
        return AlgebraicReal(self.minpoly.shift_scale(-1, 0), -self.hi, -self.lo)

    def __abs__(self) -> "AlgebraicReal":
        return -self if self.sign() < 0 else self

    def to_str(self) -> str:
        return f"{self.minpoly.to_str('x').replace(' ', '')} in ({self.lo},{self.hi})"

    def __str__(self) -> str:
        return self.to_str()

    def __repr__(self) -> str:
        return f"AlgebraicReal({self.to_str()})"


def _rational_root_candidates(p: Polynomial, lo: Fraction, hi: Fraction):
    """Rational roots of p inside [lo, hi], via the linear factors of p."""
    from .factor import irreducible_factors

    for f in irreducible_factors(p):
        if f.degree == 1:
            r = -f[0] / f[1]
            if lo <= r <= hi:
                yield r


def isolate_real_roots(p: Polynomial) -> list[AlgebraicReal]:
    """One AlgebraicReal per distinct real root of p, in ascending order."""
    if p.is_zero():
        raise ZeroPolynomial("cannot isolate roots of the zero polynomial")
    q = p.squarefree().primitive()
    if q.degree < 1:
        return []
    seq = q.sturm_sequence()
    bound = q.cauchy_bound()
    stack = [(-bound, bound)]
    found = []
    while stack:
        lo, hi = stack.pop()
        n = count_roots(seq, lo, hi)
        if n == 0:
            continue
        if n == 1:
            found.append((lo, hi))
            continue
        mid = _split_point(q, lo, hi)
        stack.append((lo, mid))
        stack.append((mid, hi))
    found.sort()
    # tighten to unit width so intervals read naturally, e.g. (0,1)
    return [AlgebraicReal(q, lo, hi).refine(1) for lo, hi in found]


def _as_algebraic(x) -> AlgebraicReal:
    if isinstance(x, AlgebraicReal):
        return x
    if isinstance(x, (int, Fraction)):
        return AlgebraicReal.from_rational(x)
    to_real = getattr(x, "to_algebraic_real", None)
    if to_real is None:
        raise TypeError(f"cannot compare {type(x).__name__} as an algebraic real")
    return to_real()


def _compare_rational(a: AlgebraicReal, q: Fraction) -> int:
    if q < a.lo:
        return 1
    if q > a.hi:
        return -1
    p = a.minpoly
    sq = p.sign_at(q)
    if sq == 0:
        return 0
    # root lies in (lo, q) exactly when the sign changes there
    return -1 if p.sign_at(a.lo) != sq else 1


def algebraic_compare(a, b) -> int:
    """Exact sign of a - b for rationals, AlgebraicReals and field elements."""
    if isinstance(a, (int, Fraction)) and isinstance(b, (int, Fraction)):
        return (a > b) - (a < b)
    sub = getattr(a, "_compare_same_field", None)
    if sub is not None:
        res = sub(b)
        if res is not None:
            return res
    sub = getattr(b, "_compare_same_field", None)
    if sub is not None:
        res = sub(a)
        if res is not None:
            return -res
    if isinstance(b, (int, Fraction)):
        return _compare_rational(_as_algebraic(a), Fraction(b))
    if isinstance(a, (int, Fraction)):
        return -_compare_rational(_as_algebraic(b), Fraction(a))
    a, b = _as_algebraic(a), _as_algebraic(b)
    g = a.minpoly.gcd(b.minpoly)
    lo, hi = max(a.lo, b.lo), min(a.hi, b.hi)
    if g.degree >= 1 and lo <= hi:
        # an endpoint of either interval is never a root of g, so (lo, hi] is exact
        if count_roots(g.sturm_sequence(), lo, hi) > 0:
            return 0
    while True:
        if a.hi < b.lo:
            return -1
        if b.hi < a.lo:
            return 1
        a, b = a.bisect(), b.bisect()
