"""Simplex maps in matrix dimension d >= 3.

Dimension d means d x d matrices acting on points (x_1, ..., x_{d-1})
of the simplex 1 >= x_1 >= ... >= x_{d-1} >= 0.  At d = 3 everything
coincides with the TRIP maps of :mod:`tripmaps.engine`, which already
works in any dimension; this module adds the closed forms, duplicate
detection and counting that only make sense across dimensions.
"""

from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction

from .engine import (
    DEFAULT_ONES_CAP,
    PermTriple,
    TripMap,
    a0_matrix,
    a1_matrix,
    apply_row_matrix,
    build_trip_map,
    check_point,
    promote_point,
    trip_sequence,
    triangle_function_matrix,
)
from .errors import DimensionMismatch, DimensionTooSmall, PointOutsideRegion
from .exact.field import NumberField
from .exact.perm import Permutation
from .exact.poly import Polynomial


def build_nd(d: int, triple="(e,e,e)") -> TripMap:
    """The simplex map of a triple in S_d^3 (text triples are read at degree d)."""
    if d < 3:
        raise DimensionTooSmall(f"matrix dimension {d} < 3")
    if isinstance(triple, str):
        triple = PermTriple.parse(triple, d)
    m = build_trip_map(triple)
    if m.dim != d:
        raise DimensionMismatch(f"triple has degree {m.dim}, expected {d}")
    return m


def simplex_apply(m: TripMap, k: int, point, check: bool = False) -> tuple:
    """pi((1, x) (B M_0^-1 M_1^-k B^-1)^T); membership in region k is checked only on request."""
    if check:
        from .engine import first_digit

        found = first_digit(point, m, ones_cap=k + 1)
        if found != k:
            raise PointOutsideRegion(f"point has index {found}, not {k}")
    return apply_row_matrix(point, triangle_function_matrix(m, k))


def simplex_sequence(point, m: TripMap, terms: int, ones_cap: int = DEFAULT_ONES_CAP):
    """Region indices of the orbit; a TripSequence carrying the termination marker."""
    return trip_sequence(point, m, terms, ones_cap)


def eee_closed_form(point) -> tuple:
    """S_(e,e,e) as (x_2/x_1, ..., x_{n}/x_1, (1 - x_1 - k x_n)/x_1) with k = floor((1 - x_1)/x_n)."""
    x = promote_point(point)
    k = math.floor((1 - x[0]) / x[-1])
    return tuple(v / x[0] for v in x[1:]) + ((1 - x[0] - k * x[-1]) / x[0],)


def eee_index(point) -> int:
    x = promote_point(point)
    return math.floor((1 - x[0]) / x[-1])


def same_algorithm(m1, m2) -> bool:
    """Whether two triples give identical M_0 and M_1."""
    m1, m2 = build_trip_map(m1), build_trip_map(m2)
    if m1.dim != m2.dim:
        raise DimensionMismatch(f"dimensions {m1.dim} and {m2.dim} differ")
    return m1.f0 == m2.f0 and m1.f1 == m2.f1


def unique_count_bound(n: int) -> int:
    """(n+1)!^3 / (n-1)! for simplex dimension n (matrix dimension n + 1)."""
    if n < 2:
        raise ValueError("simplex dimension must be >= 2")
    return math.factorial(n + 1) ** 3 // math.factorial(n - 1)


@dataclass(frozen=True)
class Stabilizer:
    sigma: Permutation
    tau0: Permutation
    tau1: Permutation
    fixes_a0: bool
    fixes_a1: bool


def _shifted(s: Permutation) -> Permutation:
    """i -> s(i+1) - 1 on 1..d-2, with d-1 and d fixed."""
    d = s.degree
    images = [s(i + 1) - 1 for i in range(1, d - 1)] + [d - 1, d]
    return Permutation(tuple(images))


def stabilizer_construction(d: int) -> list[Stabilizer]:
    """For every sigma' fixing 1 and d, permutations with sigma' A_0 tau_0' = A_0 and sigma' A_1 tau_1' = A_1.

    tau_1' is sigma'^-1.  tau_0' moves the middle indices down by one,
    following how A_0 shifts columns; both candidates (the shifted
    permutation and its inverse) are tried and the result is checked by
    matrix equality.
    """
    if d < 3:
        raise DimensionTooSmall(f"matrix dimension {d} < 3")
    a0, a1 = a0_matrix(d), a1_matrix(d)
    out = []
    for s in Permutation.all(d):
        if s(1) != 1 or s(d) != d:
            continue
        ps = s.matrix()
        tau1 = s.inverse()
        cand = _shifted(s)
        tau0 = next((t for t in (cand, cand.inverse()) if ps @ a0 @ t.matrix() == a0), cand)
        out.append(Stabilizer(s, tau0, tau1, ps @ a0 @ tau0.matrix() == a0, ps @ a1 @ tau1.matrix() == a1))
    return out


@dataclass(frozen=True)
class DuplicateReport:
    dim: int
    triples: int
    classes: int
    largest_class: int
    bound: int


def duplicate_classes(d: int) -> DuplicateReport:
    """Group all of S_d^3 by the matrix pair (M_0, M_1)."""
    groups = defaultdict(int)
    perms = Permutation.all(d)
    a0, a1 = a0_matrix(d), a1_matrix(d)
    mats = {p: p.matrix() for p in perms}
    total = 0
    for s in perms:
        left0, left1 = mats[s] @ a0, mats[s] @ a1
        m0s = [(left0 @ mats[t]).rows for t in perms]
        m1s = [(left1 @ mats[t]).rows for t in perms]
        for m0 in m0s:
            for m1 in m1s:
                groups[(m0, m1)] += 1
                total += 1
    return DuplicateReport(d, total, len(groups), max(groups.values()), unique_count_bound(d - 1))


def period_one_point(d: int, k: int):
    """(a, a^2, ..., a^{d-1}) with a^d + k a^{d-1} + a - 1 = 0 and 0 < a < 1."""
    coeffs = [Fraction(0)] * (d + 1)
    coeffs[0], coeffs[1], coeffs[d - 1], coeffs[d] = Fraction(-1), Fraction(1), Fraction(k), Fraction(1)
    poly = Polynomial(tuple(coeffs))
    field = NumberField.from_polynomial(poly, 0, 1)
    a = field.gen()
    return tuple(a**i for i in range(1, d))


def period_one_holds(d: int, k: int) -> bool:
    """Whether the period-one point is fixed by region k and has index sequence (k, k, k)."""
    m = build_nd(d)
    p = period_one_point(d, k)
    check_point(p, d)
    return simplex_apply(m, k, p) == p and simplex_sequence(p, m, 3).digits == (k, k, k)
