"""TRIP maps: construction, subdivision, tree and trip sequences.

Everything here works in any matrix dimension d >= 3.  A point is the
tuple of its affine coordinates (x_1, ..., x_{d-1}); its homogeneous
row is (1, x_1, ..., x_{d-1}).  The half-open domain is
1 >= x_1 >= ... >= x_{d-1} > 0.

Vertex matrices hold vertices as columns.  ``B`` is the all-ones upper
triangular matrix, whose columns v_1, ..., v_d are the vertices of the
whole domain.  A word i_0 i_1 ... i_n picks the triangle
``B @ F_{i_0} @ ... @ F_{i_n}``.

Points are tracked through the subdivision by their coordinates with
respect to the current vertex matrix.  Descending to child ``F`` maps
those coordinates ``c`` to ``F^-1 c``, and the child contains the point
exactly when every coordinate stays nonnegative.  The F_1 child is
tested first, so points on the shared face go to the F_1 side.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

from .errors import (
    DegenerateTriangle,
    MalformedPrefix,
    PointOutsideDomain,
    PointOutsideRegion,
    ZeroLeadingCoordinate,
)
from .exact.field import FieldElement, common_field
from .exact.matrix import IntMatrix
from .exact.perm import Permutation

DEFAULT_ONES_CAP = 10_000


def a0_matrix(d: int = 3) -> IntMatrix:
    """Columns e_2, ..., e_d, e_1 + e_d: vertices become (v_2, ..., v_d, v_1 + v_d)."""
    rows = [[0] * d for _ in range(d)]
    for j in range(d - 1):
        rows[j + 1][j] = 1
    rows[0][d - 1] = 1
    rows[d - 1][d - 1] = 1
    return IntMatrix.of(rows)


def a1_matrix(d: int = 3) -> IntMatrix:
    """Identity plus a 1 in the top-right corner: (v_1, ..., v_{d-1}, v_1 + v_d)."""
    rows = [[int(i == j) for j in range(d)] for i in range(d)]
    rows[0][d - 1] = 1
    return IntMatrix.of(rows)


def b_matrix(d: int = 3) -> IntMatrix:
    """Upper triangular ones; column j is the vertex (1, ..., 1, 0, ..., 0) with j+1 ones."""
    return IntMatrix.of([[int(i <= j) for j in range(d)] for i in range(d)])


@dataclass(frozen=True, order=True)
class PermTriple:
    """A permutation triple (sigma, tau0, tau1) of a common degree."""

    sigma: Permutation
    tau0: Permutation
    tau1: Permutation

    def __post_init__(self):
        if not self.sigma.degree == self.tau0.degree == self.tau1.degree:
            raise ValueError("triple entries must share a degree")

    @classmethod
    def parse(cls, text: str, degree: int | None = None) -> "PermTriple":
        from .exact.parse import parse_triple

        return parse_triple(text, degree)

    @classmethod
    def identity(cls, degree: int = 3) -> "PermTriple":
        e = Permutation.identity(degree)
        return cls(e, e, e)

    @classmethod
    def all(cls, degree: int = 3) -> list["PermTriple"]:
        perms = Permutation.all(degree)
        return [cls(*t) for t in itertools.product(perms, repeat=3)]

    @property
    def degree(self) -> int:
        return self.sigma.degree

    def __iter__(self):
        return iter((self.sigma, self.tau0, self.tau1))

    def __str__(self) -> str:
        return f"({self.sigma},{self.tau0},{self.tau1})"


@dataclass(frozen=True)
class TripMap:
    """A triple with its matrices F_0 = sigma A_0 tau_0 and F_1 = sigma A_1 tau_1."""

    triple: PermTriple
    f0: IntMatrix
    f1: IntMatrix
    f0_inv: IntMatrix = field(repr=False, compare=False)
    f1_inv: IntMatrix = field(repr=False, compare=False)
    b: IntMatrix = field(repr=False, compare=False)
    b_inv: IntMatrix = field(repr=False, compare=False)

    @classmethod
    def of(cls, triple) -> "TripMap":
        return build_trip_map(triple)

    @property
    def dim(self) -> int:
        return self.f0.dim

    def f(self, bit: int) -> IntMatrix:
        return self.f1 if bit else self.f0

    def f_inv(self, bit: int) -> IntMatrix:
        return self.f1_inv if bit else self.f0_inv

    def __str__(self) -> str:
        return str(self.triple)


def build_trip_map(t) -> TripMap:
    """Derive F_0 and F_1 from a triple (a PermTriple or its text form)."""
    if isinstance(t, TripMap):
        return t
    if isinstance(t, str):
        t = PermTriple.parse(t)
    d = t.degree
    if d < 3:
        from .errors import DimensionTooSmall

        raise DimensionTooSmall(f"matrix dimension {d} < 3")
    s = t.sigma.matrix()
    f0 = s @ a0_matrix(d) @ t.tau0.matrix()
    f1 = s @ a1_matrix(d) @ t.tau1.matrix()
    b = b_matrix(d)
    return TripMap(t, f0, f1, f0.inverse(), f1.inverse(), b, b.inverse())


def enumerate_family(degree: int = 3) -> list[TripMap]:
    """All triples of the given degree, lexicographic in one-line notation."""
    return [build_trip_map(t) for t in PermTriple.all(degree)]


# ---------------------------------------------------------------- geometry


def subdivide(vertices: IntMatrix, bit: int, m: TripMap) -> IntMatrix:
    """The child triangle: the vertex matrix times F_bit."""
    return vertices @ m.f(bit)


def word_matrix(m: TripMap, word) -> IntMatrix:
    """F_{i_0} F_{i_1} ... F_{i_n} for a bit word."""
    out = IntMatrix.identity(m.dim)
    for bit in word:
        out = out @ m.f(bit)
    return out


def word_triangle(m: TripMap, word, base: IntMatrix | None = None) -> IntMatrix:
    """Vertex matrix of the triangle indexed by ``word``, starting from ``base`` (default B)."""
    return (m.b if base is None else base) @ word_matrix(m, word)


def subtriangle(m: TripMap, k: int) -> IntMatrix:
    """Vertex matrix B F_1^k F_0 of the region whose trip digit is k."""
    return m.b @ (m.f1**k) @ m.f0


def projected_vertices(vertices: IntMatrix) -> list[tuple[Fraction, ...]]:
    """Affine coordinates of each vertex column."""
    out = []
    for j in range(vertices.dim):
        col = vertices.column(j)
        if col[0] == 0:
            raise ZeroLeadingCoordinate(f"vertex {j + 1} has zero first coordinate")
        out.append(tuple(Fraction(x, col[0]) for x in col[1:]))
    return out


class Membership(str, Enum):
    INSIDE = "Inside"
    ON_BOUNDARY = "OnSharedBoundary"
    OUTSIDE = "Outside"


@dataclass(frozen=True)
class MembershipResult:
    verdict: Membership
    barycentric: tuple


def membership(point, vertices: IntMatrix) -> MembershipResult:
    """Locate a point relative to a triangle given by its vertex columns.

    The barycentric coordinates are affine (they sum to 1), so a vertex
    gets a single coordinate equal to 1.
    """
    p = promote_point(point)
    hom = (Fraction(1),) + p
    if len(hom) != vertices.dim:
        raise ValueError("point and triangle dimensions differ")
    try:
        inv = vertices.rational_inverse()
    except ZeroDivisionError as exc:
        raise DegenerateTriangle("vertex matrix is singular") from exc
    c = tuple(_sum(a * x for a, x in zip(row, hom)) for row in inv)
    weights = tuple(ci * vertices[0, j] for j, ci in enumerate(c))
    total = _sum(weights)
    bary = tuple(w / total for w in weights)
    if any(b < 0 for b in bary):
        verdict = Membership.OUTSIDE
    elif any(b == 0 for b in bary):
        verdict = Membership.ON_BOUNDARY
    else:
        verdict = Membership.INSIDE
    return MembershipResult(verdict, bary)


def _sum(terms):
    it = iter(terms)
    total = next(it)
    for t in it:
        total = total + t
    return total


# ------------------------------------------------------------ point handling


def promote_point(point) -> tuple:
    """Exact coordinates: ints become Fractions, rational field elements become Fractions."""
    out = []
    for v in point:
        if isinstance(v, bool) or not isinstance(v, (int, Fraction, FieldElement)):
            raise TypeError(f"coordinates must be exact (int, Fraction, FieldElement), got {type(v).__name__}")
        if isinstance(v, int):
            v = Fraction(v)
        elif isinstance(v, FieldElement) and v.is_rational():
            v = v.rational_value()
        out.append(v)
    common_field(out)
    return tuple(out)


def in_domain(point) -> bool:
    """1 >= x_1 >= ... >= x_n > 0."""
    chain = (Fraction(1),) + tuple(point)
    return all(a >= b for a, b in zip(chain, chain[1:])) and chain[-1] > 0


def check_point(point, dim: int) -> tuple:
    p = promote_point(point)
    if len(p) != dim - 1:
        raise PointOutsideDomain(f"expected {dim - 1} coordinates, got {len(p)}")
    if not in_domain(p):
        raise PointOutsideDomain(f"point {format_point(p)} is outside 1 >= x_1 >= ... >= x_n > 0")
    return p


def normalize(hom) -> tuple:
    """Affine coordinates of a homogeneous vector."""
    lead = hom[0]
    if lead == 0:
        raise ZeroLeadingCoordinate("first coordinate is zero")
    return tuple(_simplify(h / lead) for h in hom[1:])


def _simplify(v):
    if isinstance(v, FieldElement) and v.is_rational():
        return v.rational_value()
    return v


def format_point(p) -> str:
    return "(" + ", ".join(str(x) if not isinstance(x, FieldElement) else x.to_str() for x in p) + ")"


# ------------------------------------------------------------------ descent


def _nonneg_image(inv: IntMatrix, c):
    """inv @ c if every entry is >= 0, else None (stops at the first negative)."""
    out = []
    for row in inv.rows:
        v = _sum(a * x for a, x in zip(row, c) if a)
        if v < 0:
            return None
        out.append(v)
    return tuple(out)


def choose_child(c, m: TripMap) -> tuple[int, tuple]:
    """Pick the child holding local coordinates ``c``; ties go to F_1."""
    c1 = _nonneg_image(m.f1_inv, c)
    if c1 is not None:
        return 1, c1
    c0 = _nonneg_image(m.f0_inv, c)
    if c0 is not None:
        return 0, c0
    raise PointOutsideDomain("point lies in neither child")


class Termination(str, Enum):
    BOUNDARY_HIT = "BoundaryHit"
    INFINITE_ONES_TAIL = "InfiniteOnesTail"
    TRUNCATED = "Truncated"


class Walker:
    """Step-by-step descent of one point through the subdivision tree.

    After each 0-bit the point is replaced by its image under the
    triangle function, so ``point`` always holds the current orbit point.
    """

    def __init__(self, point, m: TripMap, ones_cap: int = DEFAULT_ONES_CAP, check: bool = True):
        self.m = m
        self.point = check_point(point, m.dim) if check else promote_point(point)
        self.c = m.b_inv.times_column((Fraction(1),) + self.point)
        self.ones = 0
        self.ones_cap = ones_cap
        self.termination: Termination | None = None

    def next_bit(self) -> int | None:
        if self.termination is not None:
            return None
        if self.ones >= self.ones_cap:
            self.termination = Termination.INFINITE_ONES_TAIL
            return None
        bit, self.c = choose_child(self.c, self.m)
        if bit:
            self.ones += 1
            return 1
        self.ones = 0
        self.point = normalize(self.m.b.times_column(self.c))
        self.c = self.m.b_inv.times_column((Fraction(1),) + self.point)
        if self.point[-1] == 0:
            self.termination = Termination.BOUNDARY_HIT
        return 0

    def next_digit(self) -> int | None:
        """Run to the end of the current 1^k 0 block and return k."""
        k = 0
        while True:
            bit = self.next_bit()
            if bit is None:
                return None
            if bit == 0:
                return k
            k += 1


@dataclass(frozen=True)
class TreeSequence:
    bits: tuple[int, ...]
    termination: Termination | None = None

    def __iter__(self):
        return iter(self.bits)

    def __len__(self):
        return len(self.bits)


@dataclass(frozen=True)
class TripSequence:
    digits: tuple[int, ...]
    termination: Termination | None = None
    orbit: tuple = ()

    def __iter__(self):
        return iter(self.digits)

    def __len__(self):
        return len(self.digits)


def tree_sequence(point, m, depth: int, ones_cap: int = DEFAULT_ONES_CAP) -> TreeSequence:
    """The first ``depth`` bits of the tree sequence, with a termination marker.

    The marker is BoundaryHit or InfiniteOnesTail when the walk ended on
    its own, Truncated when it stopped at ``depth``.
    """
    m = build_trip_map(m)
    w = Walker(point, m, ones_cap)
    bits = []
    while len(bits) < depth:
        bit = w.next_bit()
        if bit is None:
            break
        bits.append(bit)
    term = w.termination
    if term is None and depth > 0:
        term = Termination.TRUNCATED
    return TreeSequence(tuple(bits), term)


def trip_sequence(point, m, terms: int, ones_cap: int = DEFAULT_ONES_CAP) -> TripSequence:
    """The first ``terms`` trip digits and the orbit points after each one."""
    m = build_trip_map(m)
    w = Walker(point, m, ones_cap)
    digits, orbit = [], []
    while len(digits) < terms:
        k = w.next_digit()
        if k is None:
            break
        digits.append(k)
        orbit.append(w.point)
        if w.termination is not None:
            break
    term = w.termination
    if term is None and terms > 0:
        term = Termination.TRUNCATED
    return TripSequence(tuple(digits), term, tuple(orbit))


def triangle_function_matrix(m, k: int) -> IntMatrix:
    """Map-form matrix (B F_0^-1 F_1^-k B^-1)^T acting on rows."""
    m = build_trip_map(m)
    return (m.b @ m.f0_inv @ (m.f1_inv**k) @ m.b_inv).T


def map_form(m, w: IntMatrix) -> IntMatrix:
    """Row-action matrix (B W^-1 B^-1)^T of the map undoing subdivision word matrix W."""
    m = build_trip_map(m)
    return (m.b @ w.inverse() @ m.b_inv).T


def apply_row_matrix(point, mat: IntMatrix) -> tuple:
    """normalize((1, *point) @ mat)."""
    hom = (Fraction(1),) + promote_point(point)
    return normalize(mat.row_times(hom))


def apply_bit_map(point, m, bit: int) -> tuple:
    """Undo a single subdivision: normalize(p @ (B F_bit^-1 B^-1)^T)."""
    m = build_trip_map(m)
    return apply_row_matrix(point, (m.b @ m.f_inv(bit) @ m.b_inv).T)


def first_digit(point, m, ones_cap: int = DEFAULT_ONES_CAP) -> int:
    m = build_trip_map(m)
    w = Walker(point, m, ones_cap)
    k = w.next_digit()
    if k is None:
        raise PointOutsideRegion("point has no trip digit (infinite run of 1-bits)")
    return k


def apply_triangle_function(point, m, k: int | None = None, check: bool = True) -> tuple:
    """T(p) on the region with digit k.

    With ``k=None`` the digit is found by descent.  With an explicit
    ``k`` and ``check=True`` the point must lie in that region;
    ``check=False`` applies the matrix regardless.
    """
    m = build_trip_map(m)
    if k is None:
        k = first_digit(point, m)
    elif check:
        found = first_digit(point, m, ones_cap=k + 1)
        if found != k:
            raise PointOutsideRegion(f"point has digit {found}, not {k}")
    return apply_row_matrix(point, triangle_function_matrix(m, k))


# ------------------------------------------------------------- conversions


def trip_to_tree(digits) -> tuple[int, ...]:
    """(a_0, a_1, ...) -> 1^{a_0} 0 1^{a_1} 0 ..."""
    bits = []
    for a in digits:
        if a < 0:
            raise ValueError("trip digits are nonnegative")
        bits.extend([1] * a)
        bits.append(0)
    return tuple(bits)


def tree_to_trip(bits) -> tuple[int, ...]:
    """Inverse of trip_to_tree; the prefix must end with a 0-bit."""
    digits, run = [], 0
    for b in bits:
        if b == 1:
            run += 1
        elif b == 0:
            digits.append(run)
            run = 0
        else:
            raise ValueError(f"not a bit: {b!r}")
    if run:
        raise MalformedPrefix(f"prefix ends inside a block of {run} 1-bits")
    return tuple(digits)


def convert_sequences(s):
    """TreeSequence <-> TripSequence, keeping the termination marker."""
    if isinstance(s, TreeSequence):
        return TripSequence(tree_to_trip(s.bits), s.termination)
    if isinstance(s, TripSequence):
        return TreeSequence(trip_to_tree(s.digits), s.termination)
    raise TypeError("expected a TreeSequence or TripSequence")
