"""Periodic words: eigenvectors, segment vs point verdicts, catalogs, ratio bounds.

Two matrix forms appear here.  The subdivision form of a word is the
product W = F_{i_0} ... F_{i_l}; its columns, after multiplying by B,
are the vertices of the word's triangle.  The map form
(B W^-1 B^-1)^T acts on homogeneous rows and undoes the subdivision.
A row eigenvector p of the map form with eigenvalue mu corresponds to
the column eigenvector B^-1 p^T of W with eigenvalue 1/mu.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

from .engine import (
    DEFAULT_ONES_CAP,
    PermTriple,
    Termination,
    TripMap,
    Walker,
    build_trip_map,
    map_form,
    trip_to_tree,
    word_matrix,
)
from .errors import NotReduced, PeriodNotDetected, RepeatedEigenvalueUnresolved
from .exact.algebraic import AlgebraicReal, algebraic_compare, isolate_real_roots
from .exact.factor import factorization
from .exact.field import FieldElement, NumberField
from .exact.matrix import IntMatrix
from .exact.perm import Permutation
from .exact.poly import Polynomial, char_poly


@dataclass(frozen=True)
class PeriodicWord:
    """A bit word: ``preperiod`` once, then ``period`` forever."""

    period: tuple[int, ...]
    preperiod: tuple[int, ...] = ()

    def __post_init__(self):
        period = tuple(int(b) for b in self.period)
        pre = tuple(int(b) for b in self.preperiod)
        if not period:
            raise ValueError("the period of a periodic word cannot be empty")
        if any(b not in (0, 1) for b in period + pre):
            raise ValueError("words are made of bits 0 and 1")
        object.__setattr__(self, "period", period)
        object.__setattr__(self, "preperiod", pre)

    @classmethod
    def from_trip(cls, period, preperiod=()) -> "PeriodicWord":
        """Periodic word from trip digits, e.g. (1, 2) -> period (1, 0, 1, 1, 0)."""
        return cls(trip_to_tree(period), trip_to_tree(preperiod))

    @property
    def is_degenerate(self) -> bool:
        """All 0s or all 1s."""
        return len(set(self.period)) == 1

    def prefix(self, periods: int) -> tuple[int, ...]:
        return self.preperiod + self.period * periods

    def __str__(self) -> str:
        body = ",".join(map(str, self.period))
        pre = ",".join(map(str, self.preperiod))
        return f"{pre};({body})" if pre else f"({body})"


def _as_word(word) -> PeriodicWord:
    return word if isinstance(word, PeriodicWord) else PeriodicWord(tuple(word))


def periodic_matrix(m, word, form: str = "subdivision") -> IntMatrix:
    """Product of F's over one period; ``form="map"`` gives (B W^-1 B^-1)^T."""
    m = build_trip_map(m)
    w = word_matrix(m, _as_word(word).period)
    if form == "subdivision":
        return w
    if form == "map":
        return map_form(m, w)
    raise ValueError(f"unknown matrix form {form!r}")


# ------------------------------------------------------------ eigenvectors


def _nullspace(rows):
    """Basis of {v : rows @ v = 0} over a field (entries support + - * / and == 0)."""
    a = [list(r) for r in rows]
    n_rows, n_cols = len(a), len(a[0])
    pivots, r = [], 0
    for col in range(n_cols):
        piv = next((i for i in range(r, n_rows) if a[i][col] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][col]
        a[r] = [x * inv for x in a[r]]
        for i in range(n_rows):
            if i != r and a[i][col] != 0:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(col)
        r += 1
        if r == n_rows:
            break
    free = [c for c in range(n_cols) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * n_cols
        v[fc] = 1
        for i, pc in enumerate(pivots):
            v[pc] = -a[i][fc]
        basis.append(v)
    return basis


def _plain(v):
    if isinstance(v, FieldElement) and v.is_rational():
        return v.rational_value()
    if isinstance(v, int):
        return Fraction(v)
    return v


def _in_closed_triangle(p) -> bool:
    chain = (Fraction(1),) + tuple(p) + (Fraction(0),)
    return all(a >= b for a, b in zip(chain, chain[1:]))


@dataclass(frozen=True)
class EigenWitness:
    """A real eigenvalue of a map-form matrix with a row eigenvector.

    ``vector`` has first coordinate 1 when that is possible; ``point`` is
    then its affine part, otherwise None.
    """

    eigenvalue: AlgebraicReal
    field: NumberField
    vector: tuple
    in_closed_triangle: bool
    point: tuple | None
    multiplicity: int = 1

    def residual_is_zero(self, mat: IntMatrix) -> bool:
        lam = self.field.gen()
        return all(a == lam * b for a, b in zip(mat.row_times(self.vector), self.vector))


def _normalize_vector(v):
    lead = next(x for x in v if x != 0)
    first = v[0]
    scale = first if first != 0 else lead
    return tuple(_plain(x / scale) for x in v)


def _make_witness(lam: AlgebraicReal, field: NumberField, v, mult: int) -> EigenWitness:
    vec = _normalize_vector(v)
    if vec[0] == 1:
        point = vec[1:]
        inside = _in_closed_triangle(point)
    else:
        point, inside = None, False
    return EigenWitness(lam, field, vec, inside, point, mult)


@dataclass(frozen=True)
class Eigenspace:
    eigenvalue: AlgebraicReal
    field: NumberField
    basis: tuple
    multiplicity: int


def eigenspaces(mat: IntMatrix) -> list[Eigenspace]:
    """Every real eigenvalue with a basis of its row eigenspace over Q(eigenvalue)."""
    d = mat.dim
    spaces = []
    for f, mult in factorization(char_poly(mat)):
        for root in isolate_real_roots(f):
            k = NumberField(root, name="t")
            lam = k.gen()
            rows = [[k(mat[j, i]) - (lam if i == j else 0) for j in range(d)] for i in range(d)]
            basis = tuple(tuple(_plain(x) for x in v) for v in _nullspace(rows))
            spaces.append(Eigenspace(k.generator, k, basis, mult))
    return spaces


def eigen_in_triangle(mat: IntMatrix) -> list[EigenWitness]:
    """One witness per real eigenvalue; multidimensional eigenspaces are reported, not guessed."""
    out = []
    for sp in eigenspaces(mat):
        if len(sp.basis) != 1:
            raise RepeatedEigenvalueUnresolved(
                f"eigenvalue {sp.eigenvalue} has a {len(sp.basis)}-dimensional eigenspace",
                sp.eigenvalue,
                sp.basis,
            )
        out.append(_make_witness(sp.eigenvalue, sp.field, sp.basis[0], sp.multiplicity))
    return out


def _cone_rays(space: Eigenspace, b_inv: IntMatrix) -> list[tuple]:
    """Extreme rays of (2-dimensional rational eigenspace) meeting the closed triangle cone."""
    b1, b2 = space.basis
    al = b_inv.times_column(b1)
    be = b_inv.times_column(b2)
    rays = []
    for ai, bi in zip(al, be):
        if ai == 0 and bi == 0:
            continue
        for s, t in ((-bi, ai), (bi, -ai)):
            if all(aj * s + bj * t >= 0 for aj, bj in zip(al, be)):
                v = tuple(s * x + t * y for x, y in zip(b1, b2))
                if any(x != 0 for x in v):
                    rays.append(v)
    return rays


# ----------------------------------------------------------- classification


class Verdict(str, Enum):
    UNIQUE_POINT = "UniquePoint"
    LINE_SEGMENT = "LineSegment"
    DEGENERATE_EDGE = "DegenerateEdge"
    UNDETERMINED = "Undetermined"


_EDGE_NAMES = {
    0: "right edge x = 1 (v2-v3)",
    1: "diagonal edge x = y (v1-v3)",
    2: "lower edge y = 0 (v1-v2)",
}


def _barycentric(point) -> tuple:
    chain = (Fraction(1),) + tuple(point)
    return tuple(a - b for a, b in zip(chain, chain[1:])) + (chain[-1],)


def _shared_edge(p, q) -> str | None:
    cp, cq = _barycentric(p), _barycentric(q)
    for i in range(len(cp)):
        if cp[i] == 0 and cq[i] == 0:
            return _EDGE_NAMES.get(i, f"facet {i + 1}")
    return None


@dataclass(frozen=True)
class Classification:
    verdict: Verdict
    witnesses: tuple[EigenWitness, ...] = ()
    edge: str | None = None
    evidence: dict = field(default_factory=dict, compare=False)


def _dominant(witness: EigenWitness, spaces: list[Eigenspace], mat: IntMatrix) -> bool:
    """Whether 1/mu is strictly the largest eigenvalue in modulus of the subdivision matrix.

    In map form this asks for |mu| strictly below every other root.
    """
    if witness.multiplicity != 1:
        return False
    mu = witness.eigenvalue
    abs_mu = abs(mu)
    n_real = sum(sp.multiplicity for sp in spaces)
    for sp in spaces:
        if sp.eigenvalue is mu:
            continue
        if algebraic_compare(abs(sp.eigenvalue), abs_mu) <= 0:
            return False
    missing = mat.dim - n_real
    if missing == 0:
        return True
    if mat.dim == 3 and missing == 2:
        # one real root and a conjugate pair with |pair|^2 = |det| / |mu|
        return algebraic_compare(abs_mu, 1) < 0 if abs(mat.det()) == 1 else False
    return False


def classify_word(m, word, square: bool = True) -> Classification:
    """Segment or unique point for the nested triangles of a periodic word.

    The preperiod is dropped.  The squared period matrix (or the period
    matrix itself with ``square=False``) is examined for eigenvectors in
    the closed triangle.
    """
    m = build_trip_map(m)
    word = _as_word(word)
    w = word_matrix(m, word.period)
    w2 = w @ w if square else w
    mat = map_form(m, w2)
    spaces = eigenspaces(mat)
    evidence = {
        "period_matrix": w,
        "examined_matrix": w2,
        "map_form": mat,
        "char_poly": char_poly(mat),
        "notes": [],
    }
    witnesses, rational_points = [], []
    unresolved = False
    for sp in spaces:
        if len(sp.basis) == 1:
            wit = _make_witness(sp.eigenvalue, sp.field, sp.basis[0], sp.multiplicity)
            if wit.in_closed_triangle:
                witnesses.append(wit)
        elif len(sp.basis) == 2 and sp.field.degree == 1:
            for ray in _cone_rays(sp, m.b_inv):
                wit = _make_witness(sp.eigenvalue, sp.field, ray, sp.multiplicity)
                if wit.in_closed_triangle and wit.point not in rational_points:
                    rational_points.append(wit.point)
                    witnesses.append(wit)
            evidence["notes"].append(f"eigenvalue {sp.eigenvalue} has a 2-dimensional eigenspace")
        else:
            unresolved = True
            evidence["notes"].append(f"eigenvalue {sp.eigenvalue} has a {len(sp.basis)}-dimensional eigenspace")
    distinct = []
    for wit in witnesses:
        if all(wit.point != other.point for other in distinct):
            distinct.append(wit)
    result = _verdict(distinct, unresolved, spaces, mat, evidence)
    if word.is_degenerate and result.verdict in (Verdict.UNIQUE_POINT, Verdict.UNDETERMINED):
        where = _locate(result.witnesses[0].point) if len(result.witnesses) == 1 else None
        if where == "interior" and result.verdict is Verdict.UNIQUE_POINT:
            return result
        evidence["notes"].append("constant period: the nested triangles close down on part of the boundary")
        return Classification(Verdict.DEGENERATE_EDGE, result.witnesses, where, evidence)
    return result


def _locate(point) -> str:
    """Name the vertex or edge of the closed triangle holding a boundary point."""
    verts = {(Fraction(0),) * len(point): "vertex v1"}
    for j in range(1, len(point) + 1):
        verts[(Fraction(1),) * j + (Fraction(0),) * (len(point) - j)] = f"vertex v{j + 1}"
    if point in verts:
        return verts[point]
    c = _barycentric(point)
    for i, ci in enumerate(c):
        if ci == 0:
            return _EDGE_NAMES.get(i, f"facet {i + 1}")
    return "interior"


def _verdict(distinct, unresolved, spaces, mat, evidence) -> Classification:
    if len(distinct) >= 2:
        p, q = distinct[0], distinct[1]
        return Classification(Verdict.LINE_SEGMENT, (p, q), _shared_edge(p.point, q.point), evidence)
    if len(distinct) == 1 and not unresolved:
        wit = distinct[0]
        if _dominant(wit, spaces, mat):
            return Classification(Verdict.UNIQUE_POINT, (wit,), None, evidence)
        evidence["notes"].append("the only closed-triangle eigenvector is not strictly dominant")
        return Classification(Verdict.UNDETERMINED, (wit,), None, evidence)
    if not distinct:
        evidence["notes"].append("no eigenvector in the closed triangle")
    return Classification(Verdict.UNDETERMINED, tuple(distinct), None, evidence)


def minimal_polynomial_of_point(witness: EigenWitness) -> tuple[Polynomial, ...]:
    """Minimal polynomial over Q of each affine coordinate of the witness."""
    if witness.point is None:
        raise ValueError("witness has no affine point")
    out = []
    for x in witness.point:
        if isinstance(x, FieldElement):
            out.append(x.minpoly())
        else:
            out.append(Polynomial((-Fraction(x), 1)).primitive())
    return tuple(out)


def triangle_diameter_sq(m, word, periods: int) -> Fraction:
    """Exact squared diameter of the projected triangle after ``periods`` periods."""
    from .engine import projected_vertices, word_triangle

    m = build_trip_map(m)
    word = _as_word(word)
    pts = projected_vertices(word_triangle(m, word.prefix(periods)))
    best = Fraction(0)
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            best = max(best, sum((a - b) ** 2 for a, b in zip(pts[i], pts[j])))
    return best


# ------------------------------------------------------------- catalogs

_NON_UNIQUE_TEXT = {
    (0,): ["(12)|e", "(12)|(12)", "(12)|(23)", "(12)|(132)", "(12)|(123)", "(12)|(13)"],
    (1,): ["(123)|(13)", "e|(13)", "(132)|(13)", "(23)|(13)", "(13)|(13)"],
    (0, 1): ["e|(23)", "e|(12)", "(23)|(123)", "(123)|e"],
    (0, 0, 0, 1): ["(13)|(123)", "(13)|(23)"],
    (0, 1, 1, 0): ["e|(123)", "(13)|e", "(13)|(12)"],
    (1, 0, 0): ["(132)|(12)"],
    (1, 1, 0): ["(123)|(12)", "(13)|(132)"],
    (1, 1, 1, 0): ["(23)|(12)"],
    (1, 1, 0, 0, 1, 0): ["e|(132)"],
    (0, 0, 1, 1, 0, 1): ["(132)|(123)"],
}

_UNIQUE_TEXT = [
    "e|e",
    "(123)|(123)",
    "(23)|e",
    "(123)|(23)",
    "(23)|(23)",
    "(23)|(132)",
    "(132)|(23)",
    "(132)|(132)",
    "(132)|e",
    "(123)|(132)",
]


def _key(text: str) -> PermTriple:
    t0, t1 = text.split("|")
    e = Permutation.identity(3)
    return PermTriple(e, Permutation.parse(t0, 3), Permutation.parse(t1, 3))


NON_UNIQUE: dict[PermTriple, PeriodicWord] = {
    _key(t): PeriodicWord(word) for word, triples in _NON_UNIQUE_TEXT.items() for t in triples
}
UNIQUE: frozenset[PermTriple] = frozenset(_key(t) for t in _UNIQUE_TEXT)


class CatalogVerdict(str, Enum):
    NON_UNIQUE = "NonUnique"
    UNIQUE = "Unique"
    OUTSIDE = "OutsideCatalog"


@dataclass(frozen=True)
class CatalogEntry:
    verdict: CatalogVerdict
    witness: PeriodicWord | None = None


def catalog_lookup(t) -> CatalogEntry:
    """Known verdict for a triple with sigma = e, with a witness word for non-unique ones."""
    t = t.triple if isinstance(t, TripMap) else t
    if isinstance(t, str):
        t = PermTriple.parse(t)
    if not t.sigma.is_identity():
        raise NotReduced(f"{t} has sigma != e; call reduce_triple first")
    if t in NON_UNIQUE:
        return CatalogEntry(CatalogVerdict.NON_UNIQUE, NON_UNIQUE[t])
    if t in UNIQUE:
        return CatalogEntry(CatalogVerdict.UNIQUE)
    return CatalogEntry(CatalogVerdict.OUTSIDE)


def reduce_triple(t) -> tuple[PermTriple, Permutation]:
    """(sigma, tau0, tau1) -> ((e, tau0 sigma, tau1 sigma), rho = sigma^-1).

    The reduced matrices are the originals conjugated by P(sigma):
    F'_i = P(sigma)^-1 F_i P(sigma).
    """
    t = t.triple if isinstance(t, TripMap) else t
    if isinstance(t, str):
        t = PermTriple.parse(t)
    s = t.sigma
    e = Permutation.identity(t.degree)
    return PermTriple(e, t.tau0 * s, t.tau1 * s), s.inverse()


def conjugation_check(t, depth: int = 3) -> bool:
    """Verify the reduced triple subdivides like the original after relabeling vertices.

    For every word w up to ``depth``: B F'_w = L B F_w P(sigma) with
    L = B P(sigma)^-1 B^-1, i.e. the same triangles moved by a fixed
    projective symmetry of the domain.
    """
    import itertools

    t = t.triple if isinstance(t, TripMap) else t
    if isinstance(t, str):
        t = PermTriple.parse(t)
    red, _rho = reduce_triple(t)
    m, mr = build_trip_map(t), build_trip_map(red)
    p = t.sigma.matrix()
    if mr.f0 != p.inverse() @ m.f0 @ p or mr.f1 != p.inverse() @ m.f1 @ p:
        return False
    lift = m.b @ p.inverse() @ m.b_inv
    for n in range(depth + 1):
        for word in itertools.product((0, 1), repeat=n):
            if mr.b @ word_matrix(mr, word) != lift @ m.b @ word_matrix(m, word) @ p:
                return False
    return True


def catalog_verdict(t) -> CatalogEntry:
    """Catalog verdict of any degree-3 triple, via its reduction."""
    red, _ = reduce_triple(t)
    return catalog_lookup(red)


# ------------------------------------------------------------ ratio bound


@dataclass(frozen=True)
class RatioReport:
    """Largest ratio between first-row entries of the vertex matrix.

    ``max_ratio_seen`` covers the checkpoints (the start and the end of
    every period); ``max_ratio_all_depths`` covers every bit.
    """

    bound: Fraction
    horizon: int
    max_ratio_seen: Fraction
    max_ratio_all_depths: Fraction
    satisfied: bool
    first_violation_step: int | None
    steps: int


def _row_ratio(row) -> Fraction:
    return Fraction(max(row), min(row))


def ratio_bound_check(m, word, bound, periods: int, max_steps: int | None = None) -> RatioReport:
    """Track first-row ratios of B F_w along ``periods`` periods of the word.

    ``first_violation_step`` is the first bit count at which any ratio
    exceeded the bound.  ``max_steps`` stops early once that many bits
    have been applied.
    """
    m = build_trip_map(m)
    word = _as_word(word)
    bound = Fraction(bound)
    v = m.b
    steps = 0
    checkpoint = all_depths = _row_ratio(v.rows[0])
    first_violation = 0 if all_depths > bound else None

    def advance(bit):
        nonlocal v, steps, all_depths, first_violation
        v = v @ m.f(bit)
        steps += 1
        r = _row_ratio(v.rows[0])
        if r > all_depths:
            all_depths = r
        if first_violation is None and r > bound:
            first_violation = steps
        return r

    for bit in word.preperiod:
        advance(bit)
    done = 0
    for _ in range(periods):
        r = None
        for bit in word.period:
            if max_steps is not None and steps >= max_steps:
                break
            r = advance(bit)
        else:
            done += 1
            checkpoint = max(checkpoint, r)
            continue
        break
    return RatioReport(bound, done, checkpoint, all_depths, checkpoint <= bound, first_violation, steps)


# ------------------------------------------------------ orbit periodicity


@dataclass(frozen=True)
class OrbitPeriod:
    preperiod: int
    period: int
    digits: tuple[int, ...]


def detect_orbit_periodicity(point, m, max_steps: int, ones_cap: int = DEFAULT_ONES_CAP) -> OrbitPeriod:
    """Least (preperiod, period) with T^(s+p)(x) = T^s(x) exactly."""
    m = build_trip_map(m)
    w = Walker(point, m, ones_cap)
    seen = {w.point: 0}
    digits = []
    for step in range(1, max_steps + 1):
        k = w.next_digit()
        if k is None or (w.termination is not None and w.termination != Termination.TRUNCATED):
            raise PeriodNotDetected(
                f"orbit terminated after {step - 1 if k is None else step} steps", w.termination, step
            )
        digits.append(k)
        if w.point in seen:
            start = seen[w.point]
            return OrbitPeriod(start, step - start, tuple(digits))
        seen[w.point] = step
    raise PeriodNotDetected(f"no recurrence within {max_steps} steps", None, max_steps)
