"""Classical piecewise maps and their combo counterparts.

Each map is written directly from its piecewise formula.  Cases are
tried in the listed order, so a point on a shared boundary takes the
first case whose non-strict inequality it satisfies.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

from .combo import TERMINAL, ComboNode, ComboSchedule, combo_step
from .engine import a0_matrix, a1_matrix, b_matrix, check_point, promote_point
from .errors import PointOutsideDomain
from .exact.matrix import IntMatrix
from .exact.perm import Permutation


class ClassicalMapId(str, Enum):
    MONKEMEYER = "monkemeyer"
    BRUN = "brun"
    FULLY_SUBTRACTIVE = "fully-subtractive"
    GUTING = "guting"

    @classmethod
    def parse(cls, text: str) -> "ClassicalMapId":
        key = text.strip().lower().replace("_", "-").replace("ö", "o").replace("ü", "u")
        aliases = {
            "monkemeyer": cls.MONKEMEYER,
            "brun": cls.BRUN,
            "fully-subtractive": cls.FULLY_SUBTRACTIVE,
            "fullysubtractive": cls.FULLY_SUBTRACTIVE,
            "guting": cls.GUTING,
        }
        if key not in aliases:
            raise ValueError(f"unknown classical map {text!r}")
        return aliases[key]


@dataclass(frozen=True)
class GutingDigits:
    a: int
    b: int


@dataclass(frozen=True)
class ClassicalStep:
    image: tuple
    case: int
    digits: GutingDigits | None = None


def guting_digits(x: Fraction, y: Fraction) -> GutingDigits:
    """a >= 1 with 1-ax >= 0 > 1-(a+1)x, then b >= 0 with 1-ax-by >= 0 > 1-ax-(b+1)y."""
    if x <= 0 or y <= 0:
        raise PointOutsideDomain("Guting digits need x > 0 and y > 0")
    a = (1 / x).__floor__()
    r = 1 - a * x
    b = (r / y).__floor__()
    return GutingDigits(a, b)


def classical_step(map_id, point) -> ClassicalStep:
    """One step of a classical map; ``case`` is the 0-based index of the formula used."""
    map_id = ClassicalMapId.parse(map_id) if isinstance(map_id, str) else map_id
    x, y = check_point(point, 3)
    if map_id is ClassicalMapId.MONKEMEYER:
        if x + y <= 1:
            return ClassicalStep((x / (1 - y), (x - y) / (1 - y)), 0)
        return ClassicalStep(((1 - y) / x, (x - y) / x), 1)
    if map_id is ClassicalMapId.BRUN:
        if x + y <= 1 and x <= Fraction(1, 2):
            return ClassicalStep((x / (1 - x), y / (1 - x)), 0)
        if x + y <= 1 and x >= Fraction(1, 2):
            return ClassicalStep(((1 - x) / x, y / x), 1)
        return ClassicalStep((y / x, (1 - x) / x), 2)
    if map_id is ClassicalMapId.FULLY_SUBTRACTIVE:
        if y >= Fraction(1, 2):
            return ClassicalStep(((1 - y) / y, (x - y) / y), 0)
        if x - 2 * y <= 0:
            return ClassicalStep((y / (1 - y), (x - y) / (1 - y)), 1)
        return ClassicalStep(((x - y) / (1 - y), y / (1 - y)), 2)
    d = guting_digits(x, y)
    return ClassicalStep((y / x, (1 - d.a * x - d.b * y) / x), 0, d)


def _node(text, on0=TERMINAL, on1=TERMINAL, label=""):
    from .engine import build_trip_map

    return ComboNode(build_trip_map(text), on0, on1, label=label or text)


def builtin_combo(map_id) -> ComboSchedule:
    """The one-step decision tree reproducing a classical map.

    Brun and the fully subtractive map first split with one TRIP map and
    split the F_1 child again with ((2 3),(1 3 2),(2 3)).  The Monkemeyer
    map is a single split by (e,(1 3 2),(2 3)); iterating its F_1 side
    until an F_0 step gives the TRIP map of that triple.
    """
    map_id = ClassicalMapId.parse(map_id) if isinstance(map_id, str) else map_id
    if map_id is ClassicalMapId.MONKEMEYER:
        return ComboSchedule((_node("(e,(1 3 2),(2 3))"),), "monkemeyer")
    second = _node("((2 3),(1 3 2),(2 3))")
    if map_id is ClassicalMapId.BRUN:
        return ComboSchedule((_node("(e,e,e)", TERMINAL, second),), "brun")
    if map_id is ClassicalMapId.FULLY_SUBTRACTIVE:
        return ComboSchedule((_node("((1 2 3),e,e)", TERMINAL, second),), "fully-subtractive")
    raise ValueError("the Guting map is not a partition combo; see guting_matrix_identity")


def guting_matrix(a: int, b: int) -> IntMatrix:
    """[B A0^-1 A1^-b (A1 P(2 3))^(-2(a-1)) B^-1]^T."""
    bm, a0, a1 = b_matrix(3), a0_matrix(3), a1_matrix(3)
    swap = Permutation.parse("(2 3)", 3).matrix()
    return (bm @ a0.inverse() @ (a1**-b) @ ((a1 @ swap) ** (-2 * (a - 1))) @ bm.inverse()).T


def guting_matrix_identity(a: int, b: int) -> bool:
    """Whether the matrix above equals [[0,0,1],[1,0,-a],[0,1,-b]]."""
    if a < 1 or b < 0:
        raise ValueError("need a >= 1 and b >= 0")
    return guting_matrix(a, b) == IntMatrix.of([[0, 0, 1], [1, 0, -a], [0, 1, -b]])


def random_interior_point(rng: random.Random, max_den: int = 60) -> tuple[Fraction, Fraction]:
    """A random rational point with 1 > x > y > 0."""
    while True:
        q = rng.randint(3, max_den)
        a, b = sorted(rng.sample(range(1, q), 2))
        x, y = Fraction(b, q), Fraction(a, q)
        if 1 > x > y > 0:
            return x, y


def _on_region_boundary(map_id, x, y) -> bool:
    half = Fraction(1, 2)
    if map_id is ClassicalMapId.MONKEMEYER:
        return x + y == 1
    if map_id is ClassicalMapId.BRUN:
        return x + y == 1 or x == half
    if map_id is ClassicalMapId.FULLY_SUBTRACTIVE:
        return x == 2 * y or y == half
    a, b = guting_digits(x, y).a, guting_digits(x, y).b
    return 1 - a * x == 0 or 1 - a * x - b * y == 0


@dataclass
class EquivalenceReport:
    map: str
    samples: int
    seed: int
    mismatches: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.mismatches


def verify_equivalence(map_id, samples: int, seed: int = 0) -> EquivalenceReport:
    """Compare the classical step with its combo (or, for Guting, its matrix) on random points.

    Points on region boundaries are skipped, as both sides of a
    boundary are valid readings of the piecewise definitions.
    """
    map_id = ClassicalMapId.parse(map_id) if isinstance(map_id, str) else map_id
    if samples < 1:
        raise ValueError("samples must be >= 1")
    rng = random.Random(seed)
    report = EquivalenceReport(map_id.value, samples, seed)
    schedule = None if map_id is ClassicalMapId.GUTING else builtin_combo(map_id)
    done = 0
    while done < samples:
        x, y = random_interior_point(rng)
        if _on_region_boundary(map_id, x, y):
            continue
        done += 1
        step = classical_step(map_id, (x, y))
        if schedule is None:
            d = step.digits
            from .engine import apply_row_matrix

            other = apply_row_matrix((x, y), guting_matrix(d.a, d.b))
            extra = {}
        else:
            other, path, k, leaf = combo_step((x, y), schedule.rules[0])
            extra = {"path": path}
        if other != step.image:
            report.mismatches.append({"point": (x, y), "classical": step.image, "combo": other, **extra})
    return report


def region_index_from_combo(map_id, point) -> tuple[int, ...]:
    """The combo's descent path for a point (identifies the region it used)."""
    schedule = builtin_combo(map_id)
    return combo_step(promote_point(point), schedule.rules[0])[1]
