"""Permutations of {1, ..., d} and their column-permutation matrices.

Composition reads left to right: ``(s * t)(i) == t(s(i))``.  With the
matrix convention ``P[i][p(i)] = 1`` this makes ``perm_to_matrix`` a
homomorphism, ``P(s * t) == P(s) @ P(t)``.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass

from ..errors import ParseError
from .matrix import IntMatrix


@dataclass(frozen=True, order=True)
class Permutation:
    """A bijection of {1..d}, stored as its 1-based image list."""

    images: tuple[int, ...]

    def __post_init__(self):
        imgs = tuple(int(i) for i in self.images)
        if sorted(imgs) != list(range(1, len(imgs) + 1)):
            raise ValueError(f"not a permutation of 1..{len(imgs)}: {imgs}")
        object.__setattr__(self, "images", imgs)

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(tuple(range(1, degree + 1)))

    @classmethod
    def from_cycles(cls, cycles, degree: int) -> "Permutation":
        imgs = list(range(1, degree + 1))
        seen = set()
        for cyc in cycles:
            cyc = [int(c) for c in cyc]
            for c in cyc:
                if not 1 <= c <= degree or c in seen:
                    raise ValueError(f"bad cycle {cyc} for degree {degree}")
                seen.add(c)
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                imgs[a - 1] = b
        return cls(tuple(imgs))

    @classmethod
    def parse(cls, text: str, degree: int | None = None) -> "Permutation":
        return parse_permutation(text, degree)

    @classmethod
    def all(cls, degree: int):
        """Every permutation of the given degree, lexicographic in one-line notation."""
        return [cls(p) for p in itertools.permutations(range(1, degree + 1))]

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if other.degree != self.degree:
            raise ValueError("degree mismatch")
        return Permutation(tuple(other(self(i)) for i in range(1, self.degree + 1)))

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for i, j in enumerate(self.images, start=1):
            inv[j - 1] = i
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return self.images == tuple(range(1, self.degree + 1))

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its smallest element."""
        out, seen = [], set()
        for start in range(1, self.degree + 1):
            if start in seen or self(start) == start:
                continue
            cyc, i = [], start
            while i not in seen:
                seen.add(i)
                cyc.append(i)
                i = self(i)
            out.append(tuple(cyc))
        return out

    def matrix(self) -> IntMatrix:
        return perm_to_matrix(self)

    def one_line(self) -> str:
        return ",".join(str(i) for i in self.images)

    def __str__(self) -> str:
        if self.is_identity():
            return "e"
        return "".join("(" + " ".join(str(c) for c in cyc) + ")" for cyc in self.cycles())

    def __repr__(self) -> str:
        return f"Permutation({str(self)!r}, degree={self.degree})"


def perm_to_matrix(p: Permutation) -> IntMatrix:
    """Column-permutation matrix with a 1 at (i, p(i)).

    Right-multiplying a vertex matrix by it moves column ``i`` to
    position ``p(i)``.
    """
    d = p.degree
    return IntMatrix(tuple(tuple(1 if j == p(i + 1) - 1 else 0 for j in range(d)) for i in range(d)))


_CYCLE = re.compile(r"\(([^()]*)\)")


def parse_permutation(text: str, degree: int | None = None) -> Permutation:
    """Read "e", cycle notation "(1 3 2)(4 5)" / "(132)", or one-line "1,3,2".

    Cycles without separators are read digit by digit.  The degree
    defaults to the largest point mentioned (at least 1) unless given.
    """
    s = text.strip()
    if not s:
        raise ParseError("empty permutation")
    try:
        if s in ("e", "id", "()"):
            return Permutation.identity(degree or 1)
        if s.startswith("["):
            s = s.strip("[]")
        if s.startswith("("):
            if _CYCLE.sub("", s).strip():
                raise ParseError(f"unexpected text in cycle notation: {text!r}")
            cycles = []
            for body in _CYCLE.findall(s):
                body = body.strip()
                if not body:
                    continue
                if re.fullmatch(r"\d+", body):
                    parts = list(body)
                else:
                    parts = [t for t in re.split(r"[\s,]+", body) if t]
                cycles.append([int(t) for t in parts])
            top = max((c for cyc in cycles for c in cyc), default=1)
            deg = degree if degree is not None else top
            if top > deg:
                raise ParseError(f"cycle point {top} exceeds degree {deg}")
            return Permutation.from_cycles(cycles, deg)
        parts = [int(t) for t in re.split(r"[\s,]+", s) if t]
        if degree is not None and len(parts) != degree:
            raise ParseError(f"one-line permutation {text!r} has degree {len(parts)}, expected {degree}")
        return Permutation(tuple(parts))
    except ParseError:
        raise
    except ValueError as exc:
        raise ParseError(f"bad permutation {text!r}: {exc}") from exc
