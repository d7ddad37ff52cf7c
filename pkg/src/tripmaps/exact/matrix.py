"""Square integer matrices with exact products, powers and inverses."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..errors import NonUnimodular


@dataclass(frozen=True)
class IntMatrix:
    """Immutable square matrix of Python ints, stored row-major."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.rows)
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise ValueError("IntMatrix must be square and nonempty")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def of(cls, rows) -> "IntMatrix":
        return cls(tuple(tuple(r) for r in rows))

    @classmethod
    def identity(cls, d: int) -> "IntMatrix":
        return cls(tuple(tuple(int(i == j) for j in range(d)) for i in range(d)))

    @property
    def dim(self) -> int:
        return len(self.rows)

    def __getitem__(self, idx):
        if isinstance(idx, tuple):
            i, j = idx
            return self.rows[i][j]
        return self.rows[idx]

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(r[j] for r in self.rows)

    @property
    def T(self) -> "IntMatrix":
        return IntMatrix(tuple(zip(*self.rows)))

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if not isinstance(other, IntMatrix):
            return NotImplemented
        if other.dim != self.dim:
            raise ValueError("dimension mismatch")
        cols = list(zip(*other.rows))
        return IntMatrix(tuple(tuple(sum(a * b for a, b in zip(r, c)) for c in cols) for r in self.rows))

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        return IntMatrix(tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)))

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        return IntMatrix(tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)))

    def __neg__(self) -> "IntMatrix":
        return IntMatrix(tuple(tuple(-a for a in r) for r in self.rows))

    def scale(self, c: int) -> "IntMatrix":
        return IntMatrix(tuple(tuple(c * a for a in r) for r in self.rows))

    def __pow__(self, n: int) -> "IntMatrix":
        base = self if n >= 0 else self.inverse()
        n = abs(n)
        result = IntMatrix.identity(self.dim)
        while n:
            if n & 1:
                result = result @ base
            base = base @ base
            n >>= 1
        return result

    def trace(self) -> int:
        return sum(self.rows[i][i] for i in range(self.dim))

    def det(self) -> int:
        """Determinant by fraction-free Bareiss elimination."""
        a = [list(r) for r in self.rows]
        n, sign, prev = self.dim, 1, 1
        for k in range(n - 1):
            if a[k][k] == 0:
                swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
                if swap is None:
                    return 0
                a[k], a[swap] = a[swap], a[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            prev = a[k][k]
        return sign * a[n - 1][n - 1]

    def rational_inverse(self) -> list[list[Fraction]]:
        """Inverse over Q by Gauss-Jordan; raises ZeroDivisionError if singular."""
        n = self.dim
        a = [[Fraction(x) for x in r] + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(self.rows)]
        for col in range(n):
            piv = next((i for i in range(col, n) if a[i][col] != 0), None)
            if piv is None:
                raise ZeroDivisionError("singular matrix")
            a[col], a[piv] = a[piv], a[col]
            p = a[col][col]
            a[col] = [x / p for x in a[col]]
            for i in range(n):
                if i != col and a[i][col] != 0:
                    f = a[i][col]
                    a[i] = [x - f * y for x, y in zip(a[i], a[col])]
        return [r[n:] for r in a]

    def inverse(self) -> "IntMatrix":
        """Exact integer inverse of a unimodular matrix."""
        if abs(self.det()) != 1:
            raise NonUnimodular(f"determinant {self.det()} is not +-1")
        inv = self.rational_inverse()
        return IntMatrix(tuple(tuple(int(x) for x in r) for r in inv))

    def is_unimodular(self) -> bool:
        return abs(self.det()) == 1

    def row_times(self, v):
        """Row vector ``v`` times this matrix, for any scalar type."""
        n = self.dim
        return tuple(_dot(v[i] * self.rows[i][j] for i in range(n)) for j in range(n))

    def times_column(self, v):
        """This matrix times column vector ``v``, for any scalar type."""
        return tuple(_dot(a * x for a, x in zip(r, v)) for r in self.rows)

    def char_poly(self):
        from .poly import char_poly

        return char_poly(self)

    def __str__(self) -> str:
        return "[" + ",".join("[" + ",".join(str(x) for x in r) + "]" for r in self.rows) + "]"

    def __repr__(self) -> str:
        return f"IntMatrix({self.tolist()})"


def _dot(terms):
    it = iter(terms)
    total = next(it)
    for t in it:
        total = total + t
    return total
