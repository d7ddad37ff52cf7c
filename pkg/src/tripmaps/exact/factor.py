"""Irreducible factorization over Q, delegated to sympy."""

from __future__ import annotations

from functools import lru_cache

from .poly import Polynomial


@lru_cache(maxsize=1024)
def _factor_int_coeffs(coeffs: tuple[int, ...]) -> tuple[tuple[tuple[int, ...], int], ...]:
    import sympy

    x = sympy.Symbol("x")
    expr = sum(c * x**i for i, c in enumerate(coeffs))
    _, factors = sympy.factor_list(sympy.Poly(expr, x, domain="ZZ"))
    out = []
    for f, mult in factors:
        out.append((tuple(int(c) for c in reversed(f.all_coeffs())), int(mult)))
    return tuple(sorted(out, key=lambda fm: (len(fm[0]), fm[0])))


def factorization(p: Polynomial) -> list[tuple[Polynomial, int]]:
    """Primitive irreducible factors with multiplicities, sorted by degree."""
    q = p.primitive()
    if q.degree < 1:
        return []
    return [(Polynomial(c).primitive(), mult) for c, mult in _factor_int_coeffs(q.int_coeffs())]


def irreducible_factors(p: Polynomial) -> list[Polynomial]:
    """Distinct primitive irreducible factors of a nonzero polynomial, sorted by degree."""
    return [f for f, _ in factorization(p)]
