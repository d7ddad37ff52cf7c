"""Text grammars: rationals, polynomials, permutation triples, points, words.

Polynomials and point coordinates share one small expression language:
integers, names, ``+ - * / ^``, parentheses and implicit multiplication
("2a", "3(x+1)").
"""

from __future__ import annotations

import re
from fractions import Fraction

from ..errors import ParseError
from .poly import Polynomial

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_]\w*)|(\*\*|[-+*/^()]))")


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad rational {text!r}") from exc


def _tokenize(text: str):
    pos, out = 0, []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos : pos + 1]!r} in {text!r}")
        num, name, op = m.groups()
        if num is not None:
            out.append(("num", int(num)))
        elif name is not None:
            out.append(("name", name))
        else:
            out.append(("op", "^" if op == "**" else op))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, text: str, env: dict, lift):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0
        self.env = env
        self.lift = lift

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def run(self):
        if not self.toks:
            raise ParseError("empty expression")
        val = self.expr()
        if self.i != len(self.toks):
            raise ParseError(f"trailing input in {self.text!r}")
        return val

    def expr(self):
        val = self.term()
        while self.peek() in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            rhs = self.term()
            val = val + rhs if op == "+" else val - rhs
        return val

    def term(self):
        val = self.unary()
        while True:
            kind, v = self.peek()
            if (kind, v) in (("op", "*"), ("op", "/")):
                self.take()
                rhs = self.unary()
                if v == "*":
                    val = val * rhs
                else:
                    val = self._divide(val, rhs)
            elif kind in ("num", "name") or (kind, v) == ("op", "("):
                val = val * self.power()
            else:
                return val

    def _divide(self, a, b):
        if isinstance(b, Polynomial):
            if b.degree != 0:
                raise ParseError(f"division by a non-constant polynomial in {self.text!r}")
            b = b[0]
        try:
            return a / b if not isinstance(a, Polynomial) else a * (1 / Fraction(b))
        except ZeroDivisionError as exc:
            raise ParseError(f"division by zero in {self.text!r}") from exc

    def unary(self):
        if self.peek() == ("op", "-"):
            self.take()
            return -self.unary()
        if self.peek() == ("op", "+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            neg = False
            if self.peek() == ("op", "-"):
                self.take()
                neg = True
            kind, n = self.take()
            if kind != "num":
                raise ParseError(f"exponent must be an integer in {self.text!r}")
            if neg:
                if isinstance(base, Polynomial):
                    raise ParseError(f"negative exponent in polynomial {self.text!r}")
                try:
                    return 1 / base**n
                except ZeroDivisionError as exc:
                    raise ParseError(f"division by zero in {self.text!r}") from exc
            return base**n
        return base

    def atom(self):
        kind, v = self.take()
        if kind == "num":
            return self.lift(v)
        if kind == "name":
            if v not in self.env:
                raise ParseError(f"unknown name {v!r} in {self.text!r}")
            return self.env[v]
        if (kind, v) == ("op", "("):
            val = self.expr()
            if self.take() != ("op", ")"):
                raise ParseError(f"missing ')' in {self.text!r}")
            return val
        raise ParseError(f"unexpected token {v!r} in {self.text!r}")


def evaluate(text: str, env: dict | None = None, lift=Fraction):
    """Evaluate an expression with the given name bindings."""
    return _Parser(text, env or {}, lift).run()


def parse_polynomial(text: str, var: str | None = None) -> Polynomial:
    """Read e.g. "x^3+x-1"; the variable is the single name used (default x)."""
    names = {v for k, v in _tokenize(text) if k == "name"}
    if var is None:
        if len(names) > 1:
            raise ParseError(f"polynomial {text!r} uses several variables {sorted(names)}")
        var = names.pop() if names else "x"
    val = evaluate(text, {var: Polynomial.x()}, lift=lambda n: Polynomial((n,)))
    return val if isinstance(val, Polynomial) else Polynomial((val,))


def split_top_level(text: str, sep: str = ",") -> list[str]:
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
            if depth < 0:
                raise ParseError(f"unbalanced brackets in {text!r}")
        if ch == sep and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    if depth != 0:
        raise ParseError(f"unbalanced brackets in {text!r}")
    parts.append("".join(cur))
    return [p.strip() for p in parts]


def _strip_outer(text: str) -> str:
    s = text.strip()
    if s.startswith("(") and s.endswith(")"):
        depth = 0
        for i, ch in enumerate(s):
            depth += ch == "("
            depth -= ch == ")"
            if depth == 0 and i < len(s) - 1:
                return s
        return s[1:-1]
    return s


def parse_triple(text: str, degree: int | None = None):
    """Read "(e,(1 3 2),(2 3))"; one-line entries must be bracketed, "[1,3,2]"."""
    from ..engine import PermTriple
    from .perm import parse_permutation

    parts = split_top_level(_strip_outer(text))
    if len(parts) != 3:
        raise ParseError(f"a triple needs three permutations, got {len(parts)} in {text!r}")
    if degree is None:
        degree = max([3] + [parse_permutation(p).degree for p in parts])
    perms = [parse_permutation(p, degree) for p in parts]
    return PermTriple(*perms)


_ALG = re.compile(r"^\s*alg\s*\((?P<poly>[^;]*);(?P<lo>[^,]*),(?P<hi>[^)]*)\)\s*\[(?P<coords>.*)\]\s*$")


def parse_point(text: str) -> tuple:
    """Read "3/7,2/7" or "alg(x^3+x-1; 0,1)[a, a^2]".

    In the algebraic form the generator is the root of the polynomial in
    the closed interval and is written ``a`` inside the brackets.
    """
    m = _ALG.match(text)
    if m:
        from .field import NumberField

        poly = parse_polynomial(m["poly"])
        lo, hi = parse_rational(m["lo"]), parse_rational(m["hi"])
        try:
            field = NumberField.from_polynomial(poly, lo, hi)
        except ValueError as exc:
            raise ParseError(str(exc)) from exc
        env = {"a": field.gen()}
        coords = tuple(evaluate(c, env, lift=field.rational) for c in split_top_level(m["coords"]))
        if all(c.is_rational() for c in coords):
            return tuple(c.rational_value() for c in coords)
        return coords
    if "alg" in text:
        raise ParseError(f"malformed algebraic point {text!r}")
    return tuple(evaluate(c) for c in split_top_level(text))


def parse_bits(text: str) -> tuple[int, ...]:
    """Read a bit word "1,0", "1 0" or "10"."""
    s = text.strip()
    parts = [t for t in re.split(r"[\s,]+", s) if t]
    if len(parts) == 1 and len(parts[0]) > 1:
        parts = list(parts[0])
    if not all(t in ("0", "1") for t in parts):
        raise ParseError(f"bad bit word {text!r}")
    return tuple(int(t) for t in parts)


def parse_digits(text: str) -> tuple[int, ...]:
    """Read a comma or space separated list of nonnegative integers."""
    parts = [t for t in re.split(r"[\s,]+", text.strip()) if t]
    if not parts or not all(t.isdigit() for t in parts):
        raise ParseError(f"bad digit list {text!r}")
    return tuple(int(t) for t in parts)
