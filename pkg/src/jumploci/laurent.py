"""Multivariate Laurent polynomials with rational coefficients.

A polynomial is a finitely supported map from exponent vectors in Z^n to
nonzero Fractions.  The same class serves ordinary polynomials (all
exponents nonnegative), e.g. the initial forms in z_1..z_n, and the
one-variable restrictions along curves (n = 1).

Text syntax: ``t1^2*t2^-1 - 3*t2 + 2``; parentheses, products and integer
powers of parenthesised sums are accepted as well.
"""

from __future__ import annotations

import itertools
import math
import re
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .exactlin import QQ, Field


class PolynomialSyntaxError(ValueError):
    pass


class LaurentPolynomial:
    __slots__ = ("n", "_terms", "var")

    def __init__(self, n: int, terms: Mapping[tuple, object] | Iterable = (), var: str = "t"):
        self.n = n
        self.var = var
        acc: dict[tuple, Fraction] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for e, c in items:
            e = tuple(int(x) for x in e)
            if len(e) != n:
                raise ValueError(f"exponent {e} has wrong length for {n} variables")
            acc[e] = acc.get(e, Fraction(0)) + Fraction(c)
        self._terms = {e: c for e, c in sorted(acc.items()) if c != 0}

    # -- constructors ---------------------------------------------------

    @classmethod
    def constant(cls, n: int, c, var: str = "t") -> "LaurentPolynomial":
        return cls(n, {(0,) * n: c}, var)

    @classmethod
    def monomial(cls, exponent: Sequence[int], c=1, var: str = "t") -> "LaurentPolynomial":
        return cls(len(exponent), {tuple(exponent): c}, var)

    @classmethod
    def gen(cls, n: int, j: int, var: str = "t") -> "LaurentPolynomial":
        """The variable with 0-based index ``j``."""
        e = [0] * n
        e[j] = 1
        return cls(n, {tuple(e): 1}, var)

    @classmethod
    def parse(cls, text: str, n: int | None = None, var: str = "t") -> "LaurentPolynomial":
        return _Parser(text, n, var).parse()

    # -- data -----------------------------------------------------------

    @property
    def terms(self) -> dict[tuple, Fraction]:
        return dict(self._terms)

    @property
    def support(self) -> list[tuple]:
        return list(self._terms)

    def items(self):
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPolynomial.constant(self.n, other)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    def __hash__(self):
        return hash((self.n, tuple(self._terms.items())))

    def __repr__(self):
        return f"LaurentPolynomial({self.n}, {self})"

    def with_var(self, var: str) -> "LaurentPolynomial":
        return LaurentPolynomial(self.n, self._terms, var)

    # -- arithmetic -----------------------------------------------------

    def _coerce(self, other) -> "LaurentPolynomial":
        if isinstance(other, LaurentPolynomial):
            if other.n != self.n:
                raise ValueError("variable count mismatch")
            return other
        return LaurentPolynomial.constant(self.n, other, self.var)

    def __add__(self, other):
        other = self._coerce(other)
        return LaurentPolynomial(self.n, list(self._terms.items()) + list(other._terms.items()), self.var)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial(self.n, {e: -c for e, c in self._terms.items()}, self.var)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        acc = []
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                acc.append((tuple(a + b for a, b in zip(e1, e2)), c1 * c2))
        return LaurentPolynomial(self.n, acc, self.var)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if len(self._terms) != 1:
                raise ValueError("only monomials have negative powers")
            (e, c), = self._terms.items()
            return LaurentPolynomial(self.n, {tuple(k * x for x in e): Fraction(1) / c ** (-k)}, self.var)
        out = LaurentPolynomial.constant(self.n, 1, self.var)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def shift(self, exponent: Sequence[int]) -> "LaurentPolynomial":
        """Multiply by the monomial t^exponent."""
        return LaurentPolynomial(
            self.n, {tuple(a + b for a, b in zip(e, exponent)): c for e, c in self._terms.items()}, self.var)

    def min_exponents(self) -> tuple[int, ...]:
        if not self._terms:
            return (0,) * self.n
        return tuple(min(e[j] for e in self._terms) for j in range(self.n))

    def normalize_monomial(self) -> "LaurentPolynomial":
        """Shift so every variable's minimal exponent is 0."""
        return self.shift([-m for m in self.min_exponents()])

    def total_degree(self) -> int:
        return max((sum(e) for e in self._terms), default=-1)

    def homogeneous_part(self, d: int) -> "LaurentPolynomial":
        return LaurentPolynomial(self.n, {e: c for e, c in self._terms.items() if sum(e) == d}, self.var)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self._terms}) <= 1

    def content_normalized(self) -> "LaurentPolynomial":
        """Divide by the content and make the leading (largest) term positive."""
        if not self._terms:
            return self
        cs = list(self._terms.values())
        num = 0
        den = 1
        for c in cs:
            num = math.gcd(num, c.numerator)
            den = den * c.denominator // math.gcd(den, c.denominator)
        g = Fraction(num, den)
        lead = cs[-1]
        if lead < 0:
            g = -g
        return LaurentPolynomial(self.n, {e: c / g for e, c in self._terms.items()}, self.var)

    # -- evaluation and substitution ------------------------------------

    def __call__(self, *point, field: Field = QQ):
        return evaluate(self, point, field)

    def substitute(self, images: Sequence["LaurentPolynomial"]) -> "LaurentPolynomial":
        """Replace the j-th variable by ``images[j]`` (all in a common ring)."""
        if len(images) != self.n:
            raise ValueError("need one image per variable")
        m = images[0].n if images else 0
        var = images[0].var if images else self.var
        out = LaurentPolynomial(m, {}, var)
        cache: dict = {}
        for e, c in self._terms.items():
            term = LaurentPolynomial.constant(m, c, var)
            for j, k in enumerate(e):
                if k:
                    key = (j, k)
                    if key not in cache:
                        cache[key] = images[j] ** k
                    term = term * cache[key]
            out = out + term
        return out

    def __str__(self):
        return format_polynomial(self)


def format_polynomial(f: LaurentPolynomial, var: str | None = None) -> str:
    var = var or f.var
    if f.is_zero():
        return "0"
    pieces = []
    for e, c in sorted(f.items(), key=lambda kv: (-sum(kv[0]), tuple(-x for x in kv[0]))):
        mono = []
        for j, k in enumerate(e):
            name = var if f.n == 1 and var == "u" else f"{var}{j + 1}"
            if k == 1:
                mono.append(name)
            elif k:
                mono.append(f"{name}^{k}")
        body = "*".join(mono)
        a = abs(c)
        coef = str(a)
        if body:
            s = body if a == 1 else f"{coef}*{body}"
        else:
            s = coef
        pieces.append(("-" if c < 0 else "+", s))
    out = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
    for sign, s in pieces[1:]:
        out += f" {sign} {s}"
    return out


# ------------------------------------------------------------------ parser

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z]+)(\d*)|(\^|\*|\+|-|/|\(|\)))")


class _Parser:
    def __init__(self, text, n, var):
        self.text = text
        self.var = var
        self.tokens = []
        bare = False
        pos = 0
        text = text.strip()
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if not m or m.end() == pos:
                raise PolynomialSyntaxError(f"unexpected character at column {pos + 1} in {text!r}")
            if m.group(1):
                self.tokens.append(("num", int(m.group(1))))
            elif m.group(2):
                name, idx = m.group(2), m.group(3)
                if name != var or (idx and int(idx) < 1):
                    raise PolynomialSyntaxError(f"unknown symbol {name + idx!r}; variables are {var}1, {var}2, ...")
                bare = bare or not idx
                self.tokens.append(("var", int(idx) - 1 if idx else 0))
            else:
                self.tokens.append(("op", m.group(4)))
            pos = m.end()
            while pos < len(text) and text[pos].isspace():
                pos += 1
        seen = [t[1] for t in self.tokens if t[0] == "var"]
        self.n = n if n is not None else (max(seen) + 1 if seen else 1)
        if seen and max(seen) >= self.n:
            raise PolynomialSyntaxError(f"{var}{max(seen) + 1} exceeds the {self.n} declared variables")
        if bare and self.n != 1:
            raise PolynomialSyntaxError(f"bare {var!r} is only allowed for one variable")
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None)

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def expect(self, op):
        tok = self.take()
        if tok != ("op", op):
            raise PolynomialSyntaxError(f"expected {op!r} in {self.text!r}")

    def parse(self):
        if not self.tokens:
            raise PolynomialSyntaxError("empty polynomial")
        out = self.expr()
        if self.i != len(self.tokens):
            raise PolynomialSyntaxError(f"trailing input in {self.text!r}")
        return out.with_var(self.var)

    def expr(self):
        sign = 1
        if self.peek() in (("op", "+"), ("op", "-")):
            sign = -1 if self.take()[1] == "-" else 1
        out = self.term() * sign
        while self.peek() in (("op", "+"), ("op", "-")):
            s = self.take()[1]
            t = self.term()
            out = out + t if s == "+" else out - t
        return out

    def term(self):
        out = self.power()
        while self.peek() in (("op", "*"), ("op", "/")):
            op = self.take()[1]
            rhs = self.power()
            if op == "*":
                out = out * rhs
            else:
                if len(rhs) != 1 or any(any(e) for e in rhs.support):
                    raise PolynomialSyntaxError("division only by nonzero constants")
                out = out * (Fraction(1) / next(iter(rhs.terms.values())))
        return out

    def power(self):
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            sign = 1
            if self.peek() in (("op", "-"), ("op", "+")):
                sign = -1 if self.take()[1] == "-" else 1
            kind, val = self.take()
            if kind != "num":
                raise PolynomialSyntaxError(f"exponent must be an integer in {self.text!r}")
            base = base ** (sign * val)
        return base

    def atom(self):
        kind, val = self.take()
        if kind == "num":
            return LaurentPolynomial.constant(self.n, val)
        if kind == "var":
            return LaurentPolynomial.gen(self.n, val)
        if (kind, val) == ("op", "("):
            out = self.expr()
            self.expect(")")
            return out
        if (kind, val) == ("op", "-"):
            return -self.power()
        if kind is None:
            raise PolynomialSyntaxError(f"unexpected end of input in {self.text!r}")
        raise PolynomialSyntaxError(f"unexpected token {val!r} in {self.text!r}")


# -------------------------------------------------------------- operations


def evaluate(f: LaurentPolynomial, point: Sequence, field: Field = QQ):
    """Exact value of ``f`` at a point of (k^×)^n."""
    if len(point) != f.n:
        raise ValueError(f"point has {len(point)} coordinates, polynomial has {f.n} variables")
    pt = [field(x) for x in point]
    for j, x in enumerate(pt):
        if field.is_zero(x):
            raise ZeroDivisionError(f"coordinate {j + 1} is zero")
    total = field(0)
    for e, c in f.items():
        val = field(c)
        for x, k in zip(pt, e):
            if k:
                val = val * field.power(x, k)
        total = total + val
    return field(total) if field.characteristic else total


def value_at_one(f: LaurentPolynomial) -> Fraction:
    return sum(f.terms.values(), Fraction(0))


def restrict_to_curve(f: LaurentPolynomial, z: Sequence[int]) -> LaurentPolynomial:
    """g(u) = f(u^z_1, ..., u^z_n) with like powers collected."""
    if len(z) != f.n:
        raise ValueError(f"direction has {len(z)} entries, expected {f.n}")
    z = [int(x) for x in z]
    return LaurentPolynomial(1, [((sum(a * b for a, b in zip(e, z)),), c) for e, c in f.items()], "u")


def shifted_initial_form(f: LaurentPolynomial) -> LaurentPolynomial:
    """Lowest-degree part of f(1 + z) after clearing negative exponents.

    The result is a homogeneous polynomial in z_1..z_n whose zero set is
    the tangent cone at 1 of the hypersurface V(f).
    """
    if f.is_zero():
        raise ValueError("zero polynomial has no initial form")
    if value_at_one(f) != 0:
        raise ValueError("f(1) != 0: the hypersurface misses 1")
    g = f.normalize_monomial()
    top = g.total_degree()
    for d in range(1, top + 1):
        acc: dict[tuple, Fraction] = {}
        for e, c in g.items():
            if sum(e) < d:
                continue
            for k in _bounded_compositions(d, e):
                coef = c
                for ej, kj in zip(e, k):
                    coef *= math.comb(ej, kj)
                acc[k] = acc.get(k, Fraction(0)) + coef
        part = LaurentPolynomial(f.n, acc, "z")
        if not part.is_zero():
            return part
    raise AssertionError("unreachable: nonzero polynomial with vanishing expansion")


def _bounded_compositions(d: int, bounds: Sequence[int]):
    """All k with 0 <= k_j <= bounds[j] and sum k = d."""
    n = len(bounds)
    if n == 0:
        if d == 0:
            yield ()
        return
    suffix = [0] * (n + 1)
    for j in range(n - 1, -1, -1):
        suffix[j] = suffix[j + 1] + bounds[j]

    def rec(j, left, acc):
        if j == n:
            if left == 0:
                yield tuple(acc)
            return
        for k in range(max(0, left - suffix[j + 1]), min(bounds[j], left) + 1):
            acc.append(k)
            yield from rec(j + 1, left - k, acc)
            acc.pop()

    yield from rec(0, d, [])


def _to_dense(g: LaurentPolynomial) -> list[Fraction]:
    """Coefficient list (constant first) of a one-variable polynomial after normalisation."""
    g = g.normalize_monomial()
    if g.is_zero():
        return []
    deg = max(e[0] for e in g.support)
    out = [Fraction(0)] * (deg + 1)
    for e, c in g.items():
        out[e[0]] = c
    return out


def gcd_univariate(g: LaurentPolynomial, h: LaurentPolynomial) -> LaurentPolynomial:
    """Monic gcd with lowest exponent 0, defined up to monomial units."""
    if g.n != 1 or h.n != 1:
        raise ValueError("gcd_univariate needs one-variable polynomials")
    a, b = _to_dense(g), _to_dense(h)

    def trim(p):
        while p and p[-1] == 0:
            p.pop()
        return p

    a, b = trim(a), trim(b)
    while b:
        r = a[:]
        while len(r) >= len(b) and r:
            q = r[-1] / b[-1]
            shift = len(r) - len(b)
            for i, c in enumerate(b):
                r[i + shift] -= q * c
            trim(r)
        a, b = b, r
    if not a:
        return LaurentPolynomial(1, {}, "u")
    lead = a[-1]
    p = LaurentPolynomial(1, {(i,): c / lead for i, c in enumerate(a) if c}, "u")
    return p.normalize_monomial()
