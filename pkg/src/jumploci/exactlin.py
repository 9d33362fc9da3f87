"""Exact linear algebra over Q, F_p and Z.

Matrices are plain lists of rows.  Entries are ``int`` or
``fractions.Fraction``; nothing in this module ever touches a float.

Coefficient selectors
---------------------
``Field(0)`` is the rationals, ``Field(p)`` the prime field F_p, and the
singleton ``ZZ`` stands for integer coefficients where a ring (rather
than a field) is meaningful, e.g. integral homology.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence


class DimensionError(ValueError):
    pass


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    return all(p % d for d in range(3, math.isqrt(p) + 1, 2))


@dataclass(frozen=True)
class Field:
    """Q when ``characteristic == 0``, otherwise the prime field F_p."""

    characteristic: int = 0

    def __post_init__(self):
        p = self.characteristic
        if p != 0 and not is_prime(p):
            raise ValueError(f"modulus {p} is not prime")
        if p >= 2**31:
            raise ValueError(f"modulus {p} exceeds 2^31")

    @property
    def name(self) -> str:
        return "Q" if self.characteristic == 0 else f"F{self.characteristic}"

    def __str__(self):
        return self.name

    def __call__(self, x):
        """Coerce an int or Fraction into this field."""
        p = self.characteristic
        if p == 0:
            return Fraction(x)
        if isinstance(x, Fraction):
            if x.denominator % p == 0:
                raise ZeroDivisionError(f"{x} has no image in F{p}")
            return x.numerator * pow(x.denominator, -1, p) % p
        return int(x) % p

    def inv(self, x):
        if self.is_zero(x):
            raise ZeroDivisionError("inverse of zero")
        if self.characteristic == 0:
            return 1 / Fraction(x)
        return pow(int(x), -1, self.characteristic)

    def is_zero(self, x) -> bool:
        if self.characteristic == 0:
            return x == 0
        return x % self.characteristic == 0

    def power(self, x, e: int):
        if e >= 0:
            return self(x) ** e if self.characteristic == 0 else pow(int(x), e, self.characteristic)
        return self.power(self.inv(x), -e)


class _Integers:
    name = "Z"
    characteristic = 0

    def __repr__(self):
        return "ZZ"

    def __str__(self):
        return "Z"

    def __reduce__(self):
        return "ZZ"


ZZ = _Integers()
QQ = Field(0)


def parse_coefficients(text: str):
    """``'Q'``, ``'Z'`` or ``'F<p>'`` (p prime) to a coefficient selector."""
    t = text.strip()
    if t in ("Q", "QQ"):
        return QQ
    if t in ("Z", "ZZ"):
        return ZZ
    if t[:1] in ("F", "f") and t[1:].isdigit():
        return Field(int(t[1:]))
    raise ValueError(f"unknown coefficients {text!r}; expected Q, Z or F<p>")


def parse_field(text: str) -> Field:
    c = parse_coefficients(text)
    if c is ZZ:
        raise ValueError("a field is required here (Q or F<p>), not Z")
    return c


# ---------------------------------------------------------------- ranks


def _integral_rows(M) -> list[list[int]]:
    rows = []
    for row in M:
        if all(type(x) is int for x in row):
            rows.append(list(row))
            continue
        den = 1
        for x in row:
            if isinstance(x, Fraction):
                den = den * x.denominator // math.gcd(den, x.denominator)
        rows.append([int(x * den) for x in row])
    return rows


def _rank_q(M) -> int:
    rows = [r for r in _integral_rows(M) if any(r)]
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    for c in range(ncols):
        piv = None
        best = None
        for i in range(rank, len(rows)):
            v = rows[i][c]
            if v and (best is None or abs(v) < best):
                piv, best = i, abs(v)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        prow = rows[rank]
        a = prow[c]
        for i in range(rank + 1, len(rows)):
            b = rows[i][c]
            if b:
                r = [a * x - b * y for x, y in zip(rows[i], prow)]
                g = 0
                for x in r:
                    if x:
                        g = math.gcd(g, x)
                        if g == 1:
                            break
                if g > 1:
                    r = [x // g for x in r]
                rows[i] = r
        rank += 1
        if rank == len(rows):
            break
    return rank


def _rank_p(M, p: int) -> int:
    rows = [[x % p for x in row] for row in _modp_rows(M, p)]
    rows = [r for r in rows if any(r)]
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        prow = rows[rank]
        inv = pow(prow[c], -1, p)
        for i in range(rank + 1, len(rows)):
            b = rows[i][c]
            if b:
                f = b * inv % p
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], prow)]
        rank += 1
        if rank == len(rows):
            break
    return rank


def _modp_rows(M, p):
    F = Field(p)
    return [[F(x) if isinstance(x, Fraction) else x for x in row] for row in M]


def rank_over_field(M, field: Field | int = QQ) -> int:
    """Exact rank of ``M`` over Q (``field=QQ``/0) or F_p (``field=p``)."""
    if isinstance(field, int):
        field = Field(field)
    if field is ZZ:
        field = QQ
    if not M or not len(M[0]):
        return 0
    if field.characteristic == 0:
        return _rank_q(M)
    return _rank_p(M, field.characteristic)


def rref(M) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over Q; returns (nonzero rows, pivot columns)."""
    rows = [[Fraction(x) for x in row] for row in M]
    if not rows:
        return [], []
    ncols = len(rows[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        pv = rows[r][c]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def primitive(v: Sequence) -> tuple[int, ...]:
    """Scale a rational vector to a primitive integer vector (sign kept)."""
    den = 1
    for x in v:
        x = Fraction(x)
        den = den * x.denominator // math.gcd(den, x.denominator)
    ints = [int(Fraction(x) * den) for x in v]
    g = 0
    for x in ints:
        g = math.gcd(g, x)
    if g > 1:
        ints = [x // g for x in ints]
    return tuple(ints)


def nullspace(M, ncols: int | None = None) -> list[tuple[int, ...]]:
    """Integer basis of the rational right kernel {x : M x = 0}."""
    if ncols is None:
        ncols = len(M[0]) if M else 0
    rows, pivots = rref(M) if M else ([], [])
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, pc in zip(rows, pivots):
            v[pc] = -row[f]
        basis.append(primitive(v))
    return basis


# ------------------------------------------------------------ Smith form


@dataclass(frozen=True)
class SmithForm:
    """Invariant factors d_1 | d_2 | ... | d_r of an integer matrix.

    When computed with ``transforms=True``, ``left`` and ``right`` are
    unimodular with ``left @ M @ right`` equal to the diagonal form.
    """

    diagonal: tuple[int, ...]
    shape: tuple[int, int]
    left: tuple[tuple[int, ...], ...] | None = dc_field(default=None, compare=False)
    right: tuple[tuple[int, ...], ...] | None = dc_field(default=None, compare=False)

    @property
    def rank(self) -> int:
        return len(self.diagonal)

    @property
    def torsion(self) -> tuple[int, ...]:
        return tuple(d for d in self.diagonal if d > 1)


def _identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def smith_normal_form(M, transforms: bool = False) -> SmithForm:
    """Smith normal form by smallest-pivot elimination.

    >>> smith_normal_form([[1, 2], [3, 4]]).diagonal
    (1, 2)
    """
    A = [[int(x) for x in row] for row in M]
    m = len(A)
    n = len(A[0]) if m else 0
    U = _identity(m) if transforms else None
    V = _identity(n) if transforms else None

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        if U is not None:
            U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        if V is not None:
            for row in V:
                row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):  # row_dst += q * row_src
        A[dst] = [x + q * y for x, y in zip(A[dst], A[src])]
        if U is not None:
            U[dst] = [x + q * y for x, y in zip(U[dst], U[src])]

    def add_col(dst, src, q):  # col_dst += q * col_src
        for row in A:
            row[dst] += q * row[src]
        if V is not None:
            for row in V:
                row[dst] += q * row[src]

    diag = []
    t = 0
    while t < min(m, n):
        best = None
        for i in range(t, m):
            for j in range(t, n):
                v = A[i][j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
                    if best[0] == 1:
                        break
            if best and best[0] == 1:
                break
        if best is None:
            break
        _, i, j = best
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            p = A[t][t]
            clean = True
            for i in range(t + 1, m):
                if A[i][t]:
                    add_row(i, t, -(A[i][t] // p))
                    if A[i][t]:
                        clean = False
            for j in range(t + 1, n):
                if A[t][j]:
                    add_col(j, t, -(A[t][j] // p))
                    if A[t][j]:
                        clean = False
            if not clean:
                # move the smallest leftover in row/column t onto the pivot
                cand = [(abs(A[i][t]), 'r', i) for i in range(t + 1, m) if A[i][t]]
                cand += [(abs(A[t][j]), 'c', j) for j in range(t + 1, n) if A[t][j]]
                _, kind, k = min(cand)
                if kind == 'r':
                    swap_rows(t, k)
                else:
                    swap_cols(t, k)
                continue
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                        if A[i][j] % p), None)
            if bad is None:
                break
            add_row(t, bad[0], 1)
        if A[t][t] < 0:
            A[t] = [-x for x in A[t]]
            if U is not None:
                U[t] = [-x for x in U[t]]
        diag.append(A[t][t])
        t += 1

    left = tuple(map(tuple, U)) if U is not None else None
    right = tuple(map(tuple, V)) if V is not None else None
    return SmithForm(tuple(diag), (m, n), left, right)


def matmul(A, B):
    if not A:
        return []
    if not B:
        return [[0] * 0 for _ in A]
    cols = list(zip(*B))
    return [[sum(a * b for a, b in zip(row, col)) for col in cols] for row in A]


# -------------------------------------------------------------- subspaces


def _canonical_constraints(rows, n) -> tuple[tuple[int, ...], ...]:
    R, _ = rref(rows) if rows else ([], [])
    return tuple(primitive(r) for r in R)


@dataclass(frozen=True)
class SubspaceQ:
    """A linear subspace of Q^n stored as the kernel of an integer matrix.

    ``constraints`` is always the reduced echelon form with each row scaled
    to a primitive integer vector, so two subspaces are equal exactly when
    their dataclass fields agree.
    """

    n: int
    constraints: tuple[tuple[int, ...], ...]

    @classmethod
    def from_constraints(cls, n: int, rows: Iterable[Sequence]) -> "SubspaceQ":
        rows = [list(r) for r in rows]
        for r in rows:
            if len(r) != n:
                raise DimensionError(f"constraint of length {len(r)} in Q^{n}")
        return cls(n, _canonical_constraints(rows, n))

    @classmethod
    def from_span(cls, n: int, vectors: Iterable[Sequence]) -> "SubspaceQ":
        vecs = [list(v) for v in vectors]
        for v in vecs:
            if len(v) != n:
                raise DimensionError(f"vector of length {len(v)} in Q^{n}")
        if not vecs:
            return cls.zero(n)
        return cls.from_constraints(n, nullspace(vecs, n))

    @classmethod
    def whole(cls, n: int) -> "SubspaceQ":
        return cls(n, ())

    @classmethod
    def zero(cls, n: int) -> "SubspaceQ":
        return cls.from_constraints(n, _identity(n))

    @classmethod
    def coordinate(cls, n: int, support: Iterable[int]) -> "SubspaceQ":
        """Q^W: vectors vanishing off the index set ``support``."""
        s = set(support)
        return cls.from_constraints(n, [row for k, row in enumerate(_identity(n)) if k not in s])

    @cached_property
    def basis(self) -> tuple[tuple[int, ...], ...]:
        return tuple(nullspace([list(r) for r in self.constraints], self.n))

    @property
    def dim(self) -> int:
        return self.n - len(self.constraints)

    def contains(self, v: Sequence) -> bool:
        if len(v) != self.n:
            raise DimensionError(f"vector of length {len(v)} in Q^{self.n}")
        return all(sum(c * Fraction(x) for c, x in zip(row, v)) == 0 for row in self.constraints)

    __contains__ = contains

    def issubset(self, other: "SubspaceQ") -> bool:
        if other.n != self.n:
            raise DimensionError("ambient dimension mismatch")
        if self.dim > other.dim:
            return False
        return all(other.contains(b) for b in self.basis)

    def intersect(self, other: "SubspaceQ") -> "SubspaceQ":
        return subspace_intersect(self, other)

    def direct_sum(self, other: "SubspaceQ") -> "SubspaceQ":
        """self (+) other inside Q^(n1 + n2)."""
        n = self.n + other.n
        rows = [list(r) + [0] * other.n for r in self.constraints]
        rows += [[0] * self.n + list(r) for r in other.constraints]
        return SubspaceQ(n, _canonical_constraints(rows, n))

    def __add__(self, other: "SubspaceQ") -> "SubspaceQ":
        """Sum of subspaces (span of the union)."""
        if other.n != self.n:
            raise DimensionError("ambient dimension mismatch")
        return SubspaceQ.from_span(self.n, list(self.basis) + list(other.basis))

    def __str__(self):
        if not self.constraints:
            return f"Q^{self.n}"
        if self.dim == 0:
            return "{0}"
        return "{" + ", ".join(_format_constraint(r) for r in self.constraints) + "}"


def _format_constraint(row) -> str:
    terms = []
    for k, c in enumerate(row):
        if not c:
            continue
        sign = "-" if c < 0 else "+"
        mag = "" if abs(c) == 1 else str(abs(c))
        terms.append((sign, f"{mag}z{k + 1}"))
    s = "".join(f"{sg}{t}" if i or sg == "-" else t for i, (sg, t) in enumerate(terms))
    return s + "=0"


def subspace_intersect(A: SubspaceQ, B: SubspaceQ) -> SubspaceQ:
    if A.n != B.n:
        raise DimensionError(f"cannot intersect subspaces of Q^{A.n} and Q^{B.n}")
    if A == B:
        return A
    rows = [list(r) for r in A.constraints + B.constraints]
    return SubspaceQ(A.n, _canonical_constraints(rows, A.n))


def subspace_member(A: SubspaceQ, v: Sequence) -> bool:
    return A.contains(v)


def rowspace_meets_coordinate_subspace(N, W: Iterable[int]) -> bool:
    """True iff the rational row space of ``N`` meets Q^W outside 0.

    ``W`` is a set of column indices.  The intersection has dimension
    rank(N) - rank(N restricted to the columns outside W).
    """
    ncols = len(N[0]) if N else 0
    W = set(W)
    if not W <= set(range(ncols)):
        raise ValueError(f"column indices {sorted(W - set(range(ncols)))} out of range")
    if not W:
        return False
    rest = [c for c in range(ncols) if c not in W]
    full = rank_over_field(N)
    if not rest:
        return full > 0
    return full - rank_over_field([[row[c] for c in rest] for row in N]) > 0
