"""Finitely presented groups: Fox calculus and degree-one jump loci.

Words are tuples of nonzero integers: ``j`` stands for the generator
x_j (1-based) and ``-j`` for its inverse.  Characters live on the
maximal torsion-free abelian quotient G_abf ≅ Z^r; the Alexander matrix
has Laurent polynomial entries in r variables t_1..t_r.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .exactlin import QQ, Field, SmithForm, parse_field, rank_over_field, smith_normal_form
from .laurent import LaurentPolynomial, evaluate
from .simplicial import Graph
from .tau import DEFAULT_SUPPORT_CAP, RationalSubspaceArrangement, curve_in_variety, tau1_system

Word = tuple


def free_reduce(word: Iterable[int]) -> Word:
    out: list[int] = []
    for x in word:
        if x == 0:
            raise ValueError("0 is not a letter")
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def invert(word: Word) -> Word:
    return tuple(-x for x in reversed(word))


@dataclass(frozen=True)
class GroupPresentation:
    generators: tuple[str, ...]
    relators: tuple[Word, ...]

    def __post_init__(self):
        n = len(self.generators)
        for r in self.relators:
            for x in r:
                if not 1 <= abs(x) <= n:
                    raise ValueError(f"letter {x} out of range for {n} generators")
        object.__setattr__(self, "relators", tuple(free_reduce(r) for r in self.relators))

    @classmethod
    def from_words(cls, n: int, relators: Iterable[Iterable[int]],
                   names: Sequence[str] | None = None) -> "GroupPresentation":
        names = tuple(names) if names is not None else tuple(f"x{j + 1}" for j in range(n))
        return cls(names, tuple(tuple(r) for r in relators))

    @classmethod
    def raag(cls, G: Graph) -> "GroupPresentation":
        """Right-angled Artin group: one commutator v w v^-1 w^-1 per edge."""
        pos = {v: k + 1 for k, v in enumerate(G.vertices)}
        rels = [(pos[a], pos[b], -pos[a], -pos[b]) for a, b in G.sorted_edges()]
        return cls(G.vertices, tuple(rels))

    @property
    def n(self) -> int:
        return len(self.generators)

    @property
    def m(self) -> int:
        return len(self.relators)

    def word_str(self, w: Word) -> str:
        if not w:
            return "1"
        parts = []
        for x, grp in itertools.groupby(w):
            k = len(list(grp)) * (1 if x > 0 else -1)
            name = self.generators[abs(x) - 1]
            parts.append(name if k == 1 else f"{name}^{k}")
        return " ".join(parts)

    @cached_property
    def abelianization(self) -> "AbelianizationData":
        return abelianization(self)


def exponent_vector(word: Word, n: int) -> list[int]:
    v = [0] * n
    for x in word:
        v[abs(x) - 1] += 1 if x > 0 else -1
    return v


@dataclass(frozen=True)
class AbelianizationData:
    """G_ab ≅ Z^r ⊕ torsion, with the projection abf: Z^n -> Z^r.

    ``abf`` is an r×n integer matrix; column j is the image of x_j.
    """

    exponent_matrix: tuple[tuple[int, ...], ...]
    smith: SmithForm
    free_rank: int
    torsion: tuple[int, ...]
    abf: tuple[tuple[int, ...], ...]

    def project(self, vec: Sequence[int]) -> tuple[int, ...]:
        return tuple(sum(a * b for a, b in zip(row, vec)) for row in self.abf)


def abelianization(P: GroupPresentation) -> AbelianizationData:
    n, m = P.n, P.m
    M = [exponent_vector(r, n) for r in P.relators]
    if m == 0:
        identity = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
        snf = SmithForm((), (0, n), (), identity)
        return AbelianizationData((), snf, n, (), identity)
    snf = smith_normal_form(M, transforms=True)
    V = snf.right
    k = snf.rank
    abf = tuple(tuple(V[j][k + c] for j in range(n)) for c in range(n - k))
    return AbelianizationData(tuple(map(tuple, M)), snf, n - k, snf.torsion, abf)


# ------------------------------------------------------------ Fox calculus


class FreeGroupRingElement(dict):
    """Integer combination of freely reduced words (word -> coefficient)."""

    def add(self, word: Word, c: int):
        w = free_reduce(word)
        v = self.get(w, 0) + c
        if v:
            self[w] = v
        else:
            self.pop(w, None)

    def to_str(self, P: GroupPresentation | None = None) -> str:
        if not self:
            return "0"
        out = []
        for w, c in sorted(self.items(), key=lambda kv: (len(kv[0]), kv[0])):
            ws = P.word_str(w) if P else (" ".join(map(str, w)) or "1")
            mag = "" if abs(c) == 1 and w else f"{abs(c)}"
            body = f"{mag}*{ws}" if mag and w else (mag or ws)
            out.append(("-" if c < 0 else "+", body))
        s = ("-" if out[0][0] == "-" else "") + out[0][1]
        return s + "".join(f" {sg} {b}" for sg, b in out[1:])


def fox_derivative(word: Word, j: int) -> FreeGroupRingElement:
    """∂word/∂x_j, with ∂(uv) = ∂u + u ∂v, ∂x_j = 1, ∂x_j^-1 = -x_j^-1."""
    if j < 1:
        raise ValueError("generator index is 1-based")
    out = FreeGroupRingElement()
    prefix: list[int] = []
    for x in word:
        if x == j:
            out.add(tuple(prefix), 1)
        prefix.append(x)
        if x == -j:
            out.add(tuple(prefix), -1)
    return out


def abelianize(elem: FreeGroupRingElement, ab: AbelianizationData, n: int) -> LaurentPolynomial:
    r = ab.free_rank
    terms = [(ab.project(exponent_vector(w, n)), c) for w, c in elem.items()]
    return LaurentPolynomial(r, terms)


@dataclass(frozen=True)
class AlexanderMatrix:
    """m×n matrix (∂r_i/∂x_j)^abf of Laurent polynomials in ``nvars`` variables."""

    entries: tuple[tuple[LaurentPolynomial, ...], ...]
    nvars: int
    ncols: int

    @property
    def nrows(self) -> int:
        return len(self.entries)

    def evaluate(self, point: Sequence, field: Field = QQ):
        return [[evaluate(f, point, field) for f in row] for row in self.entries]

    def minors(self, size: int) -> list[LaurentPolynomial]:
        if size == 0:
            return [LaurentPolynomial.constant(self.nvars, 1)]
        out = []
        for rows in itertools.combinations(range(self.nrows), size):
            for cols in itertools.combinations(range(self.ncols), size):
                out.append(laurent_det([[self.entries[i][j] for j in cols] for i in rows], self.nvars))
        return out


def laurent_det(M, nvars: int) -> LaurentPolynomial:
    """Determinant by Laplace expansion along rows, memoised on column sets."""
    k = len(M)
    memo: dict = {}

    def rec(row, cols):
        if row == k:
            return LaurentPolynomial.constant(nvars, 1)
        key = (row, cols)
        if key in memo:
            return memo[key]
        acc = LaurentPolynomial(nvars, {})
        for pos, c in enumerate(cols):
            entry = M[row][c]
            if entry.is_zero():
                continue
            sub = rec(row + 1, cols[:pos] + cols[pos + 1:])
            term = entry * sub
            acc = acc + term if pos % 2 == 0 else acc - term
        memo[key] = acc
        return acc

    return rec(0, tuple(range(k)))


def alexander_matrix(P: GroupPresentation) -> AlexanderMatrix:
    ab = P.abelianization
    rows = tuple(tuple(abelianize(fox_derivative(r, j), ab, P.n) for j in range(1, P.n + 1))
                 for r in P.relators)
    return AlexanderMatrix(rows, ab.free_rank, P.n)


def alexander_minors(P: GroupPresentation) -> list[LaurentPolynomial]:
    """Nonzero (n-1)-minors of the Alexander matrix, up to sign, content and monomial units."""
    A = alexander_matrix(P)
    size = P.n - 1
    if size > A.nrows:
        return []
    seen = {}
    for f in A.minors(size):
        if f.is_zero():
            continue
        g = f.normalize_monomial().content_normalized()
        seen.setdefault(g, g)
    return sorted(seen, key=lambda g: (len(g), str(g)))


def minors_ideal_is_zero(P: GroupPresentation) -> bool:
    """True when every (n-1)-minor vanishes identically (V^1_1 is the whole torus)."""
    return not alexander_minors(P)


# ------------------------------------------------------------ jump loci


def _as_field(field) -> Field:
    return parse_field(field) if isinstance(field, str) else field


def twisted_h1_dimension(P: GroupPresentation, rho: Sequence, field=QQ) -> int:
    """dim_k H_1(X_P, k_ρ) for a character ρ of G_abf (r coordinates)."""
    field = _as_field(field)
    ab = P.abelianization
    if len(rho) != ab.free_rank:
        raise ValueError(f"character needs {ab.free_rank} coordinates, got {len(rho)}")
    rho = [field(x) for x in rho]
    if any(field.is_zero(x) for x in rho):
        raise ValueError("character values must be nonzero")
    if all(x == field(1) for x in rho):
        M = [list(r) for r in ab.exponent_matrix]
        return P.n - (rank_over_field(M, field) if M else 0)
    A = alexander_matrix(P)
    vals = A.evaluate(rho, field)
    return P.n - 1 - (rank_over_field(vals, field) if vals else 0)


def charvar1_member(P: GroupPresentation, rho: Sequence, d: int = 1, field=QQ) -> bool:
    """Is ρ ∈ V^1_d(G, k)?  At ρ = 1 this compares b_1 (over k) with d."""
    if d < 1:
        raise ValueError("depth d must be >= 1")
    return twisted_h1_dimension(P, rho, field) >= d


def sigma1_upper_bound(P: GroupPresentation, cap: int = DEFAULT_SUPPORT_CAP) -> RationalSubspaceArrangement:
    """τ_1(V^0_1 ∪ V^1_1) in H^1(G, Q) = Q^r.

    Every nonzero rational χ in the returned arrangement is certified to lie
    outside Σ^1; characters outside it are merely not excluded.  With
    more than one excess generator (n - m > 1) the whole space is
    returned without computing minors.
    """
    r = P.abelianization.free_rank
    if P.n - P.m > 1:
        return RationalSubspaceArrangement.whole(r)
    minors = alexander_minors(P)
    cone = tau1_system(minors, cap=cap, n=r)
    return cone.union(RationalSubspaceArrangement.origin(r))


def sigma1_excludes(bound: RationalSubspaceArrangement, chi: Sequence) -> bool:
    """True when the bound certifies χ ∉ Σ^1 (χ nonzero and inside the arrangement)."""
    if not any(chi):
        raise ValueError("χ must be nonzero")
    return bound.contains(chi)


def cyclic_cover_finite(P: GroupPresentation, z: Sequence[int], q: int = 1) -> bool:
    """Is H_{<=q}(X^ν, C) finite dimensional for ν = z: G_abf -> Z?  (q <= 1)"""
    z = [int(x) for x in z]
    r = P.abelianization.free_rank
    if len(z) != r:
        raise ValueError(f"direction needs {r} coordinates, got {len(z)}")
    if not any(z):
        raise ValueError("z must be nonzero")
    g = 0
    for x in z:
        g = math.gcd(g, x)
    if g != 1:
        raise ValueError(f"z is not primitive (gcd {g}); it does not define an epimorphism onto Z")
    if q not in (0, 1):
        raise ValueError("only q <= 1 is supported for presentation complexes")
    if q == 0:
        return True
    return not curve_in_variety(alexander_minors(P), z)
