"""Exponential tangent cones of Laurent systems.

For a hypersurface V(f) with f = Σ c_u t^u, the directions z with
exp(tz) ∈ V(f) for all t are exactly those for which the exponents
u ∈ supp(f) group by the value of <u, z> into blocks of zero coefficient
sum.  So the cone is the union, over set partitions of the support whose
blocks have zero coefficient sum, of the subspaces
{z : <u - v, z> = 0 for u, v in a common block}.
Only the finest such partitions matter; the search below never grows a
block once its coefficient sum has reached zero, which keeps every finest
partition while skipping most coarser ones.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterable, Sequence

from .exactlin import DimensionError, SubspaceQ, subspace_intersect
from .laurent import LaurentPolynomial, restrict_to_curve, shifted_initial_form, value_at_one

DEFAULT_SUPPORT_CAP = 14


class EnumerationCapError(ValueError):
    pass


@dataclass(frozen=True)
class RationalSubspaceArrangement:
    """Finite union of rational subspaces of Q^n, kept as an antichain.

    ``members == ()`` is the empty set, which differs from the
    arrangement ``({0},)``.
    """

    n: int
    members: tuple[SubspaceQ, ...]

    @classmethod
    def from_subspaces(cls, n: int, subspaces: Iterable[SubspaceQ]) -> "RationalSubspaceArrangement":
        return cls(n, maximal_subspaces(n, subspaces))

    @classmethod
    def empty(cls, n: int) -> "RationalSubspaceArrangement":
        return cls(n, ())

    @classmethod
    def origin(cls, n: int) -> "RationalSubspaceArrangement":
        return cls(n, (SubspaceQ.zero(n),))

    @classmethod
    def whole(cls, n: int) -> "RationalSubspaceArrangement":
        return cls(n, (SubspaceQ.whole(n),))

    def is_empty(self) -> bool:
        return not self.members

    def is_whole(self) -> bool:
        return any(s.dim == self.n for s in self.members)

    def contains(self, v: Sequence) -> bool:
        return any(s.contains(v) for s in self.members)

    __contains__ = contains

    def union(self, other: "RationalSubspaceArrangement") -> "RationalSubspaceArrangement":
        _check_dim(self, other)
        return RationalSubspaceArrangement.from_subspaces(self.n, self.members + other.members)

    def intersect(self, other: "RationalSubspaceArrangement") -> "RationalSubspaceArrangement":
        _check_dim(self, other)
        return RationalSubspaceArrangement.from_subspaces(
            self.n, (subspace_intersect(a, b) for a in self.members for b in other.members))

    def product(self, other: "RationalSubspaceArrangement") -> "RationalSubspaceArrangement":
        return arrangement_product(self, other)

    def as_json(self) -> dict:
        return {"ambient": self.n,
                "empty": self.is_empty(),
                "subspaces": [{"dim": s.dim, "constraints": [list(r) for r in s.constraints]}
                              for s in self.members]}

    def __str__(self):
        if not self.members:
            return "empty"
        return " U ".join(str(s) for s in self.members)


def _check_dim(a, b):
    if a.n != b.n:
        raise DimensionError(f"arrangements in Q^{a.n} and Q^{b.n}")


def _sort_key(s: SubspaceQ):
    return (-s.dim, s.constraints)


def maximal_subspaces(n: int, subspaces: Iterable[SubspaceQ]) -> tuple[SubspaceQ, ...]:
    uniq = []
    seen = set()
    for s in subspaces:
        if s.n != n:
            raise DimensionError(f"subspace of Q^{s.n} in an arrangement in Q^{n}")
        if s not in seen:
            seen.add(s)
            uniq.append(s)
    uniq.sort(key=_sort_key)
    kept: list[SubspaceQ] = []
    for s in uniq:
        if not any(s.issubset(k) for k in kept):
            kept.append(s)
    return tuple(sorted(kept, key=_sort_key))


# ------------------------------------------------------ partition search


def admissible_partitions(coeffs: Sequence[Fraction], finest_only: bool = True):
    """Set partitions of ``range(len(coeffs))`` with zero-sum blocks.

    Blocks are built by restricted-growth assignment in index order.  With
    ``finest_only`` (the default) a block whose running sum is zero is
    closed, so the output contains every finest admissible partition plus
    possibly a few coarser ones, never a non-admissible one.  With
    ``finest_only=False`` every admissible partition is produced.
    """
    coeffs = [Fraction(c) for c in coeffs]
    m = len(coeffs)
    if m == 0:
        yield []
        return
    # reachable subset sums of coeffs[i:] for the feasibility prune
    reach: list[set] = [set() for _ in range(m + 1)]
    reach[m] = {Fraction(0)}
    for i in range(m - 1, -1, -1):
        reach[i] = reach[i + 1] | {s + coeffs[i] for s in reach[i + 1]}

    blocks: list[list[int]] = []
    sums: list[Fraction] = []

    def rec(i):
        open_nonzero = [s for s in sums if s != 0]
        if len(open_nonzero) > m - i:
            return
        if any(-s not in reach[i] for s in open_nonzero):
            return
        if i == m:
            if not open_nonzero:
                yield [list(b) for b in blocks]
            return
        c = coeffs[i]
        for k in range(len(blocks)):
            if finest_only and sums[k] == 0:
                continue
            blocks[k].append(i)
            sums[k] += c
            yield from rec(i + 1)
            sums[k] -= c
            blocks[k].pop()
        blocks.append([i])
        sums.append(c)
        yield from rec(i + 1)
        sums.pop()
        blocks.pop()

    yield from rec(0)


def partition_subspace(n: int, support: Sequence[tuple], partition) -> SubspaceQ:
    """{z : <u - v, z> = 0 whenever u, v lie in the same block}."""
    rows = []
    for block in partition:
        u0 = support[block[0]]
        for k in block[1:]:
            rows.append([a - b for a, b in zip(support[k], u0)])
    return SubspaceQ.from_constraints(n, rows)


def tau1_hypersurface(f: LaurentPolynomial, cap: int = DEFAULT_SUPPORT_CAP) -> RationalSubspaceArrangement:
    """Exponential tangent cone at 1 of V(f), as an arrangement in Q^n."""
    if f.is_zero():
        raise ValueError("the zero polynomial defines the whole torus; tau1 is Q^n")
    n = f.n
    if value_at_one(f) != 0:
        return RationalSubspaceArrangement.empty(n)
    support = f.support
    if len(support) > cap:
        raise EnumerationCapError(
            f"support size {len(support)} exceeds the enumeration cap {cap}")
    coeffs = [f.terms[u] for u in support]
    subspaces = {partition_subspace(n, support, p) for p in admissible_partitions(coeffs)}
    return RationalSubspaceArrangement.from_subspaces(n, subspaces)


def tau1_system(fs: Sequence[LaurentPolynomial], cap: int = DEFAULT_SUPPORT_CAP,
                n: int | None = None) -> RationalSubspaceArrangement:
    """Exponential tangent cone of the common zero set of ``fs``.

    The zero polynomial imposes no condition; an all-zero (or, with ``n``
    given, empty) system yields Q^n.
    """
    fs = list(fs)
    if not fs and n is None:
        raise ValueError("empty system needs the ambient dimension n")
    n = fs[0].n if fs else n
    if any(f.n != n for f in fs):
        raise DimensionError("polynomials in different numbers of variables")
    result = RationalSubspaceArrangement.whole(n)
    for f in fs:
        if f.is_zero():
            continue
        result = result.intersect(tau1_hypersurface(f, cap))
        if result.is_empty():
            break
    return result


def curve_in_variety(fs: Sequence[LaurentPolynomial], z: Sequence[int]) -> bool:
    """True iff every f restricts to 0 along u -> (u^z_1, ..., u^z_n)."""
    return all(restrict_to_curve(f, z).is_zero() for f in fs)


def tc1_hypersurface(f: LaurentPolynomial) -> LaurentPolynomial:
    """Defining form of the tangent cone at 1 of V(f)."""
    return shifted_initial_form(f)


def arrangement_product(A: RationalSubspaceArrangement,
                        B: RationalSubspaceArrangement) -> RationalSubspaceArrangement:
    """All S (+) T in Q^(nA + nB); empty if either factor is empty."""
    n = A.n + B.n
    return RationalSubspaceArrangement.from_subspaces(
        n, (s.direct_sum(t) for s in A.members for t in B.members))


def integer_directions(n: int, bound: int = 3):
    return product(range(-bound, bound + 1), repeat=n)
