"""Resonance and characteristic varieties of toric complexes.

The toric complex T_L of a simplicial complex L on vertex set V has one
i-cell per simplex of L with i vertices.  Its degree-1 cohomology is k^V
and its character torus is (k^×)^V.  Both jumping loci are unions of
coordinate subspaces (resp. subtori) indexed by vertex sets W, decided by
the Aomoto-Betti numbers β_i(z_W), which only depend on W.

Three independent routes to β_i are provided:

* :func:`aomoto_betti`: the combinatorial link formula
  β_i(z_W) = Σ_{σ ∈ L_{V∖W}} dim H̃_{i-1-|σ|}(lk_{L_W}(σ));
* :func:`aomoto_oracle`: ranks of right multiplication by z on the
  exterior Stanley–Reisner ring;
* :func:`twisted_betti_oracle`: ranks of the cellular chain complex of
  T_L with rank-one local coefficients ρ.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .exactlin import QQ, Field, parse_field, rank_over_field
from .simplicial import SimplicialComplex, reduced_homology
from .tau import EnumerationCapError

DEFAULT_VERTEX_CAP = 16


def _as_field(field) -> Field:
    return parse_field(field) if isinstance(field, str) else field


def _vertex_values(L: SimplicialComplex, values) -> dict:
    if isinstance(values, Mapping):
        vals = dict(values)
        extra = set(vals) - set(L.vertices)
        if extra:
            raise ValueError(f"unknown vertices {sorted(extra)}")
        return {v: vals.get(v, 0) for v in L.vertices}
    values = list(values)
    if len(values) != len(L.vertices):
        raise ValueError(f"expected {len(L.vertices)} values, got {len(values)}")
    return dict(zip(L.vertices, values))


# ----------------------------------------------------------- link formula


@lru_cache(maxsize=262144)
def _aomoto_vector(L: SimplicialComplex, W: frozenset, field: Field) -> tuple[int, ...]:
    LW = L.induced(W)
    outside = frozenset(L.vertices) - W
    out: dict[int, int] = {}
    for sigma in L.faces:
        if not sigma <= outside:
            continue
        h = reduced_homology(L.link(LW, sigma), field)
        for j in range(-1, h.top + 1):
            b = h.betti(j)
            if b:
                i = j + 1 + len(sigma)
                out[i] = out.get(i, 0) + b
    if L.is_void:
        return ()
    return tuple(out.get(i, 0) for i in range(L.dim + 2))


def aomoto_betti_vector(L: SimplicialComplex, W: Iterable[str], field=QQ) -> tuple[int, ...]:
    """(β_0(z_W), ..., β_{dim L + 1}(z_W)) via the link formula."""
    W = frozenset(W)
    bad = W - set(L.vertices)
    if bad:
        raise ValueError(f"W contains unknown vertices {sorted(bad)}")
    return _aomoto_vector(L, W, _as_field(field))


def aomoto_betti(L: SimplicialComplex, W: Iterable[str], i: int, field=QQ) -> int:
    """β_i(k<L>, z_W) by the link formula (σ = ∅ included, |σ| = cardinality)."""
    if i < 0:
        raise ValueError("degree must be >= 0")
    vec = aomoto_betti_vector(L, W, field)
    return vec[i] if i < len(vec) else 0


# ----------------------------------------------------------------- oracles


def _scalar(field: Field, x):
    """Field element, kept as a plain int over Q when possible (faster ranks)."""
    y = field(x)
    if field.characteristic == 0 and y.denominator == 1:
        return int(y)
    return y


def _exterior_multiplication(L: SimplicialComplex, src, dst, z: dict, field: Field):
    """Matrix of a -> a·z from span{e_σ : σ in src} to span{e_τ : τ in dst}.

    Rows index the targets.  e_σ ∧ v* = (-1)^{#{w ∈ σ : w > v}} e_{σ ∪ v}.
    """
    pos = {v: k for k, v in enumerate(L.vertices)}
    index = {frozenset(t): r for r, t in enumerate(dst)}
    zs = [(v, _scalar(field, z[v])) for v in L.vertices]
    zs = [(v, x) for v, x in zs if x != 0]
    M = [[0] * len(src) for _ in dst]
    for c, s in enumerate(src):
        fs = frozenset(s)
        for v, zv in zs:
            if v in fs:
                continue
            r = index.get(fs | {v})
            if r is None:
                continue
            odd = sum(1 for w in s if pos[w] > pos[v]) % 2
            M[r][c] = -zv if odd else zv
    return M


def aomoto_oracle_vector(L: SimplicialComplex, z, field=QQ) -> tuple[int, ...]:
    """dim H^i(k<L>, ·z) for i = 0 .. dim L + 1, from matrix ranks."""
    field = _as_field(field)
    z = _vertex_values(L, z)
    if L.is_void:
        return ()
    top = L.dim + 1  # largest cardinality of a simplex
    counts = L.f_vector()
    layers = [L.simplices(s) for s in range(top + 1)]
    ranks = [rank_over_field(_exterior_multiplication(L, layers[s], layers[s + 1], z, field), field)
             if s < top else 0 for s in range(top + 1)]
    return tuple(counts[i] - ranks[i] - (ranks[i - 1] if i else 0) for i in range(top + 1))


def aomoto_oracle(L: SimplicialComplex, z, i: int, field=QQ) -> int:
    """Aomoto-Betti number β_i(k<L>, z) computed directly from the ring."""
    vec = aomoto_oracle_vector(L, z, field)
    return vec[i] if 0 <= i < len(vec) else 0


def _twisted_boundary(L: SimplicialComplex, size: int, rho: dict, field: Field):
    """∂ on cells of T_L with ``size`` vertices, coefficients ρ(v) - 1."""
    src = L.simplices(size)
    dst = L.simplices(size - 1)
    index = {t: r for r, t in enumerate(dst)}
    M = [[field(0)] * len(src) for _ in dst]
    for c, s in enumerate(src):
        for k, v in enumerate(s):
            M[index[s[:k] + s[k + 1:]]][c] = field((-1) ** k * (field(rho[v]) - 1))
    return M


def twisted_betti_vector(L: SimplicialComplex, rho, field=QQ) -> tuple[int, ...]:
    """dim_k H_i(T_L, k_ρ) for i = 0 .. dim L + 1."""
    field = _as_field(field)
    rho = _vertex_values(L, rho)
    for v, x in rho.items():
        if field.is_zero(field(x)):
            raise ValueError(f"character value at {v} must be nonzero")
    if L.is_void:
        return ()
    top = L.dim + 1
    counts = L.f_vector()
    ranks = [0] + [rank_over_field(_twisted_boundary(L, s, rho, field), field) for s in range(1, top + 1)]
    ranks.append(0)
    return tuple(counts[i] - ranks[i] - ranks[i + 1] for i in range(top + 1))


def twisted_betti_oracle(L: SimplicialComplex, rho, i: int, field=QQ) -> int:
    vec = twisted_betti_vector(L, rho, field)
    return vec[i] if 0 <= i < len(vec) else 0


# ------------------------------------------------------------ arrangements


@dataclass(frozen=True)
class CoordinateArrangement:
    """Union of coordinate subspaces k^W (or subtori (k^×)^W), W maximal.

    ``members == ()`` is the empty set; ``(frozenset(),)`` is the single
    point 0 (resp. 1).
    """

    vertices: tuple[str, ...]
    members: tuple[frozenset, ...]
    kind: str  # "subspace" or "subtorus"
    degree: int
    depth: int
    field: str

    def sorted_members(self) -> list[tuple[str, ...]]:
        pos = {v: k for k, v in enumerate(self.vertices)}
        out = [tuple(sorted(W, key=pos.__getitem__)) for W in self.members]
        out.sort(key=lambda t: (len(t), [pos[v] for v in t]))
        return out

    def contains_support(self, S: Iterable[str]) -> bool:
        S = frozenset(S)
        return any(S <= W for W in self.members)

    def contains_point(self, point) -> bool:
        """Membership of a cohomology class z (subspace) or character ρ (subtorus)."""
        vals = point if isinstance(point, Mapping) else dict(zip(self.vertices, point))
        if self.kind == "subspace":
            support = {v for v, x in vals.items() if x != 0}
        else:
            support = {v for v, x in vals.items() if x != 1}
        return self.contains_support(support)

    def as_json(self) -> dict:
        return {"kind": self.kind, "degree": self.degree, "depth": self.depth,
                "field": self.field, "vertices": list(self.vertices),
                "maximal_W": [list(W) for W in self.sorted_members()]}

    def __str__(self):
        if not self.members:
            return "empty"
        return "\n".join("W = {" + ",".join(W) + "}" for W in self.sorted_members())


def maximal_sets(sets: Iterable[frozenset]) -> tuple[frozenset, ...]:
    uniq = sorted(set(sets), key=len, reverse=True)
    kept: list[frozenset] = []
    for s in uniq:
        if not any(s <= k for k in kept):
            kept.append(s)
    return tuple(kept)


def all_subsets(vertices: Sequence[str]):
    for r in range(len(vertices) + 1):
        for c in itertools.combinations(vertices, r):
            yield frozenset(c)


def check_vertex_cap(n: int, cap: int):
    if n > cap:
        raise EnumerationCapError(f"{n} vertices exceed the subset-sweep cap {cap}")


def _qualifying(L, i, d, field, cap):
    if d < 1:
        raise ValueError("depth d must be >= 1")
    if i < 0:
        raise ValueError("degree must be >= 0")
    check_vertex_cap(len(L.vertices), cap)
    field = _as_field(field)
    return field, [W for W in all_subsets(L.vertices) if aomoto_betti(L, W, i, field) >= d]


def resonance_arrangement(L: SimplicialComplex, i: int, d: int = 1, field=QQ,
                          cap: int = DEFAULT_VERTEX_CAP) -> CoordinateArrangement:
    """R^i_d(T_L, k) as the maximal W with β_i(z_W) >= d."""
    field, good = _qualifying(L, i, d, field, cap)
    return CoordinateArrangement(L.vertices, maximal_sets(good), "subspace", i, d, field.name)


def charvar_arrangement(L: SimplicialComplex, i: int, d: int = 1, field=QQ,
                        cap: int = DEFAULT_VERTEX_CAP) -> CoordinateArrangement:
    """V^i_d(T_L, k) as the maximal W with β_i(z_W) >= d (coordinate subtori)."""
    field, good = _qualifying(L, i, d, field, cap)
    return CoordinateArrangement(L.vertices, maximal_sets(good), "subtorus", i, d, field.name)
