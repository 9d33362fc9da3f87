"""Σ-invariants of right-angled Artin groups and their kernels.

For G_Γ with flag complex L = Δ_Γ, a nonzero character χ with support W
lies in Σ^q(G_Γ, k) iff H̃_j(lk_{L_W}(σ), k) = 0 for every simplex σ of
L_{V∖W} (the empty simplex included, dim ∅ = -1) and every
-1 <= j <= q - dim σ - 2.  Over Z "= 0" means the trivial group, so
torsion counts.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .exactlin import QQ, ZZ, SubspaceQ, parse_coefficients, rowspace_meets_coordinate_subspace, smith_normal_form
from .simplicial import Graph, HomologyProfile, SimplicialComplex, flag_complex, graph_connectivity, reduced_homology
from .tau import maximal_subspaces
from .toric import DEFAULT_VERTEX_CAP, aomoto_betti, all_subsets, check_vertex_cap, resonance_arrangement


class PreconditionError(ValueError):
    pass


class ConsistencyError(AssertionError):
    """Two independent computations of the same invariant disagree."""


def _coeff(c):
    return parse_coefficients(c) if isinstance(c, str) else c


def character_values(G_vertices: Sequence[str], chi) -> dict:
    if isinstance(chi, Mapping):
        extra = set(chi) - set(G_vertices)
        if extra:
            raise ValueError(f"character mentions unknown vertices {sorted(extra)}")
        return {v: chi.get(v, 0) for v in G_vertices}
    chi = list(chi)
    if len(chi) != len(G_vertices):
        raise ValueError(f"character needs {len(G_vertices)} values, got {len(chi)}")
    return dict(zip(G_vertices, chi))


def support(G_vertices: Sequence[str], chi) -> frozenset:
    vals = character_values(G_vertices, chi)
    return frozenset(v for v, x in vals.items() if x != 0)


@lru_cache(maxsize=1024)
def _flag(G: Graph) -> SimplicialComplex:
    return flag_complex(G)


# ----------------------------------------------------------- MMV criterion


@lru_cache(maxsize=262144)
def support_is_good(L: SimplicialComplex, W: frozenset, q: int, coeff) -> bool:
    """The link-homology condition for supports W (nonempty) and degree q."""
    LW = L.induced(W)
    outside = frozenset(L.vertices) - W
    for sigma in L.faces:
        if not sigma <= outside:
            continue
        top_j = q - len(sigma) - 1  # q - dim(σ) - 2
        if top_j < -1:
            continue
        h = reduced_homology(L.link(LW, sigma), coeff)
        if not all(h.vanishes(j) for j in range(-1, top_j + 1)):
            return False
    return True


def sigma_member(G: Graph, chi, q: int, coeff=ZZ) -> bool:
    """Is χ ∈ Σ^q(G_Γ, coeff)?  ``coeff`` is ZZ, QQ or Field(p)."""
    W = support(G.vertices, chi)
    if not W:
        raise ValueError("χ must be nonzero")
    if q < 0:
        raise ValueError("q must be >= 0")
    return support_is_good(_flag(G), W, q, _coeff(coeff))


@dataclass(frozen=True)
class SupportVerdictTable:
    """Verdict per nonempty support W: True when characters with support W lie in Σ^q."""

    vertices: tuple[str, ...]
    q: int
    coefficients: str
    verdicts: tuple[tuple[frozenset, bool], ...]

    def verdict(self, W: Iterable[str]) -> bool:
        W = frozenset(W)
        if not W:
            return False  # 0 is never in Σ
        return dict(self.verdicts)[W]

    def good_supports(self) -> list[tuple[str, ...]]:
        pos = {v: k for k, v in enumerate(self.vertices)}
        out = [tuple(sorted(W, key=pos.__getitem__)) for W, ok in self.verdicts if ok]
        out.sort(key=lambda t: (len(t), [pos[v] for v in t]))
        return out

    def as_json(self) -> dict:
        return {"q": self.q, "coefficients": self.coefficients, "vertices": list(self.vertices),
                "good_supports": [list(W) for W in self.good_supports()]}


def sigma_describe(G: Graph, q: int, coeff=ZZ, cap: int = DEFAULT_VERTEX_CAP,
                   cross_check: bool = True) -> SupportVerdictTable:
    """Verdicts for every nonempty support.

    Over a field the table is cross-checked against the complement of the
    union of resonance varieties R^i_1 for i <= q.
    """
    check_vertex_cap(len(G.vertices), cap)
    coeff = _coeff(coeff)
    L = _flag(G)
    supports = [W for W in all_subsets(G.vertices) if W]
    verdicts = tuple((W, support_is_good(L, W, q, coeff)) for W in supports)
    table = SupportVerdictTable(G.vertices, q, str(coeff), verdicts)
    if cross_check and coeff is not ZZ:
        arrs = [resonance_arrangement(L, i, 1, coeff, cap) for i in range(q + 1)]
        for W, ok in verdicts:
            resonant = any(a.contains_support(W) for a in arrs)
            if ok == resonant:
                raise ConsistencyError(f"support {sorted(W)}: link criterion and resonance disagree")
    return table


# ------------------------------------------------------- Dwyer–Fried test


def _check_epimorphism(nu) -> list[list[int]]:
    nu = [[int(x) for x in row] for row in nu]
    if not nu:
        raise PreconditionError("ν needs at least one row")
    snf = smith_normal_form(nu)
    if snf.rank != len(nu) or any(d != 1 for d in snf.diagonal):
        raise PreconditionError(f"ν is not surjective onto Z^{len(nu)} (invariant factors {snf.diagonal})")
    return nu


def dwyer_fried_obstructions(L: SimplicialComplex, nu, q: int, field=QQ,
                             cap: int = DEFAULT_VERTEX_CAP) -> list[frozenset]:
    """Supports W with β_i(z_W) != 0 for some i <= q whose Q^W meets im(ν*)."""
    nu = _check_epimorphism(nu)
    if len(nu[0]) != len(L.vertices):
        raise ValueError(f"ν has {len(nu[0])} columns, complex has {len(L.vertices)} vertices")
    check_vertex_cap(len(L.vertices), cap)
    field = _coeff(field)
    pos = {v: k for k, v in enumerate(L.vertices)}
    bad = []
    for W in all_subsets(L.vertices):
        if not rowspace_meets_coordinate_subspace(nu, {pos[v] for v in W}):
            continue
        if any(aomoto_betti(L, W, i, field) for i in range(q + 1)):
            bad.append(W)
    return bad


def dwyer_fried_toric(L: SimplicialComplex, nu, q: int, field=QQ,
                      cap: int = DEFAULT_VERTEX_CAP) -> bool:
    """Is dim_k H_i(T_L^ν, k) finite for all i <= q?"""
    return not dwyer_fried_obstructions(L, nu, q, field, cap)


# ------------------------------------------------- Bestvina–Brady groups


@dataclass(frozen=True)
class BBPredicates:
    fg: bool
    h1_monodromy_trivial: bool
    h12_monodromy_trivial: bool
    fp_necessary: bool  # necessary condition only: Δ connected with H_1(Δ, Z) = 0
    h1_integral: HomologyProfile

    def as_json(self) -> dict:
        return {"fg": self.fg, "h1_monodromy_trivial": self.h1_monodromy_trivial,
                "h12_monodromy_trivial": self.h12_monodromy_trivial,
                "fp_necessary": self.fp_necessary,
                "fp_necessary_note": "necessary only; simple connectivity is not decided",
                "H1_Z": {"rank": self.h1_integral.betti(1),
                         "torsion": list(self.h1_integral.torsion_at(1))}}


def bestvina_brady_predicates(G: Graph) -> BBPredicates:
    connected = G.is_connected()
    D = _flag(G)
    hq = reduced_homology(D, QQ)
    hz = reduced_homology(D, ZZ)
    h12 = all(hq.betti(j) == 0 for j in (-1, 0, 1))
    fp = connected and hz.vanishes(1)
    return BBPredicates(connected, connected, h12, fp, hz)


# -------------------------------------------------------- Artin kernels


def maximal_disconnected_subsets(G: Graph, cap: int = DEFAULT_VERTEX_CAP) -> list[frozenset]:
    """Maximal W ⊆ V (|W| >= 2) whose induced subgraph is disconnected.

    Equivalently, complements of the inclusion-minimal vertex sets whose
    removal disconnects the graph.  Removal sets are tried by size, and
    supersets of separators already found are skipped.
    """
    check_vertex_cap(len(G.vertices), cap)
    V = G.vertices
    found: list[frozenset] = []
    for size in range(0, max(len(V) - 1, 0)):
        for S in itertools.combinations(V, size):
            S = frozenset(S)
            if any(f <= S for f in found):
                continue
            rest = [v for v in V if v not in S]
            if len(rest) >= 2 and not G.induced(rest).is_connected():
                found.append(S)
    pos = {v: k for k, v in enumerate(V)}
    out = [frozenset(V) - S for S in found]
    out.sort(key=lambda W: (-len(W), sorted(pos[v] for v in W)))
    return out


def _kernel_character(G: Graph, chi, assume_trivial_monodromy: bool) -> dict:
    vals = character_values(G.vertices, chi)
    if any(Fraction(x).denominator != 1 for x in vals.values()):
        raise PreconditionError("χ must have integer values")
    vals = {v: int(x) for v, x in vals.items()}
    g = 0
    for x in vals.values():
        g = math.gcd(g, x)
    if g != 1:
        raise PreconditionError(f"χ is not an epimorphism onto Z (gcd of values is {g})")
    if len(G.vertices) < 2:
        raise PreconditionError("Artin kernels need at least two vertices")
    if not assume_trivial_monodromy:
        diagonal = all(x == 1 for x in vals.values())
        if not (diagonal and G.is_connected()):
            raise PreconditionError(
                "trivial H_1-monodromy is only verified for the diagonal character on a "
                "connected graph; set the assume-trivial-monodromy flag to assert it")
    return vals


def artin_kernel_v11(G: Graph, chi, field=QQ, assume_trivial_monodromy: bool = False,
                     cap: int = DEFAULT_VERTEX_CAP) -> list[tuple[tuple[str, ...], int]]:
    """Components of V^1_1(N_χ, k): (W, dim ι*((k^×)^W)) for maximal disconnected Γ_W."""
    vals = _kernel_character(G, chi, assume_trivial_monodromy)
    supp = {v for v, x in vals.items() if x}
    pos = {v: k for k, v in enumerate(G.vertices)}
    out = []
    for W in maximal_disconnected_subsets(G, cap):
        dim = len(W) - 1 if supp <= W else len(W)
        out.append((tuple(sorted(W, key=pos.__getitem__)), dim))
    return out


@dataclass(frozen=True)
class QuotientSubspaceArrangement:
    """Subspaces of Q^V containing Qχ, standing for their images in Q^V/Qχ."""

    vertices: tuple[str, ...]
    chi: tuple[int, ...]
    members: tuple[SubspaceQ, ...]

    def covers_everything(self) -> bool:
        return any(s.dim == len(self.vertices) for s in self.members)

    def contains(self, v: Sequence) -> bool:
        return any(s.contains(v) for s in self.members)

    def as_json(self) -> dict:
        return {"vertices": list(self.vertices), "chi": list(self.chi),
                "subspaces": [{"quotient_dim": s.dim - 1,
                               "constraints": [list(r) for r in s.constraints]} for s in self.members]}


@dataclass(frozen=True)
class ArtinKernelSigma1Bound:
    arrangement: QuotientSubspaceArrangement
    empty_sigma: bool
    cut_vertices: tuple[str, ...]  # cut vertices v with χ(v) != 0
    assumed: bool

    def as_json(self) -> dict:
        return {"empty_sigma": self.empty_sigma, "cut_vertices_with_chi_nonzero": list(self.cut_vertices),
                "assumed_trivial_monodromy": self.assumed, "arrangement": self.arrangement.as_json()}


def artin_kernel_sigma1_bound(G: Graph, chi, assume_trivial_monodromy: bool = False,
                              cap: int = DEFAULT_VERTEX_CAP) -> ArtinKernelSigma1Bound:
    """Upper bound Σ^1(N_χ) ⊆ complement of the union of ι*(R^W), Γ_W disconnected.

    ``empty_sigma`` is set when a cut vertex carries a nonzero value of χ;
    then Q^(V∖v) + Qχ is everything and the arrangement is that one member,
    so no subset enumeration is needed.  A disconnected graph is its own
    disconnected induced subgraph, so it gives the whole space as well.
    """
    vals = _kernel_character(G, chi, assume_trivial_monodromy)
    V = G.vertices
    n = len(V)
    chi_vec = tuple(vals[v] for v in V)
    pos = {v: k for k, v in enumerate(V)}
    connected, cuts = graph_connectivity(G)
    hit = tuple(v for v in cuts if vals[v] != 0)
    if hit or not connected:
        arr = QuotientSubspaceArrangement(V, chi_vec, (SubspaceQ.whole(n),))
        return ArtinKernelSigma1Bound(arr, True, hit, assume_trivial_monodromy)
    subspaces = []
    for W in maximal_disconnected_subsets(G, cap):
        subspaces.append(SubspaceQ.coordinate(n, [pos[v] for v in W]) + SubspaceQ.from_span(n, [chi_vec]))
    members = maximal_subspaces(n, subspaces)
    arr = QuotientSubspaceArrangement(V, chi_vec, members)
    if arr.covers_everything():
        raise ConsistencyError("arrangement covers H^1 but no cut vertex carries χ")
    return ArtinKernelSigma1Bound(arr, False, (), assume_trivial_monodromy)
