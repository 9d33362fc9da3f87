"""Finite abstract simplicial complexes, graphs, and reduced homology.

The empty simplex is an ordinary member of a complex.  This gives three
distinct complexes at the bottom of the lattice:

* the void complex, with no simplices at all;
* the irrelevant complex ``{∅}``, whose only simplex is empty;
* everything else, which contains ∅ together with at least one vertex.

Dimension conventions: ``dim(σ) = |σ| - 1``, so ``dim(∅) = -1``.
Reduced homology puts the empty simplex in degree -1, which yields
``H̃_{-1}({∅}) = k`` and ``H̃_{-1}(K) = 0`` for nonempty ``K``.
"""

from __future__ import annotations

import itertools
import warnings
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable

import networkx as nx

from .exactlin import ZZ, Field, QQ, rank_over_field, smith_normal_form

Simplex = frozenset
EMPTY = frozenset()


class UnknownVertexError(ValueError):
    pass


@dataclass(frozen=True)
class SimplicialComplex:
    """A finite simplicial complex on named vertices.

    ``vertices`` fixes a total order (used for orientation signs) and lists
    exactly the 0-simplices.  ``faces`` holds every simplex, closed under
    taking subsets.
    """

    vertices: tuple[str, ...]
    faces: frozenset

    def __post_init__(self):
        vs = set(self.vertices)
        if len(vs) != len(self.vertices):
            raise ValueError("duplicate vertex names")
        singletons = {next(iter(s)) for s in self.faces if len(s) == 1}
        if singletons != vs:
            raise ValueError("vertex list must equal the set of 0-simplices")

    # -- construction ---------------------------------------------------

    @classmethod
    def from_facets(cls, facets: Iterable[Iterable[str]],
                    vertices: Iterable[str] | None = None) -> "SimplicialComplex":
        """Downward closure of ``facets``, always containing ∅.

        Extra names in ``vertices`` become isolated vertices; the order of
        ``vertices`` (else first appearance) is the orientation order.
        """
        facets = [tuple(f) for f in facets]
        order: list[str] = list(vertices) if vertices is not None else []
        seen = set(order)
        for f in facets:
            for v in f:
                if v not in seen:
                    if vertices is not None:
                        raise UnknownVertexError(f"vertex {v!r} not declared")
                    seen.add(v)
                    order.append(v)
        faces = {EMPTY}
        for v in order:
            faces.add(frozenset([v]))
        for f in facets:
            fs = frozenset(f)
            if fs in faces:
                continue
            for k in range(len(fs) + 1):
                faces.update(frozenset(c) for c in itertools.combinations(sorted(fs), k))
        return cls(tuple(order), frozenset(faces))

    @classmethod
    def void(cls) -> "SimplicialComplex":
        return cls((), frozenset())

    @classmethod
    def irrelevant(cls) -> "SimplicialComplex":
        """The complex {∅}."""
        return cls((), frozenset([EMPTY]))

    # -- basic structure ------------------------------------------------

    @cached_property
    def _index(self) -> dict:
        return {v: i for i, v in enumerate(self.vertices)}

    def key(self, s) -> tuple[str, ...]:
        """Vertices of ``s`` in the complex's order."""
        idx = self._index
        return tuple(sorted(s, key=idx.__getitem__))

    @property
    def is_void(self) -> bool:
        return not self.faces

    @property
    def dim(self) -> int:
        return max((len(s) for s in self.faces), default=0) - 1

    def __contains__(self, s) -> bool:
        return frozenset(s) in self.faces

    def __len__(self):
        return len(self.faces)

    def simplices(self, size: int) -> list[tuple[str, ...]]:
        """Simplices with ``size`` vertices, ordered keys, sorted."""
        idx = self._index
        out = [self.key(s) for s in self.faces if len(s) == size]
        out.sort(key=lambda t: [idx[v] for v in t])
        return out

    @cached_property
    def facets(self) -> tuple[tuple[str, ...], ...]:
        idx = self._index
        maximal = [s for s in self.faces
                   if not any(len(t) == len(s) + 1 and s < t for t in self.faces)]
        out = [self.key(s) for s in maximal]
        out.sort(key=lambda t: (len(t), [idx[v] for v in t]))
        return tuple(out)

    def f_vector(self) -> tuple[int, ...]:
        """Counts of simplices by cardinality 0, 1, 2, ... (∅ first)."""
        if self.is_void:
            return ()
        counts = [0] * (self.dim + 2)
        for s in self.faces:
            counts[len(s)] += 1
        return tuple(counts)

    def euler_characteristic(self) -> int:
        """Reduced Euler characteristic: sum of (-1)^dim over all simplices."""
        return sum((-1) ** (len(s) - 1) for s in self.faces)

    def _check_vertices(self, W):
        W = frozenset(W)
        bad = W - set(self.vertices)
        if bad:
            raise UnknownVertexError(f"unknown vertices {sorted(bad)}")
        return W

    # -- subcomplexes ---------------------------------------------------

    def induced(self, W: Iterable[str]) -> "SimplicialComplex":
        """L_W = {τ ∈ L : τ ⊆ W}."""
        W = self._check_vertices(W)
        faces = frozenset(s for s in self.faces if s <= W)
        return SimplicialComplex(tuple(v for v in self.vertices if v in W), faces)

    def link(self, K: "SimplicialComplex", sigma: Iterable[str]) -> "SimplicialComplex":
        """lk_K(σ) = {τ ∈ K : τ ∪ σ ∈ L}, membership tested in ``self`` = L."""
        sigma = frozenset(sigma)
        if sigma not in self.faces:
            raise ValueError(f"{sorted(sigma)} is not a simplex")
        faces = frozenset(t for t in K.faces if (t | sigma) in self.faces)
        verts = {next(iter(t)) for t in faces if len(t) == 1}
        return SimplicialComplex(tuple(v for v in K.vertices if v in verts), faces)

    def one_skeleton(self) -> "Graph":
        return Graph(self.vertices, frozenset(s for s in self.faces if len(s) == 2))

    def is_flag(self) -> bool:
        return flag_complex(self.one_skeleton()).faces == self.faces

    # -- constructions --------------------------------------------------

    def join(self, other: "SimplicialComplex") -> "SimplicialComplex":
        """L1 * L2 on disjoint vertex sets."""
        if set(self.vertices) & set(other.vertices):
            raise ValueError("join needs disjoint vertex sets")
        faces = frozenset(a | b for a in self.faces for b in other.faces)
        return SimplicialComplex(self.vertices + other.vertices, faces)

    def disjoint_union(self, other: "SimplicialComplex") -> "SimplicialComplex":
        if set(self.vertices) & set(other.vertices):
            raise ValueError("disjoint union needs disjoint vertex sets")
        return SimplicialComplex(self.vertices + other.vertices, self.faces | other.faces)

    def relabel(self, mapping: dict) -> "SimplicialComplex":
        faces = frozenset(frozenset(mapping[v] for v in s) for s in self.faces)
        return SimplicialComplex(tuple(mapping[v] for v in self.vertices), faces)

    def barycentric_subdivision(self) -> "SimplicialComplex":
        return barycentric_subdivision(self)


def simplex_name(s: tuple[str, ...]) -> str:
    return ".".join(s)


def barycentric_subdivision(K: SimplicialComplex) -> SimplicialComplex:
    """Order complex of the face poset of ``K`` (nonempty faces).

    A vertex of the result is named by joining the vertices of the
    corresponding simplex with dots, e.g. ``a.b``.
    """
    if K.is_void:
        return SimplicialComplex.void()
    nonempty = [K.key(s) for s in K.faces if s]
    idx = K._index
    nonempty.sort(key=lambda t: (len(t), [idx[v] for v in t]))
    by_set = {frozenset(t): simplex_name(t) for t in nonempty}
    faces = {EMPTY}
    # chains: extend each chain upward through strictly larger faces
    frontier = [(frozenset(t), (by_set[frozenset(t)],)) for t in nonempty]
    while frontier:
        nxt = []
        for top, chain in frontier:
            faces.add(frozenset(chain))
            for t in nonempty:
                ft = frozenset(t)
                if len(ft) > len(top) and top < ft:
                    nxt.append((ft, chain + (by_set[ft],)))
        frontier = nxt
    return SimplicialComplex(tuple(simplex_name(t) for t in nonempty), frozenset(faces))


# ------------------------------------------------------------------ graphs


@dataclass(frozen=True)
class Graph:
    """A simple graph on named vertices (order fixed at construction)."""

    vertices: tuple[str, ...]
    edges: frozenset

    def __post_init__(self):
        vs = set(self.vertices)
        for e in self.edges:
            if len(e) != 2:
                raise ValueError(f"bad edge {sorted(e)} (loops are not allowed)")
            if not e <= vs:
                raise UnknownVertexError(f"edge {sorted(e)} uses undeclared vertices")

    @classmethod
    def from_edges(cls, edges: Iterable[Iterable[str]],
                   vertices: Iterable[str] | None = None) -> "Graph":
        order = list(vertices) if vertices is not None else []
        seen = set(order)
        es = set()
        for e in edges:
            e = tuple(e)
            for v in e:
                if v not in seen:
                    if vertices is not None:
                        raise UnknownVertexError(f"vertex {v!r} not declared")
                    seen.add(v)
                    order.append(v)
            es.add(frozenset(e))
        return cls(tuple(order), frozenset(es))

    def to_networkx(self) -> nx.Graph:
        G = nx.Graph()
        G.add_nodes_from(self.vertices)
        G.add_edges_from(tuple(e) for e in self.edges)
        return G

    def adjacent(self, u, v) -> bool:
        return frozenset((u, v)) in self.edges

    def induced(self, W: Iterable[str]) -> "Graph":
        W = frozenset(W)
        bad = W - set(self.vertices)
        if bad:
            raise UnknownVertexError(f"unknown vertices {sorted(bad)}")
        return Graph(tuple(v for v in self.vertices if v in W),
                     frozenset(e for e in self.edges if e <= W))

    def sorted_edges(self) -> list[tuple[str, str]]:
        idx = {v: i for i, v in enumerate(self.vertices)}
        out = [tuple(sorted(e, key=idx.__getitem__)) for e in self.edges]
        out.sort(key=lambda e: (idx[e[0]], idx[e[1]]))
        return out

    def join(self, other: "Graph") -> "Graph":
        """Γ1 ∘ Γ2: disjoint union plus every edge between the two sides."""
        if set(self.vertices) & set(other.vertices):
            raise ValueError("join needs disjoint vertex sets")
        cross = {frozenset((a, b)) for a in self.vertices for b in other.vertices}
        return Graph(self.vertices + other.vertices, self.edges | other.edges | cross)

    def disjoint_union(self, other: "Graph") -> "Graph":
        if set(self.vertices) & set(other.vertices):
            raise ValueError("disjoint union needs disjoint vertex sets")
        return Graph(self.vertices + other.vertices, self.edges | other.edges)

    def relabel(self, mapping: dict) -> "Graph":
        return Graph(tuple(mapping[v] for v in self.vertices),
                     frozenset(frozenset(mapping[v] for v in e) for e in self.edges))

    def is_connected(self) -> bool:
        """Plain BFS; the empty graph counts as disconnected."""
        if not self.vertices:
            return False
        adj = {v: set() for v in self.vertices}
        for e in self.edges:
            a, b = tuple(e)
            adj[a].add(b)
            adj[b].add(a)
        start = self.vertices[0]
        seen = {start}
        stack = [start]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(self.vertices)


def flag_complex(G: Graph) -> SimplicialComplex:
    """Clique complex: every clique of ``G`` (and ∅) is a simplex."""
    faces = {EMPTY}
    for clique in nx.enumerate_all_cliques(G.to_networkx()):
        faces.add(frozenset(clique))
    return SimplicialComplex(G.vertices, frozenset(faces))


def graph_connectivity(G: Graph) -> tuple[bool, list[str]]:
    """(is_connected, cut vertices in vertex order).

    A cut vertex is one whose removal increases the number of components.
    """
    if not G.vertices:
        warnings.warn("empty graph reported as disconnected by convention", stacklevel=2)
        return False, []
    H = G.to_networkx()
    cuts = set(nx.articulation_points(H))
    return nx.is_connected(H), [v for v in G.vertices if v in cuts]


# ---------------------------------------------------------------- homology


@dataclass(frozen=True)
class HomologyProfile:
    """Reduced homology in degrees -1, 0, ..., top.

    Over a field ``ranks[j + 1]`` is the Betti number in degree ``j``.  Over
    Z it is the free rank and ``torsion[j + 1]`` lists the torsion
    coefficients (entries > 1 of the Smith form).
    """

    coefficients: str
    ranks: tuple[int, ...]
    torsion: tuple[tuple[int, ...], ...]

    def betti(self, j: int) -> int:
        k = j + 1
        return self.ranks[k] if 0 <= k < len(self.ranks) else 0

    def torsion_at(self, j: int) -> tuple[int, ...]:
        k = j + 1
        return self.torsion[k] if 0 <= k < len(self.torsion) else ()

    def vanishes(self, j: int) -> bool:
        """H̃_j is the zero group (free rank 0, no torsion)."""
        return self.betti(j) == 0 and not self.torsion_at(j)

    @property
    def top(self) -> int:
        return len(self.ranks) - 2

    def as_dict(self) -> dict:
        out = {}
        for j in range(-1, self.top + 1):
            if self.betti(j) or self.torsion_at(j):
                entry = {"rank": self.betti(j)}
                if self.coefficients == "Z":
                    entry["torsion"] = list(self.torsion_at(j))
                out[str(j)] = entry
        return out

    def __str__(self):
        parts = []
        for j in range(-1, self.top + 1):
            r, t = self.betti(j), self.torsion_at(j)
            if not r and not t:
                continue
            if self.coefficients == "Z":
                gs = (["Z^%d" % r if r > 1 else "Z"] if r else []) + [f"Z/{d}" for d in t]
                parts.append(f"H{j}=" + "+".join(gs))
            else:
                parts.append(f"H{j}={r}")
        return ", ".join(parts) if parts else "acyclic"


def boundary_matrix(K: SimplicialComplex, size: int) -> list[list[int]]:
    """Matrix of ∂ from simplices with ``size`` vertices to those with size-1.

    Rows index the (size-1)-vertex simplices, columns the size-vertex ones;
    removing the i-th vertex (in vertex order) carries sign (-1)^i.
    """
    rows = K.simplices(size - 1)
    cols = K.simplices(size)
    row_index = {r: i for i, r in enumerate(rows)}
    M = [[0] * len(cols) for _ in rows]
    for j, s in enumerate(cols):
        for i in range(len(s)):
            M[row_index[s[:i] + s[i + 1:]]][j] = (-1) ** i
    return M


@lru_cache(maxsize=65536)
def _homology(faces: frozenset, coeff_name: str) -> HomologyProfile:
    if not faces:
        return HomologyProfile(coeff_name, (0,), ((),))
    verts = sorted({v for s in faces for v in s})
    K = SimplicialComplex(tuple(verts), faces)
    top = K.dim
    counts = K.f_vector()  # counts[c] = number of simplices of cardinality c
    coeff = ZZ if coeff_name == "Z" else Field(0 if coeff_name == "Q" else int(coeff_name[1:]))
    # rank of ∂ out of cardinality c (degree c-1), c = 1..top+1; ∂ out of ∅ is 0
    ranks_out = [0] * (top + 3)
    torsion_in = [()] * (top + 3)
    for c in range(1, top + 2):
        M = boundary_matrix(K, c)
        if coeff is ZZ:
            snf = smith_normal_form(M)
            ranks_out[c] = snf.rank
            torsion_in[c - 1] = snf.torsion
        else:
            ranks_out[c] = rank_over_field(M, coeff)
    betti = []
    tors = []
    for c in range(0, top + 2):
        betti.append(counts[c] - ranks_out[c] - ranks_out[c + 1])
        tors.append(tuple(torsion_in[c]) if coeff is ZZ else ())
    return HomologyProfile(coeff_name, tuple(betti), tuple(tors))


def reduced_homology(K: SimplicialComplex, coeff=QQ) -> HomologyProfile:
    """Reduced homology of ``K`` over Q, F_p or Z (``ZZ``)."""
    if isinstance(coeff, str):
        from .exactlin import parse_coefficients
        coeff = parse_coefficients(coeff)
    return _homology(K.faces, coeff.name if coeff is not ZZ else "Z")


def homology_cache_clear():
    _homology.cache_clear()


# ----------------------------------------------------------- standard examples


def rp2_six_vertex() -> SimplicialComplex:
    """The minimal 6-vertex triangulation of the real projective plane."""
    tris = ["123", "134", "145", "156", "162", "235", "346", "452", "563", "624"]
    return SimplicialComplex.from_facets([tuple(t) for t in tris], vertices="123456")


def octahedron() -> SimplicialComplex:
    """Boundary of the octahedron (flag 2-sphere), antipodal pairs (a,A), (b,B), (c,C)."""
    facets = [(x, y, z) for x in "aA" for y in "bB" for z in "cC"]
    return SimplicialComplex.from_facets(facets, vertices="abcABC")


def path_graph(names: str = "abc") -> Graph:
    return Graph.from_edges(zip(names, names[1:]), vertices=names)


def cycle_graph(names: str) -> Graph:
    return Graph.from_edges(zip(names, names[1:] + names[0]), vertices=names)


def complete_graph(names: str) -> Graph:
    return Graph.from_edges(itertools.combinations(names, 2), vertices=names)
