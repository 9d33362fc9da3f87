"""Seeded test corpora: small complexes and graphs up to isomorphism,
random complexes, Laurent polynomials and words.

All jump-loci and Σ invariants computed here are equivariant under vertex
permutations (a relabelling permutes the W's), so sweeping one
representative per isomorphism class together with every W covers every
labelled case.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from functools import lru_cache

import networkx as nx

from .fpgroups import GroupPresentation, free_reduce
from .laurent import LaurentPolynomial
from .simplicial import Graph, SimplicialComplex

NAMES = "abcdefghijklmnopqrstuvwxyz"


@dataclass(frozen=True)
class CorpusConfig:
    seed: int = 20240611
    max_vertices: int = 5
    random_complexes: int = 100
    random_min_vertices: int = 6
    random_max_vertices: int = 8
    laurent_count: int = 50
    laurent_max_vars: int = 3
    laurent_max_support: int = 8
    word_count: int = 200
    word_max_length: int = 12


# ------------------------------------------------------------- complexes


def _downsets(n: int):
    """Downward-closed families of subsets of range(n) containing every singleton."""
    candidates = [frozenset(c) for r in range(2, n + 1) for c in itertools.combinations(range(n), r)]
    base = {frozenset()} | {frozenset([v]) for v in range(n)}

    def rec(k, chosen):
        if k == len(candidates):
            yield frozenset(chosen)
            return
        s = candidates[k]
        yield from rec(k + 1, chosen)
        if all(s - {v} in chosen for v in s):
            chosen.add(s)
            yield from rec(k + 1, chosen)
            chosen.remove(s)

    yield from rec(0, set(base))


@lru_cache(maxsize=None)
def complexes_on(n: int) -> tuple[SimplicialComplex, ...]:
    """One complex per isomorphism class with exactly ``n`` vertices (n >= 0).

    Labelled downsets are scanned in a fixed order; each new one is kept
    and its whole orbit under vertex permutations is marked as seen.
    """
    if n == 0:
        return (SimplicialComplex.irrelevant(),)
    names = NAMES[:n]
    perms = list(itertools.permutations(range(n)))
    seen: set = set()
    out = []
    for faces in _downsets(n):
        if faces in seen:
            continue
        for p in perms:
            seen.add(frozenset(frozenset(p[v] for v in f) for f in faces))
        out.append(SimplicialComplex(tuple(names), frozenset(frozenset(names[v] for v in f) for f in faces)))
    return tuple(out)


def small_complexes(max_vertices: int) -> list[SimplicialComplex]:
    return [K for n in range(max_vertices + 1) for K in complexes_on(n)]


def random_complex(rng: random.Random, n: int, density: float = 0.5) -> SimplicialComplex:
    """Downward closure of random facets; every vertex appears."""
    names = NAMES[:n]
    facets = [(v,) for v in names]
    for _ in range(rng.randint(1, 2 * n)):
        size = min(rng.choice([2, 2, 3, 3, 4]), n)
        if rng.random() < density:
            facets.append(tuple(rng.sample(names, size)))
    return SimplicialComplex.from_facets(facets, vertices=names)


def random_complexes(cfg: CorpusConfig) -> list[SimplicialComplex]:
    rng = random.Random(cfg.seed)
    return [random_complex(rng, rng.randint(cfg.random_min_vertices, cfg.random_max_vertices))
            for _ in range(cfg.random_complexes)]


# ----------------------------------------------------------------- graphs


@lru_cache(maxsize=None)
def graphs_on(n: int) -> tuple[Graph, ...]:
    """All graphs with exactly ``n`` vertices up to isomorphism (n <= 7)."""
    out = []
    for H in nx.graph_atlas_g():
        if H.number_of_nodes() == n:
            names = NAMES[:n]
            out.append(Graph.from_edges(((names[a], names[b]) for a, b in H.edges()), vertices=names))
    return tuple(out)


def small_graphs(max_vertices: int, min_vertices: int = 1) -> list[Graph]:
    return [G for n in range(min_vertices, max_vertices + 1) for G in graphs_on(n)]


def relabel_apart(G1: Graph, G2: Graph) -> tuple[Graph, Graph]:
    """Rename vertices to x1.. and y1.. so the two graphs are disjoint."""
    return (G1.relabel({v: f"x{k + 1}" for k, v in enumerate(G1.vertices)}),
            G2.relabel({v: f"y{k + 1}" for k, v in enumerate(G2.vertices)}))


# ------------------------------------------------------------ polynomials


def random_laurent(rng: random.Random, n: int, max_support: int, balance: float = 0.7) -> LaurentPolynomial:
    """Random f, built to vanish at 1 with probability ``balance``.

    About half of the balanced ones are products of binomials t^a - 1, whose
    tangent cones have positive-dimensional components.
    """
    if rng.random() < balance / 2:
        f = LaurentPolynomial.constant(n, 1)
        for _ in range(rng.randint(1, 3)):
            a = [rng.randint(-1, 1) for _ in range(n)]
            if not any(a):
                a[rng.randrange(n)] = 1
            g = LaurentPolynomial.monomial(a) - 1
            if len(f * g) > max_support:
                break
            f = f * g
        if not f.is_zero() and len(f) > 1:
            return f
    size = rng.randint(2, min(max_support, 5 ** n))
    terms = {}
    while len(terms) < size:
        e = tuple(rng.randint(-2, 2) for _ in range(n))
        terms[e] = rng.choice([-3, -2, -1, 1, 2, 3])
    if rng.random() < balance:
        last = next(iter(terms))
        rest = sum(c for e, c in terms.items() if e != last)
        if rest == 0:
            del terms[last]
        else:
            terms[last] = -rest
    f = LaurentPolynomial(n, terms)
    return f if not f.is_zero() else LaurentPolynomial(n, {(0,) * n: 1})


def random_laurent_corpus(cfg: CorpusConfig) -> list[LaurentPolynomial]:
    rng = random.Random(cfg.seed + 1)
    return [random_laurent(rng, rng.randint(1, cfg.laurent_max_vars), cfg.laurent_max_support)
            for _ in range(cfg.laurent_count)]


# ------------------------------------------------------------------ words


def random_word(rng: random.Random, n: int, max_length: int) -> tuple[int, ...]:
    """A freely reduced word of length <= max_length (possibly empty)."""
    target = rng.randint(0, max_length)
    w: list[int] = []
    while len(w) < target:
        x = rng.choice([j for j in range(-n, n + 1) if j])
        if w and w[-1] == -x:
            continue
        w.append(x)
    return free_reduce(w)


def random_words(cfg: CorpusConfig) -> list[tuple[int, tuple[int, ...]]]:
    rng = random.Random(cfg.seed + 2)
    out = []
    for _ in range(cfg.word_count):
        n = rng.randint(1, 3)
        out.append((n, random_word(rng, n, cfg.word_max_length)))
    return out


# ----------------------------------------------------------- presentations


def sample_presentations() -> dict[str, GroupPresentation]:
    """Named presentations used across tests and scripts (words are 1-based letters)."""
    from .simplicial import cycle_graph, path_graph

    return {
        "translated": GroupPresentation.from_words(2, [(1, 1, 2, -1, -1, -2)]),
        "torus": GroupPresentation.from_words(2, [(1, 2, -1, -2)]),
        "baumslag_solitar_1_2": GroupPresentation.from_words(2, [(1, 2, -1, -2, -2)]),
        "trefoil": GroupPresentation.from_words(2, [(1, 2, 1, -2, -1, -2)]),
        "free2": GroupPresentation.from_words(2, []),
        "free3": GroupPresentation.from_words(3, []),
        "cyclic": GroupPresentation.from_words(1, [(1, 1, 1)]),
        "heisenberg": GroupPresentation.from_words(
            2, [(1, 1, 2, -1, -2, -1, 2, 1, -2, -1), (2, 1, 2, -1, -2, -2, 2, 1, -2, -1)]),
        "raag_path4": GroupPresentation.raag(path_graph("abcd")),
        "raag_cycle4": GroupPresentation.raag(cycle_graph("abcd")),
    }
