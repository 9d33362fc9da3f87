import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from jumploci.corpus import graphs_on, small_graphs
from jumploci.exactlin import QQ, ZZ, Field
from jumploci.simplicial import (Graph, SimplicialComplex, complete_graph, cycle_graph, flag_complex, octahedron,
                                 path_graph)
from jumploci.sigma import (ConsistencyError, PreconditionError, artin_kernel_sigma1_bound, artin_kernel_v11,
                            bestvina_brady_predicates, character_values, dwyer_fried_obstructions,
                            dwyer_fried_toric, maximal_disconnected_subsets, sigma_describe, sigma_member,
                            support)
from jumploci.toric import resonance_arrangement

F2, F3 = Field(2), Field(3)
edge = Graph.from_edges([("a", "b")])
two = Graph.from_edges([], vertices="ab")
P3 = path_graph("abc")
C4 = cycle_graph("abcd")


def ones(G):
    return {v: 1 for v in G.vertices}


# --------------------------------------------------------------- characters


def test_character_values():
    assert character_values("abc", {"a": 2}) == {"a": 2, "b": 0, "c": 0}
    assert character_values("ab", [1, -1]) == {"a": 1, "b": -1}
    assert support("abc", [0, 1, 0]) == frozenset("b")
    with pytest.raises(ValueError):
        character_values("ab", {"z": 1})
    with pytest.raises(ValueError):
        character_values("ab", [1])


# -------------------------------------------------------------- membership


@pytest.mark.parametrize("q", [0, 1, 2, 5])
@pytest.mark.parametrize("coeff", [ZZ, QQ, F2])
def test_torus_is_all_of_sigma(q, coeff):
    for chi in ([1, 0], [0, -3], [2, 5]):
        assert sigma_member(edge, chi, q, coeff)


def test_free_group_has_empty_sigma1():
    for chi in ([1, 0], [1, 1], [-2, 3]):
        assert not sigma_member(two, chi, 1, ZZ)
        assert sigma_member(two, chi, 0, ZZ)


def test_membership_errors():
    with pytest.raises(ValueError):
        sigma_member(edge, [0, 0], 1)
    with pytest.raises(ValueError):
        sigma_member(edge, [1, 0], -1)


def test_describe_examples():
    assert sigma_describe(P3, 1, QQ).good_supports() == [("b",), ("a", "b"), ("b", "c"), ("a", "b", "c")]
    assert sigma_describe(edge, 5, ZZ).good_supports() == [("a",), ("b",), ("a", "b")]
    assert sigma_describe(two, 1, QQ).good_supports() == []
    table = sigma_describe(P3, 1, ZZ)
    assert table.verdict("b") and not table.verdict("ac") and not table.verdict("")
    assert table.as_json()["coefficients"] == "Z"


def test_octahedral_graph_degrees():
    G = octahedron().one_skeleton()
    chi = ones(G)
    assert sigma_member(G, chi, 2, ZZ)
    assert not sigma_member(G, chi, 3, ZZ)


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(small_graphs(5, 2)), st.integers(0, 3), st.sampled_from([QQ, F2, F3]))
def test_describe_cross_check_never_fires(G, q, field):
    sigma_describe(G, q, field)


def test_cross_check_fires_on_a_wrong_verdict(monkeypatch):
    import jumploci.sigma as sigma

    monkeypatch.setattr(sigma, "support_is_good", lambda L, W, q, c: True)
    with pytest.raises(ConsistencyError):
        sigma.sigma_describe(two, 1, QQ)


# ------------------------------------------------------------ Dwyer-Fried


def test_dwyer_fried_examples():
    pts = SimplicialComplex.from_facets([("a",), ("b",)])
    assert dwyer_fried_toric(pts, [[1, 1]], 1) is False
    path = flag_complex(P3)
    assert dwyer_fried_obstructions(path, [[1, 1, 1]], 1) == []
    assert dwyer_fried_toric(path, [[1, 0, 1]], 1) is False
    assert dwyer_fried_toric(octahedron(), [[1] * 6], 3) is False


def test_dwyer_fried_needs_an_epimorphism():
    pts = SimplicialComplex.from_facets([("a",), ("b",)])
    with pytest.raises(PreconditionError):
        dwyer_fried_toric(pts, [[2, 2]], 1)
    with pytest.raises(PreconditionError):
        dwyer_fried_toric(pts, [[1, 1], [1, 1]], 1)
    with pytest.raises(ValueError):
        dwyer_fried_toric(pts, [[1, 1, 1]], 1)


def test_identity_nu_obstructions_are_the_resonant_supports():
    # im(ν*) is everything, so every nonempty W meets it
    for G in small_graphs(4, 1):
        L = flag_complex(G)
        n = len(L.vertices)
        nu = [[int(i == j) for j in range(n)] for i in range(n)]
        for q in (0, 1, 2):
            arrs = [resonance_arrangement(L, i) for i in range(q + 1)]
            expect = {frozenset(c) for r in range(1, n + 1) for c in itertools.combinations(L.vertices, r)
                      if any(A.contains_support(c) for A in arrs)}
            assert set(dwyer_fried_obstructions(L, nu, q)) == expect


# ------------------------------------------------------------ BB groups


def test_bb_examples():
    r = bestvina_brady_predicates(P3)
    assert (r.fg, r.h1_monodromy_trivial, r.h12_monodromy_trivial, r.fp_necessary) == (True, True, True, True)
    r = bestvina_brady_predicates(two)
    assert not r.fg and not r.fp_necessary
    r = bestvina_brady_predicates(C4)
    assert r.fg and not r.h12_monodromy_trivial and not r.fp_necessary
    js = r.as_json()
    assert js["H1_Z"] == {"rank": 1, "torsion": []}


# ----------------------------------------------------------- Artin kernels


def test_v11_examples():
    assert artin_kernel_v11(P3, ones(P3)) == [(("a", "c"), 2)]
    assert artin_kernel_v11(P3, {"a": 1, "b": 0, "c": 1}, assume_trivial_monodromy=True) == [(("a", "c"), 1)]
    assert artin_kernel_v11(complete_graph("abcd"), ones(complete_graph("abcd"))) == []
    assert artin_kernel_v11(C4, ones(C4)) == [(("a", "c"), 2), (("b", "d"), 2)]


def test_kernel_preconditions():
    with pytest.raises(PreconditionError):
        artin_kernel_v11(P3, {"a": 1, "b": 0, "c": 1})
    with pytest.raises(PreconditionError):
        artin_kernel_v11(P3, {"a": 2, "b": 2, "c": 2}, assume_trivial_monodromy=True)
    with pytest.raises(PreconditionError):
        artin_kernel_v11(P3, {"a": 0.5, "b": 1, "c": 1}, assume_trivial_monodromy=True)
    with pytest.raises(PreconditionError):
        artin_kernel_v11(Graph.from_edges([], vertices="a"), {"a": 1})
    with pytest.raises(PreconditionError):
        artin_kernel_sigma1_bound(two, ones(two))


def test_sigma1_bound_examples():
    rec = artin_kernel_sigma1_bound(P3, ones(P3))
    assert rec.empty_sigma and rec.cut_vertices == ("b",) and rec.arrangement.covers_everything()
    rec = artin_kernel_sigma1_bound(C4, ones(C4))
    assert not rec.empty_sigma and len(rec.arrangement.members) == 2
    assert all(s.dim == 3 for s in rec.arrangement.members)
    # the members are {z_a = z_c} and {z_b = z_d}
    assert rec.arrangement.contains((1, 5, 1, 0)) and rec.arrangement.contains((0, 2, 7, 2))
    assert not rec.arrangement.contains((1, 2, 3, 4))
    assert [s["quotient_dim"] for s in rec.as_json()["arrangement"]["subspaces"]] == [2, 2]


def test_disconnected_graph_gives_empty_sigma():
    rec = artin_kernel_sigma1_bound(two, ones(two), assume_trivial_monodromy=True)
    assert rec.empty_sigma and rec.cut_vertices == ()


@pytest.mark.parametrize("G", [G for G in small_graphs(5, 2)], ids=lambda G: f"{len(G.vertices)}:{len(G.edges)}")
def test_maximal_disconnected_matches_brute_force(G):
    V = G.vertices
    disc = [frozenset(c) for r in range(2, len(V) + 1) for c in itertools.combinations(V, r)
            if not G.induced(c).is_connected()]
    maximal = {W for W in disc if not any(W < U for U in disc)}
    assert set(maximal_disconnected_subsets(G)) == maximal


@pytest.mark.parametrize("G", [G for G in small_graphs(5, 2) if G.is_connected()],
                         ids=lambda G: f"{len(G.vertices)}:{len(G.edges)}")
def test_empty_sigma_iff_arrangement_covers(G):
    chi = ones(G)
    rec = artin_kernel_sigma1_bound(G, chi)
    assert rec.empty_sigma == rec.arrangement.covers_everything()
    n = len(G.vertices)
    for W, dim in artin_kernel_v11(G, chi):
        # the diagonal is never inside a proper coordinate subspace
        assert dim == len(W) and len(W) < n
