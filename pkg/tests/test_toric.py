import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from jumploci.corpus import random_complex, small_complexes
from jumploci.exactlin import QQ, Field
from jumploci.simplicial import SimplicialComplex, reduced_homology
from jumploci.tau import EnumerationCapError
from jumploci.toric import (aomoto_betti, aomoto_betti_vector, aomoto_oracle, aomoto_oracle_vector,
                            charvar_arrangement, maximal_sets, resonance_arrangement, twisted_betti_oracle,
                            twisted_betti_vector)

F5 = Field(5)
path = SimplicialComplex.from_facets([("a", "b"), ("b", "c")])
edge = SimplicialComplex.from_facets([("a", "b")])
points = SimplicialComplex.from_facets([("a",), ("b",)])


# ---------------------------------------------------------------- examples


def test_aomoto_betti_examples():
    assert aomoto_betti(points, "ab", 1) == 1
    assert aomoto_betti(edge, "ab", 1) == 0
    assert aomoto_betti(path, "ac", 1) == 1
    assert aomoto_betti(path, "abc", 1) == 0


def test_aomoto_oracle_examples():
    assert aomoto_oracle(points, (1, 1), 1) == 1
    assert aomoto_oracle_vector(path, (0, 0, 0)) == (1, 3, 2)
    assert aomoto_oracle(path, {"a": 1, "b": 0, "c": -3}, 1) == 1


def test_twisted_oracle_examples():
    assert twisted_betti_vector(path, (1, 1, 1)) == (1, 3, 2)
    assert twisted_betti_oracle(points, (2, 3), 1) == 1
    assert twisted_betti_oracle(points, (1, 3), 1) == 1
    assert twisted_betti_oracle(edge, (2, 1), 1) == 0
    assert twisted_betti_oracle(edge, (2, 2), 1, F5) == 0


def test_twisted_oracle_rejects_zero():
    with pytest.raises(ValueError):
        twisted_betti_vector(edge, (0, 1))


def test_arrangement_examples():
    assert resonance_arrangement(path, 1).sorted_members() == [("a", "c")]
    assert resonance_arrangement(edge, 1).members == (frozenset(),)
    assert resonance_arrangement(points, 1).sorted_members() == [("a", "b")]
    assert charvar_arrangement(points, 1).sorted_members() == [("a", "b")]
    assert charvar_arrangement(edge, 1).members == (frozenset(),)
    assert str(resonance_arrangement(path, 1)) == "W = {a,c}"
    assert str(resonance_arrangement(edge, 1)) == "W = {}"


def test_depth_and_emptiness():
    # b_1 of the torus on two points is 2, so depth 2 is the point 0 only
    assert resonance_arrangement(points, 1, 2).members == (frozenset(),)
    assert resonance_arrangement(points, 1, 3).members == ()
    assert str(resonance_arrangement(points, 1, 3)) == "empty"


def test_degree_zero_is_the_origin():
    for K in small_complexes(3):
        assert resonance_arrangement(K, 0).members == (frozenset(),)
        assert charvar_arrangement(K, 0, field="F3").members == (frozenset(),)


def test_membership_by_support():
    R = resonance_arrangement(path, 1)
    assert R.contains_point((5, 0, -1)) and not R.contains_point((1, 1, 0))
    V = charvar_arrangement(path, 1)
    assert V.contains_point((2, 1, 3)) and not V.contains_point((2, 3, 1))


def test_bad_arguments():
    with pytest.raises(ValueError):
        resonance_arrangement(path, 1, 0)
    with pytest.raises(ValueError):
        resonance_arrangement(path, -1)
    big = SimplicialComplex.from_facets([(v,) for v in "abcdef"])
    with pytest.raises(EnumerationCapError):
        resonance_arrangement(big, 1, cap=5)


def test_maximal_sets():
    sets = [frozenset("ab"), frozenset("a"), frozenset("bc"), frozenset()]
    assert set(maximal_sets(sets)) == {frozenset("ab"), frozenset("bc")}
    assert maximal_sets([]) == ()


# -------------------------------------------------------------- properties


@st.composite
def complexes(draw, max_vertices=6):
    seed = draw(st.integers(0, 10**6))
    return random_complex(random.Random(seed), draw(st.integers(1, max_vertices)))


@given(complexes())
def test_empty_support_gives_face_numbers(K):
    assert aomoto_betti_vector(K, []) == K.f_vector()


@settings(max_examples=40)
@given(complexes(), st.data())
def test_euler_characteristic_is_independent_of_z(K, data):
    # alternating sum of the cochain ranks: -(reduced Euler characteristic of K)
    W = data.draw(st.sets(st.sampled_from(K.vertices)))
    euler = sum((-1) ** i * b for i, b in enumerate(aomoto_betti_vector(K, W)))
    h = reduced_homology(K, QQ)
    assert euler == -sum((-1) ** j * h.betti(j) for j in range(-1, h.top + 1))


@settings(max_examples=25)
@given(complexes(max_vertices=5), st.sampled_from([QQ, Field(2), Field(3)]))
def test_resonance_and_charvar_share_supports(K, field):
    R = resonance_arrangement(K, 1, field=field)
    V = charvar_arrangement(K, 1, field=field)
    assert R.members == V.members and R.kind == "subspace" and V.kind == "subtorus"


@settings(max_examples=25)
@given(complexes(max_vertices=5))
def test_full_support_top_degree(K):
    # with W = V only sigma = empty contributes: beta_i = dim H~_{i-1}(K)
    h = reduced_homology(K, QQ)
    vec = aomoto_betti_vector(K, K.vertices)
    assert all(vec[i] == h.betti(i - 1) for i in range(len(vec)))


def test_resonance_monotone_in_depth():
    for K in small_complexes(4):
        for i in range(3):
            prev = None
            for d in (1, 2, 3):
                A = resonance_arrangement(K, i, d)
                if prev is not None:
                    assert all(prev.contains_support(W) for W in A.members)
                prev = A


def test_twisted_matches_indicator_on_small_complexes():
    rng = random.Random(7)
    for K in small_complexes(4):
        for W in itertools.chain.from_iterable(itertools.combinations(K.vertices, r)
                                               for r in range(len(K.vertices) + 1)):
            rho = {v: (rng.randint(2, 4) if v in W else 1) for v in K.vertices}
            assert twisted_betti_vector(K, rho, F5) == aomoto_betti_vector(K, W, F5)
