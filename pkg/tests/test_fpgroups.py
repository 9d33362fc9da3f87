import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from jumploci.corpus import graphs_on, random_word, sample_presentations
from jumploci.exactlin import QQ, Field, SubspaceQ
from jumploci.fpgroups import (GroupPresentation, abelianize, alexander_matrix, alexander_minors, charvar1_member,
                               cyclic_cover_finite, fox_derivative, free_reduce, invert, minors_ideal_is_zero,
                               sigma1_excludes, sigma1_upper_bound, twisted_h1_dimension)
from jumploci.laurent import LaurentPolynomial, evaluate
from jumploci.simplicial import flag_complex
from jumploci.tau import RationalSubspaceArrangement
from jumploci.toric import resonance_arrangement, twisted_betti_oracle

P = LaurentPolynomial.parse
S = sample_presentations()
F5 = Field(5)
TRANSLATED = (1, 1, 2, -1, -1, -2)


def fox_ab(word, j, n=2):
    G = GroupPresentation.from_words(n, [])
    return abelianize(fox_derivative(word, j), G.abelianization, n)


# ------------------------------------------------------------------ words


def test_free_reduce_and_invert():
    assert free_reduce((1, 2, -2, -1, 3)) == (3,)
    assert invert((1, -2, 3)) == (-3, 2, -1)
    with pytest.raises(ValueError):
        free_reduce((1, 0))
    with pytest.raises(ValueError):
        GroupPresentation.from_words(2, [(3,)])


def test_word_str():
    G = S["translated"]
    assert G.word_str(G.relators[0]) == "x1^2 x2 x1^-2 x2^-1"
    assert G.word_str(()) == "1"


# ------------------------------------------------------------------- fox


def test_fox_examples():
    assert fox_derivative((1,), 1).to_str() == "1"
    assert fox_ab(TRANSLATED, 1) == P("(1+t1)*(1-t2)")
    assert fox_ab(TRANSLATED, 2) == P("t1^2 - 1", 2)
    assert fox_ab((-1,), 1) == P("-t1^-1", 2)
    with pytest.raises(ValueError):
        fox_derivative((1,), 0)


@given(st.integers(1, 3), st.integers(0, 10**6))
def test_fundamental_identity(n, seed):
    w = random_word(random.Random(seed), n, 12)
    G = GroupPresentation.from_words(n, [])
    lhs = sum((fox_ab(w, j, n) * (LaurentPolynomial.gen(n, j - 1) - 1) for j in range(1, n + 1)),
              LaurentPolynomial(n, {}))
    t_w = LaurentPolynomial.monomial(G.abelianization.project([w.count(j + 1) - w.count(-j - 1)
                                                               for j in range(n)]))
    assert lhs == t_w - 1


# ---------------------------------------------------------------- matrices


def test_alexander_matrix_examples():
    A = alexander_matrix(S["torus"])
    assert A.entries == ((P("1-t2"), P("t1-1", 2)),)
    A = alexander_matrix(S["translated"])
    assert A.entries == ((P("(1+t1)*(1-t2)"), P("t1^2-1", 2)),)
    for f in A.entries[0]:
        for k in range(1, 21):
            assert evaluate(f, (-1, k)) == 0
    assert alexander_matrix(S["free2"]).entries == ()
    assert alexander_matrix(S["free2"]).nrows == 0


def test_torsion_abelianization():
    ab = S["cyclic"].abelianization
    assert ab.free_rank == 0 and ab.torsion == (3,)
    ab = S["baumslag_solitar_1_2"].abelianization
    assert ab.free_rank == 1 and ab.torsion == ()


def test_minors_are_normalized_and_deduplicated():
    assert [str(f) for f in alexander_minors(S["torus"])] == ["t1 - 1", "t2 - 1"]
    assert [str(f) for f in alexander_minors(S["translated"])] == ["t1^2 - 1", "t1*t2 - t1 + t2 - 1"]
    assert minors_ideal_is_zero(S["free2"])
    assert not minors_ideal_is_zero(S["torus"])


# ----------------------------------------------------------- jump loci


def test_charvar1_examples():
    G = S["translated"]
    assert charvar1_member(G, (-1, 5))
    assert not charvar1_member(G, (2, 2))
    assert charvar1_member(G, (1, 1), d=2)
    assert not charvar1_member(G, (1, 1), d=3)
    assert charvar1_member(S["free2"], (1, 1), d=2)
    assert charvar1_member(S["free2"], (3, 4), d=1)
    assert not charvar1_member(S["free2"], (3, 4), d=2)
    with pytest.raises(ValueError):
        charvar1_member(G, (0, 1))
    with pytest.raises(ValueError):
        charvar1_member(G, (1,))
    with pytest.raises(ValueError):
        charvar1_member(G, (1, 1), d=0)


def test_trivial_character_gives_b1_over_the_field():
    assert twisted_h1_dimension(S["cyclic"], (), QQ) == 0
    assert twisted_h1_dimension(S["cyclic"], (), Field(3)) == 1
    assert twisted_h1_dimension(S["heisenberg"], (1, 1)) == 2


@pytest.mark.parametrize("G", graphs_on(4), ids=lambda G: ",".join(map("".join, G.sorted_edges())) or "none")
def test_raag_twisted_h1_matches_toric_oracle(G):
    P_ = GroupPresentation.raag(G)
    L = flag_complex(G)
    ab = P_.abelianization
    rng = random.Random(len(G.edges))
    for _ in range(6):
        s = [rng.choice([1, 2, 3, 4]) for _ in range(ab.free_rank)]
        rho = {}
        for j, v in enumerate(G.vertices):
            val = F5(1)
            for c in range(ab.free_rank):
                val = val * F5.power(F5(s[c]), ab.abf[c][j])
            rho[v] = val
        assert twisted_h1_dimension(P_, s, F5) == twisted_betti_oracle(L, rho, 1, F5)


@pytest.mark.parametrize("G", graphs_on(4), ids=lambda G: ",".join(map("".join, G.sorted_edges())) or "none")
def test_raag_sigma1_bound_matches_resonance(G):
    P_ = GroupPresentation.raag(G)
    bound = sigma1_upper_bound(P_)
    R = resonance_arrangement(flag_complex(G), 1)
    n = len(G.vertices)
    if n - len(G.edges) > 1:
        assert bound.is_whole()
        return
    assert P_.abelianization.abf == tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
    expect = RationalSubspaceArrangement.from_subspaces(
        n, [SubspaceQ.coordinate(n, {G.vertices.index(v) for v in W}) for W in R.members])
    assert bound == expect


def test_sigma1_bound_examples():
    assert sigma1_upper_bound(S["translated"]) == RationalSubspaceArrangement.origin(2)
    assert sigma1_upper_bound(S["free3"]).is_whole()
    assert sigma1_upper_bound(GroupPresentation.from_words(1, [])) == RationalSubspaceArrangement.origin(1)
    # the bound is symmetric, so it cannot see the one-sided invariant here
    assert sigma1_upper_bound(S["baumslag_solitar_1_2"]) == RationalSubspaceArrangement.origin(1)
    assert sigma1_excludes(sigma1_upper_bound(S["free3"]), (1, 0, 0))
    with pytest.raises(ValueError):
        sigma1_excludes(sigma1_upper_bound(S["free3"]), (0, 0, 0))


def test_cyclic_cover_examples():
    G = S["translated"]
    assert cyclic_cover_finite(G, (1, 0))
    assert cyclic_cover_finite(G, (0, 1))
    assert not cyclic_cover_finite(S["free2"], (1, 1))
    assert cyclic_cover_finite(S["free2"], (1, 1), q=0)
    # the kernel of the Heisenberg group onto Z is Z^2
    assert cyclic_cover_finite(S["heisenberg"], (1, 0))
    for z, q in [((0, 0), 1), ((2, 4), 1), ((1,), 1), ((1, 0), 2)]:
        with pytest.raises(ValueError):
            cyclic_cover_finite(G, z, q)
