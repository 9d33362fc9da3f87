from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from jumploci.exactlin import (QQ, ZZ, DimensionError, Field, SubspaceQ, is_prime, matmul, nullspace,
                               parse_coefficients, parse_field, rank_over_field, rowspace_meets_coordinate_subspace,
                               rref, smith_normal_form, subspace_intersect, subspace_member)


def matrices(max_rows=5, max_cols=5, lo=-4, hi=4):
    return st.integers(1, max_cols).flatmap(
        lambda c: st.lists(st.lists(st.integers(lo, hi), min_size=c, max_size=c), min_size=1, max_size=max_rows))


def det(M):
    if not M:
        return 1
    return sum((-1) ** j * M[0][j] * det([r[:j] + r[j + 1:] for r in M[1:]]) for j in range(len(M)))


# ------------------------------------------------------------------ fields


def test_field_coercion_and_inverse():
    F5 = Field(5)
    assert F5(7) == 2
    assert F5(Fraction(1, 2)) == 3
    assert F5.inv(2) == 3
    assert QQ(3) == Fraction(3)
    with pytest.raises(ZeroDivisionError):
        F5(Fraction(1, 5))


@pytest.mark.parametrize("p", [1, 4, 9, 2**31 + 11])
def test_field_rejects_non_primes(p):
    with pytest.raises(ValueError):
        Field(p)


def test_coefficient_parsing():
    assert parse_coefficients("Z") is ZZ
    assert parse_coefficients("Q") == QQ
    assert parse_coefficients("F3") == Field(3)
    with pytest.raises(ValueError):
        parse_field("Z")
    with pytest.raises(ValueError):
        parse_coefficients("F6")


def test_is_prime_small():
    assert [p for p in range(30) if is_prime(p)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]


# ------------------------------------------------------------------- ranks


def test_rank_examples():
    assert rank_over_field([[0, 0], [0, 0]]) == 0
    assert rank_over_field([[2, 0], [0, 0]], Field(2)) == 0
    assert rank_over_field([[2, 0], [0, 0]], QQ) == 1
    assert rank_over_field([[Fraction(1, 2), 1], [1, 2]]) == 1


@given(matrices())
def test_rank_matches_rref(M):
    R, pivots = rref(M)
    assert rank_over_field(M) == len(R) == len(pivots)


@given(matrices(), st.sampled_from([2, 3, 5, 7]))
def test_modular_rank_never_exceeds_rational(M, p):
    assert rank_over_field(M, p) <= rank_over_field(M)


@given(matrices())
def test_nullspace_is_kernel(M):
    K = nullspace(M)
    n = len(M[0])
    assert len(K) == n - rank_over_field(M)
    for v in K:
        assert all(sum(a * b for a, b in zip(row, v)) == 0 for row in M)


# -------------------------------------------------------------------- smith


def test_smith_examples():
    assert smith_normal_form([[1, 0, 0], [0, 1, 0], [0, 0, 1]]).diagonal == (1, 1, 1)
    assert smith_normal_form([[2]]).diagonal == (2,)
    assert smith_normal_form([[1, 2], [3, 4]]).diagonal == (1, 2)
    assert smith_normal_form([[2, 4], [6, 8]]).torsion == (2, 4)


@settings(max_examples=60)
@given(matrices(max_rows=4, max_cols=4, lo=-6, hi=6))
def test_smith_transforms(M):
    S = smith_normal_form(M, transforms=True)
    D = matmul(matmul([list(r) for r in S.left], M), [list(r) for r in S.right])
    m, n = len(M), len(M[0])
    for i in range(m):
        for j in range(n):
            expect = S.diagonal[i] if i == j and i < S.rank else 0
            assert D[i][j] == expect
    assert abs(det([list(r) for r in S.left])) == 1
    assert abs(det([list(r) for r in S.right])) == 1
    assert all(b % a == 0 for a, b in zip(S.diagonal, S.diagonal[1:]))
    assert all(d > 0 for d in S.diagonal)
    assert S.rank == rank_over_field(M)


# --------------------------------------------------------------- subspaces


def test_subspace_examples():
    a = SubspaceQ.from_constraints(2, [[1, 0]])
    b = SubspaceQ.from_constraints(2, [[0, 1]])
    assert subspace_intersect(a, b) == SubspaceQ.zero(2)
    assert subspace_intersect(a, a) == a
    c = SubspaceQ.from_constraints(3, [[1, -1, 0]])
    d = SubspaceQ.from_constraints(3, [[1, 0, 0]])
    assert subspace_intersect(c, d) == SubspaceQ.from_constraints(3, [[1, 0, 0], [0, 1, 0]])
    assert str(subspace_intersect(c, d)) == "{z1=0, z2=0}"
    assert subspace_member(a, (0, 0))
    assert subspace_member(SubspaceQ.from_constraints(2, [[1, -1]]), (1, 1))
    assert not subspace_member(SubspaceQ.from_constraints(2, [[1, 1]]), (1, 0))
    assert str(SubspaceQ.whole(3)) == "Q^3"
    assert str(SubspaceQ.zero(2)) == "{0}"


def test_subspace_dimension_mismatch():
    with pytest.raises(DimensionError):
        subspace_intersect(SubspaceQ.whole(2), SubspaceQ.whole(3))


@given(matrices(max_rows=3, max_cols=4), matrices(max_rows=3, max_cols=4))
def test_grassmann_formula(A, B):
    n = min(len(A[0]), len(B[0]))
    A = [r[:n] for r in A]
    B = [r[:n] for r in B]
    U = SubspaceQ.from_span(n, A)
    V = SubspaceQ.from_span(n, B)
    assert U.intersect(V).dim + (U + V).dim == U.dim + V.dim
    for v in A:
        assert U.contains(v)
    assert U.intersect(V).issubset(U) and U.issubset(U + V)


@given(matrices(max_rows=3, max_cols=5))
def test_span_and_constraints_are_dual(A):
    n = len(A[0])
    U = SubspaceQ.from_span(n, A)
    assert U.dim == rank_over_field(A)
    assert SubspaceQ.from_span(n, U.basis) == U
    assert all(U.contains(b) for b in U.basis)


def test_rowspace_meets_examples():
    assert rowspace_meets_coordinate_subspace([[1, 1, 1]], {0, 2}) is False
    assert rowspace_meets_coordinate_subspace([[1, 0, 1]], {0, 2}) is True
    assert rowspace_meets_coordinate_subspace([[1, 0, 1]], set()) is False


@given(matrices(max_rows=3, max_cols=4), st.sets(st.integers(0, 3)))
def test_rowspace_meets_matches_subspace_intersection(N, W):
    n = len(N[0])
    W = {w for w in W if w < n}
    direct = SubspaceQ.from_span(n, N).intersect(SubspaceQ.coordinate(n, W)).dim > 0
    assert rowspace_meets_coordinate_subspace(N, W) == direct
