from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from helpers import brute_rank
from prepro.linalg import Echelon, RationalMatrix, Subspace, kernel, rref


def matrices(rows, cols, lo=-2, hi=2):
    return st.lists(st.lists(st.integers(lo, hi), min_size=cols, max_size=cols),
                    min_size=rows, max_size=rows)


def vectors_in(n, max_count=5):
    return st.lists(st.lists(st.integers(-2, 2), min_size=n, max_size=n), max_size=max_count)


def test_rref_identity():
    m, rank = rref(RationalMatrix.identity(2))
    assert m == RationalMatrix.identity(2)
    assert rank == 2


def test_rref_dependent_rows():
    m, rank = rref(RationalMatrix([[1, 2], [2, 4]]))
    assert m == RationalMatrix([[1, 2]])
    assert rank == 1


def test_rref_normalizes_pivots():
    m, rank = rref(RationalMatrix([[0, 3, 6], [2, 4, 0]]))
    assert rank == 2
    assert m.entries == ((1, 0, -4), (0, 1, 2))


@given(matrices(6, 6))
def test_rank_matches_elimination_oracle(rows):
    _, rank = rref(RationalMatrix(rows))
    assert rank == brute_rank(rows)


@given(matrices(4, 5))
def test_rref_idempotent(rows):
    m, _ = rref(RationalMatrix(rows))
    again, _ = rref(m)
    assert again == m


def test_entries_are_exact():
    m = RationalMatrix([["1/3", 2], [Fraction(4, 6), 0]])
    assert m[1, 0] == Fraction(2, 3)
    assert m[1, 0].denominator == 3
    with pytest.raises(TypeError):
        RationalMatrix([[0.5]])


def test_kernel_zero_matrix():
    assert kernel(RationalMatrix.zeros(3, 3)).dim == 3


def test_kernel_identity():
    assert kernel(RationalMatrix.identity(4)).dim == 0


def test_kernel_single_row():
    m = RationalMatrix([[1, 1, 0]])
    k = kernel(m)
    assert k.dim == 2
    for row in k.basis.entries:
        assert m.apply(row) == (0,)


@given(matrices(3, 5))
def test_rank_nullity(rows):
    m = RationalMatrix(rows)
    k = kernel(m)
    assert k.dim + rref(m)[1] == 5
    for v in k.basis.entries:
        assert all(x == 0 for x in m.apply(v))


def test_subspace_sum_and_intersection_basics():
    a = Subspace(2, [[1, 0]])
    b = Subspace(2, [[0, 1]])
    assert (a + b).dim == 2
    assert (a & b).dim == 0
    assert a + a == a
    assert a & a == a


def test_ambient_mismatch_rejected():
    with pytest.raises(ValueError):
        Subspace(2, [[1, 0]]).intersect(Subspace(3, [[1, 0, 0]]))
    with pytest.raises(ValueError):
        Subspace(2, [[1, 0]]) + Subspace(3)


def test_contains_is_exact():
    s = Subspace(3, [[1, 1, 0], [0, 1, 1]])
    assert s.contains([1, 2, 1])
    assert not s.contains([1, 0, 0])
    assert [Fraction(1, 3), Fraction(1, 3), 0] in s


def test_equality_is_representation_independent():
    assert Subspace(3, [[1, 1, 0], [0, 1, 1]]) == Subspace(3, [[1, 2, 1], [2, 2, 0]])


@given(vectors_in(8), vectors_in(8))
def test_modular_dimension_law(u, v):
    a, b = Subspace(8, u), Subspace(8, v)
    assert (a + b).dim + (a & b).dim == a.dim + b.dim


@given(vectors_in(6), vectors_in(6))
def test_intersection_is_contained_in_both(u, v):
    a, b = Subspace(6, u), Subspace(6, v)
    c = a & b
    assert c.issubspace(a) and c.issubspace(b)
    assert a.issubspace(a + b) and b.issubspace(a + b)


@given(vectors_in(5, 7))
def test_echelon_independent_of_insertion_order(rows):
    e1 = Echelon({i: Fraction(x) for i, x in enumerate(r) if x} for r in rows)
    e2 = Echelon({i: Fraction(x) for i, x in enumerate(r) if x} for r in reversed(rows))
    assert e1.rows() == e2.rows()
