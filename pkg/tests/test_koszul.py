from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from helpers import presentations, vec
from prepro import (
    CyclicGroupSpec,
    PathVector,
    beilinson_p2,
    check_superpotential,
    free_algebra,
    koszul_space,
    mckay_presentation,
    polynomial_quiver,
    skew_superpotential,
    top_form,
)
from prepro.koszul import TopFormReport, koszul_basis, koszul_dim_matrix, koszul_dims, vanishing_violations
from prepro.linalg import Subspace
from prepro.quadratic import padded_relation_space
from prepro.quiver import path_index


def koszul_oracle(p, l):
    """K_l as the intersection of every padded relation space."""
    n = len(path_index(p.quiver, l))
    if l < 2:
        return Subspace.full(n)
    out = Subspace.full(n)
    for mu in range(l - 1):
        out = out & padded_relation_space(p, l, mu)
    return out


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_polynomial_koszul_dims_are_binomial(n):
    p = polynomial_quiver(n)
    for l in range(n + 2):
        assert koszul_space(p, l).dim == comb(n, l)


@pytest.mark.parametrize("n", [2, 3])
def test_polynomial_koszul_matches_oracle(n):
    p = polynomial_quiver(n)
    for l in range(n + 2):
        assert koszul_space(p, l) == koszul_oracle(p, l)


@given(presentations(max_arrows=3), st.integers(0, 4))
def test_recursive_intersection_matches_oracle(p, l):
    assert koszul_space(p, l) == koszul_oracle(p, l)


def test_beilinson_koszul_dims():
    p = beilinson_p2()
    assert koszul_space(p, 2).dim == 3
    assert koszul_space(p, 3).dim == 0


def test_degree_one_is_all_arrows():
    for p in (beilinson_p2(), polynomial_quiver(3), mckay_presentation(CyclicGroupSpec.parse("5:1,1,3"))):
        assert koszul_space(p, 1).dim == p.quiver.num_arrows


def test_koszul_dims_polynomial_three():
    assert [row.dim for row in koszul_dims(polynomial_quiver(3), 4)] == [1, 3, 3, 1, 0]


def test_koszul_dims_mckay_1_3_12():
    p = mckay_presentation(CyclicGroupSpec.parse("3:1,2"))
    table = koszul_dims(p, 3)
    assert [row.dim for row in table] == [3, 6, 3, 0]
    # one closed generator of K_2 at every vertex
    assert table[2].matrix == ((1, 0, 0), (0, 1, 0), (0, 0, 1))


def test_koszul_dims_tensor_algebra():
    p = free_algebra(2)
    assert [row.dim for row in koszul_dims(p, 3)] == [1, 2, 0, 0]


@given(presentations())
def test_dim_k2_is_relation_count(p):
    assert koszul_space(p, 2).dim == p.num_relations


@given(presentations(max_arrows=3))
def test_basis_vectors_lie_in_every_padded_space(p):
    for l in (3, 4):
        idx = path_index(p.quiver, l)
        for b in koszul_basis(p, l):
            row = {idx[path]: c for path, c in b.items()}
            for mu in range(l - 1):
                assert padded_relation_space(p, l, mu).contains(row)


def test_vanishing_violation_reporting():
    table = koszul_dims(beilinson_p2(), 5)
    assert vanishing_violations(table) == []


def test_dim_matrix_sums_to_dim():
    p = mckay_presentation(CyclicGroupSpec.parse("3:1,1,1"))
    for l in range(5):
        assert koszul_dim_matrix(p, l).sum() == koszul_space(p, l).dim


def test_top_form_commutator():
    p = polynomial_quiver(2)
    q = p.quiver
    assert top_form(p, 2) == vec(q, (1, "x", "y"), (-1, "y", "x"))


def test_top_form_mckay_is_skew_superpotential():
    s = CyclicGroupSpec.parse("3:1,1,1")
    p = mckay_presentation(s)
    w = top_form(p, 3)
    assert isinstance(w, PathVector)
    skew = skew_superpotential(s).form
    first_path, first_coef = w.items()[0]
    assert w == skew.scale(first_coef / skew.coefficient(first_path))
    assert check_superpotential(w, p.quiver).ok


def test_top_form_beilinson_report():
    rep = top_form(beilinson_p2(), 2)
    assert isinstance(rep, TopFormReport)
    assert rep.off_diagonal == ((0, 2),)
    assert rep.matrix[2][0] == 3


def test_top_form_normalized():
    for spec in ("5:1,1,3", "3:1,2,1,2"):
        s = CyclicGroupSpec.parse(spec)
        w = top_form(mckay_presentation(s), s.n)
        assert w.items()[0][1] == 1
