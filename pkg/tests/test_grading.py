import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import vec
from prepro import (
    CyclicGroupSpec,
    Finite,
    Inconclusive,
    Infinite,
    QuadraticPresentation,
    Quiver,
    SearchLimitExceeded,
    Superpotential,
    WeightGrading,
    air_grading,
    degree_zero_part,
    finiteness_check,
    gorenstein_parameter,
    grading_search,
    mckay_presentation,
    polynomial_quiver,
    skew_superpotential,
    validate_grading,
)
from prepro.grading import vector_degrees
from prepro.mckay import mckay_quiver
from prepro.quiver import is_acyclic


def mckay(text):
    s = CyclicGroupSpec.parse(text)
    return s, mckay_presentation(s), skew_superpotential(s)


def test_grading_rejects_negative_and_wrong_length():
    with pytest.raises(ValueError):
        WeightGrading((0, -1))
    with pytest.raises(ValueError):
        WeightGrading((0, 1)).check(polynomial_quiver(3).quiver)


def test_validate_air_1_5_113():
    s, p, w = mckay("5:1,1,3")
    v = validate_grading(p, w, air_grading(s))
    assert v.relations_homogeneous and v.first_violation is None
    assert set(v.superpotential_degrees) == {1}
    assert v.gorenstein_parameter == 1
    assert isinstance(v.degree0_finiteness, Finite)
    assert v.degree0_finiteness.total_dim == 39


def test_validate_reports_first_violation():
    s, p, w = mckay("3:1,2")
    # x1^0 alone in degree 1 breaks x2^1 x1^0 - x1^2 x2^0 (relation 0)
    g = WeightGrading.from_set(6, [s.arrow_id(1, 0)])
    v = validate_grading(p, w, g)
    assert not v.relations_homogeneous
    assert v.first_violation == 0
    assert v.gorenstein_parameter is None
    assert v.degree0_finiteness is None


def test_validate_mixed_superpotential_degrees():
    s, p, w = mckay("3:1,2")
    v = validate_grading(p, w, WeightGrading.zero(6), finiteness=False)
    assert v.superpotential_degrees == (0,) * 6
    assert v.gorenstein_parameter == 0


def test_gorenstein_parameter_polynomial():
    p = polynomial_quiver(2)
    w = Superpotential(p.quiver, vec(p.quiver, (1, "x", "y"), (-1, "y", "x")))
    assert gorenstein_parameter(p, w, WeightGrading((1, 0))) == 1
    assert gorenstein_parameter(p, w, WeightGrading((1, 1))) == 2


def test_degree_zero_part_1_5_113():
    s, p, _ = mckay("5:1,1,3")
    p0 = degree_zero_part(p, air_grading(s))
    assert p0.quiver.num_arrows == 10
    assert is_acyclic(p0.quiver)
    labels = [a.label for a in p0.quiver.arrows]
    assert labels == [a.label for a in mckay_quiver(s).arrows if a.label not in
                      {"x1^4", "x2^4", "x3^2", "x3^3", "x3^4"}]


def test_degree_zero_part_1_3_12():
    s, p, _ = mckay("3:1,2")
    p0 = degree_zero_part(p, air_grading(s))
    # 0 -> 1 -> 2 plus 0 -> 2, no relations
    assert p0.quiver.num_arrows == 3 and p0.num_relations == 0
    assert finiteness_check(p0) == Finite(7, (3, 3, 1))


def test_degree_zero_part_all_ones():
    s, p, _ = mckay("5:1,1,3")
    p0 = degree_zero_part(p, WeightGrading((1,) * 15))
    assert p0.quiver.num_arrows == 0
    assert finiteness_check(p0) == Finite(5, (5,))


def test_degree_zero_part_needs_homogeneous():
    s, p, _ = mckay("3:1,2")
    with pytest.raises(ValueError):
        degree_zero_part(p, WeightGrading.from_set(6, [0]))


def test_finiteness_loop_is_infinite():
    q = Quiver.build(["0"], [(0, 0, "x")])
    res = finiteness_check(QuadraticPresentation(q, ()), l_max=6)
    assert isinstance(res, Infinite)
    assert res.witness == q.path("x") and res.checked_up_to == 6


def test_finiteness_nilpotent_loop():
    q = Quiver.build(["0"], [(0, 0, "x")])
    res = finiteness_check(QuadraticPresentation(q, (vec(q, (1, "x", "x")),)))
    assert res == Finite(2, (1, 1))


def test_finiteness_inconclusive():
    q = Quiver.build(["0"], [(0, 0, "x"), (0, 0, "y")])
    p = QuadraticPresentation(q, (vec(q, (1, "x", "x")), vec(q, (1, "y", "y"))))
    # the alternating words never vanish but are not powers of an elementary cycle
    assert finiteness_check(p, l_max=5) == Inconclusive(5)
    with pytest.raises(ValueError):
        finiteness_check(p, l_max=0)


def test_witness_for_1_3_1212():
    s, p, w = mckay("3:1,2,1,2")
    # all x4 arrows in degree 1: x1 and x2 survive in degree 0 and commute there
    g = WeightGrading.from_set(12, [s.arrow_id(4, l) for l in range(3)])
    v = validate_grading(p, w, g)
    assert v.gorenstein_parameter == 1
    f = v.degree0_finiteness
    assert isinstance(f, Infinite)
    assert degree_zero_part(p, g).quiver.format_path(f.witness) == "x1^2*x2^0"


def test_search_1_3_1212():
    s, p, w = mckay("3:1,2,1,2")
    res = grading_search(p, w)
    assert res.assignments == 4096
    assert res.num_valid == 4
    assert res.num_finite == 0
    for g, v in res.valid:
        assert v.gorenstein_parameter == 1
        f = v.degree0_finiteness
        assert isinstance(f, Infinite) and f.checked_up_to == 12
        q0 = degree_zero_part(p, g).quiver
        labels = {q0.arrows[a].label for a in f.witness.arrows}
        assert all(g[p.quiver.arrow(lab).id] == 0 for lab in labels)
    assert res.summary().startswith("no preprojective structure found")


def test_search_1_5_113_contains_air():
    s, p, w = mckay("5:1,1,3")
    res = grading_search(p, w)
    assert res.num_valid == 13 and res.num_finite == 10
    assert air_grading(s) in [g for g, _ in res.valid]
    assert res.summary().startswith("preprojective structure found: 10")


@pytest.mark.parametrize("text", ["3:1,2", "3:1,1,1", "4:1,3", "2:1,1", "4:1,1,2"])
def test_brute_and_pruned_agree(text):
    _, p, w = mckay(text)
    a = grading_search(p, w, finiteness=False)
    b = grading_search(p, w, brute=True, finiteness=False)
    assert [g for g, _ in a.valid] == [g for g, _ in b.valid]


@pytest.mark.parametrize("text", ["3:1,2", "3:1,1,1", "4:1,3"])
def test_search_matches_direct_enumeration(text):
    _, p, w = mckay(text)
    m = p.quiver.num_arrows
    expected = []
    for deg in itertools.product((0, 1), repeat=m):
        g = WeightGrading(deg)
        if gorenstein_parameter(p, w, g) == 1:
            expected.append(g)
    assert [g for g, _ in grading_search(p, w, finiteness=False).valid] == expected


@settings(max_examples=15)
@given(st.permutations(range(6)))
def test_search_invariant_under_arrow_relabelling(perm):
    s, p, w = mckay("3:1,2")
    q = p.quiver
    arrows = [q.arrows[i] for i in perm]
    new_id = {a.id: i for i, a in enumerate(arrows)}
    q2 = Quiver.build([v.label for v in q.vertices], [(a.source, a.target, a.label) for a in arrows])

    def move(v):
        return v.map_arrows(new_id, q2)

    p2 = QuadraticPresentation(q2, tuple(move(r) for r in p.relations))
    w2 = Superpotential(q2, move(w.form))
    got = {tuple(g[new_id[i]] for i in range(6)) for g, _ in grading_search(p2, w2, finiteness=False).valid}
    want = {g.degrees for g, _ in grading_search(p, w, finiteness=False).valid}
    assert got == want


def test_search_limit():
    _, p, w = mckay("5:1,1,3")
    with pytest.raises(SearchLimitExceeded):
        grading_search(p, w, limit=14)


def test_search_without_relations():
    # no relations, so only the term x constrains: x in degree 1, y free
    q = Quiver.build(["0"], [(0, 0, "x"), (0, 0, "y")])
    p = QuadraticPresentation(q, ())
    w = Superpotential(q, vec(q, (1, "x")))
    res = grading_search(p, w, finiteness=False)
    assert [g.degrees for g, _ in res.valid] == [(1, 0), (1, 1)]


def test_valid_gradings_put_every_term_in_degree_one():
    s, p, w = mckay("3:1,2")
    for g, v in grading_search(p, w).valid:
        assert set(vector_degrees(w.form, g)) == {1}
