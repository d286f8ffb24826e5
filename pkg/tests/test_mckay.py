import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from helpers import vec
from prepro import (
    CyclicGroupSpec,
    air_grading,
    check_superpotential,
    classify_group,
    koszul_space,
    koszulity_probe,
    mckay_presentation,
    polynomial_quiver,
    same_relation_span,
    skew_superpotential,
)
from prepro.grading import vector_degrees
from prepro.mckay import EMBEDS, PREPROJECTIVE, UNKNOWN, enumerate_specs, generators, mckay_quiver
from prepro.quiver import path_index


def labels_of(q, ids):
    return {q.arrows[i].label for i in ids}


def test_parse_and_str():
    s = CyclicGroupSpec.parse(" 5 : 1, 1 ,3")
    assert (s.r, s.weights) == (5, (1, 1, 3))
    assert str(s) == "5:1,1,3"
    assert s.n == 3 and s.is_sl


@pytest.mark.parametrize("text", ["", "5", "5:", "5:1,,3", "a:1", "5:1,7", "0:0", "5:-1,1"])
def test_parse_errors(text):
    with pytest.raises(ValueError):
        CyclicGroupSpec.parse(text)


def test_arrow_numbering():
    s = CyclicGroupSpec.parse("5:1,1,3")
    q = mckay_quiver(s)
    for i, a in enumerate(s.weights, 1):
        for l in range(5):
            arr = q.arrows[s.arrow_id(i, l)]
            assert arr.label == f"x{i}^{l}"
            assert (arr.source, arr.target) == (l, (l + a) % 5)


def test_counts_1_5_113():
    p = mckay_presentation(CyclicGroupSpec.parse("5:1,1,3"))
    assert p.quiver.num_vertices == 5
    assert p.quiver.num_arrows == 15
    assert p.num_relations == 15


def test_trivial_group_is_polynomial_ring():
    p = mckay_presentation(CyclicGroupSpec.parse("1:0,0"))
    assert p.quiver.num_vertices == 1
    assert same_relation_span(p, polynomial_quiver(2, ["x1^0", "x2^0"]))
    one = mckay_presentation(CyclicGroupSpec.parse("1:0"))
    assert one.num_relations == 0 and one.quiver.num_arrows == 1


def test_relation_form():
    s = CyclicGroupSpec.parse("3:1,2")
    p = mckay_presentation(s)
    q = p.quiver
    # at l = 0: x2^1 x1^0 - x1^2 x2^0
    assert p.relations[0] == vec(q, (1, "x2^1", "x1^0"), (-1, "x1^2", "x2^0"))


def test_skew_superpotential_term_count():
    w = skew_superpotential(CyclicGroupSpec.parse("3:1,2,1,2"))
    assert len(w) == 72
    assert w.degree == 4
    assert check_superpotential(w.form, w.quiver).ok


def test_skew_superpotential_formula():
    # sum over l and permutations of sign * x_{pi(n)} ... x_{pi(1)} routed from l
    s = CyclicGroupSpec.parse("3:1,1,1")
    w = skew_superpotential(s)
    q = w.quiver
    for l in range(3):
        for perm in itertools.permutations((1, 2, 3)):
            inv = sum(1 for i, j in itertools.combinations(range(3), 2) if perm[i] > perm[j])
            cur, labels = l, []
            for t in perm:
                labels.append(f"x{t}^{cur}")
                cur = (cur + 1) % 3
            assert w.form.coefficient(q.path(*reversed(labels))) == (-1) ** inv


def test_skew_superpotential_a1():
    w = skew_superpotential(CyclicGroupSpec.parse("2:1,1"))
    q = w.quiver
    assert w.form == vec(q, (1, "x2^1", "x1^0"), (-1, "x1^1", "x2^0"),
                         (1, "x2^0", "x1^1"), (-1, "x1^0", "x2^1"))


def test_skew_superpotential_needs_sl():
    with pytest.raises(ValueError):
        skew_superpotential(CyclicGroupSpec.parse("3:1,1"))


@pytest.mark.parametrize("text", ["3:1,1,1", "5:1,1,3", "3:1,2,1,2", "4:1,3"])
def test_skew_superpotential_spans_top_koszul_space(text):
    s = CyclicGroupSpec.parse(text)
    p = mckay_presentation(s)
    k = koszul_space(p, s.n)
    assert k.dim == s.r
    idx = path_index(p.quiver, s.n)
    # one component per base vertex
    for l in range(s.r):
        row = {idx[path]: c for path, c in skew_superpotential(s).form.items() if path.source == l}
        assert k.contains(row)


def test_air_set_1_5_113():
    s = CyclicGroupSpec.parse("5:1,1,3")
    g = air_grading(s)
    assert labels_of(mckay_quiver(s), g.arrows_of_degree(1)) == {"x1^4", "x2^4", "x3^2", "x3^3", "x3^4"}


def test_air_set_1_3_12():
    s = CyclicGroupSpec.parse("3:1,2")
    assert labels_of(mckay_quiver(s), air_grading(s).arrows_of_degree(1)) == {"x1^2", "x2^1", "x2^2"}


def test_air_zero_weights():
    s = CyclicGroupSpec.parse("4:0,0,0")
    assert air_grading(s).arrows_of_degree(1) == ()


@given(st.integers(2, 7).flatmap(lambda r: st.tuples(st.just(r), st.lists(st.integers(0, r - 1), min_size=1, max_size=4))))
def test_air_grading_makes_relations_homogeneous(case):
    r, weights = case
    s = CyclicGroupSpec(r, tuple(weights))
    p = mckay_presentation(s)
    g = air_grading(s)
    for rel in p.relations:
        assert len(set(vector_degrees(rel, g))) == 1


@given(st.integers(2, 7).flatmap(lambda r: st.tuples(st.just(r), st.lists(st.integers(1, r - 1), min_size=2, max_size=4))))
def test_air_degree_of_closed_walk_counts_wraps(case):
    r, weights = case
    s = CyclicGroupSpec(r, tuple(weights))
    if not s.is_sl:
        return
    w = skew_superpotential(s)
    g = air_grading(s)
    assert set(vector_degrees(w.form, g)) == {sum(weights) // r}


def test_generators():
    s = CyclicGroupSpec.parse("5:1,1,3")
    assert [k for k, _ in generators(s)] == [1, 2, 3, 4]
    assert generators(s)[1] == (2, (2, 2, 1))


def test_classify_air():
    c = classify_group(CyclicGroupSpec.parse("5:1,1,3"))
    assert c.verdict == PREPROJECTIVE
    assert c.air and c.air_generator == 1


def test_classify_air_through_other_generator():
    # weights sum to 14 under g; g^3 gives (2, 1, 4)
    c = classify_group(CyclicGroupSpec.parse("7:3,5,6"))
    assert c.verdict == PREPROJECTIVE
    assert c.air_generator == 3


def test_classify_embeds():
    c = classify_group(CyclicGroupSpec.parse("3:1,2,1,2"))
    assert c.verdict == EMBEDS
    # every generator has weight sum 6 > 3
    assert c.condition_b and not c.condition_a and c.embeds
    c2 = classify_group(CyclicGroupSpec.parse("4:1,3,0"))
    assert c2.condition_a and c2.verdict == EMBEDS


def test_classify_non_sl():
    c = classify_group(CyclicGroupSpec.parse("3:1,1"))
    assert not c.sl and c.verdict == UNKNOWN
    assert "SL" in c.description


def test_enumerate_specs():
    specs = enumerate_specs(4, 2)
    assert [str(s) for s in specs] == ["1:0,0", "2:0,0", "2:1,1", "3:0,0", "3:1,2", "4:0,0", "4:1,3", "4:2,2"]
    assert all(s.is_sl for s in enumerate_specs(6, 3))
    assert len(enumerate_specs(3, 2, sl_only=False)) == 1 + 3 + 6


@pytest.mark.parametrize("text", ["3:1,1,1", "5:1,1,3", "3:1,2,1,2", "3:1,2"])
def test_probe_passes(text):
    assert koszulity_probe(mckay_presentation(CyclicGroupSpec.parse(text)), 8).passed
