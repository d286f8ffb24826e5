"""Shared builders and hypothesis strategies for the test suite."""

from __future__ import annotations

from fractions import Fraction

from hypothesis import strategies as st

from prepro import PathVector, QuadraticPresentation, Quiver
from prepro.quiver import enumerate_paths


def vec(q: Quiver, *terms) -> PathVector:
    """``vec(q, (1, "d", "b"), (-1, "e", "a"))`` -> ``db - ea``."""
    out = {}
    for coef, *labels in terms:
        p = q.path(*labels)
        out[p] = out.get(p, 0) + Fraction(coef)
    return PathVector(out)


def brute_rank(rows: list[list[Fraction]]) -> int:
    """Fraction-free (Bareiss-style) elimination on integer-scaled copies."""
    m = [[Fraction(x) for x in r] for r in rows]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for i in range(len(m)):
            if i != rank and m[i][c] != 0:
                a, b = m[rank][c], m[i][c]
                m[i] = [a * x - b * y for x, y in zip(m[i], m[rank])]
        rank += 1
    return rank


small_ints = st.integers(min_value=-2, max_value=2)


@st.composite
def quivers(draw, max_vertices=3, max_arrows=5, min_arrows=0):
    n = draw(st.integers(1, max_vertices))
    m = draw(st.integers(min_arrows, max_arrows))
    arrows = [(draw(st.integers(0, n - 1)), draw(st.integers(0, n - 1)), f"a{i}") for i in range(m)]
    return Quiver.build([f"v{i}" for i in range(n)], arrows)


@st.composite
def presentations(draw, max_vertices=3, max_arrows=4, max_relations=3):
    q = draw(quivers(max_vertices, max_arrows, min_arrows=1))
    paths = enumerate_paths(q, 2)
    rels = []
    if paths:
        for _ in range(draw(st.integers(0, max_relations))):
            p0 = draw(st.sampled_from(paths))
            block = [p for p in paths if p.source == p0.source and p.target == p0.target]
            coefs = draw(st.lists(small_ints, min_size=len(block), max_size=len(block)))
            rels.append(PathVector(dict(zip(block, coefs))))
    return QuadraticPresentation.build(q, rels)


@st.composite
def closed_vectors(draw, q: Quiver, length: int, max_terms=4):
    closed = [p for p in enumerate_paths(q, length) if p.is_closed]
    if not closed:
        return PathVector()
    chosen = draw(st.lists(st.sampled_from(closed), min_size=1, max_size=max_terms))
    coefs = draw(st.lists(st.integers(-3, 3).filter(bool), min_size=len(chosen), max_size=len(chosen)))
    return PathVector(list(zip(chosen, coefs)))
