"""Tensor products of quadratic presentations over the product of vertex sets."""

from __future__ import annotations

from dataclasses import dataclass

from .grading import WeightGrading
from .quadratic import QuadraticPresentation
from .quiver import Path, PathVector, Quiver


@dataclass(frozen=True)
class TensorMap:
    """Explicit placement of factor vertices and arrows in the product quiver.

    ``vertex[(v1, v2)]``, ``arrow1[(a1, v2)]`` and ``arrow2[(v1, a2)]`` are ids
    in ``quiver``.
    """

    quiver: Quiver
    q1: Quiver
    q2: Quiver
    vertex: dict
    arrow1: dict
    arrow2: dict

    def vertex_pair(self, v: int) -> tuple[int, int]:
        return divmod(v, self.q2.num_vertices)

    def lift1(self, v: PathVector, v2: int) -> PathVector:
        """Copy of a ``q1`` vector sitting over the ``q2`` vertex ``v2``."""
        out = {}
        for path, c in v.items():
            ids = tuple(self.arrow1[(a, v2)] for a in path.arrows)
            out[Path(ids, self.vertex[(path.source, v2)], self.vertex[(path.target, v2)])] = c
        return PathVector(out)

    def lift2(self, v: PathVector, v1: int) -> PathVector:
        out = {}
        for path, c in v.items():
            ids = tuple(self.arrow2[(v1, a)] for a in path.arrows)
            out[Path(ids, self.vertex[(v1, path.source)], self.vertex[(v1, path.target)])] = c
        return PathVector(out)


def tensor_quiver(q1: Quiver, q2: Quiver) -> TensorMap:
    n2 = q2.num_vertices
    vertex = {}
    labels = []
    for v1 in q1.vertices:
        for v2 in q2.vertices:
            vertex[(v1.id, v2.id)] = v1.id * n2 + v2.id
            labels.append(f"({v1.label},{v2.label})")
    arrows, arrow1, arrow2 = [], {}, {}
    for a in q1.arrows:
        for v2 in q2.vertices:
            arrow1[(a.id, v2.id)] = len(arrows)
            arrows.append((vertex[(a.source, v2.id)], vertex[(a.target, v2.id)],
                           f"({a.label},e{v2.label})"))
    for v1 in q1.vertices:
        for a in q2.arrows:
            arrow2[(v1.id, a.id)] = len(arrows)
            arrows.append((vertex[(v1.id, a.source)], vertex[(v1.id, a.target)],
                           f"(e{v1.label},{a.label})"))
    q = Quiver.build(labels, arrows)
    return TensorMap(q, q1, q2, vertex, arrow1, arrow2)


def tensor_presentation(p1: QuadraticPresentation,
                        p2: QuadraticPresentation) -> tuple[QuadraticPresentation, TensorMap]:
    """Lifted relations of each factor at every vertex of the other, then commutators.

    For ``a1: i -> j`` and ``a2: s -> t`` the commutator is
    ``(a1, t)(i, a2) - (j, a2)(a1, s)``, a relation from ``(i, s)`` to ``(j, t)``.
    """
    tm = tensor_quiver(p1.quiver, p2.quiver)
    rels = []
    for r in p1.relations:
        for v2 in range(p2.quiver.num_vertices):
            rels.append(tm.lift1(r, v2))
    for r in p2.relations:
        for v1 in range(p1.quiver.num_vertices):
            rels.append(tm.lift2(r, v1))
    for a1 in p1.quiver.arrows:
        i, j = a1.source, a1.target
        for a2 in p2.quiver.arrows:
            s, t = a2.source, a2.target
            src, tgt = tm.vertex[(i, s)], tm.vertex[(j, t)]
            rels.append(PathVector({
                Path((tm.arrow1[(a1.id, t)], tm.arrow2[(i, a2.id)]), src, tgt): 1,
                Path((tm.arrow2[(j, a2.id)], tm.arrow1[(a1.id, s)]), src, tgt): -1,
            }))
    return QuadraticPresentation(tm.quiver, tuple(rels)), tm


def lift_grading_sum(g1: WeightGrading, g2: WeightGrading, t: TensorMap) -> WeightGrading:
    g1.check(t.q1)
    g2.check(t.q2)
    deg = [0] * t.quiver.num_arrows
    for (a1, _), i in t.arrow1.items():
        deg[i] = g1[a1]
    for (_, a2), i in t.arrow2.items():
        deg[i] = g2[a2]
    return WeightGrading(tuple(deg))
