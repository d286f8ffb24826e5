"""Small named presentations used by the demos, tests and CLI."""

from __future__ import annotations

import itertools

from .quadratic import QuadraticPresentation
from .quiver import PathVector, Quiver


def beilinson_p2() -> QuadraticPresentation:
    """Quiver ``1 -> 2 -> 3`` with three arrows per step and the relations
    ``db - ea``, ``fa - dc``, ``ec - fb``.  Global dimension 2, not Calabi-Yau."""
    q = Quiver.build(["1", "2", "3"], [
        (0, 1, "a"), (0, 1, "b"), (0, 1, "c"),
        (1, 2, "d"), (1, 2, "e"), (1, 2, "f"),
    ])
    P = lambda *labs: PathVector.from_path(q.path(*labs))  # noqa: E731
    rels = (
        P("d", "b") - P("e", "a"),
        P("f", "a") - P("d", "c"),
        P("e", "c") - P("f", "b"),
    )
    return QuadraticPresentation(q, rels)


def _loop_labels(n: int, labels) -> list[str]:
    if labels is not None:
        labels = list(labels)
        if len(labels) != n:
            raise ValueError("need one label per loop")
        return labels
    if n <= 3:
        return ["x", "y", "z"][:n]
    return [f"x{i}" for i in range(1, n + 1)]


def free_algebra(n: int, labels=None) -> QuadraticPresentation:
    """One vertex, ``n`` loops, no relations."""
    q = Quiver.build(["0"], [(0, 0, lab) for lab in _loop_labels(n, labels)])
    return QuadraticPresentation(q, ())


def polynomial_quiver(n: int, labels=None) -> QuadraticPresentation:
    """One vertex, ``n`` loops, all commutators ``x_i x_j - x_j x_i`` for ``i < j``."""
    q = Quiver.build(["0"], [(0, 0, lab) for lab in _loop_labels(n, labels)])
    rels = []
    for i, j in itertools.combinations(range(n), 2):
        a, b = q.arrows[i].label, q.arrows[j].label
        rels.append(PathVector.from_path(q.path(a, b)) - PathVector.from_path(q.path(b, a)))
    return QuadraticPresentation(q, tuple(rels))
