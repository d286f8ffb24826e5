"""Quadratic path algebras ``kQ / <M>`` with ``M`` spanned by length-2 relations.

Graded pieces are computed degree by degree.  Writing ``I_d`` for the degree
``d`` part of the ideal, ``I_d = V (x) I_{d-1} + M (x) V^{d-2}``, so

    A_d = (V (x) A_{d-1}) / image(M (x) A_{d-2}).

:class:`_Tower` keeps, for every degree built so far, a set of standard
monomials spanning ``A_d`` and an echelon basis of the relation image in the
candidate space ``V (x) A_{d-1}``.  Normal forms of arbitrary paths come from
the same data.  The direct construction (all paths modulo
:func:`relation_span`) is kept as the reference implementation.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .linalg import Echelon, RationalMatrix, Subspace, kernel
from .quiver import Arrow, Path, PathVector, Quiver, enumerate_paths, path_index


@dataclass(frozen=True, eq=True)
class QuadraticPresentation:
    """A quiver together with linearly independent homogeneous quadratic relations."""

    quiver: Quiver
    relations: tuple[PathVector, ...] = ()

    def __post_init__(self):
        rels = tuple(self.relations)
        object.__setattr__(self, "relations", rels)
        q = self.quiver
        ech: dict[tuple[int, int], Echelon] = defaultdict(Echelon)
        for r in rels:
            h = r.homogeneity()
            if h is None or h[2] != 2:
                raise ValueError(f"relation {r!r} is not homogeneous of length 2")
            idx = path_index(q, 2, h[0], h[1])
            try:
                row = {idx[p]: c for p, c in r.items()}
            except KeyError:
                raise ValueError(f"relation {r!r} uses paths not in the quiver") from None
            if not ech[h[:2]].add(row):
                raise ValueError("relations are linearly dependent; use QuadraticPresentation.build")

    def __hash__(self):
        h = self.__dict__.get("_hash")
        if h is None:
            h = hash((self.quiver, self.relations))
            self.__dict__["_hash"] = h
        return h

    @classmethod
    def build(cls, quiver: Quiver, relations: Iterable[PathVector]) -> "QuadraticPresentation":
        """Keep the first linearly independent subfamily of ``relations``."""
        ech: dict[tuple[int, int], Echelon] = defaultdict(Echelon)
        kept = []
        for r in relations:
            if r.is_zero():
                continue
            h = r.homogeneity()
            if h is None or h[2] != 2:
                raise ValueError(f"relation {r!r} is not homogeneous of length 2")
            idx = path_index(quiver, 2, h[0], h[1])
            if ech[h[:2]].add({idx[p]: c for p, c in r.items()}):
                kept.append(r)
        return cls(quiver, tuple(kept))

    @property
    def num_relations(self) -> int:
        return len(self.relations)

    def relation_space(self) -> Subspace:
        """``M`` inside the space of all length-2 paths."""
        return relation_span(self, 2)

    def canonical(self) -> "QuadraticPresentation":
        """Same algebra with relations replaced by the RREF basis of ``M``."""
        paths = enumerate_paths(self.quiver, 2)
        rels = [PathVector({paths[c]: a for c, a in row.items()})
                for row in self.relation_space().sparse_rows()]
        return QuadraticPresentation(self.quiver, tuple(rels))

    @cached_property
    def _tower(self) -> "_Tower":
        return _Tower(self)


def padded_relation_space(p: QuadraticPresentation, length: int, mu: int) -> Subspace:
    """``V^mu (x) M (x) V^(length-mu-2)`` inside the length-``length`` path space."""
    if length < 2 or not 0 <= mu <= length - 2:
        raise ValueError("need length >= 2 and 0 <= mu <= length - 2")
    q = p.quiver
    idx = path_index(q, length)
    rows = []
    for r in p.relations:
        s, t, _ = r.homogeneity()
        terms = r.items()
        for right in enumerate_paths(q, length - 2 - mu, target=s):
            for left in enumerate_paths(q, mu, source=t):
                row = {}
                for path, c in terms:
                    full = Path(left.arrows + path.arrows + right.arrows, right.source, left.target)
                    row[idx[full]] = c
                rows.append(row)
    return Subspace(len(idx), rows)


def relation_span(p: QuadraticPresentation, length: int) -> Subspace:
    """Degree-``length`` part of the two-sided ideal generated by the relations."""
    if length < 2:
        raise ValueError("relation_span needs length >= 2")
    total = Subspace(len(path_index(p.quiver, length)))
    for mu in range(length - 1):
        total = total + padded_relation_space(p, length, mu)
    return total


def vector_to_row(v: PathVector, quiver: Quiver, length: int) -> dict[int, Fraction]:
    idx = path_index(quiver, length)
    return {idx[path]: c for path, c in v.items()}


def row_to_vector(row, quiver: Quiver, length: int) -> PathVector:
    paths = enumerate_paths(quiver, length)
    return PathVector({paths[c]: a for c, a in row.items()})


class _Tower:
    """Standard monomials and normal forms of ``A = kQ/<M>``, built lazily by degree."""

    def __init__(self, pres: QuadraticPresentation):
        q = pres.quiver
        self.quiver = q
        self.relations = []
        for r in pres.relations:
            s, t, _ = r.homogeneity()
            self.relations.append((s, t, [(path.arrows[0], path.arrows[1], c) for path, c in r.items()]))
        self.std: list[list[Path]] = [[Path((), v.id, v.id) for v in q.vertices]]
        self.cand_pos: list[dict | None] = [None]
        self.cand_block: list[list | None] = [None]
        self.echelons: list[dict | None] = [None]
        self.to_std: list[list | None] = [None]
        self._nf_cache: dict[Path, dict[int, Fraction]] = {}

    def ensure(self, degree: int):
        while len(self.std) <= degree:
            self._extend()

    def _extend(self):
        q = self.quiver
        d = len(self.std)
        prev = self.std[d - 1]
        cand, pos, block = [], {}, []
        for j, m in enumerate(prev):
            for a in q.out_arrows[m.target]:
                pos[(a.id, j)] = len(cand)
                cand.append((a.id, j))
                block.append((m.source, a.target))
        echelons: dict[tuple[int, int], Echelon] = defaultdict(Echelon)
        if d >= 2:
            for s, t, terms in self.relations:
                for i, m in enumerate(self.std[d - 2]):
                    if m.target != s:
                        continue
                    row: dict[int, Fraction] = {}
                    for b, a, c in terms:
                        for j, x in self._reduce_candidate(d - 1, a, i).items():
                            k = pos[(b, j)]
                            v = row.get(k, 0) + c * x
                            if v:
                                row[k] = v
                            else:
                                row.pop(k, None)
                    if row:
                        echelons[(m.source, t)].add(row)
        to_std, std = [], []
        for k, (a, j) in enumerate(cand):
            e = echelons.get(block[k])
            if e is not None and k in e.pivots:
                to_std.append(None)
            else:
                to_std.append(len(std))
                m = prev[j]
                std.append(Path((a,) + m.arrows, m.source, q.arrows[a].target))
        self.std.append(std)
        self.cand_pos.append(pos)
        self.cand_block.append(block)
        self.echelons.append(dict(echelons))
        self.to_std.append(to_std)

    def _reduce(self, d: int, vec: dict[int, Fraction]) -> dict[int, Fraction]:
        by_block: dict[tuple[int, int], dict[int, Fraction]] = defaultdict(dict)
        blocks = self.cand_block[d]
        for k, c in vec.items():
            by_block[blocks[k]][k] = c
        out: dict[int, Fraction] = {}
        to_std = self.to_std[d]
        for blk, part in by_block.items():
            e = self.echelons[d].get(blk)
            red = e.reduce(part) if e is not None else part
            for k, c in red.items():
                out[to_std[k]] = c
        return out

    def _reduce_candidate(self, d: int, arrow: int, j: int) -> dict[int, Fraction]:
        return self._reduce(d, {self.cand_pos[d][(arrow, j)]: Fraction(1)})

    def normal_form_path(self, p: Path) -> dict[int, Fraction]:
        """Coordinates of the class of ``p`` in the standard monomials of its degree."""
        hit = self._nf_cache.get(p)
        if hit is not None:
            return hit
        d = len(p)
        self.ensure(d)
        if d == 0:
            out = {p.source: Fraction(1)}
        else:
            if d == 1:
                inner = Path((), p.source, p.source)
            else:
                inner = Path(p.arrows[1:], p.source, self.quiver.arrows[p.arrows[1]].target)
            a = p.arrows[0]
            pos = self.cand_pos[d]
            vec = {pos[(a, j)]: c for j, c in self.normal_form_path(inner).items()}
            out = self._reduce(d, vec)
        self._nf_cache[p] = out
        return out

    def normal_form(self, v: PathVector) -> dict[int, Fraction]:
        out: dict[int, Fraction] = {}
        for p, c in v.items():
            for k, x in self.normal_form_path(p).items():
                y = out.get(k, 0) + c * x
                if y:
                    out[k] = y
                else:
                    out.pop(k, None)
        return out

    def dims(self, d: int) -> np.ndarray:
        self.ensure(d)
        n = self.quiver.num_vertices
        m = np.zeros((n, n), dtype=np.int64)
        for p in self.std[d]:
            m[p.target, p.source] += 1
        return m


@dataclass(frozen=True)
class GradedDims:
    """``matrix[j][i] = dim e_j A_d e_i`` (target ``j``, source ``i``)."""

    degree: int
    matrix: tuple[tuple[int, ...], ...]

    @property
    def array(self) -> np.ndarray:
        return np.array(self.matrix, dtype=np.int64)

    @property
    def total(self) -> int:
        return int(sum(map(sum, self.matrix)))


def graded_dim(p: QuadraticPresentation, degree: int) -> GradedDims:
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    m = p._tower.dims(degree)
    return GradedDims(degree, tuple(tuple(int(x) for x in row) for row in m))


def hilbert_table(p: QuadraticPresentation, d_max: int) -> list[GradedDims]:
    return [graded_dim(p, d) for d in range(d_max + 1)]


def standard_monomials(p: QuadraticPresentation, degree: int) -> list[Path]:
    """Paths whose classes form the basis of ``A_degree`` used by :func:`normal_form`."""
    p._tower.ensure(degree)
    return list(p._tower.std[degree])


def normal_form(p: QuadraticPresentation, v: PathVector) -> PathVector:
    """Canonical representative of ``v`` modulo the ideal (a combination of standard monomials)."""
    lengths = v.lengths()
    if len(lengths) > 1:
        raise ValueError("normal_form needs a vector homogeneous in length")
    if not lengths:
        return PathVector()
    d = lengths.pop()
    tower = p._tower
    coords = tower.normal_form(v)
    std = tower.std[d]
    return PathVector({std[k]: c for k, c in coords.items()})


def is_zero_in_quotient(p: QuadraticPresentation, v: PathVector) -> bool:
    lengths = v.lengths()
    if len(lengths) > 1:
        raise ValueError("is_zero_in_quotient needs a vector homogeneous in length")
    if not lengths:
        return True
    if lengths.pop() < 2:
        return False
    return not p._tower.normal_form(v)


def _toggle_star(label: str) -> str:
    return label[:-1] if label.endswith("*") else label + "*"


def opposite_quiver(q: Quiver) -> Quiver:
    arrows = tuple(Arrow(a.id, a.target, a.source, _toggle_star(a.label)) for a in q.arrows)
    return Quiver(q.vertices, arrows)


def quadratic_dual(p: QuadraticPresentation) -> QuadraticPresentation:
    """Quadratic dual on the opposite quiver.

    The dual relations span the annihilator of ``M`` under the pairing of
    ``a* (x) b*`` with ``b (x) a``; on arrow ids this pairs a written path
    with its reversal.
    """
    q = p.quiver
    dq = opposite_quiver(q)
    by_block: dict[tuple[int, int], list[PathVector]] = defaultdict(list)
    for r in p.relations:
        by_block[r.homogeneity()[:2]].append(r)
    dual_rels = []
    for s in range(q.num_vertices):
        for t in range(q.num_vertices):
            paths = enumerate_paths(q, 2, s, t)
            if not paths:
                continue
            rows = [[r.coefficient(path) for path in paths] for r in by_block.get((s, t), [])]
            if rows:
                ann = kernel(RationalMatrix(rows, len(paths))).sparse_rows()
            else:
                ann = [{i: Fraction(1)} for i in range(len(paths))]
            for vec in ann:
                dual_rels.append(PathVector({
                    Path(tuple(reversed(paths[c].arrows)), t, s): a for c, a in vec.items()
                }))
    return QuadraticPresentation.build(dq, dual_rels)


@dataclass(frozen=True)
class KoszulityVerdict:
    passed: bool
    d_max: int
    failed_degree: int | None = None
    residual: tuple[tuple[int, ...], ...] | None = None

    @property
    def message(self) -> str:
        if self.passed:
            return (f"pass up to degree {self.d_max}: the Hilbert series identity holds "
                    "(necessary condition for Koszulity only, not a proof)")
        return f"fail at degree {self.failed_degree}: the algebra is not Koszul"

    def __bool__(self):
        return self.passed


def koszulity_probe(p: QuadraticPresentation, d_max: int = 8) -> KoszulityVerdict:
    """Check ``H_A(t) . H_{A^!}(-t)^T = 1`` up to ``t^d_max``.

    ``H`` are the matrix Hilbert series indexed (target, source).  The dual
    lives on the opposite quiver, hence the transpose.
    """
    if d_max < 2:
        raise ValueError("d_max must be at least 2")
    dual = quadratic_dual(p)
    ha = [p._tower.dims(d) for d in range(d_max + 1)]
    hd = [dual._tower.dims(d) for d in range(d_max + 1)]
    n = p.quiver.num_vertices
    for d in range(d_max + 1):
        acc = np.zeros((n, n), dtype=np.int64)
        for i in range(d + 1):
            acc += (-1) ** i * (ha[d - i] @ hd[i].T)
        expected = np.eye(n, dtype=np.int64) if d == 0 else np.zeros((n, n), dtype=np.int64)
        if not np.array_equal(acc, expected):
            return KoszulityVerdict(False, d_max, d, tuple(tuple(int(x) for x in row) for row in acc))
    return KoszulityVerdict(True, d_max)


def relations_by_block(p: QuadraticPresentation) -> dict[tuple[int, int], Subspace]:
    """``M`` split into ``(source, target)`` blocks, each over its block path basis."""
    q = p.quiver
    out = {}
    for s in range(q.num_vertices):
        for t in range(q.num_vertices):
            idx = path_index(q, 2, s, t)
            rows = [{idx[path]: c for path, c in r.items()}
                    for r in p.relations if r.homogeneity()[:2] == (s, t)]
            out[(s, t)] = Subspace(len(idx), rows)
    return out


def same_relation_span(p1: QuadraticPresentation, p2: QuadraticPresentation) -> bool:
    """Exact equality of relation spaces on a common quiver, block by block."""
    ends = lambda q: [(a.source, a.target) for a in q.arrows]  # noqa: E731
    if p1.quiver.num_vertices != p2.quiver.num_vertices or ends(p1.quiver) != ends(p2.quiver):
        raise ValueError("presentations live on different quivers")
    return relations_by_block(p1) == relations_by_block(p2)


def span_of(quiver: Quiver, vectors: Sequence[PathVector]) -> Subspace:
    """Span of length-2 vectors in the length-2 path space."""
    return Subspace(len(path_index(quiver, 2)), [vector_to_row(v, quiver, 2) for v in vectors])
