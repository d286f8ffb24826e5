"""Koszul spaces ``K_l`` and the top-degree generator.

``K_l`` is the intersection over ``mu`` of ``V^mu (x) M (x) V^(l-mu-2)``.
Because padding by ``V`` commutes with intersections, it satisfies

    K_l = (V (x) K_{l-1})  ∩  (K_{l-1} (x) V)      (l >= 3),

which is what :func:`koszul_space` evaluates, one ``(source, target)`` block
at a time.  The subspaces involved are tiny compared to the path space.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .linalg import Subspace
from .quadratic import QuadraticPresentation, relations_by_block
from .quiver import Path, PathVector, enumerate_paths, path_index

Block = tuple[int, int]


def _cache(p: QuadraticPresentation) -> dict[int, dict[Block, Subspace]]:
    c = p.__dict__.get("_koszul_blocks")
    if c is None:
        c = {}
        p.__dict__["_koszul_blocks"] = c
    return c


def koszul_blocks(p: QuadraticPresentation, l: int) -> dict[Block, Subspace]:
    """``K_l`` split by ``(source, target)``; each block lives in its own path basis."""
    if l < 0:
        raise ValueError("l must be nonnegative")
    cache = _cache(p)
    if l in cache:
        return cache[l]
    q = p.quiver
    nv = q.num_vertices
    out: dict[Block, Subspace] = {}
    if l == 0:
        for s in range(nv):
            for t in range(nv):
                n = len(path_index(q, 0, s, t))
                out[(s, t)] = Subspace.full(n)
    elif l == 1:
        for s in range(nv):
            for t in range(nv):
                out[(s, t)] = Subspace.full(len(path_index(q, 1, s, t)))
    elif l == 2:
        out = relations_by_block(p)
    else:
        prev = koszul_blocks(p, l - 1)
        prev_paths = {blk: enumerate_paths(q, l - 1, *blk) for blk in prev}
        for s in range(nv):
            for t in range(nv):
                idx = path_index(q, l, s, t)
                left_pad, right_pad = [], []
                for a in q.in_arrows[t]:
                    paths = prev_paths[(s, a.source)]
                    for row in prev[(s, a.source)].sparse_rows():
                        left_pad.append({idx[Path((a.id,) + paths[c].arrows, s, t)]: x
                                         for c, x in row.items()})
                for a in q.out_arrows[s]:
                    paths = prev_paths[(a.target, t)]
                    for row in prev[(a.target, t)].sparse_rows():
                        right_pad.append({idx[Path(paths[c].arrows + (a.id,), s, t)]: x
                                          for c, x in row.items()})
                n = len(idx)
                if not left_pad or not right_pad:
                    out[(s, t)] = Subspace(n)
                else:
                    out[(s, t)] = Subspace(n, left_pad).intersect(Subspace(n, right_pad))
    cache[l] = out
    return out


def koszul_space(p: QuadraticPresentation, l: int) -> Subspace:
    """``K_l`` inside the space of all length-``l`` paths (order of ``enumerate_paths``)."""
    q = p.quiver
    gidx = path_index(q, l)
    rows = []
    for blk, sub in koszul_blocks(p, l).items():
        paths = enumerate_paths(q, l, *blk)
        for row in sub.sparse_rows():
            rows.append({gidx[paths[c]]: x for c, x in row.items()})
    return Subspace(len(gidx), rows)


def koszul_basis(p: QuadraticPresentation, l: int) -> list[PathVector]:
    """RREF basis of ``K_l`` as path vectors, in pivot order."""
    paths = enumerate_paths(p.quiver, l)
    return [PathVector({paths[c]: x for c, x in row.items()})
            for row in koszul_space(p, l).sparse_rows()]


def koszul_dim_matrix(p: QuadraticPresentation, l: int) -> np.ndarray:
    """``m[j, i] = dim e_j K_l e_i``."""
    n = p.quiver.num_vertices
    m = np.zeros((n, n), dtype=np.int64)
    for (s, t), sub in koszul_blocks(p, l).items():
        m[t, s] = sub.dim
    return m


@dataclass(frozen=True)
class KoszulDims:
    l: int
    dim: int
    matrix: tuple[tuple[int, ...], ...]


def koszul_dims(p: QuadraticPresentation, l_max: int) -> list[KoszulDims]:
    rows = []
    for l in range(l_max + 1):
        m = koszul_dim_matrix(p, l)
        rows.append(KoszulDims(l, int(m.sum()), tuple(tuple(int(x) for x in r) for r in m)))
    return rows


def vanishing_violations(table: list[KoszulDims]) -> list[int]:
    """Degrees where ``K_l`` is nonzero although some earlier ``K_l'`` vanished."""
    seen_zero = False
    bad = []
    for row in table:
        if row.dim == 0:
            seen_zero = True
        elif seen_zero:
            bad.append(row.l)
    return bad


@dataclass(frozen=True)
class TopFormReport:
    """Why ``K_n`` does not yield a single closed generator per vertex."""

    n: int
    matrix: tuple[tuple[int, ...], ...]
    reason: str
    off_diagonal: tuple[Block, ...] = field(default=())


def top_form(p: QuadraticPresentation, n: int):
    """Generator of ``K_n`` as a sum of one closed component per vertex.

    Returns a :class:`PathVector` when every nonzero block of ``K_n`` is
    closed and one-dimensional; the per-vertex scalars are chosen so that the
    sum is fixed by the signed cyclic shift whenever such a choice exists,
    and scaled so the lexicographically first path has coefficient ``+1``.
    Otherwise returns a :class:`TopFormReport`.
    """
    from .superpotential import signed_cyclic_shift

    if n < 2:
        raise ValueError("n must be at least 2")
    blocks = koszul_blocks(p, n)
    mat = koszul_dim_matrix(p, n)
    matrix = tuple(tuple(int(x) for x in r) for r in mat)
    off = tuple(sorted(b for b, s in blocks.items() if s.dim and b[0] != b[1]))
    if off:
        return TopFormReport(n, matrix, "K_n has components between distinct vertices", off)
    big = tuple(sorted(b for b, s in blocks.items() if s.dim > 1))
    if big:
        return TopFormReport(n, matrix, "K_n has a closed component of dimension > 1", big)
    pieces = []
    for (s, t), sub in sorted(blocks.items()):
        if sub.dim:
            paths = enumerate_paths(p.quiver, n, s, t)
            (row,) = sub.sparse_rows()
            pieces.append(PathVector({paths[c]: x for c, x in row.items()}))
    if not pieces:
        return TopFormReport(n, matrix, "K_n = 0")

    # Find scalars c_v with sum c_v w_v fixed by the signed shift.
    from .linalg import RationalMatrix, kernel

    gidx = path_index(p.quiver, n)
    cols = []
    for w in pieces:
        diff = signed_cyclic_shift(w, p.quiver) - w
        cols.append({gidx[path]: x for path, x in diff.items()})
    mat_rows = [[col.get(r, Fraction(0)) for col in cols] for r in range(len(gidx))]
    ker = kernel(RationalMatrix(mat_rows, len(pieces))).sparse_rows()
    coeffs = [Fraction(1)] * len(pieces)
    if len(ker) == 1 and all(ker[0].get(i) for i in range(len(pieces))):
        coeffs = [ker[0][i] for i in range(len(pieces))]
    total = PathVector()
    for c, w in zip(coeffs, pieces):
        total = total + w.scale(c)
    first = total.items()[0][1]
    return total.scale(1 / first)
