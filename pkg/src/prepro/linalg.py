"""Exact rational linear algebra.

Matrices are exposed densely through :class:`RationalMatrix`, but all
elimination runs on sparse rows (``dict`` column -> ``Fraction``): the
relation and path spaces handled by this package have a handful of nonzero
entries per row and several thousand columns.

Subspaces are kept in reduced row-echelon form, which makes them canonical:
two :class:`Subspace` objects compare equal iff they span the same space.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

SparseRow = dict  # column index -> nonzero Fraction


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floats are not accepted; pass int, Fraction or 'p/q' strings")
    return Fraction(x)


def _sparse(vec) -> SparseRow:
    if isinstance(vec, Mapping):
        return {int(c): _as_fraction(a) for c, a in vec.items() if a != 0}
    return {c: _as_fraction(a) for c, a in enumerate(vec) if a != 0}


class RationalMatrix:
    """Immutable dense matrix of exact rationals."""

    __slots__ = ("_entries", "_cols")

    def __init__(self, entries: Iterable[Sequence] = (), cols: int | None = None):
        rows = tuple(tuple(_as_fraction(x) for x in row) for row in entries)
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for row in rows:
            if len(row) != cols:
                raise ValueError("ragged matrix")
        self._entries = rows
        self._cols = cols

    @classmethod
    def from_sparse(cls, rows: Iterable[Mapping[int, Fraction]], cols: int) -> "RationalMatrix":
        dense = []
        for row in rows:
            line = [Fraction(0)] * cols
            for c, a in row.items():
                line[c] = a
            dense.append(line)
        return cls(dense, cols)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RationalMatrix":
        return cls([[0] * cols for _ in range(rows)], cols)

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)], n)

    @property
    def rows(self) -> int:
        return len(self._entries)

    @property
    def cols(self) -> int:
        return self._cols

    @property
    def entries(self) -> tuple[tuple[Fraction, ...], ...]:
        return self._entries

    def __getitem__(self, idx):
        i, j = idx
        return self._entries[i][j]

    def sparse_rows(self) -> list[SparseRow]:
        return [_sparse(row) for row in self._entries]

    def apply(self, v: Sequence) -> tuple[Fraction, ...]:
        """Return ``self @ v`` for a column vector ``v``."""
        if len(v) != self._cols:
            raise ValueError("dimension mismatch")
        vv = [_as_fraction(x) for x in v]
        return tuple(sum((a * b for a, b in zip(row, vv)), Fraction(0)) for row in self._entries)

    def __eq__(self, other):
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return self._cols == other._cols and self._entries == other._entries

    def __hash__(self):
        return hash((self._cols, self._entries))

    def __repr__(self):
        body = ", ".join("[" + ", ".join(str(x) for x in row) + "]" for row in self._entries)
        return f"RationalMatrix([{body}], cols={self._cols})"


def reduce_by(vec: Mapping[int, Fraction], pivots: Mapping[int, SparseRow]) -> SparseRow:
    """Reduce ``vec`` modulo a fully reduced echelon basis.

    ``pivots`` maps each pivot column to its row (pivot entry 1, zero in every
    other pivot column), so a single pass suffices.
    """
    hits = [(c, a) for c, a in vec.items() if c in pivots]
    out = dict(vec)
    for c, a in hits:
        for k, b in pivots[c].items():
            v = out.get(k, 0) - a * b
            if v:
                out[k] = v
            else:
                out.pop(k, None)
    return out


class Echelon:
    """Incrementally maintained reduced row-echelon basis.

    The pivot of each row is its smallest column, so the final rows (sorted
    by pivot) are the unique RREF of the span regardless of insertion order.
    """

    def __init__(self, rows: Iterable[Mapping[int, Fraction]] = ()):
        self.pivots: dict[int, SparseRow] = {}
        for row in rows:
            self.add(row)

    def __len__(self):
        return len(self.pivots)

    def reduce(self, vec: Mapping[int, Fraction]) -> SparseRow:
        return reduce_by(vec, self.pivots)

    def add(self, vec: Mapping[int, Fraction]) -> bool:
        r = reduce_by(vec, self.pivots)
        if not r:
            return False
        c = min(r)
        inv = 1 / r[c]
        if inv != 1:
            r = {k: v * inv for k, v in r.items()}
        for row in self.pivots.values():
            a = row.get(c)
            if a:
                for k, b in r.items():
                    v = row.get(k, 0) - a * b
                    if v:
                        row[k] = v
                    else:
                        del row[k]
        self.pivots[c] = r
        return True

    def rows(self) -> list[SparseRow]:
        return [self.pivots[c] for c in sorted(self.pivots)]


def rref(m: RationalMatrix) -> tuple[RationalMatrix, int]:
    """Reduced row-echelon form (nonzero rows only) and rank of ``m``."""
    ech = Echelon(m.sparse_rows())
    rows = ech.rows()
    return RationalMatrix.from_sparse(rows, m.cols), len(rows)


def kernel(m: RationalMatrix) -> "Subspace":
    """Right null space ``{v : m v = 0}`` as a subspace of ``QQ^cols``."""
    rows = Echelon(m.sparse_rows()).rows()
    pivot_cols = {min(row): row for row in rows}
    vectors = []
    for f in range(m.cols):
        if f in pivot_cols:
            continue
        v = {f: Fraction(1)}
        for p, row in pivot_cols.items():
            a = row.get(f)
            if a:
                v[p] = -a
        vectors.append(v)
    return Subspace(m.cols, vectors)


class Subspace:
    """A subspace of ``QQ^ambient_dim`` stored by its RREF basis."""

    __slots__ = ("_ambient", "_rows", "_pivots")

    def __init__(self, ambient_dim: int, vectors: Iterable = ()):
        self._ambient = int(ambient_dim)
        ech = Echelon()
        for v in vectors:
            row = _sparse(v)
            if row and (min(row) < 0 or max(row) >= self._ambient):
                raise ValueError("vector has entries outside the ambient space")
            ech.add(row)
        self._rows = tuple(ech.rows())
        self._pivots = {min(r): r for r in self._rows}

    @classmethod
    def full(cls, n: int) -> "Subspace":
        return cls(n, ({i: 1} for i in range(n)))

    @classmethod
    def zero(cls, n: int) -> "Subspace":
        return cls(n)

    @property
    def ambient_dim(self) -> int:
        return self._ambient

    @property
    def dim(self) -> int:
        return len(self._rows)

    def __len__(self):
        return len(self._rows)

    @property
    def pivots(self) -> tuple[int, ...]:
        return tuple(min(r) for r in self._rows)

    def sparse_rows(self) -> list[SparseRow]:
        return [dict(r) for r in self._rows]

    @property
    def basis(self) -> RationalMatrix:
        return RationalMatrix.from_sparse(self._rows, self._ambient)

    def _check(self, other: "Subspace"):
        if self._ambient != other._ambient:
            raise ValueError(f"ambient dimension mismatch: {self._ambient} != {other._ambient}")

    def reduce(self, v) -> SparseRow:
        """Normal form of ``v`` modulo this subspace."""
        return reduce_by(_sparse(v), self._pivots)

    def contains(self, v) -> bool:
        row = _sparse(v)
        if row and max(row) >= self._ambient:
            raise ValueError("vector longer than ambient space")
        return not reduce_by(row, self._pivots)

    def __contains__(self, v):
        return self.contains(v)

    def issubspace(self, other: "Subspace") -> bool:
        self._check(other)
        return all(other.contains(r) for r in self._rows)

    def sum(self, other: "Subspace") -> "Subspace":
        self._check(other)
        return Subspace(self._ambient, list(self._rows) + list(other._rows))

    __add__ = sum

    def intersect(self, other: "Subspace") -> "Subspace":
        """Intersection via the Zassenhaus construction."""
        self._check(other)
        if not self._rows or not other._rows:
            return Subspace(self._ambient)
        n = self._ambient
        ech = Echelon()
        small, big = (self, other) if self.dim <= other.dim else (other, self)
        for r in big._rows:
            ech.add(r)
        for r in small._rows:
            ech.add({**r, **{c + n: a for c, a in r.items()}})
        return Subspace(n, ({c - n: a for c, a in row.items()}
                            for p, row in ech.pivots.items() if p >= n))

    __and__ = intersect

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self._ambient == other._ambient and self._rows == other._rows

    def __hash__(self):
        return hash((self._ambient, tuple(tuple(sorted(r.items())) for r in self._rows)))

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient_dim={self._ambient})"
