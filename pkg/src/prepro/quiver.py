"""Quivers, paths and formal rational combinations of paths.

Composition is right-to-left throughout: the path written ``d b`` means
"first ``b``, then ``d``".  A :class:`Path` stores its arrow ids in written
order, so ``arrows[-1]`` is the first arrow traversed and ``arrows[0]`` the
last.  Trivial paths (vertex idempotents) are paths with no arrows.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Iterable, Mapping

import networkx as nx


@dataclass(frozen=True)
class Vertex:
    id: int
    label: str


@dataclass(frozen=True)
class Arrow:
    id: int
    source: int
    target: int
    label: str


@dataclass(frozen=True)
class Quiver:
    """A finite quiver.  Vertex and arrow ids are their positions."""

    vertices: tuple[Vertex, ...]
    arrows: tuple[Arrow, ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "arrows", tuple(self.arrows))
        if not self.vertices:
            raise ValueError("a quiver needs at least one vertex")
        for i, v in enumerate(self.vertices):
            if v.id != i:
                raise ValueError(f"vertex ids must be 0..n-1 in order, got {v.id} at position {i}")
        for i, a in enumerate(self.arrows):
            if a.id != i:
                raise ValueError(f"arrow ids must be 0..m-1 in order, got {a.id} at position {i}")
            n = len(self.vertices)
            if not (0 <= a.source < n and 0 <= a.target < n):
                raise ValueError(f"arrow {a.label!r} references a missing vertex")
        if len({v.label for v in self.vertices}) != len(self.vertices):
            raise ValueError("vertex labels must be unique")
        if len({a.label for a in self.arrows}) != len(self.arrows):
            raise ValueError("arrow labels must be unique")

    def __hash__(self):
        # quivers key several caches; hashing all arrows every time is wasteful
        h = self.__dict__.get("_hash")
        if h is None:
            h = hash((self.vertices, self.arrows))
            self.__dict__["_hash"] = h
        return h

    @classmethod
    def build(cls, vertex_labels: Iterable, arrows: Iterable[tuple[int, int, str]]) -> "Quiver":
        """Build from vertex labels and ``(source, target, label)`` triples."""
        vs = tuple(Vertex(i, str(lab)) for i, lab in enumerate(vertex_labels))
        arr = tuple(Arrow(i, s, t, str(lab)) for i, (s, t, lab) in enumerate(arrows))
        return cls(vs, arr)

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    @property
    def num_arrows(self) -> int:
        return len(self.arrows)

    @cached_property
    def _arrow_index(self) -> dict[str, Arrow]:
        return {a.label: a for a in self.arrows}

    @cached_property
    def _vertex_index(self) -> dict[str, Vertex]:
        return {v.label: v for v in self.vertices}

    def arrow(self, label: str) -> Arrow:
        return self._arrow_index[label]

    def vertex(self, label: str) -> Vertex:
        return self._vertex_index[label]

    @cached_property
    def out_arrows(self) -> tuple[tuple[Arrow, ...], ...]:
        out = [[] for _ in self.vertices]
        for a in self.arrows:
            out[a.source].append(a)
        return tuple(tuple(x) for x in out)

    @cached_property
    def in_arrows(self) -> tuple[tuple[Arrow, ...], ...]:
        inn = [[] for _ in self.vertices]
        for a in self.arrows:
            inn[a.target].append(a)
        return tuple(tuple(x) for x in inn)

    def path(self, *labels: str) -> "Path":
        """Path from arrow labels in written order, e.g. ``q.path("d", "b")``."""
        return Path.from_arrows(self, [self.arrow(lab).id for lab in labels])

    def trivial(self, vertex: int) -> "Path":
        return Path((), vertex, vertex)

    def adjacency(self, allowed: Iterable[int] | None = None):
        import numpy as np

        allowed = set(range(self.num_arrows)) if allowed is None else set(allowed)
        m = np.zeros((self.num_vertices, self.num_vertices), dtype=np.int64)
        for a in self.arrows:
            if a.id in allowed:
                m[a.target, a.source] += 1
        return m

    def format_path(self, p: "Path") -> str:
        if p.is_trivial:
            return f"e_{self.vertices[p.source].label}"
        return "*".join(self.arrows[i].label for i in p.arrows)


@dataclass(frozen=True)
class Path:
    arrows: tuple[int, ...]
    source: int
    target: int

    @classmethod
    def from_arrows(cls, quiver: Quiver, arrows: Iterable[int]) -> "Path":
        ids = tuple(arrows)
        if not ids:
            raise ValueError("use Quiver.trivial for paths of length zero")
        for later, earlier in zip(ids, ids[1:]):
            if quiver.arrows[earlier].target != quiver.arrows[later].source:
                raise ValueError(f"arrows {ids} do not compose")
        return cls(ids, quiver.arrows[ids[-1]].source, quiver.arrows[ids[0]].target)

    @property
    def is_trivial(self) -> bool:
        return not self.arrows

    @property
    def is_closed(self) -> bool:
        return self.source == self.target

    def __len__(self):
        return len(self.arrows)

    def sort_key(self):
        return (len(self.arrows), self.arrows, self.source)

    def __lt__(self, other: "Path"):
        return self.sort_key() < other.sort_key()


def compose(p: Path, q: Path) -> Path | None:
    """``p`` after ``q``; ``None`` when ``target(q) != source(p)``."""
    if q.target != p.source:
        return None
    return Path(p.arrows + q.arrows, q.source, p.target)


@lru_cache(maxsize=256)
def _paths_of_length(quiver: Quiver, length: int) -> tuple[Path, ...]:
    if length < 0:
        raise ValueError("length must be nonnegative")
    if length == 0:
        return tuple(Path((), v.id, v.id) for v in quiver.vertices)
    shorter = _paths_of_length(quiver, length - 1)
    out = []
    for p in shorter:
        for a in quiver.out_arrows[p.target]:
            out.append(Path((a.id,) + p.arrows, p.source, a.target))
    out.sort(key=Path.sort_key)
    return tuple(out)


@lru_cache(maxsize=1024)
def _paths_between(quiver: Quiver, length: int, source, target) -> tuple[Path, ...]:
    return tuple(p for p in _paths_of_length(quiver, length)
                 if (source is None or p.source == source) and (target is None or p.target == target))


def enumerate_paths(quiver: Quiver, length: int, source: int | None = None,
                    target: int | None = None) -> list[Path]:
    """All paths of ``length``, sorted lexicographically by written arrow ids."""
    return list(_paths_between(quiver, length, source, target))


@lru_cache(maxsize=1024)
def path_index(quiver: Quiver, length: int, source=None, target=None) -> dict[Path, int]:
    return {p: i for i, p in enumerate(_paths_between(quiver, length, source, target))}


class PathVector:
    """Finite rational combination of paths; immutable, zero terms dropped."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Path, object] | Iterable[tuple[Path, object]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Path, Fraction] = {}
        for p, c in items:
            c = c if isinstance(c, Fraction) else Fraction(c)
            acc[p] = acc.get(p, 0) + c
        self._terms = {p: c for p, c in acc.items() if c}
        self._hash = None

    @classmethod
    def from_path(cls, p: Path, coef=1) -> "PathVector":
        return cls({p: coef})

    @classmethod
    def _raw(cls, terms: dict) -> "PathVector":
        v = cls.__new__(cls)
        v._terms = terms
        v._hash = None
        return v

    @property
    def terms(self) -> Mapping[Path, Fraction]:
        return dict(self._terms)

    def items(self) -> list[tuple[Path, Fraction]]:
        return sorted(self._terms.items(), key=lambda t: t[0].sort_key())

    def paths(self) -> list[Path]:
        return sorted(self._terms, key=Path.sort_key)

    def coefficient(self, p: Path) -> Fraction:
        return self._terms.get(p, Fraction(0))

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __iter__(self):
        return iter(self.items())

    def homogeneity(self) -> tuple[int, int, int] | None:
        """Common ``(source, target, length)`` of all terms, or ``None``."""
        kinds = {(p.source, p.target, len(p)) for p in self._terms}
        return kinds.pop() if len(kinds) == 1 else None

    def lengths(self) -> set[int]:
        return {len(p) for p in self._terms}

    def __add__(self, other: "PathVector") -> "PathVector":
        if not isinstance(other, PathVector):
            return NotImplemented
        out = dict(self._terms)
        for p, c in other._terms.items():
            v = out.get(p, 0) + c
            if v:
                out[p] = v
            else:
                out.pop(p, None)
        return PathVector._raw(out)

    def __neg__(self) -> "PathVector":
        return PathVector._raw({p: -c for p, c in self._terms.items()})

    def __sub__(self, other: "PathVector") -> "PathVector":
        if not isinstance(other, PathVector):
            return NotImplemented
        return self + (-other)

    def scale(self, c) -> "PathVector":
        c = Fraction(c)
        if not c:
            return PathVector()
        return PathVector._raw({p: a * c for p, a in self._terms.items()})

    def __mul__(self, c):
        if isinstance(c, PathVector):
            return NotImplemented
        return self.scale(c)

    __rmul__ = __mul__

    def concatenate(self, other: "PathVector") -> "PathVector":
        """Bilinear extension of :func:`compose` (``other`` acts first)."""
        out: dict[Path, Fraction] = {}
        for p, a in self._terms.items():
            for q, b in other._terms.items():
                r = compose(p, q)
                if r is not None:
                    out[r] = out.get(r, 0) + a * b
        return PathVector(out)

    def map_arrows(self, arrow_map: Mapping[int, int], target_quiver: Quiver,
                   vertex_map: Mapping[int, int] | None = None) -> "PathVector":
        """Relabel arrows through ``arrow_map`` into ``target_quiver``."""
        out = {}
        for p, c in self._terms.items():
            if p.is_trivial:
                if vertex_map is None:
                    raise ValueError("a vertex map is needed to transport trivial paths")
                v = vertex_map[p.source]
                out[Path((), v, v)] = c
            else:
                out[Path.from_arrows(target_quiver, [arrow_map[i] for i in p.arrows])] = c
        return PathVector(out)

    def __eq__(self, other):
        if not isinstance(other, PathVector):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def format(self, quiver: Quiver) -> str:
        if not self._terms:
            return "0"
        parts = []
        for p, c in self.items():
            name = quiver.format_path(p)
            if c == 1:
                parts.append(f"+ {name}")
            elif c == -1:
                parts.append(f"- {name}")
            elif c < 0:
                parts.append(f"- {-c}*{name}")
            else:
                parts.append(f"+ {c}*{name}")
        s = " ".join(parts)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]

    def __repr__(self):
        body = ", ".join(f"{c}*{list(p.arrows) or ('e', p.source)}" for p, c in self.items())
        return f"PathVector({body})"


def find_cycles(quiver: Quiver, allowed_arrows: Iterable[int] | None = None) -> list[Path]:
    """Elementary oriented cycles using only ``allowed_arrows``.

    Parallel arrows give distinct cycles.  Each cycle is returned as a closed
    path based at its smallest vertex, sorted by length then arrow ids.
    """
    allowed = set(range(quiver.num_arrows)) if allowed_arrows is None else set(allowed_arrows)
    g = nx.DiGraph()
    g.add_nodes_from(range(quiver.num_vertices))
    parallel: dict[tuple[int, int], list[int]] = {}
    for a in quiver.arrows:
        if a.id in allowed:
            g.add_edge(a.source, a.target)
            parallel.setdefault((a.source, a.target), []).append(a.id)
    out = []
    for cyc in nx.simple_cycles(g):
        k = cyc.index(min(cyc))
        cyc = cyc[k:] + cyc[:k]
        steps = [parallel[(cyc[i], cyc[(i + 1) % len(cyc)])] for i in range(len(cyc))]
        for choice in itertools.product(*steps):
            # choice lists arrows in traversal order; written order is reversed
            out.append(Path(tuple(reversed(choice)), cyc[0], cyc[0]))
    out.sort(key=Path.sort_key)
    return out


def is_acyclic(quiver: Quiver, allowed_arrows: Iterable[int] | None = None) -> bool:
    allowed = set(range(quiver.num_arrows)) if allowed_arrows is None else set(allowed_arrows)
    g = nx.MultiDiGraph()
    g.add_nodes_from(range(quiver.num_vertices))
    g.add_edges_from((a.source, a.target) for a in quiver.arrows if a.id in allowed)
    return nx.is_directed_acyclic_graph(g)
