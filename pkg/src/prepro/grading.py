"""Arrow gradings: validation, degree-zero parts, bounded finiteness and exhaustive search.

Arrow degrees are restricted to ``{0, 1}`` in the search: the arrows generate
the first term of the bimodule resolution, which for a Gorenstein parameter 1
grading is generated in degrees 0 and 1.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .quadratic import QuadraticPresentation, graded_dim, is_zero_in_quotient
from .quiver import Path, PathVector, Quiver, find_cycles


class SearchLimitExceeded(ValueError):
    pass


@dataclass(frozen=True)
class WeightGrading:
    """``degrees[i]`` is the degree of arrow ``i``."""

    degrees: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "degrees", tuple(int(d) for d in self.degrees))
        if any(d < 0 for d in self.degrees):
            raise ValueError("arrow degrees must be nonnegative")

    @classmethod
    def zero(cls, num_arrows: int) -> "WeightGrading":
        return cls((0,) * num_arrows)

    @classmethod
    def from_set(cls, num_arrows: int, degree_one: Iterable[int]) -> "WeightGrading":
        ones = set(degree_one)
        return cls(tuple(int(i in ones) for i in range(num_arrows)))

    def __len__(self):
        return len(self.degrees)

    def __getitem__(self, arrow: int) -> int:
        return self.degrees[arrow]

    def path_degree(self, p: Path) -> int:
        return sum(self.degrees[a] for a in p.arrows)

    def arrows_of_degree(self, d: int) -> tuple[int, ...]:
        return tuple(i for i, x in enumerate(self.degrees) if x == d)

    def check(self, quiver: Quiver):
        if len(self.degrees) != quiver.num_arrows:
            raise ValueError(f"grading has {len(self.degrees)} entries, quiver has "
                             f"{quiver.num_arrows} arrows")


def vector_degrees(v: PathVector, g: WeightGrading) -> list[int]:
    return [g.path_degree(p) for p in v.paths()]


@dataclass(frozen=True)
class Finite:
    total_dim: int
    dims: tuple[int, ...]

    kind = "finite"


@dataclass(frozen=True)
class Infinite:
    witness: Path
    checked_up_to: int

    kind = "infinite"


@dataclass(frozen=True)
class Inconclusive:
    bound: int

    kind = "inconclusive"


FinitenessResult = Finite | Infinite | Inconclusive


@dataclass(frozen=True)
class GradingVerdict:
    relations_homogeneous: bool
    first_violation: int | None
    superpotential_degrees: tuple[int, ...]
    gorenstein_parameter: int | None
    degree0_finiteness: FinitenessResult | None = None


def _first_inhomogeneous(p: QuadraticPresentation, g: WeightGrading) -> int | None:
    for i, r in enumerate(p.relations):
        if len(set(vector_degrees(r, g))) > 1:
            return i
    return None


def gorenstein_parameter(p: QuadraticPresentation, w, g: WeightGrading) -> int | None:
    """Common degree of all superpotential terms, or ``None`` when undefined."""
    g.check(p.quiver)
    if _first_inhomogeneous(p, g) is not None:
        return None
    degs = set(vector_degrees(w.form, g))
    return degs.pop() if len(degs) == 1 else None


def degree_zero_part(p: QuadraticPresentation, g: WeightGrading) -> QuadraticPresentation:
    """Subquiver of degree-0 arrows with the relations of total degree 0.

    Arrows are renumbered in their original order and keep their labels.
    """
    g.check(p.quiver)
    bad = _first_inhomogeneous(p, g)
    if bad is not None:
        raise ValueError(f"relation {bad} is not homogeneous under the grading")
    q = p.quiver
    kept = [a for a in q.arrows if g[a.id] == 0]
    renumber = {a.id: i for i, a in enumerate(kept)}
    q0 = Quiver.build([v.label for v in q.vertices], [(a.source, a.target, a.label) for a in kept])
    rels = []
    for r in p.relations:
        if all(d == 0 for d in vector_degrees(r, g)):
            rels.append(PathVector({Path(tuple(renumber[a] for a in path.arrows), path.source, path.target): c
                                    for path, c in r.items()}))
    return QuadraticPresentation(q0, tuple(rels))


def finiteness_check(p0: QuadraticPresentation, l_max: int = 12) -> FinitenessResult:
    """Decide finite dimensionality of ``p0`` from degrees ``<= l_max``.

    ``Finite`` is exact once a graded piece vanishes (every later piece then
    vanishes too).  ``Infinite`` is a bounded certificate: an elementary
    cycle whose powers up to length ``l_max`` are all nonzero.
    """
    if l_max < 1:
        raise ValueError("l_max must be at least 1")
    dims = []
    for d in range(l_max + 1):
        t = graded_dim(p0, d).total
        if t == 0:
            return Finite(sum(dims), tuple(dims))
        dims.append(t)
    q = p0.quiver
    for c in find_cycles(q):
        k = len(c)
        if k > l_max:
            continue
        survives = True
        for m in range(1, l_max // k + 1):
            power = Path(c.arrows * m, c.source, c.target)
            if is_zero_in_quotient(p0, PathVector.from_path(power)):
                survives = False
                break
        if survives:
            return Infinite(c, l_max)
    return Inconclusive(l_max)


def validate_grading(p: QuadraticPresentation, w, g: WeightGrading, *,
                     l_max: int = 12, finiteness: bool = True) -> GradingVerdict:
    g.check(p.quiver)
    bad = _first_inhomogeneous(p, g)
    sdeg = tuple(sorted(vector_degrees(w.form, g)))
    param = None
    if bad is None and sdeg and len(set(sdeg)) == 1:
        param = sdeg[0]
    fin = None
    if finiteness and bad is None:
        fin = finiteness_check(degree_zero_part(p, g), l_max)
    return GradingVerdict(bad is None, bad, sdeg, param, fin)


@dataclass
class SearchResult:
    num_arrows: int
    assignments: int
    valid: list[tuple[WeightGrading, GradingVerdict]] = field(default_factory=list)

    @property
    def num_valid(self) -> int:
        return len(self.valid)

    @property
    def num_finite(self) -> int:
        return sum(isinstance(v.degree0_finiteness, Finite) for _, v in self.valid)

    def summary(self) -> str:
        k = self.num_finite
        if k == 0:
            return ("no preprojective structure found: 0 valid gradings with finite degree-0 part "
                    f"({self.num_valid} valid gradings of {self.assignments})")
        return (f"preprojective structure found: {k} valid gradings with finite degree-0 part "
                f"({self.num_valid} valid gradings of {self.assignments})")


def _constraints(p: QuadraticPresentation, w) -> tuple[list, list]:
    rels = [[tuple(path.arrows) for path in r.paths()] for r in p.relations]
    terms = [tuple(path.arrows) for path in w.form.paths()]
    return rels, terms


def _is_valid(deg: Sequence[int], rels, terms) -> bool:
    for term in terms:
        if sum(deg[a] for a in term) != 1:
            return False
    for paths in rels:
        first = sum(deg[a] for a in paths[0])
        if any(sum(deg[a] for a in path) != first for path in paths[1:]):
            return False
    return True


def _brute(m: int, rels, terms):
    for deg in itertools.product((0, 1), repeat=m):
        if _is_valid(deg, rels, terms):
            yield deg


def _pruned(m: int, rels, terms):
    # each constraint is checked as soon as its largest arrow id is assigned;
    # superpotential terms are also cut once their partial sum exceeds 1
    done_at: list[list] = [[] for _ in range(m)]
    for paths in rels:
        done_at[max(a for path in paths for a in path)].append(("rel", paths))
    for term in terms:
        if term:
            done_at[max(term)].append(("term", term))
    partial: list[list] = [[] for _ in range(m)]
    for term in terms:
        for a in set(term):
            partial[a].append(term)
    if any(not t for t in terms):
        return  # a trivial term has degree 0, never 1
    deg = [0] * m

    def ok(k: int) -> bool:
        for kind, data in done_at[k]:
            if kind == "term":
                if sum(deg[a] for a in data) != 1:
                    return False
            else:
                first = sum(deg[a] for a in data[0])
                if any(sum(deg[a] for a in path) != first for path in data[1:]):
                    return False
        for term in partial[k]:
            if sum(deg[a] for a in term if a <= k) > 1:
                return False
        return True

    def dfs(k: int):
        if k == m:
            yield tuple(deg)
            return
        for v in (0, 1):
            deg[k] = v
            if ok(k):
                yield from dfs(k + 1)
        deg[k] = 0

    yield from dfs(0)


def grading_search(p: QuadraticPresentation, w, *, limit: int = 24, l_max: int = 12,
                   brute: bool = False, finiteness: bool = True) -> SearchResult:
    """All ``{0,1}`` arrow gradings with homogeneous relations and superpotential terms of degree 1.

    Results come in lexicographic order of the degree vectors for both modes.
    """
    m = p.quiver.num_arrows
    if m > limit:
        raise SearchLimitExceeded(f"{m} arrows exceeds the search limit of {limit}")
    rels, terms = _constraints(p, w)
    gen = _brute(m, rels, terms) if brute else _pruned(m, rels, terms)
    result = SearchResult(m, 2 ** m)
    for deg in gen:
        g = WeightGrading(deg)
        result.valid.append((g, validate_grading(p, w, g, l_max=l_max, finiteness=finiteness)))
    return result
