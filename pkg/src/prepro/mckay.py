"""McKay quivers of cyclic groups ``1/r(a_1, ..., a_n)`` and their skew-group presentations.

Vertex ``l`` of ``Z_r`` is the character ``g -> zeta^l``.  The arrow
``x_i^l: l -> l + a_i`` has id ``(i - 1) * r + l`` and label ``"x{i}^{l}"``.
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass

from .grading import WeightGrading
from .quadratic import QuadraticPresentation
from .quiver import Path, PathVector, Quiver
from .superpotential import Superpotential

_SPEC_RE = re.compile(r"^\s*(\d+)\s*:\s*(\d+(?:\s*,\s*\d+)*)\s*$")


@dataclass(frozen=True)
class CyclicGroupSpec:
    r: int
    weights: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(int(a) for a in self.weights))
        if self.r < 1:
            raise ValueError("group order must be at least 1")
        if not self.weights:
            raise ValueError("need at least one weight")
        if any(not 0 <= a < self.r for a in self.weights):
            raise ValueError(f"weights must lie in [0, {self.r})")

    @classmethod
    def parse(cls, text: str) -> "CyclicGroupSpec":
        """Parse ``"r:a1,...,an"``, e.g. ``"5:1,1,3"``."""
        m = _SPEC_RE.match(text)
        if not m:
            raise ValueError(f"cannot parse group spec {text!r}; expected 'r:a1,...,an'")
        return cls(int(m.group(1)), tuple(int(x) for x in m.group(2).split(",")))

    def __str__(self):
        return f"{self.r}:{','.join(map(str, self.weights))}"

    @property
    def n(self) -> int:
        return len(self.weights)

    @property
    def is_sl(self) -> bool:
        return sum(self.weights) % self.r == 0

    def arrow_id(self, i: int, l: int) -> int:
        """Id of ``x_i^l`` (``i`` counted from 1)."""
        return (i - 1) * self.r + l % self.r


def mckay_quiver(s: CyclicGroupSpec) -> Quiver:
    r = s.r
    arrows = [(l, (l + a) % r, f"x{i}^{l}") for i, a in enumerate(s.weights, 1) for l in range(r)]
    return Quiver.build([str(l) for l in range(r)], arrows)


def mckay_presentation(s: CyclicGroupSpec) -> QuadraticPresentation:
    """Skew commutators ``x_j^(l+a_i) x_i^l - x_i^(l+a_j) x_j^l`` for ``i < j`` at each ``l``."""
    q = mckay_quiver(s)
    r, w = s.r, s.weights
    rels = []
    for l in range(r):
        for i, j in itertools.combinations(range(1, s.n + 1), 2):
            end = (l + w[i - 1] + w[j - 1]) % r
            rels.append(PathVector({
                Path((s.arrow_id(j, l + w[i - 1]), s.arrow_id(i, l)), l, end): 1,
                Path((s.arrow_id(i, l + w[j - 1]), s.arrow_id(j, l)), l, end): -1,
            }))
    return QuadraticPresentation(q, tuple(rels))


def _route(s: CyclicGroupSpec, types_acting: tuple[int, ...], base: int) -> Path:
    cur = base
    ids = []
    for t in types_acting:
        ids.append(s.arrow_id(t, cur))
        cur = (cur + s.weights[t - 1]) % s.r
    return Path(tuple(reversed(ids)), base, cur)


def _perm_sign(perm: tuple[int, ...]) -> int:
    sign = 1
    for i, j in itertools.combinations(range(len(perm)), 2):
        if perm[i] > perm[j]:
            sign = -sign
    return sign


def skew_superpotential(s: CyclicGroupSpec) -> Superpotential:
    """Antisymmetrizer of ``x_n ... x_1`` routed from every vertex.

    The term for a permutation ``pi`` at base ``l`` is the closed path whose
    arrows, in acting order, have types ``pi(1), ..., pi(n)``.
    """
    if not s.is_sl:
        raise ValueError(f"{s} is not in SL(n): weights do not sum to 0 mod r")
    q = mckay_quiver(s)
    terms = {}
    for l in range(s.r):
        for perm in itertools.permutations(range(1, s.n + 1)):
            path = _route(s, perm, l)
            terms[path] = terms.get(path, 0) + _perm_sign(perm)
    return Superpotential(q, PathVector(terms))


def air_grading(s: CyclicGroupSpec) -> WeightGrading:
    """Degree 1 exactly on the arrows ``x_j^l`` with ``(l + a_j) mod r < l``."""
    ones = [s.arrow_id(i, l) for i, a in enumerate(s.weights, 1)
            for l in range(s.r) if (l + a) % s.r < l]
    return WeightGrading.from_set(s.n * s.r, ones)


def generators(s: CyclicGroupSpec) -> list[tuple[int, tuple[int, ...]]]:
    """Generators ``g^k`` (``gcd(k, r) = 1``) with weights reduced into ``[0, r)``."""
    return [(k, tuple(k * a % s.r for a in s.weights))
            for k in range(1, s.r + 1) if math.gcd(k, s.r) == 1]


PREPROJECTIVE = "preprojective-grading-exists"
EMBEDS = "embeds"
UNKNOWN = "unknown"


@dataclass(frozen=True)
class Classification:
    spec: CyclicGroupSpec
    sl: bool
    air: bool
    air_generator: int | None
    condition_a: bool
    condition_b: bool
    embeds: bool | None
    verdict: str

    @property
    def description(self) -> str:
        if self.verdict == PREPROJECTIVE:
            return f"skew-group algebra has a preprojective grading (generator g^{self.air_generator})"
        if self.verdict == EMBEDS:
            return "embeds in SL(n1) x SL(n2): no preprojective structure"
        if not self.sl:
            return "not a subgroup of SL(n)"
        return "undecided by the available criteria"


def classify_group(s: CyclicGroupSpec) -> Classification:
    gens = generators(s)
    r = s.r
    air_k = None
    cond_a = cond_b = False
    embeds = None
    if s.is_sl:
        for k, w in gens:
            if all(math.gcd(a, r) == 1 and 0 < a < r for a in w) and sum(w) == r:
                air_k = k
                break
        cond_a = any(0 in w for _, w in gens)
        cond_b = all(all(0 < a < r for a in w) and sum(w) > r for _, w in gens)
        if s.n >= 2:
            if cond_a or (cond_b and s.n <= 4):
                embeds = True
            elif not cond_a and not cond_b:
                # an embedding forces (a) or (b)
                embeds = False
    if air_k is not None:
        verdict = PREPROJECTIVE
    elif embeds:
        verdict = EMBEDS
    else:
        verdict = UNKNOWN
    return Classification(s, s.is_sl, air_k is not None, air_k, cond_a, cond_b, embeds, verdict)


def enumerate_specs(max_r: int, n: int, sl_only: bool = True) -> list[CyclicGroupSpec]:
    """Specs ``1/r(a)`` with ``r <= max_r`` and sorted weights, in lexicographic order."""
    out = []
    for r in range(1, max_r + 1):
        for w in itertools.combinations_with_replacement(range(r), n):
            if not sl_only or sum(w) % r == 0:
                out.append(CyclicGroupSpec(r, w))
    return out
