"""Higher preprojective presentations of basic Koszul algebras.

Given ``p`` with ``K_n != 0`` and ``K_{n+1} = 0``, add one arrow
``a_q: target(q) -> source(q)`` for each basis element ``q`` of ``K_n`` and,
for each basis element ``p`` of ``K_{n-1}``, the relation

    sum_q (dL_p q) a_q  +  (-1)^n  sum_q a_q (dR_p q)

where ``dL_p`` strips ``p`` from the written left of ``q`` and ``dR_p`` from
the written right.  Both derivatives are taken against the dual basis of the
RREF basis of ``K_{n-1}``, so ``p`` may be a combination of paths.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .grading import WeightGrading
from .koszul import koszul_basis, koszul_dims, koszul_space
from .quadratic import QuadraticPresentation, koszulity_probe
from .linalg import Subspace
from .quiver import Path, PathVector, Quiver, path_index
from .superpotential import Superpotential, signed_cyclic_shift


class PreconditionError(ValueError):
    def __init__(self, message: str, table=None):
        super().__init__(message)
        self.table = table


@dataclass(frozen=True)
class PreprojectivePresentation:
    presentation: QuadraticPresentation
    base: QuadraticPresentation
    n: int
    generators: tuple[PathVector, ...]
    new_arrows: dict
    preprojective_grading: WeightGrading
    left_relations: tuple[PathVector, ...]
    right_relations: tuple[PathVector, ...]

    @property
    def quiver(self) -> Quiver:
        return self.presentation.quiver

    def new_arrow(self, i: int) -> int:
        return self.new_arrows[i]


def _split(v: PathVector, quiver: Quiver, side: str) -> dict[int, dict[Path, Fraction]]:
    """``v = sum_a X_a (x) a`` (``side="first"``, ``a`` acts first) or
    ``v = sum_a a (x) Y_a`` (``side="last"``); returns ``{a: X_a}`` as term dicts."""
    out: dict[int, dict[Path, Fraction]] = {}
    for path, c in v.items():
        if side == "first":
            a = path.arrows[-1]
            rest = Path(path.arrows[:-1], quiver.arrows[a].target, path.target)
        else:
            a = path.arrows[0]
            rest = Path(path.arrows[1:], path.source, quiver.arrows[a].source)
        out.setdefault(a, {})[rest] = c
    return out


def _coordinates(parts: dict[int, dict[Path, Fraction]],
                 pivots: dict[Path, int]) -> dict[int, dict[int, Fraction]]:
    """Coordinates of each ``X_a`` in the RREF basis, read off at pivot paths."""
    out: dict[int, dict[int, Fraction]] = {}
    for a, terms in parts.items():
        for path, c in terms.items():
            j = pivots.get(path)
            if j is not None:
                out.setdefault(j, {})[a] = c
    return out


def _pivot_table(basis: list[PathVector]) -> dict[Path, int]:
    # the leading path of an RREF basis vector is its pivot
    return {b.items()[0][0]: j for j, b in enumerate(basis)}


def _check_preconditions(p: QuadraticPresentation, n: int, d_max: int):
    table = koszul_dims(p, n + 1)
    if koszul_space(p, n + 1).dim != 0 or koszul_space(p, n).dim == 0:
        raise PreconditionError(
            f"need K_{n} != 0 and K_{n + 1} = 0; dims are "
            + ", ".join(f"K_{row.l}={row.dim}" for row in table), table)
    verdict = koszulity_probe(p, d_max)
    if not verdict.passed:
        raise PreconditionError(f"input fails the Koszulity probe: {verdict.message}", table)


def _new_labels(q: Quiver, count: int) -> list[str]:
    used = {a.label for a in q.arrows}
    labels = []
    for i in range(count):
        lab = f"a_q{i + 1}"
        while lab in used:
            lab += "'"
        used.add(lab)
        labels.append(lab)
    return labels


def _validate_generators(p: QuadraticPresentation, n: int, gens) -> list[PathVector]:
    space = koszul_space(p, n)
    idx = path_index(p.quiver, n)
    gens = list(gens)
    rows = []
    for g in gens:
        h = g.homogeneity()
        if h is None or h[2] != n:
            raise ValueError("generators must be homogeneous of length n with one source and target")
        row = {idx[path]: c for path, c in g.items()}
        if not space.contains(row):
            raise ValueError(f"{g!r} is not in K_{n}")
        rows.append(row)
    if len(gens) != space.dim or Subspace(space.ambient_dim, rows).dim != space.dim:
        raise ValueError(f"generators must form a basis of K_{n} (dim {space.dim})")
    return gens


def build_preprojective(p: QuadraticPresentation, n: int, d_max: int = 8,
                        check: bool = True, generators=None) -> PreprojectivePresentation:
    """Preprojective presentation of ``p`` in global dimension ``n``.

    ``generators`` optionally fixes the basis of ``K_n`` (and so the order and
    scaling of the new arrows); by default the RREF basis is used.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if check:
        _check_preconditions(p, n, d_max)
    q = p.quiver
    if generators is None:
        gens = koszul_basis(p, n)
    else:
        gens = _validate_generators(p, n, generators)
    lower = koszul_basis(p, n - 1)
    pivots = _pivot_table(lower)

    labels = _new_labels(q, len(gens))
    arrows = [(a.source, a.target, a.label) for a in q.arrows]
    new_arrows = {}
    for i, g in enumerate(gens):
        s, t, _ = g.homogeneity()
        new_arrows[i] = len(arrows)
        arrows.append((t, s, labels[i]))
    big = Quiver.build([v.label for v in q.vertices], arrows)

    left: dict[int, dict[Path, Fraction]] = {j: {} for j in range(len(lower))}
    right: dict[int, dict[Path, Fraction]] = {j: {} for j in range(len(lower))}
    for i, g in enumerate(gens):
        aq = new_arrows[i]
        s, t, _ = g.homogeneity()
        # g = sum_a X_a (x) a, so dL_p g = sum_a <p*, X_a> a, then (dL_p g) a_q
        for j, coeffs in _coordinates(_split(g, q, "first"), pivots).items():
            for a, c in coeffs.items():
                path = Path((a, aq), t, q.arrows[a].target)
                left[j][path] = left[j].get(path, 0) + c
        for j, coeffs in _coordinates(_split(g, q, "last"), pivots).items():
            for a, c in coeffs.items():
                path = Path((aq, a), q.arrows[a].source, s)
                right[j][path] = right[j].get(path, 0) + c

    left_rels = tuple(PathVector(left[j]) for j in range(len(lower)))
    right_rels = tuple(PathVector(right[j]) for j in range(len(lower)))
    sign = -1 if n % 2 else 1
    combined = [left_rels[j] + right_rels[j].scale(sign) for j in range(len(lower))]
    pres = QuadraticPresentation.build(big, list(p.relations) + combined)
    grading = WeightGrading.from_set(big.num_arrows, new_arrows.values())
    return PreprojectivePresentation(pres, p, n, tuple(gens), new_arrows, grading,
                                     tuple(v for v in left_rels if v),
                                     tuple(v for v in right_rels if v))


def preprojective_superpotential(pp: PreprojectivePresentation) -> Superpotential:
    """``sum_q sum_{l=0..n} s^l(q a_q)`` with ``s`` the signed cyclic shift.

    Each ``s^l`` carries the sign ``(-1)^(n l)``; for odd ``n`` this is the
    plain alternating sign ``(-1)^l``.
    """
    big = pp.quiver
    total = PathVector()
    for i, g in enumerate(pp.generators):
        aq = pp.new_arrows[i]
        _, t, _ = g.homogeneity()
        term = PathVector({Path(path.arrows + (aq,), t, t): c for path, c in g.items()})
        for _ in range(pp.n + 1):
            total = total + term
            term = signed_cyclic_shift(term, big)
    try:
        return Superpotential(big, total)
    except ValueError as exc:
        raise ValueError(f"preprojective superpotential failed its check: {exc}") from None

