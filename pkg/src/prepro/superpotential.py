"""Superpotentials, path derivatives, derivation-quotient presentations and shuffles.

Sign convention: a single cyclic shift of a closed word of length ``n``,

    v_n (x) ... (x) v_2 (x) v_1   |->   v_1 (x) v_n (x) ... (x) v_2,

is multiplied by ``(-1)^(n-1)``.  Superpotentials are the vectors fixed by
this signed shift.  With this sign the commutator ``x(x)y - y(x)x`` and every
antisymmetrizer are fixed, and so are the generators of top Koszul spaces of
the Calabi-Yau examples.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Literal

from .quadratic import QuadraticPresentation
from .quiver import Path, PathVector, Quiver, enumerate_paths


def _closed_degree(v: PathVector) -> int:
    lengths = v.lengths()
    if len(lengths) > 1:
        raise ValueError("vector is not homogeneous in length")
    if any(not p.is_closed for p in v.paths()):
        raise ValueError("vector has non-closed terms")
    return lengths.pop() if lengths else 0


def rotate(p: Path, quiver: Quiver) -> Path:
    """Move the first-acting arrow of a closed path to the last position."""
    if p.is_trivial:
        return p
    first = quiver.arrows[p.arrows[-1]]
    return Path((p.arrows[-1],) + p.arrows[:-1], first.target, first.target)


def signed_cyclic_shift(v: PathVector, quiver: Quiver) -> PathVector:
    n = _closed_degree(v)
    if n == 0:
        return v
    sign = -1 if n % 2 == 0 else 1
    return PathVector({rotate(p, quiver): sign * c for p, c in v.items()})


@dataclass(frozen=True)
class SuperpotentialCheck:
    homogeneous: bool
    closed: bool
    fixed_by_shift: bool

    @property
    def ok(self) -> bool:
        return self.homogeneous and self.closed and self.fixed_by_shift

    def __bool__(self):
        return self.ok


def check_superpotential(v: PathVector, quiver: Quiver) -> SuperpotentialCheck:
    """Closed terms (equivalently, commuting with every idempotent), one length, shift-fixed."""
    homogeneous = len(v.lengths()) <= 1
    closed = all(p.is_closed for p in v.paths())
    fixed = homogeneous and closed and signed_cyclic_shift(v, quiver) == v
    return SuperpotentialCheck(homogeneous, closed, fixed)


@dataclass(frozen=True)
class Superpotential:
    quiver: Quiver
    form: PathVector

    def __post_init__(self):
        chk = check_superpotential(self.form, self.quiver)
        if not chk.ok:
            raise ValueError(f"not a superpotential: {chk}")
        for p in self.form.paths():
            if p.arrows:
                Path.from_arrows(self.quiver, p.arrows)

    @property
    def degree(self) -> int:
        lengths = self.form.lengths()
        return lengths.pop() if lengths else 0

    def __len__(self):
        return len(self.form)

    def terms(self):
        return self.form.items()


def derive(w: Superpotential | PathVector, p: Path,
           side: Literal["left", "right"] = "left") -> PathVector:
    """Strip ``p`` as a written prefix (``left``) or suffix (``right``) from every term."""
    form = w.form if isinstance(w, Superpotential) else w
    k = len(p)
    out = {}
    for term, c in form.items():
        if len(term) < k:
            continue
        if side == "left":
            if k == 0:
                if term.target == p.source:
                    out[term] = c
            elif term.arrows[:k] == p.arrows:
                out[Path(term.arrows[k:], term.source, p.source)] = c
        elif side == "right":
            if k == 0:
                if term.source == p.source:
                    out[term] = c
            elif term.arrows[len(term) - k:] == p.arrows:
                out[Path(term.arrows[:len(term) - k], p.target, term.target)] = c
        else:
            raise ValueError("side must be 'left' or 'right'")
    return PathVector(out)


def derivation_quotient(w: Superpotential) -> QuadraticPresentation:
    """Presentation whose relations are all ``delta_p w`` with ``len(p) = degree - 2``."""
    n = w.degree
    if n < 2:
        raise ValueError("superpotential degree must be at least 2")
    rels = [derive(w, p, "left") for p in enumerate_paths(w.quiver, n - 2)]
    return QuadraticPresentation.build(w.quiver, rels).canonical()


def _shuffle_sign(mask: tuple[bool, ...]) -> int:
    # mask[i] is True when written position i holds a letter of the first word;
    # the unshuffled word has all first-word letters to the left
    inversions = 0
    seen_second = 0
    for from_first in mask:
        if from_first:
            inversions += seen_second
        else:
            seen_second += 1
    return -1 if inversions % 2 else 1


def shuffle_product(w1: Superpotential, w2: Superpotential, tmap) -> Superpotential:
    """Signed sum over all interleavings of a term of ``w1`` with a term of ``w2``.

    ``tmap`` is the :class:`~prepro.tensor.TensorMap` of the tensor quiver.
    Interleaved letters are routed through the tensor quiver by tracking the
    current vertex pair; each word is closed, so every lift is closed.
    """
    n1, n2 = w1.degree, w2.degree
    q = tmap.quiver
    masks = []
    for pos in itertools.combinations(range(n1 + n2), n1):
        chosen = set(pos)
        mask = tuple(i in chosen for i in range(n1 + n2))
        masks.append((mask, _shuffle_sign(mask)))
    out: dict[Path, object] = {}
    for u, cu in w1.terms():
        for v, cv in w2.terms():
            base = (u.source, v.source)
            for mask, sign in masks:
                it_u = iter(u.arrows)
                it_v = iter(v.arrows)
                written = [(True, next(it_u)) if m else (False, next(it_v)) for m in mask]
                cur = list(base)
                lifted = []
                for from_first, a in reversed(written):
                    if from_first:
                        arr = w1.quiver.arrows[a]
                        if arr.source != cur[0]:
                            raise ValueError("inconsistent tensor map: non-composable lift")
                        lifted.append(tmap.arrow1[(a, cur[1])])
                        cur[0] = arr.target
                    else:
                        arr = w2.quiver.arrows[a]
                        if arr.source != cur[1]:
                            raise ValueError("inconsistent tensor map: non-composable lift")
                        lifted.append(tmap.arrow2[(cur[0], a)])
                        cur[1] = arr.target
                start = tmap.vertex[base]
                path = Path(tuple(reversed(lifted)), start, tmap.vertex[tuple(cur)])
                out[path] = out.get(path, 0) + sign * cu * cv
    return Superpotential(q, PathVector(out))
