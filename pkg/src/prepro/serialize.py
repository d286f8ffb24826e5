"""JSON documents and DOT export.

Every document is an object with ``schema_version`` ``"1"`` and a ``kind``.
Coefficients are exact ``"num/den"`` strings.  Output is canonical: keys are
sorted and terms follow the lexicographic path order, so equal inputs give
byte-identical text.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .grading import Finite, GradingVerdict, Inconclusive, Infinite, WeightGrading
from .quadratic import QuadraticPresentation
from .quiver import Arrow, Path, PathVector, Quiver, Vertex
from .superpotential import Superpotential

SCHEMA_VERSION = "1"


class DocumentError(ValueError):
    """Malformed or unsupported document."""


def fraction_to_str(c: Fraction) -> str:
    c = Fraction(c)
    return f"{c.numerator}/{c.denominator}"


def fraction_from_str(s) -> Fraction:
    if not isinstance(s, str):
        raise DocumentError(f"coefficients must be strings, got {s!r}")
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError):
        raise DocumentError(f"bad coefficient {s!r}") from None


def quiver_to_dict(q: Quiver, grading: WeightGrading | None = None) -> dict:
    arrows = []
    for a in q.arrows:
        d = {"id": a.id, "source": a.source, "target": a.target, "label": a.label}
        if grading is not None:
            d["degree"] = grading[a.id]
        arrows.append(d)
    return {"vertices": [{"id": v.id, "label": v.label} for v in q.vertices], "arrows": arrows}


def quiver_from_dict(d: dict) -> tuple[Quiver, WeightGrading | None]:
    """Quiver plus the grading carried by ``degree`` keys, if every arrow has one."""
    try:
        vs = tuple(Vertex(int(v["id"]), str(v["label"])) for v in d["vertices"])
        arr = tuple(Arrow(int(a["id"]), int(a["source"]), int(a["target"]), str(a["label"]))
                    for a in d["arrows"])
        q = Quiver(vs, arr)
    except (KeyError, TypeError, ValueError) as exc:
        raise DocumentError(f"bad quiver: {exc}") from None
    degs = [a.get("degree") for a in d["arrows"]]
    grading = None
    if degs and all(x is not None for x in degs):
        grading = WeightGrading(tuple(int(x) for x in degs))
    return q, grading


def vector_to_list(v: PathVector) -> list[dict]:
    out = []
    for p, c in v.items():
        term = {"coef": fraction_to_str(c), "path": list(p.arrows)}
        if p.is_trivial:
            term["vertex"] = p.source
        out.append(term)
    return out


def vector_from_list(q: Quiver, terms) -> PathVector:
    out = {}
    try:
        for t in terms:
            ids = [int(i) for i in t["path"]]
            if ids:
                if any(not 0 <= i < q.num_arrows for i in ids):
                    raise DocumentError(f"unknown arrow id in {ids}")
                p = Path.from_arrows(q, ids)
            else:
                v = int(t["vertex"])
                if not 0 <= v < q.num_vertices:
                    raise DocumentError(f"unknown vertex {v}")
                p = q.trivial(v)
            out[p] = out.get(p, 0) + fraction_from_str(t["coef"])
    except (KeyError, TypeError) as exc:
        raise DocumentError(f"bad term list: {exc}") from None
    except ValueError as exc:
        raise DocumentError(str(exc)) from None
    return PathVector(out)


def presentation_to_dict(p: QuadraticPresentation, grading: WeightGrading | None = None) -> dict:
    return {"quiver": quiver_to_dict(p.quiver, grading),
            "relations": [vector_to_list(r) for r in p.relations]}


def presentation_from_dict(d: dict) -> tuple[QuadraticPresentation, WeightGrading | None]:
    if not isinstance(d, dict) or "quiver" not in d:
        raise DocumentError("presentation needs a quiver")
    q, g = quiver_from_dict(d["quiver"])
    rels = tuple(vector_from_list(q, r) for r in d.get("relations", []))
    try:
        return QuadraticPresentation(q, rels), g
    except ValueError as exc:
        raise DocumentError(f"bad relations: {exc}") from None


def superpotential_to_dict(w: Superpotential) -> dict:
    return {"degree": w.degree, "terms": vector_to_list(w.form)}


def superpotential_from_dict(q: Quiver, d: dict) -> Superpotential:
    try:
        w = Superpotential(q, vector_from_list(q, d["terms"]))
    except KeyError:
        raise DocumentError("superpotential needs terms") from None
    except DocumentError:
        raise
    except ValueError as exc:
        raise DocumentError(str(exc)) from None
    if "degree" in d and int(d["degree"]) != w.degree and len(w):
        raise DocumentError("superpotential degree does not match its terms")
    return w


def grading_to_dict(g: WeightGrading) -> dict:
    return {"degrees": list(g.degrees)}


def grading_from_dict(d: dict) -> WeightGrading:
    try:
        return WeightGrading(tuple(int(x) for x in d["degrees"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise DocumentError(f"bad grading: {exc}") from None


def finiteness_to_dict(f, quiver: Quiver | None = None) -> dict | None:
    if f is None:
        return None
    if isinstance(f, Finite):
        return {"kind": "finite", "total_dim": f.total_dim, "dims": list(f.dims)}
    if isinstance(f, Infinite):
        d = {"kind": "infinite", "checked_up_to": f.checked_up_to,
             "witness": {"path": list(f.witness.arrows), "vertex": f.witness.source}}
        if quiver is not None:
            d["witness"]["labels"] = [quiver.arrows[a].label for a in f.witness.arrows]
        return d
    if isinstance(f, Inconclusive):
        return {"kind": "inconclusive", "bound": f.bound}
    raise TypeError(f"unknown finiteness result {f!r}")


def verdict_to_dict(v: GradingVerdict, quiver0: Quiver | None = None) -> dict:
    return {
        "relations_homogeneous": v.relations_homogeneous,
        "first_violation": v.first_violation,
        "superpotential_degrees": list(v.superpotential_degrees),
        "gorenstein_parameter": v.gorenstein_parameter,
        "degree0_finiteness": finiteness_to_dict(v.degree0_finiteness, quiver0),
    }


def make_document(kind: str, **payload) -> dict:
    doc = {"schema_version": SCHEMA_VERSION, "kind": kind}
    doc.update(payload)
    return doc


def dumps(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def loads(text: str) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"malformed JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise DocumentError("document must be a JSON object")
    if doc.get("schema_version") != SCHEMA_VERSION:
        raise DocumentError(f"unsupported schema_version {doc.get('schema_version')!r}")
    return doc


def read_inputs(doc: dict):
    """``(presentation, superpotential or None, grading or None)`` from a document."""
    if "presentation" not in doc:
        raise DocumentError("document has no presentation")
    p, g = presentation_from_dict(doc["presentation"])
    if "grading" in doc:
        g = grading_from_dict(doc["grading"])
    w = None
    if "superpotential" in doc:
        w = superpotential_from_dict(p.quiver, doc["superpotential"])
    if g is not None and len(g) != p.quiver.num_arrows:
        raise DocumentError("grading length does not match the arrow count")
    return p, w, g


def _dot_quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(q: Quiver, grading: WeightGrading | None = None, name: str = "Q") -> str:
    """Degree-0 arrows black, degree-1 arrows red, other degrees blue."""
    colors = {0: "black", 1: "red"}
    lines = [f"digraph {_dot_quote(name)} {{"]
    for v in q.vertices:
        lines.append(f"  {v.id} [label={_dot_quote(v.label)}];")
    for a in q.arrows:
        deg = grading[a.id] if grading is not None else 0
        color = colors.get(deg, "blue")
        lines.append(f"  {a.source} -> {a.target} [label={_dot_quote(a.label)}, color={color}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
