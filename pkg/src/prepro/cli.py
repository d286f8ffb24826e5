"""Command-line interface.

Exit codes: 0 success, 2 parse error, 3 failed precondition, 4 resource limit.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor

from . import catalog
from .grading import SearchLimitExceeded, degree_zero_part, grading_search
from .koszul import koszul_dims, vanishing_violations
from .mckay import CyclicGroupSpec, air_grading, classify_group, enumerate_specs, mckay_presentation, skew_superpotential
from .preprojective import PreconditionError, build_preprojective, preprojective_superpotential
from .quadratic import hilbert_table, koszulity_probe
from .serialize import (
    DocumentError,
    dumps,
    grading_to_dict,
    loads,
    make_document,
    presentation_to_dict,
    read_inputs,
    superpotential_to_dict,
    to_dot,
    vector_to_list,
    verdict_to_dict,
)
from .superpotential import shuffle_product
from .tensor import lift_grading_sum, tensor_presentation

EXIT_OK, EXIT_PARSE, EXIT_PRECONDITION, EXIT_LIMIT = 0, 2, 3, 4

CATALOG = {
    "beilinson": catalog.beilinson_p2,
    "kx": lambda: catalog.polynomial_quiver(1),
    "kxy": lambda: catalog.polynomial_quiver(2),
    "kxyz": lambda: catalog.polynomial_quiver(3),
    "free2": lambda: catalog.free_algebra(2),
}


class CliError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _read_doc(path: str) -> dict:
    if path == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise CliError(EXIT_PARSE, f"cannot read {path}: {exc}") from None
    return loads(text)


def _emit(text: str, out: str | None):
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _parse_spec(text: str) -> CyclicGroupSpec:
    try:
        return CyclicGroupSpec.parse(text)
    except ValueError as exc:
        raise CliError(EXIT_PARSE, str(exc)) from None


def cmd_mckay(args) -> str:
    s = _parse_spec(args.spec)
    p = mckay_presentation(s)
    g = air_grading(s) if args.air else None
    payload = {"spec": str(s), "presentation": presentation_to_dict(p, g)}
    if g is not None:
        payload["grading"] = grading_to_dict(g)
    if args.with_superpotential:
        if not s.is_sl:
            raise CliError(EXIT_PRECONDITION, f"{s} is not in SL(n); no superpotential")
        payload["superpotential"] = superpotential_to_dict(skew_superpotential(s))
    return dumps(make_document("mckay", **payload))


def cmd_catalog(args) -> str:
    p = CATALOG[args.name]()
    return dumps(make_document("presentation", name=args.name, presentation=presentation_to_dict(p)))


def cmd_prepro(args) -> str:
    p, _, _ = read_inputs(_read_doc(args.input))
    try:
        pp = build_preprojective(p, args.n, d_max=args.d_max)
    except PreconditionError as exc:
        table = [{"l": row.l, "dim": row.dim} for row in exc.table or []]
        raise CliError(EXIT_PRECONDITION, f"{exc}\n{json.dumps(table)}") from None
    w = preprojective_superpotential(pp)
    q = pp.quiver
    new = []
    for i, gen in enumerate(pp.generators):
        a = q.arrows[pp.new_arrows[i]]
        new.append({"generator": i, "arrow": a.id, "label": a.label, "source": a.source,
                    "target": a.target, "generator_terms": vector_to_list(gen)})
    doc = make_document(
        "preprojective", n=pp.n,
        presentation=presentation_to_dict(pp.presentation, pp.preprojective_grading),
        grading=grading_to_dict(pp.preprojective_grading),
        new_arrows=new,
        new_relation_count=pp.presentation.num_relations - pp.base.num_relations,
        superpotential=superpotential_to_dict(w),
    )
    return dumps(doc)


def cmd_tensor(args) -> str:
    p1, w1, g1 = read_inputs(_read_doc(args.first))
    p2, w2, g2 = read_inputs(_read_doc(args.second))
    t, tm = tensor_presentation(p1, p2)
    g = lift_grading_sum(g1, g2, tm) if g1 is not None and g2 is not None else None
    payload = {
        "presentation": presentation_to_dict(t, g),
        "tensor_map": {
            "vertices": [[a, b, v] for (a, b), v in sorted(tm.vertex.items())],
            "arrows1": [[a, b, v] for (a, b), v in sorted(tm.arrow1.items())],
            "arrows2": [[a, b, v] for (a, b), v in sorted(tm.arrow2.items())],
        },
    }
    if g is not None:
        payload["grading"] = grading_to_dict(g)
    if w1 is not None and w2 is not None:
        payload["superpotential"] = superpotential_to_dict(shuffle_product(w1, w2, tm))
    return dumps(make_document("tensor", **payload))


def cmd_koszul_dims(args) -> str:
    p, _, _ = read_inputs(_read_doc(args.input))
    table = koszul_dims(p, args.l_max)
    probe = koszulity_probe(p, args.d_max)
    report = {
        "koszul": [{"l": row.l, "dim": row.dim, "matrix": [list(r) for r in row.matrix]} for row in table],
        "vanishing_violations": vanishing_violations(table),
        "hilbert": [{"degree": h.degree, "total": h.total, "matrix": [list(r) for r in h.matrix]}
                    for h in hilbert_table(p, args.d_max)],
        "koszulity": {"passed": probe.passed, "d_max": probe.d_max,
                      "failed_degree": probe.failed_degree, "message": probe.message},
    }
    return dumps(make_document("koszul-dims", report=report))


def cmd_grading_search(args) -> str:
    p, w, g_in = read_inputs(_read_doc(args.input))
    if w is None:
        raise CliError(EXIT_PARSE, "grading-search needs a document with a superpotential")
    try:
        res = grading_search(p, w, limit=args.limit, l_max=args.l_max, brute=args.brute)
    except SearchLimitExceeded as exc:
        raise CliError(EXIT_LIMIT, str(exc)) from None
    q = p.quiver
    rows = []
    for g, v in res.valid:
        rows.append({
            "degrees": list(g.degrees),
            "degree_one": [q.arrows[i].label for i in g.arrows_of_degree(1)],
            "verdict": verdict_to_dict(v, degree_zero_part(p, g).quiver),
        })
    summary = res.summary()
    report = {"num_arrows": res.num_arrows, "assignments": res.assignments,
              "valid_count": res.num_valid, "finite_count": res.num_finite,
              "mode": "brute" if args.brute else "pruned", "gradings": rows}
    if g_in is not None:
        found = any(g == g_in for g, _ in res.valid)
        report["input_grading_found"] = found
        summary += "; the input grading is " + ("among them" if found else "not among them")
    report["summary"] = summary
    return dumps(make_document("grading-search", report=report))


def _classify_one(text: str) -> dict:
    try:
        s = CyclicGroupSpec.parse(text)
        c = classify_group(s)
    except Exception as exc:  # per-record errors must not abort the batch
        return {"spec": text, "error": str(exc)}
    return {"spec": str(s), "sl": c.sl, "air": c.air, "air_generator": c.air_generator,
            "condition_a": c.condition_a, "condition_b": c.condition_b,
            "embeds": c.embeds, "verdict": c.verdict, "description": c.description}


def _workers() -> int:
    env = os.environ.get("PREPRO_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return min(4, os.cpu_count() or 1)


def cmd_classify(args) -> str:
    specs = list(args.specs)
    if args.max_r is not None:
        if args.n is None:
            raise CliError(EXIT_PARSE, "--max-r needs --n")
        specs += [str(s) for s in enumerate_specs(args.max_r, args.n)]
    if not specs:
        raise CliError(EXIT_PARSE, "no specs given")
    with ThreadPoolExecutor(max_workers=_workers()) as ex:
        records = list(ex.map(_classify_one, specs))
    return "".join(json.dumps(r, sort_keys=True) + "\n" for r in records)


def cmd_dot(args) -> str:
    p, _, g = read_inputs(_read_doc(args.input))
    return to_dot(p.quiver, g)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="prepro",
        description="Quadratic quiver algebras, Koszul spaces and higher preprojective gradings.",
        epilog="exit codes: 0 ok, 2 bad input, 3 failed precondition, 4 search limit exceeded")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--out", help="write output to FILE instead of stdout")
        return sp

    sp = common(sub.add_parser("mckay", help="McKay presentation of 1/r(a1,...,an)"))
    sp.add_argument("spec", help='group spec "r:a1,...,an"')
    sp.add_argument("--air", action="store_true", help="attach the AIR grading")
    sp.add_argument("--with-superpotential", action="store_true")
    sp.set_defaults(func=cmd_mckay)

    sp = common(sub.add_parser("catalog", help="emit a built-in presentation"))
    sp.add_argument("name", choices=sorted(CATALOG))
    sp.set_defaults(func=cmd_catalog)

    sp = common(sub.add_parser("prepro", help="higher preprojective presentation"))
    sp.add_argument("input", help="presentation document ('-' for stdin)")
    sp.add_argument("--n", type=int, required=True, help="global dimension")
    sp.add_argument("--d-max", type=int, default=8)
    sp.set_defaults(func=cmd_prepro)

    sp = common(sub.add_parser("tensor", help="tensor product of two presentations"))
    sp.add_argument("first")
    sp.add_argument("second")
    sp.set_defaults(func=cmd_tensor)

    sp = common(sub.add_parser("koszul-dims", help="Koszul space dims, Hilbert table, probe"))
    sp.add_argument("input")
    sp.add_argument("--l-max", type=int, default=12)
    sp.add_argument("--d-max", type=int, default=8)
    sp.set_defaults(func=cmd_koszul_dims)

    sp = common(sub.add_parser("grading-search", help="exhaustive {0,1} grading search"))
    sp.add_argument("input", help="document with presentation and superpotential")
    sp.add_argument("--l-max", type=int, default=12)
    sp.add_argument("--limit", type=int, default=24)
    sp.add_argument("--brute", action="store_true")
    sp.set_defaults(func=cmd_grading_search)

    sp = common(sub.add_parser("classify", help="classify cyclic groups (JSON lines)"))
    sp.add_argument("specs", nargs="*")
    sp.add_argument("--max-r", type=int)
    sp.add_argument("--n", type=int)
    sp.set_defaults(func=cmd_classify)

    sp = common(sub.add_parser("dot", help="DOT export, arrows coloured by degree"))
    sp.add_argument("input")
    sp.set_defaults(func=cmd_dot)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        _emit(args.func(args), args.out)
    except CliError as exc:
        print(f"prepro: {exc}", file=sys.stderr)
        return exc.code
    except DocumentError as exc:
        print(f"prepro: {exc}", file=sys.stderr)
        return EXIT_PARSE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
