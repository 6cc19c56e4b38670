"""Command-line entry point: JSON in, a deterministic run report out.

Exit codes: 0 all checks pass, 1 a check failed, 2 malformed input (the error
object names the offending schema path).
"""

from __future__ import annotations

import argparse
import hashlib
import json
import random
import sys

from . import corpus, jsonio
from .arrangement import closure_inclusion, enumerate_faces, face_poset, sign_map
from .category import (hom_preorder_details, hom_stratified, st_functor_check,
                       yoneda_image_report, yoneda_natural_transformations)
from .decomposition import (analyze, product_decomposition, quotient_topology,
                            validate_stratification)
from .dot import preorder_dot
from .errors import InputError, StratikitError, StructureError
from .homology import (betti, boundary_squares_to_zero,
                       euler_characteristic_consistent, order_complex)
from .order import Poset
from .randomcases import random_decomposition
from .topology import alexandroff_from_preorder


def _read_input(args):
    if getattr(args, "input", None):
        with open(args.input, "r", encoding="utf-8") as fh:
            text = fh.read()
    else:
        text = sys.stdin.read()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"input is not JSON: {exc}", path="$") from exc
    return doc, text


def _digest(text):
    return {
        "sha256": hashlib.sha256(text.encode("utf-8")).hexdigest(),
        "bytes": len(text.encode("utf-8")),
    }


def _report(command, inputs, results, checks):
    return {
        "command": command,
        "inputs": inputs,
        "results": results,
        "checks": checks,
    }


def _emit(report, stream=None):
    stream = stream or sys.stdout
    stream.write(jsonio.canonical_dumps(report) + "\n")
    return 0 if all(c["pass"] for c in report["checks"]) else 1


def _write_dot(args, preorder):
    if getattr(args, "dot", None):
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(preorder_dot(preorder, full_relation=args.full_relation))


def _maybe_dual(args, preorder):
    return preorder.dual() if getattr(args, "dual", False) else preorder


# -- topology ----------------------------------------------------------------


def cmd_topology(args):
    doc, text = _read_input(args)
    checks = []
    if args.action == "check":
        try:
            space = jsonio.load_topology(doc)
        except StructureError as exc:
            checks.append({"name": "family is a topology", "pass": False,
                           "detail": str(exc)})
            return _emit(_report("topology check", _digest(text), {}, checks))
        checks.append({"name": "family is a topology", "pass": True, "detail": ""})
        return _emit(_report("topology check", _digest(text),
                             jsonio.dump_topology(space), checks))
    if args.action == "from-preorder":
        pre = _maybe_dual(args, jsonio.load_preorder(doc))
        space = alexandroff_from_preorder(pre)
        back = space.specialization_preorder()
        checks.append({"name": "specialization preorder round-trips",
                       "pass": back == pre, "detail": ""})
        _write_dot(args, pre)
        return _emit(_report("topology from-preorder", _digest(text),
                             jsonio.dump_topology(space), checks))
    if args.action == "to-preorder":
        space = jsonio.load_topology(doc)
        pre = _maybe_dual(args, space.specialization_preorder())
        again = alexandroff_from_preorder(space.specialization_preorder())
        checks.append({"name": "alexandroff topology round-trips",
                       "pass": again == space, "detail": ""})
        _write_dot(args, pre)
        return _emit(_report("topology to-preorder", _digest(text),
                             jsonio.dump_preorder(pre), checks))
    if args.action == "closure":
        space = jsonio.load_topology(doc.get("space", {}))
        subset = [str(x) for x in doc.get("subset", [])]
        closed = space.closure(subset)
        mask = space.mask(closed)
        checks.append({
            "name": "closure is extensive and idempotent",
            "pass": (space.mask(subset) & ~mask) == 0
                    and space.closure_mask(mask) == mask,
            "detail": ""})
        return _emit(_report("topology closure", _digest(text),
                             {"subset": subset, "closure": list(closed)}, checks))
    raise InputError(f"unknown topology action {args.action!r}")


# -- decomposition -----------------------------------------------------------


def cmd_decomp(args):
    doc, text = _read_input(args)
    if args.action == "quotient":
        dec = jsonio.load_decomposition(doc)
        q = quotient_topology(dec)
        checks = [{"name": "projection continuous for the quotient topology",
                   "pass": all(dec.space.is_open(dec.preimage_mask(u)) for u in q.opens),
                   "detail": ""}]
        return _emit(_report("decomp quotient", _digest(text),
                             jsonio.dump_topology(q), checks))
    if args.action == "analyze":
        dec = jsonio.load_decomposition(doc)
        rep = analyze(dec)
        checks = [
            {"name": "semicontinuity class consistent with map openness/closedness",
             "pass": True, "detail": rep.moore_class},
            {"name": "closure preorder reflexive and transitive", "pass": True,
             "detail": ""},
        ]
        _write_dot(args, rep.star_preorder)
        return _emit(_report("decomp analyze", _digest(text),
                             rep.to_json_dict(), checks))
    if args.action == "validate":
        dec = jsonio.load_decomposition(doc)
        strat = validate_stratification(dec)
        checks = [{"name": "condition report complete", "pass": True, "detail": ""}]
        if strat.is_stratification:
            checks.append({
                "name": "projection continuous to the closure-order poset",
                "pass": bool(strat.pi_continuous_to_star), "detail": ""})
            checks.append({
                "name": "closure-order topology equals the quotient topology",
                "pass": bool(strat.star_topology_equals_quotient), "detail": ""})
        return _emit(_report("decomp validate", _digest(text),
                             strat.to_json_dict(), checks))
    if args.action == "product":
        factors = doc.get("factors")
        if not isinstance(factors, list) or not factors:
            raise InputError("'factors' must be a nonempty list", path="factors")
        decs = [jsonio.load_decomposition(f, path=f"factors[{i}]")
                for i, f in enumerate(factors)]
        try:
            prod, ver = product_decomposition(decs)
        except StratikitError as exc:
            report = _report("decomp product", _digest(text), {},
                             [{"name": "factors lower semicontinuous",
                               "pass": False, "detail": str(exc)}])
            return _emit(report)
        checks = [{"name": n, "pass": ok, "detail": ""} for n, ok in ver.checks]
        return _emit(_report("decomp product", _digest(text),
                             jsonio.dump_decomposition(prod), checks))
    raise InputError(f"unknown decomp action {args.action!r}")


# -- arrangement ---------------------------------------------------------------


def cmd_arrangement(args):
    doc, text = _read_input(args)
    arr = jsonio.load_arrangement(doc)
    faces = enumerate_faces(arr)
    if args.action == "faces":
        checks = [{
            "name": "witness signs recompute exactly",
            "pass": all(sign_map(arr, f.witness) == f.signs for f in faces),
            "detail": ""}]
        results = {
            "count": len(faces),
            "faces": [{
                "signs": f.label,
                "witness": [jsonio.format_rational(c) for c in f.witness],
            } for f in faces],
        }
        return _emit(_report("arrangement faces", _digest(text), results, checks))
    poset = face_poset(arr, faces)
    if args.dual:
        poset = Poset(poset.carrier, poset.rel.T)
    if args.action == "poset":
        checks = [{"name": "componentwise order is a partial order",
                   "pass": poset.is_partial_order(), "detail": ""}]
        if arr.is_central() and not args.dual:
            bottom = "0" * arr.k
            checks.append({
                "name": "central arrangement has the all-zero bottom",
                "pass": all(poset.leq(bottom, f.label) for f in faces),
                "detail": bottom})
        _write_dot(args, poset)
        return _emit(_report("arrangement poset", _digest(text),
                             jsonio.dump_preorder(poset), checks))
    if args.action == "check-ob":
        disagreements = []
        for a in faces:
            for b in faces:
                lhs = poset.leq(a.label, b.label)
                rhs = closure_inclusion(arr, a, b)
                if args.dual:
                    rhs = closure_inclusion(arr, b, a)
                if lhs != rhs:
                    disagreements.append([a.label, b.label])
        checks = [{
            "name": "componentwise order agrees with the closure-inclusion oracle",
            "pass": not disagreements,
            "detail": f"{len(faces) ** 2} pairs"}]
        results = {"pairs_checked": len(faces) ** 2, "disagreements": disagreements}
        return _emit(_report("arrangement check-ob", _digest(text), results, checks))
    raise InputError(f"unknown arrangement action {args.action!r}")


# -- homset --------------------------------------------------------------------


def cmd_homset(args):
    doc, text = _read_input(args)
    cat = jsonio.load_category(doc.get("category", {}), path="category")
    if args.action == "preorder":
        x, y = str(doc.get("source")), str(doc.get("target"))
        side = str(doc.get("side", "R"))
        pre, witnesses = hom_preorder_details(cat, x, y, side)
        pre = _maybe_dual(args, pre)
        _write_dot(args, pre)
        results = {
            "preorder": jsonio.dump_preorder(pre),
            "witnesses": {f"{g}<={f}": w for (g, f), w in sorted(witnesses.items())},
        }
        checks = [{"name": "relation reflexive and transitive", "pass": True,
                   "detail": ""}]
        return _emit(_report("homset preorder", _digest(text), results, checks))
    if args.action == "stratify":
        x, y = str(doc.get("source")), str(doc.get("target"))
        side = str(doc.get("side", "R"))
        pss, rep = hom_stratified(cat, x, y, side)
        checks = [
            {"name": "projection open", "pass": rep.projection_open, "detail": ""},
            {"name": "fibers locally closed",
             "pass": all(rep.fibers_locally_closed.values()),
             "detail": str(rep.fibers_locally_closed)},
            {"name": "quotient order equals closure inclusion",
             "pass": rep.order_matches_closure, "detail": ""},
        ]
        results = {
            "strata": jsonio.dump_preorder(pss.strata_poset),
            "strat_map": dict(sorted(pss.strat_map.items())),
            "witnesses": {f"{g}<={f}": w
                          for (g, f), w in sorted(rep.witnesses.items())},
        }
        _write_dot(args, pss.strata_poset)
        return _emit(_report("homset stratify", _digest(text), results, checks))
    if args.action == "functor-check":
        anchor = str(doc.get("anchor"))
        side = str(doc.get("side", "R-covariant"))
        side = {"R": "R-covariant", "L": "L-contravariant"}.get(side, side)
        rep = st_functor_check(cat, anchor, side)
        checks = [
            {"name": "identity law", "pass": rep.identity_law, "detail": ""},
            {"name": "composition law", "pass": rep.composition_law, "detail": ""},
        ]
        for sq in rep.squares:
            checks.append({"name": f"square at {sq.morphism}", "pass": sq.ok(),
                           "detail": ""})
        results = {"anchor": anchor, "side": side,
                   "squares": [sq.morphism for sq in rep.squares]}
        return _emit(_report("homset functor-check", _digest(text), results, checks))
    if args.action == "yoneda":
        anchor = str(doc.get("anchor"))
        fun = jsonio.load_functor(cat, doc.get("functor", {}), path="functor")
        transformations, yrep = yoneda_natural_transformations(cat, fun, anchor)
        imrep = yoneda_image_report(cat, fun, anchor)
        checks = [
            {"name": "evaluation at the identity is a bijection",
             "pass": yrep.ok(),
             "detail": f"{yrep.transformation_count} transformations vs "
                       f"{yrep.target_size} target elements"},
            {"name": "image family is natural",
             "pass": imrep.naturality_holds, "detail": ""},
            {"name": "left order reverses image inclusion",
             "pass": imrep.monotone_inclusion_holds, "detail": imrep.note},
        ]
        results = {
            "transformation_count": yrep.transformation_count,
            "target_size": yrep.target_size,
            "images": {
                x: {f: sorted(s) for f, s in sorted(per.items())}
                for x, per in sorted(imrep.images.items())
            },
            "order_direction_note": imrep.note,
        }
        return _emit(_report("homset yoneda", _digest(text), results, checks))
    raise InputError(f"unknown homset action {args.action!r}")


# -- homology --------------------------------------------------------------------


def cmd_homology(args):
    doc, text = _read_input(args)
    pre = jsonio.load_preorder(doc)
    poset = Poset(pre.carrier, pre.rel)
    complex_ = order_complex(poset)
    if args.action == "order-complex":
        checks = [{"name": "complex is downward closed", "pass": True, "detail": ""}]
        results = {
            "f_vector": complex_.f_vector(),
            "simplices": complex_.simplex_labels(),
        }
        return _emit(_report("homology order-complex", _digest(text), results, checks))
    if args.action == "betti":
        numbers = betti(complex_, args.max_dim)
        checks = [
            {"name": "boundary of boundary vanishes",
             "pass": boundary_squares_to_zero(complex_), "detail": ""},
            {"name": "euler characteristic consistent",
             "pass": euler_characteristic_consistent(complex_), "detail": ""},
        ]
        results = {"f_vector": complex_.f_vector(), "betti": numbers}
        return _emit(_report("homology betti", _digest(text), results, checks))
    raise InputError(f"unknown homology action {args.action!r}")


# -- corpus ----------------------------------------------------------------------


def cmd_corpus(args):
    if args.action == "list":
        report = _report("corpus list", {"sha256": "", "bytes": 0},
                         {"cases": list(corpus.CASE_NAMES)},
                         [{"name": "corpus complete",
                           "pass": len(corpus.CASE_NAMES) == 11, "detail": ""}])
        return _emit(report)
    if args.action == "run":
        names = list(corpus.CASE_NAMES) if args.case == "all" else [args.case]
        all_checks = []
        results = {}
        for name in names:
            try:
                case_results, checks, g = corpus.run_case(name)
            except KeyError as exc:
                raise InputError(str(exc)) from exc
            results[name] = {
                "provenance": g.get("provenance", ""),
                "note": g.get("note", ""),
                "results": case_results,
            }
            for c in checks:
                all_checks.append({"name": f"{name}: {c['name']}",
                                   "pass": c["pass"], "detail": c["detail"]})
        return _emit(_report("corpus run", {"sha256": "", "bytes": 0},
                             results, all_checks))
    if args.action == "oracle":
        rng = random.Random(args.seed)
        cases = args.cases
        tamaki_bad = []
        openlocal_bad = []
        for i in range(cases):
            dec = random_decomposition(rng, max_size=6)
            rep = analyze(dec)
            if rep.pi_open != rep.tamaki_agrees:
                tamaki_bad.append(i)
            if rep.pi_open:
                lc = all(rep.blocks_locally_closed.values())
                if rep.quotient_is_poset != lc:
                    openlocal_bad.append(i)
        checks = [
            {"name": "openness criterion agrees with direct check",
             "pass": not tamaki_bad, "detail": f"{cases} cases, seed {args.seed}"},
            {"name": "poset quotient iff locally closed blocks (open cases)",
             "pass": not openlocal_bad, "detail": f"seed {args.seed}"},
        ]
        results = {"cases": cases, "seed": args.seed,
                   "tamaki_disagreements": tamaki_bad,
                   "open_locally_disagreements": openlocal_bad}
        return _emit(_report("corpus oracle", {"sha256": "", "bytes": 0},
                             results, checks))
    raise InputError(f"unknown corpus action {args.action!r}")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="stratikit",
        description="finite order/topology toolkit: preorders, decomposition "
                    "spaces, arrangement face posets, hom-set stratifications")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, dual=True, dot=True):
        p.add_argument("--input", help="JSON input file (default: stdin)")
        if dual:
            p.add_argument("--dual", action="store_true",
                           help="reverse the order convention on output")
        if dot:
            p.add_argument("--dot", metavar="PATH", help="write a DOT diagram here")
            p.add_argument("--full-relation", action="store_true",
                           help="DOT: emit every related pair, not the covering relation")

    p = sub.add_parser("topology", help="finite topologies and the two functors")
    p.add_argument("action", choices=["check", "to-preorder", "from-preorder", "closure"])
    common(p)
    p.set_defaults(func=cmd_topology)

    p = sub.add_parser("decomp", help="decomposition spaces")
    p.add_argument("action", choices=["analyze", "quotient", "validate", "product"])
    common(p)
    p.set_defaults(func=cmd_decomp)

    p = sub.add_parser("arrangement", help="hyperplane arrangement faces")
    p.add_argument("action", choices=["faces", "poset", "check-ob"])
    common(p)
    p.set_defaults(func=cmd_arrangement)

    p = sub.add_parser("homset", help="hom-set preorders and Yoneda machinery")
    p.add_argument("action", choices=["preorder", "stratify", "functor-check", "yoneda"])
    common(p)
    p.set_defaults(func=cmd_homset)

    p = sub.add_parser("homology", help="order complexes and Betti numbers")
    p.add_argument("action", choices=["order-complex", "betti"])
    p.add_argument("--max-dim", type=int, default=None)
    common(p, dual=False, dot=False)
    p.set_defaults(func=cmd_homology)

    p = sub.add_parser("corpus", help="golden examples and seeded property suites")
    p.add_argument("action", choices=["list", "run", "oracle"])
    p.add_argument("case", nargs="?", default="all")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cases", type=int, default=200)
    p.set_defaults(func=cmd_corpus)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        error = {"error": {"message": str(exc), "path": exc.path or ""}}
        sys.stdout.write(jsonio.canonical_dumps(error) + "\n")
        return 2
    except StratikitError as exc:
        error = {"error": {"message": str(exc), "path": ""}}
        sys.stdout.write(jsonio.canonical_dumps(error) + "\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
