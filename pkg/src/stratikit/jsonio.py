"""JSON ingestion and emission for every value type, with schema-path errors.

Rationals travel as integers or "p/q" strings; they are emitted as the
lowest-terms string form with the sign on the numerator.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .arrangement import Arrangement
from .category import FiniteCategory, SetFunctor
from .decomposition import Decomposition
from .errors import InputError
from .order import Preorder
from .topology import FiniteTopology, alexandroff_from_preorder


def parse_rational(value, path=""):
    if isinstance(value, bool):
        raise InputError(f"expected rational, got boolean", path=path)
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError):
            raise InputError(f"cannot parse rational {value!r}", path=path) from None
    raise InputError(f"expected int or 'p/q' string, got {type(value).__name__}",
                     path=path)


def format_rational(q):
    return str(Fraction(q))


def _expect(doc, key, kind, path):
    if not isinstance(doc, dict):
        raise InputError(f"expected object, got {type(doc).__name__}", path=path)
    if key not in doc:
        raise InputError(f"missing key {key!r}", path=f"{path}.{key}" if path else key)
    value = doc[key]
    if kind is not None and not isinstance(value, kind):
        raise InputError(
            f"key {key!r} should be {kind.__name__}, got {type(value).__name__}",
            path=f"{path}.{key}" if path else key)
    return value


def load_preorder(doc, path=""):
    carrier = _expect(doc, "carrier", list, path)
    pairs = _expect(doc, "pairs", list, path)
    for i, p in enumerate(pairs):
        if not isinstance(p, list) or len(p) != 2:
            raise InputError("each pair must be a [a, b] list",
                             path=f"{path}.pairs[{i}]" if path else f"pairs[{i}]")
    return Preorder.from_pairs([str(x) for x in carrier],
                               [(str(a), str(b)) for a, b in pairs])


def dump_preorder(p):
    return {"carrier": list(p.carrier), "pairs": [list(x) for x in p.pairs()]}


def load_topology(doc, path=""):
    carrier = [str(x) for x in _expect(doc, "carrier", list, path)]
    if "opens" in doc:
        opens = _expect(doc, "opens", list, path)
        return FiniteTopology.from_open_sets(
            carrier, [[str(x) for x in fam] for fam in opens])
    if "preorder_pairs" in doc:
        pairs = _expect(doc, "preorder_pairs", list, path)
        pre = Preorder.from_pairs(carrier, [(str(a), str(b)) for a, b in pairs])
        return alexandroff_from_preorder(pre)
    raise InputError("topology needs either 'opens' or 'preorder_pairs'",
                     path=path or "opens")


def dump_topology(t):
    return {"carrier": list(t.carrier), "opens": t.opens_as_labels()}


def load_decomposition(doc, path=""):
    space = load_topology(_expect(doc, "space", dict, path),
                          path=f"{path}.space" if path else "space")
    blocks = _expect(doc, "blocks", list, path)
    labels = doc.get("labels")
    return Decomposition(
        space,
        [[str(x) for x in b] for b in blocks],
        [str(x) for x in labels] if labels is not None else None)


def dump_decomposition(d):
    return {
        "space": dump_topology(d.space),
        "blocks": [list(d.space.labels(b)) for b in d.blocks],
        "labels": list(d.labels),
    }


def load_arrangement(doc, path=""):
    dim = _expect(doc, "dim", int, path)
    forms = _expect(doc, "forms", list, path)
    parsed = []
    for i, form in enumerate(forms):
        if not isinstance(form, list):
            raise InputError("each form must be a coefficient list",
                             path=f"forms[{i}]")
        parsed.append([
            parse_rational(c, path=f"forms[{i}][{j}]") for j, c in enumerate(form)
        ])
    return Arrangement(dim, parsed)


def dump_arrangement(a):
    return {
        "dim": a.dim,
        "forms": [[format_rational(c) for c in f] for f in a.forms],
    }


def _parse_hom_key(key, path):
    for sep in ("→", "->"):
        if sep in key:
            x, y = key.split(sep, 1)
            return x.strip(), y.strip()
    raise InputError(f"hom key {key!r} must look like 'X->Y'", path=path)


def load_category(doc, path=""):
    objects = [str(x) for x in _expect(doc, "objects", list, path)]
    homs_doc = _expect(doc, "homs", dict, path)
    homs = {}
    for key, ms in homs_doc.items():
        pair = _parse_hom_key(str(key), path=f"homs.{key}")
        if not isinstance(ms, list):
            raise InputError("hom value must be a list of labels", path=f"homs.{key}")
        homs[pair] = [str(m) for m in ms]
    identities = {
        str(k): str(v)
        for k, v in _expect(doc, "identities", dict, path).items()
    }
    compose_doc = _expect(doc, "compose", list, path)
    compose = []
    for i, row in enumerate(compose_doc):
        if not isinstance(row, list) or len(row) != 3:
            raise InputError("each composition entry must be [g, f, gf]",
                             path=f"compose[{i}]")
        compose.append(tuple(str(x) for x in row))
    return FiniteCategory(objects, homs, identities, compose)


def dump_category(cat):
    return {
        "objects": list(cat.objects),
        "homs": {
            f"{x}→{y}": list(ms)
            for (x, y), ms in sorted(cat.hom_table.items()) if ms
        },
        "identities": dict(sorted(cat.identity.items())),
        "compose": [[g, f, h] for (g, f), h in sorted(cat._compose.items())],
    }


def load_functor(cat, doc, path=""):
    variance = _expect(doc, "variance", str, path)
    on_objects = {
        str(k): [str(v) for v in vs]
        for k, vs in _expect(doc, "on_objects", dict, path).items()
    }
    on_morphisms = {
        str(k): {str(a): str(b) for a, b in fn.items()}
        for k, fn in _expect(doc, "on_morphisms", dict, path).items()
    }
    return SetFunctor(cat, variance, on_objects, on_morphisms)


def dump_functor(fun):
    return {
        "variance": fun.variance,
        "on_objects": {x: list(v) for x, v in sorted(fun.on_objects.items())},
        "on_morphisms": {
            m: dict(sorted(fn.items()))
            for m, fn in sorted(fun.on_morphisms.items())
        },
    }


def canonical_dumps(doc):
    return json.dumps(doc, indent=2, ensure_ascii=False, sort_keys=False)
