"""Shipped small categories and set-functor instances used by the test and
acceptance suites (all of them within 3 objects and 8 morphisms)."""

from __future__ import annotations

from .category import FiniteCategory, SetFunctor


def category_c2():
    """The two-element group as a one-object category."""
    return FiniteCategory(
        ["*"], {("*", "*"): ["1", "g"]}, {"*": "1"},
        [("1", "1", "1"), ("1", "g", "g"), ("g", "1", "g"), ("g", "g", "1")])


def category_idempotent_monoid():
    """The monoid {1, e} with e.e = e."""
    return FiniteCategory(
        ["*"], {("*", "*"): ["1", "e"]}, {"*": "1"},
        [("1", "1", "1"), ("1", "e", "e"), ("e", "1", "e"), ("e", "e", "e")])


def category_left_zero_monoid():
    """The monoid {1, a, b} with x.y = x on {a, b}; its right and left
    hom-set preorders differ."""
    compose = [("1", "1", "1"), ("1", "a", "a"), ("1", "b", "b"),
               ("a", "1", "a"), ("b", "1", "b"),
               ("a", "a", "a"), ("a", "b", "a"),
               ("b", "a", "b"), ("b", "b", "b")]
    return FiniteCategory(["*"], {("*", "*"): ["1", "a", "b"]}, {"*": "1"}, compose)


def category_transformation_monoid2():
    """All four self-maps of a two-point set: identity i, swap s, and the two
    constants z, o.  Noncommutative, so translation orders differ by side."""
    compose = [("i", "i", "i"), ("i", "s", "s"), ("i", "z", "z"), ("i", "o", "o"),
               ("s", "i", "s"), ("z", "i", "z"), ("o", "i", "o"),
               ("s", "s", "i"), ("s", "z", "o"), ("s", "o", "z"),
               ("z", "s", "z"), ("z", "z", "z"), ("z", "o", "z"),
               ("o", "s", "o"), ("o", "z", "o"), ("o", "o", "o")]
    return FiniteCategory(["*"], {("*", "*"): ["i", "s", "z", "o"]},
                          {"*": "i"}, compose)


def category_arrow():
    """Two objects joined by a single non-identity morphism u: A -> B."""
    return FiniteCategory(
        ["A", "B"],
        {("A", "A"): ["idA"], ("B", "B"): ["idB"], ("A", "B"): ["u"]},
        {"A": "idA", "B": "idB"},
        [("idA", "idA", "idA"), ("u", "idA", "u"),
         ("idB", "u", "u"), ("idB", "idB", "idB")])


def category_chain3():
    """A -> B -> C with the composite arrow w = v.u."""
    return FiniteCategory(
        ["A", "B", "C"],
        {("A", "A"): ["idA"], ("B", "B"): ["idB"], ("C", "C"): ["idC"],
         ("A", "B"): ["u"], ("B", "C"): ["v"], ("A", "C"): ["w"]},
        {"A": "idA", "B": "idB", "C": "idC"},
        [("idA", "idA", "idA"), ("idB", "idB", "idB"), ("idC", "idC", "idC"),
         ("u", "idA", "u"), ("idB", "u", "u"),
         ("v", "idB", "v"), ("idC", "v", "v"),
         ("w", "idA", "w"), ("idC", "w", "w"),
         ("v", "u", "w")])


def category_parallel_pair():
    """Two parallel arrows A => B and nothing else."""
    return FiniteCategory(
        ["A", "B"],
        {("A", "A"): ["idA"], ("B", "B"): ["idB"], ("A", "B"): ["f", "g"]},
        {"A": "idA", "B": "idB"},
        [("idA", "idA", "idA"), ("f", "idA", "f"), ("g", "idA", "g"),
         ("idB", "f", "f"), ("idB", "g", "g"), ("idB", "idB", "idB")])


def all_categories():
    return {
        "group-c2": category_c2(),
        "monoid-idempotent": category_idempotent_monoid(),
        "monoid-left-zero": category_left_zero_monoid(),
        "monoid-transformations2": category_transformation_monoid2(),
        "arrow": category_arrow(),
        "chain3": category_chain3(),
        "parallel-pair": category_parallel_pair(),
    }


def representable_functor(cat, anchor):
    """The contravariant hom-into-anchor functor as explicit value tables."""
    on_objects = {x: list(cat.hom(x, anchor)) for x in cat.objects}
    on_morphisms = {}
    for m in cat.morphisms:
        x, y = cat.dom[m], cat.cod[m]
        on_morphisms[m] = {h: cat.compose(h, m) for h in cat.hom(y, anchor)}
    return SetFunctor(cat, "contravariant", on_objects, on_morphisms)


def yoneda_instances():
    """(name, category, contravariant functor, anchor) instances for the
    bijection and image suites; includes the representable self cases."""
    idem = category_idempotent_monoid()
    c2 = category_c2()
    arrow = category_arrow()
    chain = category_chain3()
    out = []
    out.append((
        "idempotent-two-values", idem,
        SetFunctor(idem, "contravariant",
                   {"*": ["0", "1"]},
                   {"1": {"0": "0", "1": "1"}, "e": {"0": "0", "1": "0"}}),
        "*"))
    out.append(("idempotent-self", idem, representable_functor(idem, "*"), "*"))
    out.append(("c2-self", c2, representable_functor(c2, "*"), "*"))
    out.append((
        "c2-swap", c2,
        SetFunctor(c2, "contravariant",
                   {"*": ["0", "1"]},
                   {"1": {"0": "0", "1": "1"}, "g": {"0": "1", "1": "0"}}),
        "*"))
    out.append(("arrow-self-A", arrow, representable_functor(arrow, "A"), "A"))
    out.append((
        "arrow-empty", arrow,
        SetFunctor(arrow, "contravariant",
                   {"A": [], "B": []},
                   {"idA": {}, "idB": {}, "u": {}}),
        "A"))
    out.append(("chain3-self-C", chain, representable_functor(chain, "C"), "C"))
    return out
