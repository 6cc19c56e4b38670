from fractions import Fraction

import pytest

from stratikit import jsonio
from stratikit.catalog import category_chain3, representable_functor
from stratikit.errors import InputError


class TestRationals:
    def test_integers_pass_through(self):
        assert jsonio.parse_rational(3) == Fraction(3)

    def test_strings_parse(self):
        assert jsonio.parse_rational("-2/6") == Fraction(-1, 3)

    def test_lowest_terms_output_with_sign_on_numerator(self):
        assert jsonio.format_rational(Fraction(2, -6)) == "-1/3"
        assert jsonio.format_rational(Fraction(4, 2)) == "2"

    def test_bad_string_names_path(self):
        with pytest.raises(InputError) as err:
            jsonio.parse_rational("x/y", path="forms[0][1]")
        assert err.value.path == "forms[0][1]"

    def test_boolean_rejected(self):
        with pytest.raises(InputError):
            jsonio.parse_rational(True)


class TestRoundTrips:
    def test_preorder(self):
        doc = {"carrier": ["N", "O", "P"], "pairs": [["O", "N"], ["O", "P"]]}
        p = jsonio.load_preorder(doc)
        again = jsonio.load_preorder(jsonio.dump_preorder(p))
        assert again == p

    def test_pairs_are_generators_closure_applied(self):
        doc = {"carrier": ["a", "b", "c"], "pairs": [["a", "b"], ["b", "c"]]}
        p = jsonio.load_preorder(doc)
        assert p.leq("a", "c")

    def test_topology_from_opens(self):
        doc = {"carrier": ["p", "q"], "opens": [[], ["p", "q"]]}
        t = jsonio.load_topology(doc)
        assert jsonio.load_topology(jsonio.dump_topology(t)) == t

    def test_topology_from_preorder_pairs(self):
        doc = {"carrier": ["N", "O", "P"],
               "preorder_pairs": [["O", "N"], ["O", "P"]]}
        t = jsonio.load_topology(doc)
        assert len(t.opens) == 5

    def test_topology_needs_one_of_the_two_forms(self):
        with pytest.raises(InputError):
            jsonio.load_topology({"carrier": ["p"]})

    def test_decomposition(self):
        doc = {
            "space": {"carrier": ["0", "1", "2"],
                      "preorder_pairs": [["0", "1"], ["1", "2"]]},
            "blocks": [["0", "2"], ["1"]],
        }
        d = jsonio.load_decomposition(doc)
        again = jsonio.load_decomposition(jsonio.dump_decomposition(d))
        assert again.labels == d.labels
        assert again.blocks == d.blocks

    def test_arrangement(self):
        doc = {"dim": 2, "forms": [["-1/2", 1, 0], [0, 0, "2/3"]]}
        a = jsonio.load_arrangement(doc)
        again = jsonio.load_arrangement(jsonio.dump_arrangement(a))
        assert again.forms == a.forms

    def test_category_with_both_arrow_spellings(self):
        doc = {
            "objects": ["A", "B"],
            "homs": {"A->B": ["u"], "A→A": ["idA"], "B->B": ["idB"]},
            "identities": {"A": "idA", "B": "idB"},
            "compose": [["idA", "idA", "idA"], ["u", "idA", "u"],
                        ["idB", "u", "u"], ["idB", "idB", "idB"]],
        }
        cat = jsonio.load_category(doc)
        again = jsonio.load_category(jsonio.dump_category(cat))
        assert again.morphisms == cat.morphisms
        assert again.hom("A", "B") == ("u",)

    def test_bad_hom_key(self):
        with pytest.raises(InputError):
            jsonio.load_category({
                "objects": ["A"], "homs": {"A": ["i"]},
                "identities": {"A": "i"}, "compose": []})

    def test_functor(self):
        cat = category_chain3()
        fun = representable_functor(cat, "C")
        again = jsonio.load_functor(cat, jsonio.dump_functor(fun))
        assert again.on_objects == fun.on_objects
        assert again.on_morphisms == fun.on_morphisms
