import itertools
from fractions import Fraction

import pytest

from stratikit.arrangement import (Arrangement, closure_inclusion,
                                   enumerate_faces, face_poset, sign_map)
from stratikit.errors import CapExceeded, InputError
from stratikit.order import (is_order_isomorphism, order_isomorphism, product,
                             product_label)


def line_origin():
    return Arrangement(1, [(0, 1)])


def line_two_cuts():
    return Arrangement(1, [(0, 1), (-1, 1)])


def coordinate(n):
    forms = []
    for i in range(n):
        row = [0] * (n + 1)
        row[i + 1] = 1
        forms.append(row)
    return Arrangement(n, forms)


def three_lines():
    return Arrangement(2, [(0, 1, 0), (0, 0, 1), (0, 1, -1)])


def sampled_sign_vectors(arr, coords):
    """Independent oracle: every sign vector hit on a finite rational grid."""
    return {
        sign_map(arr, point)
        for point in itertools.product(coords, repeat=arr.dim)
    }


class TestArrangementType:
    def test_constant_form_rejected(self):
        with pytest.raises(InputError, match="hyperplane"):
            Arrangement(1, [(3, 0)])

    def test_no_forms_rejected(self):
        with pytest.raises(InputError):
            Arrangement(2, [])

    def test_coefficient_length_checked(self):
        with pytest.raises(InputError) as err:
            Arrangement(2, [(0, 1)])
        assert err.value.path == "forms[0]"


class TestSignMap:
    def test_negative_point_on_the_line(self):
        assert sign_map(line_origin(), [Fraction(-3)]) == (-1,)

    def test_origin_of_the_plane(self):
        assert sign_map(coordinate(2), [0, 0]) == (0, 0)

    def test_point_between_two_cuts(self):
        assert sign_map(line_two_cuts(), [Fraction(1, 2)]) == (1, -1)

    def test_dimension_mismatch(self):
        with pytest.raises(InputError, match="dimension"):
            sign_map(line_origin(), [1, 2])

    def test_exact_rational_boundary(self):
        arr = Arrangement(1, [(Fraction(-1, 3), 1)])
        assert sign_map(arr, [Fraction(1, 3)]) == (0,)


class TestEnumerateFaces:
    def test_single_hyperplane_has_three_faces(self):
        faces = enumerate_faces(line_origin())
        assert [f.label for f in faces] == ["-", "0", "+"]

    def test_coordinate_plane_has_all_nine(self):
        faces = enumerate_faces(coordinate(2))
        assert len(faces) == 9
        assert {f.signs for f in faces} == set(
            itertools.product((-1, 0, 1), repeat=2))

    def test_two_cuts_feasible_set_matches_sampling_oracle(self):
        arr = line_two_cuts()
        faces = enumerate_faces(arr)
        labels = [f.label for f in faces]
        assert labels == ["--", "0-", "+-", "+0", "++"]
        coords = [Fraction(v) for v in (-2, -1, Fraction(-1, 2), 0,
                                        Fraction(1, 4), Fraction(1, 2), 1, 2)]
        assert {f.signs for f in faces} == sampled_sign_vectors(arr, coords)

    def test_three_lines_match_sampling_oracle(self):
        arr = three_lines()
        faces = enumerate_faces(arr)
        assert len(faces) == 13
        coords = [Fraction(v) for v in (-2, -1, 0, 1, 2)]
        assert {f.signs for f in faces} == sampled_sign_vectors(arr, coords)

    def test_redundant_forms_collapse_the_sign_tree(self):
        arr = Arrangement(1, [(0, 1), (0, 2)])
        faces = enumerate_faces(arr)
        assert [f.label for f in faces] == ["--", "00", "++"]

    def test_witnesses_reproduce_signs(self):
        for arr in (line_origin(), line_two_cuts(), coordinate(2), three_lines()):
            for face in enumerate_faces(arr):
                assert sign_map(arr, face.witness) == face.signs

    def test_lexicographic_order(self):
        faces = enumerate_faces(coordinate(2))
        labels = [f.label for f in faces]
        assert labels == sorted(labels, key=lambda s: [" -0+".index(c) for c in s])

    def test_cap(self):
        arr = Arrangement(1, [(i, 1) for i in range(13)])
        with pytest.raises(CapExceeded):
            enumerate_faces(arr)


def onedim_faces_oracle(arr):
    """Complete independent enumeration in dimension 1: the sign vector is
    constant between consecutive roots, so roots, midpoints, and outer points
    realize every face exactly once."""
    roots = sorted({-f[0] / f[1] for f in arr.forms})
    candidates = list(roots)
    candidates += [(a + b) / 2 for a, b in zip(roots, roots[1:])]
    candidates += [roots[0] - 1, roots[-1] + 1]
    return {sign_map(arr, (x,)) for x in candidates}


class TestOneDimOracle:
    @pytest.mark.parametrize("seed", range(20))
    def test_random_line_arrangements(self, seed):
        rng = __import__("random").Random(seed)
        k = rng.randint(1, 5)
        forms = [(Fraction(rng.randint(-4, 4)), Fraction(rng.choice([-2, -1, 1, 2])))
                 for _ in range(k)]
        arr = Arrangement(1, forms)
        enumerated = {f.signs for f in enumerate_faces(arr)}
        assert enumerated == onedim_faces_oracle(arr)


class TestFacePoset:
    def test_single_hyperplane_is_the_three_point_line(self, ex1_poset):
        poset = face_poset(line_origin())
        mapping = {"-": "N", "0": "O", "+": "P"}
        assert is_order_isomorphism(mapping, poset, ex1_poset)

    def test_coordinate_plane_is_the_grid(self, ex1_poset):
        poset = face_poset(coordinate(2))
        grid = product([ex1_poset, ex1_poset])
        assert order_isomorphism(poset, grid) is not None

    def test_three_lines_cover_structure(self):
        faces = enumerate_faces(three_lines())
        poset = face_poset(three_lines(), faces)
        covers = poset.covering_pairs()
        sectors = [f.label for f in faces if f.signs.count(0) == 0]
        rays = [f.label for f in faces if f.signs.count(0) == 1]
        assert len(sectors) == 6 and len(rays) == 6
        for s in sectors:
            assert sum(1 for a, b in covers if b == s and a in rays) == 2
        for r in rays:
            below = [a for a, b in covers if b == r]
            assert below == ["000"]

    def test_bottom_element_of_central_arrangements(self):
        for arr in (line_origin(), coordinate(2), coordinate(3), three_lines()):
            assert arr.is_central()
            poset = face_poset(arr)
            bottom = "0" * arr.k
            assert all(poset.leq(bottom, x) for x in poset.carrier)

    def test_non_central_has_no_all_zero_face(self):
        arr = line_two_cuts()
        assert not arr.is_central()
        assert "00" not in [f.label for f in enumerate_faces(arr)]


class TestCoordinatePowers:
    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_face_count_and_product_isomorphism(self, n, ex1_poset):
        arr = coordinate(n)
        faces = enumerate_faces(arr)
        assert len(faces) == 3 ** n
        poset = face_poset(arr, faces)
        power = product([ex1_poset] * n)
        letter = {"-": "N", "0": "O", "+": "P"}
        natural = {
            f.label: product_label(letter[c] for c in f.label) for f in faces
        }
        assert is_order_isomorphism(natural, poset, power)


class TestClosureInclusion:
    def test_origin_in_closure_of_positive_ray(self):
        faces = {f.label: f for f in enumerate_faces(line_origin())}
        assert closure_inclusion(line_origin(), faces["0"], faces["+"])

    def test_reflexive(self):
        arr = three_lines()
        for f in enumerate_faces(arr):
            assert closure_inclusion(arr, f, f)

    def test_cut_point_not_in_closure_of_far_ray(self):
        arr = line_two_cuts()
        faces = {f.label: f for f in enumerate_faces(arr)}
        assert not closure_inclusion(arr, faces["0-"], faces["++"])

    @pytest.mark.parametrize("arr", [
        line_origin(),
        line_two_cuts(),
        Arrangement(1, [(0, 1), (0, 2)]),
        coordinate(2),
        three_lines(),
        Arrangement(1, [(0, 1), (-1, 1), (1, 1), (-3, 2), (2, 1)]),
    ], ids=["x", "x,x-1", "x,2x", "x,y", "3lines", "k5-line"])
    def test_componentwise_order_agrees_with_oracle(self, arr):
        faces = enumerate_faces(arr)
        poset = face_poset(arr, faces)
        for a in faces:
            for b in faces:
                assert poset.leq(a.label, b.label) == closure_inclusion(arr, a, b)
