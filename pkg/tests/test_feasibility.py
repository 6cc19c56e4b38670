import random
from fractions import Fraction

import pytest

from stratikit.feasibility import LinearSystem, feasible, solve


def F(x):
    return Fraction(x)


def satisfies(system, point):
    """Direct constraint evaluation, the ground truth for any witness."""
    for coeffs, const, strict in system.inequalities:
        value = const + sum(c * x for c, x in zip(coeffs, point))
        if strict and not value > 0:
            return False
        if not strict and not value >= 0:
            return False
    for coeffs, const in system.equalities:
        if const + sum(c * x for c, x in zip(coeffs, point)) != 0:
            return False
    return True


class TestKnownSystems:
    def test_contradictory_strict_pair(self):
        sys_ = LinearSystem(1, inequalities=[((1,), 0, True), ((-1,), 0, True)])
        assert solve(sys_) is None

    def test_weak_pair_pins_zero(self):
        sys_ = LinearSystem(1, inequalities=[((1,), 0, False), ((-1,), 0, False)])
        assert solve(sys_) == (0,)

    def test_open_interval_midpoint(self):
        # 1 < x < 2
        sys_ = LinearSystem(1, inequalities=[((1,), -1, True), ((-1,), 2, True)])
        assert solve(sys_) == (F("3/2"),)

    def test_unbounded_above_steps_out(self):
        sys_ = LinearSystem(1, inequalities=[((1,), -5, True)])
        assert solve(sys_) == (6,)

    def test_unbounded_below(self):
        sys_ = LinearSystem(1, inequalities=[((-1,), -5, True)])
        assert solve(sys_) == (-6,)

    def test_no_constraints_gives_origin(self):
        assert solve(LinearSystem(3)) == (0, 0, 0)

    def test_equality_chain_back_substitutes(self):
        # x + y = 0, y + z = 0, z = 7  ->  (7, -7, 7)
        sys_ = LinearSystem(3, equalities=[
            ((1, 1, 0), 0), ((0, 1, 1), 0), ((0, 0, 1), -7)])
        assert solve(sys_) == (7, -7, 7)

    def test_inconsistent_equalities(self):
        sys_ = LinearSystem(1, equalities=[((1,), 0), ((1,), -1)])
        assert solve(sys_) is None

    def test_degenerate_equality_rows(self):
        assert feasible(LinearSystem(1, equalities=[((0,), 0)]))
        assert not feasible(LinearSystem(1, equalities=[((0,), 1)]))

    def test_strictness_propagates_through_elimination(self):
        # x > 0 and x + y <= 0 force y < 0, so y >= 0 must fail
        sys_ = LinearSystem(2, inequalities=[
            ((1, 0), 0, True), ((-1, -1), 0, False), ((0, 1), 0, False)])
        assert solve(sys_) is None

    def test_two_dimensional_triangle(self):
        # x > 0, y > 0, x + y < 1
        sys_ = LinearSystem(2, inequalities=[
            ((1, 0), 0, True), ((0, 1), 0, True), ((-1, -1), 1, True)])
        w = solve(sys_)
        assert w is not None and satisfies(sys_, w)

    def test_equalities_mixed_with_strict(self):
        # x = y, x > 3
        sys_ = LinearSystem(2, equalities=[((1, -1), 0)],
                            inequalities=[((1, 0), -3, True)])
        w = solve(sys_)
        assert w is not None and w[0] == w[1] and w[0] > 3

    def test_rational_coefficients_stay_exact(self):
        # 2x/3 = 1/7
        sys_ = LinearSystem(1, equalities=[((F("2/3"),), F("-1/7"))])
        assert solve(sys_) == (F("3/14"),)

    def test_coefficient_length_validated(self):
        from stratikit.errors import InputError
        with pytest.raises(InputError):
            LinearSystem(2, inequalities=[((1,), 0, True)])


def random_system(rng, nvars, rows):
    eqs, ineqs = [], []
    for _ in range(rows):
        coeffs = tuple(F(rng.randint(-3, 3)) for _ in range(nvars))
        const = F(rng.randint(-4, 4))
        kind = rng.randrange(3)
        if kind == 0 and any(coeffs):
            eqs.append((coeffs, const))
        else:
            ineqs.append((coeffs, const, bool(kind == 2)))
    return LinearSystem(nvars, eqs, ineqs)


def test_witnesses_always_satisfy_their_system():
    rng = random.Random(314159)
    found = 0
    for _ in range(400):
        sys_ = random_system(rng, rng.randint(1, 4), rng.randint(1, 5))
        w = solve(sys_)
        if w is not None:
            found += 1
            assert satisfies(sys_, w)
    assert found > 100  # the sampler must not degenerate into all-infeasible


def test_infeasibility_matches_onedim_sweep():
    """In one variable the candidate points (roots, midpoints, outer points)
    decide feasibility completely, giving an independent oracle."""
    rng = random.Random(271828)
    for _ in range(300):
        sys_ = random_system(rng, 1, rng.randint(1, 5))
        roots = set()
        for coeffs, const in sys_.equalities:
            if coeffs[0]:
                roots.add(-const / coeffs[0])
        for coeffs, const, _ in sys_.inequalities:
            if coeffs[0]:
                roots.add(-const / coeffs[0])
        candidates = set(roots) | {F(0)}
        ordered = sorted(roots)
        for a, b in zip(ordered, ordered[1:]):
            candidates.add((a + b) / 2)
        if ordered:
            candidates.add(ordered[0] - 1)
            candidates.add(ordered[-1] + 1)
        oracle = any(satisfies(sys_, (x,)) for x in candidates)
        assert feasible(sys_) == oracle
