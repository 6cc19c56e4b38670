import pytest

from stratikit.order import Preorder


@pytest.fixture
def ex1_poset():
    """Three-point line quotient: O below N and P."""
    return Preorder.from_pairs(["N", "O", "P"], [("O", "N"), ("O", "P")]).to_poset()


@pytest.fixture
def pseudo_poset():
    """Four-point circle model: a, b below c, d."""
    return Preorder.from_pairs(
        ["a", "b", "c", "d"],
        [("a", "c"), ("a", "d"), ("b", "c"), ("b", "d")]).to_poset()


@pytest.fixture
def chain3():
    """The chain 0 < 1 < 2."""
    return Preorder.from_pairs(["0", "1", "2"], [("0", "1"), ("1", "2")]).to_poset()
