import pytest

from opensubnormalizers.exceptions import GroupDomainError
from opensubnormalizers.permutations import Permutation, permutation_algebra


def test_product_applies_left_factor_first():
    p = Permutation.from_cycles(3, (0, 1, 2))
    q = Permutation.from_cycles(3, (0, 1))

    assert p * q == Permutation([0, 2, 1])
    assert q * p == Permutation([2, 1, 0])


def test_inverse_and_powers():
    p = Permutation.from_cycles(5, (0, 1, 2, 3, 4))

    assert p * ~p == Permutation.identity(5)
    assert p.inverse() == p**-1 == p**4
    assert (p**5).is_identity()
    assert p**0 == Permutation.identity(5)


def test_cycles_order_and_fixed_points():
    p = Permutation.from_cycles(6, (0, 1, 2), (3, 4))

    assert p.cycles() == [(0, 1, 2), (3, 4)]
    assert p.cycle_type() == (3, 2, 1)
    assert p.order() == 6
    assert p.fixed_points() == 1
    assert Permutation.identity(4).order() == 1


def test_conjugate():
    x = Permutation.from_cycles(4, (0, 1))
    g = Permutation.from_cycles(4, (1, 2, 3))

    # x^g relabels the points of x by g
    assert x.conjugate(g) == Permutation.from_cycles(4, (0, 2))


def test_repr():
    assert repr(Permutation.from_cycles(3, (0, 2))) == (
        "Permutation((0 2), degree=3)"
    )
    assert repr(Permutation.identity(2)) == (
        "Permutation(identity, degree=2)"
    )


def test_invalid_permutations():
    with pytest.raises(GroupDomainError):
        Permutation([0, 0, 1])
    with pytest.raises(GroupDomainError):
        Permutation([])
    with pytest.raises(GroupDomainError):
        Permutation.from_cycles(3, (0, 3))
    with pytest.raises(GroupDomainError):
        Permutation.from_cycles(3, (0, 1), (1, 2))
    with pytest.raises(GroupDomainError):
        Permutation.identity(0)


def test_degree_mismatch():
    with pytest.raises(GroupDomainError):
        Permutation.identity(3) * Permutation.identity(4)
    # a GroupDomainError is still a ValueError
    with pytest.raises(ValueError):
        permutation_algebra(Permutation.identity(2), Permutation.identity(3))


def test_permutation_algebra():
    p = Permutation.from_cycles(4, (0, 1, 2, 3))
    q = Permutation.from_cycles(4, (0, 2))

    result = permutation_algebra(p, q)

    assert result == {
        "compose": p * q,
        "inverse": Permutation.from_cycles(4, (0, 3, 2, 1)),
        "element_order": 4,
    }
