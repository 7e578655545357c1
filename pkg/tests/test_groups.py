from collections import Counter

import pytest

from opensubnormalizers.catalog import alternating, cyclic, symmetric
from opensubnormalizers.exceptions import (
    CapExceededError,
    GroupDomainError,
)
from opensubnormalizers.groups import (
    block_decomposition,
    center,
    centralizer,
    class_of,
    closure,
    compose,
    conjugacy_classes,
    coset_action,
    direct_product,
    group_from_generators,
    normal_closure,
    normalizer,
    power_wreath,
    quotient_action,
    stabilizer,
)
from opensubnormalizers.models import Caps
from opensubnormalizers.permutations import Permutation


def test_group_from_generators():
    S4 = group_from_generators(
        [
            Permutation.from_cycles(4, (0, 1)),
            Permutation.from_cycles(4, (0, 1, 2, 3)),
        ],
        name="S4",
    )

    assert S4.order == 24
    assert S4.has_store
    assert len(S4.sorted_elements()) == 24
    assert Permutation.from_cycles(4, (1, 3)) in S4
    assert Permutation.identity(5) not in S4
    assert repr(S4) == "Group('S4', order=24)"


def test_group_from_generators_errors():
    with pytest.raises(GroupDomainError):
        group_from_generators([])
    with pytest.raises(GroupDomainError):
        group_from_generators(
            [Permutation.identity(2), Permutation.identity(3)]
        )


def test_caps():
    gens = symmetric(5).generators

    with pytest.raises(CapExceededError) as error:
        group_from_generators(gens, Caps(max_order=100, max_exhaustive=100))
    assert error.value.cap == "max_order"
    assert error.value.value == 120

    # beyond max_exhaustive only order and membership are available
    S5 = group_from_generators(gens, Caps(max_order=1000, max_exhaustive=50))
    assert S5.order == 120
    assert not S5.has_store
    assert Permutation.from_cycles(5, (0, 4)) in S5
    with pytest.raises(CapExceededError):
        conjugacy_classes(S5)


def test_conjugacy_classes_of_a5():
    A5 = alternating(5)
    classes = conjugacy_classes(A5)

    assert sorted(cls.size for cls in classes) == [1, 12, 12, 15, 20]
    assert [cls.element_order for cls in classes] == [1, 2, 3, 5, 5]
    assert [cls.centralizer_order for cls in classes] == [60, 4, 3, 5, 5]
    for cls in classes:
        assert cls.representative == min(cls.members)


def test_class_of():
    S4 = symmetric(4)
    x = Permutation.from_cycles(4, (1, 3))

    cls = class_of(S4, x)

    assert x in cls.members
    assert cls.size == 6
    with pytest.raises(GroupDomainError):
        class_of(S4, Permutation.identity(5))


def test_centralizer_normalizer_stabilizer_center():
    S5 = symmetric(5)
    A5 = alternating(5)
    x = Permutation.from_cycles(5, (0, 1, 2, 3, 4))

    assert centralizer(S5, x).order == 5
    assert normalizer(S5, A5).order == 120
    assert normalizer(S5, cyclic(5)).order == 20
    assert stabilizer(S5, 4).order == 24
    assert center(S5).order == 1
    assert center(cyclic(6)).order == 6
    with pytest.raises(GroupDomainError):
        stabilizer(S5, 5)


def test_normal_closure():
    S4 = symmetric(4)
    x = Permutation.from_cycles(4, (0, 1), (2, 3))

    V4 = normal_closure(S4, [x])

    assert V4.order == 4
    assert V4.is_normal_in(S4)
    assert normal_closure(S4, [Permutation.from_cycles(4, (0, 1))]).order == (
        24
    )


def test_coset_action():
    A5 = alternating(5)
    H = stabilizer(A5, 4)

    action = coset_action(A5, H)

    assert action.group.degree == 5
    assert action.group.order == 60
    assert len(action.representatives) == 5
    x = Permutation.from_cycles(5, (0, 1, 2))
    assert action.image(x).fixed_points() == 2


def test_quotient_action():
    S4 = symmetric(4)
    V4 = normal_closure(S4, [Permutation.from_cycles(4, (0, 1), (2, 3))])

    action = quotient_action(S4, V4)

    assert action.group.order == 6
    assert action.image(Permutation.from_cycles(4, (0, 2), (1, 3))) == (
        Permutation.identity(6)
    )
    with pytest.raises(GroupDomainError):
        quotient_action(S4, stabilizer(S4, 0))


def test_direct_product():
    G = direct_product(symmetric(3), cyclic(2))

    assert G.order == 12
    assert G.degree == 5
    assert G.name == "S3 x C2"
    assert center(G).order == 2


def test_power_wreath_and_blocks():
    S3 = symmetric(3)
    G = power_wreath(S3, 2, cyclic(2))

    assert G.order == 72
    assert G.degree == 6

    swap = Permutation([3, 4, 5, 0, 1, 2])
    w = Permutation.from_cycles(6, (0, 1)) * swap
    sigma, parts = block_decomposition(w, 2, 3)
    assert sigma == Permutation([1, 0])
    assert parts == [Permutation([1, 0, 2]), Permutation.identity(3)]

    with pytest.raises(GroupDomainError):
        power_wreath(S3, 3, cyclic(2))
    with pytest.raises(GroupDomainError):
        block_decomposition(Permutation.from_cycles(6, (2, 3)), 2, 3)


def test_closure_matches_order():
    gens = alternating(6).generators

    assert len(closure(list(gens))) == 360

    sizes = Counter(cls.size for cls in conjugacy_classes(alternating(4)))
    assert sizes == Counter({1: 1, 3: 1, 4: 2})


def test_quotient_action_is_a_homomorphism():
    S4 = symmetric(4)
    V4 = normal_closure(S4, [Permutation.from_cycles(4, (0, 1), (2, 3))])
    action = quotient_action(S4, V4)

    for g in S4:
        for h in S4:
            assert action.image(compose(g, h)) == compose(
                action.image(g), action.image(h)
            )
    assert all(action.image(n).is_identity() for n in V4)
