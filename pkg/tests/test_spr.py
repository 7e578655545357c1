from fractions import Fraction

import pytest

from opensubnormalizers.catalog import (
    alternating,
    get_catalog_group,
    symmetric,
)
from opensubnormalizers.exceptions import CapExceededError, GroupDomainError
from opensubnormalizers.groups import (
    center,
    conjugacy_classes,
    group_from_generators,
    stabilizer,
)
from opensubnormalizers.models import Caps
from opensubnormalizers.permutations import Permutation
from opensubnormalizers.spr import (
    check_monotonicity,
    check_op_criterion,
    check_quotient_lemmas,
    decomposition_bound,
    fixed_point_ratio,
    fpr,
    loose_bound_violations,
    noncentral_order_three_values,
    order_three_check,
    p_power_part,
    spr_element,
    spr_element_bruteforce,
    spr_group,
    wreath_cycle_bound_check,
)
from opensubnormalizers.sylow import sylow


def test_spr_of_a5():
    report = spr_group(alternating(5), pairs=False)

    assert report.spr_total == Fraction(1, 6)
    rows = [
        (row.element_order, row.class_size, row.spr) for row in report.rows
    ]
    assert rows == [
        (1, 1, Fraction(1)),
        (2, 15, Fraction(1, 5)),
        (3, 20, Fraction(1, 10)),
        (5, 12, Fraction(1, 6)),
        (5, 12, Fraction(1, 6)),
    ]
    assert report.dn is None
    assert report.implication_chain_holds is None


def test_spr_of_a5_with_pairs():
    report = spr_group(alternating(5), pairs=True)

    # commuting pairs: 5 classes * 60; generating pairs: 19/30 of all
    assert report.dn == Fraction(1, 12)
    assert report.ds == Fraction(11, 30)
    assert report.chain_violations == 0
    assert report.implication_chain_holds
    assert not report.prose_ordering_holds


def test_spr_of_nilpotent_groups_is_one():
    for key in ("D8", "C2wrC2", "C6"):
        G = get_catalog_group(key)
        report = spr_group(G)
        assert report.spr_total == 1
        assert report.dn == report.ds == 1


def test_spr_group_pair_cap():
    S4 = get_catalog_group("S4", Caps(max_pairs=10))

    with pytest.raises(CapExceededError):
        spr_group(S4, pairs=True)
    # automatic mode just skips the pairs
    assert spr_group(S4).dn is None


def test_spr_element_matches_bruteforce():
    for G in (symmetric(4), get_catalog_group("C2xA5")):
        for cls in conjugacy_classes(G):
            x = cls.representative
            assert spr_element(G, x) == spr_element_bruteforce(G, x)


def test_fixed_point_ratios():
    A5 = alternating(5)
    H = stabilizer(A5, 4)
    x = Permutation.from_cycles(5, (0, 1, 2))

    assert fpr(A5, H, x) == Fraction(2, 5)
    for cls in conjugacy_classes(A5):
        y = cls.representative
        assert fpr(A5, H, y) == fixed_point_ratio(A5, H, y)
    with pytest.raises(GroupDomainError):
        fpr(A5, symmetric(5), x)


def test_p_power_part():
    x = Permutation.from_cycles(5, (0, 1, 2), (3, 4))

    # |x| = 6: the 2-part is x^3 and the 3-part is x^2
    assert p_power_part(x, 2) == Permutation.from_cycles(5, (3, 4))
    assert p_power_part(x, 3) == Permutation.from_cycles(5, (0, 2, 1))
    assert p_power_part(x, 5).is_identity()
    y = Permutation.from_cycles(7, (0, 1, 2, 3), (4, 5, 6))
    assert p_power_part(y, 2) == Permutation.from_cycles(7, (0, 3, 2, 1))


def test_op_criterion():
    for G in (alternating(5), symmetric(4), get_catalog_group("PSL(2,7)")):
        assert check_op_criterion(G) == []


def test_monotonicity():
    S5 = symmetric(5)
    A5 = alternating(5)

    normal = check_monotonicity(S5, A5)
    assert normal.normal
    assert normal.holds
    assert normal.checked == 4

    point_stabilizer = check_monotonicity(A5, stabilizer(A5, 4))
    assert not point_stabilizer.normal
    assert point_stabilizer.holds
    with pytest.raises(GroupDomainError):
        check_monotonicity(A5, S5)


def test_monotonicity_of_sylow_two_in_a5():
    A5 = alternating(5)
    P = sylow(A5, 2).one_sylow
    x = next(y for y in P if y.order() == 2)

    verdict = check_monotonicity(A5, P)

    assert not verdict.normal
    assert verdict.checked == 3
    assert verdict.holds
    assert spr_element(A5, x) == Fraction(1, 5)
    assert spr_element(P, x) == 1


def test_quotient_lemmas():
    C2xA5 = get_catalog_group("C2xA5")

    verdict = check_quotient_lemmas(C2xA5, center(C2xA5))

    assert verdict.central
    assert verdict.checked > 0
    assert verdict.mismatches == 0
    assert verdict.spr_group == verdict.spr_quotient == Fraction(1, 6)
    assert verdict.holds

    S4 = symmetric(4)
    V4 = group_from_generators(
        [
            Permutation.from_cycles(4, (0, 1), (2, 3)),
            Permutation.from_cycles(4, (0, 2), (1, 3)),
        ]
    )
    verdict = check_quotient_lemmas(S4, V4)
    assert not verdict.central
    assert verdict.spr_quotient >= verdict.spr_group
    assert verdict.holds


def test_wreath_cycle_bound():
    verdict = wreath_cycle_bound_check(symmetric(3), 2)

    assert verdict.base_order == 6
    assert verdict.n_p == 3
    assert verdict.bound == Fraction(1, 3)
    assert verdict.holds


def test_wreath_cycle_bound_rejects_bad_witness():
    with pytest.raises(GroupDomainError):
        wreath_cycle_bound_check(
            symmetric(3), 2, Permutation.from_cycles(6, (0, 1))
        )


def test_decomposition_bound_of_a5():
    bound = decomposition_bound(alternating(5))

    assert bound.two_elements == 4
    assert bound.two_three_elements == 2
    assert bound.two_three_elements_projected == 2
    assert bound.rest_count == 24
    assert bound.rest_max == Fraction(1, 6)
    assert bound.total == 10
    assert bound.holds


def test_order_three():
    check = order_three_check(alternating(5))
    assert check.checked == 1
    assert check.max_spr == Fraction(1, 10)
    assert check.holds

    # solvable groups pass without checking
    assert order_three_check(symmetric(4)).checked == 0

    values = noncentral_order_three_values(get_catalog_group("A5xC3"))
    assert set(values) == {Fraction(1, 10)}


def test_loose_bound():
    for G in (alternating(5), symmetric(5), symmetric(4)):
        assert loose_bound_violations(G) == []
