from fractions import Fraction

import pytest

from opensubnormalizers.catalog import (
    alternating,
    cyclic,
    get_catalog_group,
    symmetric,
)
from opensubnormalizers.counting import (
    EXCEPTION_SOCLE_ORDERS,
    coset_count,
    count_p_elements,
    frobenius_quotient_check,
    frobenius_ratio,
    frobenius_subgroup_check,
    lyons_instance_check,
    max_centralizer_ratio,
    monolithic_census,
    phi_ratio,
    steinberg_instance_check,
    sum_identity_check,
    wreath_coset_bound_check,
)
from opensubnormalizers.exceptions import GroupDomainError
from opensubnormalizers.groups import center, group_from_generators, stabilizer
from opensubnormalizers.models import BoundKind
from opensubnormalizers.permutations import Permutation


def _swap(degree):
    return Permutation.from_cycles(
        2 * degree, *((i, i + degree) for i in range(degree))
    )


def _a4_factors():
    A4 = alternating(4)
    fixed = [0, 1, 2, 3]
    left = group_from_generators(
        [Permutation(list(g) + [4, 5, 6, 7]) for g in A4.generators],
        name="A4x1",
    )
    right = group_from_generators(
        [Permutation(fixed + [4 + i for i in g]) for g in A4.generators],
        name="1xA4",
    )
    return [left, right]


def test_count_p_elements():
    census = count_p_elements(alternating(5), 2)

    assert census.count == 16
    assert census.p_part == 4
    assert census.ratio == 4
    assert frobenius_ratio(alternating(5), 3) == 7
    assert frobenius_ratio(alternating(5), 5) == 5
    assert frobenius_ratio(alternating(6), 2) == 17
    with pytest.raises(GroupDomainError):
        count_p_elements(alternating(5), 6)


def test_sum_identity():
    check = sum_identity_check(alternating(5), 2)
    assert (check.lhs, check.rhs, check.holds) == (240, 240, True)

    for key in ("S4", "PSL(2,7)", "C2xA5"):
        G = get_catalog_group(key)
        for p in (2, 3):
            assert sum_identity_check(G, p).holds


def test_coset_count():
    S4 = symmetric(4)
    A4 = alternating(4)
    t = Permutation.from_cycles(4, (0, 1))

    census = coset_count(A4, t, 2)

    # the odd part of S4: six transpositions and six 4-cycles
    assert census.count == 12
    assert census.bound == 4
    assert census.bound_kind is BoundKind.subgroup_sylow
    assert census.holds
    assert census.product is None
    assert t in S4


def test_coset_count_product_formula():
    A4xA4 = get_catalog_group("A4xA4")
    g = Permutation.from_cycles(8, (0, 1), (4, 5))

    census = coset_count(A4xA4, g, 2, factors=_a4_factors())

    assert census.count == 144
    assert census.product == 144
    assert census.product_holds
    assert census.holds


def test_coset_count_skips_moved_factors():
    A4xA4 = get_catalog_group("A4xA4")

    census = coset_count(A4xA4, _swap(4), 2, factors=_a4_factors())

    assert census.product is None
    assert census.notice.startswith("skipped product check")


def test_coset_count_errors():
    S4 = symmetric(4)
    S3 = stabilizer(S4, 3)

    with pytest.raises(GroupDomainError):
        coset_count(alternating(4), Permutation.from_cycles(4, (0, 1, 2)), 2)
    with pytest.raises(GroupDomainError):
        coset_count(S3, Permutation.from_cycles(4, (0, 3)), 2)
    with pytest.raises(GroupDomainError):
        coset_count(
            S4,
            Permutation.from_cycles(4, (0, 1)),
            2,
            factors=[alternating(4)],
        )


def test_wreath_coset_bound_for_a5():
    census = wreath_coset_bound_check(alternating(5), 2, _swap(5))

    assert census.count == 960
    assert census.bound == 900
    assert census.bound_kind is BoundKind.cycle
    assert census.holds


def test_wreath_coset_bound_for_c2():
    census = wreath_coset_bound_check(cyclic(2), 2, _swap(2))

    assert census.count == 4
    assert census.bound == 2
    assert census.holds


def test_wreath_coset_bound_mixed_cycle():
    # sigma = (0 1) on three blocks leaves block 2 alone
    S3 = symmetric(3)
    v_sigma = Permutation([3, 4, 5, 0, 1, 2, 6, 7, 8])

    census = wreath_coset_bound_check(S3, 3, v_sigma)

    assert census.bound_kind is BoundKind.mixed_cycle
    assert census.holds


def test_wreath_coset_bound_errors():
    with pytest.raises(GroupDomainError):
        wreath_coset_bound_check(cyclic(2), 2, Permutation.identity(4))
    with pytest.raises(GroupDomainError):
        wreath_coset_bound_check(
            cyclic(3), 2, Permutation([3, 4, 5, 1, 2, 0])
        )


def test_phi_and_centralizer_ratio():
    A5, S5 = alternating(5), symmetric(5)

    assert phi_ratio(A5, S5) == 2
    ratio = max_centralizer_ratio(A5, S5)
    assert ratio.c == 6
    assert ratio.ratio == 10

    PSL27 = get_catalog_group("PSL(2,7)")
    assert phi_ratio(PSL27, get_catalog_group("PGL(2,7)")) == 4
    assert phi_ratio(
        get_catalog_group("PSL(2,9)"), get_catalog_group("PGammaL(2,9)")
    ) == Fraction(17, 4)
    with pytest.raises(GroupDomainError):
        phi_ratio(stabilizer(A5, 4), A5)


def test_steinberg_instances():
    for key, p, count in (
        ("PSL(2,4)", 2, 16),
        ("PSL(2,8)", 2, 64),
        ("PSL(2,7)", 7, 49),
    ):
        check = steinberg_instance_check(get_catalog_group(key), p)
        assert check.count == count
        assert check.holds


def test_lyons_instances():
    checks = lyons_instance_check(alternating(5))

    assert [(c.p, c.sylow_order) for c in checks] == [(2, 4), (3, 3), (5, 5)]
    assert all(c.holds for c in checks)
    assert not all(c.holds for c in lyons_instance_check(symmetric(3)))


def test_frobenius_checks():
    S4 = symmetric(4)
    subgroup = frobenius_subgroup_check(S4, get_catalog_group("D8"))
    assert subgroup.holds
    assert subgroup.larger >= subgroup.smaller

    C2xA5 = get_catalog_group("C2xA5")
    quotient = frobenius_quotient_check(C2xA5, center(C2xA5), 2)
    assert quotient.equality_expected
    assert quotient.smaller == quotient.larger == 4
    assert quotient.holds

    with pytest.raises(GroupDomainError):
        frobenius_subgroup_check(S4, alternating(4))


def test_monolithic_census():
    A6 = monolithic_census(alternating(6))
    assert not A6.exception
    assert A6.ratio == 17
    assert A6.holds

    A5 = monolithic_census(alternating(5))
    assert A5.exception
    assert A5.spr_total == Fraction(1, 6)
    assert A5.holds

    open_verdict = monolithic_census(alternating(5), with_spr=False)
    assert open_verdict.holds is None

    assert monolithic_census(symmetric(4)) is None
    assert set(EXCEPTION_SOCLE_ORDERS) == {60, 3600, 168, 4080}
