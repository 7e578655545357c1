from opensubnormalizers.catalog import (
    alternating,
    cyclic,
    dihedral,
    get_catalog_group,
    symmetric,
)
from opensubnormalizers.structure import (
    derived_series,
    is_minimal_nonsolvable_monolithic,
    is_nilpotent,
    is_solvable,
    minimal_normal_subgroups,
    monolithic_socle,
    solvable_radical,
    solvable_residual,
    structure_tests,
)


def test_structure_tests():
    assert structure_tests(symmetric(4)) == {
        "is_solvable": True,
        "is_nilpotent": False,
    }
    assert structure_tests(dihedral(4)) == {
        "is_solvable": True,
        "is_nilpotent": True,
    }
    assert structure_tests(alternating(5)) == {
        "is_solvable": False,
        "is_nilpotent": False,
    }


def test_solvability_beyond_two_primes():
    # order 2^3 * 3^2 * 5 * 7 needs the derived series
    assert not is_solvable(alternating(7))
    # orders with two prime divisors are solvable without the series
    assert is_solvable(get_catalog_group("S4xS4"))
    assert is_solvable(get_catalog_group("S3wrC2"))
    assert not is_nilpotent(get_catalog_group("S3wrC2"))
    assert is_nilpotent(get_catalog_group("C2wrC2"))


def test_derived_series():
    assert derived_series(symmetric(4)) == [24, 12, 4, 1]
    assert derived_series(symmetric(5)) == [120, 60]
    assert derived_series(get_catalog_group("C6")) == [6, 1]


def test_solvable_residual_and_radical():
    S5 = symmetric(5)
    C2xA5 = get_catalog_group("C2xA5")

    assert solvable_residual(S5).order == 60
    assert solvable_residual(symmetric(4)).order == 1
    assert solvable_radical(S5).order == 1
    assert solvable_radical(C2xA5).order == 2
    assert solvable_radical(symmetric(4)).order == 24


def test_minimal_normal_subgroups():
    assert [N.order for N in minimal_normal_subgroups(symmetric(4))] == [4]
    C2xA5 = get_catalog_group("C2xA5")
    assert [N.order for N in minimal_normal_subgroups(C2xA5)] == [2, 60]


def test_monolithic_socle():
    assert monolithic_socle(symmetric(5)).order == 60
    assert monolithic_socle(get_catalog_group("PGL(2,7)")).order == 168
    # solvable, or two minimal normal subgroups
    assert monolithic_socle(symmetric(4)) is None
    assert monolithic_socle(get_catalog_group("C2xA5")) is None
    assert is_minimal_nonsolvable_monolithic(alternating(5))
    assert not is_minimal_nonsolvable_monolithic(get_catalog_group("A5xC3"))


def test_cyclic_groups_are_nilpotent():
    for n in (6, 15):
        assert structure_tests(cyclic(n)) == {
            "is_solvable": True,
            "is_nilpotent": True,
        }
    assert not is_nilpotent(symmetric(3))
