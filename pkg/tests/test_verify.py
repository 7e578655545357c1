import pytest

from opensubnormalizers.models import Caps, VerifyConfig
from opensubnormalizers.verify import (
    CHECKS,
    check_casolo_oracle,
    check_main_theorem,
    check_order_three,
    check_spr_a5,
    check_sum_identity,
    run_check,
    run_checks,
)

SMALL = VerifyConfig(
    caps=Caps(max_exhaustive=200), max_bruteforce=60, max_pair_check=60
)


def test_check_names_are_keys():
    assert list(CHECKS)[0] == "spr_a5"
    assert len(CHECKS) == 18


def test_check_spr_a5():
    result = check_spr_a5(SMALL)

    assert result.name == "spr_a5"
    assert result.passed
    assert result.details == []


@pytest.mark.parametrize(
    "check",
    [
        check_casolo_oracle,
        check_sum_identity,
        check_order_three,
        check_main_theorem,
    ],
)
def test_small_checks_pass(check):
    result = check(SMALL)

    assert result.passed, result.details


def test_run_check_reports_library_errors():
    # PSL(2,16) is beyond the element store of SMALL
    result = run_check("phi_centralizers", SMALL)

    assert not result.passed
    assert "max_exhaustive" in result.details[0]


def test_run_checks_keeps_check_order():
    results = run_checks(SMALL, ["lyons", "spr_a5"])

    assert [result.name for result in results] == ["spr_a5", "lyons"]
    assert all(result.passed for result in results)


def test_run_checks_in_worker_processes():
    config = SMALL.model_copy(update={"jobs": 2})

    results = run_checks(config, ["order_three", "spr_a5"])

    assert [result.name for result in results] == ["spr_a5", "order_three"]
    assert all(result.passed for result in results)


def test_run_checks_rejects_unknown_names():
    with pytest.raises(KeyError):
        run_checks(SMALL, ["spr_a5", "no_such_check"])
