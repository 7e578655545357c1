"""
The verification harness behind `subnorm verify-paper`.

Every check takes a `VerifyConfig` and returns a `CheckResult`. Checks are
independent; with `jobs > 1` they run in worker processes and the results
are still reported in the fixed order of `CHECKS`.
"""

from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
import logging
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Tuple

from .catalog import get_catalog_entries, get_catalog_group
from .counting import (
    coset_count,
    count_p_elements,
    frobenius_quotient_check,
    frobenius_subgroup_check,
    lyons_instance_check,
    max_centralizer_ratio,
    monolithic_census,
    phi_ratio,
    steinberg_instance_check,
    sum_identity_check,
    wreath_coset_bound_check,
)
from .exceptions import GroupError
from .groups import (
    Group,
    center,
    conjugacy_classes,
    group_from_generators,
    stabilizer,
)
from .models import CatalogEntry, CheckResult, VerifyConfig
from .permutations import Permutation
from .spr import (
    check_monotonicity,
    check_op_criterion,
    check_quotient_lemmas,
    decomposition_bound,
    fixed_point_ratio,
    fpr,
    loose_bound_violations,
    noncentral_order_three_values,
    order_three_check,
    spr_group,
    wreath_cycle_bound_check,
)
from .structure import (
    is_nilpotent,
    is_solvable,
    minimal_normal_subgroups,
    solvable_radical,
)
from .subnormal import casolo_report
from .utils import format_ratio, is_prime_power, prime_divisors

logger = logging.getLogger(__name__)

Check = Callable[[VerifyConfig], CheckResult]


def _catalog(
    config: VerifyConfig, max_order: Optional[int] = None
) -> Iterator[Tuple[CatalogEntry, Group]]:
    """Catalog groups with an element store, up to `max_order`."""

    limit = config.caps.max_exhaustive
    if max_order is not None:
        limit = min(limit, max_order)
    for entry in get_catalog_entries():
        if entry.expected_order <= limit:
            yield entry, get_catalog_group(entry.key, config.caps)


def _group(key: str, config: VerifyConfig) -> Group:
    return get_catalog_group(key, config.caps)


def _result(name: str, failures: List[str], notes: List[str]) -> CheckResult:
    return CheckResult(
        name=name, passed=not failures, details=failures + notes
    )


def check_spr_a5(config: VerifyConfig) -> CheckResult:
    """spr(A5) = 1/6, with class values 1, 1/5, 1/10 and 1/6."""

    expected = {
        1: Fraction(1),
        2: Fraction(1, 5),
        3: Fraction(1, 10),
        5: Fraction(1, 6),
    }
    report = spr_group(_group("A5", config), pairs=False)
    failures = []
    if report.spr_total != Fraction(1, 6):
        failures.append(f"spr(A5) = {format_ratio(report.spr_total)}")
    for row in report.rows:
        if row.spr != expected[row.element_order]:
            failures.append(
                f"class of order {row.element_order}: "
                f"{format_ratio(row.spr)}"
            )
    return _result("spr_a5", failures, [])


def check_casolo_oracle(config: VerifyConfig) -> CheckResult:
    """
    Brute-force subnormalizer orders against `lambda |N_G(P)|` and
    `alpha |C_G(x)|`.
    """

    failures = []
    checked = 0
    for entry, G in _catalog(config, config.max_bruteforce):
        for cls in conjugacy_classes(G):
            p = is_prime_power(cls.element_order)
            if p is None:
                continue
            checked += 1
            report = casolo_report(G, cls.representative, p)
            if not report.identities_hold:
                failures.append(
                    f"{entry.key}: {cls.representative!r} gives "
                    f"{report.subnormalizer_order_bruteforce}"
                )
    return _result(
        "casolo_oracle", failures, [f"{checked} class representatives"]
    )


def check_sum_identity(config: VerifyConfig) -> CheckResult:
    failures = []
    for entry, G in _catalog(config, config.max_bruteforce):
        for p in prime_divisors(G.order):
            check = sum_identity_check(G, p)
            if not check.holds:
                failures.append(
                    f"{entry.key}, p={p}: {check.lhs} != {check.rhs}"
                )
    a5 = sum_identity_check(_group("A5", config), 2)
    if a5.lhs != 240:
        failures.append(f"A5, p=2: sum is {a5.lhs}, expected 240")
    return _result("sum_identity", failures, [])


def check_implication_chain(config: VerifyConfig) -> CheckResult:
    """
    Pairwise `nilpotent => subnormal => solvable`, hence `dn <= spr <= ds`.
    """

    failures, notes = [], []
    limit = min(config.max_pair_check, config.caps.max_pairs)
    for entry, G in _catalog(config, limit):
        report = spr_group(G, pairs=True)
        if not report.implication_chain_holds:
            failures.append(
                f"{entry.key}: {report.chain_violations} violating pairs, "
                f"dn={format_ratio(report.dn)} "
                f"spr={format_ratio(report.spr_total)} "
                f"ds={format_ratio(report.ds)}"
            )
        if report.prose_ordering_holds and report.dn != report.ds:
            notes.append(f"{entry.key}: ds <= spr <= dn also holds")
    return _result("implication_chain", failures, notes)


def check_op_criterion_catalog(config: VerifyConfig) -> CheckResult:
    failures = []
    for entry, G in _catalog(config):
        for violation in check_op_criterion(G):
            failures.append(
                f"{entry.key}: x={violation.x!r} p={violation.p} "
                f"k={violation.k}"
            )
    return _result("op_criterion", failures, [])


def _subgroup_pairs(config: VerifyConfig) -> List[Tuple[Group, Group]]:
    S4, S5 = _group("S4", config), _group("S5", config)
    A6 = _group("A6", config)
    return [
        (S4, _group("A4", config)),
        (S5, _group("A5", config)),
        (S5, stabilizer(S5, 0)),
        (A6, stabilizer(A6, 0)),
        (_group("PGL(2,7)", config), _group("PSL(2,7)", config)),
    ]


def check_monotonicity_and_quotients(config: VerifyConfig) -> CheckResult:
    failures, notes = [], []
    for G, H in _subgroup_pairs(config):
        verdict = check_monotonicity(G, H)
        if not verdict.holds:
            failures.append(
                f"{H.name} <= {G.name}: "
                f"{len(verdict.counterexamples)} counterexamples"
            )

    S4, C2xA5 = _group("S4", config), _group("C2xA5", config)
    for G, N in (
        (S4, minimal_normal_subgroups(S4)[0]),
        (C2xA5, center(C2xA5)),
    ):
        verdict = check_quotient_lemmas(G, N)
        notes.append(
            f"spr({G.name}) = {format_ratio(verdict.spr_group)}, "
            f"spr of the quotient by order {N.order} = "
            f"{format_ratio(verdict.spr_quotient)}"
        )
        if not verdict.holds:
            failures.append(f"{G.name} / order {N.order}: quotient lemma")
    return _result("monotonicity_quotients", failures, notes)


def _swap(degree: int) -> Permutation:
    return Permutation.from_cycles(
        2 * degree, *((i, i + degree) for i in range(degree))
    )


def check_wreath_bounds(config: VerifyConfig) -> CheckResult:
    """The cycle and coset bounds in `(A5 x A5) <swap>`."""

    A5 = _group("A5", config)
    failures = []
    cycle = wreath_cycle_bound_check(A5, 2)
    if not cycle.holds or cycle.bound != Fraction(1, 5):
        failures.append(
            f"spr of the swap is {format_ratio(cycle.spr)}, bound "
            f"{format_ratio(cycle.bound)}"
        )
    coset = wreath_coset_bound_check(A5, 2, _swap(A5.degree))
    if not coset.holds:
        failures.append(f"coset count {coset.count} < bound {coset.bound}")
    notes = [
        f"spr(swap) = {format_ratio(cycle.spr)}",
        f"coset count {coset.count}, bound {coset.bound}",
    ]
    return _result("wreath_bounds", failures, notes)


def check_steinberg(config: VerifyConfig) -> CheckResult:
    failures, notes = [], []
    expected = {("PSL(2,4)", 2): 16, ("PSL(2,8)", 2): 64, ("PSL(2,7)", 7): 49}
    for (key, p), count in expected.items():
        check = steinberg_instance_check(_group(key, config), p)
        if check.count != count:
            failures.append(f"{key}, p={p}: {check.count} != {count}")
    for entry, G in _catalog(config):
        p = entry.lie_type_characteristic
        if p is None:
            continue
        check = steinberg_instance_check(G, p)
        notes.append(f"{entry.key}: |U_{p}| = {check.count}")
        if not check.holds:
            failures.append(
                f"{entry.key}, p={p}: {check.count} != {check.square}"
            )
    return _result("steinberg", failures, notes)


def check_phi_and_centralizers(config: VerifyConfig) -> CheckResult:
    failures, notes = [], []
    A5, S5 = _group("A5", config), _group("S5", config)
    if phi_ratio(A5, S5) != 2:
        failures.append(f"phi(A5) = {format_ratio(phi_ratio(A5, S5))}")
    ratio = max_centralizer_ratio(A5, S5)
    if ratio.ratio != 10:
        failures.append(f"|A5|/c = {format_ratio(ratio.ratio)}")

    for key, aut in (
        ("PSL(2,5)", "PGL(2,5)"),
        ("PSL(2,7)", "PGL(2,7)"),
        ("PSL(2,16)", "PGammaL(2,16)"),
    ):
        L, autL = _group(key, config), _group(aut, config)
        value = phi_ratio(L, autL)
        census = count_p_elements(L, 2)
        notes.append(
            f"phi({key}) = {format_ratio(value)}, "
            f"|U_2|/|L|_2 = {format_ratio(census.ratio)}"
        )
        if value > 5:
            failures.append(f"phi({key}) = {format_ratio(value)} > 5")
    if phi_ratio(_group("PSL(2,7)", config), _group("PGL(2,7)", config)) != 4:
        failures.append("phi(PSL(2,7)) != 4")

    A6 = _group("PSL(2,9)", config)
    value = phi_ratio(A6, _group("PGammaL(2,9)", config))
    notes.append(f"phi(A6) = {format_ratio(value)}, not above 5")
    return _result("phi_centralizers", failures, notes)


def check_lyons(config: VerifyConfig) -> CheckResult:
    failures = []
    for entry, G in _catalog(config):
        if not entry.simple:
            continue
        for check in lyons_instance_check(G):
            if not check.holds:
                failures.append(
                    f"{entry.key}: |P_{check.p}|^2 = "
                    f"{check.sylow_order ** 2} >= {check.group_order}"
                )
    return _result("lyons", failures, [])


def check_main_theorem(config: VerifyConfig) -> CheckResult:
    """Nonsolvable groups have `spr <= 1/6`; nilpotent groups `spr = 1`."""

    failures = []
    for entry, G in _catalog(config):
        nilpotent = is_nilpotent(G)
        if is_solvable(G) and not nilpotent:
            continue
        total = spr_group(G, pairs=False).spr_total
        if nilpotent and total != 1:
            failures.append(f"{entry.key}: nilpotent, spr = {total}")
        elif not nilpotent and total > Fraction(1, 6):
            failures.append(f"{entry.key}: nonsolvable, spr = {total}")
    return _result("main_theorem", failures, [])


def check_fixed_point_ratios(config: VerifyConfig) -> CheckResult:
    """Class-count fpr against fixed points in the coset action."""

    failures = []
    for G, H in _subgroup_pairs(config):
        for cls in conjugacy_classes(G):
            x = cls.representative
            if fpr(G, H, x) != fixed_point_ratio(G, H, x):
                failures.append(f"{H.name} in {G.name}: {x!r}")
    return _result("fixed_point_ratios", failures, [])


def _trivial_radical(G: Group) -> bool:
    return not is_solvable(G) and solvable_radical(G).order == 1


def check_decomposition_bound(config: VerifyConfig) -> CheckResult:
    failures = []
    for entry, G in _catalog(config, config.max_bruteforce):
        if not _trivial_radical(G):
            continue
        bound = decomposition_bound(G)
        if not bound.holds:
            failures.append(
                f"{entry.key}: rest max {format_ratio(bound.rest_max)}, "
                f"2-elements {format_ratio(bound.two_elements)}"
            )
    return _result("decomposition_bound", failures, [])


def check_order_three(config: VerifyConfig) -> CheckResult:
    failures = []
    for entry, G in _catalog(config, config.max_bruteforce):
        check = order_three_check(G)
        if not check.holds:
            failures.append(
                f"{entry.key}: order-3 spr {format_ratio(check.max_spr)}"
            )
    values = set(noncentral_order_three_values(_group("A5xC3", config)))
    if values != {Fraction(1, 10)}:
        failures.append(
            "A5xC3: " + ", ".join(sorted(map(format_ratio, values)))
        )
    return _result("order_three", failures, [])


def check_loose_bound(config: VerifyConfig) -> CheckResult:
    failures = [
        f"{entry.key}: {x!r}"
        for entry, G in _catalog(config)
        for x in loose_bound_violations(G)
    ]
    return _result("loose_bound", failures, [])


def check_frobenius_lemmas(config: VerifyConfig) -> CheckResult:
    failures = []
    S4, S5 = _group("S4", config), _group("S5", config)
    C2xA5 = _group("C2xA5", config)
    comparisons = [
        ("D8 <= S4", frobenius_subgroup_check(S4, _group("D8", config))),
        ("S4 <= S5", frobenius_subgroup_check(S5, stabilizer(S5, 0))),
        (
            "S4 / V4",
            frobenius_quotient_check(S4, minimal_normal_subgroups(S4)[0], 2),
        ),
        ("C2xA5 / Z", frobenius_quotient_check(C2xA5, center(C2xA5), 2)),
    ]
    for label, comparison in comparisons:
        if not comparison.holds:
            failures.append(
                f"{label}: {format_ratio(comparison.smaller)} vs "
                f"{format_ratio(comparison.larger)}"
            )
    return _result("frobenius_lemmas", failures, [])


def check_monolithic_census(config: VerifyConfig) -> CheckResult:
    failures, notes = [], []
    for entry, G in _catalog(config):
        census = monolithic_census(
            G, with_spr=G.order <= config.max_bruteforce
        )
        if census is None:
            continue
        notes.append(
            f"{entry.key}: socle {census.socle_order}, ratio "
            f"{format_ratio(census.ratio)}"
        )
        if census.holds is False:
            failures.append(f"{entry.key}: census bound fails")
    return _result("monolithic_census", failures, notes)


def _embedded_factor(
    A: Group, position: int, degree: int, name: str
) -> Group:
    offset = position * A.degree
    gens = []
    for g in A.generators:
        images = list(range(degree))
        for j, image in enumerate(g):
            images[offset + j] = offset + image
        gens.append(Permutation(images))
    return group_from_generators(gens, A.caps, name)


def check_product_formula(config: VerifyConfig) -> CheckResult:
    """
    The p-elements of `(A4 x A4)(t, t)` split into the two factor cosets.
    """

    A4, N = _group("A4", config), _group("A4xA4", config)
    factors = [
        _embedded_factor(A4, i, N.degree, name)
        for i, name in enumerate(("A4x1", "1xA4"))
    ]
    g = Permutation.from_cycles(N.degree, (0, 1), (4, 5))
    census = coset_count(N, g, 2, factors=factors)
    failures = []
    if not census.holds or census.count != 144:
        failures.append(
            f"count {census.count}, product {census.product}, "
            f"bound {census.bound}"
        )
    return _result("product_formula", failures, [])


CHECKS: Dict[str, Check] = {
    "spr_a5": check_spr_a5,
    "casolo_oracle": check_casolo_oracle,
    "sum_identity": check_sum_identity,
    "implication_chain": check_implication_chain,
    "op_criterion": check_op_criterion_catalog,
    "monotonicity_quotients": check_monotonicity_and_quotients,
    "wreath_bounds": check_wreath_bounds,
    "steinberg": check_steinberg,
    "phi_centralizers": check_phi_and_centralizers,
    "lyons": check_lyons,
    "main_theorem": check_main_theorem,
    "fixed_point_ratios": check_fixed_point_ratios,
    "decomposition_bound": check_decomposition_bound,
    "order_three": check_order_three,
    "loose_bound": check_loose_bound,
    "frobenius_lemmas": check_frobenius_lemmas,
    "monolithic_census": check_monolithic_census,
    "product_formula": check_product_formula,
}


def run_check(name: str, config: VerifyConfig) -> CheckResult:
    """
    Run one named check; library errors turn into a failed result.

    Raises:
        KeyError: If no check has this name.
    """

    check = CHECKS[name]
    logger.info("running check %s", name)
    try:
        return check(config)
    except GroupError as error:
        logger.error("check %s raised: %s", name, error)
        return CheckResult(name=name, passed=False, details=[str(error)])


def run_checks(
    config: Optional[VerifyConfig] = None,
    names: Optional[Sequence[str]] = None,
) -> List[CheckResult]:
    """
    Run checks in the order of `CHECKS`.

    Args:
        config (Optional[VerifyConfig]): Harness settings; defaults when
            omitted.
        names (Optional[Sequence[str]]): A subset of check names.

    Raises:
        KeyError: For an unknown check name.

    Returns:
        List[CheckResult]: One result per check, in `CHECKS` order.
    """

    config = config or VerifyConfig()
    selected = list(CHECKS) if names is None else list(names)
    unknown = [name for name in selected if name not in CHECKS]
    if unknown:
        raise KeyError(f"Unknown checks: {', '.join(unknown)}")
    selected.sort(key=list(CHECKS).index)

    if config.jobs == 1 or len(selected) == 1:
        return [run_check(name, config) for name in selected]
    with ProcessPoolExecutor(max_workers=config.jobs) as executor:
        return list(
            executor.map(run_check, selected, [config] * len(selected))
        )
