from fractions import Fraction
import logging
from typing import Dict, List, Optional, Set, Tuple

from .exceptions import CapExceededError, GroupDomainError
from .groups import (
    Group,
    _require_element,
    _require_subgroup,
    block_decomposition,
    class_of,
    closure,
    compose,
    conjugacy_classes,
    coset_action,
    group_from_generators,
    power_wreath,
    quotient_action,
)
from .models import (
    DecompositionBound,
    MonotonicityRow,
    MonotonicityVerdict,
    OpViolation,
    OrderThreeCheck,
    QuotientVerdict,
    SprReport,
    SprRow,
    WreathCycleVerdict,
)
from .permutations import Permutation
from .structure import (
    is_solvable,
    nilpotent_from_elements,
    solvable_from_generators,
    solvable_radical,
)
from .subnormal import (
    cyclic_normalizer_generators,
    pair_orbit,
    subnormal_chain,
    subnormalizer_bruteforce,
    subnormalizer_order_fast,
)
from .sylow import p_core, sylow
from .utils import is_prime_power, p_part, prime_divisors, require_prime

logger = logging.getLogger(__name__)


def spr_element(G: Group, x: Permutation) -> Fraction:
    """
    The subnormal probability `spr_G(x) = |S_G(x)| / |G|`.

    Elements of prime-power order take the Sylow-count path
    `lambda(x) / n_p(G)`; the rest are brute-forced.

    Args:
        G (Group): A group with an element store.
        x (Permutation): An element of G.

    Returns:
        Fraction: The exact ratio.
    """

    return Fraction(subnormalizer_order_fast(G, x), G.order)


def spr_element_bruteforce(G: Group, x: Permutation) -> Fraction:
    return Fraction(len(subnormalizer_bruteforce(G, x)), G.order)


def _pair_events(G: Group, x: Permutation) -> Tuple[int, int, int, int]:
    """
    Count the y in G with `<x, y>` nilpotent, with `<x>` subnormal in
    `<x, y>`, and with `<x, y>` solvable; also count the y breaking
    nilpotent => subnormal => solvable.

    The three events only depend on `<x, y>` up to conjugation in
    `N_G(<x>)`, and each passes from `<x, y>` to its subgroups containing x.
    """

    if x.is_identity():
        return G.order, G.order, G.order, 0

    cyclic = closure([x])
    normalizer_gens = cyclic_normalizer_generators(G, x)
    known: Dict[str, Set[Permutation]] = {
        "nil": set(),
        "sub": set(),
        "solv": set(),
    }
    decided: Set[Permutation] = set()
    nil = sub = solv = violations = 0
    for y in G.sorted_elements():
        if y in decided:
            continue
        orbit = pair_orbit(y, x, normalizer_gens)
        decided |= orbit

        K: Optional[Set[Permutation]] = None
        is_nil = y in known["nil"]
        if not is_nil:
            K = closure([x, y])
            is_nil = nilpotent_from_elements(K)
        is_sub = y in known["sub"] or subnormal_chain(x, [y], cyclic)[0]
        is_solv = y in known["solv"]
        if not is_solv:
            if K is None:
                K = closure([x, y])
            is_solv = solvable_from_generators([x, y], len(K))

        if K is not None:
            for event, holds in (
                ("nil", is_nil),
                ("sub", is_sub),
                ("solv", is_solv),
            ):
                if holds:
                    known[event] |= K

        weight = len(orbit)
        nil += weight * is_nil
        sub += weight * is_sub
        solv += weight * is_solv
        if (is_nil and not is_sub) or (is_sub and not is_solv):
            violations += weight
    return nil, sub, solv, violations


def spr_group(G: Group, pairs: Optional[bool] = None) -> SprReport:
    """
    The subnormal probability `spr(G)`, summed over conjugacy classes.

    With pair enumeration it also computes the degrees of nilpotence `dn`
    and solvability `ds` and tests, pair by pair, that `<x, y>` nilpotent
    implies `<x>` subnormal in `<x, y>` implies `<x, y>` solvable.

    Args:
        G (Group): A group with an element store.
        pairs (Optional[bool]): Enumerate pairs. None means: only when
            `|G| <= caps.max_pairs`.

    Raises:
        CapExceededError: If pairs are requested beyond `caps.max_pairs`, or
            G has no element store.

    Returns:
        SprReport: Per-class values and the totals.
    """

    classes = conjugacy_classes(G)
    rows = [
        SprRow(
            representative=cls.representative,
            class_size=cls.size,
            element_order=cls.element_order,
            spr=spr_element(G, cls.representative),
        )
        for cls in classes
    ]
    total = sum((row.class_size * row.spr for row in rows), Fraction(0))
    report = SprReport(
        group=G.name, order=G.order, rows=rows, spr_total=total / G.order
    )

    within_cap = G.order <= G.caps.max_pairs
    if pairs and not within_cap:
        raise CapExceededError(
            "max_pairs", G.caps.max_pairs, G.order, what="pair enumeration"
        )
    if pairs is False or not within_cap:
        if pairs is None:
            logger.debug("skipping pair enumeration for %s", G.name)
        return report

    square = G.order * G.order
    nil = sub = solv = violations = 0
    for cls in classes:
        n, s, v, bad = _pair_events(G, cls.representative)
        nil += cls.size * n
        sub += cls.size * s
        solv += cls.size * v
        violations += cls.size * bad

    dn, ds = Fraction(nil, square), Fraction(solv, square)
    spr = report.spr_total
    consistent = Fraction(sub, square) == spr
    if not consistent:
        logger.warning(
            "pair census of %s gives spr %s, class sum gives %s",
            G.name,
            Fraction(sub, square),
            spr,
        )
    return report.model_copy(
        update={
            "dn": dn,
            "ds": ds,
            "implication_chain_holds": (
                consistent and violations == 0 and dn <= spr <= ds
            ),
            "prose_ordering_holds": ds <= spr <= dn,
            "chain_violations": violations,
        }
    )


def fpr(G: Group, H: Group, x: Permutation) -> Fraction:
    """
    The fixed-point ratio of x on the cosets of H, as
    `|x^G meet H| / |x^G|`.

    Raises:
        GroupDomainError: If H is not a subgroup of G or x is not in G.
    """

    _require_subgroup(H, G)
    cls = class_of(G, x)
    return Fraction(sum(1 for y in cls.members if y in H), cls.size)


def fixed_point_ratio(G: Group, H: Group, x: Permutation) -> Fraction:
    """The fraction of cosets `Hg` fixed by x, counted in the coset action."""

    _require_element(G, x)
    action = coset_action(G, H)
    image = action.image(x)
    return Fraction(image.fixed_points(), image.degree)


def p_power_part(x: Permutation, p: int) -> Permutation:
    """
    The p-part of x: `x^m` where `|x| = p^a * m` with m prime to p.

    Args:
        x (Permutation): Any permutation.
        p (int): A prime.

    Returns:
        Permutation: An element of order `p^a`.
    """

    require_prime(p)
    m = x.order()
    while m % p == 0:
        m //= p
    return x**m


def _prime_power_classes(G: Group):
    for cls in conjugacy_classes(G):
        if cls.element_order == 1:
            continue
        p = is_prime_power(cls.element_order)
        if p is not None:
            yield cls, p


def check_op_criterion(G: Group) -> List[OpViolation]:
    """
    Test: if `spr_G(x) > 1/(p^k + 1)` for a p-element x then
    `x^(p^(k-1))` lies in `O_p(G)`.

    Class representatives suffice, since both sides are class functions.

    Returns:
        List[OpViolation]: Every failing `(x, p, k)`; empty when it holds.
    """

    cores = {p: p_core(G, p) for p in prime_divisors(G.order)}
    violations = []
    for cls, p in _prime_power_classes(G):
        x = cls.representative
        value = spr_element(G, x)
        r = 0
        order = cls.element_order
        while order > 1:
            order //= p
            r += 1
        for k in range(1, r + 1):
            if value > Fraction(1, p**k + 1):
                if x ** (p ** (k - 1)) not in cores[p]:
                    violations.append(OpViolation(x=x, p=p, k=k, spr=value))
    if violations:
        logger.warning(
            "%d O_p criterion violations in %s", len(violations), G.name
        )
    return violations


def check_monotonicity(G: Group, H: Group) -> MonotonicityVerdict:
    """
    Test `spr_G(x) <= spr_H(x)` for every p-element x of H, with equality
    when H is normal in G.

    Raises:
        GroupDomainError: If H is not a subgroup of G.
    """

    _require_subgroup(H, G)
    normal = H.is_normal_in(G)
    checked = 0
    counterexamples = []
    for cls, _ in _prime_power_classes(H):
        x = cls.representative
        in_group = spr_element(G, x)
        in_subgroup = spr_element(H, x)
        checked += 1
        ok = in_group == in_subgroup if normal else in_group <= in_subgroup
        if not ok:
            counterexamples.append(
                MonotonicityRow(
                    x=x, spr_in_group=in_group, spr_in_subgroup=in_subgroup
                )
            )
    return MonotonicityVerdict(
        normal=normal,
        checked=checked,
        counterexamples=counterexamples,
        holds=not counterexamples,
    )


def _is_central(N: Group, G: Group) -> bool:
    return all(
        compose(n, g) == compose(g, n)
        for n in N.generators
        for g in G.generators
    )


def check_quotient_lemmas(G: Group, N: Group) -> QuotientVerdict:
    """
    Test `spr(G/N) >= spr(G)`, and for central N also
    `spr_G(x) = spr_{G/N}(xN)` for every p-element x.

    Raises:
        GroupDomainError: If N is not normal in G.
    """

    action = quotient_action(G, N)
    Q = action.group
    in_group = spr_group(G, pairs=False).spr_total
    in_quotient = spr_group(Q, pairs=False).spr_total
    central = _is_central(N, G)
    checked = mismatches = 0
    if central:
        for cls, _ in _prime_power_classes(G):
            x = cls.representative
            checked += 1
            if spr_element(G, x) != spr_element(Q, action.image(x)):
                mismatches += 1
    return QuotientVerdict(
        spr_group=in_group,
        spr_quotient=in_quotient,
        central=central,
        checked=checked,
        mismatches=mismatches,
        holds=in_quotient >= in_group and mismatches == 0,
    )


def _block_cycle(sigma: Permutation, d: int) -> Permutation:
    return Permutation._trusted(
        sigma[i // d] * d + i % d for i in range(len(sigma) * d)
    )


def wreath_cycle_bound_check(
    L: Group, p: int, top_cycle_witness: Optional[Permutation] = None
) -> WreathCycleVerdict:
    """
    Test `spr_G(x) <= 1 / n_p(L)^(p-1)` in `G = L^p <x>`, where x has order
    p and permutes the p factors cyclically.

    Args:
        L (Group): The factor group.
        p (int): A prime; also the number of factors.
        top_cycle_witness (Optional[Permutation]): The element x. Defaults to
            the pure block cycle `(0 1 ... p-1)`.

    Raises:
        GroupDomainError: If the witness has the wrong order, is not in G, or
            does not permute the factors in a single cycle.

    Returns:
        WreathCycleVerdict: The exact value and the bound.
    """

    require_prime(p)
    top_cycle = Permutation.from_cycles(p, tuple(range(p)))
    top = group_from_generators([top_cycle], L.caps, name=f"C{p}")
    G = power_wreath(L, p, top)
    x = top_cycle_witness or _block_cycle(top_cycle, L.degree)
    _require_element(G, x)
    if x.order() != p:
        raise GroupDomainError(f"{x!r} does not have order {p}")
    sigma, _ = block_decomposition(x, p, L.degree)
    if sigma.fixed_points() or len(sigma.cycles()) != 1:
        raise GroupDomainError(f"{x!r} does not cycle the {p} factors")

    n_p = sylow(L, p).count
    value = spr_element(G, x)
    bound = Fraction(1, n_p ** (p - 1))
    return WreathCycleVerdict(
        base_order=L.order,
        p=p,
        n_p=n_p,
        x=x,
        spr=value,
        bound=bound,
        holds=value <= bound,
    )


def decomposition_bound(G: Group) -> DecompositionBound:
    """
    Split `|G| spr(G)` over 2-elements, the elements x of order `2^n * 3`,
    and the rest, bounding the rest by 1/6 each.

    Checks that the 2-elements contribute exactly `|G|_2`, that each x of
    order `2^n * 3` has `spr_G(x) <= spr_G(x^(2^n))`, and that the rest stay
    at or below 1/6 (which holds when every `O_p(G)` is trivial).
    """

    two = three = projected = total = Fraction(0)
    rest_count = 0
    rest_max = Fraction(0)
    for cls in conjugacy_classes(G):
        order = cls.element_order
        value = spr_element(G, cls.representative)
        weighted = cls.size * value
        total += weighted
        if order & (order - 1) == 0:
            two += weighted
        elif order % 3 == 0 and (order // 3) & (order // 3 - 1) == 0:
            three += weighted
            x_3 = cls.representative ** (order // 3)
            projected += cls.size * spr_element(G, x_3)
        else:
            rest_count += cls.size
            rest_max = max(rest_max, value)
    return DecompositionBound(
        two_elements=two,
        two_three_elements=three,
        two_three_elements_projected=projected,
        rest_count=rest_count,
        rest_max=rest_max,
        total=total,
        holds=(
            two == p_part(G.order, 2)
            and three <= projected
            and rest_max <= Fraction(1, 6)
            and total <= two + three + Fraction(rest_count, 6)
        ),
    )


def order_three_check(G: Group) -> OrderThreeCheck:
    """
    In a nonsolvable group with trivial solvable radical, every element of
    order 3 has `spr_G(x) <= 1/6`. Other groups pass vacuously.
    """

    if is_solvable(G) or solvable_radical(G).order > 1:
        return OrderThreeCheck(checked=0, holds=True)
    values = [
        spr_element(G, cls.representative)
        for cls in conjugacy_classes(G)
        if cls.element_order == 3
    ]
    max_spr = max(values) if values else None
    return OrderThreeCheck(
        checked=len(values),
        max_spr=max_spr,
        holds=max_spr is None or max_spr <= Fraction(1, 6),
    )


def noncentral_order_three_values(G: Group) -> List[Fraction]:
    """spr over the noncentral classes of elements of order 3."""

    return [
        spr_element(G, cls.representative)
        for cls in conjugacy_classes(G)
        if cls.element_order == 3 and cls.size > 1
    ]


def loose_bound_violations(G: Group) -> List[Permutation]:
    """
    Representatives of p-element classes breaking
    `spr_G(x) <= |P| / |x^G|`.
    """

    return [
        cls.representative
        for cls, p in _prime_power_classes(G)
        if spr_element(G, cls.representative)
        > Fraction(p_part(G.order, p), cls.size)
    ]
