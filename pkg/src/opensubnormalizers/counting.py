from fractions import Fraction
from itertools import product
import logging
from math import prod
from typing import Dict, List, Optional, Sequence

from .exceptions import GroupDomainError
from .groups import (
    Group,
    _require_subgroup,
    block_decomposition,
    compose,
    conjugacy_classes,
    conjugate,
    quotient_action,
)
from .models import (
    BoundKind,
    CentralizerRatio,
    CosetCensus,
    FrobeniusComparison,
    LyonsCheck,
    MonolithicCensus,
    PElementCensus,
    SteinbergCheck,
    SumIdentityCheck,
)
from .permutations import Permutation
from .spr import spr_group
from .structure import monolithic_socle
from .subnormal import subnormalizer_order_fast
from .utils import p_part, prime_divisors, require_prime

logger = logging.getLogger(__name__)

# Socle orders of the exception list: A5, A5 x A5, PSL(2,7), PSL(2,16).
# Each of these orders belongs to exactly one nonabelian minimal normal
# subgroup among groups within the caps.
EXCEPTION_SOCLE_ORDERS: Dict[int, str] = {
    60: "A5",
    3600: "A5 x A5",
    168: "PSL(2,7)",
    4080: "PSL(2,16)",
}

PHI_THRESHOLD = 5


def _is_p_element(x: Permutation, p: int) -> bool:
    order = x.order()
    while order % p == 0:
        order //= p
    return order == 1


def count_p_elements(G: Group, p: int) -> PElementCensus:
    """
    Count the p-elements of G, the identity included.

    Args:
        G (Group): A group with an element store.
        p (int): A prime.

    Returns:
        PElementCensus: The count, `|G|_p` and the Frobenius ratio
            `count / |G|_p`.
    """

    require_prime(p)
    store = G.require_store("count_p_elements")
    count = sum(1 for g in store if G.is_p_element(g, p))
    part = p_part(G.order, p)
    return PElementCensus(
        p=p, count=count, p_part=part, ratio=Fraction(count, part)
    )


def frobenius_ratio(G: Group, p: int) -> Fraction:
    return count_p_elements(G, p).ratio


def sum_identity_check(G: Group, p: int) -> SumIdentityCheck:
    """
    Test that `|S_G(x)|` summed over the p-elements x of G is `|G|_p |G|`.
    """

    require_prime(p)
    lhs = sum(
        cls.size * subnormalizer_order_fast(G, cls.representative)
        for cls in conjugacy_classes(G)
        if G.is_p_element(cls.representative, p)
    )
    rhs = p_part(G.order, p) * G.order
    return SumIdentityCheck(p=p, lhs=lhs, rhs=rhs, holds=lhs == rhs)


def _normalizes(g: Permutation, H: Group) -> bool:
    g_inv = ~g
    return all(conjugate(h, g, g_inv) in H for h in H.generators)


def _count_in_coset(N: Group, g: Permutation, p: int) -> int:
    store = N.require_store("coset_count")
    return sum(1 for n in store if _is_p_element(compose(n, g), p))


def coset_count(
    N: Group,
    g: Permutation,
    p: int,
    factors: Optional[Sequence[Group]] = None,
) -> CosetCensus:
    """
    Count the p-elements in the coset `Ng`.

    The count is always checked against `|N|_p`, the lower bound given by a
    Sylow p-subgroup of N. When N is given as a direct product of `factors`
    that g normalizes, the count is also compared with the product of the
    per-factor coset counts.

    Args:
        N (Group): A subgroup normalized by g, with an element store.
        g (Permutation): A p-element.
        p (int): A prime.
        factors (Optional[Sequence[Group]]): Subgroups of N whose direct
            product is N.

    Raises:
        GroupDomainError: If g is not a p-element, g does not normalize N,
            or the factors do not multiply to `|N|`.

    Returns:
        CosetCensus: The exact count, the Sylow bound and the product check.
    """

    require_prime(p)
    if not _is_p_element(g, p):
        raise GroupDomainError(f"{g!r} is not a {p}-element")
    if not _normalizes(g, N):
        raise GroupDomainError(f"{g!r} does not normalize {N}")

    count = _count_in_coset(N, g, p)
    bound = p_part(N.order, p)
    census = CosetCensus(
        group=N.name,
        normal_order=N.order,
        representative=g,
        p=p,
        count=count,
        bound=bound,
        bound_kind=BoundKind.subgroup_sylow,
        holds=count >= bound,
    )
    if not factors:
        return census

    for factor in factors:
        _require_subgroup(factor, N)
    if prod(f.order for f in factors) != N.order:
        raise GroupDomainError("The factors do not multiply to |N|")
    moved = [f.name for f in factors if not _normalizes(g, f)]
    if moved:
        notice = f"skipped product check: g moves {', '.join(moved)}"
        logger.warning("%s", notice)
        return census.model_copy(update={"notice": notice})

    product_count = prod(_count_in_coset(f, g, p) for f in factors)
    return census.model_copy(
        update={
            "product": product_count,
            "product_holds": product_count == count,
            "holds": census.holds and product_count == count,
        }
    )


def _base_element(parts: Sequence[Permutation], d: int) -> Permutation:
    images: List[int] = []
    for i, part in enumerate(parts):
        images.extend(i * d + j for j in part)
    return Permutation._trusted(images)


def wreath_coset_bound_check(
    L: Group, k: int, v_sigma: Permutation
) -> CosetCensus:
    """
    Count the 2-elements in the coset `N v sigma` of the base `N = L^k` and
    compare with the lower bound `|L|^s / |C_L(au)| * |P_0|^(k-s)`.

    Here s is the longest orbit of sigma, u the product of the parts of v
    along that orbit, `P_0` a Sylow 2-subgroup of L, and a ranges over the
    elements of L with `au` a 2-element (the smallest centralizer wins).

    Args:
        L (Group): The factor group, with an element store.
        k (int): The number of factors.
        v_sigma (Permutation): A 2-element `v sigma` of `L wr S_k`, on
            `k * degree(L)` points.

    Raises:
        GroupDomainError: If sigma is the identity, v_sigma is not a
            2-element, or a part of v lies outside L.

    Returns:
        CosetCensus: The exact count and the bound.
    """

    d = L.degree
    sigma, parts = block_decomposition(v_sigma, k, d)
    if sigma.is_identity():
        raise GroupDomainError("The top part of v_sigma must not be trivial")
    if not _is_p_element(v_sigma, 2):
        raise GroupDomainError(f"{v_sigma!r} is not a 2-element")
    for part in parts:
        if part not in L:
            raise GroupDomainError(f"{part!r} is not an element of {L}")

    orbit = max(sigma.cycles(), key=len)
    s = len(orbit)
    u = parts[orbit[0]]
    point = sigma[orbit[0]]
    while point != orbit[0]:
        u = compose(u, parts[point])
        point = sigma[point]

    store = L.sorted_elements()
    smallest = min(
        sum(1 for c in store if compose(c, au) == compose(au, c))
        for au in (compose(a, u) for a in store)
        if _is_p_element(au, 2)
    )
    sylow_order = p_part(L.order, 2)
    bound = L.order**s // smallest * sylow_order ** (k - s)

    count = 0
    for combo in product(store, repeat=k):
        if _is_p_element(compose(_base_element(combo, d), v_sigma), 2):
            count += 1
    logger.debug(
        "wreath coset: k=%d s=%d count=%d bound=%d", k, s, count, bound
    )
    return CosetCensus(
        group=f"{L.name}^{k}",
        normal_order=L.order**k,
        representative=v_sigma,
        p=2,
        count=count,
        bound=bound,
        bound_kind=BoundKind.cycle if s == k else BoundKind.mixed_cycle,
        notice="product check not applicable: sigma moves the factors",
        holds=count >= bound,
    )


def phi_ratio(L: Group, autL: Group) -> Fraction:
    """
    `phi(L) = |U_2(L)| / |Aut(L)|_2`, with `autL` standing for `Aut(L)`.

    Values at or below 5 are logged as warnings, not raised.

    Raises:
        GroupDomainError: If L is not normal in autL.
    """

    if not L.is_normal_in(autL):
        raise GroupDomainError(f"{L} is not a normal subgroup of {autL}")
    value = Fraction(count_p_elements(L, 2).count, p_part(autL.order, 2))
    if value <= PHI_THRESHOLD:
        logger.warning(
            "phi(%s) = %s is at most %d", L.name, value, PHI_THRESHOLD
        )
    return value


def max_centralizer_ratio(L: Group, autL: Group) -> CentralizerRatio:
    """
    `c`, the largest `|C_L(x)|` over nontrivial x in autL, and `|L| / c`.

    `|C_L(x)|` is constant on autL-classes, so class representatives
    suffice.

    Raises:
        GroupDomainError: If L is not normal in autL.
    """

    if not L.is_normal_in(autL):
        raise GroupDomainError(f"{L} is not a normal subgroup of {autL}")
    store = L.sorted_elements()
    best = 0
    witness = autL.identity
    for cls in conjugacy_classes(autL)[1:]:
        x = cls.representative
        size = sum(1 for c in store if compose(c, x) == compose(x, c))
        if size > best:
            best, witness = size, x
    if best == 0:
        best = L.order
    return CentralizerRatio(
        c=best, ratio=Fraction(L.order, best), witness=witness
    )


def steinberg_instance_check(G: Group, p: int) -> SteinbergCheck:
    """Test `|U_p(G)| = (|G|_p)^2` for G of Lie type in characteristic p."""

    census = count_p_elements(G, p)
    square = census.p_part**2
    return SteinbergCheck(
        p=p, count=census.count, square=square, holds=census.count == square
    )


def lyons_instance_check(G: Group) -> List[LyonsCheck]:
    """Test `|P|^2 < |G|` for a Sylow subgroup P, for every prime."""

    checks = []
    for p in prime_divisors(G.order):
        part = p_part(G.order, p)
        checks.append(
            LyonsCheck(
                p=p,
                sylow_order=part,
                group_order=G.order,
                holds=part * part < G.order,
            )
        )
    return checks


def frobenius_subgroup_check(
    G: Group, H: Group, p: int = 2
) -> FrobeniusComparison:
    """
    Test `|U_p(G)|/|G|_p >= |U_p(H)|/|H|_p` for H containing a Sylow
    p-subgroup of G.

    Raises:
        GroupDomainError: If H is not a subgroup of G or misses part of
            `|G|_p`.
    """

    _require_subgroup(H, G)
    if p_part(H.order, p) != p_part(G.order, p):
        raise GroupDomainError(f"{H} contains no Sylow {p}-subgroup of {G}")
    larger = frobenius_ratio(G, p)
    smaller = frobenius_ratio(H, p)
    return FrobeniusComparison(
        smaller=smaller,
        larger=larger,
        equality_expected=False,
        holds=larger >= smaller,
    )


def frobenius_quotient_check(
    G: Group, N: Group, p: int
) -> FrobeniusComparison:
    """
    Test `|U_p(G/N)|/|G/N|_p <= |U_p(G)|/|G|_p`, with equality for central
    N.

    Raises:
        GroupDomainError: If N is not normal in G.
    """

    quotient = quotient_action(G, N).group
    smaller = frobenius_ratio(quotient, p)
    larger = frobenius_ratio(G, p)
    central = all(
        compose(n, g) == compose(g, n)
        for n in N.generators
        for g in G.generators
    )
    return FrobeniusComparison(
        smaller=smaller,
        larger=larger,
        equality_expected=central,
        holds=smaller == larger if central else smaller <= larger,
    )


def monolithic_census(
    G: Group, with_spr: bool = True
) -> Optional[MonolithicCensus]:
    """
    The Frobenius-ratio census of G, when G is minimal nonsolvable
    monolithic.

    Outside the exception list the 2-element ratio `|U_2(G)|/|G|_2` must be
    at least 6. For exception-list socles `spr(G) <= 1/6` is required
    instead; `with_spr=False` leaves that verdict open.

    Returns:
        Optional[MonolithicCensus]: None when G is not minimal nonsolvable
            monolithic.
    """

    socle = monolithic_socle(G)
    if socle is None:
        return None
    ratio = frobenius_ratio(G, 2)
    exception = socle.order in EXCEPTION_SOCLE_ORDERS
    if not exception:
        return MonolithicCensus(
            socle_order=socle.order,
            exception=False,
            ratio=ratio,
            holds=ratio >= 6,
        )
    if not with_spr:
        return MonolithicCensus(
            socle_order=socle.order, exception=True, ratio=ratio
        )
    total = spr_group(G, pairs=False).spr_total
    return MonolithicCensus(
        socle_order=socle.order,
        exception=True,
        ratio=ratio,
        spr_total=total,
        holds=total <= Fraction(1, 6),
    )
