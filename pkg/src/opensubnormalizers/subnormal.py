import logging
from typing import Iterable, List, Optional, Set, Tuple

from .exceptions import GroupDomainError, GroupError
from .groups import (
    Group,
    _require_element,
    class_of,
    closure,
    compose,
    conjugate,
    generating_set,
    normal_closure_of,
)
from .models import SubnormalizerReport
from .permutations import Permutation
from .sylow import sylow
from .utils import is_prime_power

logger = logging.getLogger(__name__)

# each chain term is a proper subgroup of the last, so the length is at
# most log2 of the hard order cap
_CHAIN_CAP = 64


def _cyclic(x: Permutation) -> Set[Permutation]:
    return closure([x])


def subnormal_chain(
    x: Permutation,
    gens: Iterable[Permutation],
    cyclic: Optional[Set[Permutation]] = None,
) -> Tuple[bool, Optional[Set[Permutation]]]:
    """
    Decide whether `<x>` is subnormal in `K = <x, gens>`.

    Walks the chain `K_0 = K`, `K_{i+1} = <x>^{K_i}`. The first step stops as
    soon as the closure contains every generator of K (the chain has then
    stabilized at K itself), so K is never enumerated.

    Returns:
        Tuple[bool, Optional[Set[Permutation]]]: the verdict and, when the
            chain moved at all, the elements of the first term `K_1`.
    """

    cyclic = cyclic or _cyclic(x)
    watch = [x] + list(gens)
    if all(g in cyclic for g in watch):
        return True, cyclic
    first: Optional[Set[Permutation]] = None
    current = watch
    for _ in range(_CHAIN_CAP):
        new_gens, elements, stopped = normal_closure_of(
            [x], current, stop_when=current
        )
        if stopped:
            return False, first
        if first is None:
            first = elements
        if len(elements) == len(cyclic):
            return True, first
        current = new_gens
    raise GroupError("Subnormal chain exceeded its length cap")


def is_subnormal(x: Permutation, H: Group) -> bool:
    """
    Whether `<x>` is subnormal in H.

    Args:
        x (Permutation): An element of H.
        H (Group): The ambient group.

    Raises:
        GroupDomainError: If x is not in H.

    Returns:
        bool: True iff the normal-closure chain of `<x>` reaches `<x>`.
    """

    _require_element(H, x)
    verdict, _ = subnormal_chain(x, H.generators)
    return verdict


def cyclic_normalizer_generators(
    G: Group, x: Permutation
) -> List[Permutation]:
    """Generators of `N_G(<x>)`."""

    key = ("cyclic_normalizer", x)
    if key not in G._cache:
        powers = _cyclic(x)
        members = [
            g
            for g in G.require_store("cyclic_normalizer")
            if conjugate(x, g, ~g) in powers
        ]
        G._cache[key] = generating_set(members)
    return G._cache[key]  # type: ignore[return-value]


def pair_orbit(
    y: Permutation,
    x: Permutation,
    normalizer_gens: List[Permutation],
) -> Set[Permutation]:
    """
    The elements z for which `<x, z>` is `<x, y>` up to conjugation in
    `N_G(<x>)`, reached by `z -> xz, zx, z^-1` and conjugation.
    """

    inverses = [~n for n in normalizer_gens]
    orbit = {y}
    queue = [y]
    for z in queue:
        images = [compose(x, z), compose(z, x), ~z]
        images += [
            conjugate(z, n, n_inv)
            for n, n_inv in zip(normalizer_gens, inverses)
        ]
        for image in images:
            if image not in orbit:
                orbit.add(image)
                queue.append(image)
    return orbit


def subnormalizer_bruteforce(G: Group, x: Permutation) -> Set[Permutation]:
    """
    The subnormalizer `S_G(x) = {g in G : <x> is subnormal in <x, g>}`.

    The verdict for g only depends on `<x, g>` up to conjugation by
    `N_G(<x>)`, so each pair orbit is decided once. A subnormal verdict also
    covers the first chain term, since subnormality passes to intermediate
    subgroups.

    Args:
        G (Group): A group with an element store.
        x (Permutation): An element of G.

    Raises:
        GroupDomainError: If x is not in G.
        CapExceededError: If G has no element store.

    Returns:
        Set[Permutation]: The subnormalizer, as an element set.
    """

    _require_element(G, x)
    store = G.require_store("subnormalizer_bruteforce")
    if x.is_identity():
        return set(store)

    cyclic = _cyclic(x)
    normalizer_gens = cyclic_normalizer_generators(G, x)
    decided: Set[Permutation] = set()
    result: Set[Permutation] = set()
    tests = 0
    for g in G.sorted_elements():
        if g in decided:
            continue
        orbit = pair_orbit(g, x, normalizer_gens)
        decided |= orbit
        if g in result:
            result |= orbit
            continue
        tests += 1
        verdict, first = subnormal_chain(x, [g], cyclic)
        if verdict:
            result |= orbit
            if first is not None:
                result |= first
    logger.debug(
        "subnormalizer of %r in %s: %d elements, %d chain tests",
        x,
        G.name,
        len(result),
        tests,
    )
    return result


def _require_p_element(G: Group, x: Permutation, p: int) -> None:
    if not G.is_p_element(x, p):
        raise GroupDomainError(f"{x!r} is not a {p}-element")


def casolo_report(G: Group, x: Permutation, p: int) -> SubnormalizerReport:
    """
    Compare `|S_G(x)|` by brute force with `lambda * |N_G(P)|` and
    `alpha * |C_G(x)|`.

    `lambda` counts the Sylow p-subgroups containing x and `alpha` counts the
    conjugates of x inside the first Sylow p-subgroup.

    Raises:
        GroupDomainError: If x is not a p-element of G.
    """

    _require_element(G, x)
    _require_p_element(G, x, p)
    system = sylow(G, p)
    members = class_of(G, x).members
    first = system.all_sylows[0]
    alpha = sum(1 for y in members if y in first)
    lambda_ = system.containing(x)
    centralizer_order = class_of(G, x).centralizer_order
    order = len(subnormalizer_bruteforce(G, x))
    return SubnormalizerReport(
        x=x,
        p=p,
        subnormalizer_order_bruteforce=order,
        lambda_=lambda_,
        alpha=alpha,
        n_p=system.count,
        normalizer_order=system.normalizer_order,
        centralizer_order=centralizer_order,
        identities_hold=(
            order
            == lambda_ * system.normalizer_order
            == alpha * centralizer_order
        ),
    )


def subnormalizer_order_fast(G: Group, x: Permutation) -> int:
    """
    `|S_G(x)|`, as `lambda(x) * |N_G(P)|` when x has prime-power order.

    Elements of composite order fall back to the brute-force subnormalizer.
    """

    _require_element(G, x)
    if x.is_identity():
        return G.order
    p = is_prime_power(G.element_order(x))
    if p is None:
        return len(subnormalizer_bruteforce(G, x))
    system = sylow(G, p)
    return system.containing(x) * system.normalizer_order
