import logging
from typing import Collection, Dict, List, Optional, Sequence

from .exceptions import GroupError
from .groups import (
    Group,
    compose,
    conjugacy_classes,
    normal_closure_of,
)
from .permutations import Permutation
from .utils import is_prime_power, p_part, prime_divisors

logger = logging.getLogger(__name__)


def _commutators(gens: Sequence[Permutation]) -> List[Permutation]:
    result = []
    for i, a in enumerate(gens):
        a_inv = ~a
        for b in gens[i + 1 :]:
            c = compose(compose(a_inv, ~b), compose(a, b))
            if not c.is_identity():
                result.append(c)
    return result


def derived_step(
    gens: Sequence[Permutation],
) -> Optional[tuple]:
    """
    Generators and elements of the derived subgroup `<gens>'`.

    The derived subgroup is the normal closure, in `<gens>`, of the
    commutators of the generators. Returns None when it is trivial.
    """

    seeds = _commutators(gens)
    if not seeds:
        return None
    new_gens, elements, _ = normal_closure_of(seeds, gens)
    return new_gens, elements


def derived_series_of(
    gens: Sequence[Permutation], order: int
) -> List[int]:
    """
    Orders of the derived series `K > K' > K'' > ...` of `K = <gens>`.

    The series ends at 1 (solvable) or at a perfect term. Its length is
    capped at `order`; running past the cap is reported as an error.
    """

    orders = [order]
    current = list(gens)
    for _ in range(order):
        step = derived_step(current)
        if step is None:
            orders.append(1)
            return orders
        current, elements = step
        if len(elements) == orders[-1]:
            return orders
        orders.append(len(elements))
    raise GroupError(f"Derived series exceeded its length cap {order}")


def solvable_from_generators(
    gens: Sequence[Permutation], order: int
) -> bool:
    if len(prime_divisors(order)) <= 2:
        # Burnside: groups of order p^a or p^a q^b are solvable
        return True
    return derived_series_of(gens, order)[-1] == 1


def nilpotent_from_elements(elements: Collection[Permutation]) -> bool:
    """
    A finite group is nilpotent iff each of its Sylow subgroups is normal,
    i.e. iff it has exactly `|K|_p` elements of p-power order for every p.
    """

    order = len(elements)
    primes = prime_divisors(order)
    if len(primes) <= 1:
        return True
    counts: Dict[int, int] = {p: 0 for p in primes}
    for element in elements:
        k = element.order()
        if k == 1:
            for p in primes:
                counts[p] += 1
            continue
        p = is_prime_power(k)
        if p is not None:
            counts[p] += 1
    return all(counts[p] == p_part(order, p) for p in primes)


def is_solvable(G: Group) -> bool:
    key = "solvable"
    if key not in G._cache:
        G._cache[key] = solvable_from_generators(G.generators, G.order)
    return G._cache[key]  # type: ignore[return-value]


def is_nilpotent(G: Group) -> bool:
    key = "nilpotent"
    if key not in G._cache:
        store = G.require_store("is_nilpotent")
        G._cache[key] = nilpotent_from_elements(store)
    return G._cache[key]  # type: ignore[return-value]


def structure_tests(G: Group) -> Dict[str, bool]:
    """
    Solvability via the derived series, nilpotence via normal Sylows.

    Args:
        G (Group): A group with an element store.

    Returns:
        Dict[str, bool]: `is_solvable` and `is_nilpotent`.
    """

    return {"is_solvable": is_solvable(G), "is_nilpotent": is_nilpotent(G)}


def derived_series(G: Group) -> List[int]:
    return derived_series_of(G.generators, G.order)


def solvable_residual(G: Group) -> Group:
    """The last term of the derived series (trivial iff G is solvable)."""

    current = list(G.generators)
    elements = G.require_store("solvable_residual")
    for _ in range(G.order):
        step = derived_step(current)
        if step is None:
            return Group([G.identity], 1, frozenset([G.identity]), G.caps)
        new_gens, new_elements = step
        if len(new_elements) == len(elements):
            return Group(
                current, len(elements), frozenset(elements), G.caps
            )
        current, elements = new_gens, new_elements
    raise GroupError(f"Derived series exceeded its length cap {G.order}")


def _class_normal_closures(G: Group) -> List[frozenset]:
    key = "class_closures"
    if key not in G._cache:
        closures = []
        for cls in conjugacy_classes(G)[1:]:
            _, elements, _ = normal_closure_of(
                [cls.representative], G.generators
            )
            closures.append(frozenset(elements))
        G._cache[key] = closures
    return G._cache[key]  # type: ignore[return-value]


def minimal_normal_subgroups(G: Group) -> List[Group]:
    """
    The minimal normal subgroups of G.

    Every minimal normal subgroup is the normal closure of each of its
    nontrivial elements, so the inclusion-minimal normal closures of class
    representatives are exactly the minimal normal subgroups.
    """

    closures = set(_class_normal_closures(G))
    minimal = [
        n for n in closures if not any(m < n for m in closures if m != n)
    ]
    minimal.sort(key=lambda n: (len(n), min(n - {G.identity})))
    return [Group.from_elements(n, G.caps) for n in minimal]


def solvable_radical(G: Group) -> Group:
    """
    The largest solvable normal subgroup of G.

    Grows `R` by normal closures of class representatives outside it while
    the result stays solvable; any element of the radical outside `R` would
    give such a step, so the growth stops exactly at the radical.
    """

    radical_gens: List[Permutation] = []
    radical = {G.identity}
    grown = True
    while grown:
        grown = False
        for cls in conjugacy_classes(G):
            x = cls.representative
            if x in radical:
                continue
            gens, elements, _ = normal_closure_of(
                radical_gens + [x], G.generators
            )
            if solvable_from_generators(gens, len(elements)):
                radical_gens, radical = gens, elements
                grown = True
    logger.debug("solvable radical of %s has order %d", G.name, len(radical))
    return Group.from_elements(radical, G.caps, name="solvable radical")


def monolithic_socle(G: Group) -> Optional[Group]:
    """
    The socle N of G when G is minimal nonsolvable monolithic, else None.

    That is: G is nonsolvable, has a unique minimal normal subgroup N, N is
    nonabelian, and every proper quotient of G (equivalently `G/N`) is
    solvable.
    """

    if is_solvable(G):
        return None
    minimal = minimal_normal_subgroups(G)
    if len(minimal) != 1:
        return None
    socle = minimal[0]
    if socle.is_abelian():
        return None
    residual = solvable_residual(G)
    if not all(g in socle for g in residual.generators):
        return None
    return socle


def is_minimal_nonsolvable_monolithic(G: Group) -> bool:
    return monolithic_socle(G) is not None
