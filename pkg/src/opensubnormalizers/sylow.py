from dataclasses import dataclass
import logging
from typing import FrozenSet, List, Set, Tuple

from .exceptions import GroupError
from .groups import (
    Group,
    compose,
    conjugate,
    extend_closure,
    trivial_subgroup,
)
from .permutations import Permutation
from .utils import p_part, require_prime

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SylowSystem:
    """
    All Sylow p-subgroups of a group.

    `all_sylows[0]` holds the elements of `one_sylow`; the others are its
    conjugates in the order the conjugation orbit reaches them.
    """

    prime: int
    one_sylow: Group
    count: int
    all_sylows: Tuple[FrozenSet[Permutation], ...]
    normalizer_order: int

    def containing(self, x: Permutation) -> int:
        """The number of Sylow p-subgroups containing x, i.e. `lambda(x)`."""

        return sum(1 for P in self.all_sylows if x in P)


def _normalizes(g: Permutation, gens: List[Permutation], P: Set) -> bool:
    g_inv = ~g
    return all(conjugate(h, g, g_inv) in P for h in gens)


def _grow_sylow(G: Group, p: int, target: int) -> Group:
    ordered = G.sorted_elements()
    identity = G.identity
    gens: List[Permutation] = []
    P: Set[Permutation] = {identity}
    while len(P) < target:
        # a p-subgroup below the full p-part has p dividing [N_G(P) : P]
        step = next(
            (
                g
                for g in ordered
                if g not in P
                and G.is_p_element(g, p)
                and _normalizes(g, gens, P)
            ),
            None,
        )
        if step is None:
            raise GroupError(
                f"No p-element normalizes a p-subgroup of order {len(P)} "
                f"in {G.name}, p={p}"
            )
        P = extend_closure(P, gens, step)
        gens.append(step)
        logger.debug("sylow p=%d grown to order %d", p, len(P))
    return Group(gens, len(P), frozenset(P), G.caps, name=f"Sylow {p}")


def _sylow_orbit(
    G: Group, P: FrozenSet[Permutation]
) -> List[FrozenSet[Permutation]]:
    inverses = [~g for g in G.generators]
    orbit = [P]
    seen = {P}
    for current in orbit:
        for gen, gen_inv in zip(G.generators, inverses):
            image = frozenset(
                compose(compose(gen_inv, h), gen) for h in current
            )
            if image not in seen:
                seen.add(image)
                orbit.append(image)
    return orbit


def sylow(G: Group, p: int) -> SylowSystem:
    """
    Compute the Sylow p-subgroups of G.

    One Sylow subgroup is grown from the trivial subgroup by adjoining, in
    sorted order, p-elements that normalize the current p-subgroup; the
    others form its conjugation orbit.

    Args:
        G (Group): A group with an element store.
        p (int): A prime. If p does not divide `|G|` the system consists of
            the trivial subgroup, with count 1.

    Raises:
        GroupDomainError: If p is not a prime.
        CapExceededError: If G has no element store.
        GroupError: If the Sylow count fails `n_p = 1 mod p`.

    Returns:
        SylowSystem: The Sylow p-subgroups of G.
    """

    require_prime(p)
    key = ("sylow", p)
    if key in G._cache:
        return G._cache[key]  # type: ignore[return-value]

    G.require_store("sylow")
    target = p_part(G.order, p)
    if target == 1:
        P = trivial_subgroup(G)
    else:
        P = _grow_sylow(G, p, target)
    orbit = _sylow_orbit(G, P.elements)  # type: ignore[arg-type]
    count = len(orbit)
    if count % p != 1 or G.order % count:
        raise GroupError(
            f"Sylow count {count} for p={p} is inconsistent with |G|="
            f"{G.order}"
        )
    system = SylowSystem(
        prime=p,
        one_sylow=P,
        count=count,
        all_sylows=tuple(orbit),
        normalizer_order=G.order // count,
    )
    logger.debug(
        "sylow %s p=%d order=%d count=%d", G.name, p, target, count
    )
    G._cache[key] = system
    return system


def p_core(G: Group, p: int) -> Group:
    """
    The p-core `O_p(G)`, the intersection of all Sylow p-subgroups.
    """

    system = sylow(G, p)
    core = frozenset.intersection(*system.all_sylows)
    return Group.from_elements(core, G.caps, name=f"O_{p}")
