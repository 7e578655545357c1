from dataclasses import dataclass
import logging
from typing import (
    Callable,
    Dict,
    FrozenSet,
    Iterable,
    Iterator,
    List,
    Optional,
    Sequence,
    Set,
    Tuple,
)

from sympy.combinatorics import Permutation as SympyPermutation
from sympy.combinatorics import PermutationGroup

from .exceptions import CapExceededError, GroupDomainError, GroupError
from .models.config import DEFAULT_CAPS, Caps
from .permutations import Permutation

logger = logging.getLogger(__name__)


def compose(a: Permutation, b: Permutation) -> Permutation:
    """`a` then `b`, without degree checks (hot loops only)."""

    return tuple.__new__(Permutation, map(b.__getitem__, a))


def conjugate(
    a: Permutation, b: Permutation, b_inv: Permutation
) -> Permutation:
    """`a^b = b^-1 a b`, given `b` and its inverse."""

    return compose(compose(b_inv, a), b)


def closure(generators: Sequence[Permutation]) -> Set[Permutation]:
    """
    The elements of the subgroup generated by `generators`.

    A breadth-first search of right multiplications by the generators; for a
    finite group this reaches every element of the generated subgroup.
    """

    identity = Permutation.identity(len(generators[0]))
    elements = {identity}
    queue = [identity]
    for element in queue:
        for gen in generators:
            product = compose(element, gen)
            if product not in elements:
                elements.add(product)
                queue.append(product)
    return elements


def extend_closure(
    elements: Set[Permutation],
    generators: Sequence[Permutation],
    new_generator: Permutation,
) -> Set[Permutation]:
    """
    Grow the subgroup `elements = <generators>` by one more generator.

    `elements` must already be closed under the old generators; it is not
    modified.
    """

    result = set(elements)
    if new_generator in result:
        return result
    queue = []
    for element in elements:
        product = compose(element, new_generator)
        if product not in result:
            result.add(product)
            queue.append(product)
    gens = list(generators) + [new_generator]
    for element in queue:
        for gen in gens:
            product = compose(element, gen)
            if product not in result:
                result.add(product)
                queue.append(product)
    return result


def generating_set(elements: Iterable[Permutation]) -> List[Permutation]:
    """A small deterministic generating set of a subgroup's elements."""

    ordered = sorted(elements)
    gens: List[Permutation] = []
    # the identity is the smallest permutation, so it seeds the span
    span = {ordered[0]}
    for element in ordered:
        if element not in span:
            span = extend_closure(span, gens, element)
            gens.append(element)
    return gens or [ordered[0]]


def normal_closure_of(
    seeds: Sequence[Permutation],
    conjugators: Sequence[Permutation],
    stop_when: Optional[Sequence[Permutation]] = None,
) -> Tuple[List[Permutation], Set[Permutation], bool]:
    """
    Normal closure of `<seeds>` under conjugation by `conjugators`.

    Args:
        seeds (Sequence[Permutation]): Generators of the starting subgroup.
        conjugators (Sequence[Permutation]): Generators of the ambient group.
        stop_when (Optional[Sequence[Permutation]]): If all of these land in
            the closure, the search stops early.

    Returns:
        Tuple[List[Permutation], Set[Permutation], bool]: generators and
            elements of the closure, and whether the early stop fired (the
            elements are then only a subset of the closure).
    """

    gens = list(seeds)
    elements = closure(gens)
    inverses = [~c for c in conjugators]
    watch = list(stop_when or ())
    queue = list(gens)
    for element in queue:
        for conj, conj_inv in zip(conjugators, inverses):
            image = conjugate(element, conj, conj_inv)
            if image in elements:
                continue
            elements = extend_closure(elements, gens, image)
            gens.append(image)
            queue.append(image)
            if watch and all(w in elements for w in watch):
                return gens, elements, True
    return gens, elements, False


def _to_sympy(generators: Sequence[Permutation]) -> PermutationGroup:
    return PermutationGroup([SympyPermutation(list(g)) for g in generators])


class Group:
    """
    A permutation group given by generators.

    The order is always exact. Up to `caps.max_exhaustive` the complete
    element set is materialized; beyond that, membership is answered by a
    stabilizer chain. Groups are immutable; derived data (classes, Sylow
    systems, element orders) is cached on the instance.
    """

    def __init__(
        self,
        generators: Sequence[Permutation],
        order: int,
        elements: Optional[FrozenSet[Permutation]] = None,
        caps: Caps = DEFAULT_CAPS,
        name: Optional[str] = None,
    ):
        self.degree = len(generators[0])
        self.generators: Tuple[Permutation, ...] = tuple(
            sorted(set(generators))
        )
        self.order = order
        self.elements = elements
        self.caps = caps
        self.name = name or f"group of order {order} on {self.degree} points"
        self._chain: Optional[PermutationGroup] = None
        self._cache: Dict[object, object] = {}

    @classmethod
    def from_elements(
        cls,
        elements: Iterable[Permutation],
        caps: Caps = DEFAULT_CAPS,
        name: Optional[str] = None,
        generators: Optional[Sequence[Permutation]] = None,
    ) -> "Group":
        """Wrap a known, closed element set as a group."""

        store = frozenset(elements)
        gens = list(generators) if generators else generating_set(store)
        return cls(gens, len(store), store, caps, name)

    @property
    def has_store(self) -> bool:
        return self.elements is not None

    @property
    def identity(self) -> Permutation:
        return Permutation.identity(self.degree)

    @property
    def chain(self) -> PermutationGroup:
        if self._chain is None:
            self._chain = _to_sympy(self.generators)
        return self._chain

    def require_store(self, operation: str) -> FrozenSet[Permutation]:
        if self.elements is None:
            raise CapExceededError(
                "max_exhaustive",
                self.caps.max_exhaustive,
                self.order,
                what=f"{operation} needs an element store",
            )
        return self.elements

    def __len__(self) -> int:
        return self.order

    def __iter__(self) -> Iterator[Permutation]:
        return iter(self.sorted_elements())

    def __contains__(self, perm: object) -> bool:
        if not isinstance(perm, tuple) or len(perm) != self.degree:
            return False
        if self.elements is not None:
            return perm in self.elements
        return bool(self.chain.contains(SympyPermutation(list(perm))))

    def __repr__(self) -> str:
        return f"Group({self.name!r}, order={self.order})"

    def sorted_elements(self) -> List[Permutation]:
        key = "sorted"
        if key not in self._cache:
            self._cache[key] = sorted(self.require_store("enumeration"))
        return self._cache[key]  # type: ignore[return-value]

    def element_order(self, element: Permutation) -> int:
        orders = self._cache.setdefault("orders", {})
        if element not in orders:  # type: ignore[operator]
            orders[element] = element.order()  # type: ignore[index]
        return orders[element]  # type: ignore[index]

    def is_p_element(self, element: Permutation, p: int) -> bool:
        order = self.element_order(element)
        while order % p == 0:
            order //= p
        return order == 1

    def is_subgroup_of(self, other: "Group") -> bool:
        return self.degree == other.degree and all(
            g in other for g in self.generators
        )

    def is_normal_in(self, other: "Group") -> bool:
        if not self.is_subgroup_of(other):
            return False
        return all(
            h.conjugate(g) in self
            for g in other.generators
            for h in self.generators
        )

    def is_abelian(self) -> bool:
        return all(
            compose(a, b) == compose(b, a)
            for a in self.generators
            for b in self.generators
        )

    def same_elements(self, other: "Group") -> bool:
        return (
            self.degree == other.degree
            and self.order == other.order
            and self.is_subgroup_of(other)
        )

    def subgroup(
        self, generators: Sequence[Permutation], name: Optional[str] = None
    ) -> "Group":
        """The subgroup generated by `generators`, which must lie in self."""

        for g in generators:
            if g not in self:
                raise GroupDomainError(f"{g!r} is not an element of {self}")
        return group_from_generators(generators, self.caps, name)


def group_from_generators(
    generators: Iterable[Permutation],
    caps: Optional[Caps] = None,
    name: Optional[str] = None,
) -> Group:
    """
    Build a group from generators, computing its order exactly.

    Args:
        generators (Iterable[Permutation]): Nonempty, all of one degree.
        caps (Optional[Caps]): Size limits; the defaults when omitted.
        name (Optional[str]): A label used in reports.

    Raises:
        GroupDomainError: If no generators are given or degrees differ.
        CapExceededError: If the order exceeds `caps.max_order`.

    Returns:
        Group: The group, with an element store iff its order is at most
            `caps.max_exhaustive`.
    """

    caps = caps or DEFAULT_CAPS
    gens = [Permutation(g) for g in generators]
    if not gens:
        raise GroupDomainError("A group needs at least one generator")
    degrees = {len(g) for g in gens}
    if len(degrees) != 1:
        raise GroupDomainError(
            f"Generators of mixed degrees {sorted(degrees)}"
        )

    chain = _to_sympy(gens)
    order = int(chain.order())
    if order > caps.max_order:
        raise CapExceededError("max_order", caps.max_order, order, what=name)

    elements = None
    if order <= caps.max_exhaustive:
        elements = frozenset(closure(gens))
        if len(elements) != order:
            raise GroupError(
                f"Closure found {len(elements)} elements, stabilizer chain "
                f"reports order {order}"
            )
    logger.debug(
        "built group name=%s degree=%d order=%d store=%s",
        name,
        len(gens[0]),
        order,
        elements is not None,
    )
    group = Group(gens, order, elements, caps, name)
    group._chain = chain
    return group


def trivial_subgroup(G: Group) -> Group:
    identity = G.identity
    return Group([identity], 1, frozenset([identity]), G.caps, "trivial")


def _filter_subgroup(
    G: Group,
    keep: Callable[[Permutation], bool],
    operation: str,
    name: Optional[str] = None,
) -> Group:
    store = G.require_store(operation)
    return Group.from_elements(
        (g for g in store if keep(g)), G.caps, name=name
    )


def _require_element(G: Group, x: Permutation) -> None:
    if x not in G:
        raise GroupDomainError(f"{x!r} is not an element of {G}")


def _require_subgroup(H: Group, G: Group) -> None:
    if not H.is_subgroup_of(G):
        raise GroupDomainError(f"{H} is not a subgroup of {G}")


@dataclass(frozen=True)
class ConjugacyClass:
    """A conjugacy class `x^G`; the representative is its smallest member."""

    representative: Permutation
    size: int
    members: FrozenSet[Permutation]
    centralizer_order: int
    element_order: int

    def sort_key(self) -> Tuple[int, int, Permutation]:
        return (self.element_order, self.size, self.representative)


def _conjugation_orbit(
    x: Permutation,
    generators: Sequence[Permutation],
    inverses: Sequence[Permutation],
) -> Set[Permutation]:
    orbit = {x}
    queue = [x]
    for element in queue:
        for gen, gen_inv in zip(generators, inverses):
            image = conjugate(element, gen, gen_inv)
            if image not in orbit:
                orbit.add(image)
                queue.append(image)
    return orbit


def conjugacy_classes(G: Group) -> List[ConjugacyClass]:
    """
    Partition G into conjugacy classes.

    Classes are ordered by element order, then size, then representative.

    Raises:
        CapExceededError: If G has no element store.

    Returns:
        List[ConjugacyClass]: The classes of G.
    """

    if "classes" in G._cache:
        return G._cache["classes"]  # type: ignore[return-value]

    store = G.require_store("conjugacy_classes")
    inverses = [~g for g in G.generators]
    remaining = set(store)
    classes = []
    while remaining:
        x = remaining.pop()
        orbit = _conjugation_orbit(x, G.generators, inverses)
        remaining -= orbit
        representative = min(orbit)
        classes.append(
            ConjugacyClass(
                representative=representative,
                size=len(orbit),
                members=frozenset(orbit),
                centralizer_order=G.order // len(orbit),
                element_order=G.element_order(representative),
            )
        )
    classes.sort(key=ConjugacyClass.sort_key)
    G._cache["classes"] = classes
    return classes


def class_of(G: Group, x: Permutation) -> ConjugacyClass:
    """The conjugacy class of G containing x."""

    _require_element(G, x)
    lookup = G._cache.get("class_lookup")
    if lookup is None:
        lookup = {
            member: cls
            for cls in conjugacy_classes(G)
            for member in cls.members
        }
        G._cache["class_lookup"] = lookup
    return lookup[x]  # type: ignore[index]


def centralizer(G: Group, x: Permutation) -> Group:
    """
    The centralizer `C_G(x)`, by element filtering.

    Raises:
        GroupDomainError: If x is not in G.
        CapExceededError: If G has no element store.
    """

    _require_element(G, x)
    return _filter_subgroup(
        G, lambda g: compose(x, g) == compose(g, x), "centralizer"
    )


def normalizer(G: Group, H: Group) -> Group:
    """
    The normalizer `N_G(H)`, by element filtering.

    Raises:
        GroupDomainError: If H is not a subgroup of G.
        CapExceededError: If G has no element store.
    """

    _require_subgroup(H, G)
    gens = H.generators

    def normalizes(g: Permutation) -> bool:
        g_inv = ~g
        return all(conjugate(h, g, g_inv) in H for h in gens)

    return _filter_subgroup(G, normalizes, "normalizer")


def stabilizer(G: Group, point: int) -> Group:
    """The point stabilizer `G_point`."""

    if not 0 <= point < G.degree:
        raise GroupDomainError(f"Point {point} is not in 0..{G.degree - 1}")
    return _filter_subgroup(G, lambda g: g[point] == point, "stabilizer")


def center(G: Group) -> Group:
    gens = G.generators
    return _filter_subgroup(
        G,
        lambda g: all(compose(g, s) == compose(s, g) for s in gens),
        "center",
        name="center",
    )


def normal_closure(K: Group, X: Iterable[Permutation]) -> Group:
    """
    The smallest subgroup of K containing X and normalized by K.

    Args:
        K (Group): The ambient group.
        X (Iterable[Permutation]): Elements of K.

    Raises:
        GroupDomainError: If some element of X is not in K.

    Returns:
        Group: The normal closure of `<X>` in K.
    """

    seeds = list(X) or [K.identity]
    for x in seeds:
        _require_element(K, x)
    gens, elements, _ = normal_closure_of(seeds, K.generators)
    return Group(gens, len(elements), frozenset(elements), K.caps)


class CosetAction:
    """
    The action of G on the right cosets `H g` of a subgroup H.

    Attributes:
        group (Group): The permutation group induced on the cosets.
        representatives (List[Permutation]): One element per coset; the
            coset of `representatives[i]` is point `i`.
    """

    def __init__(self, G: Group, H: Group):
        store = G.require_store("coset_action")
        H_store = H.require_store("coset_action")
        self.index: Dict[Permutation, int] = {}
        self.representatives: List[Permutation] = []
        for g in sorted(store):
            if g in self.index:
                continue
            point = len(self.representatives)
            self.representatives.append(g)
            for h in H_store:
                self.index[compose(h, g)] = point
        images = [self.image(s) for s in G.generators]
        self.group = group_from_generators(
            images, G.caps, name=f"{G.name} on cosets of {H.name}"
        )

    def image(self, g: Permutation) -> Permutation:
        """The permutation g induces on the cosets."""

        return Permutation._trusted(
            self.index[compose(r, g)] for r in self.representatives
        )


def coset_action(G: Group, H: Group) -> CosetAction:
    """
    G acting on the right cosets of a subgroup H.

    Raises:
        GroupDomainError: If H is not a subgroup of G.
    """

    _require_subgroup(H, G)
    return CosetAction(G, H)


def quotient_action(G: Group, N: Group) -> CosetAction:
    """
    A faithful permutation representation of `G/N` on the cosets of N.

    Raises:
        GroupDomainError: If N is not normal in G.

    Returns:
        CosetAction: `.group` is isomorphic to `G/N`; `.image` is the
            quotient map.
    """

    if not N.is_normal_in(G):
        raise GroupDomainError(f"{N} is not a normal subgroup of {G}")
    action = CosetAction(G, N)
    if action.group.order * N.order != G.order:
        raise GroupError("Coset action of a normal subgroup is not faithful")
    return action


def direct_product(A: Group, B: Group, name: Optional[str] = None) -> Group:
    """A × B acting on the disjoint union of their points (A's first)."""

    a, b = A.degree, B.degree
    gens = [
        Permutation._trusted(list(g) + list(range(a, a + b)))
        for g in A.generators
    ]
    gens += [
        Permutation._trusted(list(range(a)) + [a + i for i in g])
        for g in B.generators
    ]
    return group_from_generators(
        gens, A.caps, name or f"{A.name} x {B.name}"
    )


def power_wreath(
    L: Group, k: int, top: Group, name: Optional[str] = None
) -> Group:
    """
    The wreath product `L wr top`, base `L^k`, on `k * degree(L)` points.

    Point `i * d + j` is point `j` of block `i`; the base acts inside the
    blocks and `top` permutes the blocks.

    Raises:
        GroupDomainError: If `top` does not act on k points.
    """

    if k < 1 or top.degree != k:
        raise GroupDomainError(
            f"Top group must act on k={k} points, it has degree {top.degree}"
        )
    d = L.degree
    gens = []
    for block in range(k):
        for g in L.generators:
            images = list(range(k * d))
            for j in range(d):
                images[block * d + j] = block * d + g[j]
            gens.append(Permutation._trusted(images))
    for sigma in top.generators:
        gens.append(
            Permutation._trusted(
                sigma[i // d] * d + i % d for i in range(k * d)
            )
        )
    return group_from_generators(
        gens, L.caps, name or f"{L.name} wr {top.name}"
    )


def block_decomposition(
    w: Permutation, k: int, d: int
) -> Tuple[Permutation, List[Permutation]]:
    """
    Split an element of a power wreath into `(sigma, [v_0, ..., v_{k-1}])`.

    `w` maps point `(i, j)` to `(sigma(i), v_i(j))`.

    Raises:
        GroupDomainError: If w does not preserve the block system.
    """

    if len(w) != k * d:
        raise GroupDomainError(f"Degree {len(w)} is not {k} blocks of {d}")
    sigma = []
    parts = []
    for i in range(k):
        target = w[i * d] // d
        images = []
        for j in range(d):
            image = w[i * d + j]
            if image // d != target:
                raise GroupDomainError(f"{w!r} does not preserve the blocks")
            images.append(image % d)
        sigma.append(target)
        parts.append(Permutation(images))
    return Permutation(sigma), parts
