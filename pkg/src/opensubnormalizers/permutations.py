from math import gcd
from typing import Iterable, List, Tuple

from .exceptions import GroupDomainError


class Permutation(tuple):
    """
    A permutation of the points `0..degree-1`, stored as its image sequence.

    The image sequence is the canonical key: two permutations are equal, and
    hash equally, iff they have the same degree and the same images.
    Products read left to right, `p * q` applies `p` first and then `q`.
    """

    __slots__ = ()

    def __new__(cls, images: Iterable[int]) -> "Permutation":
        perm = super().__new__(cls, images)
        if not perm:
            raise GroupDomainError("A permutation needs degree >= 1")
        if sorted(perm) != list(range(len(perm))):
            raise GroupDomainError(
                f"Images {tuple(perm)} are not a bijection on "
                f"0..{len(perm) - 1}"
            )
        return perm

    @classmethod
    def _trusted(cls, images: Iterable[int]) -> "Permutation":
        # Skips the bijection check; only for images built from permutations.
        return tuple.__new__(cls, images)

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        if degree < 1:
            raise GroupDomainError("A permutation needs degree >= 1")
        return cls._trusted(range(degree))

    @classmethod
    def from_cycles(
        cls, degree: int, *cycles: Tuple[int, ...]
    ) -> "Permutation":
        """
        Build a permutation from disjoint cycles on 0-based points.

        Args:
            degree (int): The number of points.
            *cycles (Tuple[int, ...]): Cycles such as `(0, 1, 2)`.

        Returns:
            Permutation: The product of the cycles.
        """

        images = list(range(degree))
        seen = set()
        for cycle in cycles:
            for i, point in enumerate(cycle):
                if point in seen or not 0 <= point < degree:
                    raise GroupDomainError(
                        f"Cycle {cycle} is not valid on {degree} points"
                    )
                seen.add(point)
                images[point] = cycle[(i + 1) % len(cycle)]
        return cls._trusted(images)

    @property
    def degree(self) -> int:
        return len(self)

    def is_identity(self) -> bool:
        return all(i == image for i, image in enumerate(self))

    def _check_degree(self, other: "Permutation") -> None:
        if len(other) != len(self):
            raise GroupDomainError(
                f"Degree mismatch: {len(self)} and {len(other)}"
            )

    def __mul__(self, other):  # type: ignore[override]
        self._check_degree(other)
        return Permutation._trusted(map(other.__getitem__, self))

    def __rmul__(self, other):  # type: ignore[override]
        return NotImplemented

    def __invert__(self) -> "Permutation":
        inverse = [0] * len(self)
        for i, image in enumerate(self):
            inverse[image] = i
        return Permutation._trusted(inverse)

    def inverse(self) -> "Permutation":
        return ~self

    def __pow__(self, exponent: int) -> "Permutation":
        base = self if exponent >= 0 else ~self
        exponent = abs(exponent)
        result = Permutation.identity(len(self))
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def conjugate(self, by: "Permutation") -> "Permutation":
        """Return `by^-1 * self * by`, i.e. `self^by`."""

        return ~by * self * by

    def cycles(self) -> List[Tuple[int, ...]]:
        """The nontrivial cycles, each starting at its smallest point."""

        seen = [False] * len(self)
        result = []
        for start in range(len(self)):
            if seen[start]:
                continue
            cycle = [start]
            seen[start] = True
            point = self[start]
            while point != start:
                seen[point] = True
                cycle.append(point)
                point = self[point]
            if len(cycle) > 1:
                result.append(tuple(cycle))
        return result

    def cycle_type(self) -> Tuple[int, ...]:
        """Cycle lengths (fixed points included) in decreasing order."""

        fixed = len(self) - sum(len(c) for c in self.cycles())
        lengths = [len(c) for c in self.cycles()] + [1] * fixed
        return tuple(sorted(lengths, reverse=True))

    def order(self) -> int:
        """The least k > 0 with `self ** k` the identity."""

        result = 1
        for cycle in self.cycles():
            result = result * len(cycle) // gcd(result, len(cycle))
        return result

    def fixed_points(self) -> int:
        return sum(1 for i, image in enumerate(self) if i == image)

    def __repr__(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return f"Permutation(identity, degree={len(self)})"
        text = "".join(
            "(" + " ".join(str(p) for p in c) + ")" for c in cycles
        )
        return f"Permutation({text}, degree={len(self)})"


def permutation_algebra(p: Permutation, q: Permutation) -> dict:
    """
    Compose, invert and take orders in one call.

    Args:
        p (Permutation): The first permutation.
        q (Permutation): The second permutation, of the same degree.

    Raises:
        GroupDomainError: If the degrees differ.

    Returns:
        dict: `compose` (p then q), `inverse` (of p) and `element_order`
            (of p).
    """

    return {
        "compose": p * q,
        "inverse": ~p,
        "element_order": p.order(),
    }
