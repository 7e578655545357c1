from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Optional, Tuple, Union

from .exceptions import GroupDomainError
from .utils import is_prime_power

SUPPORTED_ORDERS = (2, 3, 4, 5, 7, 8, 9, 11, 13, 16)

# Monic defining polynomials, coefficients from x^0 upwards.
DEFINING_POLYNOMIALS: Dict[int, Tuple[int, ...]] = {
    4: (1, 1, 1),
    8: (1, 1, 0, 1),
    9: (1, 0, 1),
    16: (1, 1, 0, 0, 1),
}


class GaloisField:
    """
    The finite field GF(q) for the small q in `SUPPORTED_ORDERS`.

    Elements are numbered by their coefficients over the prime field: the
    element `c_0 + c_1 x + ... + c_(k-1) x^(k-1)` has index
    `c_0 + c_1 p + ... + c_(k-1) p^(k-1)`. Arithmetic runs on precomputed
    index tables.
    """

    def __init__(self, q: int):
        if q not in SUPPORTED_ORDERS:
            raise GroupDomainError(
                f"GF({q}) is not supported, choose q in {SUPPORTED_ORDERS}"
            )
        p = is_prime_power(q) or q
        self.q = q
        self.p = p
        # prime fields reduce modulo x
        self.modulus = DEFINING_POLYNOMIALS.get(q, (0, 1))
        self.k = len(self.modulus) - 1

        coefficients = [self.coefficients(i) for i in range(q)]
        self._add = [
            [
                self._index([(s + t) % p for s, t in zip(a, b)])
                for b in coefficients
            ]
            for a in coefficients
        ]
        self._mul = [
            [self._index(self._multiply(a, b)) for b in coefficients]
            for a in coefficients
        ]
        self._neg = [self._index([-c % p for c in a]) for a in coefficients]
        self._inv: List[Optional[int]] = [None] * q
        for a in range(1, q):
            self._inv[a] = self._mul[a].index(1)
        self.primitive = next(
            a for a in range(1, q) if self.multiplicative_order(a) == q - 1
        )

    def coefficients(self, index: int) -> List[int]:
        digits = []
        for _ in range(self.k):
            digits.append(index % self.p)
            index //= self.p
        return digits

    def _index(self, coefficients: List[int]) -> int:
        return sum(c * self.p**i for i, c in enumerate(coefficients))

    def _multiply(self, a: List[int], b: List[int]) -> List[int]:
        p, k = self.p, self.k
        product = [0] * (2 * k - 1)
        for i, s in enumerate(a):
            for j, t in enumerate(b):
                product[i + j] = (product[i + j] + s * t) % p
        # reduce with the monic modulus, top degree first
        for degree in range(2 * k - 2, k - 1, -1):
            c = product[degree]
            if c:
                for i, m in enumerate(self.modulus):
                    product[degree - k + i] = (
                        product[degree - k + i] - c * m
                    ) % p
        return product[:k]

    def _check(self, a: int) -> int:
        if not 0 <= a < self.q:
            raise GroupDomainError(
                f"{a} is not an element index of GF({self.q})"
            )
        return a

    def add(self, a: int, b: int) -> int:
        return self._add[self._check(a)][self._check(b)]

    def mul(self, a: int, b: int) -> int:
        return self._mul[self._check(a)][self._check(b)]

    def neg(self, a: int) -> int:
        return self._neg[self._check(a)]

    def inv(self, a: int) -> int:
        inverse = self._inv[self._check(a)]
        if inverse is None:
            raise GroupDomainError(f"0 has no inverse in GF({self.q})")
        return inverse

    def power(self, a: int, n: int) -> int:
        result = 1
        for _ in range(n):
            result = self.mul(result, a)
        return result

    def multiplicative_order(self, a: int) -> int:
        if a == 0:
            raise GroupDomainError("0 has no multiplicative order")
        order, value = 1, a
        while value != 1:
            value = self.mul(value, a)
            order += 1
        return order

    def frobenius(self, a: int) -> int:
        return self.power(a, self.p)

    def element(self, index: int) -> "FieldElement":
        return FieldElement(self.q, self._check(index))

    def elements(self) -> List["FieldElement"]:
        return [FieldElement(self.q, i) for i in range(self.q)]

    def __repr__(self) -> str:
        return f"GaloisField({self.q})"


@lru_cache(maxsize=None)
def get_field(q: int) -> GaloisField:
    return GaloisField(q)


@dataclass(frozen=True)
class FieldElement:
    """An element of GF(q), given by its index."""

    q: int
    index: int

    @property
    def field(self) -> GaloisField:
        return get_field(self.q)

    def _same_field(self, other: "FieldElement") -> None:
        if other.q != self.q:
            raise GroupDomainError(
                f"Elements of GF({self.q}) and GF({other.q}) do not mix"
            )

    def __add__(self, other: "FieldElement") -> "FieldElement":
        self._same_field(other)
        return FieldElement(self.q, self.field.add(self.index, other.index))

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        self._same_field(other)
        return FieldElement(self.q, self.field.mul(self.index, other.index))

    def __neg__(self) -> "FieldElement":
        return FieldElement(self.q, self.field.neg(self.index))

    def __sub__(self, other: "FieldElement") -> "FieldElement":
        return self + (-other)

    def inverse(self) -> "FieldElement":
        return FieldElement(self.q, self.field.inv(self.index))

    def __truediv__(self, other: "FieldElement") -> "FieldElement":
        return self * other.inverse()

    def __repr__(self) -> str:
        terms = []
        for i, c in enumerate(self.field.coefficients(self.index)):
            if c:
                power = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
                coefficient = "" if c == 1 and power else str(c)
                terms.append(f"{coefficient}{power}")
        return f"GF({self.q})[{' + '.join(terms) or '0'}]"


def field_arithmetic(
    q: int,
    op: str,
    a: Union[int, FieldElement],
    b: Union[int, FieldElement, None] = None,
) -> FieldElement:
    """
    One field operation in GF(q).

    Args:
        q (int): The field order.
        op (str): One of `add`, `mul`, `inv`, `neg`.
        a (Union[int, FieldElement]): The first operand (an index or an
            element).
        b (Union[int, FieldElement, None]): The second operand, for `add`
            and `mul`.

    Raises:
        GroupDomainError: For an unsupported q, an unknown operation, a
            missing operand, or the inverse of 0.

    Returns:
        FieldElement: The result.
    """

    field = get_field(q)
    x = a.index if isinstance(a, FieldElement) else a
    if op in ("inv", "neg"):
        return field.element(field.inv(x) if op == "inv" else field.neg(x))
    if op not in ("add", "mul"):
        raise GroupDomainError(f"Unknown field operation {op!r}")
    if b is None:
        raise GroupDomainError(f"Operation {op!r} needs two operands")
    y = b.index if isinstance(b, FieldElement) else b
    return field.element(field.add(x, y) if op == "add" else field.mul(x, y))
