from fractions import Fraction
from typing import Annotated, Any, List

from pydantic import PlainSerializer, PlainValidator, WithJsonSchema

from ..permutations import Permutation
from ..utils import format_ratio


def _to_fraction(value: Any) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int) and not isinstance(value, bool):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as error:
            raise ValueError(f"{value!r} is not an exact ratio") from error
    raise ValueError(f"{value!r} is not an exact ratio")


def _to_permutation(value: Any) -> Permutation:
    if isinstance(value, Permutation):
        return value
    if isinstance(value, (list, tuple)):
        return Permutation(value)
    raise ValueError(f"{value!r} is not an image sequence")


def _images(perm: Permutation) -> List[int]:
    return list(perm)


ExactRatio = Annotated[
    Fraction,
    PlainValidator(_to_fraction),
    PlainSerializer(format_ratio, return_type=str),
    WithJsonSchema({"type": "string", "pattern": r"^-?\d+(/\d+)?$"}),
]

PermutationField = Annotated[
    Permutation,
    PlainValidator(_to_permutation),
    PlainSerializer(_images, return_type=List[int]),
    WithJsonSchema({"type": "array", "items": {"type": "integer"}}),
]
