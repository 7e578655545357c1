import csv
from functools import lru_cache
import logging
from pathlib import Path
from typing import Callable, Dict, List, Optional

from .exceptions import GroupDomainError, GroupError
from .fields import GaloisField, get_field
from .groups import Group, direct_product, group_from_generators, power_wreath
from .models import DEFAULT_CAPS, Caps, CatalogEntry, Family
from .permutations import Permutation

logger = logging.getLogger(__name__)

# Construct the path to the CSV file dynamically
script_location = Path(__file__).resolve().parent
csv_path_catalog = script_location / "data" / "catalog.csv"

INFINITY = 0


def _group(
    gens: List[Permutation], degree: int, caps: Caps, name: str
) -> Group:
    return group_from_generators(
        gens or [Permutation.identity(degree)], caps, name
    )


def trivial(caps: Caps = DEFAULT_CAPS) -> Group:
    return _group([], 1, caps, "trivial")


def cyclic(n: int, caps: Caps = DEFAULT_CAPS) -> Group:
    if n < 1:
        raise GroupDomainError(f"cyclic needs n >= 1, got {n}")
    gens = [Permutation.from_cycles(n, tuple(range(n)))] if n > 1 else []
    return _group(gens, n, caps, f"C{n}")


def dihedral(n: int, caps: Caps = DEFAULT_CAPS) -> Group:
    """The dihedral group of order 2n on the n vertices of a polygon."""

    if n < 3:
        raise GroupDomainError(f"dihedral needs n >= 3, got {n}")
    rotation = Permutation.from_cycles(n, tuple(range(n)))
    reflection = Permutation(-i % n for i in range(n))
    return _group([rotation, reflection], n, caps, f"D{2 * n}")


def symmetric(n: int, caps: Caps = DEFAULT_CAPS) -> Group:
    if n < 1:
        raise GroupDomainError(f"symmetric needs n >= 1, got {n}")
    gens = []
    if n > 1:
        gens = [
            Permutation.from_cycles(n, (0, 1)),
            Permutation.from_cycles(n, tuple(range(n))),
        ]
    return _group(gens, n, caps, f"S{n}")


def alternating(n: int, caps: Caps = DEFAULT_CAPS) -> Group:
    """A_n from `(0 1 2)` and an n-cycle (n odd) or an (n-1)-cycle."""

    if n < 1:
        raise GroupDomainError(f"alternating needs n >= 1, got {n}")
    gens = []
    if n >= 3:
        long_cycle = tuple(range(n)) if n % 2 else tuple(range(1, n))
        gens = [
            Permutation.from_cycles(n, (0, 1, 2)),
            Permutation.from_cycles(n, long_cycle),
        ]
    return _group(gens, n, caps, f"A{n}")


def projective_point(F: GaloisField, z: Optional[int]) -> int:
    """Point number of z on the projective line, None standing for infinity."""

    return INFINITY if z is None else 1 + z


def mobius(
    F: GaloisField, a: int, b: int, c: int, d: int
) -> Permutation:
    """
    The map `z -> (a z + b) / (c z + d)` on the `q + 1` projective points.

    Raises:
        GroupDomainError: If `ad - bc = 0`.
    """

    if F.add(F.mul(a, d), F.neg(F.mul(b, c))) == 0:
        raise GroupDomainError("A singular matrix induces no permutation")
    images = [0] * (F.q + 1)
    images[INFINITY] = (
        INFINITY if c == 0 else projective_point(F, F.mul(a, F.inv(c)))
    )
    for z in range(F.q):
        numerator = F.add(F.mul(a, z), b)
        denominator = F.add(F.mul(c, z), d)
        image = (
            None
            if denominator == 0
            else F.mul(numerator, F.inv(denominator))
        )
        images[projective_point(F, z)] = projective_point(F, image)
    return Permutation(images)


def frobenius_map(F: GaloisField) -> Permutation:
    images = [INFINITY]
    images += [projective_point(F, F.frobenius(z)) for z in range(F.q)]
    return Permutation(images)


def _projective_generators(F: GaloisField, scale: int) -> List[Permutation]:
    one, zero = 1, 0
    return [
        mobius(F, one, one, zero, one),
        mobius(F, scale, zero, zero, one),
        mobius(F, zero, F.neg(one), one, zero),
    ]


def psl2(q: int, caps: Caps = DEFAULT_CAPS) -> Group:
    """
    PSL(2,q) on the projective line, from `z -> z + 1`, `z -> a^2 z` and
    `z -> -1/z`, with a the primitive element of smallest index.
    """

    F = get_field(q)
    scale = F.mul(F.primitive, F.primitive)
    return _group(
        _projective_generators(F, scale), q + 1, caps, f"PSL(2,{q})"
    )


def pgl2(q: int, caps: Caps = DEFAULT_CAPS) -> Group:
    F = get_field(q)
    return _group(
        _projective_generators(F, F.primitive), q + 1, caps, f"PGL(2,{q})"
    )


def pgammal2(q: int, caps: Caps = DEFAULT_CAPS) -> Group:
    """PGL(2,q) extended by the field automorphism `z -> z^p`."""

    F = get_field(q)
    gens = _projective_generators(F, F.primitive) + [frobenius_map(F)]
    return _group(gens, q + 1, caps, f"PGammaL(2,{q})")


def _int(value: str, family: Family) -> int:
    try:
        return int(value)
    except ValueError as error:
        raise GroupDomainError(
            f"{family.value} expects an integer parameter, got {value!r}"
        ) from error


_INTEGER_BUILDERS: Dict[Family, Callable[[int, Caps], Group]] = {
    Family.cyclic: cyclic,
    Family.dihedral: dihedral,
    Family.symmetric: symmetric,
    Family.alternating: alternating,
    Family.psl2: psl2,
    Family.pgl2: pgl2,
    Family.pgammal2: pgammal2,
}


def build(
    family: str, *params: str, caps: Optional[Caps] = None
) -> Group:
    """
    Build a group of a named family.

    Products take catalog keys as parameters: `direct_product A B` and
    `power_wreath L k top`, where `top` must act on k points.

    Args:
        family (str): A `Family` value such as `psl2` or `alternating`.
        *params (str): The family parameters.
        caps (Optional[Caps]): Size limits; the defaults when omitted.

    Raises:
        GroupDomainError: For an unknown family, bad parameters or an
            unsupported field order.
        CapExceededError: If the group is too large.

    Returns:
        Group: The group in its natural action.
    """

    caps = caps or DEFAULT_CAPS
    try:
        kind = Family(family)
    except ValueError as error:
        raise GroupDomainError(f"Unknown group family {family!r}") from error

    if kind is Family.trivial:
        return trivial(caps)
    if kind in _INTEGER_BUILDERS:
        if len(params) != 1:
            raise GroupDomainError(f"{family} takes exactly one parameter")
        return _INTEGER_BUILDERS[kind](_int(params[0], kind), caps)
    if kind is Family.direct_product:
        if len(params) != 2:
            raise GroupDomainError("direct_product takes two catalog keys")
        A, B = (get_catalog_group(key, caps) for key in params)
        return direct_product(A, B, name=f"{A.name}x{B.name}")
    if len(params) != 3:
        raise GroupDomainError("power_wreath takes L, k and top")
    L = get_catalog_group(params[0], caps)
    top = get_catalog_group(params[2], caps)
    k = _int(params[1], kind)
    return power_wreath(L, k, top, name=f"{L.name}wr{top.name}")


def _parse_flags(flags: str) -> dict:
    parsed: dict = {}
    for flag in filter(None, (f.strip() for f in flags.split(","))):
        if flag == "simple":
            parsed["simple"] = True
        elif flag == "exception":
            parsed["exception"] = True
        elif flag.startswith("lie="):
            parsed["lie_type_characteristic"] = int(flag[4:])
        else:
            raise GroupError(f"Unknown catalog flag {flag!r}")
    return parsed


@lru_cache(maxsize=1)
def get_catalog_entries() -> List[CatalogEntry]:
    """
    Reads the catalog manifest from `data/catalog.csv` and returns one
    CatalogEntry per row.

    The CSV file is `;`-delimited with columns `key`, `family`, `params`
    (comma-separated), `expected_order` and `flags` (comma-separated, among
    `simple`, `exception` and `lie=p`).

    Returns:
        List[CatalogEntry]: The entries in file order.
    """

    entries = []
    with open(csv_path_catalog, mode="r", encoding="utf-8") as csv_file:
        reader = csv.DictReader(csv_file, delimiter=";")
        for row in reader:
            entries.append(
                CatalogEntry(
                    key=row["key"],
                    family=row["family"],
                    params=(
                        row["params"].split(",") if row.get("params") else []
                    ),
                    expected_order=int(row["expected_order"]),
                    **_parse_flags(row.get("flags") or ""),
                )
            )
    return entries


def get_catalog_entry(key: str) -> CatalogEntry:
    """
    Look up one catalog entry.

    Raises:
        GroupDomainError: If no entry has this key.
    """

    for entry in get_catalog_entries():
        if entry.key == key:
            return entry
    raise GroupDomainError(f"Catalog group {key!r} not found.")


@lru_cache(maxsize=None)
def _catalog_group(key: str, caps: Caps) -> Group:
    entry = get_catalog_entry(key)
    group = build(entry.family.value, *entry.params, caps=caps)
    if group.order != entry.expected_order:
        raise GroupError(
            f"Catalog group {key} has order {group.order}, expected "
            f"{entry.expected_order}"
        )
    group.name = key
    logger.debug("catalog group %s built, order %d", key, group.order)
    return group


def get_catalog_group(key: str, caps: Optional[Caps] = None) -> Group:
    """
    Build a catalog group and check it against its expected order.

    Results are cached per `(key, caps)`.

    Raises:
        GroupDomainError: If the key is unknown.
        GroupError: If the built order differs from `expected_order`.
    """

    return _catalog_group(key, caps or DEFAULT_CAPS)
