from pathlib import Path
from typing import List, Optional, Union

from .exceptions import GroupFormatError
from .groups import Group, group_from_generators
from .models import Caps
from .permutations import Permutation


def parse_group(
    text: str, caps: Optional[Caps] = None, name: Optional[str] = None
) -> Group:
    """
    Parse a group from its text form.

    The first non-comment line is `degree n`; every following non-comment
    line lists one generator as the images of the points `1..n`. Lines
    starting with `#` and blank lines are skipped. A file without generator
    lines describes the trivial group.

    Args:
        text (str): The group text.
        caps (Optional[Caps]): Size limits; the defaults when omitted.
        name (Optional[str]): A label for reports.

    Raises:
        GroupFormatError: For a missing or malformed degree line, a row of
            the wrong length, a non-integer entry or a row that is not a
            bijection; the error carries the 1-based line number.

    Returns:
        Group: The generated group.
    """

    degree: Optional[int] = None
    generators: List[Permutation] = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if degree is None:
            if len(fields) != 2 or fields[0] != "degree":
                raise GroupFormatError("expected `degree n`", number)
            try:
                degree = int(fields[1])
            except ValueError:
                raise GroupFormatError(
                    f"degree {fields[1]!r} is not an integer", number
                ) from None
            if degree < 1:
                raise GroupFormatError("degree must be positive", number)
            continue
        if len(fields) != degree:
            raise GroupFormatError(
                f"expected {degree} images, found {len(fields)}", number
            )
        try:
            images = [int(field) - 1 for field in fields]
        except ValueError:
            raise GroupFormatError("images must be integers", number) from None
        if sorted(images) != list(range(degree)):
            raise GroupFormatError(
                f"images are not a bijection on 1..{degree}", number
            )
        generators.append(Permutation(images))

    if degree is None:
        raise GroupFormatError("missing `degree n` line")
    return group_from_generators(
        generators or [Permutation.identity(degree)], caps, name
    )


def serialize_group(G: Group) -> str:
    """
    The text form of G: its generators, sorted by image sequence, 1-based.
    """

    lines = [f"degree {G.degree}"]
    lines += [" ".join(str(i + 1) for i in g) for g in sorted(G.generators)]
    return "\n".join(lines) + "\n"


def read_group_file(
    path: Union[str, Path], caps: Optional[Caps] = None
) -> Group:
    """
    Read a group file.

    Raises:
        GroupFormatError: If the file cannot be read or is malformed.
    """

    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as error:
        raise GroupFormatError(f"cannot read {path}: {error}") from error
    return parse_group(text, caps, name=path.stem)


def parse_element(text: str, degree: int) -> Permutation:
    """
    Parse one element, either as 1-based images (`2 3 1 4 5` or `2,3,1,4,5`)
    or in cycle notation (`(1 2 3)(4 5)`, `()` for the identity).

    Raises:
        GroupFormatError: If the text is neither form or not a bijection on
            `1..degree`.
    """

    text = text.strip()
    if text.startswith("("):
        cycles = []
        for chunk in text.replace(",", " ").split(")"):
            chunk = chunk.strip()
            if not chunk:
                continue
            if not chunk.startswith("("):
                raise GroupFormatError(f"malformed cycle in {text!r}")
            try:
                points = tuple(int(p) - 1 for p in chunk[1:].split())
            except ValueError:
                raise GroupFormatError(
                    f"cycle entries must be integers: {text!r}"
                ) from None
            if len(points) > 1:
                cycles.append(points)
        try:
            return Permutation.from_cycles(degree, *cycles)
        except ValueError as error:
            raise GroupFormatError(str(error)) from error

    fields = text.replace(",", " ").split()
    try:
        images = [int(field) - 1 for field in fields]
    except ValueError:
        raise GroupFormatError(f"images must be integers: {text!r}") from None
    if sorted(images) != list(range(degree)):
        raise GroupFormatError(
            f"{text!r} is not a bijection on 1..{degree}"
        )
    return Permutation(images)


def format_element(x: Permutation) -> str:
    """Cycle notation on 1-based points, `()` for the identity."""

    return "".join(
        "(" + " ".join(str(p + 1) for p in cycle) + ")"
        for cycle in x.cycles()
    ) or "()"
