from datetime import datetime, timezone
import json
import logging
from pathlib import Path
from typing import Dict, Iterable, List, Optional, Tuple, Union

import pandas as pd
from pydantic import ValidationError

from . import __version__
from .counting import frobenius_ratio, phi_ratio, sum_identity_check
from .exceptions import GroupError, GroupFormatError
from .groups import Group
from .models import CensusFormat, CensusRecord
from .spr import check_op_criterion, loose_bound_violations, spr_group
from .utils import format_ratio, prime_divisors

logger = logging.getLogger(__name__)

TSV_COLUMNS = [
    "group",
    "order",
    "spr_total",
    "frobenius",
    "phi",
    "checks",
    "version",
    "timestamp",
]


def census_record(G: Group, aut: Optional[Group] = None) -> CensusRecord:
    """
    Collect the invariants of G into one census record.

    Args:
        G (Group): A group with an element store.
        aut (Optional[Group]): A group containing G as a normal subgroup,
            standing for `Aut(G)`; enables `phi`.

    Returns:
        CensusRecord: spr(G), the Frobenius ratio for every prime dividing
            `|G|`, phi, and the outcome of the per-group checks.
    """

    primes = prime_divisors(G.order)
    checks: Dict[str, bool] = {}
    for p in primes:
        checks[f"sum_identity_{p}"] = sum_identity_check(G, p).holds
    checks["op_criterion"] = not check_op_criterion(G)
    checks["loose_bound"] = not loose_bound_violations(G)
    return CensusRecord(
        group=G.name,
        order=G.order,
        spr_total=spr_group(G, pairs=False).spr_total,
        frobenius={p: frobenius_ratio(G, p) for p in primes},
        phi=phi_ratio(G, aut) if aut is not None else None,
        checks=checks,
        version=__version__,
        timestamp=datetime.now(timezone.utc),
    )


def _tsv_row(record: CensusRecord) -> List[str]:
    return [
        record.group,
        str(record.order),
        format_ratio(record.spr_total),
        ",".join(
            f"{p}:{format_ratio(r)}"
            for p, r in sorted(record.frobenius.items())
        ),
        format_ratio(record.phi) if record.phi is not None else "",
        ",".join(f"{k}={int(v)}" for k, v in sorted(record.checks.items())),
        record.version,
        record.timestamp.isoformat(),
    ]


def format_record(record: CensusRecord, fmt: CensusFormat) -> str:
    if fmt is CensusFormat.json_lines:
        return record.model_dump_json()
    return "\t".join(_tsv_row(record))


def append_records(
    path: Union[str, Path],
    records: Iterable[CensusRecord],
    fmt: CensusFormat = CensusFormat.tsv,
) -> int:
    """
    Append census records to a file, one per line.

    A new or empty tsv file first gets the header row.

    Raises:
        GroupError: If the file cannot be written.

    Returns:
        int: The number of records written.
    """

    path = Path(path)
    lines = [format_record(record, fmt) for record in records]
    try:
        fresh = not path.exists() or path.stat().st_size == 0
        with open(path, mode="a", encoding="utf-8") as census_file:
            if fresh and fmt is CensusFormat.tsv:
                census_file.write("\t".join(TSV_COLUMNS) + "\n")
            for line in lines:
                census_file.write(line + "\n")
    except OSError as error:
        raise GroupError(
            f"cannot write census file {path}: {error}"
        ) from error
    return len(lines)


def _split_pairs(value: str, separator: str) -> Dict[str, str]:
    pairs = {}
    for item in filter(None, value.split(",")):
        key, _, rest = item.partition(separator)
        pairs[key] = rest
    return pairs


def _read_json_lines(text: str) -> Tuple[List[CensusRecord], int]:
    records, warnings = [], 0
    for line in text.splitlines():
        if not line.strip():
            continue
        try:
            records.append(CensusRecord.model_validate_json(line))
        except ValidationError:
            warnings += 1
    return records, warnings


def _read_tsv(path: Path) -> Tuple[List[CensusRecord], int]:
    bad_lines: List[List[str]] = []

    def skip(line: List[str]) -> None:
        bad_lines.append(line)
        return None

    try:
        df = pd.read_csv(
            path,
            sep="\t",
            dtype=str,
            keep_default_na=False,
            engine="python",
            on_bad_lines=skip,
        )
    except pd.errors.EmptyDataError:
        return [], 0
    df = df.fillna("")

    records, warnings = [], len(bad_lines)
    for row in df.to_dict(orient="records"):
        try:
            records.append(
                CensusRecord(
                    group=row["group"],
                    order=row["order"],
                    spr_total=row["spr_total"],
                    frobenius=_split_pairs(row["frobenius"], ":"),
                    phi=row["phi"] or None,
                    checks={
                        k: v == "1"
                        for k, v in _split_pairs(row["checks"], "=").items()
                        if v in ("0", "1")
                    },
                    version=row["version"],
                    timestamp=row["timestamp"],
                )
            )
        except (ValidationError, KeyError):
            warnings += 1
    return records, warnings


def read_census(
    path: Union[str, Path], fmt: CensusFormat = CensusFormat.tsv
) -> Tuple[List[CensusRecord], int]:
    """
    Read a census file, skipping malformed lines.

    Args:
        path (Union[str, Path]): The census file.
        fmt (CensusFormat): Its format.

    Raises:
        GroupFormatError: If the file cannot be read.

    Returns:
        Tuple[List[CensusRecord], int]: The records and the number of lines
            skipped.
    """

    path = Path(path)
    try:
        if fmt is CensusFormat.json_lines:
            records, warnings = _read_json_lines(
                path.read_text(encoding="utf-8")
            )
        else:
            records, warnings = _read_tsv(path)
    except OSError as error:
        raise GroupFormatError(f"cannot read {path}: {error}") from error
    if warnings:
        logger.warning(
            "skipped %d malformed census lines in %s", warnings, path
        )
    return records, warnings


def dump_json(record: CensusRecord) -> str:
    """The record's mathematical fields as sorted JSON."""

    return json.dumps(
        record.model_dump(mode="json", exclude={"timestamp", "version"}),
        sort_keys=True,
    )
