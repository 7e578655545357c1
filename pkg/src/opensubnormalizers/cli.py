"""
The `subnorm` command line.

Every command reads one group, given by `--name` (a catalog key) or
`--file` (the group text format), and prints its result on stdout. Exit
status is 0 on success, 1 when a check fails and 2 on usage errors, cap
violations and malformed input.
"""

import argparse
import json
import logging
import os
import sys
from typing import Callable, Dict, List, Optional, Sequence

from pydantic import BaseModel, ValidationError

from .catalog import get_catalog_group
from .census import append_records, census_record, format_record
from .counting import count_p_elements, max_centralizer_ratio, phi_ratio
from .exceptions import GroupError
from .groupio import format_element, parse_element, read_group_file
from .groups import Group, conjugacy_classes
from .models import Caps, CensusFormat, VerifyConfig
from .spr import spr_element, spr_group
from .subnormal import casolo_report, subnormalizer_order_fast
from .sylow import sylow
from .utils import format_ratio, is_prime_power
from .verify import CHECKS, run_checks

logger = logging.getLogger(__name__)

CENSUS_ENV = "SUBNORM_CENSUS"

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2


class UsageError(Exception):
    """A command line that parses but cannot run."""


def _caps(args: argparse.Namespace) -> Caps:
    defaults = Caps()
    max_order = args.max_order or defaults.max_order
    max_exhaustive = args.max_exhaustive or min(
        defaults.max_exhaustive, max_order
    )
    return Caps(
        max_order=max_order,
        max_exhaustive=max_exhaustive,
        max_pairs=args.max_pairs or defaults.max_pairs,
    )


def _load_group(args: argparse.Namespace) -> Group:
    caps = _caps(args)
    if args.file:
        return read_group_file(args.file, caps)
    if args.name:
        return get_catalog_group(args.name, caps)
    raise UsageError("give the group with --name or --file")


def _json_line(item: object) -> str:
    if isinstance(item, BaseModel):
        return item.model_dump_json(by_alias=True)
    return json.dumps(item, sort_keys=True)


def _emit(lines: Sequence[str], data: object, fmt: str) -> None:
    """
    Print the tab-separated `lines`, or `data` as JSON lines, one line per
    item when `data` is a list.
    """

    if CensusFormat(fmt) is CensusFormat.tsv:
        for line in lines:
            print(line)
        return
    for item in data if isinstance(data, list) else [data]:
        print(_json_line(item))


def cmd_order(args: argparse.Namespace) -> int:
    G = _load_group(args)
    _emit([str(G.order)], {"order": G.order}, args.format)
    return EXIT_OK


def cmd_classes(args: argparse.Namespace) -> int:
    G = _load_group(args)
    classes = conjugacy_classes(G)
    rows = [
        {
            "representative": format_element(cls.representative),
            "size": cls.size,
            "element_order": cls.element_order,
            "centralizer_order": cls.centralizer_order,
        }
        for cls in classes
    ]
    lines = [
        f"{row['element_order']}\t{row['size']}\t{row['representative']}"
        for row in rows
    ]
    _emit(lines, rows, args.format)
    return EXIT_OK


def cmd_sylow(args: argparse.Namespace) -> int:
    G = _load_group(args)
    system = sylow(G, args.p)
    data = {
        "p": system.prime,
        "sylow_order": system.one_sylow.order,
        "count": system.count,
        "normalizer_order": system.normalizer_order,
    }
    lines = [f"{key}\t{value}" for key, value in data.items()]
    _emit(lines, data, args.format)
    return EXIT_OK


def cmd_spr(args: argparse.Namespace) -> int:
    G = _load_group(args)
    report = spr_group(G, pairs=args.pairs)
    lines = [format_ratio(report.spr_total)]
    if args.classes:
        lines += [
            f"{row.element_order}\t{row.class_size}\t"
            f"{format_ratio(row.spr)}\t{format_element(row.representative)}"
            for row in report.rows
        ]
    if args.pairs:
        lines += [
            f"dn\t{format_ratio(report.dn)}",
            f"ds\t{format_ratio(report.ds)}",
            f"implication_chain\t{int(bool(report.implication_chain_holds))}",
        ]
    _emit(lines, report, args.format)
    return EXIT_OK


def cmd_spr_element(args: argparse.Namespace) -> int:
    G = _load_group(args)
    x = parse_element(args.x, G.degree)
    value = spr_element(G, x)
    _emit(
        [format_ratio(value)],
        {"x": format_element(x), "spr": format_ratio(value)},
        args.format,
    )
    return EXIT_OK


def cmd_subnormalizer(args: argparse.Namespace) -> int:
    G = _load_group(args)
    x = parse_element(args.x, G.degree)
    p = None if x.is_identity() else is_prime_power(G.element_order(x))
    if p is None:
        order = subnormalizer_order_fast(G, x)
        _emit([str(order)], {"subnormalizer_order": order}, args.format)
        return EXIT_OK

    report = casolo_report(G, x, p)
    lines = [
        str(report.subnormalizer_order_bruteforce),
        f"lambda\t{report.lambda_}",
        f"alpha\t{report.alpha}",
        f"n_p\t{report.n_p}",
        f"normalizer_order\t{report.normalizer_order}",
        f"centralizer_order\t{report.centralizer_order}",
    ]
    _emit(lines, report, args.format)
    return EXIT_OK if report.identities_hold else EXIT_CHECK_FAILED


def cmd_count(args: argparse.Namespace) -> int:
    G = _load_group(args)
    census = count_p_elements(G, args.p)
    lines = [
        str(census.count),
        f"p_part\t{census.p_part}",
        f"ratio\t{format_ratio(census.ratio)}",
    ]
    _emit(lines, census, args.format)
    return EXIT_OK


def cmd_phi(args: argparse.Namespace) -> int:
    G = _load_group(args)
    aut = get_catalog_group(args.aut, G.caps)
    value = phi_ratio(G, aut)
    ratio = max_centralizer_ratio(G, aut)
    data = {
        "phi": format_ratio(value),
        "c": ratio.c,
        "order_over_c": format_ratio(ratio.ratio),
    }
    lines = [format_ratio(value), f"c\t{ratio.c}"]
    lines.append(f"order_over_c\t{format_ratio(ratio.ratio)}")
    _emit(lines, data, args.format)
    return EXIT_OK


def cmd_census(args: argparse.Namespace) -> int:
    path = args.census_file or os.environ.get(CENSUS_ENV)
    if not path:
        raise UsageError(f"give --census-file or set {CENSUS_ENV}")
    G = _load_group(args)
    aut = get_catalog_group(args.aut, G.caps) if args.aut else None
    record = census_record(G, aut)
    fmt = CensusFormat(args.format)
    append_records(path, [record], fmt)
    print(format_record(record, fmt))
    return EXIT_OK if all(record.checks.values()) else EXIT_CHECK_FAILED


def cmd_verify_paper(args: argparse.Namespace) -> int:
    config = VerifyConfig(
        caps=_caps(args),
        max_bruteforce=args.max_bruteforce,
        max_pair_check=args.max_pair_check,
        jobs=args.jobs,
    )
    results = run_checks(config, args.check or None)
    passed = sum(result.passed for result in results)
    lines = []
    for result in results:
        lines.append(f"{'PASS' if result.passed else 'FAIL'}\t{result.name}")
        lines += [f"\t{detail}" for detail in result.details]
    lines.append(f"{passed}/{len(results)} checks passed")
    _emit(lines, list(results), args.format)
    if passed == len(results):
        return EXIT_OK
    return EXIT_CHECK_FAILED


def _positive(value: str) -> int:
    number = int(value)
    if number < 1:
        raise argparse.ArgumentTypeError(f"{value} is not positive")
    return number


def build_parser() -> argparse.ArgumentParser:
    general = argparse.ArgumentParser(add_help=False)
    general.add_argument("--max-order", type=_positive)
    general.add_argument("--max-exhaustive", type=_positive)
    general.add_argument("--max-pairs", type=_positive)
    general.add_argument(
        "--format",
        choices=[fmt.value for fmt in CensusFormat],
        default=CensusFormat.tsv.value,
        help="tab-separated text or one JSON object per line",
    )
    general.add_argument(
        "--jobs",
        type=_positive,
        default=1,
        help="worker processes for verify-paper",
    )
    general.add_argument(
        "--verbose", action="store_true", help="log debug output on stderr"
    )

    common = argparse.ArgumentParser(add_help=False, parents=[general])
    source = common.add_mutually_exclusive_group()
    source.add_argument("--name", help="catalog key, e.g. A5 or PSL(2,7)")
    source.add_argument("--file", help="group file (`degree n` + rows)")

    parser = argparse.ArgumentParser(
        prog="subnorm",
        description=(
            "Subnormalizers, subnormal probabilities and p-element "
            "censuses of finite permutation groups."
        ),
    )
    commands = parser.add_subparsers(dest="command", required=True)

    commands.add_parser("order", parents=[common], help="group order")
    commands.add_parser(
        "classes", parents=[common], help="conjugacy classes"
    )
    sylow_parser = commands.add_parser(
        "sylow", parents=[common], help="Sylow p-subgroup data"
    )
    sylow_parser.add_argument("-p", type=int, required=True)

    spr_parser = commands.add_parser(
        "spr", parents=[common], help="subnormal probability spr(G)"
    )
    spr_parser.add_argument(
        "--classes", action="store_true", help="also list class values"
    )
    spr_parser.add_argument(
        "--pairs", action="store_true", help="also compute dn and ds"
    )

    for command, help_text in (
        ("spr-element", "spr_G(x) of one element"),
        ("subnormalizer", "order of the subnormalizer S_G(x)"),
    ):
        element_parser = commands.add_parser(
            command, parents=[common], help=help_text
        )
        element_parser.add_argument(
            "-x",
            required=True,
            help="1-based images `2 3 1 4 5` or cycles `(1 2 3)`",
        )

    count_parser = commands.add_parser(
        "count", parents=[common], help="number of p-elements"
    )
    count_parser.add_argument("-p", type=int, required=True)

    phi_parser = commands.add_parser(
        "phi", parents=[common], help="phi(L) and |L|/c"
    )
    phi_parser.add_argument(
        "--aut", required=True, help="catalog key of the automorphism group"
    )

    census_parser = commands.add_parser(
        "census", parents=[common], help="append a census record"
    )
    census_parser.add_argument("--aut", help="catalog key enabling phi")
    census_parser.add_argument(
        "--census-file", help=f"census path, default ${CENSUS_ENV}"
    )

    verify_parser = commands.add_parser(
        "verify-paper", parents=[general], help="run the acceptance checks"
    )
    verify_parser.add_argument(
        "--max-bruteforce",
        type=_positive,
        default=VerifyConfig().max_bruteforce,
    )
    verify_parser.add_argument(
        "--max-pair-check",
        type=_positive,
        default=VerifyConfig().max_pair_check,
    )
    verify_parser.add_argument(
        "--check",
        action="append",
        choices=list(CHECKS),
        help="run only this check (repeatable)",
    )
    return parser


COMMANDS: Dict[str, Callable[[argparse.Namespace], int]] = {
    "order": cmd_order,
    "classes": cmd_classes,
    "sylow": cmd_sylow,
    "spr": cmd_spr,
    "spr-element": cmd_spr_element,
    "subnormalizer": cmd_subnormalizer,
    "count": cmd_count,
    "phi": cmd_phi,
    "census": cmd_census,
    "verify-paper": cmd_verify_paper,
}


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exit_:
        return int(exit_.code or 0)

    logging.basicConfig(
        stream=sys.stderr,
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        return COMMANDS[args.command](args)
    except (GroupError, UsageError, ValidationError) as error:
        print(f"{parser.prog} {args.command}: {error}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
