#!/usr/bin/env python3
"""
Poset Toolkit

Command line front end for finite posets:
- gen / show / dot: generators, structural queries, Hasse diagrams
- partitions / lattice / linext: monotone and regular partitions, their lattices
- sum / prod: coproducts and products of posets and forests
- bell / casestudy: Bell numbers and the chain and M-family experiments

Usage:
    python -m src.poset_toolkit gen chain 4
    python -m src.poset_toolkit partitions --kind monotone data/posets/b2.poset
    python -m src.poset_toolkit lattice --kind regular --whitney data/posets/p4.poset
"""
import argparse
import logging
import sys
from typing import List, Optional

from dotenv import load_dotenv

from .case_studies import bell, chains_case_study, m_family_formula_table, mfamily_case_study, rows_to_frame
from .category import forest_sum, poset_sum, product
from .common.config import get_settings
from .common.data_exporter import export_tsv, format_poset, read_poset, save_json, write_poset, write_text
from .common.errors import CaseStudyError, PosetToolkitError, UsageError
from .common.schema import Category, PartitionKind, Poset
from .lattice import (
    atoms_positions,
    build_lattice,
    coatoms_positions,
    is_ranked,
    lattice_dot,
    lattice_statistics,
    moebius,
    whitney_levels,
    whitney_numbers,
)
from .partitions import describe_partition, linear_extensions, monotone_partitions, quotient_of, regular_partitions
from .posets import antichain, boolean_algebra, chain, hasse_dot, m_poset, relation

# Load environment variables
load_dotenv()

# Configure logging
logging.basicConfig(
    level=logging.INFO, format="%(asctime)s - %(name)s - %(levelname)s - %(message)s"
)
logger = logging.getLogger(__name__)

GENERATORS = {
    "chain": chain,
    "antichain": antichain,
    "boolean": boolean_algebra,
    "m-family": m_poset,
}


class ToolkitArgumentParser(argparse.ArgumentParser):
    """Argument errors become UsageError instead of exiting."""

    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _ints(values) -> str:
    return " ".join(str(v) for v in values)


def _bool(value: bool) -> str:
    return "true" if value else "false"


def cmd_gen(args) -> int:
    p = GENERATORS[args.family](args.n)
    write_poset(p, args.output)
    return 0


def cmd_show(args) -> int:
    for path in args.files:
        p = read_poset(path)
        if args.json:
            save_json(p)
        elif args.elements:
            write_text("".join(f"v {v}\n" for v in p.vertices))
        elif args.relation:
            lines = [f"v {v}" for v in p.vertices] + [f"r {a} {b}" for a, b in relation(p)]
            write_text("".join(line + "\n" for line in lines))
        else:
            write_text(format_poset(p))
    return 0


def cmd_dot(args) -> int:
    posets = [read_poset(path) for path in args.files]
    write_text(hasse_dot(posets, args.columns, titles=[str(path) for path in args.files]))
    return 0


def _enumerate(kind: str, p: Poset, force: bool):
    if PartitionKind(kind) == PartitionKind.MONOTONE:
        return monotone_partitions(p, force=force)
    return regular_partitions(p, force=force)


def _selected(positions: Optional[List[int]], total: int) -> List[int]:
    if not positions:
        return list(range(1, total + 1))
    bad = [k for k in positions if not 1 <= k <= total]
    if bad:
        raise UsageError(f"--select positions out of range 1..{total}: {bad}")
    return positions


def cmd_partitions(args) -> int:
    p = read_poset(args.file)
    items, report = _enumerate(args.kind, p, args.force)
    if args.dot:
        chosen = _selected(args.select, len(items))
        quotients = [quotient_of(items[k - 1], p).poset for k in chosen]
        write_text(hasse_dot(quotients, args.columns, titles=[str(k) for k in chosen], name="partitions"))
        return 0
    write_text(report.trace_line() + "\n")
    if args.list and not args.count:
        for k in _selected(args.select, len(items)):
            write_text(f"{k}: {describe_partition(items[k - 1], p)}\n")
    return 0


def cmd_lattice(args) -> int:
    p = read_poset(args.file)
    items, report = _enumerate(args.kind, p, args.force)
    logger.info(report.trace_line())
    lattice = build_lattice(items, args.kind, base=p)
    if args.export:
        export_tsv(lattice_statistics(lattice), args.export)

    if args.moebius:
        write_text(_ints(moebius(lattice)) + "\n")
    elif args.whitney:
        write_text(_ints(whitney_numbers(lattice)) + "\n")
    elif args.levels:
        write_text(_ints(whitney_levels(lattice)) + "\n")
    elif args.atoms:
        write_text(_ints(atoms_positions(lattice)) + "\n")
    elif args.coatoms:
        write_text(_ints(coatoms_positions(lattice)) + "\n")
    elif args.ranked:
        write_text(_bool(is_ranked(lattice)) + "\n")
    elif args.dot:
        write_text(lattice_dot(lattice))
    elif not args.export:
        export_tsv(lattice_statistics(lattice))
    return 0


def cmd_linext(args) -> int:
    p = read_poset(args.file)
    extensions = linear_extensions(p)
    if args.count:
        write_text(f"{len(extensions)}\n")
    elif args.dot:
        write_text(hasse_dot([q.poset for q in extensions], args.columns, name="extensions"))
    else:
        for k, q in enumerate(extensions, 1):
            write_text(f"{k}: {'<'.join(q.poset.vertices)}\n")
    return 0


def _emit_poset(p: Poset, args) -> None:
    if args.dot:
        write_text(hasse_dot([p]), args.output)
    else:
        write_poset(p, args.output)


def cmd_sum(args) -> int:
    posets = [read_poset(path) for path in args.files]
    if Category(args.category) == Category.FOREST:
        result = forest_sum(posets)
    else:
        result = poset_sum(posets)
    _emit_poset(result, args)
    return 0


def cmd_prod(args) -> int:
    posets = [read_poset(path) for path in args.files]
    _emit_poset(product(args.category, posets), args)
    return 0


def cmd_bell(args) -> int:
    if args.n < 0:
        raise UsageError(f"bell needs N >= 0, got {args.n}")
    if args.table:
        write_text(_ints(bell(k) for k in range(args.n + 1)) + "\n")
    else:
        write_text(f"{bell(args.n)}\n")
    return 0


def cmd_casestudy(args) -> int:
    if args.max is not None and args.max < 1:
        raise UsageError(f"casestudy needs --max >= 1, got {args.max}")
    if args.study == "chains":
        rows = chains_case_study(args.max if args.max is not None else 4, force=args.force)
        for row in rows:
            write_text(
                f"chain({row.n}): monotone Analyzed: {row.monotone_analyzed} - Partitions: {row.monotone_found}"
                f" | regular Analyzed: {row.regular_analyzed} - Partitions: {row.regular_found}"
                f" | boolean lattice: {_bool(row.monotone_is_boolean)} {_bool(row.regular_is_boolean)}\n"
            )
        ok = all(row.monotone_is_boolean and row.regular_is_boolean for row in rows)
    else:
        max_i = args.max if args.max is not None else 5
        rows = mfamily_case_study(max_i, force=args.force)
        for row in rows:
            write_text(
                f"M{row.i}: Analyzed: {row.analyzed} - Partitions: {row.regular_found}"
                f" | formula {row.formula} | {_bool(row.matches)}\n"
            )
        write_text("formula table: " + _ints(m_family_formula_table(max_i)) + "\n")
        ok = all(row.matches for row in rows)
    if args.export:
        export_tsv(rows_to_frame(rows), args.export)
    if not ok:
        raise CaseStudyError(f"case study {args.study}: at least one row failed its check")
    logger.info(f"Case study {args.study}: all checks passed")
    return 0


def build_parser() -> ToolkitArgumentParser:
    parser = ToolkitArgumentParser(
        prog="poset_toolkit",
        description="Finite posets: partitions, partition lattices, products and coproducts",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  # Generate the 4-element chain
  python -m src.poset_toolkit gen chain 4 -o chain4.poset

  # Count monotone partitions of B2
  python -m src.poset_toolkit partitions --kind monotone data/posets/b2.poset

  # Whitney numbers of the regular partition lattice of P4
  python -m src.poset_toolkit lattice --kind regular --whitney data/posets/p4.poset

  # Forest product of two files, as DOT
  python -m src.poset_toolkit prod --category forest data/posets/f2.poset data/posets/f1.poset --dot

  # Reproduce the M-family table
  python -m src.poset_toolkit casestudy mfamily --max 5
        """,
    )
    parser.add_argument("--debug", action="store_true", help="Enable debug logging")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="Generate a poset")
    gen.add_argument("family", choices=sorted(GENERATORS))
    gen.add_argument("n", type=int)
    gen.add_argument("-o", "--output", help="Output file (default: stdout)")
    gen.set_defaults(handler=cmd_gen)

    show = sub.add_parser("show", help="Print elements, relation or covering relation")
    show.add_argument("files", nargs="+", help="Poset files ('-' for stdin)")
    mode = show.add_mutually_exclusive_group()
    mode.add_argument("--elements", action="store_true")
    mode.add_argument("--relation", action="store_true")
    mode.add_argument("--covering", action="store_true")
    mode.add_argument("--json", action="store_true")
    show.set_defaults(handler=cmd_show)

    dot = sub.add_parser("dot", help="Hasse diagrams as DOT")
    dot.add_argument("files", nargs="+")
    dot.add_argument("--columns", type=int, default=1)
    dot.set_defaults(handler=cmd_dot)

    parts = sub.add_parser("partitions", help="Enumerate monotone or regular partitions")
    parts.add_argument("--kind", required=True, choices=[k.value for k in PartitionKind])
    parts.add_argument("file")
    parts.add_argument("--count", action="store_true", help="Only print the trace line")
    parts.add_argument("--list", action="store_true", help="List quotients as block chains")
    parts.add_argument("--dot", action="store_true", help="DOT of the quotient posets")
    parts.add_argument("--columns", type=int, default=4)
    parts.add_argument("--select", type=int, nargs="+", help="1-based positions to list or draw")
    parts.add_argument("--force", action="store_true", help="Ignore size guards")
    parts.set_defaults(handler=cmd_partitions)

    lat = sub.add_parser("lattice", help="Partition lattice statistics")
    lat.add_argument("--kind", required=True, choices=[k.value for k in PartitionKind])
    lat.add_argument("file")
    stat = lat.add_mutually_exclusive_group()
    for flag in ("--moebius", "--whitney", "--levels", "--atoms", "--coatoms", "--ranked", "--dot"):
        stat.add_argument(flag, action="store_true")
    lat.add_argument("--export", help="Write per-position statistics as TSV")
    lat.add_argument("--force", action="store_true", help="Ignore size guards")
    lat.set_defaults(handler=cmd_lattice)

    lin = sub.add_parser("linext", help="Linear extensions")
    lin.add_argument("file")
    lin_mode = lin.add_mutually_exclusive_group()
    lin_mode.add_argument("--count", action="store_true")
    lin_mode.add_argument("--dot", action="store_true")
    lin.add_argument("--columns", type=int, default=4)
    lin.set_defaults(handler=cmd_linext)

    for name, handler, text in (("sum", cmd_sum, "Coproduct"), ("prod", cmd_prod, "Product")):
        op = sub.add_parser(name, help=f"{text} in the poset or forest category")
        op.add_argument("--category", required=True, choices=[c.value for c in Category])
        op.add_argument("files", nargs="+")
        op.add_argument("-o", "--output", help="Output file (default: stdout)")
        op.add_argument("--dot", action="store_true", help="Write DOT instead of poset text")
        op.set_defaults(handler=handler)

    bell_cmd = sub.add_parser("bell", help="Bell numbers")
    bell_cmd.add_argument("n", type=int)
    bell_cmd.add_argument("--table", action="store_true", help="Print B_0..B_N")
    bell_cmd.set_defaults(handler=cmd_bell)

    case = sub.add_parser("casestudy", help="Reproduce the chains or M-family experiment")
    case.add_argument("study", choices=["chains", "mfamily"])
    case.add_argument("--max", type=int, help="Largest n (chains, default 4) or i (mfamily, default 5)")
    case.add_argument("--export", help="Write the result table as TSV")
    case.add_argument("--force", action="store_true", help="Ignore size guards")
    case.set_defaults(handler=cmd_casestudy)
    return parser


def run(argv: Optional[List[str]] = None) -> int:
    """
    Parse arguments and dispatch.

    Returns:
        Exit code: 0 ok, 1 input error, 2 domain error, 3 guard exceeded
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.debug:
            logging.getLogger().setLevel(logging.DEBUG)
        else:
            logging.getLogger().setLevel(get_settings().log_level)
        return args.handler(args)
    except PosetToolkitError as e:
        logger.error(f"{type(e).__name__}: {e}")
        return e.exit_code
    except FileNotFoundError as e:
        logger.error(f"File not found: {e}")
        return 1
    except ValueError as e:
        # pydantic ValidationError is a ValueError
        logger.error(f"Invalid input: {e}")
        return 1
    except SystemExit as e:
        # --help
        return e.code if isinstance(e.code, int) else 0


def main() -> int:
    """Main entry point for CLI."""
    return run(sys.argv[1:])


if __name__ == "__main__":
    sys.exit(main())
