"""The `ucyc` command."""

from __future__ import annotations
from concurrent.futures import ProcessPoolExecutor
from functools import partial
from typing import Any, Dict, List, Optional, Tuple
import argparse
import json
import sys
import warnings
from .. import __version__
from ..core import CyclicString
from ..classes import (
    CLASS_KINDS,
    ClassSpec,
    build_spec,
    count,
    enumerate_words,
    existence_claim,
    get_all_word_classes,
    summarize,
)
from ..digraph import (
    build,
    check_balance,
    check_connectivity,
    predicted_degree_mismatches,
)
from ..euler import NonEulerian, generate
from ..verify import verify
from .grid import DEFAULT_GRID, grid_points, load_grid
from .types import (
    EX_OK,
    EX_NON_EULERIAN,
    EX_NOT_VERIFIED,
    EX_USAGE,
    ClaimDisagreementWarning,
)


class UsageErrorParser(argparse.ArgumentParser):
    """Argument parser that exits with `EX_USAGE` on invalid arguments."""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EX_USAGE, f"{self.prog}: error: {message}\n")


def _dump(data: Any) -> str:
    return json.dumps(data, ensure_ascii=False, default=dict)


# ----- Arguments -----


def _add_spec_args(parser: argparse.ArgumentParser) -> None:
    group = parser.add_argument_group("class selection")
    group.add_argument("--class", dest="kind", choices=CLASS_KINDS, help="Word class.")
    group.add_argument("--length", "-k", type=int, help="Word length k.")
    alphabet = group.add_mutually_exclusive_group()
    alphabet.add_argument(
        "--alphabet-size", type=int, help="Alphabet of N auto-named symbols a, b, ..."
    )
    alphabet.add_argument("--alphabet", help="Comma-separated symbols, e.g. A,B,C.")
    alphabet.add_argument(
        "--honeycomb",
        action="store_true",
        help="The six honeycomb steps x+,y+,z+|x-,y-,z-.",
    )
    group.add_argument(
        "--cyclic",
        action="store_true",
        default=None,
        help="Letter distance wraps around (implied for Lipschitz words).",
    )
    group.add_argument("--categories", help='Pipe-separated categories, e.g. "AEI|BCD".')
    group.add_argument(
        "--decreasing", action="store_true", help="Monotone non-increasing words."
    )
    group.add_argument("--lipschitz-c", type=int, dest="c", help="Lipschitz constant c.")
    group.add_argument("--aug-a", type=int, dest="a", help="Minimum letter count a.")
    group.add_argument("--aug-b", type=int, dest="b", help="Maximum letter count b.")
    group.add_argument("--lattice-dim", type=int, dest="dimension", help="Dimension m.")
    group.add_argument(
        "--lattice-radius", type=int, dest="radius", help="Maximum l1 distance."
    )
    parser.add_argument(
        "--budget",
        type=int,
        help="Maximum number of candidate words to filter (default: $UCYC_BUDGET or "
        "10^8).",
    )


def _spec_from_args(parser: argparse.ArgumentParser, args: argparse.Namespace) -> ClassSpec:
    if args.kind is None:
        parser.error("the following arguments are required: --class")
    if args.length is None:
        parser.error("the following arguments are required: --length")
    try:
        return build_spec(
            args.kind,
            args.length,
            alphabet_size=args.alphabet_size,
            alphabet=args.alphabet,
            cyclic=args.cyclic,
            categories=args.categories,
            honeycomb=args.honeycomb,
            c=args.c,
            a=args.a,
            b=args.b,
            dimension=args.dimension,
            radius=args.radius,
            decreasing=args.decreasing or None,
        )
    except ValueError as exc:
        parser.error(str(exc))
        raise  # unreachable, parser.error exits


# ----- Commands -----


def _gen_command(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    spec = _spec_from_args(parser, args)
    outcome = generate(spec, args.budget)
    if isinstance(outcome, NonEulerian):
        print(_dump(outcome.to_dict()), file=sys.stderr)
        return EX_NON_EULERIAN
    if args.json:
        print(_dump(outcome.to_dict(trace=args.trace)))
    else:
        print(outcome.to_text())
        if args.trace:
            print("\n".join(outcome.trace_words()))
    return EX_OK


def _read_cycle(parser: argparse.ArgumentParser, args: argparse.Namespace, spec: ClassSpec) -> CyclicString:
    text = args.cycle
    if args.cycle_file is not None:
        try:
            with open(args.cycle_file, "r", encoding="utf-8") as stream:
                text = stream.read()
        except OSError as exc:
            parser.error(f"cannot read {args.cycle_file}: {exc}")
    try:
        return CyclicString.from_text(text.strip(), spec.alphabet)
    except ValueError as exc:
        parser.error(f"invalid cycle: {exc}")
        raise  # unreachable, parser.error exits


def _verify_command(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    spec = _spec_from_args(parser, args)
    cycle = _read_cycle(parser, args, spec)
    report = verify(cycle, spec, args.budget)
    print(_dump({**spec.to_dict(), **report.to_dict(spec.alphabet)}))
    return EX_OK if report.ok else EX_NOT_VERIFIED


def _stats_command(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    spec = _spec_from_args(parser, args)
    g = build(spec, args.budget)
    balance = check_balance(g)
    connectivity = check_connectivity(g)
    report = {
        **spec.to_dict(),
        "vertex_count": g.vertex_count,
        "edge_count": g.edge_count,
        "balanced": balance.balanced,
        "degree_histogram": balance.to_dict()["degree_histogram"],
        "component_count": connectivity.component_count,
        "component_sizes": list(connectivity.component_sizes),
        "predicted_degree_mismatches": predicted_degree_mismatches(g),
    }
    print(_dump(report))
    return EX_OK


def _count_command(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    spec = _spec_from_args(parser, args)
    if args.json:
        print(_dump(summarize(spec, args.budget).to_dict()))
    else:
        print(count(spec, args.budget))
    return EX_OK


def _list_command(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    if args.classes:
        for word_class in get_all_word_classes():
            print(f"{word_class.name}: {word_class.description}")
        return EX_OK
    spec = _spec_from_args(parser, args)
    words = [w.to_text(spec.alphabet) for w in enumerate_words(spec, args.budget)]
    print(_dump(words) if args.json else "\n".join(words))
    return EX_OK


def spec_from_point(point: Dict[str, Any]) -> ClassSpec:
    """Build the spec of one sweep grid point."""
    return build_spec(
        point["class"],
        point["length"],
        alphabet_size=point.get("alphabet_size"),
        alphabet=point.get("alphabet"),
        cyclic=point.get("cyclic"),
        categories=point.get("categories"),
        honeycomb=bool(point.get("honeycomb", False)),
        c=point.get("c"),
        a=point.get("a"),
        b=point.get("b"),
        dimension=point.get("dimension"),
        radius=point.get("radius"),
        decreasing=point.get("decreasing") or None,
    )


def sweep_point(named_point: Tuple[str, Dict[str, Any]], budget: Optional[int] = None) -> dict:
    """Evaluate one grid point: generate, verify, and compare with the claim. Invalid
    points yield a line with an `error` instead.
    """
    name, point = named_point
    try:
        spec = spec_from_point(point)
        outcome = generate(spec, budget)
    except ValueError as exc:
        return {"entry": name, **point, "error": str(exc)}
    exists = not isinstance(outcome, NonEulerian)
    claim = existence_claim(spec)
    res = {
        "entry": name,
        **spec.to_dict(),
        "count": count(spec, budget),
        "exists_empirically": exists,
        "claimed": claim.status,
        "basis": claim.basis,
        "agree": claim.agrees_with(exists),
    }
    if isinstance(outcome, NonEulerian):
        res["reason"] = outcome.reason
    else:
        res["verified"] = verify(outcome.cycle, spec, budget).ok
    return res


def _sweep_command(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    try:
        points = grid_points(load_grid(args.grid) if args.grid else DEFAULT_GRID)
    except (OSError, ValueError) as exc:
        parser.error(str(exc))
    evaluate = partial(sweep_point, budget=args.budget)
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            lines = pool.map(evaluate, points)
            _write_sweep_lines(lines)
    else:
        _write_sweep_lines(map(evaluate, points))
    return EX_OK


def _write_sweep_lines(lines) -> None:
    for line in lines:
        if line.get("agree") is False:
            warnings.warn(
                f"Grid entry '{line['entry']}' at n={line['n']}, k={line['k']}: a U-cycle "
                f"{'exists' if line['exists_empirically'] else 'does not exist'}, but "
                f"the claim is '{line['claimed']}' ({line['basis']}).",
                ClaimDisagreementWarning,
            )
        print(_dump(line), flush=True)


# ----- Entry point -----


COMMANDS = {
    "gen": (_gen_command, "Generate a U-cycle of a class."),
    "verify": (_verify_command, "Check whether a cyclic string is a U-cycle of a class."),
    "stats": (_stats_command, "Report on the transition digraph of a class."),
    "count": (_count_command, "Count the words of a class."),
    "list": (_list_command, "List the words of a class, or the known classes."),
    "sweep": (_sweep_command, "Generate U-cycles over a grid of classes."),
}


def build_parser() -> Tuple[argparse.ArgumentParser, Dict[str, argparse.ArgumentParser]]:
    parser = UsageErrorParser(
        prog="ucyc",
        description="Universal cycles of restricted word classes.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subparsers = parser.add_subparsers(dest="command", required=True)
    commands = {}
    for name, (_, help_text) in COMMANDS.items():
        commands[name] = subparsers.add_parser(name, help=help_text, description=help_text)

    for name in ("gen", "verify", "stats", "count", "list"):
        _add_spec_args(commands[name])
    for name in ("gen", "count", "list"):
        commands[name].add_argument("--json", action="store_true", help="JSON output.")
    commands["gen"].add_argument(
        "--trace", action="store_true", help="Also print the raw circuit, word by word."
    )
    cycle = commands["verify"].add_mutually_exclusive_group(required=True)
    cycle.add_argument("--cycle", help="The cycle as a token string.")
    cycle.add_argument("--cycle-file", help="UTF-8 file holding the cycle.")
    commands["list"].add_argument(
        "--classes", action="store_true", help="List the known classes instead."
    )
    commands["sweep"].add_argument(
        "--grid", help="YAML grid file (default: the built-in grid)."
    )
    commands["sweep"].add_argument(
        "--jobs", type=int, default=1, help="Grid points evaluated concurrently."
    )
    commands["sweep"].add_argument(
        "--budget", type=int, help="Maximum number of candidate words per point."
    )
    return parser, commands


def main(argv: Optional[List[str]] = None) -> int:
    parser, commands = build_parser()
    args = parser.parse_args(argv)
    command, _ = COMMANDS[args.command]
    subparser = commands[args.command]
    try:
        return command(subparser, args)
    except ValueError as exc:
        # Budget and alphabet problems surface only once the pipeline runs.
        subparser.error(str(exc))
        return EX_USAGE
