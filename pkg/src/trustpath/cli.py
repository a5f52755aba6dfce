"""Command-line interface: check, rank, route, enumerate, fixture, simulate."""

import argparse
import csv
import json
import sys
from dataclasses import asdict, dataclass

from .core import DEFAULT_CONSTANTS, ModelConstants, TrustValueError, display_round
from .pathing import (
    DEFAULT_PATH_CAP,
    PathCapExceeded,
    RouteResult,
    enumerate_paths,
    most_likely_route,
    path_mean_trust,
    rank_paths,
)
from .propagation import Chaining, PathEvaluation, TestMode, evaluate_path
from .sim import SimReport, simulate
from .topology import PathError, TopologyError, fixture_topology, parse_topology, serialize_topology

EXIT_OK = 0
EXIT_INPUT_ERROR = 1
EXIT_NEGATIVE = 2
EXIT_CAP_EXCEEDED = 3

ARROW = "→"

_CONSTANT_FLAGS = (
    ("theta-min", "trust-test matrix entry paired with the arrival trust"),
    ("theta-max", "trust-test matrix entry paired with the arrival untrust"),
    ("theta-ind", "trust-test indifference entry"),
    ("upsilon-min", "untrust-test matrix entry paired with the arrival untrust"),
    ("upsilon-max", "untrust-test matrix entry paired with the arrival trust"),
    ("upsilon-ind", "untrust-test indifference entry"),
)


@dataclass(frozen=True)
class RunConfig:
    """Resolved global options for one command invocation."""

    topology: str | None = None
    format: str = "text"
    decimals: int = 2
    strict: bool = True
    chaining: Chaining = Chaining.EDGE
    cap: int = DEFAULT_PATH_CAP
    constants: ModelConstants = DEFAULT_CONSTANTS

    def __post_init__(self):
        if not 0 <= self.decimals <= 12:
            raise TrustValueError(f"decimals must be in [0, 12], got {self.decimals}")


class _Parser(argparse.ArgumentParser):
    """ArgumentParser whose usage errors exit 1, keeping 2 for domain results."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT_ERROR, f"{self.prog}: error: {message}\n")


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--topology",
        "-t",
        metavar="FILE",
        help="topology file to load; '-' reads standard input",
    )
    common.add_argument(
        "--format",
        choices=("text", "csv", "json"),
        default="text",
        help="output format (default: text)",
    )
    common.add_argument(
        "--decimals",
        type=int,
        default=2,
        metavar="N",
        help="decimal places for text output, 0-12 (default: 2)",
    )
    common.add_argument(
        "--strict",
        action=argparse.BooleanOptionalAction,
        default=True,
        help="require edge trust and untrust to sum to 1 (default: on)",
    )
    common.add_argument(
        "--chaining",
        choices=[c.value for c in Chaining],
        default=Chaining.EDGE.value,
        help="arrival state for hops after the first: the previous edge's pair "
        "or the previous hop's output (default: edge)",
    )
    common.add_argument(
        "--cap",
        type=int,
        default=DEFAULT_PATH_CAP,
        metavar="N",
        help="abort if a topology has more than N simple paths (default: %(default)s)",
    )
    for flag, description in _CONSTANT_FLAGS:
        attribute = flag.replace("-", "_")
        common.add_argument(
            f"--{flag}",
            type=float,
            default=getattr(DEFAULT_CONSTANTS, attribute),
            metavar="X",
            help=f"{description} (default: %(default)s)",
        )
    return common


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="trustpath",
        description="Evaluate, rank, route and simulate over trust-weighted topologies.",
    )
    common = [_common_options()]
    commands = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    check = commands.add_parser(
        "check",
        parents=common,
        help="evaluate one path hop by hop",
        description="Run the per-hop matrix test along a given path and report "
        "each hop's output components and verdict.",
    )
    check.add_argument(
        "path_spec", metavar="PATH", help="comma-separated node ids, e.g. S,3,7,11,D"
    )
    check.add_argument(
        "--mode",
        choices=("trust", "untrust", "both"),
        default="trust",
        help="which per-hop test to run (default: trust)",
    )

    rank = commands.add_parser(
        "rank",
        parents=common,
        help="rank all simple paths by mean trust",
        description="Enumerate every simple source-to-destination path and rank "
        "them by mean edge trust, best first.",
    )
    rank.add_argument("--top", type=int, metavar="N", help="show only the N best paths")

    commands.add_parser(
        "route",
        parents=common,
        help="select the greedy most-likely route",
        description="Walk greedily from source to destination, taking the most "
        "trusted acceptable edge at each node.",
    )

    commands.add_parser(
        "enumerate",
        parents=common,
        help="list all simple paths",
        description="List every simple source-to-destination path in "
        "deterministic depth-first order.",
    )

    commands.add_parser(
        "fixture",
        parents=common,
        help="emit the built-in demo topology",
        description="Write the built-in 4-3-4 demo mesh as a topology document, "
        "suitable for piping into the other commands.",
    )

    sim = commands.add_parser(
        "simulate",
        parents=common,
        help="forward packets along the greedy route",
        description="Send a batch of packets along the greedy most-likely route "
        "and report exact delivery and drop counts.",
    )
    sim.add_argument(
        "--packets", type=int, default=100, metavar="N", help="packets to send (default: 100)"
    )

    return parser


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    constants = ModelConstants(
        theta_min=args.theta_min,
        theta_max=args.theta_max,
        theta_ind=args.theta_ind,
        upsilon_min=args.upsilon_min,
        upsilon_max=args.upsilon_max,
        upsilon_ind=args.upsilon_ind,
    )
    if args.cap < 1:
        raise TrustValueError(f"cap must be >= 1, got {args.cap}")
    return RunConfig(
        topology=args.topology,
        format=args.format,
        decimals=args.decimals,
        strict=args.strict,
        chaining=Chaining(args.chaining),
        cap=args.cap,
        constants=constants,
    )


def _load_topology(config: RunConfig):
    if not config.topology:
        raise TopologyError("no topology given; pass --topology FILE, or '-' for stdin")
    if config.topology == "-":
        text = sys.stdin.read()
    else:
        with open(config.topology, "r", encoding="utf-8") as handle:
            text = handle.read()
    return parse_topology(text, strict=config.strict)


def _fmt(config: RunConfig, value: float) -> str:
    return display_round(value, config.decimals)


def _join(path) -> str:
    return ARROW.join(path)


def _print_csv(header, rows) -> None:
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)


def _print_json(command: str, inputs: dict, results) -> None:
    print(json.dumps({"command": command, "inputs": inputs, "results": results}, indent=2))


def _print_table(header, rows) -> None:
    widths = [len(column) for column in header]
    for row in rows:
        widths = [max(width, len(cell)) for width, cell in zip(widths, row)]
    for row in (header, *rows):
        print("  ".join(cell.ljust(width) for cell, width in zip(row, widths)).rstrip())


def _base_inputs(config: RunConfig) -> dict:
    return {
        "topology": config.topology,
        "strict": config.strict,
        "chaining": config.chaining.value,
        "cap": config.cap,
        "constants": asdict(config.constants),
    }


def _cmd_check(args: argparse.Namespace, config: RunConfig) -> int:
    topology = _load_topology(config)
    nodes = tuple(token.strip() for token in args.path_spec.split(","))
    if any(not node for node in nodes):
        raise PathError(f"empty node id in path spec {args.path_spec!r}")
    modes = [TestMode.TRUST, TestMode.UNTRUST] if args.mode == "both" else [TestMode(args.mode)]
    evaluations = [
        evaluate_path(topology, nodes, config.constants, mode, config.chaining)
        for mode in modes
    ]
    confidential = all(evaluation.confidential for evaluation in evaluations)

    if config.format == "text":
        lines = []
        for evaluation in evaluations:
            lines.append(f"path {_join(evaluation.path)}")
            lines.append(f"mode {evaluation.mode.value}")
            for number, hop in enumerate(evaluation.hops, start=1):
                src, dst = evaluation.path[number - 1], evaluation.path[number]
                lines.append(
                    f"hop {number} {src}{ARROW}{dst} trust={_fmt(config, hop.trust)} "
                    f"untrust={_fmt(config, hop.untrust)} {hop.verdict}"
                )
            lines.append(f"confidential {'yes' if evaluation.confidential else 'no'}")
        print("\n".join(lines))
    elif config.format == "csv":
        rows = []
        for evaluation in evaluations:
            for number, hop in enumerate(evaluation.hops, start=1):
                rows.append(
                    (
                        evaluation.mode.value,
                        number,
                        evaluation.path[number - 1],
                        evaluation.path[number],
                        repr(hop.trust),
                        repr(hop.untrust),
                        str(hop.verdict),
                    )
                )
        _print_csv(("mode", "hop", "from", "to", "trust", "untrust", "verdict"), rows)
    else:
        results = {
            "confidential": confidential,
            "evaluations": [_evaluation_payload(evaluation) for evaluation in evaluations],
        }
        inputs = _base_inputs(config)
        inputs["path"] = list(nodes)
        inputs["mode"] = args.mode
        _print_json("check", inputs, results)
    return EXIT_OK if confidential else EXIT_NEGATIVE


def _evaluation_payload(evaluation: PathEvaluation) -> dict:
    return {
        "mode": evaluation.mode.value,
        "path": list(evaluation.path),
        "confidential": evaluation.confidential,
        "hops": [
            {
                "hop": number,
                "from": evaluation.path[number - 1],
                "to": evaluation.path[number],
                "trust": hop.trust,
                "untrust": hop.untrust,
                "verdict": str(hop.verdict),
            }
            for number, hop in enumerate(evaluation.hops, start=1)
        ],
    }


def _cmd_rank(args: argparse.Namespace, config: RunConfig) -> int:
    if args.top is not None and args.top < 1:
        raise TrustValueError(f"--top must be >= 1, got {args.top}")
    topology = _load_topology(config)
    ranked = rank_paths(topology, config.cap)
    shown = ranked if args.top is None else ranked[: args.top]

    if config.format == "text":
        rows = [
            (
                str(entry.rank),
                _join(entry.path),
                _fmt(config, entry.mean_trust),
                _fmt(config, entry.mean_untrust),
                entry.trust_class.code,
            )
            for entry in shown
        ]
        _print_table(("rank", "path", "mean_trust", "mean_untrust", "class"), rows)
    elif config.format == "csv":
        rows = [
            (
                entry.rank,
                _join(entry.path),
                repr(entry.mean_trust),
                repr(entry.mean_untrust),
                entry.trust_class.code,
            )
            for entry in shown
        ]
        _print_csv(("rank", "path", "mean_trust", "mean_untrust", "class"), rows)
    else:
        inputs = _base_inputs(config)
        inputs["top"] = args.top
        results = {
            "count": len(ranked),
            "paths": [
                {
                    "rank": entry.rank,
                    "path": list(entry.path),
                    "mean_trust": entry.mean_trust,
                    "mean_untrust": entry.mean_untrust,
                    "class": entry.trust_class.code,
                }
                for entry in shown
            ],
        }
        _print_json("rank", inputs, results)
    return EXIT_OK


def _cmd_route(args: argparse.Namespace, config: RunConfig) -> int:
    topology = _load_topology(config)
    route = most_likely_route(topology, config.constants)
    mean_trust = path_mean_trust(topology, route.path) if route.reached else None

    if config.format == "text":
        lines = [f"route {_join(route.path)}"]
        for number, step in enumerate(route.steps, start=1):
            lines.append(
                f"step {number} {step.src}{ARROW}{step.dst} "
                f"edge_trust={_fmt(config, step.edge.trust)} "
                f"trust={_fmt(config, step.hop.trust)} "
                f"untrust={_fmt(config, step.hop.untrust)} {step.hop.verdict}"
            )
        lines.append(f"reached {'yes' if route.reached else 'no'}")
        if route.reached:
            lines.append(f"mean_trust {_fmt(config, mean_trust)}")
        else:
            lines.append(f"stuck {route.stuck_node}")
        print("\n".join(lines))
    elif config.format == "csv":
        rows = [
            (
                number,
                step.src,
                step.dst,
                repr(step.edge.trust),
                repr(step.hop.trust),
                repr(step.hop.untrust),
                str(step.hop.verdict),
                "" if mean_trust is None else repr(mean_trust),
            )
            for number, step in enumerate(route.steps, start=1)
        ]
        _print_csv(
            ("step", "from", "to", "edge_trust", "trust", "untrust", "verdict", "mean_trust"),
            rows,
        )
    else:
        _print_json("route", _base_inputs(config), _route_payload(route, mean_trust))
    return EXIT_OK if route.reached else EXIT_NEGATIVE


def _route_payload(route: RouteResult, mean_trust: float | None) -> dict:
    return {
        "reached": route.reached,
        "path": list(route.path),
        "stuck": route.stuck_node,
        "mean_trust": mean_trust,
        "steps": [
            {
                "step": number,
                "from": step.src,
                "to": step.dst,
                "edge_trust": step.edge.trust,
                "trust": step.hop.trust,
                "untrust": step.hop.untrust,
                "verdict": str(step.hop.verdict),
            }
            for number, step in enumerate(route.steps, start=1)
        ],
    }


def _cmd_enumerate(args: argparse.Namespace, config: RunConfig) -> int:
    topology = _load_topology(config)
    paths = enumerate_paths(topology, config.cap)
    if config.format == "text":
        for index, path in enumerate(paths, start=1):
            print(f"{index} {_join(path)}")
    elif config.format == "csv":
        _print_csv(
            ("index", "path"),
            ((index, _join(path)) for index, path in enumerate(paths, start=1)),
        )
    else:
        results = {
            "count": len(paths),
            "paths": [
                {"index": index, "path": list(path)}
                for index, path in enumerate(paths, start=1)
            ],
        }
        _print_json("enumerate", _base_inputs(config), results)
    return EXIT_OK


_FIXTURE_HEADER = (
    "# Built-in demo topology: a 4-3-4 layered mesh from source S to destination D.\n"
    "# Six edges carry the reference trust values; every other edge holds the\n"
    "# indifferent pair 0.5 0.5.\n"
)


def _cmd_fixture(args: argparse.Namespace, config: RunConfig) -> int:
    # Always emits the topology document itself, whatever --format says.
    sys.stdout.write(_FIXTURE_HEADER)
    sys.stdout.write(serialize_topology(fixture_topology()))
    return EXIT_OK


def _cmd_simulate(args: argparse.Namespace, config: RunConfig) -> int:
    topology = _load_topology(config)
    report = simulate(topology, args.packets, config.constants)

    if config.format == "text":
        lines = [
            f"packets_sent {report.packets_sent}",
            f"delivered {report.delivered}",
            f"dropped {report.dropped}",
        ]
        for path, count in report.route_usage.items():
            lines.append(f"route {_join(path)} packets={count}")
        for node, count in report.drop_points.items():
            lines.append(f"drop {node} packets={count}")
        print("\n".join(lines))
    elif config.format == "csv":
        rows = [
            ("packets_sent", "", report.packets_sent),
            ("delivered", "", report.delivered),
            ("dropped", "", report.dropped),
        ]
        rows.extend(("route", _join(path), count) for path, count in report.route_usage.items())
        rows.extend(("drop", node, count) for node, count in report.drop_points.items())
        _print_csv(("metric", "key", "value"), rows)
    else:
        inputs = _base_inputs(config)
        inputs["packets"] = args.packets
        _print_json("simulate", inputs, _report_payload(report))
    return EXIT_OK


def _report_payload(report: SimReport) -> dict:
    return {
        "packets_sent": report.packets_sent,
        "delivered": report.delivered,
        "dropped": report.dropped,
        "route_usage": [
            {"path": list(path), "packets": count}
            for path, count in report.route_usage.items()
        ],
        "drop_points": [
            {"node": node, "packets": count} for node, count in report.drop_points.items()
        ],
    }


_HANDLERS = {
    "check": _cmd_check,
    "rank": _cmd_rank,
    "route": _cmd_route,
    "enumerate": _cmd_enumerate,
    "fixture": _cmd_fixture,
    "simulate": _cmd_simulate,
}


def main(argv: list[str] | None = None) -> int:
    """Run the CLI; returns the process exit code instead of raising SystemExit."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse --help or a usage error
        code = exc.code
        if isinstance(code, int):
            return code
        return EXIT_INPUT_ERROR if code else EXIT_OK
    try:
        config = _config_from_args(args)
        return _HANDLERS[args.command](args, config)
    except PathCapExceeded as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_CAP_EXCEEDED
    except (OSError, ValueError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
