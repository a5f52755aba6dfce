"""Simple-path enumeration, mean-trust ranking, and greedy route selection."""

from dataclasses import dataclass

from .core import DEFAULT_CONSTANTS, FULL_TRUST, ModelConstants, TrustClass, TrustPair, classify
from .propagation import HopResult, Verdict, propagate_trust_hop
from .topology import Topology

#: Node sequence from source to destination.
Path = tuple[str, ...]

#: Default ceiling on the number of enumerated simple paths.
DEFAULT_PATH_CAP = 1_000_000


class PathCapExceeded(RuntimeError):
    """Simple-path enumeration found more paths than the configured cap."""

    def __init__(self, cap: int):
        self.cap = cap
        super().__init__(
            f"more than {cap} simple paths; raise the cap to enumerate this topology"
        )


def enumerate_paths(topology: Topology, cap: int = DEFAULT_PATH_CAP) -> list[Path]:
    """All simple source-to-destination paths, in depth-first order.

    Neighbors are explored in node declaration order, so the result is
    deterministic: paths are ordered lexicographically by the declaration
    indices of their nodes. Raises PathCapExceeded as soon as the count
    would pass cap; a topology with no path yields an empty list.
    """
    if cap < 1:
        raise ValueError(f"cap must be >= 1, got {cap!r}")
    destination = topology.destination
    paths: list[Path] = []
    trail = [topology.source]
    on_trail = {topology.source}
    pending = [iter(topology.successors(topology.source))]
    while pending:
        step = next(pending[-1], None)
        if step is None:
            pending.pop()
            on_trail.discard(trail.pop())
        elif step == destination:
            if len(paths) >= cap:
                raise PathCapExceeded(cap)
            paths.append((*trail, destination))
        elif step not in on_trail:
            trail.append(step)
            on_trail.add(step)
            pending.append(iter(topology.successors(step)))
    return paths


def path_mean_trust(topology: Topology, path: Path | list[str]) -> float:
    """Arithmetic mean of the edge trust values along a valid path."""
    nodes = topology.validate_path(path)
    values = [topology.edge(src, dst).trust for src, dst in zip(nodes, nodes[1:])]
    return sum(values) / len(values)


def path_mean_untrust(topology: Topology, path: Path | list[str]) -> float:
    """Arithmetic mean of the edge untrust values along a valid path."""
    nodes = topology.validate_path(path)
    values = [topology.edge(src, dst).untrust for src, dst in zip(nodes, nodes[1:])]
    return sum(values) / len(values)


@dataclass(frozen=True)
class RankedPath:
    """One path with its mean trust statistics and 1-based rank."""

    path: Path
    mean_trust: float
    mean_untrust: float
    trust_class: TrustClass
    rank: int


def rank_paths(topology: Topology, cap: int = DEFAULT_PATH_CAP) -> list[RankedPath]:
    """Every simple path ranked by mean trust, best first.

    Ties break by mean untrust ascending, then by enumeration order.
    Means are kept at full precision; any truncation is display-only.
    """
    paths = enumerate_paths(topology, cap)
    keyed = []
    for index, path in enumerate(paths):
        mean_trust = path_mean_trust(topology, path)
        mean_untrust = path_mean_untrust(topology, path)
        keyed.append((-mean_trust, mean_untrust, index, path))
    keyed.sort()
    return [
        RankedPath(path, -negated, mean_untrust, classify(-negated), rank)
        for rank, (negated, mean_untrust, _index, path) in enumerate(keyed, start=1)
    ]


@dataclass(frozen=True)
class RouteStep:
    """One greedy forwarding decision: the edge taken and its hop result."""

    src: str
    dst: str
    edge: TrustPair
    hop: HopResult


@dataclass(frozen=True)
class RouteResult:
    """Outcome of the greedy most-likely-route walk."""

    path: Path
    steps: tuple[RouteStep, ...]
    reached: bool

    @property
    def stuck_node(self) -> str | None:
        """The node where the walk stalled, or None when it reached the destination."""
        return None if self.reached else self.path[-1]


def most_likely_route(
    topology: Topology, constants: ModelConstants = DEFAULT_CONSTANTS
) -> RouteResult:
    """Walk greedily from source toward destination.

    At each node the walk runs the trust test toward every unvisited
    successor and takes, among the edges with an ACCEPTABLE verdict, the
    one with the highest edge trust; ties break by node declaration
    order. The first hop starts from full trust, later hops arrive with
    the pair of the edge just taken. There is no backtracking: a node
    with no acceptable unvisited successor ends the walk with
    reached=False, which is a result, not an error.
    """
    current = topology.source
    arrival = FULL_TRUST
    visited = {current}
    path = [current]
    steps: list[RouteStep] = []
    while current != topology.destination:
        best: tuple[str, TrustPair, HopResult] | None = None
        for candidate in topology.successors(current):
            if candidate in visited:
                continue
            edge = topology.edge(current, candidate)
            hop = propagate_trust_hop(arrival, edge, constants)
            if hop.verdict is not Verdict.ACCEPTABLE:
                continue
            if best is None or edge.trust > best[1].trust:
                best = (candidate, edge, hop)
        if best is None:
            return RouteResult(tuple(path), tuple(steps), False)
        candidate, edge, hop = best
        steps.append(RouteStep(current, candidate, edge, hop))
        path.append(candidate)
        visited.add(candidate)
        arrival = edge
        current = candidate
    return RouteResult(tuple(path), tuple(steps), True)
