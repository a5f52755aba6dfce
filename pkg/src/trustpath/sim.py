"""Deterministic packet-forwarding simulation over a topology."""

from collections import Counter
from dataclasses import dataclass, field

from .core import DEFAULT_CONSTANTS, ModelConstants
from .pathing import Path, most_likely_route
from .topology import Topology


@dataclass
class SimReport:
    """Delivery statistics for a batch of identically forwarded packets."""

    packets_sent: int = 0
    delivered: int = 0
    dropped: int = 0
    route_usage: dict[Path, int] = field(default_factory=dict)
    drop_points: dict[str, int] = field(default_factory=dict)


def simulate(
    topology: Topology, packets: int, constants: ModelConstants = DEFAULT_CONSTANTS
) -> SimReport:
    """Forward packets one at a time along the greedy most-likely route.

    Each packet independently walks the route; forwarding is
    deterministic, so every packet either reaches the destination over
    the same path or drops at the same node. Drops are recorded in the
    report, never raised. All counts are exact integers.
    """
    if packets < 1:
        raise ValueError(f"packets must be >= 1, got {packets!r}")
    report = SimReport()
    route_usage: Counter[Path] = Counter()
    drop_points: Counter[str] = Counter()
    for _ in range(packets):
        route = most_likely_route(topology, constants)
        report.packets_sent += 1
        if route.reached:
            report.delivered += 1
            route_usage[route.path] += 1
        else:
            report.dropped += 1
            drop_points[route.path[-1]] += 1
    report.route_usage = dict(route_usage)
    report.drop_points = dict(drop_points)
    return report
