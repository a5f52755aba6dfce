"""Trust-weighted path evaluation, ranking, routing and simulation for overlay networks.

The package models per-edge trust as (trust, untrust) pairs, tests every
hop of a path with a 2x2 matrix product and an acceptance verdict, ranks
all simple source-to-destination paths by mean edge trust, selects a
greedy most-likely route, and forwards simulated packets along it. A
line-oriented topology file format (canonical extension ``.trust``) and
the ``trustpath`` command expose the same operations from the shell.
"""

from .core import (
    COMPLEMENT_TOL,
    DEFAULT_CONSTANTS,
    FULL_TRUST,
    ModelConstants,
    TrustClass,
    TrustPair,
    TrustValueError,
    classify,
    complement,
    display_round,
    make_pair,
)
from .pathing import (
    DEFAULT_PATH_CAP,
    Path,
    PathCapExceeded,
    RankedPath,
    RouteResult,
    RouteStep,
    enumerate_paths,
    most_likely_route,
    path_mean_trust,
    path_mean_untrust,
    rank_paths,
)
from .propagation import (
    VERDICT_TOL,
    Chaining,
    HopResult,
    PathEvaluation,
    TestMode,
    Verdict,
    evaluate_path,
    propagate_trust_hop,
    propagate_untrust_hop,
    trust_matrix,
    untrust_matrix,
)
from .sim import SimReport, simulate
from .topology import (
    PathError,
    REFERENCE_EDGES,
    Topology,
    TopologyDocument,
    TopologyError,
    TopologyParseError,
    TrustEdge,
    fixture_topology,
    generate_mesh,
    parse_document,
    parse_topology,
    serialize_topology,
)

__version__ = "0.1.0"

__all__ = [
    "COMPLEMENT_TOL",
    "DEFAULT_CONSTANTS",
    "DEFAULT_PATH_CAP",
    "FULL_TRUST",
    "REFERENCE_EDGES",
    "VERDICT_TOL",
    "Chaining",
    "HopResult",
    "ModelConstants",
    "Path",
    "PathCapExceeded",
    "PathError",
    "PathEvaluation",
    "RankedPath",
    "RouteResult",
    "RouteStep",
    "SimReport",
    "TestMode",
    "Topology",
    "TopologyDocument",
    "TopologyError",
    "TopologyParseError",
    "TrustClass",
    "TrustEdge",
    "TrustPair",
    "TrustValueError",
    "Verdict",
    "classify",
    "complement",
    "display_round",
    "enumerate_paths",
    "evaluate_path",
    "fixture_topology",
    "generate_mesh",
    "make_pair",
    "most_likely_route",
    "parse_document",
    "parse_topology",
    "path_mean_trust",
    "path_mean_untrust",
    "propagate_trust_hop",
    "propagate_untrust_hop",
    "rank_paths",
    "serialize_topology",
    "simulate",
    "trust_matrix",
    "untrust_matrix",
]
