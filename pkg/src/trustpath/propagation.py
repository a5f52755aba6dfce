"""Per-hop trust and untrust matrix tests, verdicts, and path evaluation."""

from dataclasses import dataclass
from enum import Enum

from .core import DEFAULT_CONSTANTS, FULL_TRUST, ModelConstants, TrustPair
from .topology import Topology

#: Comparisons of the two output components closer than this are a tie.
VERDICT_TOL = 1e-12

Matrix = tuple[tuple[float, float], tuple[float, float]]


class Verdict(Enum):
    """Outcome of comparing a hop's trust component against its untrust component."""

    ACCEPTABLE = "acceptable"
    NOT_ACCEPTABLE = "not_acceptable"
    INDIFFERENT = "indifferent"

    def __str__(self) -> str:
        return self.value


class TestMode(Enum):
    """Which of the two per-hop matrix tests to run."""

    __test__ = False  # not a test case, despite the name

    TRUST = "trust"
    UNTRUST = "untrust"


class Chaining(Enum):
    """How hop k's arrival state is formed for k > 1.

    EDGE (the default) feeds the trust pair of edge k - 1 forward;
    OUTPUT feeds hop k - 1's output vector forward instead.
    """

    EDGE = "edge"
    OUTPUT = "output"


@dataclass(frozen=True)
class HopResult:
    """Output vector of one hop test plus its acceptance verdict.

    The components live in the (trust, untrust) slots regardless of test
    mode; under OUTPUT chaining they may leave [0, 1] after several hops,
    so they are plain floats rather than a TrustPair.
    """

    trust: float
    untrust: float
    verdict: Verdict


@dataclass(frozen=True)
class PathEvaluation:
    """Hop-by-hop evaluation of one path under a single test mode."""

    path: tuple[str, ...]
    hops: tuple[HopResult, ...]
    mode: TestMode

    @property
    def confidential(self) -> bool:
        """True when every hop verdict is ACCEPTABLE."""
        return all(hop.verdict is Verdict.ACCEPTABLE for hop in self.hops)


def _verdict(trust: float, untrust: float, tol: float = VERDICT_TOL) -> Verdict:
    if abs(trust - untrust) <= tol:
        return Verdict.INDIFFERENT
    return Verdict.ACCEPTABLE if trust > untrust else Verdict.NOT_ACCEPTABLE


def trust_matrix(next_edge: TrustPair, constants: ModelConstants = DEFAULT_CONSTANTS) -> Matrix:
    """The 2x2 trust-test matrix toward the node behind next_edge.

    The arrival state multiplies this matrix as a [trust untrust] row
    vector; only the top-right entry depends on the edge.
    """
    return (
        (constants.theta_min, next_edge.untrust),
        (constants.theta_max, constants.theta_ind),
    )


def untrust_matrix(next_edge: TrustPair, constants: ModelConstants = DEFAULT_CONSTANTS) -> Matrix:
    """The 2x2 untrust-test matrix toward the node behind next_edge.

    The arrival state multiplies this matrix as an [untrust trust] row
    vector, mirroring the trust test; only the top-right entry depends on
    the edge.
    """
    return (
        (constants.upsilon_min, next_edge.trust),
        (constants.upsilon_max, constants.upsilon_ind),
    )


def _trust_components(
    arrival_trust: float, arrival_untrust: float, next_edge: TrustPair, c: ModelConstants
) -> tuple[float, float]:
    out_trust = arrival_trust * c.theta_min + arrival_untrust * c.theta_max
    out_untrust = arrival_trust * next_edge.untrust + arrival_untrust * c.theta_ind
    return out_trust, out_untrust


def _untrust_components(
    arrival_trust: float, arrival_untrust: float, next_edge: TrustPair, c: ModelConstants
) -> tuple[float, float]:
    out_untrust = arrival_untrust * c.upsilon_min + arrival_trust * c.upsilon_max
    out_trust = arrival_untrust * next_edge.trust + arrival_trust * c.upsilon_ind
    return out_trust, out_untrust


def propagate_trust_hop(
    arrival: TrustPair, next_edge: TrustPair, constants: ModelConstants = DEFAULT_CONSTANTS
) -> HopResult:
    """Run the trust test for one hop.

    arrival is the state at the current node and next_edge the pair on
    the edge to the candidate next node. The output trust component is
    arrival.trust * theta_min + arrival.untrust * theta_max and the
    untrust component arrival.trust * edge.untrust + arrival.untrust *
    theta_ind; the verdict compares the two.
    """
    trust, untrust = _trust_components(arrival.trust, arrival.untrust, next_edge, constants)
    return HopResult(trust, untrust, _verdict(trust, untrust))


def propagate_untrust_hop(
    arrival: TrustPair, next_edge: TrustPair, constants: ModelConstants = DEFAULT_CONSTANTS
) -> HopResult:
    """Run the untrust test for one hop.

    The arrival state enters in [untrust trust] order, so the output
    untrust component is arrival.untrust * upsilon_min + arrival.trust *
    upsilon_max and the trust component arrival.untrust * edge.trust +
    arrival.trust * upsilon_ind. The result keeps (trust, untrust) slot
    order like the trust test.
    """
    trust, untrust = _untrust_components(arrival.trust, arrival.untrust, next_edge, constants)
    return HopResult(trust, untrust, _verdict(trust, untrust))


def evaluate_path(
    topology: Topology,
    path: tuple[str, ...] | list[str],
    constants: ModelConstants = DEFAULT_CONSTANTS,
    mode: TestMode = TestMode.TRUST,
    chaining: Chaining = Chaining.EDGE,
) -> PathEvaluation:
    """Chain the per-hop test along a source-to-destination path.

    Hop 1 always starts from full trust (1, 0). Under EDGE chaining hop
    k > 1 arrives with the pair of edge k - 1; under OUTPUT chaining it
    arrives with hop k - 1's output vector, which may drift outside
    [0, 1]. The path must be a valid simple path of the topology.
    """
    nodes = topology.validate_path(path)
    components = _trust_components if mode is TestMode.TRUST else _untrust_components
    edge_pairs = [topology.edge(src, dst) for src, dst in zip(nodes, nodes[1:])]
    hops: list[HopResult] = []
    arrival = (FULL_TRUST.trust, FULL_TRUST.untrust)
    for index, edge in enumerate(edge_pairs):
        if index > 0:
            if chaining is Chaining.EDGE:
                previous = edge_pairs[index - 1]
                arrival = (previous.trust, previous.untrust)
            else:
                arrival = (hops[-1].trust, hops[-1].untrust)
        trust, untrust = components(arrival[0], arrival[1], edge, constants)
        hops.append(HopResult(trust, untrust, _verdict(trust, untrust)))
    return PathEvaluation(nodes, tuple(hops), mode)
