"""Topology model, the line-oriented .trust file format, and generators."""

from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass

from .core import COMPLEMENT_TOL, TrustPair, TrustValueError, make_pair


class TopologyError(ValueError):
    """A topology violates its structural constraints."""


class TopologyParseError(TopologyError):
    """A topology document failed to parse.

    The `line` attribute carries the 1-based line number of the offending
    declaration when one is known.
    """

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(prefix + message)


class PathError(ValueError):
    """A node sequence is not a valid source-to-destination path."""


@dataclass(frozen=True)
class TrustEdge:
    """A directed edge together with its trust pair."""

    src: str
    dst: str
    pair: TrustPair


def _check_node_id(name: str) -> None:
    if not isinstance(name, str) or not name:
        raise TopologyError(f"node id must be a non-empty string, got {name!r}")
    if any(ch.isspace() for ch in name) or "#" in name:
        raise TopologyError(f"node id {name!r} may not contain whitespace or '#'")


class Topology:
    """Directed graph with per-edge trust pairs and a designated source/destination.

    Node order is the declaration order and is significant: neighbor
    iteration, routing tie-breaks and canonical serialization all follow
    it. Instances are treated as immutable once constructed.
    """

    def __init__(
        self,
        nodes: Iterable[str],
        edges: Mapping[tuple[str, str], TrustPair] | Iterable[tuple[str, str, TrustPair]],
        source: str,
        destination: str,
    ):
        self.nodes: tuple[str, ...] = tuple(nodes)
        seen: set[str] = set()
        for node in self.nodes:
            _check_node_id(node)
            if node in seen:
                raise TopologyError(f"duplicate node {node!r}")
            seen.add(node)
        self._order = {node: index for index, node in enumerate(self.nodes)}
        for role, name in (("source", source), ("destination", destination)):
            if name not in self._order:
                raise TopologyError(f"{role} {name!r} is not a declared node")
        if source == destination:
            raise TopologyError("source and destination must differ")
        self.source = source
        self.destination = destination

        if isinstance(edges, Mapping):
            triples: Iterable[tuple[str, str, TrustPair]] = (
                (src, dst, pair) for (src, dst), pair in edges.items()
            )
        else:
            triples = edges
        self._pairs: dict[tuple[str, str], TrustPair] = {}
        for src, dst, pair in triples:
            for endpoint in (src, dst):
                if endpoint not in self._order:
                    raise TopologyError(f"edge endpoint {endpoint!r} is not a declared node")
            if src == dst:
                raise TopologyError(f"self-loop on {src!r} is not allowed")
            if (src, dst) in self._pairs:
                raise TopologyError(f"duplicate edge {src} -> {dst}")
            if not isinstance(pair, TrustPair):
                raise TopologyError(f"edge {src} -> {dst} value {pair!r} is not a TrustPair")
            self._pairs[(src, dst)] = pair

        successors: dict[str, list[str]] = {node: [] for node in self.nodes}
        for src, dst in self._pairs:
            successors[src].append(dst)
        self._successors = {
            node: tuple(sorted(targets, key=self._order.__getitem__))
            for node, targets in successors.items()
        }

    @property
    def edge_count(self) -> int:
        return len(self._pairs)

    def edges(self) -> Iterator[TrustEdge]:
        """Edges in insertion order."""
        for (src, dst), pair in self._pairs.items():
            yield TrustEdge(src, dst, pair)

    def edge_pairs(self) -> dict[tuple[str, str], TrustPair]:
        """A copy of the (src, dst) -> TrustPair mapping."""
        return dict(self._pairs)

    def has_edge(self, src: str, dst: str) -> bool:
        return (src, dst) in self._pairs

    def edge(self, src: str, dst: str) -> TrustPair:
        """The trust pair on the edge src -> dst."""
        try:
            return self._pairs[(src, dst)]
        except KeyError:
            raise TopologyError(f"no edge {src} -> {dst}") from None

    def successors(self, node: str) -> tuple[str, ...]:
        """Outgoing neighbors of node, in declaration order."""
        try:
            return self._successors[node]
        except KeyError:
            raise TopologyError(f"unknown node {node!r}") from None

    def node_index(self, node: str) -> int:
        """Declaration index of node, 0-based."""
        try:
            return self._order[node]
        except KeyError:
            raise TopologyError(f"unknown node {node!r}") from None

    def validate_path(self, nodes: Iterable[str]) -> tuple[str, ...]:
        """Check that a node sequence is a simple source-to-destination path here.

        Returns the sequence as a tuple; raises PathError otherwise.
        """
        path = tuple(nodes)
        if len(path) < 2:
            raise PathError(f"a path needs at least two nodes, got {len(path)}")
        for node in path:
            if node not in self._order:
                raise PathError(f"unknown node {node!r}")
        if path[0] != self.source:
            raise PathError(f"path must start at source {self.source!r}, not {path[0]!r}")
        if path[-1] != self.destination:
            raise PathError(
                f"path must end at destination {self.destination!r}, not {path[-1]!r}"
            )
        if len(set(path)) != len(path):
            raise PathError("path revisits a node")
        for src, dst in zip(path, path[1:]):
            if (src, dst) not in self._pairs:
                raise PathError(f"no edge {src} -> {dst}")
        return path

    def __eq__(self, other: object):
        if not isinstance(other, Topology):
            return NotImplemented
        return (
            self.nodes == other.nodes
            and self.source == other.source
            and self.destination == other.destination
            and self._pairs == other._pairs
        )

    __hash__ = None  # mutable-by-convention container semantics

    def __repr__(self) -> str:
        return (
            f"Topology({len(self.nodes)} nodes, {len(self._pairs)} edges, "
            f"{self.source!r} -> {self.destination!r})"
        )


@dataclass(frozen=True)
class NodeDecl:
    """A node, source or dest declaration with its source line."""

    name: str
    line: int


@dataclass(frozen=True)
class EdgeDecl:
    """An edge declaration with its source line; untrust may be omitted."""

    src: str
    dst: str
    trust: float
    untrust: float | None
    line: int


@dataclass(frozen=True)
class TopologyDocument:
    """The raw declarations of a topology file, before semantic checks."""

    nodes: tuple[NodeDecl, ...]
    source: NodeDecl | None
    dest: NodeDecl | None
    edges: tuple[EdgeDecl, ...]

    def to_topology(self, *, strict: bool = True, tol: float = COMPLEMENT_TOL) -> Topology:
        """Resolve the declarations into a validated Topology."""
        if self.source is None:
            raise TopologyParseError("missing source declaration")
        if self.dest is None:
            raise TopologyParseError("missing dest declaration")
        declared: dict[str, NodeDecl] = {}
        for decl in self.nodes:
            if decl.name in declared:
                raise TopologyParseError(f"duplicate node {decl.name!r}", decl.line)
            declared[decl.name] = decl
        for role, decl in (("source", self.source), ("dest", self.dest)):
            if decl.name not in declared:
                raise TopologyParseError(f"{role} {decl.name!r} is not a declared node", decl.line)
        if self.source.name == self.dest.name:
            raise TopologyParseError("source and dest must differ", self.dest.line)

        pairs: dict[tuple[str, str], TrustPair] = {}
        for edge in self.edges:
            for endpoint in (edge.src, edge.dst):
                if endpoint not in declared:
                    raise TopologyParseError(f"undeclared node {endpoint!r}", edge.line)
            if edge.src == edge.dst:
                raise TopologyParseError(f"self-loop on {edge.src!r}", edge.line)
            if (edge.src, edge.dst) in pairs:
                raise TopologyParseError(f"duplicate edge {edge.src} -> {edge.dst}", edge.line)
            try:
                pairs[(edge.src, edge.dst)] = make_pair(
                    edge.trust, edge.untrust, strict=strict, tol=tol
                )
            except TrustValueError as err:
                raise TopologyParseError(str(err), edge.line) from None
        try:
            return Topology(declared, pairs, self.source.name, self.dest.name)
        except TopologyError as err:
            raise TopologyParseError(str(err)) from None


def parse_document(text: str) -> TopologyDocument:
    """Tokenize a topology file into declarations, checking syntax only.

    Each non-blank line holds one declaration: ``node <id>``,
    ``source <id>``, ``dest <id>`` or ``edge <from> <to> <trust>
    [<untrust>]``. ``#`` starts a comment that runs to end of line;
    declarations may appear in any order; both LF and CRLF line endings
    are accepted.
    """
    nodes: list[NodeDecl] = []
    source: NodeDecl | None = None
    dest: NodeDecl | None = None
    edges: list[EdgeDecl] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        kind, args = tokens[0], tokens[1:]
        if kind == "node":
            if len(args) != 1:
                raise TopologyParseError("node takes exactly one identifier", lineno)
            nodes.append(NodeDecl(args[0], lineno))
        elif kind in ("source", "dest"):
            if len(args) != 1:
                raise TopologyParseError(f"{kind} takes exactly one identifier", lineno)
            decl = NodeDecl(args[0], lineno)
            if kind == "source":
                if source is not None:
                    raise TopologyParseError("source already declared", lineno)
                source = decl
            else:
                if dest is not None:
                    raise TopologyParseError("dest already declared", lineno)
                dest = decl
        elif kind == "edge":
            if len(args) not in (3, 4):
                raise TopologyParseError(
                    "edge takes: <from> <to> <trust> [<untrust>]", lineno
                )
            values: list[float] = []
            for token in args[2:]:
                try:
                    values.append(float(token))
                except ValueError:
                    raise TopologyParseError(f"not a number: {token!r}", lineno) from None
            for label, value in zip(("trust", "untrust"), values):
                if not 0.0 <= value <= 1.0:
                    raise TopologyParseError(f"{label} value {value!r} outside [0, 1]", lineno)
            untrust = values[1] if len(values) == 2 else None
            edges.append(EdgeDecl(args[0], args[1], values[0], untrust, lineno))
        else:
            raise TopologyParseError(f"unknown declaration {kind!r}", lineno)
    return TopologyDocument(tuple(nodes), source, dest, tuple(edges))


def parse_topology(text: str, *, strict: bool = True, tol: float = COMPLEMENT_TOL) -> Topology:
    """Parse topology text into a validated Topology.

    An omitted edge untrust defaults to 1 - trust. With strict=True every
    explicitly given pair must sum to one within tol; strict=False keeps
    only the [0, 1] range checks. Errors raise TopologyParseError carrying
    the offending line number where known.
    """
    return parse_document(text).to_topology(strict=strict, tol=tol)


def serialize_topology(topology: Topology) -> str:
    """Render the canonical text form of a topology.

    Nodes appear first in declaration order, then source and dest, then
    edges sorted by the declaration order of their endpoints, each with
    both components written in shortest-float form. The result ends with
    a newline and parses back to an equal topology.
    """
    lines = [f"node {node}" for node in topology.nodes]
    lines.append(f"source {topology.source}")
    lines.append(f"dest {topology.destination}")
    for src, dst in sorted(
        topology.edge_pairs(),
        key=lambda key: (topology.node_index(key[0]), topology.node_index(key[1])),
    ):
        pair = topology.edge(src, dst)
        lines.append(f"edge {src} {dst} {pair.trust!r} {pair.untrust!r}")
    return "\n".join(lines) + "\n"


def generate_mesh(
    layer_sizes: Iterable[int], default_pair: TrustPair | None = None
) -> Topology:
    """Build a layered mesh between a source S and a destination D.

    Inner nodes are numbered consecutively from 1, layer by layer;
    consecutive layers (including S before the first and D after the
    last) are fully connected. Every edge carries default_pair, the
    indifferent pair (0.5, 0.5) when omitted. The number of simple
    S-to-D paths equals the product of the layer sizes.
    """
    sizes = tuple(layer_sizes)
    if not sizes:
        raise TopologyError("at least one layer is required")
    for size in sizes:
        if not isinstance(size, int) or size < 1:
            raise TopologyError(f"layer sizes must be integers >= 1, got {size!r}")
    if default_pair is None:
        default_pair = TrustPair(0.5, 0.5)

    layers: list[list[str]] = []
    next_id = 1
    for size in sizes:
        layers.append([str(next_id + offset) for offset in range(size)])
        next_id += size
    nodes = ["S", *(node for layer in layers for node in layer), "D"]
    pairs: dict[tuple[str, str], TrustPair] = {}
    for src_layer, dst_layer in zip([["S"], *layers], [*layers, ["D"]]):
        for src in src_layer:
            for dst in dst_layer:
                pairs[(src, dst)] = default_pair
    return Topology(nodes, pairs, "S", "D")


#: Reference trust pairs of the demo mesh; all other edges are (0.5, 0.5).
REFERENCE_EDGES: dict[tuple[str, str], tuple[float, float]] = {
    ("S", "1"): (0.8, 0.2),
    ("S", "3"): (0.95, 0.05),
    ("1", "7"): (0.8, 0.2),
    ("3", "7"): (0.6, 0.4),
    ("7", "11"): (0.9, 0.1),
    ("11", "D"): (0.8, 0.2),
}


def fixture_topology() -> Topology:
    """The built-in 4-3-4 demo mesh used across the docs and tests.

    Thirteen nodes (S, layers 1-4, 5-7 and 8-11, D) with full bipartite
    edges between consecutive layers, 32 edges in total. The six edges in
    REFERENCE_EDGES carry the reference trust values; every other edge is
    the indifferent pair (0.5, 0.5), strictly less trusted than any
    reference edge, so ranking and routing outcomes are pinned by the
    reference values alone.
    """
    mesh = generate_mesh((4, 3, 4))
    pairs = mesh.edge_pairs()
    for key, (trust, untrust) in REFERENCE_EDGES.items():
        pairs[key] = make_pair(trust, untrust)
    return Topology(mesh.nodes, pairs, mesh.source, mesh.destination)
