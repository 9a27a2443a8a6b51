"""Undirected topology model and vertex-connectivity primitives.

A :class:`Topology` is an immutable simple graph whose nodes carry a
monitor / non-monitor label.  Node ids are dense integers ``0..node_count-1``
so that the exhaustive analyses elsewhere in the package can use cheap set
arithmetic; human-readable names live in the document layer.

All functions here are pure and every value is frozen, so shared topologies
may be analyzed concurrently without locking.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable

from .errors import InputError

Edge = tuple[int, int]

# Arc capacity standing in for "unbounded" in the unit-capacity flow networks
# below; any value larger than the node count works.
_BIG = 1 << 20


def _normalized_edges(node_count: int, edges: Iterable[Iterable[int]]) -> frozenset[Edge]:
    out: set[Edge] = set()
    for edge in edges:
        u, v = edge
        u, v = int(u), int(v)
        if not (0 <= u < node_count and 0 <= v < node_count):
            raise InputError(f"edge ({u}, {v}) references a node outside 0..{node_count - 1}")
        if u == v:
            raise InputError(f"self-loop at node {u} is not allowed")
        out.add((u, v) if u < v else (v, u))
    return frozenset(out)


@dataclass(frozen=True)
class Topology:
    """Immutable undirected graph with a monitor labelling.

    Attributes:
        node_count: number of nodes; ids are ``0..node_count-1``.
        edges: normalized ``(u, v)`` pairs with ``u < v``; no self-loops.
        monitors: non-empty set of monitor node ids.
    """

    node_count: int
    edges: frozenset[Edge]
    monitors: frozenset[int]
    adjacency: tuple[frozenset[int], ...] = field(init=False, repr=False, compare=False)
    non_monitors: frozenset[int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.node_count < 1:
            raise InputError("a topology needs at least one node")
        object.__setattr__(self, "edges", _normalized_edges(self.node_count, self.edges))
        monitors = frozenset(int(m) for m in self.monitors)
        for m in monitors:
            if not 0 <= m < self.node_count:
                raise InputError(f"monitor id {m} outside 0..{self.node_count - 1}")
        if not monitors:
            raise InputError("a topology needs at least one monitor")
        object.__setattr__(self, "monitors", monitors)
        adj: list[set[int]] = [set() for _ in range(self.node_count)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        object.__setattr__(self, "adjacency", tuple(frozenset(a) for a in adj))
        object.__setattr__(
            self, "non_monitors", frozenset(range(self.node_count)) - monitors
        )

    @property
    def nodes(self) -> range:
        return range(self.node_count)

    @property
    def sigma(self) -> int:
        """Number of non-monitors, the largest conceivable failure-set size."""
        return self.node_count - len(self.monitors)

    def is_monitor(self, v: int) -> bool:
        self._check_node(v)
        return v in self.monitors

    def neighbors(self, v: int) -> frozenset[int]:
        """Open neighborhood of ``v``."""
        self._check_node(v)
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def has_edge(self, u: int, v: int) -> bool:
        self._check_node(u)
        self._check_node(v)
        return v in self.adjacency[u]

    def monitor_neighbor_count(self, v: int) -> int:
        """How many monitors are adjacent to ``v``."""
        return len(self.neighbors(v) & self.monitors)

    def _check_node(self, v: int) -> None:
        if not isinstance(v, int) or not 0 <= v < self.node_count:
            raise InputError(f"unknown node id {v!r}")

    def _check_nodes(self, nodes: Iterable[int]) -> frozenset[int]:
        out = frozenset(nodes)
        for v in out:
            self._check_node(v)
        return out


@dataclass(frozen=True)
class ComponentPartition:
    """Connected components of a vertex-deleted subgraph.

    ``components`` are pairwise disjoint, ordered by their smallest member,
    and together with ``removed`` cover every node of the source topology.
    """

    components: tuple[frozenset[int], ...]
    removed: frozenset[int]


def connected_components(topology: Topology, removed: Iterable[int] = ()) -> ComponentPartition:
    """Connected components of ``topology`` after deleting ``removed``.

    Components are returned sorted by their smallest member id, which makes
    every downstream report deterministic.
    """
    removed_set = topology._check_nodes(removed)
    seen: set[int] = set(removed_set)
    components: list[frozenset[int]] = []
    for start in topology.nodes:
        if start in seen:
            continue
        stack = [start]
        seen.add(start)
        members = {start}
        while stack:
            u = stack.pop()
            for w in topology.adjacency[u]:
                if w not in seen:
                    seen.add(w)
                    members.add(w)
                    stack.append(w)
        components.append(frozenset(members))
    return ComponentPartition(tuple(components), removed_set)


def neighborhood_of_set(topology: Topology, nodes: Iterable[int]) -> frozenset[int]:
    """All nodes outside ``nodes`` adjacent to at least one member of it."""
    inside = topology._check_nodes(nodes)
    out: set[int] = set()
    for v in inside:
        out |= topology.adjacency[v]
    return frozenset(out - inside)


class _FlowNet:
    """Minimal integer max-flow network (Dinic) used by the cut routines."""

    def __init__(self, n: int) -> None:
        self.n = n
        self.to: list[int] = []
        self.cap: list[int] = []
        self.adj: list[list[int]] = [[] for _ in range(n)]

    def add_arc(self, u: int, v: int, cap: int) -> None:
        self.adj[u].append(len(self.to))
        self.to.append(v)
        self.cap.append(cap)
        self.adj[v].append(len(self.to))
        self.to.append(u)
        self.cap.append(0)

    def max_flow(self, s: int, t: int, limit: int = _BIG) -> int:
        flow = 0
        while flow < limit:
            level = self._bfs_levels(s, t)
            if level is None:
                break
            it = [0] * self.n
            while flow < limit:
                pushed = self._dfs(s, t, limit - flow, level, it)
                if pushed == 0:
                    break
                flow += pushed
        return flow

    def _bfs_levels(self, s: int, t: int) -> list[int] | None:
        level = [-1] * self.n
        level[s] = 0
        queue = [s]
        for u in queue:
            for a in self.adj[u]:
                v = self.to[a]
                if self.cap[a] > 0 and level[v] < 0:
                    level[v] = level[u] + 1
                    queue.append(v)
        return level if level[t] >= 0 else None

    def _dfs(self, u: int, t: int, limit: int, level: list[int], it: list[int]) -> int:
        if u == t:
            return limit
        while it[u] < len(self.adj[u]):
            a = self.adj[u][it[u]]
            v = self.to[a]
            if self.cap[a] > 0 and level[v] == level[u] + 1:
                pushed = self._dfs(v, t, min(limit, self.cap[a]), level, it)
                if pushed > 0:
                    self.cap[a] -= pushed
                    self.cap[a ^ 1] += pushed
                    return pushed
            it[u] += 1
        return 0


def _resolve(graph) -> Topology:
    # Accepts either a Topology or anything exposing one under .graph
    # (the auxiliary graphs built elsewhere in the package).
    inner = getattr(graph, "graph", graph)
    if not isinstance(inner, Topology):
        raise InputError(f"expected a topology or auxiliary graph, got {type(graph).__name__}")
    return inner


def _split_flow_net(
    topology: Topology,
    uncapacitated: frozenset[int],
    excluded: frozenset[int],
    extra_nodes: int = 0,
) -> _FlowNet:
    """Node-split digraph: node v becomes arc 2v -> 2v+1 of capacity one.

    Nodes in ``uncapacitated`` get unbounded internal capacity, nodes in
    ``excluded`` are unusable.  ``extra_nodes`` reserves ids past the split
    pairs (used for a super-sink).
    """
    net = _FlowNet(2 * topology.node_count + extra_nodes)
    for v in topology.nodes:
        if v in excluded:
            continue
        net.add_arc(2 * v, 2 * v + 1, _BIG if v in uncapacitated else 1)
    for u, v in topology.edges:
        if u in excluded or v in excluded:
            continue
        net.add_arc(2 * u + 1, 2 * v, _BIG)
        net.add_arc(2 * v + 1, 2 * u, _BIG)
    return net


def max_disjoint_paths(
    topology: Topology,
    source: int,
    targets: Iterable[int],
    forbidden: Iterable[int] = (),
    limit: int | None = None,
) -> int:
    """Maximum number of vertex-disjoint paths from ``source`` to distinct targets.

    Paths may share only the source, must avoid every ``forbidden`` node, and
    each ends at a distinct target.  Computed as a unit-capacity flow on the
    node-split digraph: the source is uncapacitated, every other node has
    capacity one, and each target feeds a super-sink through a capacity-one
    arc.  Pass ``limit`` to stop counting early once that many paths exist.
    """
    topology._check_node(source)
    target_set = topology._check_nodes(targets)
    forbidden_set = topology._check_nodes(forbidden)
    if source in forbidden_set:
        raise InputError("source must not be forbidden")
    if target_set & forbidden_set:
        raise InputError("targets and forbidden nodes must be disjoint")
    if source in target_set:
        raise InputError("source must not be a target")
    if not target_set:
        return 0
    net = _split_flow_net(topology, frozenset({source}), forbidden_set, extra_nodes=1)
    sink = 2 * topology.node_count
    for t in target_set:
        net.add_arc(2 * t + 1, sink, 1)
    cap = len(target_set) if limit is None else min(limit, len(target_set))
    return net.max_flow(2 * source + 1, sink, limit=cap)


def disjoint_paths(
    topology: Topology,
    source: int,
    targets: Iterable[int],
    forbidden: Iterable[int] = (),
    limit: int | None = None,
) -> list[tuple[int, ...]]:
    """Concrete vertex-disjoint paths matching :func:`max_disjoint_paths`.

    Returns node sequences from ``source`` to distinct targets; used to build
    human-checkable probe witnesses.
    """
    topology._check_node(source)
    target_set = topology._check_nodes(targets)
    forbidden_set = topology._check_nodes(forbidden)
    if source in forbidden_set or (target_set & forbidden_set) or source in target_set:
        raise InputError("source, targets and forbidden nodes must be pairwise consistent")
    if not target_set:
        return []
    net = _split_flow_net(topology, frozenset({source}), forbidden_set, extra_nodes=1)
    sink = 2 * topology.node_count
    for t in target_set:
        net.add_arc(2 * t + 1, sink, 1)
    cap = len(target_set) if limit is None else min(limit, len(target_set))
    flow = net.max_flow(2 * source + 1, sink, limit=cap)
    # Decompose the integral flow into node sequences.  Saturated arcs are
    # exactly those whose residual capacity moved to the reverse arc.
    used = [False] * len(net.to)
    paths: list[tuple[int, ...]] = []
    for _ in range(flow):
        path = [source]
        u = 2 * source + 1
        while u != sink:
            for a in net.adj[u]:
                if used[a] or a % 2 == 1:
                    continue
                if net.cap[a ^ 1] > 0:  # forward arc carrying flow
                    used[a] = True
                    net.cap[a ^ 1] -= 1
                    v = net.to[a]
                    if v == sink:
                        u = sink
                    else:
                        path.append(v // 2)
                        u = v + 1  # hop from v_in through the split arc to v_out
                    break
            else:
                raise AssertionError("flow decomposition failed")
        paths.append(tuple(path))
    return paths


def _st_vertex_cut(topology: Topology, s: int, t: int, limit: int) -> int:
    net = _split_flow_net(topology, frozenset({s, t}), frozenset())
    return net.max_flow(2 * s + 1, 2 * t, limit=limit)


def vertex_connectivity(graph) -> int:
    """Vertex connectivity, with the conventions the analyses rely on.

    A complete graph on n nodes has connectivity n-1; a disconnected graph
    has connectivity 0.  Accepts a plain topology or an auxiliary graph.

    The cut search anchors at a fixed minimum-degree vertex x: it takes the
    minimum s-t cut over every pair (x, w) with w non-adjacent to x and over
    every non-adjacent pair of neighbors of x.  The second family is needed
    when x sits inside every minimum cut; together the two families always
    contain a pair realizing the global minimum.
    """
    topo = _resolve(graph)
    n = topo.node_count
    if n < 2:
        raise InputError("vertex connectivity needs at least 2 nodes")
    if len(connected_components(topo).components) > 1:
        return 0
    if len(topo.edges) == n * (n - 1) // 2:
        return n - 1
    x = min(topo.nodes, key=lambda v: (topo.degree(v), v))
    best = topo.degree(x)
    for w in topo.nodes:
        if w == x or w in topo.adjacency[x]:
            continue
        best = min(best, _st_vertex_cut(topo, x, w, limit=best))
    for y, z in combinations(sorted(topo.adjacency[x]), 2):
        if z not in topo.adjacency[y]:
            best = min(best, _st_vertex_cut(topo, y, z, limit=best))
    return best


def is_k_connected(graph, k: int) -> bool:
    """True when the graph is k-vertex-connected.

    ``k = 0`` holds for every non-empty graph; otherwise the graph needs more
    than k nodes and connectivity at least k.
    """
    if k < 0:
        raise InputError("k must be non-negative")
    topo = _resolve(graph)
    if k == 0:
        return topo.node_count > 0
    if topo.node_count <= k:
        return False
    return vertex_connectivity(topo) >= k
