"""Seeded instance generators for analyses and property suites.

All generators are deterministic functions of their arguments: the same
seed reproduces the same document byte for byte.  Monitors are drawn
uniformly without replacement from the node set.
"""

from __future__ import annotations

import random
import warnings
from typing import Iterable

from .document import TopologyDocument
from .errors import UsageError
from .graph import Topology


def _resolve_monitor_count(n: int, monitors: int | None, monitor_fraction: float | None) -> int:
    if (monitors is None) == (monitor_fraction is None):
        raise UsageError("give exactly one of a monitor count or a monitor fraction")
    if monitor_fraction is not None:
        if not 0.0 < monitor_fraction < 1.0:
            raise UsageError("monitor fraction must lie strictly between 0 and 1")
        monitors = max(1, round(monitor_fraction * n))
    if monitors < 1:
        raise UsageError("at least one monitor is required")
    if monitors >= n:
        raise UsageError("at least one non-monitor is required")
    return monitors


def _document(n: int, edges: Iterable[tuple[int, int]], monitor_ids: Iterable[int]) -> TopologyDocument:
    return TopologyDocument(
        names=tuple(f"n{i}" for i in range(n)),
        monitors=frozenset(monitor_ids),
        edges=frozenset(edges),
    )


def erdos_renyi(
    n: int,
    edge_prob: float,
    *,
    seed: int,
    monitors: int | None = None,
    monitor_fraction: float | None = None,
) -> TopologyDocument:
    """G(n, p) random graph with seeded monitor placement."""
    if n < 2:
        raise UsageError("need at least two nodes")
    if not 0.0 <= edge_prob <= 1.0:
        raise UsageError("edge probability must lie in [0, 1]")
    count = _resolve_monitor_count(n, monitors, monitor_fraction)
    rng = random.Random(seed)
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < edge_prob
    ]
    monitor_ids = rng.sample(range(n), count)
    return _document(n, edges, monitor_ids)


def barabasi_albert(
    n: int,
    attach: int,
    *,
    seed: int,
    monitors: int | None = None,
    monitor_fraction: float | None = None,
) -> TopologyDocument:
    """Preferential-attachment graph: each new node links to ``attach`` others."""
    if attach < 1:
        raise UsageError("each new node must attach to at least one existing node")
    if n <= attach:
        raise UsageError("need more nodes than the attachment count")
    count = _resolve_monitor_count(n, monitors, monitor_fraction)
    rng = random.Random(seed)
    edges: list[tuple[int, int]] = []
    repeated: list[int] = []
    targets = list(range(attach))
    for source in range(attach, n):
        for t in targets:
            edges.append((t, source))
        repeated.extend(targets)
        repeated.extend([source] * attach)
        chosen: set[int] = set()
        while len(chosen) < attach:
            chosen.add(rng.choice(repeated))
        targets = sorted(chosen)
    monitor_ids = rng.sample(range(n), count)
    return _document(n, edges, monitor_ids)


def grid(
    width: int,
    height: int,
    *,
    seed: int,
    monitors: int | None = None,
    monitor_fraction: float | None = None,
) -> TopologyDocument:
    """Rectangular grid in row-major node order."""
    n = width * height
    if width < 1 or height < 1 or n < 2:
        raise UsageError("grid needs at least two nodes")
    count = _resolve_monitor_count(n, monitors, monitor_fraction)
    edges = []
    for r in range(height):
        for c in range(width):
            v = r * width + c
            if c + 1 < width:
                edges.append((v, v + 1))
            if r + 1 < height:
                edges.append((v, v + width))
    rng = random.Random(seed)
    monitor_ids = rng.sample(range(n), count)
    return _document(n, edges, monitor_ids)


def generate_topology(
    kind: str,
    *,
    seed: int,
    nodes: int | None = None,
    edge_prob: float | None = None,
    attach: int | None = None,
    width: int | None = None,
    height: int | None = None,
    monitors: int | None = None,
    monitor_fraction: float | None = None,
) -> TopologyDocument:
    """Dispatch over the three generator families by ``kind``."""
    if kind == "er":
        if nodes is None or edge_prob is None:
            raise UsageError("er needs --nodes and --edge-prob")
        return erdos_renyi(
            nodes, edge_prob, seed=seed, monitors=monitors, monitor_fraction=monitor_fraction
        )
    if kind == "ba":
        if nodes is None or attach is None:
            raise UsageError("ba needs --nodes and --attach")
        return barabasi_albert(
            nodes, attach, seed=seed, monitors=monitors, monitor_fraction=monitor_fraction
        )
    if kind == "grid":
        if width is None or height is None:
            raise UsageError("grid needs --width and --height")
        return grid(
            width, height, seed=seed, monitors=monitors, monitor_fraction=monitor_fraction
        )
    raise UsageError(f"unknown topology model {kind!r}; pick er, ba or grid")


def _shortest_paths_lexicographic(topology: Topology, source: int, target: int, limit: int):
    """Up to ``limit`` shortest source-target paths in lexicographic order."""
    dist = {target: 0}
    queue = [target]
    for u in queue:
        for w in topology.adjacency[u]:
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    if source not in dist:
        return
    found = 0
    stack = [(source, (source,))]
    while stack and found < limit:
        u, path = stack.pop()
        if u == target:
            yield path
            found += 1
            continue
        # Push in reverse order so the smallest next node is explored first.
        for w in sorted(topology.adjacency[u], reverse=True):
            if dist.get(w, -1) == dist[u] - 1:
                stack.append((w, path + (w,)))


def generate_paths(doc: TopologyDocument, per_pair: int) -> TopologyDocument:
    """Attach a shortest-path ensemble to the document.

    For each ordered monitor pair, up to ``per_pair`` shortest paths are
    taken in lexicographic node order; a path already present in the
    opposite orientation is dropped.  Fully deterministic.
    """
    if per_pair < 1:
        raise UsageError("per-pair path count must be positive")
    if len(doc.monitors) < 2:
        raise UsageError("path generation needs at least two monitors")
    topology = doc.to_topology()
    seen: set[tuple[int, ...]] = set()
    paths: list[tuple[int, ...]] = []
    ordered = sorted(doc.monitors)
    for src in ordered:
        for dst in ordered:
            if src == dst:
                continue
            for path in _shortest_paths_lexicographic(topology, src, dst, per_pair):
                key = min(path, path[::-1])
                if key not in seen:
                    seen.add(key)
                    paths.append(path)
    if not paths:
        warnings.warn("no monitor-to-monitor path exists; the ensemble is empty")
    return doc.with_paths(paths)
