"""Shared fixtures: deterministic instance corpus and hypothesis settings."""

from __future__ import annotations

import random
import sys
import warnings
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

sys.path.insert(0, str(Path(__file__).parent))

from nodeloc.document import TopologyDocument
from nodeloc.generate import erdos_renyi, generate_paths, grid

settings.register_profile(
    "ci",
    derandomize=True,
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("ci")


def build_corpus(count: int = 300) -> list[TopologyDocument]:
    """Seeded topologies, 4 to 8 nodes, 1 to 3 monitors; fully deterministic."""
    docs: list[TopologyDocument] = []
    i = 0
    while len(docs) < count:
        n = 4 + (i % 5)
        monitors = 1 + (i % 3)
        if i % 11 == 10:
            docs.append(grid(2, n // 2, seed=9000 + i, monitors=monitors))
        else:
            p = (0.25, 0.4, 0.55, 0.7)[(i // 5) % 4]
            docs.append(erdos_renyi(n, p, seed=1000 + i, monitors=monitors))
        i += 1
    return docs


def _seeded_monitor_walks(doc: TopologyDocument, seed: int, count: int) -> TopologyDocument:
    """Random monitor-to-monitor walks; richer coverage than shortest paths."""
    topo = doc.to_topology()
    rng = random.Random(seed)
    monitors = sorted(topo.monitors)
    paths = []
    for _ in range(count):
        walk = [rng.choice(monitors)]
        for _ in range(2 * topo.node_count):
            nxt = sorted(topo.adjacency[walk[-1]])
            if not nxt:
                break
            walk.append(rng.choice(nxt))
            if len(walk) >= 2 and walk[-1] in topo.monitors:
                break
        if len(walk) >= 2 and walk[-1] in topo.monitors:
            paths.append(tuple(walk))
    return doc.with_paths(paths)


def build_up_corpus(count: int = 300) -> list[TopologyDocument]:
    """Seeded (topology, generated path ensemble) instances with >= 2 monitors.

    Half the ensembles are the generator's shortest paths, half are seeded
    monitor-to-monitor walks, so cover sizes range over 0, finite and
    infinite values.
    """
    docs: list[TopologyDocument] = []
    i = 0
    with warnings.catch_warnings():
        # disconnected monitors legitimately yield empty ensembles here
        warnings.simplefilter("ignore")
        while len(docs) < count:
            n = 4 + (i % 5)
            monitors = 2 + (i % 2)
            p = (0.25, 0.35, 0.5)[(i // 2) % 3]
            if i % 7 == 6:
                doc = grid(2, max(2, n // 2), seed=9000 + i, monitors=monitors)
            else:
                doc = erdos_renyi(n, p, seed=5000 + i, monitors=monitors)
            if i % 2 == 0:
                doc = generate_paths(doc, per_pair=1 + (i % 3))
            else:
                doc = _seeded_monitor_walks(doc, seed=4000 + i, count=3 + (i % 6))
            docs.append(doc)
            i += 1
    return docs


@pytest.fixture(scope="session")
def corpus() -> list[TopologyDocument]:
    return build_corpus()


@pytest.fixture(scope="session")
def up_corpus() -> list[TopologyDocument]:
    return build_up_corpus()
