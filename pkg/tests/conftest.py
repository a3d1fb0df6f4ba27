"""Shared helpers: seeded random embeddings and relabelings."""

from __future__ import annotations

import random

import pytest

from rotsys import IsoWitness, MultiGraph, apply_iso, make_embedding, theta
from rotsys.core import Embedding, embedding_from_darts


def random_embedding(rng: random.Random, max_vertices: int = 6, extra_edges: int = 6) -> Embedding:
    """A random connected loopless multigraph with a random rotation system."""
    n = rng.randint(2, max_vertices)
    verts = list(range(1, n + 1))
    rng.shuffle(verts)
    pairs = [(verts[i - 1], verts[i]) for i in range(1, n)]
    for _ in range(rng.randint(0, extra_edges)):
        u, v = rng.sample(range(1, n + 1), 2)
        pairs.append((u, v))
    graph = MultiGraph(n, tuple(sorted((min(u, v), max(u, v)) for u, v in pairs)))
    rot = []
    for v in range(1, n + 1):
        darts = list(graph.darts_at[v - 1])
        rest = darts[1:]
        rng.shuffle(rest)
        rot.append([darts[0]] + rest)
    return embedding_from_darts(graph, rot)


def random_relabel(rng: random.Random, e: Embedding) -> Embedding:
    g = e.graph
    vperm = list(range(1, g.n + 1))
    rng.shuffle(vperm)
    eperm = list(range(1, g.edge_count + 1))
    rng.shuffle(eperm)
    witness = IsoWitness(
        vertex_map={v: vperm[v - 1] for v in range(1, g.n + 1)},
        edge_map={k: eperm[k - 1] for k in range(1, g.edge_count + 1)},
    )
    return apply_iso(e, witness)


@pytest.fixture
def theta5_systems():
    """The three one-face double-torus systems, by automorphism group order."""
    g = theta(5)
    return {
        2: make_embedding(g, [(1, 2, 3, 4, 5), (1, 2, 4, 5, 3)]),
        10: make_embedding(g, [(1, 2, 3, 4, 5), (1, 2, 3, 4, 5)]),
        5: make_embedding(g, [(1, 2, 3, 4, 5), (1, 4, 2, 5, 3)]),
    }
