"""Graph corpora for exhaustive and seeded random sweeps."""

from __future__ import annotations

import random
from functools import lru_cache
from itertools import combinations
from typing import Iterator

import networkx as nx

from .graph import Graph, girth, make_graph
from .recognition import is_2k2_free


def all_labeled_graphs(n: int) -> Iterator[Graph]:
    """All ``2**(n choose 2)`` labeled graphs on ``n`` vertices."""
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield make_graph(n, [pairs[i] for i in range(len(pairs)) if mask >> i & 1])


@lru_cache(maxsize=None)
def _atlas() -> tuple[Graph, ...]:
    return tuple(make_graph(a.number_of_nodes(), a.edges()) for a in nx.graph_atlas_g())


def nonisomorphic_graphs(n: int) -> list[Graph]:
    """One representative per isomorphism class on ``n <= 7`` vertices."""
    if not 0 <= n <= 7:
        raise ValueError("isomorphism classes are tabulated for n <= 7 only")
    return [g for g in _atlas() if g.n == n]


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return make_graph(n, [e for e in combinations(range(n), 2) if rng.random() < p])


def random_connected_graph(rng: random.Random, n: int, p: float | None = None) -> Graph:
    """Random spanning tree plus independent extra edges with probability ``p``."""
    p = rng.uniform(0.0, 0.5) if p is None else p
    order = list(range(n))
    rng.shuffle(order)
    edges = {tuple(sorted((order[i], order[rng.randrange(i)]))) for i in range(1, n)}
    edges |= {e for e in combinations(range(n), 2) if rng.random() < p}
    return make_graph(n, edges)


def random_2k2_free(rng: random.Random, n: int) -> Graph:
    """Random graph made 2K2-free by adding a cross edge to each induced 2K2 found."""
    g = random_graph(rng, n, rng.uniform(0.2, 0.9))
    while True:
        free, emb = is_2k2_free(g)
        if free:
            return g
        a, b, c, d = (emb[i] for i in range(4))
        x, y = rng.choice([(a, c), (a, d), (b, c), (b, d)])
        g = make_graph(n, g.edges() + [(x, y)])


def random_cubic(rng: random.Random, n: int) -> Graph:
    """Uniform simple cubic graph on ``n`` (even) vertices."""
    h = nx.random_regular_graph(3, n, seed=rng.randrange(2**32))
    return make_graph(n, h.edges())


def random_cyclic_graph(rng: random.Random, n: int) -> Graph:
    """Random connected graph that has at least one cycle."""
    while True:
        g = random_connected_graph(rng, n, rng.uniform(0.0, 0.3))
        if girth(g) != float("inf"):
            return g
