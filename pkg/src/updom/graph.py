"""Immutable simple graphs on vertices ``0..n-1``.

Adjacency is kept as one Python integer per vertex (bit ``u`` of ``rows[v]``
is set iff ``uv`` is an edge).  Vertex subsets are plain ``frozenset``\\ s of
ids and are validated against the host graph by the functions that take them.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

INFINITE_GIRTH = math.inf


class GraphError(ValueError):
    """Raised for malformed graphs or vertex sets."""


def bits(mask: int) -> Iterator[int]:
    """Yield the positions of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


@dataclass(frozen=True)
class Graph:
    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0 or len(self.rows) != self.n:
            raise GraphError(f"expected {self.n} adjacency rows, got {len(self.rows)}")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.rows):
            if row & ~full:
                raise GraphError(f"vertex {v} has a neighbour outside [0, {self.n})")
            if row >> v & 1:
                raise GraphError(f"self-loop at vertex {v}")
            for u in bits(row):
                if not self.rows[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def m(self) -> int:
        return sum(row.bit_count() for row in self.rows) // 2

    def vertices(self) -> range:
        return range(self.n)

    def neighbours(self, v: int) -> frozenset[int]:
        return frozenset(bits(self.rows[v]))

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, sorted lexicographically."""
        return [(u, v) for u in range(self.n) for v in bits(self.rows[u] >> (u + 1) << (u + 1))]

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges()})"


def make_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Build the simple graph on ``n`` vertices with the listed edges.

    Duplicate pairs are merged; self-loops and out-of-range ids are rejected.
    """
    if n < 0:
        raise GraphError(f"vertex count must be non-negative, got {n}")
    rows = [0] * n
    for pair in edges:
        u, v = pair
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has a vertex outside [0, {n})")
        if u == v:
            raise GraphError(f"self-loop ({u}, {v}) is not allowed")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def vertex_set(g: Graph, vertices: Iterable[int]) -> frozenset[int]:
    """Return ``vertices`` as a frozenset after checking it lies inside ``g``."""
    s = frozenset(vertices)
    for v in s:
        if not (isinstance(v, int) and 0 <= v < g.n):
            raise GraphError(f"vertex {v!r} is not a vertex of a graph with {g.n} vertices")
    return s


def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def complete_graph(n: int) -> Graph:
    return make_graph(n, combinations(range(n), 2))


def path_graph(n: int) -> Graph:
    return make_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return make_graph(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    """``K_{1,leaves}`` with center 0."""
    return make_graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def prism_graph() -> Graph:
    """Two triangles ``{0,1,2}`` and ``{3,4,5}`` joined by the matching ``i -- i+3``."""
    return make_graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])


def disjoint_union(*graphs: Graph) -> Graph:
    edges, offset = [], 0
    for h in graphs:
        edges.extend((u + offset, v + offset) for u, v in h.edges())
        offset += h.n
    return make_graph(offset, edges)


def complement(g: Graph) -> Graph:
    full = g.full_mask
    return Graph(g.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.rows)))


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Subgraph induced by ``s``; returns it with the old-to-new id map.

    New ids follow the increasing order of the old ids.
    """
    order = sorted(vertex_set(g, s))
    relabel = {old: new for new, old in enumerate(order)}
    edges = [(relabel[u], relabel[v]) for u, v in combinations(order, 2) if g.has_edge(u, v)]
    return make_graph(len(order), edges), relabel


def max_degree(g: Graph) -> int:
    return max((row.bit_count() for row in g.rows), default=0)


def connected_components(g: Graph) -> list[frozenset[int]]:
    """Components ordered by their smallest vertex."""
    seen, comps = 0, []
    for start in range(g.n):
        if seen >> start & 1:
            continue
        comp = frontier = 1 << start
        while frontier:
            reach = 0
            for v in bits(frontier):
                reach |= g.rows[v]
            frontier = reach & ~comp
            comp |= frontier
        seen |= comp
        comps.append(frozenset(bits(comp)))
    return comps


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) <= 1


def girth(g: Graph) -> float | int:
    """Length of a shortest cycle, or ``INFINITE_GIRTH`` for forests."""
    best = INFINITE_GIRTH
    for root in range(g.n):
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            v = queue.popleft()
            if 2 * dist[v] + 1 >= best:
                break
            for u in bits(g.rows[v]):
                if u not in dist:
                    dist[u] = dist[v] + 1
                    parent[u] = v
                    queue.append(u)
                elif parent[v] != u:
                    best = min(best, dist[u] + dist[v] + 1)
    return best


def two_coloring(g: Graph) -> list[int] | None:
    """A proper 2-coloring (list of 0/1 per vertex), or None if ``g`` has an odd cycle.

    Each component's smallest vertex gets color 0.
    """
    color = [-1] * g.n
    for root in range(g.n):
        if color[root] != -1:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for u in bits(g.rows[v]):
                if color[u] == -1:
                    color[u] = 1 - color[v]
                    queue.append(u)
                elif color[u] == color[v]:
                    return None
    return color


def is_bipartite(g: Graph) -> bool:
    return two_coloring(g) is not None


def clique_bipartition(g: Graph) -> tuple[frozenset[int], frozenset[int]] | None:
    """Split ``V(g)`` into two cliques if ``g`` is co-bipartite, else None."""
    color = two_coloring(complement(g))
    if color is None:
        return None
    first = frozenset(v for v in range(g.n) if color[v] == 0)
    return first, frozenset(range(g.n)) - first


def is_cobipartite(g: Graph) -> bool:
    return clique_bipartition(g) is not None


def is_independent(g: Graph, s: Iterable[int]) -> bool:
    mask = to_mask(s)
    return all(not g.rows[v] & mask for v in bits(mask))


def is_clique(g: Graph, s: Iterable[int]) -> bool:
    mask = to_mask(s)
    return all((g.rows[v] | 1 << v) & mask == mask for v in bits(mask))


def contains_induced(g: Graph, h: Graph) -> dict[int, int] | None:
    """Find an induced copy of ``h`` in ``g``.

    Returns an injective map ``V(h) -> V(g)`` under which edges and non-edges
    of ``h`` are preserved, or None.  Plain backtracking: pattern vertices are
    placed in a connectivity-respecting, degree-descending order, and each
    candidate is filtered by degree and by its (non-)adjacency to the
    vertices already placed.
    """
    if h.n > g.n:
        return None
    if h.n == 0:
        return {}
    order = _pattern_order(h)
    g_deg = [row.bit_count() for row in g.rows]
    h_deg = [row.bit_count() for row in h.rows]
    image = [-1] * h.n
    used = 0

    def extend(depth: int) -> bool:
        nonlocal used
        if depth == h.n:
            return True
        u = order[depth]
        must, must_not = 0, 0
        for w in order[:depth]:
            if h.rows[u] >> w & 1:
                must |= 1 << image[w]
            else:
                must_not |= 1 << image[w]
        candidates = _common(g, must) & ~used
        for x in bits(candidates):
            if g_deg[x] < h_deg[u] or g.rows[x] & must_not:
                continue
            image[u] = x
            used |= 1 << x
            if extend(depth + 1):
                return True
            used &= ~(1 << x)
        image[u] = -1
        return False

    if extend(0):
        return {u: image[u] for u in range(h.n)}
    return None


def _common(g: Graph, must: int) -> int:
    cand = g.full_mask
    for x in bits(must):
        cand &= g.rows[x]
    return cand


def _pattern_order(h: Graph) -> list[int]:
    """Degree-descending order in which every vertex after the first of its
    component has an already-placed neighbour where possible."""
    order: list[int] = []
    placed = 0
    remaining = sorted(range(h.n), key=lambda v: (-h.degree(v), v))
    while len(order) < h.n:
        frontier = [v for v in remaining if not placed >> v & 1 and h.rows[v] & placed]
        pick = frontier[0] if frontier else next(v for v in remaining if not placed >> v & 1)
        order.append(pick)
        placed |= 1 << pick
    return order


def is_free(g: Graph, family: Iterable[Graph]) -> tuple[bool, tuple[int, dict[int, int]] | None]:
    """Check ``g`` against a list of forbidden induced subgraphs.

    Returns ``(True, None)`` if none occurs, else ``(False, (index, embedding))``
    for the first family member found.
    """
    for index, h in enumerate(family):
        emb = contains_induced(g, h)
        if emb is not None:
            return False, (index, emb)
    return True, None


def verify_embedding(g: Graph, h: Graph, emb: dict[int, int]) -> bool:
    """Check that ``emb`` is an injective induced embedding of ``h`` into ``g``."""
    if sorted(emb) != list(range(h.n)) or len(set(emb.values())) != h.n:
        return False
    return all(
        h.has_edge(a, b) == g.has_edge(emb[a], emb[b]) for a, b in combinations(range(h.n), 2)
    )


def shortest_cycle(g: Graph) -> list[int] | None:
    """Vertices of a shortest cycle in cyclic order, or None for forests."""
    best: list[int] | None = None
    for root in range(g.n):
        parent = {root: -1}
        dist = {root: 0}
        queue = deque([root])
        while queue:
            v = queue.popleft()
            if best is not None and 2 * dist[v] + 1 >= len(best):
                break
            for u in bits(g.rows[v]):
                if u not in dist:
                    dist[u] = dist[v] + 1
                    parent[u] = v
                    queue.append(u)
                elif parent[v] != u and (best is None or dist[u] + dist[v] + 1 < len(best)):
                    left, right = [v], [u]
                    while parent[left[-1]] != -1:
                        left.append(parent[left[-1]])
                    while parent[right[-1]] != -1:
                        right.append(parent[right[-1]])
                    cycle = left[::-1] + right[:-1]
                    if len(set(cycle)) == len(cycle) == dist[u] + dist[v] + 1:
                        best = cycle
    return best
