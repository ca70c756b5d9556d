"""Membership tests for the hereditary classes used by the hardness results."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .forbidden import FORBIDDEN_N, G1
from .graph import (
    Graph,
    GraphError,
    bits,
    complement,
    connected_components,
    contains_induced,
    cycle_graph,
    girth,
    induced_subgraph,
    is_clique,
    is_cobipartite,
    is_free,
    make_graph,
    max_degree,
    to_mask,
    two_coloring,
    vertex_set,
)

TWO_K2 = make_graph(4, [(0, 1), (2, 3)])
MAX_COLORINGS = 1 << 20


class RefusedError(GraphError):
    """A search was refused because it would exceed a configured bound."""


def is_2k2_free(g: Graph) -> tuple[bool, dict[int, int] | None]:
    """Pairwise edge check for an induced ``2K2``.

    Returns ``(True, None)`` or ``(False, embedding)`` where the embedding maps
    the ``2K2`` pattern ``0-1, 2-3`` into ``g``.
    """
    edges = g.edges()
    for i, (a, b) in enumerate(edges):
        ab = (1 << a) | (1 << b)
        blocked = g.rows[a] | g.rows[b] | ab
        for c, d in edges[i + 1:]:
            if not (blocked >> c & 1 or blocked >> d & 1):
                return False, {0: a, 1: b, 2: c, 3: d}
    return True, None


# ------------------------------------------------------------ nice partitions

@dataclass(frozen=True)
class NicePartition:
    """Two cliques ``u`` and ``w`` covering the graph such that every ``w``
    vertex has at most two neighbours in ``u`` and no two ``w`` vertices share
    the same pair of ``u`` neighbours."""

    u: frozenset[int]
    w: frozenset[int]


def partition_violation(g: Graph, u: Iterable[int], w: Iterable[int]) -> str | None:
    """Why ``(u, w)`` is not a nice partition of ``g``, or None if it is."""
    u, w = vertex_set(g, u), vertex_set(g, w)
    if u & w or len(u) + len(w) != g.n:
        return "parts must partition the vertex set"
    if not is_clique(g, u):
        return "U is not a clique"
    if not is_clique(g, w):
        return "W is not a clique"
    umask = to_mask(u)
    pairs = {}
    for x in sorted(w):
        nb = g.rows[x] & umask
        count = nb.bit_count()
        if count > 2:
            return f"vertex {x} of W has {count} neighbours in U"
        if count == 2:
            if nb in pairs:
                return f"vertices {pairs[nb]} and {x} of W share U-neighbours {sorted(bits(nb))}"
            pairs[nb] = x
    return None


def is_nice_partition(g: Graph, p: NicePartition) -> bool:
    return partition_violation(g, p.u, p.w) is None


def find_nice_partition(g: Graph, max_colorings: int = MAX_COLORINGS) -> NicePartition | None:
    """Search the clique bipartitions of ``g`` for a nice one.

    Every clique bipartition comes from a 2-coloring of the complement, i.e.
    an independent choice of orientation per complement component.  The
    colorings are tried in binary-counter order, and for each one the side
    holding the smaller colors is first tried as ``W``.
    """
    co = complement(g)
    color = two_coloring(co)
    if color is None:
        return None
    comps = connected_components(co)
    if (1 << len(comps)) > max_colorings:
        raise RefusedError(f"{1 << len(comps)} clique bipartitions exceed the cap of {max_colorings}")
    comp_of = [0] * g.n
    for i, comp in enumerate(comps):
        for v in comp:
            comp_of[v] = i
    everything = frozenset(range(g.n))
    for flips in range(1 << len(comps)):
        side0 = frozenset(v for v in range(g.n) if color[v] ^ (flips >> comp_of[v] & 1) == 0)
        side1 = everything - side0
        for u, w in ((side1, side0), (side0, side1)):
            if partition_violation(g, u, w) is None:
                return NicePartition(u, w)
    return None


def in_q_star(g: Graph, method: str = "partition") -> bool:
    """Whether ``g`` is an induced subgraph of some Q-graph.

    ``"partition"`` searches for a nice partition, ``"forbidden"`` tests
    freeness of the eleven graphs in ``FORBIDDEN_N``.
    """
    if method == "partition":
        return find_nice_partition(g) is not None
    if method == "forbidden":
        return is_free(g, list(FORBIDDEN_N.values()))[0]
    raise ValueError(f"unknown method {method!r}; use 'partition' or 'forbidden'")


def forbidden_witness(g: Graph) -> tuple[str, dict[int, int]] | None:
    """First member of ``FORBIDDEN_N`` contained in ``g`` with its embedding."""
    names = list(FORBIDDEN_N)
    free, hit = is_free(g, list(FORBIDDEN_N.values()))
    if free:
        return None
    index, emb = hit
    return names[index], emb


def forbidden_self_test() -> dict[str, bool]:
    """Structural checks that catch transcription errors in ``FORBIDDEN_N``."""
    graphs = [FORBIDDEN_N[f"G{i}"] for i in range(1, 9)]
    results = {
        "G1..G8 co-bipartite": all(is_cobipartite(h) for h in graphs),
        "co-C3, co-C5, co-C7 not co-bipartite": not any(
            is_cobipartite(FORBIDDEN_N[k]) for k in ("co-C3", "co-C5", "co-C7")),
        "no nice partition": all(find_nice_partition(h) is None for h in FORBIDDEN_N.values()),
        "G1 in co-C9": contains_induced(complement(cycle_graph(9)), G1) is not None,
        "vertex-deletion minimal": all(
            find_nice_partition(induced_subgraph(h, set(range(h.n)) - {v})[0]) is not None
            for h in FORBIDDEN_N.values() for v in range(h.n)),
        "pairwise incomparable": all(
            a is b or a.n > b.n or contains_induced(b, a) is None
            for a in FORBIDDEN_N.values() for b in FORBIDDEN_N.values()),
    }
    return results


def extract_base(g: Graph, p: NicePartition) -> Graph:
    """Recover ``H`` with ``Q(H) = g`` from an exact Q-graph partition.

    Vertex ``i`` of ``H`` is the ``i``-th smallest vertex of ``p.u``; each
    ``w`` vertex becomes the edge joining its two ``u`` neighbours.
    """
    why = partition_violation(g, p.u, p.w)
    if why is not None:
        raise GraphError(f"not a nice partition: {why}")
    order = sorted(p.u)
    index = {v: i for i, v in enumerate(order)}
    umask = to_mask(p.u)
    edges = []
    for x in sorted(p.w):
        nb = list(bits(g.rows[x] & umask))
        if len(nb) != 2:
            raise GraphError(
                f"vertex {x} has {len(nb)} neighbours in U, so the graph is not an exact Q-graph; "
                "use constructions.complete_to_q first")
        edges.append((index[nb[0]], index[nb[1]]))
    return make_graph(len(order), edges)


# ------------------------------------------------------- tripods and Z_k

def tripod_legs(g: Graph, comp: Iterable[int]) -> tuple[int, int, int] | None:
    """Leg lengths (descending) if the component is a tripod, else None.

    A path on ``k`` vertices is reported as ``(k - 1, 0, 0)``.
    """
    comp = sorted(comp)
    cmask = to_mask(comp)
    edges = sum((g.rows[v] & cmask).bit_count() for v in comp) // 2
    if edges != len(comp) - 1:
        return None
    degrees = {v: (g.rows[v] & cmask).bit_count() for v in comp}
    if max(degrees.values(), default=0) > 3:
        return None
    hubs = [v for v in comp if degrees[v] == 3]
    if len(hubs) > 1:
        return None
    if hubs:
        center = hubs[0]
    else:
        center = next((v for v in comp if degrees[v] <= 1), comp[0])
    legs = []
    for start in bits(g.rows[center] & cmask):
        length, prev, cur = 1, center, start
        while True:
            nxt = [x for x in bits(g.rows[cur] & cmask) if x != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            length += 1
        legs.append(length)
    legs += [0] * (3 - len(legs))
    return tuple(sorted(legs, reverse=True))


def in_class_S(g: Graph) -> tuple[bool, list[tuple[int, int, int] | None]]:
    """Forest whose components are all tripods ``S_{i,j,l}``.

    Returns the verdict and the leg triple (or None) of every component.
    """
    legs = [tripod_legs(g, comp) for comp in connected_components(g)]
    return all(x is not None for x in legs), legs


def in_Z_k(g: Graph, k: int, convention: str = "vertices") -> bool:
    """Maximum degree at most 3, girth above ``k``, and no induced ``H_1..H_k``."""
    from .constructions import h_graph

    if k < 3:
        raise GraphError(f"Z_k is defined for k >= 3, got {k}")
    if max_degree(g) > 3 or girth(g) <= k:
        return False
    return is_free(g, [h_graph(i, convention) for i in range(1, k + 1)])[0]


def is_cobipartite_by_anticycles(g: Graph) -> bool:
    """Freeness of every odd anticycle that fits in ``g`` (finite truncation)."""
    family = [complement(cycle_graph(k)) for k in range(3, g.n + 1, 2)]
    return is_free(g, family)[0]
