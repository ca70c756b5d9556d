"""Reduction constructions, their solution lifts, and the boundary families.

Every construction keeps the base vertices at ids ``0..n-1`` and appends new
vertices after them in the order of ``Graph.edges()``, so all lifts are
deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Any, Iterable

from .domination import (
    brute_alpha,
    brute_Gamma,
    brute_gamma,
    closed_mask,
    is_dominating,
    is_independent_set,
    is_maximal_independent,
    is_minimal_dominating,
    normalize_minimal_dominating,
    vertices_without_private,
)
from .graph import (
    Graph,
    GraphError,
    bits,
    connected_components,
    make_graph,
    to_mask,
    vertex_set,
)
from .recognition import NicePartition, partition_violation


# ---------------------------------------------------------------- subdivision

def subdivide(g: Graph) -> tuple[Graph, dict[int, tuple[int, int]]]:
    """Incidence graph ``S(g)``; new vertex ``n + i`` subdivides the ``i``-th edge.

    Returns the graph and the map from new vertices to the edges they replace.
    """
    edges = g.edges()
    new_edges, edge_of = [], {}
    for i, (u, v) in enumerate(edges):
        x = g.n + i
        edge_of[x] = (u, v)
        new_edges += [(u, x), (x, v)]
    return make_graph(g.n + len(edges), new_edges), edge_of


# ------------------------------------------------------------------ Q-graphs

@dataclass(frozen=True)
class QGraph:
    graph: Graph
    base: Graph
    old: frozenset[int]
    new: frozenset[int]
    edge_of: dict[int, tuple[int, int]] = field(hash=False)

    @property
    def vertex_of_edge(self) -> dict[tuple[int, int], int]:
        return {e: x for x, e in self.edge_of.items()}

    @property
    def partition(self) -> NicePartition:
        return NicePartition(self.old, self.new)


def q_construct(g: Graph) -> QGraph:
    """``S(g)`` with a clique on the old vertices and a clique on the new ones."""
    s, edge_of = subdivide(g)
    old = range(g.n)
    new = range(g.n, s.n)
    extra = list(combinations(old, 2)) + list(combinations(new, 2))
    graph = make_graph(s.n, s.edges() + extra)
    return QGraph(graph, g, frozenset(old), frozenset(new), edge_of)


def q_forward(qg: QGraph, d: Iterable[int]) -> frozenset[int]:
    """Lift a dominating set of the base to a minimal dominating set of ``Q``.

    ``d`` must be minimal dominating with a private neighbour outside ``d``
    for every member.  Each vertex outside ``d`` contributes the new vertex of
    the edge to its lowest-id neighbour in ``d``.
    """
    g = qg.base
    d = vertex_set(g, d)
    if not is_minimal_dominating(g, d):
        raise GraphError("q_forward needs a minimal dominating set of the base graph")
    lacking = vertices_without_private(g, d)
    if lacking:
        raise GraphError(f"vertices {lacking} have no private neighbour outside the set; "
                         "normalize the set first")
    dmask = to_mask(d)
    lookup = qg.vertex_of_edge
    out = set()
    for u in range(g.n):
        if u in d:
            continue
        w = next(bits(g.rows[u] & dmask))
        out.add(lookup[(min(u, w), max(u, w))])
    return frozenset(out)


def q_backward(qg: QGraph, d: Iterable[int]) -> frozenset[int]:
    """Turn a minimal dominating set of ``Q`` with at least 3 vertices into a
    dominating set of the base of size ``n - |d|``.

    Old-side sets map to their complement in ``V``; new-side sets select a
    spanning star forest whose centers are returned (a single-edge star uses
    its lower endpoint).
    """
    d = vertex_set(qg.graph, d)
    if len(d) < 3:
        raise GraphError(f"q_backward needs at least 3 vertices, got {len(d)}")
    if not is_minimal_dominating(qg.graph, d):
        raise GraphError("q_backward needs a minimal dominating set of the Q-graph")
    g = qg.base
    if d <= qg.old:
        return frozenset(range(g.n)) - d
    if not d <= qg.new:
        raise RuntimeError("minimal dominating set of size >= 3 meets both cliques; invariant breach")
    forest = make_graph(g.n, [qg.edge_of[x] for x in d])
    centers = set()
    for comp in connected_components(forest):
        comp = sorted(comp)
        if len(comp) == 1:
            raise RuntimeError(f"base vertex {comp[0]} is not covered; invariant breach")
        hubs = [v for v in comp if forest.degree(v) > 1]
        leaves_ok = all(forest.degree(v) == 1 for v in comp if v not in hubs)
        edges_in = sum(forest.degree(v) for v in comp) // 2
        if len(hubs) > 1 or not leaves_ok or edges_in != len(comp) - 1:
            raise RuntimeError(f"selected edges on {comp} do not form a star; invariant breach")
        centers.add(hubs[0] if hubs else comp[0])
    return frozenset(centers)


# ---------------------------------------------------------------- edge gadget

@dataclass(frozen=True)
class GadgetGraph:
    """Every base edge ``uv`` (``u < v``) is replaced by the paths
    ``u - v_e - u_e - v`` and ``u - v'_e - u'_e - v``; ``gadget_map`` stores
    ``(v_e, u_e, v'_e, u'_e)`` per base edge."""

    graph: Graph
    base: Graph
    gadget_map: dict[tuple[int, int], tuple[int, int, int, int]] = field(hash=False)

    @property
    def base_n(self) -> int:
        return self.base.n

    @property
    def base_m(self) -> int:
        return self.base.m


def gadget_construct(g: Graph) -> GadgetGraph:
    edges, gadget_map = [], {}
    for i, (u, v) in enumerate(g.edges()):
        ve, ue, ve2, ue2 = (g.n + 4 * i + k for k in range(4))
        gadget_map[(u, v)] = (ve, ue, ve2, ue2)
        edges += [(u, ve), (ve, ue), (ue, v), (u, ve2), (ve2, ue2), (ue2, v)]
    return GadgetGraph(make_graph(g.n + 4 * g.m, edges), g, gadget_map)


def gadget_forward(gg: GadgetGraph, s: Iterable[int]) -> frozenset[int]:
    """Lift a maximal independent set of the base to a maximal independent
    (hence minimal dominating) set of the gadget graph of size ``|s| + 2m``.

    On an edge with an endpoint in ``s`` the two path vertices adjacent to the
    other endpoint are taken; on an edge with no endpoint in ``s`` the
    ``v``-side vertex of each path is taken.
    """
    s = vertex_set(gg.base, s)
    if not is_maximal_independent(gg.base, s):
        raise GraphError("gadget_forward needs a maximal independent set of the base graph")
    out = set(s)
    for (u, v), (ve, ue, ve2, ue2) in gg.gadget_map.items():
        if u in s:
            out |= {ue, ue2}
        else:
            out |= {ve, ve2}
    return frozenset(out)


def clean_edges(gg: GadgetGraph, d: Iterable[int]) -> list[tuple[int, int]]:
    """Base edges whose four gadget vertices all avoid ``d``."""
    d = set(d)
    return [e for e, quad in gg.gadget_map.items() if not d.intersection(quad)]


def gadget_repair(gg: GadgetGraph, d: Iterable[int]) -> frozenset[int]:
    """Remove clean edges from a minimal dominating set without shrinking it.

    The lowest base vertex ``u`` on a clean edge leaves the set, the two path
    vertices next to ``u`` enter it for each clean edge at ``u``, and each
    partner endpoint that became redundant is dropped.  Repeats until no clean
    edge remains.
    """
    g = gg.graph
    d = vertex_set(g, d)
    if not is_minimal_dominating(g, d):
        raise GraphError("gadget lifts need a minimal dominating set of the gadget graph")
    dmask = to_mask(d)
    full = g.full_mask
    for _ in range(gg.base_n + 1):
        clean = clean_edges(gg, bits(dmask))
        if not clean:
            break
        u = min(min(e) for e in clean)
        dmask &= ~(1 << u)
        partners = []
        for (a, b) in clean:
            if u not in (a, b):
                continue
            ve, ue, ve2, ue2 = gg.gadget_map[(a, b)]
            # the vertices adjacent to u on both paths
            dmask |= (1 << ve | 1 << ve2) if u == a else (1 << ue | 1 << ue2)
            partners.append(b if u == a else a)
        for p in sorted(partners):
            if dmask >> p & 1 and closed_mask(g, dmask & ~(1 << p)) == full:
                dmask &= ~(1 << p)
    else:
        raise RuntimeError("clean-edge repair did not terminate; invariant breach")
    return frozenset(bits(dmask))


def gadget_backward(gg: GadgetGraph, d: Iterable[int]) -> frozenset[int]:
    """Independent set of the base of size at least ``|d| - 2m`` from a
    minimal dominating set ``d`` of the gadget graph."""
    repaired = gadget_repair(gg, d)
    if not is_minimal_dominating(gg.graph, repaired) or clean_edges(gg, repaired):
        raise RuntimeError("clean-edge repair produced an invalid set; invariant breach")
    out = frozenset(v for v in repaired if v < gg.base_n)
    if not is_independent_set(gg.base, out) or len(out) < len(set(d)) - 2 * gg.base_m:
        raise RuntimeError("backward gadget lift violated its guarantee; invariant breach")
    return out


# -------------------------------------------------------------- certificates

@dataclass
class ReductionCertificate:
    """Brute-force check of a reduction identity plus both lifts."""

    kind: str
    base: Graph
    constructed: Graph
    values: dict[str, int]
    identity: str
    forward: dict[str, Any]
    backward: dict[str, Any]

    @property
    def holds(self) -> bool:
        return self.identity == "holds"

    def to_dict(self) -> dict[str, Any]:
        def clean(x):
            if isinstance(x, (frozenset, set)):
                return sorted(x)
            if isinstance(x, dict):
                return {k: clean(v) for k, v in x.items()}
            return x

        return {
            "kind": self.kind,
            "base_n": self.base.n,
            "base_m": self.base.m,
            "constructed_n": self.constructed.n,
            **self.values,
            "identity": self.identity,
            "forward": clean(self.forward),
            "backward": clean(self.backward),
        }


def certify_q_identity(g: Graph, cap: int | None = None) -> ReductionCertificate:
    """Check ``Gamma(Q(g)) = n - gamma(g)`` and both lifts by brute force.

    When ``Gamma(Q(g)) < 3`` no equality is claimed and the status is
    ``"precondition-not-met"``.
    """
    qg = q_construct(g)
    gamma, dmin = brute_gamma(g, cap)
    big, dmax = brute_Gamma(qg.graph, cap)
    values = {"n": g.n, "gamma": gamma, "Gamma_Q": big}
    if big < 3:
        return ReductionCertificate("q", g, qg.graph, values, "precondition-not-met", {}, {})

    forward: dict[str, Any] = {"input": dmin}
    normalized = normalize_minimal_dominating(g, dmin)
    forward["normalized"] = normalized
    if vertices_without_private(g, normalized):
        forward.update(output=None, valid=False, note="base set has a vertex without a private neighbour")
    else:
        lifted = q_forward(qg, normalized)
        forward.update(
            output=lifted,
            valid=is_minimal_dominating(qg.graph, lifted) and len(lifted) == g.n - len(normalized),
        )

    lowered = q_backward(qg, dmax)
    backward = {
        "input": dmax,
        "output": lowered,
        "valid": is_dominating(g, lowered) and len(lowered) == g.n - big,
    }
    ok = big == g.n - gamma and forward["valid"] and backward["valid"]
    return ReductionCertificate("q", g, qg.graph, values, "holds" if ok else "fails", forward, backward)


def certify_gadget_identity(g: Graph, cap: int | None = None) -> ReductionCertificate:
    """Check ``Gamma(gadget(g)) = alpha(g) + 2m`` and both lifts by brute force."""
    gg = gadget_construct(g)
    alpha, s = brute_alpha(g, cap)
    big, dmax = brute_Gamma(gg.graph, cap)
    values = {"n": g.n, "m": g.m, "alpha": alpha, "Gamma_gadget": big}

    lifted = gadget_forward(gg, s)
    forward = {
        "input": s,
        "output": lifted,
        "valid": is_minimal_dominating(gg.graph, lifted) and len(lifted) == alpha + 2 * g.m,
    }
    repaired = gadget_repair(gg, dmax)
    lowered = gadget_backward(gg, dmax)
    backward = {
        "input": dmax,
        "repaired": repaired,
        "clean_edges": clean_edges(gg, dmax),
        "output": lowered,
        "valid": is_independent_set(g, lowered) and len(lowered) >= big - 2 * g.m,
    }
    ok = big == alpha + 2 * g.m and forward["valid"] and backward["valid"]
    return ReductionCertificate("gadget", g, gg.graph, values, "holds" if ok else "fails", forward, backward)


# ------------------------------------------------------------------ families

def tripod(i: int, j: int, l: int) -> Graph:
    """``S_{i,j,l}``: center 0 with pendant paths of ``i``, ``j`` and ``l`` vertices."""
    if min(i, j, l) < 0:
        raise GraphError("leg lengths must be non-negative")
    edges, nxt = [], 1
    for length in (i, j, l):
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev, nxt = nxt, nxt + 1
    return make_graph(nxt, edges)


def h_graph(n: int, convention: str = "vertices") -> Graph:
    """``H_n``: two hubs joined by a path, each hub carrying two pendant leaves.

    With ``convention="vertices"`` the path has ``n`` internal vertices (hubs
    at distance ``n + 1``, ``n + 6`` vertices in total); with
    ``convention="edges"`` the path has ``n`` edges (hubs at distance ``n``).
    Hubs are 0 and the last path vertex; leaves come last.
    """
    if n < 1:
        raise GraphError(f"H_n needs n >= 1, got {n}")
    if convention == "vertices":
        length = n + 1
    elif convention == "edges":
        length = n
    else:
        raise ValueError(f"unknown H_n convention {convention!r}")
    spine = length + 1
    edges = [(k, k + 1) for k in range(length)]
    hub_a, hub_b = 0, length
    edges += [(hub_a, spine), (hub_a, spine + 1), (hub_b, spine + 2), (hub_b, spine + 3)]
    return make_graph(spine + 4, edges)


# ------------------------------------------------------------- completion

def complete_to_q(g: Graph, p: NicePartition) -> tuple[QGraph, dict[int, int]]:
    """A Q-graph containing ``g`` as an induced subgraph.

    Every ``w`` vertex short of two ``u`` neighbours gets fresh old vertices of
    its own; the base graph then has vertex set ``u`` + fresh vertices and one
    edge per ``w`` vertex.  Returns the Q-graph and the embedding of ``g``.
    """
    why = partition_violation(g, p.u, p.w)
    if why is not None:
        raise GraphError(f"not a nice partition: {why}")
    old_order = sorted(p.u)
    index = {v: i for i, v in enumerate(old_order)}
    umask = to_mask(p.u)
    fresh = len(old_order)
    pair_of = {}
    for x in sorted(p.w):
        ends = [index[y] for y in bits(g.rows[x] & umask)]
        while len(ends) < 2:
            ends.append(fresh)
            fresh += 1
        pair_of[x] = (min(ends), max(ends))
    base = make_graph(fresh, pair_of.values())
    qg = q_construct(base)
    lookup = qg.vertex_of_edge
    embedding = {v: index[v] for v in old_order}
    embedding.update({x: lookup[e] for x, e in pair_of.items()})
    return qg, dict(sorted(embedding.items()))
