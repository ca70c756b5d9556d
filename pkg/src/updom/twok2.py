"""Polynomial upper domination on 2K2-free graphs.

An upper dominating set of a 2K2-free graph is either a maximum independent
set or a triangle together with every vertex the triangle does not dominate.
``upper_dominating_2k2`` tries both kinds of candidate;
``verify_triangle_corollary`` checks that structural fact by enumeration.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .domination import (
    brute_alpha,
    enumerate_minimal_dominating,
    is_minimal_dominating,
    maximum_independent_set,
)
from .graph import Graph, GraphError, bits, to_mask, vertex_set
from .recognition import is_2k2_free


class NotTwoK2Free(GraphError):
    """The input contains an induced 2K2; ``witness`` maps ``0-1, 2-3`` into it."""

    def __init__(self, witness: dict[int, int]):
        a, b, c, d = (witness[i] for i in range(4))
        super().__init__(f"graph contains an induced 2K2 on edges {a}-{b} and {c}-{d}")
        self.witness = witness


def anti_neighbourhood(g: Graph, u: Iterable[int]) -> frozenset[int]:
    """Vertices outside ``u`` with no neighbour in ``u``."""
    umask = to_mask(vertex_set(g, u))
    return frozenset(v for v in range(g.n) if not umask >> v & 1 and not g.rows[v] & umask)


def enumerate_triangles(g: Graph) -> Iterator[frozenset[int]]:
    """Each triangle once, in lexicographic order of its sorted vertices."""
    for a in range(g.n):
        higher = g.rows[a] >> (a + 1) << (a + 1)
        for b in bits(higher):
            for c in bits(higher & g.rows[b] >> (b + 1) << (b + 1)):
                yield frozenset((a, b, c))


@dataclass(frozen=True)
class UpperDominatingResult:
    witness: frozenset[int]
    method: str

    @property
    def size(self) -> int:
        return len(self.witness)


def upper_dominating_2k2(g: Graph, check: bool = True) -> UpperDominatingResult:
    """Minimal dominating set of maximum size in a 2K2-free graph.

    Starts from a maximum independent set and replaces it by ``T + A(T)`` for
    a triangle ``T`` whenever that set is minimal dominating and strictly
    larger.  Triangle candidates of equal size resolve to the
    lexicographically first one.  ``check=False`` skips the 2K2 test.
    """
    if check:
        free, witness = is_2k2_free(g)
        if not free:
            raise NotTwoK2Free(witness)
    best = maximum_independent_set(g)
    winners = []
    for t in enumerate_triangles(g):
        candidate = t | anti_neighbourhood(g, t)
        if len(candidate) > len(best) and is_minimal_dominating(g, candidate):
            winners.append(candidate)
    if not winners:
        return UpperDominatingResult(best, "independent-set")
    top = max(len(c) for c in winners)
    return UpperDominatingResult(min((c for c in winners if len(c) == top), key=sorted), "triangle")


def verify_triangle_corollary(g: Graph, cap: int | None = None) -> tuple[bool, frozenset[int] | None]:
    """Every minimal dominating set larger than the independence number is a
    triangle plus its anti-neighbourhood.

    Returns ``(True, None)`` or ``(False, counterexample)``.
    """
    free, witness = is_2k2_free(g)
    if not free:
        raise NotTwoK2Free(witness)
    alpha, _ = brute_alpha(g, cap)
    shapes = {t | anti_neighbourhood(g, t) for t in enumerate_triangles(g)}
    for d in enumerate_minimal_dominating(g, cap):
        if len(d) > alpha and d not in shapes:
            return False, d
    return True, None
