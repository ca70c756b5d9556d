"""Domination predicates, the private-neighbour normalization and exact oracles.

The exhaustive oracles (``brute_alpha``, ``brute_gamma``, ``brute_Gamma``,
``enumerate_minimal_dominating``) tabulate every subset of ``V`` at once:
for a bitmask ``S`` the table holds the closed neighbourhood of ``S``, its
size, and whether it is independent.  Each table is filled by doubling
(``T[S | 1<<k] = T[S] op row[k]`` for all ``S < 2**k``), so a graph on ``n``
vertices costs ``O(n * 2**n)`` vectorized work.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Iterable, Iterator

import numpy as np

from .graph import Graph, GraphError, bits, connected_components, to_mask, vertex_set

DEFAULT_CAP = 24


class CapExceeded(GraphError):
    """The instance is larger than the exhaustive-search cap."""

    def __init__(self, n: int, cap: int):
        super().__init__(f"instance has {n} vertices; exhaustive search is capped at {cap} "
                         f"(set UPDOM_MAX_N to override)")
        self.n = n
        self.cap = cap


def brute_cap() -> int:
    """Current exhaustive-search cap (``UPDOM_MAX_N`` overrides the default 24)."""
    raw = os.environ.get("UPDOM_MAX_N")
    return int(raw) if raw else DEFAULT_CAP


def _check_cap(g: Graph, cap: int | None):
    cap = brute_cap() if cap is None else cap
    if g.n > cap:
        raise CapExceeded(g.n, cap)


# ---------------------------------------------------------------- predicates

def closed_mask(g: Graph, mask: int) -> int:
    """Vertices in ``mask`` or adjacent to it."""
    out = mask
    for v in bits(mask):
        out |= g.rows[v]
    return out


def is_dominating(g: Graph, d: Iterable[int]) -> bool:
    return closed_mask(g, to_mask(vertex_set(g, d))) == g.full_mask


def private_neighbours(g: Graph, d: Iterable[int], x: int) -> frozenset[int]:
    """Vertices outside ``d`` whose only neighbour in ``d`` is ``x``."""
    d = vertex_set(g, d)
    if x not in d:
        raise GraphError(f"vertex {x} is not in the set")
    dmask = to_mask(d)
    return frozenset(y for y in bits(g.rows[x] & ~dmask) if g.rows[y] & dmask == 1 << x)


def is_minimal_dominating(g: Graph, d: Iterable[int]) -> bool:
    """Dominating, and no single vertex can be dropped."""
    dmask = to_mask(vertex_set(g, d))
    full = g.full_mask
    if closed_mask(g, dmask) != full:
        return False
    return all(closed_mask(g, dmask & ~(1 << x)) != full for x in bits(dmask))


def is_independent_set(g: Graph, s: Iterable[int]) -> bool:
    smask = to_mask(vertex_set(g, s))
    return all(not g.rows[v] & smask for v in bits(smask))


def is_maximal_independent(g: Graph, s: Iterable[int]) -> bool:
    smask = to_mask(vertex_set(g, s))
    return is_independent_set(g, s) and closed_mask(g, smask) == g.full_mask


def minimalize(g: Graph, d: Iterable[int], order: Iterable[int] | None = None) -> frozenset[int]:
    """Greedily drop redundant vertices of a dominating set.

    Vertices are tried lowest id first unless ``order`` is given.
    """
    dmask = to_mask(vertex_set(g, d))
    full = g.full_mask
    if closed_mask(g, dmask) != full:
        raise GraphError("set is not dominating")
    for v in (bits(dmask) if order is None else [v for v in order if dmask >> v & 1]):
        if closed_mask(g, dmask & ~(1 << v)) == full:
            dmask &= ~(1 << v)
    return frozenset(bits(dmask))


# ------------------------------------------------------------- normalization

def _lacking_private(g: Graph, dmask: int) -> list[int]:
    out = []
    for x in bits(dmask):
        if not any(g.rows[y] & dmask == 1 << x for y in bits(g.rows[x] & ~dmask)):
            out.append(x)
    return out


def vertices_without_private(g: Graph, d: Iterable[int]) -> list[int]:
    """Members of ``d`` that have no private neighbour outside ``d``."""
    return _lacking_private(g, to_mask(vertex_set(g, d)))


def normalize_minimal_dominating(g: Graph, d: Iterable[int]) -> frozenset[int]:
    """Turn a minimal dominating set into one of no larger size in which every
    vertex has a private neighbour outside the set.

    A member ``x`` without an outside private neighbour is isolated in the
    set; it is swapped for its lowest-id neighbour and the result is
    re-minimalized greedily.  This repeats until no such member remains.
    Disconnected graphs are handled one component at a time; a vertex that
    forms a component on its own is kept as is (it can have no private
    neighbour), see ``vertices_without_private``.
    """
    d = vertex_set(g, d)
    if not is_minimal_dominating(g, d):
        raise GraphError("input set is not a minimal dominating set")
    dmask = to_mask(d)
    full = g.full_mask
    for comp in connected_components(g):
        cmask = to_mask(comp)
        if len(comp) < 2:
            continue
        local = dmask & cmask
        rest = dmask & ~cmask
        for _ in range(len(comp) * len(comp) + 1):
            lacking = _lacking_private(g, local | rest)
            lacking = [x for x in lacking if cmask >> x & 1]
            if not lacking:
                break
            x = lacking[0]
            y = next(bits(g.rows[x] & ~local))
            local = (local & ~(1 << x)) | (1 << y)
            for v in bits(local):
                if closed_mask(g, (local | rest) & ~(1 << v)) == full:
                    local &= ~(1 << v)
        else:
            raise RuntimeError("normalization did not terminate; invariant breach")
        dmask = rest | local
    return frozenset(bits(dmask))


# --------------------------------------------------------- subset tabulation

@dataclass
class SubsetTables:
    """Per-subset tables of a graph, indexed by vertex bitmask."""

    n: int
    dominated: np.ndarray
    size: np.ndarray
    independent: np.ndarray
    _minimal: np.ndarray | None = field(default=None, repr=False)

    @property
    def dominating(self) -> np.ndarray:
        return self.dominated == (1 << self.n) - 1

    @property
    def minimal_dominating(self) -> np.ndarray:
        if self._minimal is None:
            dom = self.dominating
            minimal = dom.copy()
            for x in range(self.n):
                block = 1 << x
                minimal.reshape(-1, 2, block)[:, 1, :] &= ~dom.reshape(-1, 2, block)[:, 0, :]
            self._minimal = minimal
        return self._minimal

    @property
    def maximal_independent(self) -> np.ndarray:
        return self.independent & self.dominating


def subset_tables(g: Graph, cap: int | None = None) -> SubsetTables:
    _check_cap(g, cap)
    n = g.n
    total = 1 << n
    dtype = np.uint32 if n <= 32 else np.uint64
    dominated = np.zeros(total, dtype=dtype)
    size = np.zeros(total, dtype=np.uint8)
    independent = np.ones(total, dtype=bool)
    index = np.arange(total, dtype=dtype)
    for k in range(n):
        lo, hi = 1 << k, 2 << k
        dominated[lo:hi] = dominated[:lo] | dtype(g.rows[k] | lo)
        size[lo:hi] = size[:lo] + 1
        independent[lo:hi] = independent[:lo] & ((index[:lo] & dtype(g.rows[k] & (lo - 1))) == 0)
    return SubsetTables(n, dominated, size, independent)


def _mask_to_set(mask: int) -> frozenset[int]:
    return frozenset(bits(int(mask)))


def _lex_first(masks: np.ndarray) -> frozenset[int]:
    # Among equal-size sets the lexicographically first sorted sequence is the one
    # that owns the lowest bit of any symmetric difference.
    best = min((int(m) for m in masks), key=lambda m: tuple(bits(m)))
    return _mask_to_set(best)


def _extreme(flags: np.ndarray, size: np.ndarray, largest: bool) -> tuple[int, frozenset[int]]:
    idx = np.flatnonzero(flags)
    sizes = size[idx]
    value = int(sizes.max() if largest else sizes.min())
    return value, _lex_first(idx[sizes == value])


def brute_alpha(g: Graph, cap: int | None = None) -> tuple[int, frozenset[int]]:
    """Independence number with a lexicographically first maximum witness."""
    t = subset_tables(g, cap)
    return _extreme(t.independent, t.size, largest=True)


def brute_gamma(g: Graph, cap: int | None = None) -> tuple[int, frozenset[int]]:
    """Domination number with a lexicographically first minimum witness."""
    t = subset_tables(g, cap)
    return _extreme(t.dominating, t.size, largest=False)


def brute_Gamma(g: Graph, cap: int | None = None) -> tuple[int, frozenset[int]]:
    """Upper domination number with a lexicographically first witness."""
    t = subset_tables(g, cap)
    return _extreme(t.minimal_dominating, t.size, largest=True)


def enumerate_minimal_dominating(g: Graph, cap: int | None = None) -> Iterator[frozenset[int]]:
    """Every minimal dominating set once, in increasing bitmask order."""
    t = subset_tables(g, cap)
    for mask in np.flatnonzero(t.minimal_dominating):
        yield _mask_to_set(mask)


@dataclass(frozen=True)
class InvariantReport:
    alpha: int
    gamma_lower: int
    gamma_upper: int
    witnesses: dict[str, frozenset[int]]


def invariant_report(g: Graph, cap: int | None = None) -> InvariantReport:
    t = subset_tables(g, cap)
    a, wa = _extreme(t.independent, t.size, largest=True)
    lo, wlo = _extreme(t.dominating, t.size, largest=False)
    up, wup = _extreme(t.minimal_dominating, t.size, largest=True)
    return InvariantReport(a, lo, up, {"alpha": wa, "gamma_lower": wlo, "gamma_upper": wup})


# ------------------------------------------------- maximal independent sets

def enumerate_maximal_independent(g: Graph) -> Iterator[frozenset[int]]:
    """Every maximal independent set once.

    Bron-Kerbosch with Tomita pivoting on the complement graph, i.e. maximal
    cliques of the complement.  Output-polynomial.
    """
    full = g.full_mask
    anti = [full & ~row & ~(1 << v) for v, row in enumerate(g.rows)]

    def expand(r: int, p: int, x: int) -> Iterator[int]:
        if not p and not x:
            yield r
            return
        pivot = max(bits(p | x), key=lambda u: (anti[u] & p).bit_count())
        for v in bits(p & ~anti[pivot]):
            yield from expand(r | 1 << v, p & anti[v], x & anti[v])
            p &= ~(1 << v)
            x |= 1 << v

    if g.n == 0:
        yield frozenset()
        return
    for mask in expand(0, full, 0):
        yield frozenset(bits(mask))


def maximum_independent_set(g: Graph) -> frozenset[int]:
    """Largest maximal independent set; ties go to the lexicographically first."""
    return min(enumerate_maximal_independent(g), key=lambda s: (-len(s), sorted(s)))
