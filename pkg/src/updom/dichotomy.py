"""Complexity of upper domination on H-free graphs, for a single graph H.

The classifier walks the case analysis of the hardness/tractability proof:
cycles first, then claws, then the component structure of a linear forest.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Any

from .graph import (
    Graph,
    GraphError,
    connected_components,
    contains_induced,
    cycle_graph,
    induced_subgraph,
    make_graph,
    path_graph,
    shortest_cycle,
    star_graph,
)

TWO_K2 = make_graph(4, [(0, 1), (2, 3)])
P4 = path_graph(4)
CLAW = star_graph(3)

THEOREM_PLANAR = "NP-hard: planar graphs of max degree 6 and girth >= 6"
THEOREM_COBIPARTITE = "NP-hard: co-bipartite graphs"
THEOREM_2K2 = "polynomial: 2K2-free algorithm"
THEOREM_P4 = "polynomial: P4-free graphs (bounded clique-width)"


class Verdict(str, Enum):
    POLYNOMIAL = "PolynomialTime"
    NP_HARD = "NPHard"


@dataclass(frozen=True)
class ClassVerdict:
    verdict: Verdict
    case: str
    witness: Any
    theorem_ref: str

    def to_dict(self) -> dict[str, Any]:
        return {
            "verdict": self.verdict.value,
            "case": self.case,
            "witness": self.witness,
            "theorem_ref": self.theorem_ref,
        }


def classify_monogenic(h: Graph) -> ClassVerdict:
    """Classify upper domination on ``h``-free graphs."""
    if h.n == 0:
        raise GraphError("H must have at least one vertex")

    cycle = shortest_cycle(h)
    if cycle is not None:
        k = len(cycle)
        emb = contains_induced(h, cycle_graph(k))
        witness = {"cycle": cycle, "length": k, "embedding": emb}
        if k <= 5:
            return ClassVerdict(Verdict.NP_HARD, "cycle k<=5", witness, THEOREM_PLANAR)
        return ClassVerdict(Verdict.NP_HARD, "cycle k>=6", witness, THEOREM_COBIPARTITE)

    claw = contains_induced(h, CLAW)
    if claw is not None:
        return ClassVerdict(Verdict.NP_HARD, "claw", {"embedding": claw}, THEOREM_COBIPARTITE)

    comps = connected_components(h)
    lengths = []
    for comp in comps:
        sub, _ = induced_subgraph(h, comp)
        # a claw-free tree is a path
        assert contains_induced(sub, path_graph(sub.n)) is not None, "claw-free forest component is not a path"
        lengths.append(sub.n)
    lengths.sort(reverse=True)
    if len(lengths) >= 3:
        return ClassVerdict(Verdict.NP_HARD, "three-or-more components", {"paths": lengths},
                            THEOREM_COBIPARTITE)

    k, t = (lengths + [0])[:2]
    witness = {"paths": lengths, "k": k, "t": t}
    if k + t >= 5:
        return ClassVerdict(Verdict.NP_HARD, "two-paths k+t>=5", witness, THEOREM_COBIPARTITE)
    if k + t <= 3:
        return ClassVerdict(Verdict.POLYNOMIAL, "two-paths k+t<=3", witness, THEOREM_P4)
    if (k, t) == (2, 2):
        return ClassVerdict(Verdict.POLYNOMIAL, "H = 2K2", witness, THEOREM_2K2)
    if (k, t) == (4, 0):
        return ClassVerdict(Verdict.POLYNOMIAL, "H = P4", witness, THEOREM_P4)
    assert (k, t) == (3, 1), f"unexpected path pair {(k, t)}"
    return ClassVerdict(Verdict.NP_HARD, "two-paths (k,t)=(3,1)", witness, THEOREM_COBIPARTITE)


def headline_polynomial(h: Graph) -> bool:
    """``h`` is an induced subgraph of ``2K2`` or of ``P4``."""
    return contains_induced(TWO_K2, h) is not None or contains_induced(P4, h) is not None


def dichotomy_consistency(h: Graph) -> bool:
    """The case analysis and the headline condition give the same verdict."""
    return (classify_monogenic(h).verdict is Verdict.POLYNOMIAL) == headline_polynomial(h)
