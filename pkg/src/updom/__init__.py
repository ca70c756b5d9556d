"""Exact upper domination toolkit: brute-force oracles, the 2K2-free
algorithm, reduction constructions with solution lifts, class recognition,
and the monogenic complexity classifier."""

__version__ = "0.1.0"

from .graph import Graph, complement, contains_induced, girth, make_graph
from .domination import (
    brute_alpha,
    brute_Gamma,
    brute_gamma,
    enumerate_maximal_independent,
    enumerate_minimal_dominating,
    is_dominating,
    is_minimal_dominating,
    normalize_minimal_dominating,
)
from .twok2 import upper_dominating_2k2
from .constructions import certify_gadget_identity, certify_q_identity, gadget_construct, q_construct
from .recognition import find_nice_partition, in_q_star, is_2k2_free
from .dichotomy import classify_monogenic

__all__ = [
    "Graph", "make_graph", "complement", "contains_induced", "girth",
    "brute_alpha", "brute_gamma", "brute_Gamma", "enumerate_maximal_independent",
    "enumerate_minimal_dominating", "is_dominating", "is_minimal_dominating",
    "normalize_minimal_dominating", "upper_dominating_2k2", "certify_gadget_identity",
    "certify_q_identity", "gadget_construct", "q_construct", "find_nice_partition",
    "in_q_star", "is_2k2_free", "classify_monogenic",
]
