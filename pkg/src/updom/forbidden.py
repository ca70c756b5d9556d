"""The eleven minimal forbidden induced subgraphs of the class of induced
subgraphs of Q-graphs.

G1..G8 are transcribed from the drawings; vertices ``a, b, c, d`` are the
corners of the square (a bottom-left, b bottom-right, c top-right, d
top-left) and map to ids 0..3.  The remaining letters map to 4, 5, ... in
order.  Correctness of the transcription is checked by the self-tests in
``recognition.forbidden_self_test`` rather than trusted.
"""

from .graph import Graph, complement, cycle_graph, empty_graph, make_graph

_A, _B, _C, _D, _E, _F, _G, _H = range(8)

# Six vertices: square a b c d, inner pair e (left) and f (right).
_INNER = [(_A, _E), (_A, _F), (_B, _E), (_B, _F), (_C, _E), (_C, _F), (_D, _E), (_D, _F), (_E, _F)]

G1 = make_graph(6, [(_A, _B), (_C, _D), (_D, _A)] + _INNER)
G2 = make_graph(6, [(_B, _C), (_A, _B), (_C, _D), (_D, _A)] + _INNER)
G3 = make_graph(6, [(_A, _B), (_C, _D)] + _INNER)
# K4 on the square, e right of b-c, f left of a-d.
G4 = make_graph(6, [(_A, _B), (_B, _C), (_C, _D), (_D, _A), (_A, _C), (_B, _D),
                    (_C, _E), (_B, _E), (_A, _F), (_D, _F)])

# Eight vertices: square a b c d, e above c-d, f below a-b, g left, h right.
_OUTER = [(_C, _E), (_D, _E), (_A, _F), (_B, _F),
          (_G, _C), (_G, _D), (_G, _A), (_G, _B), (_H, _C), (_H, _D), (_H, _A), (_H, _B),
          (_G, _E), (_G, _F), (_H, _E), (_H, _F)]

G5 = make_graph(8, [(_A, _B), (_C, _D)] + _OUTER)
G6 = make_graph(8, [(_A, _B), (_C, _D), (_D, _A)] + _OUTER)
G7 = make_graph(8, [(_A, _B), (_C, _D), (_D, _A), (_B, _C)] + _OUTER)
G8 = make_graph(8, [(_A, _B), (_C, _D), (_D, _A), (_B, _C), (_E, _F)] + _OUTER)

CO_C3: Graph = empty_graph(3)
CO_C5: Graph = complement(cycle_graph(5))
CO_C7: Graph = complement(cycle_graph(7))

FORBIDDEN_N: dict[str, Graph] = {
    "co-C3": CO_C3,
    "co-C5": CO_C5,
    "co-C7": CO_C7,
    "G1": G1,
    "G2": G2,
    "G3": G3,
    "G4": G4,
    "G5": G5,
    "G6": G6,
    "G7": G7,
    "G8": G8,
}
