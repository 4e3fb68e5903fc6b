"""
Godsil-McKay switching on a small graph
=======================================

A 4-cycle X, one outside vertex seeing half of X, one seeing all of it.
Switching swaps the half-neighborhood and keeps the spectrum.
"""

from cospectral_pm.graph import Graph
from cospectral_pm.spectral import char_poly
from cospectral_pm.switching import SwitchingPartition, apply_switch, validate_switching_set

edges = [(0, 1), (1, 2), (2, 3), (3, 0), (4, 0), (4, 1), (5, 0), (5, 1), (5, 2), (5, 3), (4, 6), (5, 6)]
g = Graph.from_edges(7, edges)
x = SwitchingPartition([0, 1, 2, 3], g.n)
print(validate_switching_set(g, x).describe())

h = apply_switch(g, x)
print("vertex 4 before:", sorted(g.neighbors(4)), "after:", sorted(h.neighbors(4)))
print(char_poly(g))
print(char_poly(h))
print("switch twice gives back g:", apply_switch(h, x) == g)

# a bad set: vertex 6 sees one vertex of X
bad = Graph.from_edges(7, edges + [(6, 0)])
print(validate_switching_set(bad, x).describe())
