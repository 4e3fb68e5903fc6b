"""
Exporting graphs
================

graph6 for other graph tools, DOT with block names for drawing.
"""

from cospectral_pm.family import build_pair
from cospectral_pm.graph import from_graph6, to_dot, to_graph6

G, G_switched, layout = build_pair(6)
s = to_graph6(G)
print(s)
print(from_graph6(s) == G)
print(to_dot(G_switched, layout.vertex_labels())[:300])
