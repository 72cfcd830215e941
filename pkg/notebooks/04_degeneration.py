"""
Pinching core curves: stable curves at the cusps
================================================

Shrinking the core curves of all cylinders in one direction produces a
stable curve.  Its dual graph has one vertex per component and one edge per
pinched curve.
"""

from origamikit.degeneration import arithmetic_genus, cusp_boundary_points, stable_curve_data
from origamikit.origami import get_origami, origami_S

S = origami_S()
for direction in "hv":
    data = stable_curve_data(S, direction)
    g = data.graph
    print(direction, "components:", g.n_components, "edges:", g.edges,
          "euler:", data.component_euler, "arithmetic genus:", arithmetic_genus(g))

# One boundary point per cusp of the Teichmueller curve
for cusp, graph in cusp_boundary_points(S):
    print("cusp", cusp.representative, "width", cusp.width)
    print(graph.to_dot(f"cusp_{cusp.width}"))

# The one-square torus degenerates to a nodal rational curve
print(stable_curve_data(get_origami("torus"), "h").graph)
