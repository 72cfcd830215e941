"""
A group of order 48 acting on the (l, m) plane
==============================================

The group is generated by five signed monomial maps.  It permutes the four
components V and the four components W, and the special points are where
they meet.
"""

from origamikit.moduli import (
    SPECIAL_POINTS,
    V,
    W,
    action_table,
    format_point,
    gamma_group,
    intersect_loci,
    orbit_of_locus,
    orbit_of_point,
    points_with_nontrivial_stabilizer,
    stabilizer_of_locus,
    stabilizer_of_point,
    verify_curve_equation_derivation,
)

G = gamma_group()
print("|Gamma| =", G.order, " <d,e> normal:", G.v4_normal, " quotient order:", G.quotient_order)

rec = verify_curve_equation_derivation()
print("expansion residual zero:", rec.expansion_residual.is_zero())

print("orbit of V:", [X.name for X in orbit_of_locus(V())])
stab = stabilizer_of_locus(V())
print("Stab(V): order", stab.order, "abelian" if stab.is_abelian else "nonabelian", stab.labels)
table = action_table()
for g in "abcde":
    row = [f"{X}->{Y}" for (h, X), Y in sorted(table.items()) if h == g]
    print(g + ":", " ".join(row))

for X in (W(1, 1), W(-1, 1), W(-1, -1), W(1, -1)):
    print(f"V meets {X.name}:", [format_point(p) for p in intersect_loci(V(), X)])

for name, p in SPECIAL_POINTS.items():
    print(f"{name}: orbit {len(orbit_of_point(p)):>2}  stabilizer {stabilizer_of_point(p).order}")

print("points of V with nontrivial stabilizer:")
for p in points_with_nontrivial_stabilizer():
    print("  ", format_point(p))
