"""
Invariants of a six-square origami
==================================

An origami is a pair of permutations (h, v) of the squares: h sends a square
to its right neighbour, v to the one above.  Everything below is computed
from those two permutations alone.
"""

from origamikit.origami import (
    automorphisms,
    canonical_form,
    catalog,
    cylinders,
    format_origami,
    genus,
    origami_S,
    stratum,
    translations,
    vertex_profile,
)

S = origami_S()
print(format_origami(S))

# The vertices are the cycles of the commutator; cone angles are 2*pi*k.
profile = vertex_profile(S)
print("vertices:", profile.n_vertices, "genus:", genus(S), "stratum:", stratum(S))

# Translations commute with h and v; the anti-automorphisms invert both.
print("translations:", [str(p) for p in translations(S)])
print("|Aut| =", automorphisms(S).order)

# Cylinder decompositions in both directions
for direction in "hv":
    cyl = cylinders(S, direction)
    print(direction, [(c.width, c.height) for c in cyl])

# canonical_form is a complete invariant up to relabelling squares
relabelled = S.random_relabel(__import__("random").Random(1))
print("same origami after relabelling:", canonical_form(relabelled) == canonical_form(S))

# The built-in catalog
for name, o in catalog().items():
    print(f"{name:>10}  d={o.d}  genus={genus(o)}  stratum={stratum(o)}")
