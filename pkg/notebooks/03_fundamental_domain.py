"""
A fundamental domain in the upper half plane
============================================

Each coset contributes one copy of the standard triangle with vertices
rho^2, rho and infinity.  The side pairings glue them into the quotient
surface; Euler characteristic then gives the genus.
"""

import sys
from pathlib import Path

from origamikit.domain import fundamental_domain
from origamikit.origami import origami_S
from origamikit.veech import veech_group

S = origami_S()
fd = fundamental_domain(veech_group(S), S)

print("faces", fd.n_faces, "edges", fd.n_edges, "vertices", fd.n_vertices)
print("chi =", fd.euler_characteristic, " genus =", fd.genus)
for p in fd.pairings:
    print(f"  tile {p.tile_from} {p.side_from} -> tile {p.tile_to} {p.side_to} by {p.element}")

out = Path(sys.argv[1]) if len(sys.argv) > 1 else Path("domain_S.svg")
out.write_text(fd.to_svg())
print("wrote", out)
