"""
Veech group by orbit enumeration
================================

SL2(Z) acts on origamis through the generators t = [[1,1],[0,1]] and
s = [[0,-1],[1,0]].  The Veech group is the stabilizer, and its cosets are
the orbit.
"""

from origamikit.origami import origami_S
from origamikit.veech import apply_word, is_member, veech_group

S = origami_S()
r = veech_group(S)

print("index in SL2(Z):", r.index, " in PSL2(Z):", r.psl_index)
print("contains -I:", r.contains_minus_identity)
print("coset representatives:", [str(w) for w in r.coset_reps])

# Schreier generators, each checked by acting on S directly
for w, m in r.generators:
    print(f"  {str(w):>14}  {m}  member={is_member(w, S)}")

# Cusps are orbits of t on the cosets, widths sum to the PSL index
for c in r.cusps:
    print("cusp", c.representative, "width", c.width)
print("e2 =", r.e2, " e3 =", r.e3, " quotient genus =", r.quotient_genus)

# A word outside the group moves S to a different origami
print("t moves S to", apply_word("t", S))
