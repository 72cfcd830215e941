"""
Exact group law on a one-parameter family of elliptic curves
============================================================

The curve is written over Q(i)(l) with mu = l/(l+1).  The checks below are
identities of rational functions, not numerical tests.
"""

from fractions import Fraction

from origamikit.algebra import RatFunc
from origamikit.elliptic import family_record, spot_check

rec = family_record()
print("curve:", rec.curve)
print("P1 =", rec.P1)
print("[2]P1 =", rec.double_P1)
for name, ok, value in rec.checks:
    print(f"  {name:<22} {'ok' if ok else 'FAILED'}  ({value})")

# A nearby but wrong relation fails the first check
lam = RatFunc.var()
control = family_record(lam / (lam + 2))
print("control failures:", [name for name, _ in control.failures()])

# Specialise to l = 3
C, P1, D = spot_check(Fraction(3), Fraction(3, 4))
print("at l=3:", C, "[2]P1 =", D)
