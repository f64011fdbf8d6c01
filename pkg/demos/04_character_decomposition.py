#!/usr/bin/env python3
"""Why the Björck ambiguity is small: the character split in action.

A Björck sequence is R*ones + S*chi + T*delta, so its ambiguity is the
character's ambiguity scaled by |S|^2 plus two explicit O(1/p) corrections.
This demo reads off the coefficients, verifies the identity pointwise, and
walks the bound chain at the awkward exceedance prime 139.
"""

import math

from cazac import (
    ambiguity_max,
    bjorck,
    error_terms,
    mbound,
    mix_coefficients,
    realbound,
    reconstruct_ambiguity,
    reconstruction_residual,
)
from cazac.transform import ambiguity_row

# ---------------------------------------------------------------------------
# The three sample values and their mixing weights.
# ---------------------------------------------------------------------------
for p in (13, 7):
    c = mix_coefficients(p)
    print(f"=== p = {p} ({p % 4} mod 4) ===")
    print(f"  r (on residues)    = {c.r:.6f}")
    print(f"  s (on nonresidues) = {c.s:.6f}")
    print(f"  t (at zero)        = {c.t:.6f}")
    print(f"  R, S, T            = {c.R:.6f}, {c.S:.6f}, {c.T:.6f}")
    print(f"  |S|^2              = {abs(c.S) ** 2:.6f}  (-> p/(p+1) = {p / (p + 1):.6f} when 3 mod 4)")
    print()

# ---------------------------------------------------------------------------
# The reconstruction identity holds to near machine precision.
# ---------------------------------------------------------------------------
print("=== pointwise reconstruction ===")
for p in (13, 19, 139):
    print(f"  p={p:4d}: max |direct - reconstructed| = {reconstruction_residual(p):.2e}")

direct = ambiguity_row(bjorck(139), 1).values[1]
rebuilt = reconstruct_ambiguity(139, 1, 1)
print(f"\n  A(u_139)[1,1] direct      = {direct:+.12f}")
print(f"  A(u_139)[1,1] reconstructed = {rebuilt:+.12f}")

# ---------------------------------------------------------------------------
# The error terms are O(1/sqrt(p)) -- here they are at p=139.
# ---------------------------------------------------------------------------
c = mix_coefficients(139)
terms = error_terms(c, 139, 1, 1)
print(f"\n  E1[1,1] = {terms.e1:.6f}   E2[1,1] = {terms.e2:.6f}")
print(f"  |E1 + E2| / p = {abs(terms.e1 + terms.e2) / 139:.6f}")

# ---------------------------------------------------------------------------
# The unit-circle inequality used to merge the terms in the 3 mod 4 case:
# |z X + (1 - z^2) Y| <= sqrt(X^2 + 4 Y^2).
# ---------------------------------------------------------------------------
check = realbound(complex(math.cos(1.0), math.sin(1.0)), 2 * math.sqrt(139), 2.0)
print(f"\n  realbound sample: lhs = {check.lhs:.6f} <= rhs = {check.rhs:.6f}")

# ---------------------------------------------------------------------------
# End of the chain: measurement vs the proven envelope.
# ---------------------------------------------------------------------------
print("\n=== measured vs proven at p = 139 ===")
peak = ambiguity_max(bjorck(139))
print(f"  measured max = {peak.max_abs:.6f} at {peak.argmax}")
print(f"  2/sqrt(p)    = {2 / math.sqrt(139):.6f}   (exceeded -- rare for 3 mod 4)")
print(f"  proven bound = {mbound(139):.6f}   (never exceeded)")
