#!/usr/bin/env python3
"""Kloosterman sums, Gauss sums, and the identities connecting them.

Shows the realness of Kloosterman sums, the fiber-count identity behind
the character-sum form, the Gauss sum closed form, and how close the
worst Kloosterman sum gets to its 2*sqrt(p) ceiling.
"""

import math

from cazac import (
    PrimeContext,
    char_ambiguity,
    gauss_sum,
    jacobsthal_count,
    kloosterman,
    salie_form,
    weil_audit,
)

# ---------------------------------------------------------------------------
# K[a,b;p] is real: the x -> -x substitution conjugates the sum onto itself.
# ---------------------------------------------------------------------------
print("=== Kloosterman sums at p = 11 ===")
for a, b in [(0, 0), (1, 0), (1, 1), (2, 7), (10, 10)]:
    print(f"  K[{a},{b};11] = {kloosterman(a, b, 11).value:+.10f}")

# ---------------------------------------------------------------------------
# The character-sum form: K[1,a;p] = sum_x chi(x^2-4a) e^(2 pi i x / p).
# Underneath is the fiber count #{x : x + a/x = t} = 1 + chi(t^2 - 4a).
# ---------------------------------------------------------------------------
print("\n=== character-sum form at p = 13 ===")
for a in (1, 2, 5):
    direct = kloosterman(1, a, 13).value
    charform = salie_form(a, 13)
    print(f"  a={a}:  direct = {direct:+.12f}   char form = {charform:+.12f}")

print("\nfiber counts x + 3/x = t over Z/13Z (must be 1 + chi(t^2-12)):")
table = PrimeContext.create(13).legendre_table
counts = [jacobsthal_count(t, 3, 13) for t in range(13)]
print("  counts:", counts)
print("  formula:", [1 + int(table[(t * t - 12) % 13]) for t in range(13)])

# ---------------------------------------------------------------------------
# Gauss sums evaluate in closed form, with the eps twist by p mod 4.
# ---------------------------------------------------------------------------
print("\n=== Gauss sums ===")
for p in (5, 7):
    for a in (1, 2, 3):
        z = gauss_sum(a, p)
        print(f"  tau[{a};{p}] = {z.real:+.6f} {z.imag:+.6f}i   (sqrt({p}) = {math.sqrt(p):.6f})")

# ---------------------------------------------------------------------------
# The ambiguity of the Legendre symbol itself is a dressed Kloosterman sum,
# so it inherits the 2/sqrt(p) bound.
# ---------------------------------------------------------------------------
print("\n=== character ambiguity at p = 101 ===")
worst = max(
    abs(char_ambiguity(101, m, n)) for m in (1, 2, 50) for n in (1, 17, 100)
)
print(f"  sampled max |A(chi)| = {worst:.6f}  vs  2/sqrt(101) = {2 / math.sqrt(101):.6f}")

print("\n=== Weil audit: worst |K[1,a;p]| / (2 sqrt(p)) ===")
for p in (101, 499, 997):
    audit = weil_audit(p)
    print(f"  p={p:4d}: max_ratio = {audit.max_ratio:.6f} at a = {audit.worst_a}")
print("ratios crowd 1 from below but never reach it")
