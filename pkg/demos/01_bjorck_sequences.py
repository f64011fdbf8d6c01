#!/usr/bin/env python3
"""Tour of the Björck and chirp sequence constructions.

Walks through what the two prime classes look like, checks the CAZAC and
bi-unimodularity properties numerically, and shows the text serialization
round-trip.  Run directly: python demos/01_bjorck_sequences.py
"""

import numpy as np

from cazac import (
    bjorck,
    bjorck_angles,
    chirp,
    quadratic_residues,
    sequence_from_text,
    sequence_to_text,
    verify_biunimodular,
    verify_cazac,
)

np.set_printoptions(precision=4, suppress=True)

# ---------------------------------------------------------------------------
# p = 3 (mod 4): two values.  Nonresidues get the phase arccos((1-p)/(1+p)).
# ---------------------------------------------------------------------------
print("=== p = 7 (3 mod 4): a two-valued sequence ===")
seq7 = bjorck(7)
ang7 = bjorck_angles(7)
print("nonresidues mod 7:", sorted(set(range(1, 7)) - quadratic_residues(7)))
print("xi = exp(i*phi)  =", ang7.xi)
for k, z in enumerate(seq7.values):
    tag = "xi" if abs(z - ang7.xi) < 1e-12 else " 1"
    print(f"  u[{k}] = {z:.4f}   ({tag})")

# ---------------------------------------------------------------------------
# p = 1 (mod 4): three values driven by the Legendre symbol.
# ---------------------------------------------------------------------------
print("\n=== p = 13 (1 mod 4): a three-valued sequence ===")
seq13 = bjorck(13)
ang13 = bjorck_angles(13)
print("theta =", ang13.theta, " eta =", ang13.eta)
distinct = sorted(set(seq13.values.tolist()), key=lambda z: (round(z.real, 12), round(z.imag, 12)))
print("distinct values:", np.array(distinct))
print("counts: 1 appears once (at k=0); eta on residues, conj(eta) on nonresidues")

# ---------------------------------------------------------------------------
# Both classes are CAZAC and bi-unimodular.
# ---------------------------------------------------------------------------
print("\n=== verification ===")
for p in (7, 13, 101, 103):
    seq = bjorck(p)
    report = verify_cazac(seq, tol=1e-9)
    print(
        f"p={p:4d}  ca_ok={report.ca_ok}  zac_ok={report.zac_ok}"
        f"  max_violation={report.max_violation:.2e}"
        f"  biunimodular={verify_biunimodular(seq)}"
    )

# The classical quadratic chirps pass the same checks.
print("\nchirp(11, 2, 3):", verify_cazac(chirp(11, 2, 3)))

# ---------------------------------------------------------------------------
# Serialization: one "re,im" sample per line, exact round-trip.
# ---------------------------------------------------------------------------
print("\n=== serialization round-trip ===")
text = sequence_to_text(seq7)
print(text.splitlines()[3], "<- sample 3 of p=7")
back = sequence_from_text(text)
print("round-trip exact:", bool(np.array_equal(back.values, seq7.values)))
