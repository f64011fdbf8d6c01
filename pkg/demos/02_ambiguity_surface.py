#!/usr/bin/env python3
"""The ambiguity surface: thumbtack flatness vs the chirp ridge.

Builds the full |A[m, n]| table for a small prime, prints it as a coarse
text map, and contrasts the Björck surface (uniformly small off the
origin) with a quadratic chirp (unit-height ridge along n = 2rm).  Saves a
heatmap PNG when matplotlib is importable.
"""

import numpy as np

from cazac import ambiguity_max, ambiguity_table, bjorck, chirp, mbound

P = 13

# ---------------------------------------------------------------------------
# Björck: every off-origin cell is far below 1.
# ---------------------------------------------------------------------------
print(f"=== |A| table for the Björck sequence, p = {P} ===")
table = np.abs(ambiguity_table(bjorck(P)))
for m in range(P):
    print(" ".join(f"{table[m, n]:.2f}" for n in range(P)))
peak = ambiguity_max(bjorck(P))
print(f"\noff-origin max = {peak.max_abs:.6f} at (m, n) = {peak.argmax}")
print(f"2/sqrt(p)      = {2 / np.sqrt(P):.6f}")
print(f"proven bound   = {mbound(P):.6f}")

# ---------------------------------------------------------------------------
# Chirp: perfect autocorrelation, but a full-height ridge in the plane.
# ---------------------------------------------------------------------------
print(f"\n=== |A| table for chirp(p, 1, 0), p = {P} ===")
ridge = np.abs(ambiguity_table(chirp(P, 1, 0)))
for m in range(P):
    print(" ".join(".." if ridge[m, n] < 0.5 else "##" for n in range(P)))
print("the ## ridge sits on n = 2m (mod p): ideal autocorrelation, terrible doppler coupling")

# ---------------------------------------------------------------------------
# Optional heatmap.
# ---------------------------------------------------------------------------
try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, axes = plt.subplots(1, 2, figsize=(9, 4))
    for ax, (name, data) in zip(
        axes, [("bjorck", table), ("chirp", ridge)]
    ):
        im = ax.imshow(data, origin="lower", cmap="viridis", vmin=0, vmax=1)
        ax.set_title(f"|A| for {name}(p={P})")
        ax.set_xlabel("n (frequency)")
        ax.set_ylabel("m (shift)")
        fig.colorbar(im, ax=ax, shrink=0.8)
    fig.tight_layout()
    fig.savefig("ambiguity_surface.png", dpi=120)
    print("\nwrote ambiguity_surface.png")
except ImportError:
    print("\n(matplotlib not installed; skipping the heatmap)")
