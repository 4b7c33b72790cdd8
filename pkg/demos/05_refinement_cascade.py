"""Running the refinement and watching it settle.

Exact arithmetic is used for the first few levels and for the contraction
trace; the float path takes over for a fine plot-ready sampling.
"""
from fractions import Fraction

import numpy as np

from subconv import corpus
from subconv.analyzer import analyze_improved
from subconv.refine import (
    GridSequence,
    basic_limit_samples,
    contraction_trace,
    polyline,
    refine_float,
    refine_to_level,
)

s = corpus.four_point()

# Interpolatory: the data at level k survive unchanged at level k + 1.
f0 = GridSequence.of([0, 1, 0, -1, 0, 1, 0], offset=-3)
f2 = refine_to_level(s, f0, 2)
print("level 2 polyline on [0, 1]:")
for t, v in polyline(f2):
    if 0 <= t <= 1:
        print(f"  t={str(t):>4s}  value={v}")
kept = all(f2[4 * i] == f0[i] for i in range(f0.offset, f0.last + 1))
print("coarse data kept at every level-0 node:", kept)

# Differences contract at least as fast as the certified rate.
v = analyze_improved(s).verdict
tr = contraction_trace(s, f0, 8, v)
print(f"\ncertified mu={v.mu}, L={v.L}")
for lv, b in zip(tr.levels, tr.bound_checks):
    r = "-" if lv.ratio is None else f"{float(lv.ratio):.4f}"
    print(f"k={lv.k}  ||delta f^k||={float(lv.delta_norm):.5f}  ratio={r}  bound={float(b.bound):.5f}")

# Basic limit function of the four-point scheme, sampled on a fine grid.
phi = basic_limit_samples(s, 4)
print("\nphi(0) =", phi[0], " phi(1/2) =", phi[8], " support:", phi.offset / 16, "to", phi.last / 16)

t, vals = refine_float(s, GridSequence.delta_sequence(), 10)
print(f"float path: {vals.size} samples, max {vals.max():.6f} at t={t[np.argmax(vals)]:.4f}, "
      f"min {vals.min():.6f}")
