"""
Kernels and Riesz means
=======================

Each filter replaces a noisy pixel with a weighted mean of the regular pixels
in a window.  The three filters differ only in how fast the weights fall off
with distance from the centre.
"""

import numpy as np

from rieszmean import (
    Kernel,
    Window,
    kernel_weights,
    modified_riesz_mean,
    riesz_mean,
    weight_modified_riesz_mean,
)

np.set_printoptions(precision=4, suppress=True)

# Weight tables for k = 2 (a 5x5 window).  Similarity uses city-block
# distance, the plain weight uses squared Euclidean distance, and the modified
# weight scales that distance by 4**(k+1), so almost all mass sits at the centre.
for kernel in Kernel:
    print(kernel.name)
    print(kernel_weights(kernel, 2))

# A window whose centre is noisy.  Two regular pixels: one at an edge
# neighbour, one in a corner.
entries = np.array([[40.0, 100.0, 0.0], [0.0, 0.0, 0.0], [0.0, 0.0, 0.0]])
w = Window(k=1, entries=entries, regular=(entries != 0) & (entries != 255))

# The edge neighbour is closer, so every mean leans toward 100; the sharper
# the kernel, the stronger the lean.
for fn in (riesz_mean, modified_riesz_mean, weight_modified_riesz_mean):
    print(f"{fn.__name__:28s} {fn(w):.4f}")

# Means always stay within the range of the regular values
rng = np.random.default_rng(0)
vals = rng.integers(1, 255, (7, 7)).astype(float)
mask = rng.random((7, 7)) < 0.2
mask[3, 3] = True
w = Window(k=3, entries=np.where(mask, vals, 0.0), regular=mask)
lo, hi = vals[mask].min(), vals[mask].max()
for fn in (riesz_mean, modified_riesz_mean, weight_modified_riesz_mean):
    m = fn(w)
    assert lo <= m <= hi
    print(f"{fn.__name__:28s} {m:8.3f}  in [{lo:.0f}, {hi:.0f}]")
