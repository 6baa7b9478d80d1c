"""
Padding, noise masks and windows
================================

The filters never look past the image border directly.  Instead the image is
mirrored outward by ``t`` pixels (edge rows and columns are duplicated) and
every window is cut from that padded copy.
"""

import numpy as np

from rieszmean import noise_mask, sym_pad, window

# A tiny image with a few salt (255) and pepper (0) pixels
A = np.array([[0, 85, 76], [35, 255, 255], [0, 150, 73]], dtype=np.uint8)
print(A)

# The mask marks trustworthy ("regular") pixels with 1, noisy ones with 0
print(noise_mask(A))

# Mirror by two pixels on every side.  Note how the first row of the pad is
# the second image row, then the first image row appears twice.
pad = sym_pad(A, 2)
print(pad.values)
assert pad.values.shape == (7, 7)
np.testing.assert_array_equal(pad.crop(), A)

# Windows use 1-based centre coordinates.  The 3x3 window at (1, 1) spills
# into the mirrored border.
w = window(pad, 1, 1, 1)
print(w.entries)
print("regular cells:", sorted(w.regular_set))
print("centre value:", w.center)

# The 5x5 window at the centre covers the whole image plus one mirrored ring
print(window(pad, 2, 2, 2).entries)
