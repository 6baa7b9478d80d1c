"""Slow per-pixel versions of the adaptive filters.

These follow the filter definitions literally, one pixel at a time and one window
at a time, using :func:`rieszmean.image.window` and the scalar means in
:mod:`rieszmean.kernels`.  They exist as an oracle for the vectorised
filters and are only practical on small images.
"""

from __future__ import annotations

import numpy as np

from .filters import check_filter_input
from .image import noise_mask, pad_image, to_double, to_uint8, window
from .kernels import (
    modified_riesz_mean,
    riesz_mean,
    weight_modified_riesz_mean,
    window_median,
)


def _is_noisy(v):
    return v == 0 or v == 255


def armf_reference(img, t_start=5):
    a = to_double(check_filter_input(img))
    m, n = a.shape
    for t in range(t_start, 0, -1):
        b = noise_mask(a)
        pad = pad_image(a.copy(), t)
        out = a.copy()
        for i in range(1, m + 1):
            for j in range(1, n + 1):
                if b[i - 1, j - 1] == 0:
                    for k in range(1, t + 1):
                        w = window(pad, i, j, k)
                        if w.regular.any():
                            out[i - 1, j - 1] = riesz_mean(w)
                            break
        a = out
    return to_uint8(a)


def damrmf_reference(img, t_start=5):
    a = to_double(check_filter_input(img))
    m, n = a.shape
    for t in range(t_start, 0, -1):
        b = noise_mask(a)
        pad = pad_image(a.copy(), t)
        out = a.copy()
        for i in range(1, m + 1):
            for j in range(1, n + 1):
                if b[i - 1, j - 1] == 0:
                    for k in range(1, t + 1):
                        w = window(pad, i, j, k)
                        if 0 < window_median(w) < 255 and _is_noisy(out[i - 1, j - 1]):
                            out[i - 1, j - 1] = modified_riesz_mean(w)
                            break
        a = out
    return to_uint8(a)


def awmrmf_reference(img, t_start=6, gate_on_current=False):
    a = to_double(check_filter_input(img))
    m, n = a.shape
    for t in range(t_start, 0, -1):
        b = noise_mask(a)
        pad = pad_image(a.copy(), t)
        out = a.copy()
        for i in range(1, m + 1):
            for j in range(1, n + 1):
                if b[i - 1, j - 1] == 0:
                    # no break; the gate reads the snapshot unless told otherwise
                    for k in range(1, t + 1):
                        current = out[i - 1, j - 1] if gate_on_current else a[i - 1, j - 1]
                        if _is_noisy(current):
                            w = window(pad, i, j, k)
                            if w.regular.any():
                                out[i - 1, j - 1] = weight_modified_riesz_mean(w)
        a = out
    return to_uint8(a)


REFERENCES = {
    "armf": armf_reference,
    "damrmf": damrmf_reference,
    "awmrmf": awmrmf_reference,
}


def naive_median_filter(img, radius=1):
    """Sort-based median filter on a symmetric pad; oracle for ``smf_baseline``."""
    a = np.asarray(img)
    pad = np.pad(a, radius, mode="symmetric")
    out = np.empty_like(a)
    size = 2 * radius + 1
    for i in range(a.shape[0]):
        for j in range(a.shape[1]):
            block = sorted(pad[i : i + size, j : j + size].ravel().tolist())
            out[i, j] = block[len(block) // 2]
    return out
