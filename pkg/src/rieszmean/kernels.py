"""Window weight functions and the three Riesz-type weighted means.

Window cells are addressed 1-based as ``(s, t)`` with the centre at
``(k+1, k+1)``.  All weights are strictly positive and equal 1 at the centre.

Every weighted mean sums its terms in one fixed order, see
:func:`cell_order`.  The vectorised filters accumulate in the same order,
which is what makes them bit-identical to the per-window functions here.
"""

from __future__ import annotations

import enum
from functools import lru_cache

import numpy as np

from .image import Window


class EmptyWindowError(ValueError):
    """A weighted mean was requested for a window with no regular entry."""


class Kernel(enum.Enum):
    SIMILARITY = "ps"
    WEIGHT = "pw"
    MODIFIED_WEIGHT = "mpw"


def pixel_similarity(s: int, t: int, k: int) -> float:
    """Inverse squared (1 + Manhattan distance) from the window centre."""
    return (1.0 / (1 + abs(k + 1 - s) + abs(k + 1 - t))) ** 2


def pixel_weight(s: int, t: int, k: int) -> float:
    """Inverse squared (1 + squared Euclidean distance) from the centre."""
    return (1.0 / (1 + (k + 1 - s) ** 2 + (k + 1 - t) ** 2)) ** 2


def modified_pixel_weight(s: int, t: int, k: int) -> float:
    """Like :func:`pixel_weight` with the squared distance scaled by 4**(k+1)."""
    scale = 4 ** (k + 1)
    return (1.0 / (1 + scale * (k + 1 - s) ** 2 + scale * (k + 1 - t) ** 2)) ** 2


_KERNEL_FUNCS = {
    Kernel.SIMILARITY: pixel_similarity,
    Kernel.WEIGHT: pixel_weight,
    Kernel.MODIFIED_WEIGHT: modified_pixel_weight,
}


@lru_cache(maxsize=None)
def cell_order(k: int) -> tuple[np.ndarray, np.ndarray]:
    """0-based (rows, cols) of the window cells in summation order.

    Cells are visited ring by ring outward from the centre (Chebyshev
    distance 0, 1, ..., k), row-major within a ring.  A radius-k order is
    therefore a prefix of the radius-(k+1) order.
    """
    idx = np.arange(2 * k + 1)
    rr, cc = np.meshgrid(idx, idx, indexing="ij")
    ring = np.maximum(np.abs(rr - k), np.abs(cc - k))
    order = np.lexsort((cc.ravel(), rr.ravel(), ring.ravel()))
    rows = rr.ravel()[order]
    cols = cc.ravel()[order]
    rows.setflags(write=False)
    cols.setflags(write=False)
    return rows, cols


@lru_cache(maxsize=None)
def kernel_weights(kernel: Kernel, k: int) -> np.ndarray:
    """(2k+1) x (2k+1) table of ``kernel`` weights, read-only."""
    if k < 1:
        raise ValueError(f"window radius must be >= 1, got {k}")
    f = _KERNEL_FUNCS[Kernel(kernel)]
    n = 2 * k + 1
    table = np.array(
        [[f(s, t, k) for t in range(1, n + 1)] for s in range(1, n + 1)],
        dtype=np.float64,
    )
    table.setflags(write=False)
    return table


def weighted_mean(w: Window, kernel: Kernel) -> float:
    """Weighted mean of the regular entries of ``w`` under ``kernel``.

    The quotient is clamped to the range of the regular entries, which only
    matters when rounding pushes it an ulp outside.
    """
    weights = kernel_weights(kernel, w.k)
    num = 0.0
    den = 0.0
    lo = np.inf
    hi = -np.inf
    for r, c in zip(*cell_order(w.k)):
        if w.regular[r, c]:
            v = float(w.entries[r, c])
            num += weights[r, c] * v
            den += weights[r, c]
            lo = min(lo, v)
            hi = max(hi, v)
    if den == 0.0:
        raise EmptyWindowError("window has no regular entries")
    return min(max(num / den, lo), hi)


def riesz_mean(w: Window) -> float:
    return weighted_mean(w, Kernel.SIMILARITY)


def modified_riesz_mean(w: Window) -> float:
    return weighted_mean(w, Kernel.WEIGHT)


def weight_modified_riesz_mean(w: Window) -> float:
    return weighted_mean(w, Kernel.MODIFIED_WEIGHT)


def window_median(w: Window) -> float:
    """Median of all (2k+1)**2 entries, noisy ones included."""
    flat = np.sort(np.asarray(w.entries, dtype=np.float64).ravel())
    return float(flat[flat.size // 2])
