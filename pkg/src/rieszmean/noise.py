"""Seeded salt-and-pepper noise injection.

Seed-to-noise mapping, version 1 (frozen):

1. ``rng = numpy.random.Generator(numpy.random.PCG64(seed))``
2. ``count = floor(density * height * width)``, with the product rounded to
   9 decimals first so that e.g. 0.29 * 100 counts 29 pixels.
3. ``positions = rng.permutation(height * width)[:count]`` (row-major flat
   indices, kept in this order in the record).
4. ``salt = rng.random(count) < salt_fraction``; salt pixels become 255,
   the rest 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .image import as_gray

NOISE_MAPPING_VERSION = 1


@dataclass(frozen=True)
class NoiseSpec:
    density: float
    salt_fraction: float = 0.5
    seed: int = 0

    def __post_init__(self):
        if not 0.0 <= self.density <= 1.0:
            raise ValueError(f"density must lie in [0, 1], got {self.density}")
        if not 0.0 <= self.salt_fraction <= 1.0:
            raise ValueError(f"salt_fraction must lie in [0, 1], got {self.salt_fraction}")
        if not 0 <= self.seed < 2**64:
            raise ValueError(f"seed must be an unsigned 64-bit integer, got {self.seed}")


@dataclass(frozen=True)
class CorruptionRecord:
    """Which pixels were overwritten, what they held, and what they got."""

    shape: tuple[int, int]
    indices: np.ndarray
    original: np.ndarray
    injected: np.ndarray

    def __len__(self):
        return int(self.indices.size)


def corrupted_count(density: float, n_pixels: int) -> int:
    return math.floor(round(density * n_pixels, 9))


def inject_spn(img, spec: NoiseSpec):
    """Corrupt exactly ``floor(density * pixels)`` pixels of ``img``.

    Returns ``(noisy, record)``.  The input is not modified.  Pixels that
    were already 0 or 255 are still counted when selected.
    """
    a = as_gray(img)
    n = a.size
    count = corrupted_count(spec.density, n)
    rng = np.random.Generator(np.random.PCG64(spec.seed))
    positions = rng.permutation(n)[:count]
    salt = rng.random(count) < spec.salt_fraction
    injected = np.where(salt, 255, 0).astype(np.uint8)

    flat = a.ravel().copy()
    original = flat[positions].copy()
    flat[positions] = injected
    record = CorruptionRecord(
        shape=a.shape, indices=positions, original=original, injected=injected
    )
    return flat.reshape(a.shape), record
