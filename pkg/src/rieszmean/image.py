"""Image matrices, noise masks, symmetric padding and window extraction.

Images are plain 2-D numpy arrays: ``uint8`` for stored images and
``float64`` for the working copies the filters operate on.  Pixel
coordinates in the public API are 1-based ``(row, col)`` pairs; arrays are
indexed 0-based as usual.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

NOISE_LOW = 0
NOISE_HIGH = 255


class PreconditionError(ValueError):
    """An argument is outside the documented domain of an operation."""


class CorruptedStateError(ValueError):
    """A working image holds a non-finite value."""


class Entry(enum.Enum):
    NOISY = "noisy"
    REGULAR = "regular"


def classify_entry(v) -> Entry:
    """Return ``Entry.NOISY`` for 0 or 255, ``Entry.REGULAR`` otherwise."""
    if not 0 <= v <= 255:
        raise PreconditionError(f"intensity {v!r} outside [0, 255]")
    return Entry.NOISY if v == NOISE_LOW or v == NOISE_HIGH else Entry.REGULAR


def as_gray(img) -> np.ndarray:
    """Validate ``img`` as an 8-bit grayscale image and return it as uint8.

    Integer arrays with values in [0, 255] are accepted and converted; float
    arrays are rejected so that rounding never happens silently.
    """
    a = np.asarray(img)
    if a.ndim != 2 or a.shape[0] < 1 or a.shape[1] < 1:
        raise PreconditionError(f"expected a non-empty 2-D image, got shape {a.shape}")
    if a.dtype == np.uint8:
        return a
    if not np.issubdtype(a.dtype, np.integer):
        raise PreconditionError(f"expected integer intensities, got dtype {a.dtype}")
    if a.min() < 0 or a.max() > 255:
        raise PreconditionError("intensities must lie in [0, 255]")
    return a.astype(np.uint8)


def noise_mask(img) -> np.ndarray:
    """Binary matrix of ``img``: 0 where the entry is 0 or 255, 1 elsewhere.

    Works on both uint8 images and float working images.
    """
    a = np.asarray(img)
    if a.ndim != 2:
        raise PreconditionError(f"expected a 2-D image, got shape {a.shape}")
    return ((a != NOISE_LOW) & (a != NOISE_HIGH)).astype(np.uint8)


def to_double(img) -> np.ndarray:
    return as_gray(img).astype(np.float64)


def to_uint8(img) -> np.ndarray:
    """Round half away from zero, clamp to [0, 255] and convert to uint8."""
    a = np.asarray(img, dtype=np.float64)
    if not np.all(np.isfinite(a)):
        raise CorruptedStateError("working image contains NaN or infinite values")
    whole = np.trunc(a)
    frac = a - whole
    rounded = whole + np.where(np.abs(frac) >= 0.5, np.sign(a), 0.0)
    return np.clip(rounded, 0, 255).astype(np.uint8)


def pad_symmetric(a: np.ndarray, t: int) -> np.ndarray:
    # Mirror with edge duplication (numpy "symmetric").  For t larger than the
    # image the reflection repeats, which the filters rely on for t=6 on
    # small inputs.
    return np.pad(a, t, mode="symmetric")


@dataclass(frozen=True)
class PaddedImage:
    """A t-symmetric pad of an image together with its padded mask."""

    t: int
    values: np.ndarray
    bits: np.ndarray

    @property
    def shape(self):
        """Shape of the unpadded source image."""
        h, w = self.values.shape
        return h - 2 * self.t, w - 2 * self.t

    def crop(self) -> np.ndarray:
        t = self.t
        return self.values[t:-t, t:-t]


def sym_pad(img, t: int) -> PaddedImage:
    """Pad ``img`` by ``t`` mirrored rows/columns on every side.

    For ``t = 2`` the row order is r2, r1 | r1, r2, ..., rm | rm, r(m-1),
    and likewise for columns.  ``1 <= t <= min(height, width)`` is required.
    """
    a = np.asarray(img)
    if a.ndim != 2:
        raise PreconditionError(f"expected a 2-D image, got shape {a.shape}")
    if not 1 <= t <= min(a.shape):
        raise PreconditionError(f"pad radius t={t} outside [1, {min(a.shape)}]")
    return pad_image(a, t)


def pad_image(a: np.ndarray, t: int) -> PaddedImage:
    """:func:`sym_pad` without the ``t <= min(height, width)`` check."""
    values = pad_symmetric(a, t)
    values.setflags(write=False)
    bits = noise_mask(values)
    bits.setflags(write=False)
    return PaddedImage(t=t, values=values, bits=bits)


@dataclass(frozen=True)
class Window:
    """The (2k+1) x (2k+1) neighbourhood of one pixel.

    ``regular`` is a boolean array with the same shape as ``entries``;
    ``regular_set`` lists the same cells as 1-based ``(s, t)`` pairs.
    """

    k: int
    entries: np.ndarray
    regular: np.ndarray

    @property
    def regular_set(self) -> set[tuple[int, int]]:
        rows, cols = np.nonzero(self.regular)
        return {(int(s) + 1, int(t) + 1) for s, t in zip(rows, cols)}

    @property
    def center(self):
        return self.entries[self.k, self.k]


def window(pad: PaddedImage, i: int, j: int, k: int) -> Window:
    """k-approximate matrix of pixel ``(i, j)`` (1-based) inside ``pad``."""
    h, w = pad.shape
    if not (1 <= i <= h and 1 <= j <= w):
        raise PreconditionError(f"pixel ({i}, {j}) outside a {h}x{w} image")
    if not 1 <= k <= pad.t:
        raise PreconditionError(f"window radius k={k} outside [1, {pad.t}]")
    r = i - 1 + pad.t
    c = j - 1 + pad.t
    entries = pad.values[r - k : r + k + 1, c - k : c + k + 1]
    regular = pad.bits[r - k : r + k + 1, c - k : c + k + 1].astype(bool)
    return Window(k=k, entries=entries, regular=regular)
