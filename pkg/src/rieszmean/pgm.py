"""Binary PGM (P5, maxval 255) reading and writing."""

from __future__ import annotations

import os

import numpy as np

from .image import as_gray


class PGMError(ValueError):
    """Base class for PGM parse failures."""


class PGMHeaderError(PGMError):
    pass


class PGMDepthError(PGMError):
    pass


class PGMTruncatedError(PGMError):
    pass


_WHITESPACE = b" \t\r\n\v\f"


def _header_tokens(data: bytes, count: int):
    """Read ``count`` whitespace-separated header tokens, skipping comments.

    Returns the tokens and the offset just past the single whitespace byte
    that terminates the last one.
    """
    tokens = []
    pos = 0
    n = len(data)
    while len(tokens) < count:
        while pos < n and data[pos] in _WHITESPACE:
            pos += 1
        if pos < n and data[pos] == ord("#"):
            while pos < n and data[pos] not in b"\r\n":
                pos += 1
            continue
        start = pos
        while pos < n and data[pos] not in _WHITESPACE and data[pos] != ord("#"):
            pos += 1
        if start == pos:
            raise PGMHeaderError("header ended early")
        tokens.append(data[start:pos])
    if pos >= n or data[pos] not in _WHITESPACE:
        raise PGMHeaderError("missing whitespace after maxval")
    return tokens, pos + 1


def parse_pgm(data: bytes) -> np.ndarray:
    tokens, offset = _header_tokens(data, 4)
    magic, *numbers = tokens
    if magic != b"P5":
        raise PGMHeaderError(f"not a binary PGM (magic {magic!r})")
    try:
        width, height, maxval = (int(t) for t in numbers)
    except ValueError as exc:
        raise PGMHeaderError(f"non-numeric header field: {exc}") from None
    if width < 1 or height < 1:
        raise PGMHeaderError(f"invalid dimensions {width}x{height}")
    if maxval != 255:
        raise PGMDepthError(f"only maxval 255 is supported, got {maxval}")
    payload = data[offset : offset + width * height]
    if len(payload) < width * height:
        raise PGMTruncatedError(
            f"expected {width * height} pixel bytes, found {len(payload)}"
        )
    return np.frombuffer(payload, dtype=np.uint8).reshape(height, width).copy()


def read_pgm(path) -> np.ndarray:
    with open(path, "rb") as f:
        return parse_pgm(f.read())


def encode_pgm(img) -> bytes:
    a = as_gray(img)
    h, w = a.shape
    return b"P5\n%d %d\n255\n" % (w, h) + np.ascontiguousarray(a).tobytes()


def write_pgm(img, path, overwrite: bool = True) -> None:
    """Write ``img`` as binary PGM.

    With ``overwrite=False`` an existing file raises ``FileExistsError``.
    """
    data = encode_pgm(img)
    if not overwrite and os.path.exists(path):
        raise FileExistsError(f"{path} exists")
    with open(path, "wb") as f:
        f.write(data)
