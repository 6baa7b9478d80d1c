"""Bundled 8-bit grayscale test images.

``lena``    512x512, as shipped with scipy 0.16 (``scipy/misc/lena.dat``).
``camera``  512x512 cameraman, CC0, from scikit-image.
``coins``   303x384 Greek coins, no known copyright restrictions, from scikit-image.
"""

from importlib import resources

from ..pgm import read_pgm

NAMES = ("camera", "coins", "lena")


def corpus_dir():
    """Directory holding the bundled ``.pgm`` files."""
    return resources.files(__name__)


def load(name):
    if name not in NAMES:
        raise KeyError(f"unknown test image {name!r}; choose from {NAMES}")
    with resources.as_file(corpus_dir() / f"{name}.pgm") as path:
        return read_pgm(path)


def lena():
    return load("lena")


def camera():
    return load("camera")


def coins():
    return load("coins")
