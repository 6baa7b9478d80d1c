"""MSE, PSNR and SSIM for 8-bit grayscale images."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

PEAK = 255.0


@dataclass(frozen=True)
class QualityReport:
    mse: float
    psnr: float
    ssim: float
    seconds: float = 0.0


@dataclass(frozen=True)
class SsimParams:
    k1: float = 0.01
    k2: float = 0.03
    dynamic_range: float = 255.0
    mode: str = "windowed"
    window_size: int = 11
    sigma: float = 1.5

    def __post_init__(self):
        if self.mode not in ("windowed", "global"):
            raise ValueError(f"unknown SSIM mode {self.mode!r}")
        if self.c1 <= 0 or self.c2 <= 0:
            raise ValueError("SSIM stabilising constants must be positive")

    @property
    def c1(self):
        return (self.k1 * self.dynamic_range) ** 2

    @property
    def c2(self):
        return (self.k2 * self.dynamic_range) ** 2


def _pair(x, y):
    x = np.asarray(x)
    y = np.asarray(y)
    if x.shape != y.shape:
        raise ValueError(f"image shapes differ: {x.shape} vs {y.shape}")
    return x.astype(np.float64), y.astype(np.float64)


def mse(x, y) -> float:
    x, y = _pair(x, y)
    d = x - y
    return float(np.sum(d * d) / d.size)


def psnr(x, y) -> float:
    """Peak signal-to-noise ratio in dB; ``inf`` for identical images."""
    return psnr_from_mse(mse(x, y))


def psnr_from_mse(err: float) -> float:
    if err == 0:
        return math.inf
    return 10.0 * math.log10(PEAK**2 / err)


def _ssim_formula(mu_x, mu_y, var_x, var_y, cov, c1, c2):
    return ((2 * (mu_x * mu_y) + c1) * (2 * cov + c2)) / (
        (mu_x * mu_x + mu_y * mu_y + c1) * (var_x + var_y + c2)
    )


@lru_cache(maxsize=None)
def gaussian_window(size: int = 11, sigma: float = 1.5) -> np.ndarray:
    """Normalised 2-D Gaussian, same as MATLAB ``fspecial('gaussian', size, sigma)``."""
    r = np.arange(size) - (size - 1) / 2.0
    g = np.exp(-(r[:, None] ** 2 + r[None, :] ** 2) / (2.0 * sigma**2))
    g /= g.sum()
    g.setflags(write=False)
    return g


def _shifted_mean(a):
    ref = a.flat[0]
    return float(ref + np.mean(a - ref))


def ssim_map(x, y, params: SsimParams = SsimParams()) -> np.ndarray:
    """Local SSIM at every position where the window fits inside the image.

    Local moments are taken relative to each window's centre pixel, so
    flat regions produce exactly zero variance.
    """
    x, y = _pair(x, y)
    n = params.window_size
    h, w = x.shape
    if h < n or w < n:
        raise ValueError(f"image {x.shape} is smaller than the {n}x{n} SSIM window")
    g = gaussian_window(n, params.sigma)
    oh, ow = h - n + 1, w - n + 1
    half = n // 2
    xc = x[half : half + oh, half : half + ow]
    yc = y[half : half + oh, half : half + ow]
    mx = np.zeros((oh, ow))
    my = np.zeros((oh, ow))
    sxx = np.zeros((oh, ow))
    syy = np.zeros((oh, ow))
    sxy = np.zeros((oh, ow))
    for r in range(n):
        for c in range(n):
            wt = g[r, c]
            dx = x[r : r + oh, c : c + ow] - xc
            dy = y[r : r + oh, c : c + ow] - yc
            mx += wt * dx
            my += wt * dy
            sxx += wt * (dx * dx)
            syy += wt * (dy * dy)
            sxy += wt * (dx * dy)
    return _ssim_formula(
        xc + mx,
        yc + my,
        sxx - mx * mx,
        syy - my * my,
        sxy - mx * my,
        params.c1,
        params.c2,
    )


def ssim(x, y, params: SsimParams = SsimParams()) -> float:
    """Structural similarity.

    ``params.mode == "windowed"`` averages the local index over an 11x11
    Gaussian window (sigma 1.5); ``"global"`` evaluates the index once from
    whole-image moments.  Both use population (1/N) moments.
    """
    if params.mode == "windowed":
        return _shifted_mean(ssim_map(x, y, params))
    x, y = _pair(x, y)
    mu_x = float(np.mean(x))
    mu_y = float(np.mean(y))
    dx = x - mu_x
    dy = y - mu_y
    return float(
        _ssim_formula(
            mu_x,
            mu_y,
            float(np.mean(dx * dx)),
            float(np.mean(dy * dy)),
            float(np.mean(dx * dy)),
            params.c1,
            params.c2,
        )
    )


def evaluate(original, restored, seconds: float = 0.0, params: SsimParams = SsimParams()):
    err = mse(original, restored)
    return QualityReport(
        mse=err,
        psnr=psnr_from_mse(err),
        ssim=ssim(original, restored, params),
        seconds=seconds,
    )


def aggregate(reports) -> QualityReport:
    """Arithmetic mean of every field; refuses empty input and infinite PSNR."""
    reports = list(reports)
    if not reports:
        raise ValueError("cannot aggregate an empty set of reports")
    if any(math.isinf(r.psnr) for r in reports):
        raise ValueError("infinite PSNR (lossless restoration) cannot be averaged")
    n = len(reports)
    return QualityReport(
        mse=math.fsum(r.mse for r in reports) / n,
        psnr=math.fsum(r.psnr for r in reports) / n,
        ssim=math.fsum(r.ssim for r in reports) / n,
        seconds=math.fsum(r.seconds for r in reports) / n,
    )
