"""Adaptive Riesz-mean filters for high-density salt-and-pepper noise."""

from .filters import (
    FilterKind,
    FilterParams,
    armf,
    awmrmf,
    damrmf,
    denoise,
    iter_passes,
    smf_baseline,
)
from .image import (
    CorruptedStateError,
    Entry,
    PaddedImage,
    PreconditionError,
    Window,
    classify_entry,
    noise_mask,
    sym_pad,
    to_double,
    to_uint8,
    window,
)
from .kernels import (
    EmptyWindowError,
    Kernel,
    kernel_weights,
    modified_pixel_weight,
    modified_riesz_mean,
    pixel_similarity,
    pixel_weight,
    riesz_mean,
    weight_modified_riesz_mean,
    window_median,
)
from .metrics import QualityReport, SsimParams, aggregate, evaluate, mse, psnr, ssim
from .noise import CorruptionRecord, NoiseSpec, inject_spn
from .pgm import read_pgm, write_pgm

__version__ = "0.1.0"
