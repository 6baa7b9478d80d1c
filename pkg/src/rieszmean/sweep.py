"""Density sweeps over an image corpus, written as CSV.

Every (image, filter, density, seed) cell injects noise, denoises, and
measures the result against the clean image.  After the data rows come one
mean row per (filter, density) and one grand-mean row per filter; the grand
mean is the plain average of that filter's density means.
"""

from __future__ import annotations

import csv
import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

from .filters import FilterKind, denoise
from .metrics import QualityReport, SsimParams, aggregate, evaluate
from .noise import NoiseSpec, inject_spn
from .pgm import PGMError, read_pgm

log = logging.getLogger(__name__)

CSV_HEADER = ["image", "filter", "density", "seed", "psnr_db", "ssim", "mse", "seconds"]
DEFAULT_DENSITIES = tuple(round(0.60 + 0.05 * i, 2) for i in range(8))
MEAN_LABEL = "mean"
ALL_LABEL = "all"


class SweepError(RuntimeError):
    pass


@dataclass(frozen=True)
class SweepConfig:
    corpus: Path
    filters: tuple = ("armf", "damrmf", "awmrmf")
    densities: tuple = DEFAULT_DENSITIES
    seeds: int = 1
    base_seed: int = 0
    output: Path | None = None
    ssim_mode: str = "windowed"
    salt_fraction: float = 0.5
    jobs: int = 1

    def __post_init__(self):
        if not self.filters:
            raise ValueError("at least one filter is required")
        for f in self.filters:
            FilterKind(f)
        if not self.densities:
            raise ValueError("at least one density is required")
        if any(not 0.0 < d < 1.0 for d in self.densities):
            raise ValueError("densities must lie strictly between 0 and 1")
        if self.seeds < 1:
            raise ValueError("seeds must be >= 1")
        SsimParams(mode=self.ssim_mode)


@dataclass(frozen=True)
class SweepRow:
    image: str
    filter: str
    density: float | None
    seed: int | None
    report: QualityReport = field(repr=False)


def format_density(d):
    if d is None:
        return ALL_LABEL
    return f"{d:.2f}" if round(d, 2) == d else repr(d)


def format_psnr(v):
    return "inf" if math.isinf(v) else f"{v:.6f}"


def row_fields(row: SweepRow):
    r = row.report
    return [
        row.image,
        row.filter,
        format_density(row.density),
        ALL_LABEL if row.seed is None else str(row.seed),
        format_psnr(r.psnr),
        f"{r.ssim:.6f}",
        f"{r.mse:.6f}",
        f"{r.seconds:.6f}",
    ]


def load_corpus(corpus):
    """Read every ``*.pgm`` in ``corpus`` in lexicographic order.

    Unreadable files are logged and skipped; if nothing loads, raises
    :class:`SweepError`.
    """
    paths = sorted(Path(corpus).glob("*.pgm"), key=lambda p: p.name)
    images = []
    for p in paths:
        try:
            img = read_pgm(p)
        except (OSError, PGMError) as exc:
            log.warning("skipping %s: %s", p, exc)
            continue
        if min(img.shape) < 5:
            log.warning("skipping %s: smaller than 5x5", p)
            continue
        images.append((p.stem, img))
    if not images:
        raise SweepError(f"no usable .pgm images in {corpus}")
    return images


def _run_cell(args):
    name, clean, filt, density, seed, salt_fraction, ssim_mode = args
    noisy, _ = inject_spn(clean, NoiseSpec(density, salt_fraction, seed))
    restored, seconds = denoise(noisy, filt)
    report = evaluate(clean, restored, seconds, SsimParams(mode=ssim_mode))
    return SweepRow(name, filt, density, seed, report)


def sweep_cells(config: SweepConfig, images):
    densities = sorted(config.densities)
    for name, clean in images:
        for filt in config.filters:
            for d in densities:
                for s in range(config.base_seed, config.base_seed + config.seeds):
                    yield (name, clean, filt, d, s, config.salt_fraction, config.ssim_mode)


def summary_rows(rows, config: SweepConfig):
    out = []
    for filt in config.filters:
        cell_means = []
        for d in sorted(config.densities):
            cell = [r.report for r in rows if r.filter == filt and r.density == d]
            mean = aggregate(cell)
            cell_means.append(mean)
            out.append(SweepRow(MEAN_LABEL, filt, d, None, mean))
        out.append(SweepRow(MEAN_LABEL, filt, None, None, aggregate(cell_means)))
    return out


def write_csv(rows, path):
    with open(path, "w", newline="", encoding="utf-8") as f:
        w = csv.writer(f, lineterminator="\n")
        w.writerow(CSV_HEADER)
        for row in rows:
            w.writerow(row_fields(row))


def run_sweep(config: SweepConfig):
    """Run the sweep and return data rows followed by summary rows.

    Writes the CSV to ``config.output`` when set.  Results do not depend on
    ``config.jobs`` apart from the timing column.
    """
    images = load_corpus(config.corpus)
    cells = list(sweep_cells(config, images))
    if config.jobs > 1:
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            rows = list(pool.map(_run_cell, cells))
    else:
        rows = [_run_cell(c) for c in cells]
    rows += summary_rows(rows, config)
    if config.output is not None:
        write_csv(rows, config.output)
    return rows
