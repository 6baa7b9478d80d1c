"""Command-line interface: ``rieszmean add-noise | denoise | sweep``.

Exit codes: 0 success, 1 usage error, 2 data or format error.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from .filters import FilterKind, denoise
from .image import PreconditionError
from .metrics import SsimParams, evaluate
from .noise import NoiseSpec, inject_spn
from .pgm import PGMError, read_pgm, write_pgm
from .sweep import DEFAULT_DENSITIES, SweepConfig, SweepError, run_sweep

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2

FILTER_NAMES = [k.value for k in FilterKind]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _fraction(text):
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not 0.0 <= v <= 1.0:
        raise argparse.ArgumentTypeError(f"{v} is outside [0, 1]")
    return v


def _float_list(text):
    try:
        return tuple(float(x) for x in text.split(",") if x)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad number list: {text!r}") from None


def _name_list(text):
    names = tuple(x for x in text.split(",") if x)
    bad = [n for n in names if n not in FILTER_NAMES]
    if bad:
        raise argparse.ArgumentTypeError(
            f"unknown filter(s) {', '.join(bad)}; valid: {', '.join(FILTER_NAMES)}"
        )
    return names


def build_parser():
    parser = _Parser(
        prog="rieszmean",
        description="Salt-and-pepper denoising with adaptive Riesz-mean filters.",
    )
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("add-noise", help="inject salt-and-pepper noise into a PGM image")
    p.add_argument("--input", required=True, type=Path)
    p.add_argument("--output", required=True, type=Path)
    p.add_argument("--density", required=True, type=_fraction)
    p.add_argument("--seed", required=True, type=int)
    p.add_argument("--salt-ratio", type=_fraction, default=0.5)
    p.add_argument("--force", action="store_true", help="overwrite an existing output")
    p.set_defaults(func=cmd_add_noise)

    p = sub.add_parser("denoise", help="denoise a PGM image")
    p.add_argument("--filter", required=True, choices=FILTER_NAMES)
    p.add_argument("--input", required=True, type=Path)
    p.add_argument("--output", required=True, type=Path)
    p.add_argument("--reference", type=Path, help="clean image; prints PSNR/SSIM/time")
    p.add_argument("--ssim-mode", choices=["windowed", "global"], default="windowed")
    p.add_argument("--force", action="store_true", help="overwrite an existing output")
    p.set_defaults(func=cmd_denoise)

    p = sub.add_parser("sweep", help="benchmark filters over a corpus and noise densities")
    p.add_argument("--corpus", required=True, type=Path, help="directory of .pgm images")
    p.add_argument("--output", required=True, type=Path, help="CSV file to write")
    p.add_argument("--filters", type=_name_list, default=("armf", "damrmf", "awmrmf"))
    p.add_argument("--densities", type=_float_list, default=DEFAULT_DENSITIES)
    p.add_argument("--seeds", type=int, default=1, help="noise realisations per cell")
    p.add_argument("--base-seed", type=int, default=0)
    p.add_argument("--salt-ratio", type=_fraction, default=0.5)
    p.add_argument("--ssim-mode", choices=["windowed", "global"], default="windowed")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--force", action="store_true", help="overwrite an existing output")
    p.set_defaults(func=cmd_sweep)
    return parser


def _check_output(path, force):
    if path.exists() and not force:
        raise UsageError(f"{path} exists; pass --force to overwrite")


def cmd_add_noise(args):
    _check_output(args.output, args.force)
    try:
        spec = NoiseSpec(args.density, args.salt_ratio, args.seed)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    img = read_pgm(args.input)
    noisy, record = inject_spn(img, spec)
    write_pgm(noisy, args.output)
    print(f"corrupted {len(record)} of {img.size} pixels")
    return EXIT_OK


def cmd_denoise(args):
    _check_output(args.output, args.force)
    img = read_pgm(args.input)
    reference = read_pgm(args.reference) if args.reference else None
    restored, seconds = denoise(img, args.filter)
    write_pgm(restored, args.output)
    if reference is not None:
        r = evaluate(reference, restored, seconds, SsimParams(mode=args.ssim_mode))
        print(f"PSNR={r.psnr:.4f} SSIM={r.ssim:.4f} SECONDS={r.seconds:.4f}")
    return EXIT_OK


def cmd_sweep(args):
    _check_output(args.output, args.force)
    try:
        config = SweepConfig(
            corpus=args.corpus,
            filters=args.filters,
            densities=args.densities,
            seeds=args.seeds,
            base_seed=args.base_seed,
            output=args.output,
            ssim_mode=args.ssim_mode,
            salt_fraction=args.salt_ratio,
            jobs=args.jobs,
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    rows = run_sweep(config)
    print(f"wrote {len(rows)} rows to {args.output}")
    return EXIT_OK


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s: %(message)s",
    )
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"rieszmean: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (OSError, PGMError, PreconditionError, SweepError, ValueError) as exc:
        print(f"rieszmean: error: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
