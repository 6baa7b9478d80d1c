"""
A small density sweep
=====================

Run every adaptive filter over the bundled corpus at a few densities and
print the corpus means.  The same harness backs ``rieszmean sweep``.
"""

from rieszmean import data
from rieszmean.sweep import SweepConfig, run_sweep

config = SweepConfig(corpus=data.corpus_dir(), densities=(0.6, 0.8, 0.95), output="sweep.csv")
rows = run_sweep(config)

means = [r for r in rows if r.image == "mean"]
print(f"{'filter':8s} {'density':>7s} {'PSNR':>8s} {'SSIM':>7s}")
for r in means:
    density = "all" if r.density is None else f"{r.density:.2f}"
    print(f"{r.filter:8s} {density:>7s} {r.report.psnr:8.3f} {r.report.ssim:7.4f}")

print(f"per-image rows written to {config.output}")
