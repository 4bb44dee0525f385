"""Plot data for the three curves: shifted-disk boundaries, the Cesaro
envelope curvature, and the Cesaro radius equation."""
from __future__ import annotations

from pathlib import Path

import numpy as np

from .domain import make_shifted_disk
from .extremal import cesaro_envelope_curvature
from .report import Table, emit_table

FIGURE_GAMMAS = (0.0, 0.2, 0.4, 0.5, 0.7)
CIRCLE_SAMPLES = 512
CURVE_SAMPLES = 1000


def circle_samples(gammas=FIGURE_GAMMAS, n: int = CIRCLE_SAMPLES) -> Table:
    """Rows (gamma, theta, Re z, Im z) on each boundary circle."""
    theta = 2 * np.pi * np.arange(n) / n
    rows = []
    for g in gammas:
        disk = make_shifted_disk(g)
        z = disk.center + disk.radius * np.exp(1j * theta)
        rows.extend([float(g), float(t), float(w.real), float(w.imag)] for t, w in zip(theta, z))
    doc = {"figure": "shifted disk boundaries", "gammas": list(gammas), "samples_per_circle": n,
           "rows": rows}
    return Table(["gamma", "theta", "re_z", "im_z"], rows, doc)


def rho_grid(n: int = CURVE_SAMPLES) -> np.ndarray:
    """n equispaced points i/n on [0, 1)."""
    return np.arange(n) / n


def cesaro_radius_equation(rho):
    """3(1-rho) log(1-rho) + 2 rho."""
    rho = np.asarray(rho, dtype=float)
    return 3.0 * (1.0 - rho) * np.log1p(-rho) + 2.0 * rho


def curvature_samples(n: int = CURVE_SAMPLES) -> Table:
    rho = rho_grid(n)
    vals = cesaro_envelope_curvature(rho)
    rows = [[float(r), float(v)] for r, v in zip(rho, vals)]
    doc = {"figure": "-2(1/(1-rho) + log(1-rho)/rho)", "rows": rows}
    return Table(["rho", "value"], rows, doc)


def radius_equation_samples(n: int = CURVE_SAMPLES) -> Table:
    rho = rho_grid(n)
    vals = cesaro_radius_equation(rho)
    rows = [[float(r), float(v)] for r, v in zip(rho, vals)]
    doc = {"figure": "3(1-rho)log(1-rho) + 2 rho", "rows": rows}
    return Table(["rho", "value"], rows, doc)


FIGURES = {
    "fig1_circles": circle_samples,
    "fig2_cesaro_curvature": curvature_samples,
    "fig3_cesaro_radius_equation": radius_equation_samples,
}


def write_figures(outdir, fmt: str = "csv") -> list[Path]:
    outdir = Path(outdir)
    written = []
    for name, make in FIGURES.items():
        path = outdir / f"{name}.{fmt}"
        emit_table(make(), fmt, path)
        written.append(path)
    return written


def sign_changes(values) -> list[int]:
    """Indices i where values[i] and values[i+1] have strictly opposite signs."""
    s = np.sign(np.asarray(values, dtype=float))
    return [i for i in range(len(s) - 1) if s[i] * s[i + 1] < 0]
