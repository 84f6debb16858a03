"""Turn result rows into figures.

One figure per experiment type found in the CSV: line chart, one series per
scheme (the power-ratio sweep gets two series per scheme, source and relay
shares), shaded band at plus/minus one standard error where the CSV carries
one. Every figure is written twice: a PNG and a .points.json sidecar holding
exactly the plotted coordinates, so tests can check figure content without
comparing pixels. Rendering is a pure function of the CSV rows.
"""

from __future__ import annotations

import json
import os

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .reader import read_rows

_RATE_LABEL = "mean secrecy rate (bit/s/Hz)"

_AXIS_LABELS = {
    "rd_sweep": ("decode target R_d (bit/s/Hz)", _RATE_LABEL),
    "power_sweep": ("total power P (dBm)", _RATE_LABEL),
    "m_sweep": ("number of intermediate nodes M", _RATE_LABEL),
    "power_ratio_sweep": ("number of intermediate nodes M", "mean power share of total P"),
    "ee_diagnostic": ("leakage sample variance", "mean leakage approximation error"),
}


def _series_points(rows, y_of):
    """Sorted (x, y, stderr) triples for one series; rows lacking x or y are
    not plottable and are dropped."""
    pts = []
    for r in rows:
        y = y_of(r)
        if r.sweep_value is None or y is None:
            continue
        pts.append((r.sweep_value, y, r.stderr))
    pts.sort(key=lambda p: p[0])
    return pts


def _pack(label, pts, with_band):
    se = [p[2] for p in pts]
    return {
        "label": label,
        "x": [p[0] for p in pts],
        "y": [p[1] for p in pts],
        "stderr": se if with_band and all(s is not None for s in se) else None,
    }


def _spec_for(experiment, rows):
    schemes = []
    for r in rows:
        if r.scheme not in schemes:
            schemes.append(r.scheme)
    series = []
    for scheme in schemes:
        sub = [r for r in rows if r.scheme == scheme]
        if experiment == "power_ratio_sweep":
            # the stderr column tracks the rate, not the shares, so no bands here
            for col, tag in (("mean_ps_ratio", "P_s/P"), ("mean_pr_ratio", "P_r/P")):
                pts = _series_points(sub, lambda r, c=col: getattr(r, c))
                if pts:
                    series.append(_pack(f"{scheme} {tag}", pts, with_band=False))
        else:
            pts = _series_points(sub, lambda r: r.mean_secrecy_rate)
            if pts:
                series.append(_pack(scheme or "mean-field error", pts, with_band=True))
    x_label, y_label = _AXIS_LABELS.get(
        experiment, (rows[0].sweep_var or "sweep value", _RATE_LABEL)
    )
    return {
        "experiment": experiment,
        "x_label": x_label,
        "y_label": y_label,
        "series": series,
    }


def plot_specs(rows) -> list:
    """One plot specification per experiment type, in order of appearance."""
    order = []
    grouped = {}
    for r in rows:
        if r.experiment not in grouped:
            order.append(r.experiment)
            grouped[r.experiment] = []
        grouped[r.experiment].append(r)
    return [_spec_for(exp, grouped[exp]) for exp in order]


def _draw(spec, png_path) -> None:
    fig, ax = plt.subplots(figsize=(7.0, 4.5))
    for s in spec["series"]:
        (line,) = ax.plot(s["x"], s["y"], marker="o", markersize=4, label=s["label"])
        if s["stderr"] is not None:
            lo = [y - e for y, e in zip(s["y"], s["stderr"])]
            hi = [y + e for y, e in zip(s["y"], s["stderr"])]
            ax.fill_between(s["x"], lo, hi, color=line.get_color(), alpha=0.2, linewidth=0)
    ax.set_xlabel(spec["x_label"])
    ax.set_ylabel(spec["y_label"])
    ax.set_title(spec["experiment"])
    ax.grid(True, alpha=0.3)
    ax.legend()
    fig.tight_layout()
    fig.savefig(png_path, dpi=150)
    plt.close(fig)


def render(csv_path: str, out_dir: str) -> list:
    """Render every experiment in the CSV; returns the written PNG paths."""
    rows = read_rows(csv_path)
    os.makedirs(out_dir, exist_ok=True)
    written = []
    for spec in plot_specs(rows):
        base = os.path.join(out_dir, spec["experiment"])
        with open(base + ".points.json", "w", encoding="utf-8") as f:
            json.dump(spec, f, indent=2)
            f.write("\n")
        _draw(spec, base + ".png")
        written.append(base + ".png")
    return written
