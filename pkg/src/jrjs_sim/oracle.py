"""Brute-force reference optimizers for validating the closed forms.

These scan the raw objective directly and never touch the line-ratio
coefficients, so they form an independent route to the optimum. Grids are
built as lo + (hi - lo) * (k / n); equal rationals k/n round to the same
float, so a grid with n' = c * n points is a superset of the n-point grid
and raising n can only raise the returned value when refinement is off.
"""

from __future__ import annotations

import numpy as np

from .exceptions import InfeasibleRate

# rows per evaluation block in the rectangle scan, keeps peak memory flat
_BLOCK_CELLS = 10_000_000


def _objective_fn(inp):
    """Raw objective closure for a full-knowledge or mean-field instance."""
    if hasattr(inp, "lam_e"):

        def f(p_s, p_r):
            p_z = np.maximum(inp.p_total - p_s - p_r, 0.0)
            gd = np.minimum(inp.h_sr_sq * p_s, inp.h_rd_sq * p_r) / inp.noise
            ge = inp.h_se_sq * p_s / inp.noise + inp.h_re_sq * p_r / (
                inp.noise + p_z * inp.lam_e
            )
            return (1.0 + gd) / (1.0 + ge)

    else:

        def f(p_s, p_r):
            p_z = np.maximum(inp.p_total - p_s - p_r, 0.0)
            gd = np.minimum(inp.h_sr_sq * p_s, inp.h_rd_sq * p_r) / inp.noise
            ge = inp.eps1 * p_s / inp.noise + inp.eps2 * p_r / (
                inp.noise + p_z * inp.eps2
            )
            return (1.0 + gd) / (1.0 + ge)

    return f


def _axis(lo: float, hi: float, n: int) -> np.ndarray:
    return lo + (hi - lo) * (np.arange(n + 1) / n)


def _scan_rect(f, budget, ps_lo, ps_hi, pr_lo, pr_hi, n):
    """Best (ps, pr, value) over a masked rectangular grid."""
    ps_axis = _axis(ps_lo, ps_hi, n)
    pr_axis = _axis(pr_lo, pr_hi, n)
    limit = budget * (1.0 + 1e-12)
    block = max(1, _BLOCK_CELLS // (n + 1))
    best = (np.nan, np.nan, -np.inf)
    for start in range(0, n + 1, block):
        ps = ps_axis[start : start + block][:, None]
        ok = ps + pr_axis[None, :] <= limit
        if not ok.any():
            continue
        vals = np.where(ok, f(ps, pr_axis[None, :]), -np.inf)
        flat = int(np.argmax(vals))
        i, j = divmod(flat, pr_axis.shape[0])
        v = float(vals[i, j])
        if v > best[2]:
            best = (float(ps[i, 0]), float(pr_axis[j]), v)
    return best


def _scan_source_line(f, x_lo, x_hi, slope, n):
    xs = _axis(x_lo, x_hi, n)
    vals = f(xs, slope * xs)
    k = int(np.argmax(vals))
    return (float(xs[k]), float(slope * xs[k]), float(vals[k]))


def _scan_relay_line(f, x_lo, x_hi, slope, n):
    xs = _axis(x_lo, x_hi, n)
    vals = f(slope * xs, xs)
    k = int(np.argmax(vals))
    return (float(slope * xs[k]), float(xs[k]), float(vals[k]))


def grid_search_triangle(inp, n: int = 2000, refine: bool = True):
    """Best (p_s, p_r, value) over {p_s >= ps_min, p_r >= 0, p_s+p_r <= P}.

    Scans the full rectangle-masked grid plus the ridge where the
    decode-and-forward minimum switches sides (the objective is kinked there
    and the optimum usually sits on it). With refine=True each scan gets one
    local pass of the same resolution over a +/-2-cell window.
    """
    g_sr = float(inp.h_sr_sq)
    g_rd = float(inp.h_rd_sq)
    if g_sr <= 0.0 or g_rd <= 0.0:
        raise ValueError("main-link gains must be strictly positive")
    p = float(inp.p_total)
    thr = float(np.exp2(inp.rd) - 1.0)
    ps_min = thr * inp.noise / g_sr
    if ps_min > p:
        raise InfeasibleRate("no in-budget point meets the decoding target")

    f = _objective_fn(inp)
    pr_hi = p - ps_min

    best = _scan_rect(f, p, ps_min, p, 0.0, pr_hi, n)
    if refine:
        w_ps = (p - ps_min) / n
        w_pr = pr_hi / n
        ps0, pr0, _ = best
        ref = _scan_rect(
            f,
            p,
            max(ps_min, ps0 - 2 * w_ps),
            min(p, ps0 + 2 * w_ps),
            max(0.0, pr0 - 2 * w_pr),
            min(pr_hi, pr0 + 2 * w_pr),
            n,
        )
        if ref[2] > best[2]:
            best = ref

    slope = g_sr / g_rd
    ridge_hi = p * g_rd / (g_sr + g_rd)
    if ridge_hi >= ps_min:
        line = _scan_source_line(f, ps_min, ridge_hi, slope, n)
        if refine:
            w = (ridge_hi - ps_min) / n
            ref = _scan_source_line(
                f,
                max(ps_min, line[0] - 2 * w),
                min(ridge_hi, line[0] + 2 * w),
                slope,
                n,
            )
            if ref[2] > line[2]:
                line = ref
        if line[2] > best[2]:
            best = line
    return best


def line_search(inp, line: str = "source", n: int = 2000, refine: bool = True):
    """Best (p_s, p_r, value) along one balanced-link line.

    line="source": p_r = (g_sr/g_rd) p_s with p_s in [ps_min, ps_max];
    line="relay":  p_s = (g_rd/g_sr) p_r with p_r in [pr_min, pr_max].
    Raises InfeasibleRate when the interval is empty.
    """
    g_sr = float(inp.h_sr_sq)
    g_rd = float(inp.h_rd_sq)
    if g_sr <= 0.0 or g_rd <= 0.0:
        raise ValueError("main-link gains must be strictly positive")
    p = float(inp.p_total)
    thr = float(np.exp2(inp.rd) - 1.0)
    f = _objective_fn(inp)

    if line == "source":
        x_lo = thr * inp.noise / g_sr
        x_hi = p * g_rd / (g_sr + g_rd)
        slope = g_sr / g_rd
        scan = _scan_source_line
    elif line == "relay":
        x_lo = thr * inp.noise / g_rd
        x_hi = p * g_sr / (g_sr + g_rd)
        slope = g_rd / g_sr
        scan = _scan_relay_line
    else:
        raise ValueError(f"unknown line {line!r}")

    if x_lo > x_hi:
        raise InfeasibleRate("decoding target unreachable on this line")
    best = scan(f, x_lo, x_hi, slope, n)
    if refine:
        w = (x_hi - x_lo) / n
        x_best = best[0] if line == "source" else best[1]
        ref = scan(f, max(x_lo, x_best - 2 * w), min(x_hi, x_best + 2 * w), slope, n)
        if ref[2] > best[2]:
            best = ref
    return best
