"""Closed-form power allocation when only wiretap channel variances are known.

Same two-line reduction as the full-knowledge allocator; every wiretap
magnitude in the coefficients is replaced by its mean (eps1 for the source
hop, eps2 for both the relay hop and the jamming leakage). The expressions
below are kept textually parallel to fcsi_pa so that substituting
eps1 -> |h_se|^2 and eps2 -> (|h_re|^2, lam_e) reproduces its coefficients
bit for bit.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import ratmax
from .exceptions import InfeasibleRate
from .fcsi_pa import _LAM_NEGLIGIBLE, bounds, feasible  # noqa: F401  (shared limits)
from .model import PowerAllocation
from .ratmax import RatioQuadratic


@dataclass(frozen=True)
class PcsiCandidateInput:
    """Gains and budget for one relay candidate with wiretap variances only."""

    h_sr_sq: float
    h_rd_sq: float
    eps1: float
    eps2: float
    p_total: float
    noise: float
    rd: float


def _source_line(inp, lam) -> RatioQuadratic:
    """Ratio coefficients along p_r = (g_sr/g_rd) p_s, parameterized by p_s."""
    g_sr, g_rd = inp.h_sr_sq, inp.h_rd_sq
    noise = inp.noise
    alpha = g_sr / g_rd + 1.0
    beta = g_sr * inp.eps2 / g_rd
    mu = inp.p_total * lam + noise
    return RatioQuadratic(
        theta=mu * noise,
        phi_num=mu * g_sr - alpha * noise * lam,
        tau_num=alpha * lam * g_sr,
        phi_den=mu * inp.eps1 - alpha * noise * lam + beta * noise,
        tau_den=alpha * lam * inp.eps1,
    )


def _relay_line(inp, lam) -> RatioQuadratic:
    """Ratio coefficients along p_s = (g_rd/g_sr) p_r, parameterized by p_r."""
    g_sr, g_rd = inp.h_sr_sq, inp.h_rd_sq
    noise = inp.noise
    alpha = g_rd / g_sr + 1.0
    beta = g_rd * inp.eps1 / g_sr
    mu = inp.p_total * lam + noise
    return RatioQuadratic(
        theta=mu * noise,
        phi_num=mu * g_rd - alpha * noise * lam,
        tau_num=alpha * lam * g_rd,
        phi_den=mu * beta - alpha * noise * lam + inp.eps2 * noise,
        tau_den=alpha * beta * lam,
    )


def objective(inp, p_s, p_r):
    """Mean-field selection objective: wiretap magnitudes at their means."""
    p_z = np.maximum(inp.p_total - p_s - p_r, 0.0)
    gd = np.minimum(inp.h_sr_sq * p_s, inp.h_rd_sq * p_r) / inp.noise
    ge = inp.eps1 * p_s / inp.noise + inp.eps2 * p_r / (inp.noise + p_z * inp.eps2)
    return (1.0 + gd) / (1.0 + ge)


def allocate(inp):
    """Best closed-form split (PowerAllocation, objective value) under the
    mean-field objective. Raises InfeasibleRate when the target is out of
    reach; the objective value is the surrogate, not the realized one."""
    ps_min, ps_max, pr_min, pr_max = bounds(inp)
    if np.any(ps_min > ps_max):
        raise InfeasibleRate("decoding target unreachable within the power budget")

    lam = np.asarray(inp.eps2, dtype=float)
    lam = np.where(lam < _LAM_NEGLIGIBLE * inp.noise / inp.p_total, 0.0, lam)

    x_a, _ = ratmax.maximize(_source_line(inp, lam), ps_min, ps_max)
    x_b, _ = ratmax.maximize(_relay_line(inp, lam), pr_min, pr_max)

    ps_a = np.asarray(x_a, dtype=float)
    pr_a = (inp.h_sr_sq / inp.h_rd_sq) * ps_a
    pr_b = np.asarray(x_b, dtype=float)
    ps_b = (inp.h_rd_sq / inp.h_sr_sq) * pr_b

    f_a = objective(inp, ps_a, pr_a)
    f_b = objective(inp, ps_b, pr_b)
    pick_a = f_a >= f_b
    p_s = np.where(pick_a, ps_a, ps_b)
    p_r = np.where(pick_a, pr_a, pr_b)
    value = np.where(pick_a, f_a, f_b)
    p_z = np.maximum(inp.p_total - p_s - p_r, 0.0)

    if value.ndim == 0:
        return PowerAllocation(float(p_s), float(p_r), float(p_z)), float(value)
    return PowerAllocation(p_s, p_r, p_z), value
