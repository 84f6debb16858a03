"""Closed-form power allocation with full channel knowledge.

The two-variable problem (source power, relay power, remainder to the jammer
pool) is solved on the two boundary lines where the decode-and-forward
minimum switches sides: on each line the objective collapses to a ratio of
quadratics that ratmax maximizes exactly, and the better of the two
candidates wins. All functions accept scalars or equal-shape arrays.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import ratmax
from .exceptions import InfeasibleRate
from .model import PowerAllocation
from .ratmax import RatioQuadratic

# Below this leakage the jamming term is negligible against receiver noise at
# any admissible power, and the quadratic terms of the line ratios vanish;
# clamping to zero keeps the root dispatch exact instead of ill-conditioned.
_LAM_NEGLIGIBLE = 1e-12


@dataclass(frozen=True)
class FcsiCandidateInput:
    """Gains and budget for one relay candidate with full wiretap knowledge."""

    h_sr_sq: float
    h_rd_sq: float
    h_se_sq: float
    h_re_sq: float
    lam_e: float
    p_total: float
    noise: float
    rd: float


def bounds(inp):
    """Power-split limits (ps_min, ps_max, pr_min, pr_max).

    ps_min / pr_min are the smallest hop powers meeting the decoding target;
    ps_max / pr_max are the budget limits of the two balanced lines.
    """
    g_sr = np.asarray(inp.h_sr_sq, dtype=float)
    g_rd = np.asarray(inp.h_rd_sq, dtype=float)
    if np.any(g_sr <= 0.0) or np.any(g_rd <= 0.0):
        raise ValueError("main-link gains must be strictly positive")
    thr = np.exp2(inp.rd) - 1.0
    ps_min = thr * inp.noise / g_sr
    pr_min = thr * inp.noise / g_rd
    ps_max = inp.p_total * g_rd / (g_sr + g_rd)
    pr_max = inp.p_total * g_sr / (g_sr + g_rd)
    return ps_min, ps_max, pr_min, pr_max


def feasible(inp):
    """Whether some in-budget split meets the decoding target.

    Uses the same float comparison as allocate (ps_min <= ps_max) so the two
    never disagree on rounding-marginal instances.
    """
    g_sr = np.asarray(inp.h_sr_sq, dtype=float)
    g_rd = np.asarray(inp.h_rd_sq, dtype=float)
    pos = (g_sr > 0.0) & (g_rd > 0.0)
    thr = np.exp2(inp.rd) - 1.0
    safe_sr = np.where(pos, g_sr, 1.0)
    safe_sum = np.where(pos, g_sr + g_rd, 1.0)
    ps_min = thr * inp.noise / safe_sr
    ps_max = inp.p_total * g_rd / safe_sum
    ok = np.where(pos, ps_min <= ps_max, inp.rd <= 0.0)
    if ok.ndim == 0:
        return bool(ok)
    return ok


def _source_line(inp, lam) -> RatioQuadratic:
    """Ratio coefficients along p_r = (g_sr/g_rd) p_s, parameterized by p_s."""
    g_sr, g_rd, g_se, g_re = inp.h_sr_sq, inp.h_rd_sq, inp.h_se_sq, inp.h_re_sq
    noise = inp.noise
    alpha = g_sr / g_rd + 1.0
    beta = g_sr * g_re / g_rd
    mu = inp.p_total * lam + noise
    return RatioQuadratic(
        theta=mu * noise,
        phi_num=mu * g_sr - alpha * noise * lam,
        tau_num=alpha * lam * g_sr,
        phi_den=mu * g_se - alpha * noise * lam + beta * noise,
        tau_den=alpha * lam * g_se,
    )


def _relay_line(inp, lam) -> RatioQuadratic:
    """Ratio coefficients along p_s = (g_rd/g_sr) p_r, parameterized by p_r."""
    g_sr, g_rd, g_se, g_re = inp.h_sr_sq, inp.h_rd_sq, inp.h_se_sq, inp.h_re_sq
    noise = inp.noise
    alpha = g_rd / g_sr + 1.0
    beta = g_rd * g_se / g_sr
    mu = inp.p_total * lam + noise
    return RatioQuadratic(
        theta=mu * noise,
        phi_num=mu * g_rd - alpha * noise * lam,
        tau_num=alpha * lam * g_rd,
        phi_den=mu * beta - alpha * noise * lam + g_re * noise,
        tau_den=alpha * beta * lam,
    )


def objective(inp, p_s, p_r):
    """Raw selection objective (1 + destination SNR) / (1 + eavesdropper SNR)
    with the jammer pool absorbing the unspent budget."""
    p_z = np.maximum(inp.p_total - p_s - p_r, 0.0)
    gd = np.minimum(inp.h_sr_sq * p_s, inp.h_rd_sq * p_r) / inp.noise
    ge = inp.h_se_sq * p_s / inp.noise + inp.h_re_sq * p_r / (inp.noise + p_z * inp.lam_e)
    return (1.0 + gd) / (1.0 + ge)


def allocate(inp):
    """Best closed-form split (PowerAllocation, objective value).

    Raises InfeasibleRate when no split can meet the decoding target.
    """
    ps_min, ps_max, pr_min, pr_max = bounds(inp)
    if np.any(ps_min > ps_max):
        raise InfeasibleRate("decoding target unreachable within the power budget")

    lam = np.asarray(inp.lam_e, dtype=float)
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
