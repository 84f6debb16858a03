"""Batched Monte-Carlo evaluation of the schemes.

The per-realization functions in jrjs.py are the reference semantics; this
module reproduces them trial-for-trial (same substreams, same closed-form
allocators) but vectorized over trials, which is what the experiment harness
actually runs. A Batch holds channel draws only (nothing in it depends on
the power budget or the rate target), so one batch per network size serves a
whole sweep, and every scheme at every sweep point sees the same randomness.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import fcsi_pa, jrjs, pcsi_pa, rates
from .fcsi_pa import FcsiCandidateInput
from .model import PowerAllocation, SystemParams, sample_realization, trial_rng
from .nulljam import _leakage, _null_steering_weights
from .pcsi_pa import PcsiCandidateInput

# cap on trials*candidates cells handled per closed-form allocator call;
# bounds the transient arrays inside ratmax to a few tens of MB
_ALLOC_BLOCK_CELLS = 500_000


@dataclass(frozen=True)
class Batch:
    """Channel draws for a block of trials, plus precomputed leakages."""

    h_si: np.ndarray     # (trials, m) source -> node
    h_id: np.ndarray     # (trials, m) node -> destination
    h_ie: np.ndarray     # (trials, m) node -> eavesdropper
    h_se: np.ndarray     # (trials,)   source -> eavesdropper
    h_sd: np.ndarray     # (trials,)   source -> destination
    lam: np.ndarray      # (trials, m) leakage when node i relays and the rest jam
    lam_all: np.ndarray  # (trials,)   leakage when every node jams

    @property
    def trials(self) -> int:
        return self.h_si.shape[0]

    @property
    def m(self) -> int:
        return self.h_si.shape[1]


@dataclass(frozen=True)
class SchemeResult:
    """Per-trial outcomes of one scheme on one batch."""

    scheme: str
    secrecy_rate: np.ndarray  # (trials,) zero on outage trials
    p_s: np.ndarray           # (trials,) nan on outage trials
    p_r: np.ndarray           # (trials,) nan on outage trials
    outage: np.ndarray        # (trials,) bool


def sample_batch(params: SystemParams, trials: int) -> Batch:
    """Draw `trials` realizations from the per-trial substreams and stack
    them, precomputing the jamming leakage for every relay choice."""
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    draws = [sample_realization(params, trial_rng(params.seed, t)) for t in range(trials)]
    h_si = np.stack([d.h_si for d in draws])
    h_id = np.stack([d.h_id for d in draws])
    h_ie = np.stack([d.h_ie for d in draws])
    h_se = np.array([d.h_se for d in draws], dtype=np.complex128)
    h_sd = np.array([d.h_sd for d in draws], dtype=np.complex128)

    m = params.m
    lam = np.zeros((trials, m))
    lam_all = np.zeros(trials)
    if m >= 3:
        for i in range(m):
            z = _null_steering_weights(np.delete(h_id, i, axis=1))
            lam[:, i] = _leakage(z, np.delete(h_ie, i, axis=1))
        lam_all = _leakage(_null_steering_weights(h_id), h_ie)
    return Batch(h_si=h_si, h_id=h_id, h_ie=h_ie, h_se=h_se, h_sd=h_sd, lam=lam, lam_all=lam_all)


def _feasible_mask(g_si: np.ndarray, g_id: np.ndarray, params: SystemParams) -> np.ndarray:
    probe = FcsiCandidateInput(
        h_sr_sq=g_si,
        h_rd_sq=g_id,
        h_se_sq=0.0,
        h_re_sq=0.0,
        lam_e=0.0,
        p_total=params.p_total,
        noise=params.noise,
        rd=params.rd,
    )
    return fcsi_pa.feasible(probe)


def _dummy_gain(params: SystemParams) -> float:
    # a gain at which the decoding target is comfortably feasible; infeasible
    # candidates are swapped to it so the vectorized allocator never sees an
    # infeasible element, then masked out of the argmax
    thr = float(np.exp2(params.rd) - 1.0)
    return max(4.0 * thr * params.noise / params.p_total, 1.0)


def _gather(a: np.ndarray, sel: np.ndarray) -> np.ndarray:
    return a[np.arange(a.shape[0]), sel]


def _finish(
    scheme: str,
    rate,
    ps,
    pr,
    outage: np.ndarray,
    trials: int,
) -> SchemeResult:
    rate = np.where(outage, 0.0, np.broadcast_to(np.asarray(rate, dtype=float), (trials,)))
    ps = np.where(outage, np.nan, np.broadcast_to(np.asarray(ps, dtype=float), (trials,)))
    pr = np.where(outage, np.nan, np.broadcast_to(np.asarray(pr, dtype=float), (trials,)))
    return SchemeResult(scheme=scheme, secrecy_rate=rate, p_s=ps, p_r=pr, outage=outage)


def _run_optimized(batch: Batch, params: SystemParams, scheme: str) -> SchemeResult:
    """FCSI-PA / PCSI-PA: closed-form allocation per candidate, argmax."""
    g_si = np.abs(batch.h_si) ** 2
    g_id = np.abs(batch.h_id) ** 2
    g_ie = np.abs(batch.h_ie) ** 2
    g_se = np.abs(batch.h_se) ** 2
    feas = _feasible_mask(g_si, g_id, params)
    outage = ~feas.any(axis=1)
    g_dummy = _dummy_gain(params)
    g_sr = np.where(feas, g_si, g_dummy)
    g_rd = np.where(feas, g_id, g_dummy)

    trials, m = batch.trials, batch.m
    sel = np.zeros(trials, dtype=np.intp)
    ps_sel = np.zeros(trials)
    pr_sel = np.zeros(trials)
    pz_sel = np.zeros(trials)
    block = max(1, _ALLOC_BLOCK_CELLS // m)
    for start in range(0, trials, block):
        s = slice(start, min(start + block, trials))
        if scheme == jrjs.SCHEME_FCSI:
            inp = FcsiCandidateInput(
                h_sr_sq=g_sr[s],
                h_rd_sq=g_rd[s],
                h_se_sq=g_se[s][:, None],
                h_re_sq=g_ie[s],
                lam_e=batch.lam[s],
                p_total=params.p_total,
                noise=params.noise,
                rd=params.rd,
            )
            alloc, value = fcsi_pa.allocate(inp)
        else:
            inp = PcsiCandidateInput(
                h_sr_sq=g_sr[s],
                h_rd_sq=g_rd[s],
                eps1=params.eps1,
                eps2=params.eps2,
                p_total=params.p_total,
                noise=params.noise,
                rd=params.rd,
            )
            alloc, value = pcsi_pa.allocate(inp)
        obj = np.where(feas[s], value, -np.inf)
        k = np.argmax(obj, axis=1)
        sel[s] = k
        ps_sel[s] = _gather(np.broadcast_to(alloc.p_s, obj.shape), k)
        pr_sel[s] = _gather(np.broadcast_to(alloc.p_r, obj.shape), k)
        pz_sel[s] = _gather(np.broadcast_to(alloc.p_z, obj.shape), k)

    gains = rates.LinkGains(
        h_sr_sq=_gather(g_si, sel),
        h_rd_sq=_gather(g_id, sel),
        h_se_sq=g_se,
        h_re_sq=_gather(g_ie, sel),
    )
    alloc_sel = PowerAllocation(ps_sel, pr_sel, pz_sel)
    gd = rates.gamma_d(gains, alloc_sel, params.noise)
    ge = rates.gamma_e_full(gains, alloc_sel, params.noise, _gather(batch.lam, sel))
    rate = rates.secrecy_rate(gd, ge)
    return _finish(scheme, rate, ps_sel, pr_sel, outage, trials)


def _run_epa(batch: Batch, params: SystemParams, scheme: str) -> SchemeResult:
    p = params.p_total
    alloc = PowerAllocation(p / 2.0, p / 4.0, p / 4.0)
    g_si = np.abs(batch.h_si) ** 2
    g_id = np.abs(batch.h_id) ** 2
    g_ie = np.abs(batch.h_ie) ** 2
    g_se = np.abs(batch.h_se) ** 2
    thr = (np.exp2(params.rd) - 1.0) * params.noise / alloc.p_s
    feas = g_si >= thr
    outage = ~feas.any(axis=1)

    gd = np.minimum(g_si * alloc.p_s, g_id * alloc.p_r) / params.noise
    if scheme == jrjs.SCHEME_EPA_FCSI:
        ge = g_se[:, None] * alloc.p_s / params.noise + g_ie * alloc.p_r / (
            params.noise + alloc.p_z * batch.lam
        )
    else:
        ge = params.eps1 * alloc.p_s / params.noise + params.eps2 * alloc.p_r / (
            params.noise + alloc.p_z * params.eps2
        )
    obj = np.where(feas, (1.0 + gd) / (1.0 + ge), -np.inf)
    sel = np.argmax(obj, axis=1)

    gains = rates.LinkGains(
        h_sr_sq=_gather(g_si, sel),
        h_rd_sq=_gather(g_id, sel),
        h_se_sq=g_se,
        h_re_sq=_gather(g_ie, sel),
    )
    gd_sel = rates.gamma_d(gains, alloc, params.noise)
    ge_sel = rates.gamma_e_full(gains, alloc, params.noise, _gather(batch.lam, sel))
    rate = rates.secrecy_rate(gd_sel, ge_sel)
    return _finish(scheme, rate, alloc.p_s, alloc.p_r, outage, batch.trials)


def _run_pure_relay(batch: Batch, params: SystemParams, scheme: str) -> SchemeResult:
    p = params.p_total
    alloc = PowerAllocation(p / 2.0, p / 2.0, 0.0)
    g_si = np.abs(batch.h_si) ** 2
    g_id = np.abs(batch.h_id) ** 2
    g_ie = np.abs(batch.h_ie) ** 2
    g_se = np.abs(batch.h_se) ** 2
    thr = (np.exp2(params.rd) - 1.0) * params.noise / alloc.p_s
    feas = g_si >= thr
    outage = ~feas.any(axis=1)

    gd = np.minimum(g_si, g_id) * alloc.p_s / params.noise
    if scheme == jrjs.SCHEME_PURE_RELAY_FCSI:
        ge = (g_se[:, None] + g_ie) * alloc.p_s / params.noise
    else:
        ge = (params.eps1 + params.eps2) * alloc.p_s / params.noise
    obj = np.where(feas, (1.0 + gd) / (1.0 + ge), -np.inf)
    sel = np.argmax(obj, axis=1)

    gains = rates.LinkGains(
        h_sr_sq=_gather(g_si, sel),
        h_rd_sq=_gather(g_id, sel),
        h_se_sq=g_se,
        h_re_sq=_gather(g_ie, sel),
    )
    gd_sel = rates.gamma_d(gains, alloc, params.noise)
    ge_sel = rates.gamma_e_full(gains, alloc, params.noise, 0.0)
    rate = rates.secrecy_rate(gd_sel, ge_sel)
    return _finish(scheme, rate, alloc.p_s, alloc.p_r, outage, batch.trials)


def _run_pure_jam(batch: Batch, params: SystemParams) -> SchemeResult:
    p = params.p_total
    p_s = p / 2.0
    if params.m >= 3:
        p_z = p / 2.0
        lam = batch.lam_all
    else:
        p_z = 0.0
        lam = np.zeros(batch.trials)
    gd = np.abs(batch.h_sd) ** 2 * p_s / params.noise
    ge = np.abs(batch.h_se) ** 2 * p_s / (params.noise + p_z * lam)
    rate = rates.secrecy_rate_single_phase(gd, ge)
    outage = np.zeros(batch.trials, dtype=bool)
    return _finish(jrjs.SCHEME_PURE_JAM, rate, p_s, 0.0, outage, batch.trials)


def _run_direct(batch: Batch, params: SystemParams) -> SchemeResult:
    p = params.p_total
    gd = np.abs(batch.h_sd) ** 2 * p / params.noise
    ge = np.abs(batch.h_se) ** 2 * p / params.noise
    rate = rates.secrecy_rate_single_phase(gd, ge)
    outage = np.zeros(batch.trials, dtype=bool)
    return _finish(jrjs.SCHEME_DIRECT, rate, p, 0.0, outage, batch.trials)


def run_scheme(batch: Batch, params: SystemParams, scheme: str) -> SchemeResult:
    """Evaluate one scheme on every trial of the batch."""
    if params.m != batch.m:
        raise ValueError(f"params.m={params.m} does not match batch m={batch.m}")
    if scheme in (jrjs.SCHEME_FCSI, jrjs.SCHEME_PCSI):
        return _run_optimized(batch, params, scheme)
    if scheme in (jrjs.SCHEME_EPA_FCSI, jrjs.SCHEME_EPA_PCSI):
        return _run_epa(batch, params, scheme)
    if scheme in (jrjs.SCHEME_PURE_RELAY_FCSI, jrjs.SCHEME_PURE_RELAY_PCSI):
        return _run_pure_relay(batch, params, scheme)
    if scheme == jrjs.SCHEME_PURE_JAM:
        return _run_pure_jam(batch, params)
    if scheme == jrjs.SCHEME_DIRECT:
        return _run_direct(batch, params)
    raise ValueError(f"unknown scheme {scheme!r}")
