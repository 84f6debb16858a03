"""Relay selection and the comparison schemes, one channel realization at a
time.

Every scheme returns a JrjsSolution. The two optimized schemes pick the relay
maximizing the closed-form objective over the decoding set; the equal-power
and pure-relay baselines use fixed splits; pure jamming and direct
transmission skip the relay entirely and report relay_index=None by
construction. An empty decoding set is an outage: nothing is transmitted and
the rate counts as zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import fcsi_pa, pcsi_pa, rates
from .exceptions import NoNullSpace
from .fcsi_pa import FcsiCandidateInput
from .model import ChannelRealization, PowerAllocation, SystemParams
from .nulljam import build_jamming_vector, lambda_e
from .pcsi_pa import PcsiCandidateInput

SCHEME_FCSI = "FCSI-PA"
SCHEME_PCSI = "PCSI-PA"
SCHEME_EPA_FCSI = "EPA-FCSI"
SCHEME_EPA_PCSI = "EPA-PCSI"
SCHEME_PURE_RELAY_FCSI = "PURE-RELAY-FCSI"
SCHEME_PURE_RELAY_PCSI = "PURE-RELAY-PCSI"
SCHEME_PURE_JAM = "PURE-JAM"
SCHEME_DIRECT = "DIRECT"

SCHEMES = (
    SCHEME_FCSI,
    SCHEME_PCSI,
    SCHEME_EPA_FCSI,
    SCHEME_EPA_PCSI,
    SCHEME_PURE_RELAY_FCSI,
    SCHEME_PURE_RELAY_PCSI,
    SCHEME_PURE_JAM,
    SCHEME_DIRECT,
)


@dataclass(frozen=True)
class JrjsSolution:
    """Outcome of one scheme on one realization.

    relay_index is None for outage and for the relay-less schemes; on outage
    allocation is None as well and the realized rate is zero.
    """

    scheme: str
    relay_index: Optional[int]
    allocation: Optional[PowerAllocation]
    predicted_objective: float
    realized_secrecy_rate: float


def _outage(scheme: str) -> JrjsSolution:
    return JrjsSolution(
        scheme=scheme,
        relay_index=None,
        allocation=None,
        predicted_objective=0.0,
        realized_secrecy_rate=0.0,
    )


def decoding_candidates(re: ChannelRealization, params: SystemParams) -> list[int]:
    """Nodes that can decode at rd under some in-budget split."""
    probe = FcsiCandidateInput(
        h_sr_sq=np.abs(re.h_si) ** 2,
        h_rd_sq=np.abs(re.h_id) ** 2,
        h_se_sq=0.0,
        h_re_sq=0.0,
        lam_e=0.0,
        p_total=params.p_total,
        noise=params.noise,
        rd=params.rd,
    )
    mask = fcsi_pa.feasible(probe)
    return [i for i in range(params.m) if mask[i]]


def _candidate_lambda(re: ChannelRealization, i: int) -> float:
    """Leakage seen by the eavesdropper when every node but i jams."""
    h_d = np.delete(re.h_id, i)
    h_e = np.delete(re.h_ie, i)
    try:
        z = build_jamming_vector(h_d)
    except NoNullSpace:
        return 0.0
    return lambda_e(z, h_e)


def _realized_rate(
    re: ChannelRealization, params: SystemParams, i: int, alloc: PowerAllocation, lam: float
) -> float:
    gains = rates.LinkGains(
        h_sr_sq=float(np.abs(re.h_si[i]) ** 2),
        h_rd_sq=float(np.abs(re.h_id[i]) ** 2),
        h_se_sq=float(np.abs(re.h_se) ** 2),
        h_re_sq=float(np.abs(re.h_ie[i]) ** 2),
    )
    gd = rates.gamma_d(gains, alloc, params.noise)
    ge = rates.gamma_e_full(gains, alloc, params.noise, lam)
    return float(rates.secrecy_rate(gd, ge))


def select_fcsi(re: ChannelRealization, params: SystemParams) -> JrjsSolution:
    """Joint relay choice and power split with full wiretap knowledge."""
    cands = decoding_candidates(re, params)
    if not cands:
        return _outage(SCHEME_FCSI)
    best_i, best_alloc, best_obj, best_lam = -1, None, -np.inf, 0.0
    for i in cands:
        lam = _candidate_lambda(re, i)
        inp = FcsiCandidateInput(
            h_sr_sq=float(np.abs(re.h_si[i]) ** 2),
            h_rd_sq=float(np.abs(re.h_id[i]) ** 2),
            h_se_sq=float(np.abs(re.h_se) ** 2),
            h_re_sq=float(np.abs(re.h_ie[i]) ** 2),
            lam_e=lam,
            p_total=params.p_total,
            noise=params.noise,
            rd=params.rd,
        )
        alloc, obj = fcsi_pa.allocate(inp)
        if obj > best_obj:
            best_i, best_alloc, best_obj, best_lam = i, alloc, obj, lam
    return JrjsSolution(
        scheme=SCHEME_FCSI,
        relay_index=best_i,
        allocation=best_alloc,
        predicted_objective=best_obj,
        realized_secrecy_rate=_realized_rate(re, params, best_i, best_alloc, best_lam),
    )


def select_pcsi(re: ChannelRealization, params: SystemParams) -> JrjsSolution:
    """Relay choice and split from wiretap variances; scored on the truth."""
    cands = decoding_candidates(re, params)
    if not cands:
        return _outage(SCHEME_PCSI)
    best_i, best_alloc, best_obj = -1, None, -np.inf
    for i in cands:
        inp = PcsiCandidateInput(
            h_sr_sq=float(np.abs(re.h_si[i]) ** 2),
            h_rd_sq=float(np.abs(re.h_id[i]) ** 2),
            eps1=params.eps1,
            eps2=params.eps2,
            p_total=params.p_total,
            noise=params.noise,
            rd=params.rd,
        )
        alloc, obj = pcsi_pa.allocate(inp)
        if obj > best_obj:
            best_i, best_alloc, best_obj = i, alloc, obj
    lam = _candidate_lambda(re, best_i)
    return JrjsSolution(
        scheme=SCHEME_PCSI,
        relay_index=best_i,
        allocation=best_alloc,
        predicted_objective=best_obj,
        realized_secrecy_rate=_realized_rate(re, params, best_i, best_alloc, lam),
    )


def _fixed_split_decoders(re: ChannelRealization, params: SystemParams, p_s: float) -> list[int]:
    """Decoding set when the source power is pinned to p_s."""
    thr = (np.exp2(params.rd) - 1.0) * params.noise / p_s
    gains = np.abs(re.h_si) ** 2
    return [i for i in range(params.m) if gains[i] >= thr]


def epa(re: ChannelRealization, params: SystemParams, csi_mode: str) -> JrjsSolution:
    """Equal-power baseline: fixed split (P/2, P/4, P/4), relay by the same
    argmax as the optimized schemes under that split."""
    scheme = SCHEME_EPA_FCSI if csi_mode == "fcsi" else SCHEME_EPA_PCSI
    p = params.p_total
    alloc = PowerAllocation(p / 2.0, p / 4.0, p / 4.0)
    cands = _fixed_split_decoders(re, params, alloc.p_s)
    if not cands:
        return _outage(scheme)
    g_se = float(np.abs(re.h_se) ** 2)
    best_i, best_obj, best_lam = -1, -np.inf, 0.0
    for i in cands:
        gd = min(np.abs(re.h_si[i]) ** 2 * alloc.p_s, np.abs(re.h_id[i]) ** 2 * alloc.p_r) / params.noise
        lam = _candidate_lambda(re, i) if csi_mode == "fcsi" else 0.0
        if csi_mode == "fcsi":
            ge = g_se * alloc.p_s / params.noise + np.abs(re.h_ie[i]) ** 2 * alloc.p_r / (
                params.noise + alloc.p_z * lam
            )
        else:
            ge = params.eps1 * alloc.p_s / params.noise + params.eps2 * alloc.p_r / (
                params.noise + alloc.p_z * params.eps2
            )
        obj = (1.0 + gd) / (1.0 + ge)
        if obj > best_obj:
            best_i, best_obj, best_lam = i, obj, lam
    if csi_mode != "fcsi":
        best_lam = _candidate_lambda(re, best_i)
    return JrjsSolution(
        scheme=scheme,
        relay_index=best_i,
        allocation=alloc,
        predicted_objective=float(best_obj),
        realized_secrecy_rate=_realized_rate(re, params, best_i, alloc, best_lam),
    )


def pure_relay_selection(re: ChannelRealization, params: SystemParams, csi_mode: str) -> JrjsSolution:
    """Relay selection without jamming: split (P/2, P/2, 0)."""
    scheme = SCHEME_PURE_RELAY_FCSI if csi_mode == "fcsi" else SCHEME_PURE_RELAY_PCSI
    p = params.p_total
    alloc = PowerAllocation(p / 2.0, p / 2.0, 0.0)
    cands = _fixed_split_decoders(re, params, alloc.p_s)
    if not cands:
        return _outage(scheme)
    g_se = float(np.abs(re.h_se) ** 2)
    best_i, best_obj = -1, -np.inf
    for i in cands:
        gd = min(np.abs(re.h_si[i]) ** 2, np.abs(re.h_id[i]) ** 2) * alloc.p_s / params.noise
        if csi_mode == "fcsi":
            ge = (g_se + np.abs(re.h_ie[i]) ** 2) * alloc.p_s / params.noise
        else:
            ge = (params.eps1 + params.eps2) * alloc.p_s / params.noise
        obj = (1.0 + gd) / (1.0 + ge)
        if obj > best_obj:
            best_i, best_obj = i, obj
    return JrjsSolution(
        scheme=scheme,
        relay_index=best_i,
        allocation=alloc,
        predicted_objective=float(best_obj),
        realized_secrecy_rate=_realized_rate(re, params, best_i, alloc, 0.0),
    )


def pure_jamming(re: ChannelRealization, params: SystemParams) -> JrjsSolution:
    """Source transmits directly at P/2 while all nodes jam with the other
    half (null-steered toward the destination); single phase, no relay.
    Needs at least three nodes to jam, otherwise the pool stays silent."""
    p = params.p_total
    p_s = p / 2.0
    if params.m >= 3:
        z = build_jamming_vector(re.h_id)
        lam = lambda_e(z, re.h_ie)
        p_z = p / 2.0
    else:
        lam = 0.0
        p_z = 0.0
    gd = float(np.abs(re.h_sd) ** 2) * p_s / params.noise
    ge = float(np.abs(re.h_se) ** 2) * p_s / (params.noise + p_z * lam)
    return JrjsSolution(
        scheme=SCHEME_PURE_JAM,
        relay_index=None,
        allocation=PowerAllocation(p_s, 0.0, p_z),
        predicted_objective=float((1.0 + gd) / (1.0 + ge)),
        realized_secrecy_rate=float(rates.secrecy_rate_single_phase(gd, ge)),
    )


def direct_transmission(re: ChannelRealization, params: SystemParams) -> JrjsSolution:
    """Whole budget on the direct link, single phase, no relay or jamming."""
    p = params.p_total
    gd = float(np.abs(re.h_sd) ** 2) * p / params.noise
    ge = float(np.abs(re.h_se) ** 2) * p / params.noise
    return JrjsSolution(
        scheme=SCHEME_DIRECT,
        relay_index=None,
        allocation=PowerAllocation(p, 0.0, 0.0),
        predicted_objective=float((1.0 + gd) / (1.0 + ge)),
        realized_secrecy_rate=float(rates.secrecy_rate_single_phase(gd, ge)),
    )


def evaluate_scheme(re: ChannelRealization, params: SystemParams, scheme: str) -> JrjsSolution:
    """Dispatch a scheme label to its implementation."""
    if scheme == SCHEME_FCSI:
        return select_fcsi(re, params)
    if scheme == SCHEME_PCSI:
        return select_pcsi(re, params)
    if scheme == SCHEME_EPA_FCSI:
        return epa(re, params, "fcsi")
    if scheme == SCHEME_EPA_PCSI:
        return epa(re, params, "pcsi")
    if scheme == SCHEME_PURE_RELAY_FCSI:
        return pure_relay_selection(re, params, "fcsi")
    if scheme == SCHEME_PURE_RELAY_PCSI:
        return pure_relay_selection(re, params, "pcsi")
    if scheme == SCHEME_PURE_JAM:
        return pure_jamming(re, params)
    if scheme == SCHEME_DIRECT:
        return direct_transmission(re, params)
    raise ValueError(f"unknown scheme {scheme!r}")
