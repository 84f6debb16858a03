"""System parameters, channel sampling, and power bookkeeping.

All powers are handled internally in milliwatts; dBm appears only at the
CLI/CSV boundary.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


def dbm_to_mw(p_dbm: float) -> float:
    """Convert a power level from dBm to milliwatts."""
    return float(10.0 ** (np.asarray(p_dbm, dtype=float) / 10.0))


def rd_schedule(p_dbm: float) -> float:
    """Target main-link rate used at a given total-power level (bits/s/Hz).

    Piecewise-constant on [0, 20] dBm with right-closed pieces; values
    outside that range are a configuration error.
    """
    p = float(p_dbm)
    if p < 0.0 or p > 20.0:
        raise ValueError(f"total power {p} dBm outside the scheduled range [0, 20]")
    if p <= 3.0:
        return 0.5
    if p <= 6.0:
        return 1.0
    if p <= 10.0:
        return 2.0
    if p <= 15.0:
        return 3.0
    return 4.0


@dataclass(frozen=True)
class SystemParams:
    """Static configuration of one simulated network.

    m       -- number of intermediate nodes
    p_total -- total power budget, mW
    noise   -- receiver noise power, mW (same at destination and eavesdropper)
    eps1    -- variance of the source->eavesdropper coefficient
    eps2    -- variance of each node->eavesdropper coefficient
    eps_sd  -- variance of the direct source->destination coefficient
    rd      -- decoding-rate target for the relay hop, bits/s/Hz
    seed    -- base seed for per-trial generators
    """

    m: int
    p_total: float
    noise: float
    eps1: float
    eps2: float
    eps_sd: float
    rd: float
    seed: int

    def __post_init__(self) -> None:
        if self.m < 1:
            raise ValueError(f"m must be >= 1, got {self.m}")
        if not self.p_total > 0.0:
            raise ValueError(f"p_total must be positive, got {self.p_total}")
        if not self.noise > 0.0:
            raise ValueError(f"noise must be positive, got {self.noise}")
        for name in ("eps1", "eps2", "eps_sd"):
            if getattr(self, name) < 0.0:
                raise ValueError(f"{name} must be nonnegative")
        if self.rd < 0.0:
            raise ValueError(f"rd must be nonnegative, got {self.rd}")


@dataclass(frozen=True)
class ChannelRealization:
    """One fading draw: node links as length-m arrays, scalars for the rest."""

    h_si: np.ndarray  # source -> node i
    h_id: np.ndarray  # node i -> destination
    h_ie: np.ndarray  # node i -> eavesdropper
    h_se: complex     # source -> eavesdropper
    h_sd: complex     # source -> destination


@dataclass(frozen=True)
class PowerAllocation:
    """Transmit powers (mW) for source, relay, and the jammer pool."""

    p_s: float
    p_r: float
    p_z: float

    @property
    def total(self) -> float:
        return self.p_s + self.p_r + self.p_z


def trial_rng(seed: int, trial_index: int) -> np.random.Generator:
    """Generator for one trial, derived from (seed, trial) so trials are
    independent and insensitive to evaluation order."""
    return np.random.default_rng(np.random.SeedSequence((seed, trial_index)))


def _complex_normal(rng: np.random.Generator, variance: float, n: int) -> np.ndarray:
    """n circularly-symmetric complex Gaussian draws with the given variance."""
    pairs = rng.normal(0.0, np.sqrt(variance / 2.0) if variance > 0 else 0.0, (n, 2))
    return pairs.view(np.complex128).ravel()


def sample_realization(params: SystemParams, rng: np.random.Generator) -> ChannelRealization:
    """Draw one channel realization.

    Draw order is fixed (h_si, h_id, h_ie, h_se, h_sd) so a given generator
    state always produces the same realization.
    """
    m = params.m
    h_si = _complex_normal(rng, 1.0, m)
    h_id = _complex_normal(rng, 1.0, m)
    h_ie = _complex_normal(rng, params.eps2, m)
    h_se = complex(_complex_normal(rng, params.eps1, 1)[0])
    h_sd = complex(_complex_normal(rng, params.eps_sd, 1)[0])
    return ChannelRealization(h_si=h_si, h_id=h_id, h_ie=h_ie, h_se=h_se, h_sd=h_sd)
