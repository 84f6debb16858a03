"""SNR and secrecy-rate expressions for the two-hop link.

Functions accept scalars or equal-shape numpy arrays and broadcast
elementwise, so the batched Monte-Carlo path and the single-trial path share
one set of formulas.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .model import PowerAllocation


@dataclass(frozen=True)
class LinkGains:
    """Squared channel magnitudes for one relay candidate."""

    h_sr_sq: float  # source -> relay
    h_rd_sq: float  # relay -> destination
    h_se_sq: float  # source -> eavesdropper
    h_re_sq: float  # relay -> eavesdropper


def gamma_d(gains: LinkGains, alloc: PowerAllocation, noise: float):
    """Destination SNR of the decode-and-forward link: the weaker hop rules."""
    return np.minimum(gains.h_sr_sq * alloc.p_s, gains.h_rd_sq * alloc.p_r) / noise


def gamma_e_full(gains: LinkGains, alloc: PowerAllocation, noise: float, lam_e):
    """Eavesdropper SNR accumulated over both phases; the relay phase is
    degraded by the jamming leakage lam_e."""
    return gains.h_se_sq * alloc.p_s / noise + gains.h_re_sq * alloc.p_r / (
        noise + alloc.p_z * lam_e
    )


def gamma_e_partial(eps1, eps2, alloc: PowerAllocation, noise: float):
    """Eavesdropper SNR surrogate when only channel variances are known:
    each wiretap magnitude is replaced by its mean, including the leakage."""
    return eps1 * alloc.p_s / noise + eps2 * alloc.p_r / (noise + alloc.p_z * eps2)


def secrecy_rate(gd, ge):
    """Two-phase secrecy rate in bits/s/Hz, clipped at zero."""
    return np.maximum(0.0, 0.5 * np.log2((1.0 + gd) / (1.0 + ge)))


def secrecy_rate_single_phase(gd, ge):
    """Secrecy rate without the half-duplex factor (single transmission)."""
    return np.maximum(0.0, np.log2((1.0 + gd) / (1.0 + ge)))


def main_rate(gd):
    """Rate delivered to the destination over the two phases."""
    return 0.5 * np.log2(1.0 + gd)
