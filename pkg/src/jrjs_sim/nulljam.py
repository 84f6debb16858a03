"""Null-steering jamming weights.

The jammer pool transmits a common noise symbol through a unit weight vector
z chosen orthogonal to the jammer->destination channel, so the destination
hears none of it while the eavesdropper keeps a residual leakage |h_e^H z|^2.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .exceptions import DegenerateChannel, NoNullSpace


@dataclass(frozen=True)
class JammingVector:
    """Unit-norm weights, one entry per jammer."""

    z: np.ndarray


def _null_steering_weights(h_d: np.ndarray) -> np.ndarray:
    """Rows of h_d (shape (t, k), k >= 2) -> rows of unit weights orthogonal
    to the corresponding row of h_d.

    The weight row is the second column of the elementary reflector that maps
    h_d onto the first coordinate axis: deterministic, unit norm by unitarity,
    and orthogonal to h_d because the reflector is Hermitian.
    """
    norm = np.sqrt(np.sum(np.abs(h_d) ** 2, axis=1))
    first = h_d[:, 0]
    mag = np.abs(first)
    phase = np.where(mag > 0.0, first / np.where(mag > 0.0, mag, 1.0), 1.0 + 0.0j)
    v = h_d.astype(np.complex128, copy=True)
    v[:, 0] += phase * norm
    vsq = np.sum(np.abs(v) ** 2, axis=1)  # = 2*norm*(norm+|first|) > 0
    coef = 2.0 * np.conj(v[:, 1]) / vsq
    z = -coef[:, None] * v
    z[:, 1] += 1.0
    return z


def build_jamming_vector(h_d: np.ndarray) -> JammingVector:
    """Deterministic unit weight vector orthogonal to h_d.

    Requires at least two jammers and a nonzero channel; the same h_d always
    yields the same weights.
    """
    h_d = np.asarray(h_d, dtype=np.complex128)
    if h_d.ndim != 1 or h_d.shape[0] < 2:
        raise NoNullSpace(
            f"need at least 2 jammers for a null-steered vector, got shape {h_d.shape}"
        )
    if not np.all(np.isfinite(h_d.view(np.float64))):
        raise DegenerateChannel("jammer->destination channel contains non-finite entries")
    if np.all(h_d == 0):
        raise DegenerateChannel("jammer->destination channel is identically zero")
    return JammingVector(z=_null_steering_weights(h_d[None, :])[0])


def _leakage(z: np.ndarray, h_e: np.ndarray) -> np.ndarray:
    """Row-wise |h_e^H z|^2 for matching (t, k) arrays."""
    inner = np.sum(np.conj(h_e) * z, axis=1)
    return np.abs(inner) ** 2


def lambda_e(z: JammingVector, h_e: np.ndarray) -> float:
    """Jamming power fraction leaking onto the eavesdropper channel."""
    h_e = np.asarray(h_e, dtype=np.complex128)
    if h_e.shape != z.z.shape:
        raise ValueError(f"shape mismatch: weights {z.z.shape}, channel {h_e.shape}")
    return float(_leakage(z.z[None, :], h_e[None, :])[0])
