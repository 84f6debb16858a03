"""Exact maximization of g(x) = (theta + phi_n x - tau_n x^2) /
(theta + phi_d x - tau_d x^2) over a closed interval.

The derivative numerator is the quadratic

    q(x) = (tau_d*phi_n - tau_n*phi_d) x^2 + 2 (tau_d - tau_n) theta x
         + (phi_n - phi_d) theta,

so the interior stationary points are its real roots; the maximum over
[lo, hi] is attained at one of those roots or at an endpoint. All entry
points accept scalars or broadcastable arrays and vectorize elementwise.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .exceptions import DegenerateDenominator, InfeasibleInterval

# Relative tolerance for deciding that the leading coefficient or the
# discriminant of q is zero; scaled by the magnitude of what was subtracted.
_ZERO_RTOL = 1e-9

_CASE_LINEAR = 1      # leading coefficient ~ 0, single linear root
_CASE_TWO_ROOTS = 2   # positive discriminant
_CASE_DOUBLE = 3      # discriminant ~ 0
_CASE_NO_ROOT = 4     # negative discriminant (or q constant): endpoints only


@dataclass(frozen=True)
class RatioQuadratic:
    """Coefficients of the ratio; fields are scalars or equal-shape arrays."""

    theta: float
    phi_num: float
    tau_num: float
    phi_den: float
    tau_den: float


def _numerator(rq: RatioQuadratic, x):
    return rq.theta + rq.phi_num * x - rq.tau_num * x * x


def _denominator(rq: RatioQuadratic, x):
    return rq.theta + rq.phi_den * x - rq.tau_den * x * x


def evaluate(rq: RatioQuadratic, x):
    """Value of the ratio at x; the denominator must be strictly positive."""
    den = _denominator(rq, x)
    if np.any(den <= 0.0):
        raise DegenerateDenominator("ratio denominator not strictly positive")
    return _numerator(rq, x) / den


def derivative(rq: RatioQuadratic, x):
    """dg/dx, for validation against finite differences."""
    den = _denominator(rq, x)
    if np.any(den <= 0.0):
        raise DegenerateDenominator("ratio denominator not strictly positive")
    a = rq.tau_den * rq.phi_num - rq.tau_num * rq.phi_den
    b = 2.0 * (rq.tau_den - rq.tau_num) * rq.theta
    c = (rq.phi_num - rq.phi_den) * rq.theta
    return (a * x * x + b * x + c) / (den * den)


def _stationary_candidates(rq: RatioQuadratic):
    """Roots of q with validity masks.

    Returns (xs, valid, case) where xs has a trailing axis of length 3
    (linear root, root pair), valid marks which entries are real stationary
    points, and case carries the dispatch label per element.
    """
    theta = np.asarray(rq.theta, dtype=float)
    a = np.asarray(rq.tau_den * rq.phi_num - rq.tau_num * rq.phi_den, dtype=float)
    b = np.asarray(2.0 * (rq.tau_den - rq.tau_num) * theta, dtype=float)
    c = np.asarray((rq.phi_num - rq.phi_den) * theta, dtype=float)
    a, b, c = np.broadcast_arrays(a, b, c)

    lead_scale = np.maximum(np.abs(rq.tau_den * rq.phi_num), np.abs(rq.tau_num * rq.phi_den))
    lead_zero = np.abs(a) <= _ZERO_RTOL * np.maximum(1.0, lead_scale)

    disc = b * b - 4.0 * a * c
    disc_tol = _ZERO_RTOL * np.maximum(1.0, np.maximum(b * b, np.abs(4.0 * a * c)))
    disc_zero = np.abs(disc) <= disc_tol

    with np.errstate(divide="ignore", invalid="ignore"):
        safe_b = np.where(b != 0.0, b, 1.0)
        x_lin = np.where(lead_zero & (b != 0.0), -c / safe_b, 0.0)
        safe_a = np.where(lead_zero, 1.0, 2.0 * a)
        sq = np.sqrt(np.maximum(disc, 0.0))
        x_hi = np.where(~lead_zero, (-b + sq) / safe_a, 0.0)
        x_lo = np.where(~lead_zero, (-b - sq) / safe_a, 0.0)

    valid_lin = lead_zero & (b != 0.0)
    valid_pair = ~lead_zero & ((disc > disc_tol) | disc_zero)
    # the "double root" collapses the pair to the same point -b/(2a)
    x_hi = np.where(~lead_zero & disc_zero, -b / safe_a, x_hi)
    x_lo = np.where(~lead_zero & disc_zero, x_hi, x_lo)

    case = np.where(
        lead_zero,
        np.where(b != 0.0, _CASE_LINEAR, _CASE_NO_ROOT),
        np.where(disc_zero, _CASE_DOUBLE, np.where(disc > disc_tol, _CASE_TWO_ROOTS, _CASE_NO_ROOT)),
    )
    xs = np.stack([x_lin, x_hi, x_lo], axis=-1)
    valid = np.stack([valid_lin, valid_pair, valid_pair], axis=-1)
    return xs, valid, case


def maximize(rq: RatioQuadratic, lo, hi):
    """Argmax and maximum of the ratio over [lo, hi].

    Ties are broken toward the smaller x. The denominator must be positive
    at every admitted candidate; an empty interval is an error.
    """
    lo = np.asarray(lo, dtype=float)
    hi = np.asarray(hi, dtype=float)
    if np.any(lo > hi):
        raise InfeasibleInterval("search interval is empty (lo > hi)")

    xs_st, valid_st, _ = _stationary_candidates(rq)
    lo_b, hi_b = np.broadcast_arrays(lo, hi)
    shape = np.broadcast_shapes(lo_b.shape, xs_st.shape[:-1])
    lo_b = np.broadcast_to(lo_b, shape)
    hi_b = np.broadcast_to(hi_b, shape)
    ends = np.stack([lo_b, hi_b], axis=-1)
    xs = np.concatenate([ends, np.broadcast_to(xs_st, shape + (3,))], axis=-1)
    valid = np.concatenate(
        [np.ones(shape + (2,), dtype=bool), np.broadcast_to(valid_st, shape + (3,))], axis=-1
    )
    in_range = (xs >= lo_b[..., None]) & (xs <= hi_b[..., None])
    valid = valid & in_range

    num = _numerator(rq, np.moveaxis(xs, -1, 0))
    den = _denominator(rq, np.moveaxis(xs, -1, 0))
    num = np.moveaxis(np.broadcast_to(num, (5,) + shape), 0, -1)
    den = np.moveaxis(np.broadcast_to(den, (5,) + shape), 0, -1)
    ok = valid & (den > 0.0)
    with np.errstate(divide="ignore", invalid="ignore"):
        vals = np.where(ok, num / np.where(ok, den, 1.0), -np.inf)

    vmax = np.max(vals, axis=-1)
    if np.any(~np.isfinite(vmax)):
        raise DegenerateDenominator("ratio denominator not positive at any candidate")
    xs_clean = np.where(ok, xs, np.inf)
    xstar = np.min(np.where(vals == vmax[..., None], xs_clean, np.inf), axis=-1)

    if xstar.ndim == 0:
        return float(xstar), float(vmax)
    return xstar, vmax
