"""Experiment harness: sweep construction, Monte-Carlo statistics, CSV output.

Each experiment sweeps one variable and emits one CSV row per (sweep point,
scheme). Channel batches are sampled once per network size and shared across
sweep points and schemes, so comparisons ride on common random numbers. The
leakage-approximation diagnostic (ee_diagnostic) is a standalone numerical
study of the mean-field error and follows the same row format with the error
statistic in the mean_secrecy_rate column.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass, field, replace
from typing import Union

import numpy as np

from . import engine, jrjs
from .model import SystemParams, dbm_to_mw, rd_schedule

COLUMNS = [
    "experiment",
    "scheme",
    "m",
    "p_dbm",
    "rd",
    "sweep_var",
    "sweep_value",
    "mean_secrecy_rate",
    "stderr",
    "mean_ps_ratio",
    "mean_pr_ratio",
    "outage_fraction",
    "trials",
    "seed",
]

EXPERIMENTS = ("rd_sweep", "power_sweep", "m_sweep", "power_ratio_sweep", "ee_diagnostic")

_DEFAULTS = {
    "rd_sweep": dict(
        m=(10,), p_dbm=(14.0,), rd=(1.0, 2.0, 3.0, 4.0), schemes=("FCSI-PA", "PCSI-PA")
    ),
    "power_sweep": dict(
        m=(10,),
        p_dbm=tuple(float(p) for p in range(0, 21, 2)),
        rd="auto",
        schemes=jrjs.SCHEMES,
    ),
    "m_sweep": dict(
        m=(3, 6, 10, 15, 20), p_dbm=(14.0,), rd="auto", schemes=("FCSI-PA", "PCSI-PA")
    ),
    "power_ratio_sweep": dict(
        m=(3, 6, 10, 15, 20), p_dbm=(14.0,), rd="auto", schemes=("FCSI-PA", "PCSI-PA")
    ),
    "ee_diagnostic": dict(m=tuple(range(3, 21)), p_dbm=(14.0,), rd="auto", schemes=()),
}


class ConfigError(ValueError):
    """Invalid experiment configuration (maps to CLI exit code 2)."""


@dataclass(frozen=True)
class ExperimentConfig:
    """Fully-resolved description of one experiment run."""

    experiment: str
    trials: int = 100_000
    m: tuple = (10,)
    p_dbm: tuple = (14.0,)
    rd: Union[str, tuple] = "auto"
    schemes: tuple = field(default_factory=lambda: jrjs.SCHEMES)
    seed: int = 1
    out_path: str = "results.csv"
    noise_mw: float = 1.0
    eps1: float = 1.0
    eps2: float = 1.0
    eps_sd: float = 0.05

    def __post_init__(self) -> None:
        if self.experiment not in EXPERIMENTS:
            raise ConfigError(f"unknown experiment {self.experiment!r}; choose from {EXPERIMENTS}")
        if self.trials < 1:
            raise ConfigError(f"trials must be >= 1, got {self.trials}")
        if not self.m or any(int(v) < 1 for v in self.m):
            raise ConfigError(f"m must be a nonempty list of counts >= 1, got {self.m}")
        if not self.p_dbm:
            raise ConfigError("p_dbm range is empty")
        if self.experiment in ("rd_sweep", "power_sweep") and len(self.m) != 1:
            raise ConfigError(f"{self.experiment} takes a single m, got {self.m}")
        if self.experiment != "power_sweep" and len(self.p_dbm) != 1:
            raise ConfigError(f"{self.experiment} takes a single p_dbm, got {self.p_dbm}")
        if self.experiment == "ee_diagnostic":
            if any(int(v) < 2 for v in self.m):
                raise ConfigError("ee_diagnostic needs m >= 2 for a nondegenerate leakage draw")
            return
        bad = [s for s in self.schemes if s not in jrjs.SCHEMES]
        if bad or not self.schemes:
            raise ConfigError(f"invalid scheme labels {bad or self.schemes}; known: {jrjs.SCHEMES}")
        if self.rd == "auto":
            if self.experiment == "rd_sweep":
                raise ConfigError("rd_sweep needs an explicit rd list, not 'auto'")
            out = [p for p in self.p_dbm if p < 0.0 or p > 20.0]
            if out:
                raise ConfigError(
                    f"p_dbm values {out} outside the rd schedule range [0, 20]; pass --rd explicitly"
                )
        else:
            if not isinstance(self.rd, tuple) or not self.rd:
                raise ConfigError(f"rd must be 'auto' or a nonempty tuple, got {self.rd!r}")
            if any(v < 0.0 for v in self.rd):
                raise ConfigError(f"rd values must be nonnegative, got {self.rd}")
            if self.experiment != "rd_sweep" and len(self.rd) != 1:
                raise ConfigError(
                    f"{self.experiment} takes a single rd override, got {len(self.rd)} values"
                )


def build_config(experiment: str, **overrides) -> ExperimentConfig:
    """Config with per-experiment defaults, overridden by explicit values."""
    if experiment not in EXPERIMENTS:
        raise ConfigError(f"unknown experiment {experiment!r}; choose from {EXPERIMENTS}")
    merged = dict(_DEFAULTS[experiment])
    merged.update({k: v for k, v in overrides.items() if v is not None})
    return ExperimentConfig(experiment=experiment, **merged)


def _rd_at(cfg: ExperimentConfig, p_dbm: float) -> float:
    if cfg.rd == "auto":
        return rd_schedule(p_dbm)
    return float(cfg.rd[0])


def _sweep_points(cfg: ExperimentConfig):
    """(m, p_dbm, rd, sweep_var, sweep_value) per sweep point, in emit order."""
    if cfg.experiment == "rd_sweep":
        m, p = int(cfg.m[0]), float(cfg.p_dbm[0])
        return [(m, p, float(rd), "rd", float(rd)) for rd in cfg.rd]
    if cfg.experiment == "power_sweep":
        m = int(cfg.m[0])
        return [(m, float(p), _rd_at(cfg, p), "p_dbm", float(p)) for p in cfg.p_dbm]
    # m_sweep and power_ratio_sweep both walk the node count
    p = float(cfg.p_dbm[0])
    rd = _rd_at(cfg, p)
    return [(int(m), p, rd, "m", int(m)) for m in cfg.m]


def _params(cfg: ExperimentConfig, m: int, p_dbm: float, rd: float) -> SystemParams:
    return SystemParams(
        m=m,
        p_total=dbm_to_mw(p_dbm),
        noise=cfg.noise_mw,
        eps1=cfg.eps1,
        eps2=cfg.eps2,
        eps_sd=cfg.eps_sd,
        rd=rd,
        seed=cfg.seed,
    )


def _stats_row(cfg, scheme, m, p_dbm, rd, sweep_var, sweep_value, res) -> dict:
    rate = res.secrecy_rate
    row = {
        "experiment": cfg.experiment,
        "scheme": scheme,
        "m": m,
        "p_dbm": p_dbm,
        "rd": rd,
        "sweep_var": sweep_var,
        "sweep_value": sweep_value,
        "mean_secrecy_rate": float(np.mean(rate)),
        "stderr": float(np.std(rate, ddof=1) / np.sqrt(rate.size)) if rate.size > 1 else None,
        "mean_ps_ratio": None,
        "mean_pr_ratio": None,
        "outage_fraction": float(np.mean(res.outage)),
        "trials": cfg.trials,
        "seed": cfg.seed,
    }
    if cfg.experiment == "power_ratio_sweep":
        ok = ~res.outage
        if ok.any():
            p_total = dbm_to_mw(p_dbm)
            row["mean_ps_ratio"] = float(np.mean(res.p_s[ok]) / p_total)
            row["mean_pr_ratio"] = float(np.mean(res.p_r[ok]) / p_total)
    return row


def ee_error_terms(eps2: float, lam, p_z, noise: float):
    """Per-draw mean-field error (eps2 - lam) / (noise/p_z + lam), written in
    a form that is exact (zero) at p_z = 0."""
    lam = np.asarray(lam, dtype=float)
    p_z = np.asarray(p_z, dtype=float)
    return (eps2 - lam) * p_z / (noise + lam * p_z)


def _ee_rows(cfg: ExperimentConfig) -> list:
    """Mean-field leakage error versus the spread of the leakage.

    The leakage draw keeps mean eps2 while its dispersion shrinks as the pool
    grows (gamma with shape m-1), and the jamming power is uniform on the
    budget; each row records the sample variance of the leakage and the
    averaged error term.
    """
    p_dbm = float(cfg.p_dbm[0])
    p_total = dbm_to_mw(p_dbm)
    rows = []
    for m in cfg.m:
        m = int(m)
        rng = np.random.default_rng(np.random.SeedSequence((cfg.seed, m)))
        lam = rng.gamma(shape=m - 1, scale=cfg.eps2 / (m - 1), size=cfg.trials)
        p_z = rng.uniform(0.0, p_total, size=cfg.trials)
        terms = ee_error_terms(cfg.eps2, lam, p_z, cfg.noise_mw)
        rows.append(
            {
                "experiment": cfg.experiment,
                "scheme": None,
                "m": m,
                "p_dbm": p_dbm,
                "rd": None,
                "sweep_var": "lambda_e_variance",
                "sweep_value": float(np.var(lam, ddof=1)) if cfg.trials > 1 else None,
                "mean_secrecy_rate": float(np.mean(terms)),
                "stderr": float(np.std(terms, ddof=1) / np.sqrt(cfg.trials))
                if cfg.trials > 1
                else None,
                "mean_ps_ratio": None,
                "mean_pr_ratio": None,
                "outage_fraction": None,
                "trials": cfg.trials,
                "seed": cfg.seed,
            }
        )
    return rows


def run(cfg: ExperimentConfig) -> list:
    """Execute the experiment and return CSV rows as dicts (COLUMNS keys)."""
    if cfg.experiment == "ee_diagnostic":
        return _ee_rows(cfg)
    points = _sweep_points(cfg)
    batches = {}
    rows = []
    for m, p_dbm, rd, sweep_var, sweep_value in points:
        params = _params(cfg, m, p_dbm, rd)
        if m not in batches:
            batches[m] = engine.sample_batch(params, cfg.trials)
        for scheme in cfg.schemes:
            res = engine.run_scheme(batches[m], params, scheme)
            rows.append(_stats_row(cfg, scheme, m, p_dbm, rd, sweep_var, sweep_value, res))
    return rows


def _fmt(v) -> str:
    if v is None:
        return ""
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    if isinstance(v, (float, np.floating)):
        return repr(float(v))
    return str(v)


def write_csv(rows: list, path: str) -> None:
    """Write rows in the fixed schema; UTF-8, LF, empty string for missing."""
    with open(path, "w", newline="", encoding="utf-8") as f:
        w = csv.writer(f, lineterminator="\n")
        w.writerow(COLUMNS)
        for row in rows:
            w.writerow([_fmt(row[c]) for c in COLUMNS])


def run_to_csv(cfg: ExperimentConfig) -> int:
    """Run the experiment and write its CSV; returns the row count."""
    rows = run(cfg)
    write_csv(rows, cfg.out_path)
    return len(rows)
