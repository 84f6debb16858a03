"""Secrecy-rate simulation for decode-and-forward relay selection with
null-steered cooperative jamming, under full or statistical knowledge of the
wiretap channels."""

from .exceptions import (
    DegenerateChannel,
    DegenerateDenominator,
    InfeasibleInterval,
    InfeasibleRate,
    NoNullSpace,
)
from .fcsi_pa import FcsiCandidateInput
from .harness import COLUMNS, EXPERIMENTS, ConfigError, ExperimentConfig, build_config, run, run_to_csv, write_csv
from .jrjs import SCHEMES, JrjsSolution, evaluate_scheme
from .model import (
    ChannelRealization,
    PowerAllocation,
    SystemParams,
    dbm_to_mw,
    rd_schedule,
    sample_realization,
    trial_rng,
)
from .nulljam import JammingVector, build_jamming_vector, lambda_e
from .pcsi_pa import PcsiCandidateInput

__version__ = "0.1.0"

__all__ = [
    "COLUMNS",
    "EXPERIMENTS",
    "SCHEMES",
    "ChannelRealization",
    "ConfigError",
    "DegenerateChannel",
    "DegenerateDenominator",
    "ExperimentConfig",
    "FcsiCandidateInput",
    "InfeasibleInterval",
    "InfeasibleRate",
    "JammingVector",
    "JrjsSolution",
    "NoNullSpace",
    "PcsiCandidateInput",
    "PowerAllocation",
    "SystemParams",
    "build_config",
    "build_jamming_vector",
    "dbm_to_mw",
    "evaluate_scheme",
    "lambda_e",
    "rd_schedule",
    "run",
    "run_to_csv",
    "sample_realization",
    "trial_rng",
    "write_csv",
    "__version__",
]
