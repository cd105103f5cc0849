"""Odds-transformed polynomial-exponential lifetime distributions.

A generator density of the form h(lam) * sum_k a_k t^k e^(-lam t) on t > 0
is pushed through the odds function V = G/(1-G) of a baseline distribution
G, giving a lifetime model F(x) = R(V(x)).  The package evaluates these
models (density, distribution, hazard, quantiles, moments, entropies,
reliability and residual-life functionals), samples from them, fits them by
maximum likelihood, and runs the Monte Carlo bias/MSE studies and dataset
refits used to validate all of the above.
"""

from .baselines import (
    BASELINE_KINDS,
    Baseline,
    BurrBaseline,
    ExponentialBaseline,
    ParetoBaseline,
    UniformBaseline,
    make_baseline,
    parse_baseline,
)
from .closedforms import OleParams, OlpParams
from .datasets import DATASET_NAMES, Dataset, load_dataset, read_values
from .estimation import (
    FitConfig,
    FitResult,
    ModelSpec,
    fit_mle,
    information_criteria,
    log_likelihood,
    score,
)
from .family import (
    ConvergenceError,
    DivergenceError,
    MassUnderflow,
    OddsDistribution,
    SeriesTruncation,
    SeriesTruncationError,
)
from .generator import PRESETS, PolyExpGenerator, from_preset, preset_coefficients
from .simulation import (
    SimConfig,
    StudyCell,
    StudyReport,
    StudyRow,
    TABLE_IDS,
    run_cell,
    run_table,
)

__version__ = "0.1.0"

__all__ = [
    "BASELINE_KINDS",
    "Baseline",
    "BurrBaseline",
    "ConvergenceError",
    "DATASET_NAMES",
    "Dataset",
    "DivergenceError",
    "ExponentialBaseline",
    "FitConfig",
    "FitResult",
    "MassUnderflow",
    "ModelSpec",
    "OddsDistribution",
    "OleParams",
    "OlpParams",
    "PRESETS",
    "ParetoBaseline",
    "PolyExpGenerator",
    "SeriesTruncation",
    "SeriesTruncationError",
    "SimConfig",
    "StudyCell",
    "StudyReport",
    "StudyRow",
    "TABLE_IDS",
    "UniformBaseline",
    "fit_mle",
    "from_preset",
    "information_criteria",
    "load_dataset",
    "log_likelihood",
    "make_baseline",
    "parse_baseline",
    "preset_coefficients",
    "read_values",
    "run_cell",
    "run_table",
    "score",
]
