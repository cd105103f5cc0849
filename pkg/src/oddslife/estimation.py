"""Maximum likelihood fitting for odds-composed models.

Free parameters are optimized on an unconstrained scale (log transforms for
positive parameters, shifted/bounded transforms where the support couples a
parameter to the sample) with Nelder-Mead restarted from a fixed set of
eight deterministic starting points.  Likelihoods are accumulated with
math.fsum so a fit is invariant under permutations of the sample.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import optimize

from .baselines import BASELINE_KINDS, make_baseline
from .family import OddsDistribution
from .generator import PolyExpGenerator, preset_coefficients

__all__ = [
    "ModelSpec",
    "FitConfig",
    "FitResult",
    "log_likelihood",
    "score",
    "fit_mle",
    "information_criteria",
]


@dataclass(frozen=True)
class ModelSpec:
    """A generator coefficient vector paired with a baseline kind."""

    coefficients: tuple[float, ...]
    baseline_kind: str

    def __post_init__(self):
        if self.baseline_kind not in BASELINE_KINDS:
            known = ", ".join(sorted(BASELINE_KINDS))
            raise ValueError(f"unknown baseline kind {self.baseline_kind!r}; known: {known}")
        object.__setattr__(self, "coefficients", tuple(float(c) for c in self.coefficients))

    @classmethod
    def from_preset(cls, preset: str, baseline_kind: str) -> "ModelSpec":
        return cls(preset_coefficients(preset), baseline_kind)

    @property
    def param_names(self) -> tuple[str, ...]:
        _, baseline_params = BASELINE_KINDS[self.baseline_kind]
        return ("lam",) + tuple(baseline_params)

    def distribution(self, params: dict[str, float]) -> OddsDistribution:
        baseline_params = {k: params[k] for k in self.param_names if k != "lam"}
        return OddsDistribution(
            PolyExpGenerator(self.coefficients, rate=params["lam"]),
            make_baseline(self.baseline_kind, **baseline_params),
        )


@dataclass(frozen=True)
class FitConfig:
    n_starts: int = 8
    max_iterations: int = 2000
    xatol: float = 1e-9
    fatol: float = 1e-10
    fix_pareto_scale: bool = True
    # When a parameter is held fixed (the Pareto scale), it still counts
    # toward k in AIC/BIC unless this is cleared.
    count_fixed_params: bool = True

    def __post_init__(self):
        if not (1 <= self.n_starts <= 8):
            raise ValueError("n_starts must lie in 1..8")
        if self.max_iterations < 1:
            raise ValueError("max_iterations must be >= 1")


@dataclass(frozen=True)
class FitResult:
    params: dict[str, float]
    log_likelihood: float
    converged: bool
    iterations: int
    n_params: int
    n_obs: int
    aic: float
    bic: float
    message: str = ""


def _validate_data(data) -> np.ndarray:
    arr = np.asarray(data, dtype=float).ravel()
    if arr.size == 0:
        raise ValueError("data must be nonempty")
    if not np.all(np.isfinite(arr)):
        raise ValueError("data must be finite")
    return arr


def log_likelihood(model: ModelSpec, params: dict[str, float], data) -> float:
    """Sum of log densities; -inf when any point falls outside the support
    or the parameters are invalid for the model."""
    arr = _validate_data(data)
    try:
        dist = model.distribution(params)
    except ValueError:
        return -math.inf
    logs = np.asarray(dist.log_pdf(arr))
    if not np.all(logs > -math.inf):
        return -math.inf
    return math.fsum(map(float, logs))


def score(model: ModelSpec, params: dict[str, float], data) -> np.ndarray:
    """Central-difference gradient of the log likelihood in param_names order."""
    arr = _validate_data(data)
    out = np.empty(len(model.param_names))
    for idx, name in enumerate(model.param_names):
        value = params[name]
        h = max(1e-6, 1e-6 * abs(value))
        hi = dict(params, **{name: value + h})
        lo = dict(params, **{name: value - h})
        out[idx] = (log_likelihood(model, hi, arr) - log_likelihood(model, lo, arr)) / (2.0 * h)
    return out


def information_criteria(loglik: float, n_params: int, n_obs: int) -> tuple[float, float]:
    aic = 2.0 * n_params - 2.0 * loglik
    bic = n_params * math.log(n_obs) - 2.0 * loglik
    return aic, bic


# ----------------------------------------------------------------------
# Transforms between the optimizer scale and model parameters
# ----------------------------------------------------------------------


class _Transform:
    """Maps an unconstrained optimizer vector to a full parameter dict."""

    def __init__(self, model: ModelSpec, data: np.ndarray, config: FitConfig):
        self.model = model
        self.config = config
        self.kind = model.baseline_kind
        self.data = data
        self.data_min = float(np.min(data))
        self.data_max = float(np.max(data))
        self.data_mean = float(np.mean(data))
        # Heavy-tailed samples overflow the variance; the spread anchor is
        # only consulted for the uniform baseline, whose support is bounded.
        self.data_std = float(np.std(data)) if self.kind == "uniform" else 0.0
        self.fixed: dict[str, float] = {}
        if self.kind == "pareto" and config.fix_pareto_scale:
            self.fixed["a"] = self.data_min
        self.free_names = tuple(n for n in model.param_names if n not in self.fixed)

    def to_params(self, u: np.ndarray) -> dict[str, float]:
        params = dict(self.fixed)
        for name, value in zip(self.free_names, u):
            if name == "theta" and self.kind == "uniform":
                params[name] = self.data_max * (1.0 + 1e-9) + math.exp(value)
            elif name == "a":
                params[name] = self.data_min / (1.0 + math.exp(-value))
            else:
                params[name] = math.exp(value)
        return params

    def base_start(self) -> np.ndarray:
        u = []
        for name in self.free_names:
            if name == "lam":
                u.append(0.0)
            elif name == "a":
                u.append(4.6)
            elif self.kind == "uniform":
                u.append(math.log(max(self.data_std, 1e-6)))
            elif self.kind == "exponential":
                u.append(math.log(1.0 / max(self.data_mean, 1e-12)))
            elif self.kind == "pareto":
                ratios = np.log(np.maximum(self.data / max(self.data_min, 1e-300), 1.0))
                positive = ratios[ratios > 0.0]
                anchor = 1.0 / float(np.mean(positive)) if positive.size else 1.0
                u.append(math.log(anchor))
            else:
                u.append(0.0)
        return np.array(u)

    def from_params(self, params: dict[str, float]) -> np.ndarray:
        """Optimizer-scale point for a given parameter dict, falling back to
        the data-driven start for any coordinate the transform cannot reach."""
        fallback = self.base_start()
        u = np.array(fallback)
        for idx, name in enumerate(self.free_names):
            value = float(params[name])
            if name == "theta" and self.kind == "uniform":
                floor = self.data_max * (1.0 + 1e-9)
                if value > floor:
                    u[idx] = math.log(value - floor)
            elif name == "a":
                if 0.0 < value < self.data_min:
                    u[idx] = math.log(value / (self.data_min - value))
            elif value > 0.0:
                u[idx] = math.log(value)
        return u


def _is_escaped(params: dict[str, float], transform: _Transform) -> bool:
    """True when a fitted point has run off toward the boundary of the
    parameter space.  Some samples admit no interior maximum: the likelihood
    climbs forever along a degenerate ridge (for example rate -> inf with
    shape -> 0 at fixed product), and the optimizer halts on the flat
    plateau reporting success.  Such points are divergences, not estimates."""
    for name in transform.free_names:
        value = params[name]
        if name == "theta" and transform.kind == "uniform":
            if value > transform.data_max * (1.0 + 1e-9) + 1e8 * max(1.0, transform.data_max):
                return True
        elif name == "a":
            continue
        elif value > 1e8 or value < 1e-10:
            return True
    return False


def _start_offsets(dim: int) -> list[np.ndarray]:
    ones = np.ones(dim)
    e0 = np.zeros(dim)
    e0[0] = 1.0
    alternating = np.array([0.8 if i % 2 == 0 else -0.8 for i in range(dim)])
    return [
        np.zeros(dim),
        0.8 * ones,
        -0.8 * ones,
        1.6 * ones,
        -1.6 * ones,
        0.8 * e0,
        -0.8 * e0,
        alternating,
    ]


def fit_mle(
    model: ModelSpec,
    data,
    config: FitConfig | None = None,
    start_params: dict[str, float] | None = None,
) -> FitResult:
    config = config or FitConfig()
    arr = np.sort(_validate_data(data))
    if arr[0] == arr[-1]:
        raise ValueError("sample has zero variance; nothing to fit")
    transform = _Transform(model, arr, config)

    def objective(u: np.ndarray) -> float:
        try:
            dist = model.distribution(transform.to_params(u))
        except ValueError:
            return math.inf
        logs = dist.log_pdf(arr)
        if not np.all(logs > -math.inf):
            return math.inf
        return -math.fsum(map(float, logs))

    base = transform.from_params(start_params) if start_params else transform.base_start()
    best: tuple[float, tuple[float, ...]] | None = None
    best_params: dict[str, float] | None = None
    best_iters = 0
    best_success = False
    escaped = 0
    for offset in _start_offsets(len(base))[: config.n_starts]:
        # An objective that is inf over the whole simplex (sample outside the
        # support at every start) makes the optimizer's convergence test
        # subtract inf from inf; the result is discarded below either way.
        with np.errstate(invalid="ignore"):
            res = optimize.minimize(
                objective,
                base + offset,
                method="Nelder-Mead",
                options={
                    "maxiter": config.max_iterations,
                    "xatol": config.xatol,
                    "fatol": config.fatol,
                },
            )
        if not math.isfinite(res.fun):
            continue
        params = transform.to_params(res.x)
        if _is_escaped(params, transform):
            escaped += 1
            continue
        key = (res.fun, tuple(params[n] for n in model.param_names))
        if best is None or key < best:
            best = key
            best_params = params
            best_iters = res.nit
            best_success = bool(res.success)
        elif key == best and res.success:
            best_success = True

    n_params = (
        len(model.param_names) if config.count_fixed_params else len(transform.free_names)
    )
    n_obs = arr.size
    if best_params is None:
        nan_params = {name: math.nan for name in model.param_names}
        aic, bic = math.nan, math.nan
        message = (
            "every start diverged toward the parameter-space boundary"
            if escaped
            else "no start reached a finite log likelihood"
        )
        return FitResult(
            params=nan_params,
            log_likelihood=-math.inf,
            converged=False,
            iterations=0,
            n_params=n_params,
            n_obs=n_obs,
            aic=aic,
            bic=bic,
            message=message,
        )

    loglik = -best[0]
    aic, bic = information_criteria(loglik, n_params, n_obs)
    return FitResult(
        params=best_params,
        log_likelihood=loglik,
        converged=best_success,
        iterations=best_iters,
        n_params=n_params,
        n_obs=n_obs,
        aic=aic,
        bic=bic,
        message="" if best_success else "iteration budget reached before tolerance",
    )
