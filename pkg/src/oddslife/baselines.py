"""Baseline distributions and their odds transforms.

Each baseline supplies a cdf G, pdf g, the odds function V(x) = G/(1-G), and
the inverse of V.  The odds function maps the baseline's support monotonically
onto (0, inf); composing a generator with V produces the full lifetime family.

Supported kinds and their config syntax:

    uniform:theta=2          support (0, theta)
    exponential:theta=1      support (0, inf)
    pareto:a=1,theta=0.5     support (a, inf)
    burrxii:alpha=2,theta=1  support (0, inf)
"""

from __future__ import annotations

import abc
import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "Baseline",
    "UniformBaseline",
    "ExponentialBaseline",
    "ParetoBaseline",
    "BurrBaseline",
    "BASELINE_KINDS",
    "make_baseline",
    "parse_baseline",
]


def _positive(name: str, value: float) -> float:
    value = float(value)
    if not (math.isfinite(value) and value > 0.0):
        raise ValueError(f"{name} must be finite and > 0")
    return value


class Baseline(abc.ABC):
    """Distribution with cdf G, pdf g, odds V = G/(1-G), and inverse odds."""

    kind: str

    @property
    @abc.abstractmethod
    def support(self) -> tuple[float, float]:
        """Open interval (lo, hi) where 0 < G < 1."""

    @abc.abstractmethod
    def cdf(self, x):
        """G(x), clamped to 0 below the support and 1 above."""

    @abc.abstractmethod
    def pdf(self, x):
        """g(x), zero outside the support."""

    @abc.abstractmethod
    def log_pdf(self, x):
        """ln g(x) for x strictly inside the support."""

    @abc.abstractmethod
    def log_sf(self, x):
        """ln(1 - G(x)) for x strictly inside the support."""

    @abc.abstractmethod
    def odds(self, x):
        """V(x) = G/(1-G); requires x strictly inside the support."""

    @abc.abstractmethod
    def inverse_odds(self, z):
        """The x with V(x) = z, for z > 0."""

    @abc.abstractmethod
    def params(self) -> dict[str, float]:
        """Parameter name -> value, in config order."""

    def sf(self, x):
        x_arr = np.asarray(x, dtype=float)
        out = 1.0 - self.cdf(x_arr)
        return float(out) if np.isscalar(x) else out

    def _require_interior(self, x) -> np.ndarray:
        x_arr = np.asarray(x, dtype=float)
        lo, hi = self.support
        mn = float(np.min(x_arr)) if x_arr.size else math.inf
        mx = float(np.max(x_arr)) if x_arr.size else -math.inf
        if mn != mn or not (mn > lo and mx < hi):
            raise ValueError(f"x must lie strictly inside the support ({lo}, {hi})")
        return x_arr

    @staticmethod
    def _require_positive_z(z) -> np.ndarray:
        z_arr = np.asarray(z, dtype=float)
        if np.any(~np.isfinite(z_arr)) or np.any(z_arr <= 0.0):
            raise ValueError("odds value z must be finite and > 0")
        return z_arr

    def __repr__(self):
        args = ", ".join(f"{k}={v:g}" for k, v in self.params().items())
        return f"{type(self).__name__}({args})"


def _scalar_like(template, out):
    return float(out) if np.isscalar(template) else out


@dataclass(frozen=True, repr=False)
class UniformBaseline(Baseline):
    theta: float
    kind = "uniform"

    def __post_init__(self):
        object.__setattr__(self, "theta", _positive("theta", self.theta))

    @property
    def support(self):
        return (0.0, self.theta)

    def params(self):
        return {"theta": self.theta}

    def cdf(self, x):
        x_arr = np.asarray(x, dtype=float)
        return _scalar_like(x, np.clip(x_arr / self.theta, 0.0, 1.0))

    def pdf(self, x):
        x_arr = np.asarray(x, dtype=float)
        inside = (x_arr >= 0.0) & (x_arr < self.theta)
        return _scalar_like(x, np.where(inside, 1.0 / self.theta, 0.0))

    def log_pdf(self, x):
        x_arr = self._require_interior(x)
        return _scalar_like(x, np.full_like(x_arr, -math.log(self.theta)))

    def log_sf(self, x):
        x_arr = self._require_interior(x)
        return _scalar_like(x, np.log((self.theta - x_arr) / self.theta))

    def odds(self, x):
        x_arr = self._require_interior(x)
        return _scalar_like(x, x_arr / (self.theta - x_arr))

    def inverse_odds(self, z):
        z_arr = self._require_positive_z(z)
        return _scalar_like(z, self.theta * z_arr / (1.0 + z_arr))


@dataclass(frozen=True, repr=False)
class ExponentialBaseline(Baseline):
    theta: float
    kind = "exponential"

    def __post_init__(self):
        object.__setattr__(self, "theta", _positive("theta", self.theta))

    @property
    def support(self):
        return (0.0, math.inf)

    def params(self):
        return {"theta": self.theta}

    def cdf(self, x):
        x_arr = np.asarray(x, dtype=float)
        return _scalar_like(x, np.where(x_arr > 0.0, -np.expm1(-self.theta * x_arr), 0.0))

    def pdf(self, x):
        x_arr = np.asarray(x, dtype=float)
        out = np.where(x_arr >= 0.0, self.theta * np.exp(-self.theta * x_arr), 0.0)
        return _scalar_like(x, out)

    def log_pdf(self, x):
        x_arr = self._require_interior(x)
        return _scalar_like(x, math.log(self.theta) - self.theta * x_arr)

    def log_sf(self, x):
        x_arr = self._require_interior(x)
        return _scalar_like(x, -self.theta * x_arr)

    def odds(self, x):
        x_arr = self._require_interior(x)
        return _scalar_like(x, np.expm1(self.theta * x_arr))

    def inverse_odds(self, z):
        z_arr = self._require_positive_z(z)
        return _scalar_like(z, np.log1p(z_arr) / self.theta)


@dataclass(frozen=True, repr=False)
class ParetoBaseline(Baseline):
    a: float
    theta: float
    kind = "pareto"

    def __post_init__(self):
        object.__setattr__(self, "a", _positive("a", self.a))
        object.__setattr__(self, "theta", _positive("theta", self.theta))

    @property
    def support(self):
        return (self.a, math.inf)

    def params(self):
        return {"a": self.a, "theta": self.theta}

    def cdf(self, x):
        x_arr = np.asarray(x, dtype=float)
        with np.errstate(divide="ignore", invalid="ignore"):
            out = np.where(x_arr > self.a, -np.expm1(self.theta * np.log(self.a / np.maximum(x_arr, self.a))), 0.0)
        return _scalar_like(x, out)

    def pdf(self, x):
        x_arr = np.asarray(x, dtype=float)
        with np.errstate(divide="ignore", invalid="ignore"):
            out = np.where(
                x_arr >= self.a,
                self.theta * self.a**self.theta / np.maximum(x_arr, self.a) ** (self.theta + 1.0),
                0.0,
            )
        return _scalar_like(x, out)

    def log_pdf(self, x):
        x_arr = self._require_interior(x)
        out = math.log(self.theta) + self.theta * math.log(self.a) - (self.theta + 1.0) * np.log(x_arr)
        return _scalar_like(x, out)

    def log_sf(self, x):
        x_arr = self._require_interior(x)
        return _scalar_like(x, self.theta * (math.log(self.a) - np.log(x_arr)))

    def odds(self, x):
        x_arr = self._require_interior(x)
        return _scalar_like(x, np.expm1(self.theta * np.log(x_arr / self.a)))

    def inverse_odds(self, z):
        z_arr = self._require_positive_z(z)
        return _scalar_like(z, self.a * np.exp(np.log1p(z_arr) / self.theta))


@dataclass(frozen=True, repr=False)
class BurrBaseline(Baseline):
    alpha: float
    theta: float
    kind = "burrxii"

    def __post_init__(self):
        object.__setattr__(self, "alpha", _positive("alpha", self.alpha))
        object.__setattr__(self, "theta", _positive("theta", self.theta))

    @property
    def support(self):
        return (0.0, math.inf)

    def params(self):
        return {"alpha": self.alpha, "theta": self.theta}

    def cdf(self, x):
        x_arr = np.asarray(x, dtype=float)
        out = np.where(x_arr > 0.0, -np.expm1(-self.theta * np.log1p(np.maximum(x_arr, 0.0) ** self.alpha)), 0.0)
        return _scalar_like(x, out)

    def pdf(self, x):
        x_arr = np.asarray(x, dtype=float)
        with np.errstate(divide="ignore", invalid="ignore"):
            xa = np.maximum(x_arr, 0.0) ** self.alpha
            # The x == 0 branch keeps the limit value: 0, theta, or inf as
            # alpha is >1, ==1, or <1.
            out = np.where(
                x_arr >= 0.0,
                self.alpha
                * self.theta
                * np.maximum(x_arr, 0.0) ** (self.alpha - 1.0)
                * (1.0 + xa) ** (-self.theta - 1.0),
                0.0,
            )
        return _scalar_like(x, out)

    def log_pdf(self, x):
        x_arr = self._require_interior(x)
        # x**alpha may overflow to inf under extreme optimizer probes;
        # log1p(inf) = inf is the correct limit and propagates to the
        # intended -inf log density, so only the warning is suppressed.
        with np.errstate(over="ignore"):
            out = (
                math.log(self.alpha)
                + math.log(self.theta)
                + (self.alpha - 1.0) * np.log(x_arr)
                - (self.theta + 1.0) * np.log1p(x_arr**self.alpha)
            )
        return _scalar_like(x, out)

    def log_sf(self, x):
        x_arr = self._require_interior(x)
        with np.errstate(over="ignore"):
            return _scalar_like(x, -self.theta * np.log1p(x_arr**self.alpha))

    def odds(self, x):
        x_arr = self._require_interior(x)
        with np.errstate(over="ignore"):
            return _scalar_like(x, np.expm1(self.theta * np.log1p(x_arr**self.alpha)))

    def inverse_odds(self, z):
        z_arr = self._require_positive_z(z)
        return _scalar_like(z, np.expm1(np.log1p(z_arr) / self.theta) ** (1.0 / self.alpha))


BASELINE_KINDS: dict[str, tuple[type, tuple[str, ...]]] = {
    "uniform": (UniformBaseline, ("theta",)),
    "exponential": (ExponentialBaseline, ("theta",)),
    "pareto": (ParetoBaseline, ("a", "theta")),
    "burrxii": (BurrBaseline, ("alpha", "theta")),
}


def make_baseline(kind: str, **params: float) -> Baseline:
    try:
        cls, names = BASELINE_KINDS[kind]
    except KeyError:
        known = ", ".join(sorted(BASELINE_KINDS))
        raise ValueError(f"unknown baseline kind {kind!r}; known: {known}") from None
    if set(params) != set(names):
        raise ValueError(f"baseline {kind!r} takes parameters {names}, got {tuple(sorted(params))}")
    return cls(**{name: params[name] for name in names})


def parse_baseline(text: str) -> Baseline:
    """Parse a 'kind:name=value,name=value' config string."""
    kind, sep, rest = text.partition(":")
    kind = kind.strip().lower()
    if not sep or not rest.strip():
        raise ValueError(f"baseline spec {text!r} must look like 'kind:name=value,...'")
    params = {}
    for item in rest.split(","):
        name, sep2, value = item.partition("=")
        if not sep2:
            raise ValueError(f"bad baseline parameter {item!r} in {text!r}")
        try:
            params[name.strip()] = float(value)
        except ValueError:
            raise ValueError(f"bad numeric value in {item!r}") from None
    return make_baseline(kind, **params)
