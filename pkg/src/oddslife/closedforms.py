"""Closed-form reference values for two fully tractable family members.

Both use the quadratic-coefficient generator with weights (1, 1) (the
"lindley" preset).  With an exponential baseline (rate theta) or a Pareto
baseline (scale a, shape theta), the substitution w = lam * (V(x) + 1) turns
every integral below into incomplete gamma functions of w, optionally
differentiated with respect to order.  These forms exist to cross-check the
quadrature paths in `family`; they are exact up to the accuracy of the
incomplete gamma evaluations they call.

Notation used throughout: Z = lam * e**(theta * t) for the exponential
baseline and Z = lam * (t / a)**theta for the Pareto baseline, so that the
integration variable runs from lam (at the lower support end) to Z (at t).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from scipy import special

from .specfun import (
    Tail,
    incomplete_gamma_param_deriv,
    lower_incomplete_gamma,
    upper_incomplete_gamma,
)

__all__ = [
    "OleParams",
    "OlpParams",
    "ole_mean",
    "olp_mean",
    "ole_renyi",
    "olp_renyi",
    "ole_shannon",
    "olp_shannon",
    "ole_stress_strength",
    "olp_stress_strength",
    "ole_incomplete_moment",
    "olp_incomplete_moment",
    "ole_mrl",
    "olp_mrl",
    "ole_mrrl",
    "olp_mrrl",
]


@dataclass(frozen=True)
class OleParams:
    """Exponential-baseline member: generator rate lam, baseline rate theta."""

    lam: float
    theta: float

    def __post_init__(self):
        if not (self.lam > 0.0 and math.isfinite(self.lam)):
            raise ValueError("lam must be finite and > 0")
        if not (self.theta > 0.0 and math.isfinite(self.theta)):
            raise ValueError("theta must be finite and > 0")


@dataclass(frozen=True)
class OlpParams:
    """Pareto-baseline member: generator rate lam, baseline shape theta, scale a."""

    lam: float
    theta: float
    a: float

    def __post_init__(self):
        for name in ("lam", "theta", "a"):
            val = getattr(self, name)
            if not (val > 0.0 and math.isfinite(val)):
                raise ValueError(f"{name} must be finite and > 0")


def _upper_gamma_any(p: float, x: float) -> float:
    """Upper incomplete gamma continued to p <= 0 via the recurrence
    Gamma(p, x) = (Gamma(p+1, x) - x**p * exp(-x)) / p, valid for x > 0."""
    if not (x > 0.0):
        raise ValueError("x must be > 0 for nonpositive order")
    if p > 0.0:
        return upper_incomplete_gamma(p, x)
    if p == 0.0:
        return float(special.exp1(x))
    return (_upper_gamma_any(p + 1.0, x) - x**p * math.exp(-x)) / p


def _lower_diff(j: int, p: float, a: float, b: float) -> float:
    """integral of (ln w)**j * w**(p-1) * exp(-w) dw over [a, b]."""
    if j == 0:
        return lower_incomplete_gamma(p, b) - lower_incomplete_gamma(p, a)
    return incomplete_gamma_param_deriv(j, p, b, Tail.LOWER) - incomplete_gamma_param_deriv(
        j, p, a, Tail.LOWER
    )


def _log_front(lam: float) -> float:
    """ln of e**lam / (1 + lam), the constant carried by every w-integral."""
    return lam - math.log1p(lam)


# ----------------------------------------------------------------------
# Means
# ----------------------------------------------------------------------


def ole_mean(params: OleParams) -> float:
    lam, theta = params.lam, params.theta
    front = math.exp(_log_front(lam)) / theta
    g1 = incomplete_gamma_param_deriv(1, 2.0, lam, Tail.UPPER)
    g0 = upper_incomplete_gamma(2.0, lam)
    return front * (g1 - math.log(lam) * g0)


def olp_mean(params: OlpParams) -> float:
    lam, theta, a = params.lam, params.theta, params.a
    front = math.exp(_log_front(lam)) * a * lam ** (-1.0 / theta)
    return front * upper_incomplete_gamma(2.0 + 1.0 / theta, lam)


# ----------------------------------------------------------------------
# Entropies
# ----------------------------------------------------------------------


def ole_renyi(params: OleParams, beta: float) -> float:
    if not (beta > 0.0) or beta == 1.0:
        raise ValueError("beta must be positive and different from 1")
    lam, theta = params.lam, params.theta
    log_integral = (
        beta * (2.0 * math.log(lam) + math.log(theta) - math.log1p(lam) + lam)
        - 2.0 * beta * math.log(beta * lam)
        - math.log(theta)
        + math.log(upper_incomplete_gamma(2.0 * beta, beta * lam))
    )
    return log_integral / (1.0 - beta)


def olp_renyi(params: OlpParams, beta: float) -> float:
    if not (beta > 0.0) or beta == 1.0:
        raise ValueError("beta must be positive and different from 1")
    lam, theta, a = params.lam, params.theta, params.a
    p = (beta * (2.0 * theta - 1.0) + 1.0) / theta
    log_integral = (
        beta * (2.0 * math.log(lam) + math.log(theta) - math.log(a) - math.log1p(lam) + lam)
        + math.log(a)
        - math.log(theta)
        - p * math.log(beta * lam)
        + math.log(_upper_gamma_any(p, beta * lam))
    )
    return log_integral / (1.0 - beta)


def ole_shannon(params: OleParams) -> float:
    lam, theta = params.lam, params.theta
    front = math.exp(_log_front(lam))
    g1 = incomplete_gamma_param_deriv(1, 2.0, lam, Tail.UPPER)
    g3 = upper_incomplete_gamma(3.0, lam)
    mean_log_w = front * g1
    mean_w = front * g3
    log_const = 2.0 * math.log(lam) + math.log(theta) - math.log1p(lam)
    return -(log_const + lam + 2.0 * (mean_log_w - math.log(lam)) - mean_w)


def olp_shannon(params: OlpParams) -> float:
    lam, theta, a = params.lam, params.theta, params.a
    front = math.exp(_log_front(lam))
    g1 = incomplete_gamma_param_deriv(1, 2.0, lam, Tail.UPPER)
    g3 = upper_incomplete_gamma(3.0, lam)
    mean_log_w = front * g1
    mean_w = front * g3
    log_const = 2.0 * math.log(lam) + math.log(theta) - math.log(a) - math.log1p(lam)
    return -(
        log_const
        + lam
        + ((2.0 * theta - 1.0) / theta) * (mean_log_w - math.log(lam))
        - mean_w
    )


# ----------------------------------------------------------------------
# Stress-strength reliability: P(stress < strength)
# ----------------------------------------------------------------------


def _lindley_pair_reliability(lam1: float, lam2: float, rho: float) -> float:
    c = lam1 + lam2 * rho
    tail = (1.0 + c) / c**2 + lam2 * rho * (c**2 + 2.0 * c + 2.0) / c**3
    factor = lam1**2 / ((1.0 + lam1) * (1.0 + lam2)) * math.exp(lam2 * (1.0 - rho))
    return 1.0 - factor * tail


def ole_stress_strength(strength: OleParams, stress: OleParams) -> float:
    """P(X2 < X1) for X1 ~ strength, X2 ~ stress; requires equal theta."""
    if strength.theta != stress.theta:
        raise ValueError("closed form requires equal baseline rates")
    return _lindley_pair_reliability(strength.lam, stress.lam, 1.0)


def olp_stress_strength(strength: OlpParams, stress: OlpParams) -> float:
    """P(X2 < X1) for X1 ~ strength, X2 ~ stress; requires equal theta and
    a stress scale not above the strength scale."""
    if strength.theta != stress.theta:
        raise ValueError("closed form requires equal baseline shapes")
    if stress.a > strength.a:
        raise ValueError("closed form requires stress scale a2 <= strength scale a1")
    rho = (strength.a / stress.a) ** strength.theta
    return _lindley_pair_reliability(strength.lam, stress.lam, rho)


# ----------------------------------------------------------------------
# Incomplete moments
# ----------------------------------------------------------------------


def ole_incomplete_moment(params: OleParams, r: int, t: float) -> float:
    if r not in (1, 2):
        raise ValueError("closed form available for r in {1, 2}")
    if t <= 0.0:
        return 0.0
    lam, theta = params.lam, params.theta
    z = lam * math.exp(theta * t)
    log_lam = math.log(lam)
    acc = 0.0
    for j in range(r + 1):
        acc += math.comb(r, j) * (-log_lam) ** (r - j) * _lower_diff(j, 2.0, lam, z)
    return math.exp(_log_front(lam)) / theta**r * acc


def olp_incomplete_moment(params: OlpParams, r: int, t: float) -> float:
    if r < 1:
        raise ValueError("moment order r must be >= 1")
    lam, theta, a = params.lam, params.theta, params.a
    if t <= a:
        return 0.0
    z = lam * (t / a) ** theta
    p = 2.0 + r / theta
    diff = lower_incomplete_gamma(p, z) - lower_incomplete_gamma(p, lam)
    return math.exp(_log_front(lam)) * a**r * lam ** (-r / theta) * diff


# ----------------------------------------------------------------------
# Mean residual life and its reversed counterpart
# ----------------------------------------------------------------------


def ole_mrl(params: OleParams, t: float) -> float:
    if t < 0.0:
        raise ValueError("t must be >= 0")
    lam, theta = params.lam, params.theta
    z = lam * math.exp(theta * t)
    g1 = incomplete_gamma_param_deriv(1, 2.0, z, Tail.UPPER)
    g0 = upper_incomplete_gamma(2.0, z)
    return math.exp(z) / (1.0 + z) * (g1 / theta - (t + math.log(lam) / theta) * g0)


def olp_mrl(params: OlpParams, t: float) -> float:
    lam, theta, a = params.lam, params.theta, params.a
    if t < a:
        raise ValueError("t must be >= a")
    z = lam * (t / a) ** theta
    g_frac = upper_incomplete_gamma(2.0 + 1.0 / theta, z)
    g0 = upper_incomplete_gamma(2.0, z)
    return math.exp(z) / (1.0 + z) * (a * lam ** (-1.0 / theta) * g_frac - t * g0)


def ole_mrrl(params: OleParams, t: float) -> float:
    if not (t > 0.0):
        raise ValueError("t must be > 0")
    lam, theta = params.lam, params.theta
    z = lam * math.exp(theta * t)
    d0 = _lower_diff(0, 2.0, lam, z)
    d1 = _lower_diff(1, 2.0, lam, z)
    if d0 <= 0.0:
        raise ArithmeticError(f"cdf mass between 0 and t={t:g} underflowed")
    return ((t + math.log(lam) / theta) * d0 - d1 / theta) / d0


def olp_mrrl(params: OlpParams, t: float) -> float:
    lam, theta, a = params.lam, params.theta, params.a
    if not (t > a):
        raise ValueError("t must be > a")
    z = lam * (t / a) ** theta
    d0 = _lower_diff(0, 2.0, lam, z)
    d_frac = lower_incomplete_gamma(2.0 + 1.0 / theta, z) - lower_incomplete_gamma(
        2.0 + 1.0 / theta, lam
    )
    if d0 <= 0.0:
        raise ArithmeticError(f"cdf mass between a and t={t:g} underflowed")
    return t - a * lam ** (-1.0 / theta) * d_frac / d0