"""Polynomial-exponential generator family.

A generator is the density

    r(t) = h(lam) * sum_k a_k t^k e^(-lam t),   t > 0,

with nonnegative polynomial coefficients a_0..a_s and rate lam.  It is a
finite mixture of s+1 gamma distributions: component k has shape k+1, rate
lam, and weight proportional to a_k k! / lam^(k+1).  Several named lifetime
distributions are coefficient presets of this form.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy import special

__all__ = ["PolyExpGenerator", "PRESETS", "preset_coefficients", "from_preset"]

# Named coefficient vectors (index k = 0..s).
PRESETS: dict[str, tuple[float, ...]] = {
    "exponential": (1.0,),
    "lindley": (1.0, 1.0),
    "akash": (1.0, 0.0, 1.0),
    "aradhana": (1.0, 2.0, 1.0),
    "sujatha": (1.0, 1.0, 1.0),
    "length_biased_lindley": (0.0, 1.0, 1.0),
    "amarendra": (1.0, 1.0, 1.0, 1.0),
    "devya": (1.0, 1.0, 1.0, 1.0, 1.0),
    "shambhu": (1.0, 1.0, 1.0, 1.0, 1.0, 1.0),
}


def preset_coefficients(name: str) -> tuple[float, ...]:
    try:
        return PRESETS[name]
    except KeyError:
        known = ", ".join(sorted(PRESETS))
        raise ValueError(f"unknown generator preset {name!r}; known: {known}") from None


def from_preset(name: str, rate: float) -> "PolyExpGenerator":
    return PolyExpGenerator(preset_coefficients(name), rate)


@dataclass(frozen=True)
class PolyExpGenerator:
    coefficients: tuple[float, ...]
    rate: float
    _weights: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        coeffs = tuple(float(a) for a in self.coefficients)
        if len(coeffs) == 0:
            raise ValueError("at least one coefficient is required")
        if any(not math.isfinite(a) or a < 0.0 for a in coeffs):
            raise ValueError("coefficients must be finite and >= 0")
        if not any(a > 0.0 for a in coeffs):
            raise ValueError("at least one coefficient must be > 0")
        if not (math.isfinite(self.rate) and self.rate > 0.0):
            raise ValueError("rate must be finite and > 0")
        object.__setattr__(self, "coefficients", coeffs)
        object.__setattr__(self, "rate", float(self.rate))
        # Unnormalized mixture masses a_k k! / lam^(k+1).
        raw = np.array(
            [a * math.factorial(k) / self.rate ** (k + 1) for k, a in enumerate(coeffs)]
        )
        total = raw.sum()
        object.__setattr__(self, "_weights", raw / total)
        object.__setattr__(self, "_normalizer", 1.0 / total)

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def normalizer(self) -> float:
        """h(lam) = 1 / sum_k a_k k! / lam^(k+1)."""
        return self._normalizer

    def mixture_weights(self) -> np.ndarray:
        """Component probabilities pi_k of the gamma-mixture representation."""
        return self._weights.copy()

    def pdf(self, t):
        t_arr = np.asarray(t, dtype=float)
        if np.any(t_arr <= 0.0):
            raise ValueError("generator density is defined for t > 0")
        k = np.arange(len(self.coefficients))
        poly = np.sum(np.array(self.coefficients) * t_arr[..., None] ** k, axis=-1)
        out = self.normalizer() * poly * np.exp(-self.rate * t_arr)
        return float(out) if np.isscalar(t) else out

    def cdf(self, t):
        t_arr = np.maximum(np.asarray(t, dtype=float), 0.0)
        k = np.arange(len(self.coefficients))
        out = np.sum(self._weights * special.gammainc(k + 1, self.rate * t_arr[..., None]), axis=-1)
        return float(out) if np.isscalar(t) else out

    def sf(self, t):
        t_arr = np.maximum(np.asarray(t, dtype=float), 0.0)
        k = np.arange(len(self.coefficients))
        out = np.sum(self._weights * special.gammaincc(k + 1, self.rate * t_arr[..., None]), axis=-1)
        return float(out) if np.isscalar(t) else out

    def mean(self) -> float:
        k = np.arange(len(self.coefficients))
        return float(np.sum(self._weights * (k + 1) / self.rate))

    def sample(self, rng: np.random.Generator, n: int) -> np.ndarray:
        """Draw n variates: pick a mixture component, then a gamma variate of
        shape (component index + 1) and the generator's rate."""
        if n < 1:
            raise ValueError("sample size must be >= 1")
        comp = rng.choice(len(self.coefficients), size=n, p=self._weights)
        return rng.gamma(shape=comp + 1.0, scale=1.0 / self.rate)
