"""The odds-composed lifetime distribution and its functionals.

A distribution here is a generator (polynomial-exponential density r) pushed
through a baseline's odds function V = G/(1-G):

    F(x) = R(V(x)),   f(x) = r(V(x)) V'(x),

with R the generator cdf.  Because the generator is a gamma mixture, F and S
are mixtures of regularized gamma tails evaluated at lam*V(x), and every
expectation E[psi(X)] reduces to integrals of psi(V^-1(t)) against gamma
densities in the generator variable t.  Quadrature in t-space is the
normative evaluation path for moments, entropies, reliability and life
functionals; the truncated double power series in G is provided as a
cross-check on its practical convergence region G <= 0.7.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import integrate, special

from .baselines import Baseline
from .generator import PolyExpGenerator

__all__ = [
    "OddsDistribution",
    "SeriesTruncation",
    "ConvergenceError",
    "DivergenceError",
    "SeriesTruncationError",
    "MassUnderflow",
]


class ConvergenceError(RuntimeError):
    """A root search exhausted its budget without meeting tolerance."""


class DivergenceError(ArithmeticError):
    """An integral fails the tail-decay check (e.g. MGF beyond its abscissa)."""


class SeriesTruncationError(ArithmeticError):
    """The truncated series' tail estimate exceeds the requested tolerance."""


class MassUnderflow(ArithmeticError):
    """A conditional functional's denominator (S(t) or F(t)) underflowed to 0."""


@dataclass(frozen=True)
class SeriesTruncation:
    max_i: int = 60
    max_j: int = 60
    tail_tolerance: float = 1e-9

    def __post_init__(self):
        if self.max_i < 1 or self.max_j < 1:
            raise ValueError("max_i and max_j must be >= 1")
        if not (self.tail_tolerance > 0.0):
            raise ValueError("tail_tolerance must be > 0")


@dataclass(frozen=True)
class OddsDistribution:
    generator: PolyExpGenerator
    baseline: Baseline

    def __post_init__(self):
        if not isinstance(self.generator, PolyExpGenerator):
            raise TypeError("generator must be a PolyExpGenerator")
        if not isinstance(self.baseline, Baseline):
            raise TypeError("baseline must be a Baseline")
        coeffs = np.array(self.generator.coefficients)
        active = np.flatnonzero(coeffs > 0.0)
        object.__setattr__(self, "_active_powers", active.astype(float))
        object.__setattr__(self, "_log_active_coeffs", np.log(coeffs[active]))
        object.__setattr__(self, "_log_h", math.log(self.generator.normalizer()))

    @property
    def support(self) -> tuple[float, float]:
        return self.baseline.support

    # ------------------------------------------------------------------
    # Pointwise functions
    # ------------------------------------------------------------------

    def cdf(self, x):
        x_arr = np.asarray(x, dtype=float)
        lo, hi = self.support
        out = np.zeros(x_arr.shape)
        out[x_arr >= hi] = 1.0
        interior = (x_arr > lo) & (x_arr < hi)
        if np.any(interior):
            z = self.generator.rate * self.baseline.odds(x_arr[interior])
            k = np.arange(len(self.generator.coefficients))
            pi = self.generator.mixture_weights()
            # The rounded weights can sum to 1 plus one ulp, which would leak
            # through as a probability slightly above 1.
            out[interior] = np.clip(
                np.sum(pi * special.gammainc(k + 1, z[..., None]), axis=-1), 0.0, 1.0
            )
        return float(out) if np.isscalar(x) else out

    def survival(self, x):
        x_arr = np.asarray(x, dtype=float)
        lo, hi = self.support
        out = np.zeros(x_arr.shape)
        out[x_arr <= lo] = 1.0
        interior = (x_arr > lo) & (x_arr < hi)
        if np.any(interior):
            z = self.generator.rate * self.baseline.odds(x_arr[interior])
            k = np.arange(len(self.generator.coefficients))
            pi = self.generator.mixture_weights()
            out[interior] = np.clip(
                np.sum(pi * special.gammaincc(k + 1, z[..., None]), axis=-1), 0.0, 1.0
            )
        return float(out) if np.isscalar(x) else out

    def sf(self, x):
        return self.survival(x)

    def _logpdf_interior(self, x_arr: np.ndarray) -> np.ndarray:
        lam = self.generator.rate
        v = np.asarray(self.baseline.odds(x_arr))
        powers = self._active_powers
        log_c = self._log_active_coeffs
        with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
            if len(powers) == 1:
                poly = log_c[0] + powers[0] * np.log(v)
            else:
                terms = log_c + powers * np.log(v)[..., None]
                peak = terms.max(axis=-1)
                poly = peak + np.log(np.exp(terms - peak[..., None]).sum(axis=-1))
                # A peak of -inf means every term vanished; the sum is 0.
                poly = np.where(np.isfinite(peak), poly, peak)
        out = (
            self._log_h
            + poly
            - lam * v
            + np.asarray(self.baseline.log_pdf(x_arr))
            - 2.0 * np.asarray(self.baseline.log_sf(x_arr))
        )
        return np.where(np.isfinite(v), out, -np.inf)

    def log_pdf(self, x):
        x_arr = np.asarray(x, dtype=float)
        lo, hi = self.support
        out = np.full(x_arr.shape, -np.inf)
        interior = (x_arr > lo) & (x_arr < hi)
        if np.any(interior):
            out[interior] = self._logpdf_interior(x_arr[interior])
        at_lo = x_arr == lo
        if np.any(at_lo):
            # Limit value: only the constant-coefficient term survives at V=0.
            a0 = self.generator.coefficients[0]
            with np.errstate(divide="ignore"):
                g_lo = np.asarray(self.baseline.pdf(np.full(np.count_nonzero(at_lo), lo)))
                out[at_lo] = (
                    math.log(self.generator.normalizer() * a0) + np.log(g_lo)
                    if a0 > 0.0
                    else -np.inf
                )
        return float(out) if np.isscalar(x) else out

    def pdf(self, x):
        x_arr = np.asarray(x, dtype=float)
        with np.errstate(over="ignore"):
            out = np.exp(self.log_pdf(x_arr))
        return float(out) if np.isscalar(x) else out

    def hazard(self, t):
        t_arr = np.asarray(t, dtype=float)
        s = self.survival(t_arr)
        if np.any(np.asarray(s) == 0.0):
            raise MassUnderflow("survival underflows to 0 at the requested point")
        out = self.pdf(t_arr) / s
        return float(out) if np.isscalar(t) else out

    # ------------------------------------------------------------------
    # Quantiles and sampling
    # ------------------------------------------------------------------

    def _mixture_cdf_z(self, z: float, u: float) -> float:
        """F(z) - u in the generator's lam*V coordinate, evaluated from the
        better-conditioned tail for the given u."""
        k = np.arange(len(self.generator.coefficients))
        pi = self.generator.mixture_weights()
        if u <= 0.5:
            return float(np.sum(pi * special.gammainc(k + 1, z))) - u
        return (1.0 - u) - float(np.sum(pi * special.gammaincc(k + 1, z)))

    def quantile(self, u: float) -> float:
        if not (0.0 < u < 1.0):
            raise ValueError("u must lie in the open interval (0, 1)")
        lam = self.generator.rate
        z_hi = max(lam * self.generator.mean(), 1.0)
        grow = 0
        while self._mixture_cdf_z(z_hi, u) < 0.0:
            z_hi *= 2.0
            grow += 1
            if grow > 400:
                raise ConvergenceError(
                    f"quantile bracket growth failed for u={u}: upper z={z_hi:g}"
                )
        z_lo = 0.0
        for _ in range(100):
            z_mid = 0.5 * (z_lo + z_hi)
            if self._mixture_cdf_z(z_mid, u) < 0.0:
                z_lo = z_mid
            else:
                z_hi = z_mid
            if z_hi - z_lo <= 1e-13 * max(z_hi, 1.0):
                break
        z = 0.5 * (z_lo + z_hi)
        # Newton polish: dF/dz = r(z/lam)/lam with r the generator density.
        for _ in range(4):
            resid = self._mixture_cdf_z(z, u)
            if resid == 0.0:
                break
            slope = self.generator.pdf(max(z / lam, 1e-300)) / lam
            if not (slope > 0.0 and math.isfinite(slope)):
                break
            step = resid / slope
            if not (z_lo <= z - step <= z_hi):
                break
            z -= step
        if abs(self._mixture_cdf_z(z, u)) > 1e-10:
            raise ConvergenceError(
                f"quantile solve for u={u} stalled at z={z:g} in bracket [{z_lo:g}, {z_hi:g}]"
            )
        return float(self.baseline.inverse_odds(z / lam))

    def median(self) -> float:
        return self.quantile(0.5)

    def sample(self, rng: np.random.Generator, n: int) -> np.ndarray:
        t = self.generator.sample(rng, n)
        return np.asarray(self.baseline.inverse_odds(t))

    # ------------------------------------------------------------------
    # Expectations by gamma-component quadrature in the generator variable
    # ------------------------------------------------------------------

    def expect(self, func, *, lower_t: float = 0.0, upper_t: float = math.inf) -> float:
        """integral of func(x) f(x) dx over the region V(x) in [lower_t, upper_t],
        computed per gamma mixture component in the generator variable."""
        lam = self.generator.rate
        inv = self.baseline.inverse_odds
        pi = self.generator.mixture_weights()
        pieces = []
        for k, weight in enumerate(pi):
            if weight == 0.0:
                continue
            log_norm = (k + 1) * math.log(lam) - math.lgamma(k + 1)

            def integrand(t, k=k, log_norm=log_norm):
                if t <= 0.0:
                    return 0.0
                w = math.exp(log_norm + k * math.log(t) - lam * t)
                # Skip func where the gamma weight underflowed: the point
                # contributes nothing, and func itself may overflow out there
                # (e.g. f(x)**(beta-1) with beta < 1 deep in the tail).
                if w == 0.0:
                    return 0.0
                return func(float(inv(t))) * w

            mean_k = (k + 1) / lam
            sd_k = math.sqrt(k + 1) / lam
            cuts = [lower_t, mean_k, mean_k + 12.0 * sd_k, mean_k + 40.0 * sd_k, upper_t]
            cuts = sorted({c for c in cuts if lower_t <= c <= upper_t})
            # A cut a few ulps from its neighbor leaves a sliver panel that
            # trips quad; merge it while keeping the true window ends.
            merged = [cuts[0]]
            for c in cuts[1:]:
                if not math.isfinite(c) or c - merged[-1] > 1e-12 * max(1.0, abs(c)):
                    merged.append(c)
                else:
                    merged[-1] = max(merged[-1], c) if c == cuts[-1] else merged[-1]
            cuts = merged if len(merged) > 1 else cuts[:1] + cuts[-1:]
            total = 0.0
            for a, b in zip(cuts[:-1], cuts[1:]):
                val, _ = integrate.quad(
                    integrand, a, b, epsabs=1e-12, epsrel=1e-10, limit=300
                )
                total += val
            pieces.append(weight * total)
        return math.fsum(pieces)

    def raw_moment(self, r: int) -> float:
        if r < 1:
            raise ValueError("moment order r must be >= 1")
        return self.expect(lambda x: x**r)

    def shape_measures(self) -> tuple[float, float, float, float]:
        """(mean, variance, skewness, kurtosis) from the first four moments."""
        m1, m2, m3, m4 = (self.raw_moment(r) for r in (1, 2, 3, 4))
        var = m2 - m1**2
        skew = (m3 - 3.0 * m2 * m1 + 2.0 * m1**3) / var**1.5
        kurt = (m4 - 4.0 * m3 * m1 + 6.0 * m2 * m1**2 - 3.0 * m1**4) / var**2
        return m1, var, skew, kurt

    def _check_tail_growth(self, s: float) -> None:
        lam = self.generator.rate
        inv = self.baseline.inverse_odds

        def exponent(t):
            return s * float(inv(t)) - lam * t

        base = max(100.0, 100.0 / lam)
        if exponent(4.0 * base) > exponent(base) + 1.0:
            raise DivergenceError(f"E[exp({s:g} X)] diverges: integrand grows in the tail")

    def mgf(self, s: float) -> float:
        if s == 0.0:
            return 1.0
        if s > 0.0:
            self._check_tail_growth(s)
        return self.expect(lambda x: math.exp(s * x))

    def cgf(self, s: float) -> float:
        return math.log(self.mgf(s))

    # ------------------------------------------------------------------
    # Series expansions (double power series in G)
    # ------------------------------------------------------------------

    def _series_eval(self, x: float, trunc: SeriesTruncation, want_cdf: bool) -> float:
        g_val = float(self.baseline.cdf(x))
        lo, _ = self.support
        if g_val > 0.7:
            raise ValueError("series evaluation requires baseline cdf G(x) <= 0.7")
        if x <= lo or g_val == 0.0:
            return 0.0
        lam = self.generator.rate
        coeffs = self.generator.coefficients
        dens = float(self.baseline.pdf(x))
        w_total = 1.0 / self.generator.normalizer()
        total = 0.0
        prev_small = 0
        last_diag = math.inf
        for d in range(trunc.max_i + trunc.max_j + 1):
            diag = 0.0
            i_lo = max(0, d - trunc.max_j)
            i_hi = min(d, trunc.max_i)
            for k, a_k in enumerate(coeffs):
                if a_k == 0.0:
                    continue
                inner = 0.0
                for i in range(i_lo, i_hi + 1):
                    j = d - i
                    w = (-lam) ** i / math.factorial(i) * math.comb(d + k + 1, j)
                    inner += w
                if want_cdf:
                    diag += a_k * inner * g_val ** (d + k + 1) / (d + k + 1)
                else:
                    diag += a_k * inner * dens * g_val ** (d + k)
            total += diag
            last_diag = abs(diag)
            if last_diag < trunc.tail_tolerance / 10.0:
                prev_small += 1
                if prev_small >= 2:
                    break
            else:
                prev_small = 0
        if last_diag > trunc.tail_tolerance:
            raise SeriesTruncationError(
                f"series tail estimate {last_diag:g} exceeds tolerance "
                f"{trunc.tail_tolerance:g} at max_i={trunc.max_i}, max_j={trunc.max_j}"
            )
        return total / w_total

    def series_pdf(self, x: float, trunc: SeriesTruncation) -> float:
        return self._series_eval(float(x), trunc, want_cdf=False)

    def series_cdf(self, x: float, trunc: SeriesTruncation) -> float:
        return self._series_eval(float(x), trunc, want_cdf=True)

    # ------------------------------------------------------------------
    # Entropies
    # ------------------------------------------------------------------

    def renyi_entropy(self, beta: float) -> float:
        if not (beta > 0.0) or beta == 1.0:
            raise ValueError("beta must be positive and different from 1")
        integral = self.expect(lambda x: math.exp((beta - 1.0) * float(self.log_pdf(x))))
        if not (integral > 0.0 and math.isfinite(integral)):
            raise DivergenceError(f"integral of f^{beta:g} did not evaluate to a finite positive value")
        return math.log(integral) / (1.0 - beta)

    def shannon_entropy(self) -> float:
        val = self.expect(lambda x: float(self.log_pdf(x)))
        if not math.isfinite(val):
            raise DivergenceError("E[ln f] did not evaluate to a finite value")
        return -val

    # ------------------------------------------------------------------
    # Order statistics and reliability
    # ------------------------------------------------------------------

    def order_statistic_pdf(self, r: int, n: int, x):
        if not (1 <= r <= n):
            raise ValueError("order statistic index must satisfy 1 <= r <= n")
        x_arr = np.asarray(x, dtype=float)
        f = self.pdf(x_arr)
        cdf = self.cdf(x_arr)
        const = math.factorial(n) / (math.factorial(r - 1) * math.factorial(n - r))
        acc = np.zeros(x_arr.shape)
        for ell in range(n - r + 1):
            acc += (-1.0) ** ell * math.comb(n - r, ell) * cdf ** (r + ell - 1)
        out = const * acc * f
        return float(out) if np.isscalar(x) else out

    def stress_strength(self, other: "OddsDistribution") -> float:
        """P(X_other < X_self), with self the strength and other the stress."""
        if self.baseline.kind != other.baseline.kind:
            raise ValueError("stress-strength requires both baselines of the same kind")
        return self.expect(lambda x: float(other.cdf(x)))

    # ------------------------------------------------------------------
    # Incomplete moments and derived curves
    # ------------------------------------------------------------------

    def incomplete_moment(self, r: int, t: float) -> float:
        if r < 1:
            raise ValueError("moment order r must be >= 1")
        lo, hi = self.support
        if t <= lo:
            return 0.0
        if t >= hi:
            return self.raw_moment(r)
        v_t = float(self.baseline.odds(t))
        return self.expect(lambda x: x**r, upper_t=v_t)

    def mean_deviations(self) -> tuple[float, float]:
        mean = self.raw_moment(1)
        med = self.median()
        d_mean = 2.0 * mean * float(self.cdf(mean)) - 2.0 * self.incomplete_moment(1, mean)
        d_median = mean - 2.0 * self.incomplete_moment(1, med)
        return d_mean, d_median

    def lorenz_bonferroni(self, p: float) -> tuple[float, float]:
        if not (0.0 < p < 1.0):
            raise ValueError("p must lie in (0, 1)")
        mean = self.raw_moment(1)
        if not (mean > 0.0):
            raise DivergenceError("Lorenz curve requires a positive finite mean")
        x_p = self.quantile(p)
        lorenz = self.incomplete_moment(1, x_p) / mean
        return lorenz, lorenz / p

    # ------------------------------------------------------------------
    # Residual life
    # ------------------------------------------------------------------

    def residual_moment(self, r: int, t: float) -> float:
        if r < 1:
            raise ValueError("moment order r must be >= 1")
        lo, hi = self.support
        t = float(t)
        if t >= hi:
            raise ValueError("t must lie below the upper support end")
        s_t = float(self.survival(t)) if t > lo else 1.0
        if s_t == 0.0:
            raise MassUnderflow(f"survival underflows to 0 at t={t:g}")
        v_t = float(self.baseline.odds(t)) if t > lo else 0.0
        num = self.expect(lambda x: (x - t) ** r, lower_t=v_t)
        return num / s_t

    def mrl(self, t: float) -> float:
        return self.residual_moment(1, t)

    def reversed_residual_moment(self, r: int, t: float) -> float:
        if r < 1:
            raise ValueError("moment order r must be >= 1")
        lo, hi = self.support
        t = float(t)
        if t <= lo:
            raise ValueError("t must lie above the lower support end")
        f_t = float(self.cdf(t))
        if f_t == 0.0:
            raise MassUnderflow(f"cdf underflows to 0 at t={t:g}")
        v_t = float(self.baseline.odds(t)) if t < hi else math.inf
        num = self.expect(lambda x: (t - x) ** r, upper_t=v_t)
        return num / f_t

    def mrrl(self, t: float) -> float:
        return self.reversed_residual_moment(1, t)

    # ------------------------------------------------------------------
    # Density shape
    # ------------------------------------------------------------------

    def _log_density_slope(self, x: float, step: float) -> float:
        return (float(self.log_pdf(x + step)) - float(self.log_pdf(x - step))) / (2.0 * step)

    def density_critical_points(self, lower: float, upper: float, grid: int = 512) -> list[float]:
        """Roots of d/dx ln f located by sign-change scan plus bisection on a
        central-difference slope; empty when the density is monotone."""
        lo, hi = self.support
        if not (lo < lower < upper < hi):
            raise ValueError("search interval must lie strictly inside the support")
        span = upper - lower
        step = max(1e-7 * span, 1e-10)
        xs = np.linspace(lower + 2 * step, upper - 2 * step, grid)
        slopes = np.array([self._log_density_slope(float(x), step) for x in xs])
        roots = []
        for x_a, x_b, s_a, s_b in zip(xs[:-1], xs[1:], slopes[:-1], slopes[1:]):
            if not (np.isfinite(s_a) and np.isfinite(s_b)) or s_a == 0.0 or s_a * s_b > 0.0:
                continue
            a, b, f_a = float(x_a), float(x_b), float(s_a)
            for _ in range(80):
                mid = 0.5 * (a + b)
                f_mid = self._log_density_slope(mid, step)
                if f_mid == 0.0:
                    a = b = mid
                    break
                if (f_mid > 0.0) == (f_a > 0.0):
                    a, f_a = mid, f_mid
                else:
                    b = mid
                if b - a <= 1e-13 * max(abs(a), 1.0):
                    break
            root = 0.5 * (a + b)
            if abs(self._log_density_slope(root, step)) <= 1e-8:
                roots.append(root)
        return roots
