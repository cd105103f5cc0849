"""Baseline distributions and their odds transforms."""

import math

import numpy as np
import pytest

from oddslife.baselines import (
    BASELINE_KINDS,
    BurrBaseline,
    ExponentialBaseline,
    ParetoBaseline,
    UniformBaseline,
    make_baseline,
    parse_baseline,
)


def all_cases():
    return [
        (UniformBaseline(theta=2.0), np.linspace(0.05, 1.9, 9)),
        (ExponentialBaseline(theta=1.5), np.linspace(0.05, 4.0, 9)),
        (ParetoBaseline(a=1.0, theta=2.0), np.linspace(1.05, 8.0, 9)),
        (BurrBaseline(alpha=2.0, theta=3.0), np.linspace(0.05, 3.0, 9)),
    ]


def test_registry_kinds_and_parameter_orders():
    assert set(BASELINE_KINDS) == {"uniform", "exponential", "pareto", "burrxii"}
    assert BASELINE_KINDS["uniform"][1] == ("theta",)
    assert BASELINE_KINDS["exponential"][1] == ("theta",)
    assert BASELINE_KINDS["pareto"][1] == ("a", "theta")
    assert BASELINE_KINDS["burrxii"][1] == ("alpha", "theta")


def test_supports():
    assert UniformBaseline(theta=2.0).support == (0.0, 2.0)
    assert ExponentialBaseline(theta=1.0).support == (0.0, math.inf)
    assert ParetoBaseline(a=0.5, theta=1.0).support == (0.5, math.inf)
    assert BurrBaseline(alpha=1.0, theta=1.0).support == (0.0, math.inf)


def test_cdf_spot_values():
    assert UniformBaseline(theta=2.0).cdf(1.0) == pytest.approx(0.5, rel=1e-14)
    assert ExponentialBaseline(theta=2.0).cdf(math.log(2.0) / 2.0) == pytest.approx(0.5, rel=1e-14)
    assert ParetoBaseline(a=1.0, theta=1.0).cdf(2.0) == pytest.approx(0.5, rel=1e-14)
    assert BurrBaseline(alpha=2.0, theta=3.0).cdf(1.0) == pytest.approx(0.875, rel=1e-14)


def test_odds_spot_values():
    assert UniformBaseline(theta=2.0).odds(1.0) == pytest.approx(1.0, rel=1e-14)
    assert ExponentialBaseline(theta=2.0).odds(math.log(2.0) / 2.0) == pytest.approx(1.0, rel=1e-13)
    assert ParetoBaseline(a=1.0, theta=2.0).odds(math.sqrt(2.0)) == pytest.approx(1.0, rel=1e-13)
    assert BurrBaseline(alpha=2.0, theta=3.0).odds(1.0) == pytest.approx(7.0, rel=1e-13)


@pytest.mark.parametrize("base,xs", all_cases(), ids=lambda c: getattr(c, "kind", ""))
def test_odds_is_cdf_over_sf(base, xs):
    v = base.odds(xs)
    ref = base.cdf(xs) / base.sf(xs)
    np.testing.assert_allclose(v, ref, rtol=1e-12)


@pytest.mark.parametrize("base,xs", all_cases(), ids=lambda c: getattr(c, "kind", ""))
def test_inverse_odds_round_trip(base, xs):
    np.testing.assert_allclose(base.inverse_odds(base.odds(xs)), xs, rtol=1e-10)
    # and through the odds in the other direction
    z = np.array([0.01, 0.5, 1.0, 7.0, 300.0])
    np.testing.assert_allclose(base.odds(base.inverse_odds(z)), z, rtol=1e-10)


@pytest.mark.parametrize("base,xs", all_cases(), ids=lambda c: getattr(c, "kind", ""))
def test_odds_derivative_is_pdf_over_sf_squared(base, xs):
    h = 1e-6
    for x in xs[1:-1]:
        fd = (base.odds(x + h) - base.odds(x - h)) / (2.0 * h)
        ref = base.pdf(x) / base.sf(x) ** 2
        assert fd == pytest.approx(ref, rel=1e-6)


@pytest.mark.parametrize("base,xs", all_cases(), ids=lambda c: getattr(c, "kind", ""))
def test_log_functions_match_logs(base, xs):
    np.testing.assert_allclose(base.log_pdf(xs), np.log(base.pdf(xs)), rtol=1e-12)
    np.testing.assert_allclose(base.log_sf(xs), np.log(base.sf(xs)), rtol=1e-12)


def test_exponential_odds_is_well_conditioned_near_zero():
    base = ExponentialBaseline(theta=1.0)
    x = 1e-9
    # expm1 keeps the quadratic correction; a naive exp(x)-1 would lose it
    assert base.odds(x) == pytest.approx(x + x * x / 2.0, rel=1e-12)
    x = 1e-4
    assert (base.odds(x) - x) == pytest.approx(x * x / 2.0, rel=1e-3)


def test_burr_odds_is_well_conditioned_near_zero():
    base = BurrBaseline(alpha=2.0, theta=3.0)
    x = 1e-8
    # odds = (1+x^2)^3 - 1 ~ 3 x^2
    assert base.odds(x) == pytest.approx(3.0 * x * x, rel=1e-9)


def test_pdf_outside_support_is_zero():
    assert UniformBaseline(theta=2.0).pdf(-0.5) == 0.0
    assert UniformBaseline(theta=2.0).pdf(2.0) == 0.0
    assert UniformBaseline(theta=2.0).pdf(0.0) == 0.5
    assert ParetoBaseline(a=1.0, theta=1.0).pdf(0.9) == 0.0
    assert ParetoBaseline(a=1.0, theta=1.0).pdf(1.0) == 1.0
    assert BurrBaseline(alpha=2.0, theta=1.0).pdf(-1.0) == 0.0
    assert ExponentialBaseline(theta=1.0).pdf(-0.1) == 0.0


def test_cdf_saturates_outside_support():
    assert UniformBaseline(theta=2.0).cdf(3.0) == 1.0
    assert UniformBaseline(theta=2.0).cdf(-1.0) == 0.0
    assert ParetoBaseline(a=1.0, theta=1.0).cdf(0.5) == 0.0


def test_odds_requires_interior_points():
    with pytest.raises(ValueError):
        UniformBaseline(theta=2.0).odds(2.0)
    with pytest.raises(ValueError):
        UniformBaseline(theta=2.0).odds(-0.1)
    with pytest.raises(ValueError):
        ExponentialBaseline(theta=1.0).odds(0.0)
    with pytest.raises(ValueError):
        ParetoBaseline(a=1.0, theta=1.0).odds(1.0)
    with pytest.raises(ValueError):
        ExponentialBaseline(theta=1.0).odds(math.nan)
    with pytest.raises(ValueError):
        BurrBaseline(alpha=1.0, theta=1.0).odds(np.array([0.5, -1.0]))


def test_inverse_odds_requires_positive_argument():
    base = ExponentialBaseline(theta=1.0)
    with pytest.raises(ValueError):
        base.inverse_odds(0.0)
    with pytest.raises(ValueError):
        base.inverse_odds(-1.0)
    with pytest.raises(ValueError):
        base.inverse_odds(math.nan)


def test_scalar_in_scalar_out():
    base = ParetoBaseline(a=1.0, theta=2.0)
    assert isinstance(base.cdf(2.0), float)
    assert isinstance(base.odds(2.0), float)
    out = base.cdf(np.array([2.0, 3.0]))
    assert isinstance(out, np.ndarray) and out.shape == (2,)


def test_params_round_trip_through_factory():
    for base, _ in all_cases():
        rebuilt = make_baseline(base.kind, **base.params())
        assert rebuilt == base


def test_parameter_validation():
    for bad in (0.0, -1.0, math.nan, math.inf):
        with pytest.raises(ValueError):
            UniformBaseline(theta=bad)
        with pytest.raises(ValueError):
            ExponentialBaseline(theta=bad)
        with pytest.raises(ValueError):
            ParetoBaseline(a=bad, theta=1.0)
        with pytest.raises(ValueError):
            BurrBaseline(alpha=1.0, theta=bad)


def test_make_baseline_validation():
    with pytest.raises(ValueError, match="unknown baseline kind"):
        make_baseline("weibull", theta=1.0)
    with pytest.raises(ValueError, match="takes parameters"):
        make_baseline("uniform", scale=1.0)
    with pytest.raises(ValueError, match="takes parameters"):
        make_baseline("pareto", a=1.0)


def test_parse_baseline():
    base = parse_baseline("uniform:theta=2")
    assert isinstance(base, UniformBaseline) and base.theta == 2.0
    base = parse_baseline("pareto:a=0.5,theta=1.5")
    assert isinstance(base, ParetoBaseline) and base.a == 0.5 and base.theta == 1.5
    base = parse_baseline("BurrXII:alpha=2,theta=3")
    assert isinstance(base, BurrBaseline)
    for bad in ("uniform", "uniform:", "uniform:theta", "uniform:theta=abc", "nope:theta=1"):
        with pytest.raises(ValueError):
            parse_baseline(bad)


def test_repr_mentions_kind_and_values():
    text = repr(ParetoBaseline(a=1.0, theta=2.0))
    assert "Pareto" in text and "theta=2" in text
