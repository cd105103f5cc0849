"""Closed-form reference values against the numeric routines they shadow."""

import math

import pytest

from oddslife import OddsDistribution, OleParams, OlpParams, from_preset, make_baseline
from oddslife.closedforms import (
    ole_incomplete_moment,
    ole_mean,
    ole_mrl,
    ole_mrrl,
    ole_renyi,
    ole_shannon,
    ole_stress_strength,
    olp_incomplete_moment,
    olp_mean,
    olp_mrl,
    olp_mrrl,
    olp_renyi,
    olp_shannon,
    olp_stress_strength,
)

OLE_GRID = (OleParams(0.5, 1.0), OleParams(1.0, 1.0), OleParams(2.0, 1.5))
OLP_GRID = (OlpParams(0.5, 1.0, 1.0), OlpParams(1.0, 1.0, 1.0), OlpParams(1.5, 2.0, 0.8))


def ole_dist(p: OleParams) -> OddsDistribution:
    return OddsDistribution(
        from_preset("lindley", p.lam), make_baseline("exponential", theta=p.theta)
    )


def olp_dist(p: OlpParams) -> OddsDistribution:
    return OddsDistribution(
        from_preset("lindley", p.lam), make_baseline("pareto", a=p.a, theta=p.theta)
    )


# ----------------------------------------------------------------------
# Agreement with quadrature
# ----------------------------------------------------------------------


@pytest.mark.parametrize("p", OLE_GRID)
def test_ole_mean_matches_quadrature(p):
    assert ole_mean(p) == pytest.approx(ole_dist(p).raw_moment(1), abs=1e-6)


@pytest.mark.parametrize("p", OLP_GRID)
def test_olp_mean_matches_quadrature(p):
    assert olp_mean(p) == pytest.approx(olp_dist(p).raw_moment(1), abs=1e-6)


@pytest.mark.parametrize("p", OLE_GRID)
@pytest.mark.parametrize("beta", (0.5, 2.0, 3.0))
def test_ole_renyi_matches_quadrature(p, beta):
    assert ole_renyi(p, beta) == pytest.approx(ole_dist(p).renyi_entropy(beta), abs=1e-6)


@pytest.mark.parametrize("p", OLP_GRID)
@pytest.mark.parametrize("beta", (2.0, 3.0))
def test_olp_renyi_matches_quadrature(p, beta):
    assert olp_renyi(p, beta) == pytest.approx(olp_dist(p).renyi_entropy(beta), abs=1e-6)


@pytest.mark.parametrize("p", OLE_GRID)
def test_ole_shannon_matches_quadrature(p):
    assert ole_shannon(p) == pytest.approx(ole_dist(p).shannon_entropy(), abs=1e-6)


@pytest.mark.parametrize("p", OLP_GRID)
def test_olp_shannon_matches_quadrature(p):
    assert olp_shannon(p) == pytest.approx(olp_dist(p).shannon_entropy(), abs=1e-6)


@pytest.mark.parametrize("lams", ((1.0, 2.0), (0.5, 1.5), (2.0, 0.7)))
def test_ole_stress_strength_matches_quadrature(lams):
    strength, stress = OleParams(lams[0], 1.0), OleParams(lams[1], 1.0)
    ref = ole_dist(strength).stress_strength(ole_dist(stress))
    assert ole_stress_strength(strength, stress) == pytest.approx(ref, abs=1e-6)


@pytest.mark.parametrize(
    "strength,stress",
    (
        (OlpParams(1.0, 1.0, 1.0), OlpParams(2.0, 1.0, 1.0)),
        (OlpParams(0.5, 2.0, 1.0), OlpParams(1.5, 2.0, 1.0)),
        (OlpParams(1.0, 1.0, 1.0), OlpParams(1.0, 1.0, 0.5)),
    ),
)
def test_olp_stress_strength_matches_quadrature(strength, stress):
    ref = olp_dist(strength).stress_strength(olp_dist(stress))
    assert olp_stress_strength(strength, stress) == pytest.approx(ref, abs=1e-6)


@pytest.mark.parametrize("p", OLE_GRID)
@pytest.mark.parametrize("r,t", ((1, 1.0), (2, 1.0), (1, 3.0)))
def test_ole_incomplete_moment_matches_quadrature(p, r, t):
    assert ole_incomplete_moment(p, r, t) == pytest.approx(
        ole_dist(p).incomplete_moment(r, t), abs=1e-6
    )


@pytest.mark.parametrize("p", OLP_GRID)
@pytest.mark.parametrize("r,t", ((1, 2.0), (2, 2.0), (1, 4.0)))
def test_olp_incomplete_moment_matches_quadrature(p, r, t):
    assert olp_incomplete_moment(p, r, t) == pytest.approx(
        olp_dist(p).incomplete_moment(r, t), abs=1e-6
    )


@pytest.mark.parametrize("p", OLE_GRID)
@pytest.mark.parametrize("t", (0.5, 1.0, 2.0))
def test_ole_mrl_matches_quadrature(p, t):
    assert ole_mrl(p, t) == pytest.approx(ole_dist(p).mrl(t), abs=1e-6)


@pytest.mark.parametrize("p", OLP_GRID)
@pytest.mark.parametrize("t", (1.5, 2.0, 3.0))
def test_olp_mrl_matches_quadrature(p, t):
    assert olp_mrl(p, t) == pytest.approx(olp_dist(p).mrl(t), abs=1e-6)


@pytest.mark.parametrize("p", OLE_GRID)
@pytest.mark.parametrize("t", (0.5, 1.0, 2.0))
def test_ole_mrrl_matches_quadrature(p, t):
    assert ole_mrrl(p, t) == pytest.approx(ole_dist(p).mrrl(t), abs=1e-6)


@pytest.mark.parametrize("p", OLP_GRID)
@pytest.mark.parametrize("t", (1.5, 2.0, 3.0))
def test_olp_mrrl_matches_quadrature(p, t):
    assert olp_mrrl(p, t) == pytest.approx(olp_dist(p).mrrl(t), abs=1e-6)


# ----------------------------------------------------------------------
# Exact spot values and structural identities
# ----------------------------------------------------------------------


def test_mean_spot_value():
    assert ole_mean(OleParams(1.0, 1.0)) == pytest.approx(0.798173681161597, abs=1e-12)


def test_renyi_spot_value():
    assert ole_renyi(OleParams(1.0, 1.0), 2.0) == pytest.approx(-math.log(38.0 / 64.0), abs=1e-12)


@pytest.mark.parametrize("lam", (0.5, 1.0, 3.0))
def test_equal_parameter_reliability_is_exactly_half(lam):
    p = OleParams(lam, 1.0)
    assert ole_stress_strength(p, p) == pytest.approx(0.5, abs=1e-12)
    q = OlpParams(lam, 1.0, 1.0)
    assert olp_stress_strength(q, q) == pytest.approx(0.5, abs=1e-12)


def test_stress_strength_spot_value():
    assert ole_stress_strength(OleParams(1.0, 1.0), OleParams(2.0, 1.0)) == pytest.approx(
        58.0 / 81.0, abs=1e-12
    )


def test_entropy_scale_shifts():
    # The baseline rate scales the variable, so entropies shift by -ln theta.
    base = ole_shannon(OleParams(1.0, 1.0))
    assert ole_shannon(OleParams(1.0, 2.0)) == pytest.approx(base - math.log(2.0), abs=1e-10)
    base2 = ole_renyi(OleParams(1.0, 1.0), 2.0)
    assert ole_renyi(OleParams(1.0, 2.0), 2.0) == pytest.approx(base2 - math.log(2.0), abs=1e-10)


def test_mrl_at_the_support_start():
    for p in OLE_GRID:
        assert ole_mrl(p, 0.0) == pytest.approx(ole_mean(p), abs=1e-10)
    for p in OLP_GRID:
        # the support starts at a, so the expected remaining life is mean - a
        assert olp_mrl(p, p.a) == pytest.approx(olp_mean(p) - p.a, abs=1e-10)


def test_mrrl_vanishes_at_the_lower_end():
    assert ole_mrrl(OleParams(1.0, 1.0), 1e-6) < 1e-5
    assert olp_mrrl(OlpParams(1.0, 1.0, 1.0), 1.0 + 1e-6) < 1e-5


def test_incomplete_moment_limits():
    p = OleParams(1.0, 1.0)
    assert ole_incomplete_moment(p, 1, 0.0) == 0.0
    assert ole_incomplete_moment(p, 1, 40.0) == pytest.approx(ole_mean(p), abs=1e-9)
    q = OlpParams(1.0, 1.0, 1.0)
    assert olp_incomplete_moment(q, 1, 1.0) == 0.0
    assert olp_incomplete_moment(q, 1, 1e6) == pytest.approx(olp_mean(q), abs=1e-6)


# ----------------------------------------------------------------------
# Validation
# ----------------------------------------------------------------------


def test_param_validation():
    for bad in (0.0, -1.0, math.nan):
        with pytest.raises(ValueError):
            OleParams(bad, 1.0)
        with pytest.raises(ValueError):
            OleParams(1.0, bad)
        with pytest.raises(ValueError):
            OlpParams(1.0, bad, 1.0)


def test_renyi_beta_validation():
    p = OleParams(1.0, 1.0)
    for beta in (0.0, 1.0, -0.5):
        with pytest.raises(ValueError):
            ole_renyi(p, beta)
        with pytest.raises(ValueError):
            olp_renyi(OlpParams(1.0, 1.0, 1.0), beta)


def test_stress_strength_guards():
    with pytest.raises(ValueError, match="equal baseline"):
        ole_stress_strength(OleParams(1.0, 1.0), OleParams(1.0, 2.0))
    with pytest.raises(ValueError, match="equal baseline"):
        olp_stress_strength(OlpParams(1.0, 1.0, 1.0), OlpParams(1.0, 2.0, 1.0))
    with pytest.raises(ValueError, match="stress scale"):
        olp_stress_strength(OlpParams(1.0, 1.0, 1.0), OlpParams(1.0, 1.0, 2.0))


def test_incomplete_moment_order_validation():
    with pytest.raises(ValueError):
        ole_incomplete_moment(OleParams(1.0, 1.0), 3, 1.0)
    with pytest.raises(ValueError):
        olp_incomplete_moment(OlpParams(1.0, 1.0, 1.0), 0, 2.0)


def test_mrl_domain_validation():
    with pytest.raises(ValueError):
        ole_mrl(OleParams(1.0, 1.0), -0.5)
    with pytest.raises(ValueError):
        olp_mrl(OlpParams(1.0, 1.0, 1.0), 0.5)
    with pytest.raises(ValueError):
        ole_mrrl(OleParams(1.0, 1.0), 0.0)
    with pytest.raises(ValueError):
        olp_mrrl(OlpParams(1.0, 1.0, 1.0), 1.0)
