"""Command-line front end.

Verbs: fit, sample, eval, simulate, fitplot.  Results go to stdout (or
--out); diagnostics go to stderr.  Exit codes: 0 success, 1 malformed
input or unrecoverable error, 2 fit did not converge.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from .baselines import BASELINE_KINDS, parse_baseline
from .datasets import read_values
from .estimation import FitConfig, ModelSpec, fit_mle
from .family import MassUnderflow, OddsDistribution
from .generator import PRESETS, PolyExpGenerator, preset_coefficients
from .simulation import SimConfig, StudyCell, StudyReport, run_cell, run_table

__all__ = ["main"]


class _CliError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _CliError(message)


def _parse_family(text: str, *, need_rate: bool):
    """'preset' or 'preset:lam=value' -> (preset, coefficients, lam or None)."""
    preset, sep, rest = text.partition(":")
    coeffs = preset_coefficients(preset)
    lam = None
    if sep:
        key, eq, val = rest.partition("=")
        if key != "lam" or not eq:
            raise _CliError(f"family spec {text!r}: expected 'preset:lam=value'")
        try:
            lam = float(val)
        except ValueError:
            raise _CliError(f"family spec {text!r}: lam is not a number") from None
    if need_rate and lam is None:
        raise _CliError(f"family spec {text!r} must carry the generator rate: 'preset:lam=value'")
    if not need_rate and lam is not None:
        raise _CliError("the generator rate is estimated here; give the preset name alone")
    return preset, coeffs, lam


def _parse_grid(text: str) -> np.ndarray:
    parts = text.split(":")
    if len(parts) != 3:
        raise _CliError(f"grid {text!r}: expected 'lo:hi:count'")
    try:
        lo, hi, count = float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError:
        raise _CliError(f"grid {text!r}: expected numeric 'lo:hi:count'") from None
    if not (lo < hi) or count < 2:
        raise _CliError(f"grid {text!r}: need lo < hi and count >= 2")
    return np.linspace(lo, hi, count)


def _full_distribution(args) -> OddsDistribution:
    _, coeffs, lam = _parse_family(args.family, need_rate=True)
    try:
        baseline = parse_baseline(args.baseline)
    except ValueError as exc:
        raise _CliError(str(exc)) from None
    return OddsDistribution(PolyExpGenerator(coeffs, rate=lam), baseline)


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# ----------------------------------------------------------------------
# Verbs
# ----------------------------------------------------------------------


def _fit_config(args) -> FitConfig:
    fix_scale = True
    if getattr(args, "free", None):
        if args.free != "a":
            raise _CliError("--free accepts only 'a'")
        fix_scale = False
    if getattr(args, "fix", None):
        if args.fix != "a=min":
            raise _CliError("--fix accepts only 'a=min'")
        if not fix_scale:
            raise _CliError("--fix a=min and --free a are mutually exclusive")
        fix_scale = True
    return FitConfig(fix_pareto_scale=fix_scale)


def _run_fit(args):
    preset, coeffs, _ = _parse_family(args.family, need_rate=False)
    if args.baseline not in BASELINE_KINDS:
        known = ", ".join(sorted(BASELINE_KINDS))
        raise _CliError(f"unknown baseline {args.baseline!r} (fit estimates its parameters); known: {known}")
    data = read_values(args.data)
    model = ModelSpec(coeffs, args.baseline)
    result = fit_mle(model, data, _fit_config(args))
    return preset, model, result


def _cmd_fit(args) -> int:
    preset, _, result = _run_fit(args)
    payload = {
        "schema": 1,
        "command": "fit",
        "family": preset,
        "baseline": args.baseline,
        "params": {k: result.params[k] for k in sorted(result.params)},
        "log_likelihood": result.log_likelihood,
        "aic": result.aic,
        "bic": result.bic,
        "converged": result.converged,
        "iterations": result.iterations,
        "n_obs": result.n_obs,
        "n_params": result.n_params,
        "message": result.message,
    }
    _emit(json.dumps(payload, indent=2, sort_keys=True) + "\n", args.out)
    return 0 if result.converged else 2


def _cmd_sample(args) -> int:
    if args.count < 1:
        raise _CliError("sample count must be >= 1")
    dist = _full_distribution(args)
    rng = np.random.default_rng(args.seed)
    draws = dist.sample(rng, args.count)
    _emit("".join(f"{v:.17g}\n" for v in draws), args.out)
    return 0


_EVAL_FUNCS = ("pdf", "cdf", "sf", "hazard", "mrl", "mrrl")


def _cmd_eval(args) -> int:
    dist = _full_distribution(args)
    grid = _parse_grid(args.grid)
    func = {
        "pdf": dist.pdf,
        "cdf": dist.cdf,
        "sf": dist.survival,
        "hazard": dist.hazard,
        "mrl": dist.mrl,
        "mrrl": dist.mrrl,
    }[args.which]
    lines = ["x,value"]
    for x in grid:
        try:
            value = float(func(float(x)))
            lines.append(f"{x:.12g},{value:.12g}")
        except (MassUnderflow, ValueError, ArithmeticError):
            lines.append(f"{x:.12g},")
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def _cmd_simulate(args) -> int:
    sizes = tuple(int(s) for s in args.sizes.split(","))
    config = SimConfig()
    if args.table is not None:
        report = run_table(
            args.table,
            seed=args.seed,
            replications=args.reps,
            sample_sizes=sizes,
            config=config,
        )
    else:
        if not (args.family and args.baseline and args.n):
            raise _CliError("cell mode needs --family preset:lam=V, --baseline kind:params, --n")
        _, coeffs, lam = _parse_family(args.family, need_rate=True)
        try:
            baseline = parse_baseline(args.baseline)
        except ValueError as exc:
            raise _CliError(str(exc)) from None
        model = ModelSpec(coeffs, baseline.kind)
        true_params = {"lam": lam, **baseline.params()}
        cell = StudyCell(
            table="cell",
            panel="",
            model=model,
            true_params=true_params,
            n=args.n,
            replications=args.reps,
        )
        report = StudyReport(tuple(run_cell(cell, seed=args.seed, config=config)))
    _emit(report.to_json() + "\n" if args.json else report.to_csv(), args.out)
    return 0


def _cmd_fitplot(args) -> int:
    _, model, result = _run_fit(args)
    if not result.converged:
        print("fit did not converge; no plot data emitted", file=sys.stderr)
        return 2
    data = np.sort(read_values(args.data))
    n = data.size
    dist = model.distribution(result.params)
    ecdf = np.searchsorted(data, data, side="right") / n
    fitted_cdf = np.asarray(dist.cdf(data))
    fitted_pdf = np.asarray(dist.pdf(data))
    hist, edges = np.histogram(data, bins="sturges", density=True)
    bins = np.clip(np.digitize(data, edges) - 1, 0, hist.size - 1)
    lines = ["x,empirical_cdf,fitted_cdf,histogram_density,fitted_pdf"]
    for i in range(n):
        lines.append(
            f"{data[i]:.12g},{ecdf[i]:.12g},{fitted_cdf[i]:.12g},"
            f"{hist[bins[i]]:.12g},{fitted_pdf[i]:.12g}"
        )
    _emit("\n".join(lines) + "\n", args.out)
    return 0


# ----------------------------------------------------------------------
# Parser
# ----------------------------------------------------------------------


def _build_parser() -> _Parser:
    parser = _Parser(prog="oddslife", description=__doc__)
    sub = parser.add_subparsers(dest="verb", required=True)

    presets = ", ".join(sorted(PRESETS))

    p_fit = sub.add_parser("fit", help="maximum likelihood fit of a dataset")
    p_fit.add_argument("data", help="CSV path, one positive value per line")
    p_fit.add_argument("--family", required=True, help=f"generator preset ({presets})")
    p_fit.add_argument("--baseline", required=True, help="baseline kind (parameters are estimated)")
    p_fit.add_argument("--fix", help="hold a parameter fixed; only 'a=min' is supported")
    p_fit.add_argument("--free", help="release a fixed parameter; only 'a' is supported")
    p_fit.add_argument("--out", help="write output here instead of stdout")
    p_fit.set_defaults(func=_cmd_fit)

    p_sample = sub.add_parser("sample", help="draw random variates")
    p_sample.add_argument("count", type=int)
    p_sample.add_argument("--family", required=True, help="'preset:lam=value'")
    p_sample.add_argument("--baseline", required=True, help="e.g. 'exponential:theta=2'")
    p_sample.add_argument("--seed", type=int, default=0)
    p_sample.add_argument("--out", help="write output here instead of stdout")
    p_sample.set_defaults(func=_cmd_sample)

    p_eval = sub.add_parser("eval", help="evaluate a functional on a grid")
    p_eval.add_argument("which", choices=_EVAL_FUNCS)
    p_eval.add_argument("--family", required=True, help="'preset:lam=value'")
    p_eval.add_argument("--baseline", required=True, help="e.g. 'uniform:theta=2'")
    p_eval.add_argument("--grid", required=True, help="'lo:hi:count'")
    p_eval.add_argument("--out", help="write output here instead of stdout")
    p_eval.set_defaults(func=_cmd_eval)

    p_sim = sub.add_parser("simulate", help="Monte Carlo bias/MSE study")
    p_sim.add_argument("--table", type=int, help="standard study table id (2-5)")
    p_sim.add_argument("--family", help="cell mode: 'preset:lam=value'")
    p_sim.add_argument("--baseline", help="cell mode: baseline with parameters")
    p_sim.add_argument("--n", type=int, help="cell mode: sample size")
    p_sim.add_argument("--reps", type=int, default=1000)
    p_sim.add_argument("--sizes", default="20,40,100", help="table mode sample sizes")
    p_sim.add_argument("--seed", type=int, default=0)
    p_sim.add_argument("--json", action="store_true", help="emit JSON instead of CSV")
    p_sim.add_argument("--out", help="write output here instead of stdout")
    p_sim.set_defaults(func=_cmd_simulate)

    p_plot = sub.add_parser("fitplot", help="fit, then emit plot-ready fitted/empirical curves")
    p_plot.add_argument("data")
    p_plot.add_argument("--family", required=True)
    p_plot.add_argument("--baseline", required=True)
    p_plot.add_argument("--fix", help="only 'a=min'")
    p_plot.add_argument("--free", help="only 'a'")
    p_plot.add_argument("--out", help="write output here instead of stdout")
    p_plot.set_defaults(func=_cmd_fitplot)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except _CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
