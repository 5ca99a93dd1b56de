"""Command-line front end.

Subcommands: ``synth`` (write a synthetic signal file), ``estimate``
(frequency + amplitudes + variances as JSON), ``periodogram`` (spectral CSV
over the Fourier grid), ``simulate`` (Monte Carlo summary CSV), ``asymvar``
(closed-form variance report).

Exit codes: 0 success, 1 runtime or numerical failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .asymptotics import asymptotic_variances
from .errors import FundfreqError
from .linear import lse_linear, residuals
from .mnr import MnrConfig, estimate_fundamental
from .montecarlo import (
    MA1_NOISE_COEFFS,
    MODEL1,
    MODEL2,
    ExperimentSpec,
    run_experiment,
    summary_csv_lines,
)
from .signal import (
    HarmonicModel,
    LinearProcessSpec,
    mean_correct,
    read_signal,
    synthesize,
    write_signal,
)
from .spectrum import fourier_grid, harmonic_criterion_qn, periodogram

_PRESETS = {"1": MODEL1, "2": MODEL2}


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be a positive integer, got {text}")
    return value


def _positive_float(text: str) -> float:
    value = float(text)
    if not value > 0:
        raise argparse.ArgumentTypeError(f"must be positive, got {text}")
    return value


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad integer list {text!r}") from exc


def _float_list(text: str) -> tuple[float, ...]:
    try:
        return tuple(float(x) for x in text.split(","))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad number list {text!r}") from exc


def _noise_spec(text: str) -> tuple[float, ...]:
    """Parse --noise: 'iid' or 'ma:<a0,a1,...>'."""
    if text == "iid":
        return (1.0,)
    if text.startswith("ma:"):
        return _float_list(text[3:])
    raise argparse.ArgumentTypeError(f"expected 'iid' or 'ma:<coeffs>', got {text!r}")


def _model_from_args(args) -> HarmonicModel:
    model = getattr(args, "model", None)
    if model is not None:
        if model in _PRESETS:
            return _PRESETS[model]
        return _load_model_file(model)
    if getattr(args, "model_file", None):
        return _load_model_file(args.model_file)
    return _PRESETS[args.preset]


def _load_model_file(path: str) -> HarmonicModel:
    with open(path) as fh:
        raw = json.load(fh)
    return HarmonicModel(
        p=int(raw["p"]),
        lam=float(raw["lambda"]),
        amplitudes=tuple((float(a), float(b)) for a, b in raw["amplitudes"]),
    )


def _threads(args) -> int:
    if args.threads is not None:
        return args.threads
    env = os.environ.get("FUNDFREQ_THREADS")
    return int(env) if env else 1


def cmd_synth(args) -> int:
    model = _model_from_args(args)
    noise = None
    if args.noise is not None:
        noise = LinearProcessSpec(args.noise, args.sigma2)
    sig = synthesize(model, args.n, noise, args.seed, sample_rate=args.sample_rate)
    write_signal(sig, args.out)
    return 0


def cmd_estimate(args) -> int:
    sig = read_signal(args.input)
    if args.mean_correct:
        sig = mean_correct(sig)
    config = MnrConfig(
        step_factor=args.step_factor,
        tol=args.tol,
        max_iter=args.max_iter,
        subsample_exponent=args.subsample_exponent,
        init_mode=args.init_mode,
    )
    lam_hat, trace = estimate_fundamental(sig, args.p, config)
    amps = lse_linear(sig, lam_hat, args.p)
    resid = residuals(sig, lam_hat, amps)
    noise_coeffs = args.noise if args.noise is not None else (1.0,)
    # innovation variance from the residuals: var(e) = sigma2 * sum a(k)^2
    ssq = float(sum(c * c for c in noise_coeffs))
    sigma2_hat = float(resid.var()) / ssq
    model_hat = HarmonicModel(args.p, lam_hat, tuple(amps))
    # a perfect noiseless fit gives sigma2_hat == 0; keep the spec valid
    asym = asymptotic_variances(
        model_hat, LinearProcessSpec(noise_coeffs, max(sigma2_hat, 1e-300)), sig.n
    )
    report = {
        "lambda_hat": lam_hat,
        "amplitudes": [list(ab) for ab in amps],
        "residual_summary": {
            "n": sig.n,
            "mean": float(resid.mean()),
            "variance": float(resid.var()),
            "sigma2_hat": sigma2_hat,
        },
        "asym": asym.as_dict(),
        "trace": {
            "status": trace.status,
            "records": [
                {
                    "iteration": r.iteration,
                    "lambda": r.lam,
                    "sample_size_used": r.sample_size_used,
                    "g_value": r.g_value,
                    "correction": r.correction,
                }
                for r in trace.records
            ],
        },
        "config": {
            "p": args.p,
            "step_factor": config.step_factor,
            "tol": config.tol,
            "max_iter": config.max_iter,
            "subsample_exponent": config.subsample_exponent,
            "init_mode": config.init_mode,
            "mean_correct": bool(args.mean_correct),
            "noise_coeffs": list(noise_coeffs),
        },
    }
    if args.residuals_out:
        with open(args.residuals_out, "w") as fh:
            fh.write("\n".join(repr(float(v)) for v in resid) + "\n")
    text = json.dumps(report, indent=2 if args.json else None)
    _write_text(args.out, text)
    return 0


def cmd_periodogram(args) -> int:
    sig = read_signal(args.input)
    grid = fourier_grid(sig.n, args.p)
    lines = ["lambda,I,Q_N"]
    for lam in grid:
        i_val = periodogram(sig, float(lam))
        q_val = harmonic_criterion_qn(sig, float(lam), args.p)
        lines.append(f"{lam:.5e},{i_val:.5e},{q_val:.5e}")
    _write_text(args.out, "\n".join(lines))
    return 0


def cmd_simulate(args) -> int:
    model = _model_from_args(args)
    spec = ExperimentSpec(
        model=model,
        noise_coeffs=args.noise,
        sample_sizes=args.n,
        sigma2_values=args.sigma2,
        replications=args.reps,
        master_seed=args.seed,
    )
    rows = run_experiment(spec, threads=_threads(args))
    _write_text(args.out, "\n".join(summary_csv_lines(rows)))
    return 0


def cmd_asymvar(args) -> int:
    model = _model_from_args(args)
    report = asymptotic_variances(model, LinearProcessSpec(args.noise, args.sigma2), args.n)
    if args.csv:
        text = (
            "n,sigma2,beta_star,delta_g,var_lse,var_mnr\n"
            f"{report.n},{report.sigma2:.5e},{report.beta_star:.5e},"
            f"{report.delta_g:.5e},{report.var_lse:.5e},{report.var_mnr:.5e}"
        )
    else:
        text = json.dumps(report.as_dict(), indent=2)
    _write_text(args.out, text)
    return 0


def _write_text(path: str | None, text: str) -> None:
    if path:
        with open(path, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _add_model_flags(parser: argparse.ArgumentParser, with_model: bool = False) -> None:
    group = parser.add_mutually_exclusive_group()
    group.add_argument("--preset", choices=sorted(_PRESETS), default="1",
                       help="built-in benchmark model (default 1)")
    group.add_argument("--model-file", help="JSON file with p, lambda, amplitudes")
    if with_model:
        group.add_argument("--model",
                           help="preset name (1|2) or a model JSON file path")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fundfreq",
        description="Fundamental frequency estimation for harmonic signals",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_synth = sub.add_parser("synth", help="write a synthetic signal file")
    _add_model_flags(p_synth)
    p_synth.add_argument("--n", type=_positive_int, required=True)
    p_synth.add_argument("--noise", type=_noise_spec, default=None,
                         help="'iid' or 'ma:<a0,a1,...>' (omit for noiseless)")
    p_synth.add_argument("--sigma2", type=_positive_float, default=1.0)
    p_synth.add_argument("--seed", type=int, default=0)
    p_synth.add_argument("--sample-rate", type=_positive_float, default=None)
    p_synth.add_argument("--out", required=True)
    p_synth.set_defaults(func=cmd_synth)

    p_est = sub.add_parser("estimate", help="estimate frequency and amplitudes")
    p_est.add_argument("--input", required=True)
    p_est.add_argument("--p", type=_positive_int, required=True)
    p_est.add_argument("--tol", type=_positive_float, default=1e-7)
    p_est.add_argument("--max-iter", type=_positive_int, default=50)
    p_est.add_argument("--step-factor", type=_positive_float, default=0.25)
    p_est.add_argument("--init-mode", choices=["plain", "harmonic_sum"],
                       default="harmonic_sum")
    p_est.add_argument("--subsample-exponent", type=_positive_float, default=6.0 / 7.0)
    p_est.add_argument("--mean-correct", action="store_true")
    p_est.add_argument("--noise", type=_noise_spec, default=None,
                       help="noise shape for the variance report (default iid)")
    p_est.add_argument("--json", action="store_true", help="pretty-print the report")
    p_est.add_argument("--residuals-out", default=None,
                       help="also write residuals, one value per line")
    p_est.add_argument("--out", default=None)
    p_est.set_defaults(func=cmd_estimate)

    p_per = sub.add_parser("periodogram", help="spectral CSV over the Fourier grid")
    p_per.add_argument("--input", required=True)
    p_per.add_argument("--p", type=_positive_int, default=1)
    p_per.add_argument("--out", default=None)
    p_per.set_defaults(func=cmd_periodogram)

    p_sim = sub.add_parser("simulate", help="Monte Carlo summary CSV")
    _add_model_flags(p_sim, with_model=True)
    p_sim.add_argument("--noise", type=_noise_spec, default=MA1_NOISE_COEFFS,
                       help="'iid' or 'ma:<a0,a1,...>' (default ma:1,0.5)")
    p_sim.add_argument("--n", type=_int_list, required=True,
                       help="comma-separated sample sizes")
    p_sim.add_argument("--sigma2", type=_float_list, required=True,
                       help="comma-separated innovation variances")
    p_sim.add_argument("--reps", type=_positive_int, default=500)
    p_sim.add_argument("--seed", type=int, default=0)
    p_sim.add_argument("--threads", type=_positive_int, default=None,
                       help="worker threads (default FUNDFREQ_THREADS or 1)")
    p_sim.add_argument("--out", default=None)
    p_sim.set_defaults(func=cmd_simulate)

    p_av = sub.add_parser("asymvar", help="closed-form asymptotic variances")
    _add_model_flags(p_av)
    p_av.add_argument("--noise", type=_noise_spec, default=(1.0,),
                      help="'iid' or 'ma:<a0,a1,...>' (default iid)")
    p_av.add_argument("--sigma2", type=_positive_float, required=True)
    p_av.add_argument("--n", type=_positive_int, required=True)
    p_av.add_argument("--csv", action="store_true", help="emit a CSV row instead of JSON")
    p_av.add_argument("--out", default=None)
    p_av.set_defaults(func=cmd_asymvar)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except FileNotFoundError as exc:
        print(f"fundfreq: file not found: {exc.filename}", file=sys.stderr)
        return 2
    except FundfreqError as exc:
        print(f"fundfreq: {exc}", file=sys.stderr)
        return 1
    except (OSError, json.JSONDecodeError, KeyError) as exc:
        print(f"fundfreq: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
