"""Command-line front end.

Every subcommand is deterministic given its full flag set (seed and thread
count included): rerunning produces byte-identical files.  File outputs get
a JSON manifest sidecar recording the invocation and a sha256 checksum of
the payload.

Exit codes: 0 success, 2 usage error, 3 data error, 4 search/compute error.
"""

import argparse
import hashlib
import json
import math
import sys
from dataclasses import asdict, dataclass
from pathlib import Path

from . import __version__
from .efficiency import AreVariant, are, dominance_grid, efficacy_t, efficacy_w
from .errors import DataFileError, DomainError, MixrankError, SearchOverflowError
from .mixture import MixtureParams
from .power import (
    SimConfig,
    TestKind,
    empirical_are,
    min_sample_size,
    power_ratio_surface,
)
from .rank_tests import Sidedness, WilcoxonMode, exact_null_pmf, t_test, wilcoxon_test

_SIDEDNESS = {"greater": Sidedness.GREATER, "less": Sidedness.LESS, "two": Sidedness.TWO_SIDED}
_VARIANTS = {"derived": AreVariant.EFFICACY_DERIVED, "printed": AreVariant.AS_PRINTED}
_MODES = {
    "exact": WilcoxonMode.EXACT,
    "normal": WilcoxonMode.NORMAL_APPROX,
    "auto": WilcoxonMode.AUTO,
}


def _fmt(x: float) -> str:
    """Locale-proof decimal rendering at 9 significant digits."""
    return format(float(x), ".9g")


def _float_list(text: str) -> list[float]:
    try:
        values = [float(tok) for tok in text.split(",") if tok.strip() != ""]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"not a comma-separated float list: {text!r}") from exc
    if not values:
        raise argparse.ArgumentTypeError("empty value list")
    return values


def _int_list(text: str) -> list[int]:
    try:
        values = [int(tok) for tok in text.split(",") if tok.strip() != ""]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"not a comma-separated integer list: {text!r}") from exc
    if not values:
        raise argparse.ArgumentTypeError("empty value list")
    return values


def _float_pair(text: str) -> tuple[float, float]:
    values = _float_list(text)
    if len(values) != 2:
        raise argparse.ArgumentTypeError(f"expected LO,HI, got {text!r}")
    return values[0], values[1]


@dataclass(frozen=True)
class RunManifest:
    """Reproducibility sidecar written next to every file output."""

    subcommand: str
    parameters: dict
    master_seed: int
    parallelism: int
    tool_version: str
    output_checksum: str


def _write_output(path: str, payload: str, subcommand: str, args: argparse.Namespace) -> None:
    data = payload.encode("utf-8")
    out = Path(path)
    try:
        out.write_bytes(data)
    except OSError as exc:
        raise DataFileError(f"cannot write output file {path}: {exc}") from exc
    manifest = RunManifest(
        subcommand=subcommand,
        parameters={
            key: value
            for key, value in sorted(vars(args).items())
            if key not in ("func",) and not key.startswith("_")
        },
        master_seed=int(getattr(args, "seed", 0) or 0),
        parallelism=int(getattr(args, "threads", 1) or 1),
        tool_version=__version__,
        output_checksum="sha256:" + hashlib.sha256(data).hexdigest(),
    )
    out.with_name(out.name + ".manifest.json").write_text(
        json.dumps(asdict(manifest), indent=2, sort_keys=True, default=str) + "\n",
        encoding="utf-8",
    )


def _emit(args: argparse.Namespace, subcommand: str, payload: str) -> None:
    if getattr(args, "out", None):
        _write_output(args.out, payload, subcommand, args)
    else:
        sys.stdout.write(payload)


def _sim_config(args: argparse.Namespace) -> SimConfig:
    return SimConfig(
        alpha=args.alpha,
        sidedness=_SIDEDNESS[args.sided],
        nreps=args.nreps,
        master_seed=args.seed,
        max_parallelism=args.threads,
    )


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_are(args: argparse.Namespace) -> None:
    variant = _VARIANTS[args.variant]
    value = are(args.mu, args.sigma, variant)
    eff_w = efficacy_w(args.mu, args.sigma)
    eff_t = efficacy_t(args.mu, args.sigma)
    if args.json:
        payload = json.dumps(
            {
                "are": value,
                "variant": variant.value,
                "mu": args.mu,
                "sigma": args.sigma,
                "efficacy_w": asdict(eff_w),
                "efficacy_t": asdict(eff_t),
            },
            indent=2,
            sort_keys=True,
        ) + "\n"
    else:
        payload = (
            f"are {_fmt(value)}\n"
            f"variant {variant.value}\n"
            f"efficacy_w slope={_fmt(eff_w.slope)} null_sd={_fmt(eff_w.null_sd)} "
            f"efficacy={_fmt(eff_w.efficacy)}\n"
            f"efficacy_t slope={_fmt(eff_t.slope)} null_sd={_fmt(eff_t.null_sd)} "
            f"efficacy={_fmt(eff_t.efficacy)}\n"
        )
    _emit(args, "are", payload)


def cmd_grid(args: argparse.Namespace) -> None:
    grid = dominance_grid(
        args.mu_range, args.sigma_range, args.steps_mu, args.steps_sigma, _VARIANTS[args.variant]
    )
    lines = ["mu,sigma,are"]
    for i, mu in enumerate(grid.mu_axis):
        for j, sigma in enumerate(grid.sigma_axis):
            lines.append(f"{_fmt(mu)},{_fmt(sigma)},{_fmt(grid.values[i, j])}")
    _emit(args, "grid", "\n".join(lines) + "\n")


def cmd_curve(args: argparse.Namespace) -> None:
    config = _sim_config(args)
    rows = power_ratio_surface(args.mu, args.sigma, args.theta, args.n, config)
    lines = ["theta,n,power_w,se_w,power_t,se_t,ratio,flag"]
    for row in rows:
        flag = "near_null" if row.flagged else "ok"
        lines.append(
            f"{_fmt(row.theta)},{row.n},{_fmt(row.power_w)},{_fmt(row.se_w)},"
            f"{_fmt(row.power_t)},{_fmt(row.se_t)},{_fmt(row.ratio)},{flag}"
        )
    _emit(args, "curve", "\n".join(lines) + "\n")


def _power_estimate_dict(estimate) -> dict:
    return {
        "power": estimate.power,
        "mc_se": estimate.mc_se,
        "nreps": estimate.nreps,
        "test_kind": estimate.test_kind.value,
        "n_degenerate": estimate.n_degenerate,
    }


def _search_dict(result) -> dict:
    return {
        "n_min": result.n_min,
        "achieved_power_ci": list(result.achieved_power_ci),
        "search_trace": [
            {"n": n, "estimate": _power_estimate_dict(est)} for n, est in result.search_trace
        ],
    }


def cmd_nmin(args: argparse.Namespace) -> None:
    config = _sim_config(args)
    params = MixtureParams(args.theta, args.mu, args.sigma)
    try:
        result = min_sample_size(TestKind(args.test), params, args.power, config, args.n_cap)
    except SearchOverflowError as exc:
        partial = {
            "error": str(exc),
            "partial_trace": [
                {"n": n, "estimate": _power_estimate_dict(est)} for n, est in exc.partial
            ],
        }
        sys.stdout.write(json.dumps(partial, indent=2, sort_keys=True) + "\n")
        raise
    payload = json.dumps(_search_dict(result), indent=2, sort_keys=True) + "\n"
    _emit(args, "nmin", payload)


def cmd_emp_are(args: argparse.Namespace) -> None:
    config = _sim_config(args)
    try:
        rows = empirical_are(args.mu, args.sigma, args.theta, args.power, config, args.n_cap)
    except SearchOverflowError as exc:
        partial = {
            "error": str(exc),
            "rows": [_emp_are_row(row) for row in exc.partial],
        }
        sys.stdout.write(json.dumps(partial, indent=2, sort_keys=True) + "\n")
        raise
    payload = json.dumps(
        {"rows": [_emp_are_row(row) for row in rows]}, indent=2, sort_keys=True
    ) + "\n"
    _emit(args, "emp-are", payload)


def _emp_are_row(row) -> dict:
    return {
        "theta": row.theta,
        "n_t": row.n_t,
        "n_w": row.n_w,
        "ratio": row.ratio,
        "t_search": _search_dict(row.t_search),
        "w_search": _search_dict(row.w_search),
    }


def _read_data_file(path: str) -> list[float]:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise DataFileError(f"cannot read data file {path}: {exc}") from exc
    values = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        try:
            value = float(stripped)
        except ValueError:
            raise DataFileError(f"{path}: unparsable value at line {lineno}: {stripped!r}")
        if not math.isfinite(value):
            raise DataFileError(f"{path}: non-finite value at line {lineno}: {stripped!r}")
        values.append(value)
    if not values:
        raise DataFileError(f"{path}: no data values found")
    return values


def _outcome_dict(outcome) -> dict:
    return {
        "statistic": outcome.statistic,
        "n_effective": outcome.n_effective,
        "p_value": outcome.p_value,
        "sidedness": outcome.sidedness.value,
        "method": outcome.method.value,
    }


def cmd_test(args: argparse.Namespace) -> None:
    data = _read_data_file(args.data)
    sidedness = _SIDEDNESS[args.sided]
    outcomes = {}
    try:
        if args.test in ("t", "both"):
            outcomes["t"] = _outcome_dict(t_test(data, sidedness))
        if args.test in ("wilcoxon", "both"):
            outcomes["wilcoxon"] = _outcome_dict(
                wilcoxon_test(data, sidedness, _MODES[args.mode])
            )
    except MixrankError as exc:
        raise DataFileError(f"{args.data}: {exc}") from exc
    payload = json.dumps({"n": len(data), "outcomes": outcomes}, indent=2, sort_keys=True) + "\n"
    _emit(args, "test", payload)


def cmd_null_dist(args: argparse.Namespace) -> None:
    pmf = exact_null_pmf(args.n)
    lines = ["k,count,probability"]
    for k, count in enumerate(pmf.counts):
        lines.append(f"{k},{count},{_fmt(pmf.probability(k))}")
    _emit(args, "null-dist", "\n".join(lines) + "\n")


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def _add_sim_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--alpha", type=float, default=0.05, help="significance level")
    sub.add_argument(
        "--sided", choices=sorted(_SIDEDNESS), default="greater", help="alternative direction"
    )
    sub.add_argument("--nreps", type=int, default=10_000, help="Monte Carlo replications")
    sub.add_argument("--seed", type=int, default=0, help="master seed")
    sub.add_argument("--threads", type=int, default=1, help="worker threads")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mixrank",
        description=(
            "Compare the one-sample t test and the Wilcoxon signed-rank test "
            "under contaminated-Gaussian alternatives."
        ),
    )
    parser.add_argument("--version", action="version", version=f"mixrank {__version__}")
    subs = parser.add_subparsers(dest="subcommand", required=True)

    p = subs.add_parser("are", help="closed-form relative efficiency at one (mu, sigma)")
    p.add_argument("--mu", type=float, required=True)
    p.add_argument("--sigma", type=float, required=True)
    p.add_argument("--variant", choices=sorted(_VARIANTS), default="derived")
    p.add_argument("--json", action="store_true", help="emit JSON instead of text")
    p.add_argument("--out", help="write to file (with manifest) instead of stdout")
    p.set_defaults(func=cmd_are)

    p = subs.add_parser("grid", help="relative-efficiency CSV over a (mu, sigma) lattice")
    p.add_argument("--mu-range", type=_float_pair, required=True, metavar="LO,HI")
    p.add_argument("--sigma-range", type=_float_pair, required=True, metavar="LO,HI")
    p.add_argument("--steps-mu", type=int, default=50)
    p.add_argument("--steps-sigma", type=int, default=50)
    p.add_argument("--variant", choices=sorted(_VARIANTS), default="derived")
    p.add_argument("--out", help="output CSV path (default stdout)")
    p.set_defaults(func=cmd_grid)

    p = subs.add_parser(
        "curve",
        aliases=["power"],
        help="Monte Carlo power-ratio CSV over a (theta, n) lattice",
    )
    p.add_argument("--mu", type=float, required=True)
    p.add_argument("--sigma", type=float, required=True)
    p.add_argument("--theta", type=_float_list, required=True, metavar="T1,T2,...")
    p.add_argument("--n", type=_int_list, required=True, metavar="N1,N2,...")
    _add_sim_flags(p)
    p.add_argument("--out", help="output CSV path (default stdout)")
    p.set_defaults(func=cmd_curve)

    p = subs.add_parser("nmin", help="minimal sample size reaching a target power")
    p.add_argument("--test", choices=[k.value for k in TestKind], required=True)
    p.add_argument("--mu", type=float, required=True)
    p.add_argument("--sigma", type=float, required=True)
    p.add_argument("--theta", type=float, required=True)
    p.add_argument("--power", type=float, required=True, help="target power")
    _add_sim_flags(p)
    p.add_argument("--n-cap", type=int, default=1_000_000, help="search budget on n")
    p.add_argument("--out", help="output JSON path (default stdout)")
    p.set_defaults(func=cmd_nmin)

    p = subs.add_parser(
        "emp-are", help="empirical efficiency: sample-size ratios along a theta schedule"
    )
    p.add_argument("--mu", type=float, required=True)
    p.add_argument("--sigma", type=float, required=True)
    p.add_argument(
        "--theta", type=_float_list, required=True, metavar="T1,T2,...",
        help="decreasing schedule of mixing proportions",
    )
    p.add_argument("--power", type=float, required=True, help="target power")
    _add_sim_flags(p)
    p.add_argument("--n-cap", type=int, default=1_000_000, help="search budget on n")
    p.add_argument("--out", help="output JSON path (default stdout)")
    p.set_defaults(func=cmd_emp_are)

    p = subs.add_parser("test", help="run the tests on a newline-delimited data file")
    p.add_argument("--data", required=True, help="path to the data file")
    p.add_argument("--test", choices=["t", "wilcoxon", "both"], default="both")
    p.add_argument("--sided", choices=sorted(_SIDEDNESS), default="two")
    p.add_argument("--mode", choices=sorted(_MODES), default="auto")
    p.add_argument("--out", help="output JSON path (default stdout)")
    p.set_defaults(func=cmd_test)

    p = subs.add_parser("null-dist", help="exact signed-rank null distribution as CSV")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out", help="output CSV path (default stdout)")
    p.set_defaults(func=cmd_null_dist)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except DataFileError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except SearchOverflowError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except DomainError as exc:
        # Bad flag values are usage errors.
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except MixrankError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    return 0


def entrypoint() -> None:
    sys.exit(main())
