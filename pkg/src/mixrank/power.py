"""Deterministic parallel Monte Carlo power lab.

Estimates finite-sample power and size of the two tests under the mixture
alternative, maps power-ratio surfaces over (theta, n) lattices, searches
minimal sample sizes for a target power, and approximates the asymptotic
relative efficiency as the ratio of minimal sample sizes along a mixing
proportion schedule shrinking toward the null.

Reproducibility contract: every replication's sample depends only on
(master seed, simulation cell, replication index), and per-cell results are
integer rejection counts, so output is bit-identical for any worker count.
Both tests are always evaluated on the same simulated samples, which pairs
the comparison and sharply reduces the Monte Carlo noise of power ratios.
"""

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import DomainError, InsufficientDataError, SearchOverflowError
from .mixture import MixtureParams, sample as draw_sample
from .rank_tests import (
    AUTO_EXACT_MAX_N,
    Sidedness,
    WilcoxonMode,
    _t_p_value,
    _wilcoxon_p_exact,
    _wilcoxon_p_normal,
    wilcoxon_test,
)
from .streams import replication_rng, stream_key

_CHUNK = 4096
_Z99 = 2.3263478740408408  # 99% standard normal quantile
_NMIN_SLACK = 0.01


class TestKind(Enum):
    __test__ = False  # not a pytest class, despite the name

    T = "t"
    WILCOXON = "wilcoxon"


@dataclass(frozen=True)
class SimConfig:
    """Knobs of one Monte Carlo experiment.

    ``sidedness`` defaults to the one-sided greater alternative, appropriate
    when the contaminating component has positive mean (both statistics
    shift upward); it is configurable everywhere.
    """

    alpha: float = 0.05
    sidedness: Sidedness = Sidedness.GREATER
    nreps: int = 10_000
    master_seed: int = 0
    max_parallelism: int = 1

    def __post_init__(self):
        if not 0.0 < self.alpha < 1.0:
            raise DomainError(f"significance level must lie in (0, 1), got {self.alpha}")
        if self.nreps < 1:
            raise DomainError(f"replication count must be positive, got {self.nreps}")
        if self.max_parallelism < 1:
            raise DomainError(f"parallelism must be positive, got {self.max_parallelism}")


@dataclass(frozen=True)
class PowerEstimate:
    """Monte Carlo rejection rate and its binomial standard error."""

    power: float
    mc_se: float
    nreps: int
    test_kind: TestKind
    n_degenerate: int = 0


@dataclass(frozen=True)
class SampleSizeResult:
    """Outcome of a minimal-sample-size search."""

    n_min: int
    achieved_power_ci: tuple[float, float]
    search_trace: list[tuple[int, PowerEstimate]]


@dataclass(frozen=True)
class SurfacePoint:
    """One (theta, n) cell of a power-ratio surface."""

    theta: float
    n: int
    power_w: float
    se_w: float
    power_t: float
    se_t: float
    ratio: float
    flagged: bool


@dataclass(frozen=True)
class EmpiricalArePoint:
    """Minimal sample sizes of both tests at one mixing proportion."""

    theta: float
    n_t: int
    n_w: int
    ratio: float
    t_search: SampleSizeResult
    w_search: SampleSizeResult


# ---------------------------------------------------------------------------
# vectorized per-chunk test evaluation
# ---------------------------------------------------------------------------

def _ordinal_ranks_rows(a: np.ndarray) -> np.ndarray:
    """Ranks 1..n along each row; rows must be tie-free."""
    order = np.argsort(a, axis=1)
    ranks = np.empty_like(order)
    rows = np.arange(a.shape[0])[:, None]
    ranks[rows, order] = np.arange(1, a.shape[1] + 1)[None, :]
    return ranks


def _t_rejections(x: np.ndarray, alpha: float, sidedness: Sidedness) -> tuple[int, int]:
    n = x.shape[1]
    mean = x.mean(axis=1)
    sd = x.std(axis=1, ddof=1)
    degenerate = sd == 0.0
    stat = np.zeros_like(mean)
    ok = ~degenerate
    stat[ok] = mean[ok] / (sd[ok] / math.sqrt(n))
    p = _t_p_value(stat, n - 1, sidedness)
    reject = ok & (p <= alpha)
    return int(reject.sum()), int(degenerate.sum())


def _wilcoxon_rejections(x: np.ndarray, alpha: float, sidedness: Sidedness) -> tuple[int, int]:
    n = x.shape[1]
    abs_x = np.abs(x)
    zero_rows = (x == 0.0).any(axis=1)
    sorted_abs = np.sort(abs_x, axis=1)
    tie_rows = (np.diff(sorted_abs, axis=1) == 0.0).any(axis=1)
    slow = zero_rows | tie_rows

    rejections = 0
    degenerate = 0
    fast = ~slow
    if fast.any():
        rows = x[fast]
        ranks = _ordinal_ranks_rows(np.abs(rows))
        w = np.where(rows > 0.0, ranks, 0).sum(axis=1)
        if n <= AUTO_EXACT_MAX_N:
            p = _wilcoxon_p_exact(w, n, sidedness)
        else:
            p = _wilcoxon_p_normal(w, n, sidedness)
        rejections += int((p <= alpha).sum())

    # Zeros or tied magnitudes have probability zero under the mixture but
    # are handled exactly anyway via the scalar test.
    for idx in np.nonzero(slow)[0]:
        row = x[idx]
        if not (row != 0.0).any():
            degenerate += 1
            continue
        outcome = wilcoxon_test(row, sidedness, mode=WilcoxonMode.AUTO)
        if outcome.p_value <= alpha:
            rejections += 1
    return rejections, degenerate


_EVALUATORS = {
    TestKind.T: _t_rejections,
    TestKind.WILCOXON: _wilcoxon_rejections,
}


def _simulation_cell_key(params: MixtureParams, n: int) -> int:
    # Samples are keyed by the data-generating process only, never by the
    # test applied to them, so both tests see identical draws.
    return stream_key("power-cell", params.theta, params.mu, params.sigma, n)


def _simulate_rejections(
    params: MixtureParams,
    n: int,
    config: SimConfig,
    kinds: tuple[TestKind, ...],
) -> dict[TestKind, tuple[int, int]]:
    cell = _simulation_cell_key(params, n)
    spans = [(lo, min(lo + _CHUNK, config.nreps)) for lo in range(0, config.nreps, _CHUNK)]

    def run_span(span: tuple[int, int]) -> dict[TestKind, tuple[int, int]]:
        lo, hi = span
        x = np.empty((hi - lo, n))
        for j in range(hi - lo):
            rng = replication_rng(config.master_seed, cell, lo + j)
            x[j] = draw_sample(params, n, rng)
        return {
            kind: _EVALUATORS[kind](x, config.alpha, config.sidedness) for kind in kinds
        }

    if config.max_parallelism > 1 and len(spans) > 1:
        workers = min(config.max_parallelism, len(spans))
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(run_span, spans))
    else:
        parts = [run_span(span) for span in spans]

    totals = {kind: (0, 0) for kind in kinds}
    for part in parts:
        for kind, (rej, degen) in part.items():
            acc_rej, acc_degen = totals[kind]
            totals[kind] = (acc_rej + rej, acc_degen + degen)
    return totals


def _estimate_from_counts(rejections: int, degenerate: int, nreps: int, kind: TestKind) -> PowerEstimate:
    power = rejections / nreps
    mc_se = math.sqrt(power * (1.0 - power) / nreps)
    return PowerEstimate(
        power=power, mc_se=mc_se, nreps=nreps, test_kind=kind, n_degenerate=degenerate
    )


# ---------------------------------------------------------------------------
# public operations
# ---------------------------------------------------------------------------

def estimate_power(
    test_kind: TestKind, params: MixtureParams, n: int, config: SimConfig
) -> PowerEstimate:
    """Monte Carlo rejection rate of one test at sample size ``n``.

    Degenerate replications (zero-variance or all-zero samples, probability
    zero under the mixture) are tallied in ``n_degenerate`` and never count
    as rejections.
    """
    if n < 2:
        raise InsufficientDataError(f"power estimation needs n >= 2, got {n}")
    rejections, degenerate = _simulate_rejections(params, int(n), config, (test_kind,))[test_kind]
    return _estimate_from_counts(rejections, degenerate, config.nreps, test_kind)


def estimate_size(test_kind: TestKind, n: int, config: SimConfig) -> PowerEstimate:
    """Null rejection rate (theta = 0), for calibration checks."""
    return estimate_power(test_kind, MixtureParams(0.0, 0.0, 1.0), n, config)


def power_ratio_surface(
    mu: float,
    sigma: float,
    theta_axis,
    n_axis,
    config: SimConfig,
) -> list[SurfacePoint]:
    """Power of both tests over a (theta, n) lattice, with their ratio.

    Rows are emitted theta-major.  A row is flagged as near-null when its
    ratio is not a meaningful power comparison: at theta = 0 (both powers sit
    at size level) and whenever the t-test power is dominated by its own
    Monte Carlo error (power_t < 10 * se_t, or no rejections at all).
    """
    theta_axis = [float(t) for t in theta_axis]
    n_axis = [int(n) for n in n_axis]
    if not theta_axis or not n_axis:
        raise DomainError("theta and n axes must be nonempty")
    for n in n_axis:
        if n < 2:
            raise InsufficientDataError(f"power estimation needs n >= 2, got {n}")
    rows = []
    for theta in theta_axis:
        params = MixtureParams(theta, mu, sigma)
        for n in n_axis:
            counts = _simulate_rejections(params, n, config, (TestKind.WILCOXON, TestKind.T))
            est_w = _estimate_from_counts(*counts[TestKind.WILCOXON], config.nreps, TestKind.WILCOXON)
            est_t = _estimate_from_counts(*counts[TestKind.T], config.nreps, TestKind.T)
            flagged = theta == 0.0 or est_t.power == 0.0 or est_t.power < 10.0 * est_t.mc_se
            ratio = est_w.power / est_t.power if est_t.power > 0.0 else math.nan
            rows.append(
                SurfacePoint(
                    theta=theta,
                    n=n,
                    power_w=est_w.power,
                    se_w=est_w.mc_se,
                    power_t=est_t.power,
                    se_t=est_t.mc_se,
                    ratio=ratio,
                    flagged=flagged,
                )
            )
    return rows


def _meets_target(estimate: PowerEstimate, target_power: float) -> bool:
    # 99% lower confidence bound with a small slack keeps Monte Carlo noise
    # from oscillating the bisection near the crossing.
    lower = estimate.power - _Z99 * estimate.mc_se
    return lower >= target_power - _NMIN_SLACK


def min_sample_size(
    test_kind: TestKind,
    params: MixtureParams,
    target_power: float,
    config: SimConfig,
    n_cap: int = 1_000_000,
) -> SampleSizeResult:
    """Smallest n whose estimated power clears the target.

    Exponential bracketing followed by integer bisection, exploiting that
    true power is nondecreasing in n.  Acceptance at each probe requires the
    99% lower confidence bound of the estimate to reach
    ``target_power - 0.01``; every probe is recorded in the trace.
    """
    if not 0.0 < target_power < 1.0:
        raise DomainError(f"target power must lie in (0, 1), got {target_power}")
    if params.theta <= 0.0:
        raise DomainError("sample-size search requires an alternative (theta > 0)")

    trace: list[tuple[int, PowerEstimate]] = []

    def accept(n: int) -> bool:
        estimate = estimate_power(test_kind, params, n, config)
        trace.append((n, estimate))
        return _meets_target(estimate, target_power)

    n = 2
    if accept(n):
        n_min = n
    else:
        while True:
            lo, n = n, n * 2
            if n > n_cap:
                raise SearchOverflowError(
                    f"sample-size bracket exceeded {n_cap} for theta={params.theta}",
                    partial=trace,
                )
            if accept(n):
                break
        hi = n
        while hi - lo > 1:
            mid = (lo + hi) // 2
            if accept(mid):
                hi = mid
            else:
                lo = mid
        n_min = hi

    final = next(est for probe_n, est in trace if probe_n == n_min)
    ci = (
        max(0.0, final.power - _Z99 * final.mc_se),
        min(1.0, final.power + _Z99 * final.mc_se),
    )
    return SampleSizeResult(n_min=n_min, achieved_power_ci=ci, search_trace=trace)


def empirical_are(
    mu: float,
    sigma: float,
    theta_sequence,
    target_power: float,
    config: SimConfig,
    n_cap: int = 1_000_000,
) -> list[EmpiricalArePoint]:
    """Sample-size ratio n_t / n_w along a theta schedule shrinking to 0.

    The trailing ratios approximate the asymptotic relative efficiency of
    the signed-rank test over the t test; this is the brute-force oracle
    that arbitrates the closed form's constant.  On a search overflow the
    completed rows ride along on the exception's ``partial`` attribute.
    """
    thetas = [float(t) for t in theta_sequence]
    if not thetas:
        raise DomainError("theta schedule must be nonempty")
    if any(t <= 0.0 for t in thetas):
        raise DomainError("theta schedule must be strictly positive")
    if any(b >= a for a, b in zip(thetas, thetas[1:])):
        raise DomainError("theta schedule must decrease toward 0")

    rows: list[EmpiricalArePoint] = []
    for theta in thetas:
        params = MixtureParams(theta, mu, sigma)
        try:
            t_search = min_sample_size(TestKind.T, params, target_power, config, n_cap)
            w_search = min_sample_size(TestKind.WILCOXON, params, target_power, config, n_cap)
        except SearchOverflowError as exc:
            raise SearchOverflowError(str(exc), partial=rows) from exc
        rows.append(
            EmpiricalArePoint(
                theta=theta,
                n_t=t_search.n_min,
                n_w=w_search.n_min,
                ratio=t_search.n_min / w_search.n_min,
                t_search=t_search,
                w_search=w_search,
            )
        )
    return rows
