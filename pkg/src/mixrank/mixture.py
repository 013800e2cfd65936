"""Contaminated-Gaussian mixture model.

The sampling model draws each observation from N(0, 1) with probability
``1 - theta`` and from N(mu, sigma^2) with probability ``theta``; the null
hypothesis is ``theta = 0``.  This module provides the density, CDF, exact
moments, reproducible sampling, and the mean functions of the two test
statistics as the mixing proportion moves away from the null.
"""

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import DomainError
from .normal import normal_cdf

_SQRT_2PI = math.sqrt(2.0 * math.pi)


@dataclass(frozen=True)
class MixtureParams:
    """Parameters (theta, mu, sigma) of the contaminated-Gaussian model.

    Parameters
    ----------
    theta : float
        Mixing proportion of the contaminating component, in [0, 1].
        ``theta = 0`` reproduces the standard Gaussian exactly.
    mu : float
        Mean of the contaminating component.
    sigma : float
        Standard deviation of the contaminating component (positive).
        When a source specifies the component by its *variance*, use
        :meth:`from_variance` instead of taking a square root by hand.
    """

    theta: float
    mu: float
    sigma: float

    def __post_init__(self):
        theta, mu, sigma = float(self.theta), float(self.mu), float(self.sigma)
        if not (math.isfinite(theta) and math.isfinite(mu) and math.isfinite(sigma)):
            raise DomainError("mixture parameters must be finite")
        if not 0.0 <= theta <= 1.0:
            raise DomainError(f"mixing proportion must lie in [0, 1], got {theta}")
        if sigma <= 0.0:
            raise DomainError(f"component sd must be positive, got {sigma}")
        object.__setattr__(self, "theta", theta)
        object.__setattr__(self, "mu", mu)
        object.__setattr__(self, "sigma", sigma)

    @classmethod
    def from_variance(cls, theta: float, mu: float, variance: float) -> "MixtureParams":
        """Build params for a contaminant specified as N(mu, variance)."""
        if not (isinstance(variance, (int, float)) and variance > 0.0):
            raise DomainError(f"component variance must be positive, got {variance}")
        return cls(theta, mu, math.sqrt(variance))


def _phi(z):
    return np.exp(-0.5 * np.square(z)) / _SQRT_2PI


def pdf(params: MixtureParams, x):
    """Mixture density (1-theta)*phi(x) + (theta/sigma)*phi((x-mu)/sigma).

    ``x`` may be a scalar or an array; the result matches its shape.
    """
    arr = np.asarray(x, dtype=float)
    if not np.all(np.isfinite(arr)):
        raise DomainError("density evaluation point must be finite")
    theta, mu, sigma = params.theta, params.mu, params.sigma
    out = (1.0 - theta) * _phi(arr) + (theta / sigma) * _phi((arr - mu) / sigma)
    if np.ndim(x) == 0:
        return float(out)
    return out


def cdf(params: MixtureParams, x):
    """Mixture CDF (1-theta)*Phi(x) + theta*Phi((x-mu)/sigma)."""
    arr = np.asarray(x, dtype=float)
    theta, mu, sigma = params.theta, params.mu, params.sigma
    out = (1.0 - theta) * normal_cdf(arr) + theta * normal_cdf((arr - mu) / sigma)
    if np.ndim(x) == 0:
        return float(out)
    return out


def sample(params: MixtureParams, n: int, rng: np.random.Generator) -> np.ndarray:
    """Draw ``n`` independent observations from the mixture.

    Each observation consumes exactly two values from ``rng``: one uniform
    for component selection, then one standard normal scaled into the chosen
    component.  Output is bit-reproducible given the generator state.
    """
    if not isinstance(n, (int, np.integer)) or n < 1:
        raise DomainError(f"sample size must be a positive integer, got {n}")
    u = rng.random(n)
    z = rng.standard_normal(n)
    return np.where(u < params.theta, params.mu + params.sigma * z, z)


def moments(params: MixtureParams) -> tuple[float, float]:
    """Exact (mean, variance) of the mixture.

    mean = theta*mu and variance = (1-theta) + theta*(sigma^2 + mu^2)
    - (theta*mu)^2.
    """
    theta, mu, sigma = params.theta, params.mu, params.sigma
    mean = theta * mu
    variance = (1.0 - theta) + theta * (sigma * sigma + mu * mu) - mean * mean
    return mean, variance


class MeanFunctionVariant(Enum):
    """Which denominator the t-statistic mean function uses.

    ``PRINTED`` uses sqrt((1-theta) + theta*sigma^2), a common printed form
    that omits the theta*(1-theta)*mu^2 contribution to the mixture
    variance; ``EXACT`` divides by the true mixture standard deviation.  Both
    have derivative mu at theta = 0, which is all the asymptotics need, but
    finite-sample work should use ``EXACT``.
    """

    PRINTED = "printed"
    EXACT = "exact"


def _xi_t_value(theta: float, mu: float, sigma: float, variant: MeanFunctionVariant) -> float:
    # Valid for theta slightly outside [0, 1]; needed by derivative checks.
    if variant is MeanFunctionVariant.PRINTED:
        denom_sq = (1.0 - theta) + theta * sigma * sigma
    else:
        denom_sq = (1.0 - theta) + theta * (sigma * sigma + mu * mu) - (theta * mu) ** 2
    return theta * mu / math.sqrt(denom_sq)


def xi_t(params: MixtureParams, variant: MeanFunctionVariant = MeanFunctionVariant.EXACT) -> float:
    """Mean function of the t statistic: E[X] over the sampling sd.

    ``variant`` selects between the printed-form denominator and the exact
    mixture standard deviation (the default); see
    :class:`MeanFunctionVariant`.
    """
    return _xi_t_value(params.theta, params.mu, params.sigma, variant)


def _xi_w_value(theta: float, mu: float, sigma: float) -> float:
    # Quadratic polynomial in theta; valid for any real theta, which the
    # central-difference slope checks at theta = 0 rely on.
    a = normal_cdf(math.sqrt(2.0) * mu / sigma)
    b = normal_cdf(mu / math.sqrt(1.0 + sigma * sigma))
    return theta * theta * a - 0.5 * (theta - 1.0) * (1.0 - theta + 4.0 * theta * b)


def xi_w(params: MixtureParams) -> float:
    """P(X1 + X2 > 0) for two independent draws from the mixture.

    This is the mean function of the pairwise-sum U statistic that the
    signed-rank statistic is asymptotically equivalent to.  Expanding by the
    component pair (null/null, null/contaminant, contaminant/contaminant)
    gives the identical form
    (1-theta)^2/2 + 2*theta*(1-theta)*Phi(mu/sqrt(1+sigma^2))
    + theta^2*Phi(sqrt(2)*mu/sigma).
    """
    return _xi_w_value(params.theta, params.mu, params.sigma)


def xi_w_slope_at_null(mu: float, sigma: float) -> float:
    """Derivative of :func:`xi_w` in theta at the null: 2*Phi(mu/sqrt(1+sigma^2)) - 1.

    Evaluated as erf(mu / sqrt(2*(1+sigma^2))), which is the same quantity
    but free of cancellation for small ``mu``.
    """
    if not sigma > 0.0:
        raise DomainError(f"component sd must be positive, got {sigma}")
    return math.erf(mu / math.sqrt(2.0 * (1.0 + sigma * sigma)))
