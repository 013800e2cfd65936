"""Shared standard-normal and Student-t primitives.

Exactly one implementation of the normal CDF serves the whole package, so
closed-form efficiencies, p-values, and Monte Carlo calibration can never
drift apart.  ``normal_cdf`` is backed by the complementary-error-function
expansion in ``scipy.special.ndtr`` (absolute error well below 1e-12) and the
Student-t tail goes through the regularized incomplete beta function.

All functions accept scalars or numpy arrays and vectorize elementwise.
"""

import numpy as np
from scipy.special import betainc, ndtr


def normal_cdf(x):
    """Standard normal CDF Phi(x)."""
    return ndtr(x)


def normal_sf(x):
    """Standard normal upper tail P(Z > x), computed as Phi(-x)."""
    return ndtr(np.negative(x))


def student_t_sf(t, df):
    """Upper tail P(T > t) of the Student-t law with ``df`` degrees of freedom.

    Uses the identity P(T > t) = I_x(df/2, 1/2) / 2 with x = df / (df + t^2)
    for t >= 0, where I is the regularized incomplete beta function; the
    lower half follows by symmetry.  Absolute error is bounded by the
    incomplete-beta routine, comfortably below 1e-10.
    """
    t_arr = np.asarray(t, dtype=float)
    x = df / (df + t_arr * t_arr)
    tail = 0.5 * betainc(0.5 * df, 0.5, x)
    out = np.where(t_arr >= 0.0, tail, 1.0 - tail)
    if np.ndim(t) == 0:
        return float(out)
    return out
