"""Measuring relative efficiency by brute force: minimal sample sizes.

Relative efficiency is *defined* through sample sizes: how many observations
does each test need to hit power 0.8 at level 0.05, and what is the ratio of
those numbers as the alternative weakens?  This script runs that definition
directly.  It is the ground truth against which the closed form is checked,
and it settles which constant belongs in front of the formula: the candidate
surfaces differ by a factor of 3 (derived constant 3 vs. printed constant
9), far larger than the Monte Carlo noise of the measured ratios.

Budget note: each row runs two full bracket-and-bisect searches; with the
demo settings this takes a minute or two.

Run:  python demos/empirical_efficiency.py
"""

from mixrank import (
    AreVariant,
    SimConfig,
    Sidedness,
    are,
    empirical_are,
)

MU, SIGMA = 1.0, 0.5
SCHEDULE = [0.5, 0.4, 0.3]

config = SimConfig(alpha=0.05, sidedness=Sidedness.GREATER, nreps=8000,
                   master_seed=424242, max_parallelism=4)

derived = are(MU, SIGMA, AreVariant.EFFICACY_DERIVED)
printed = are(MU, SIGMA, AreVariant.AS_PRINTED)
print(f"contaminant N({MU}, {SIGMA}^2), target power 0.8 at alpha 0.05 (one-sided)")
print(f"closed-form candidates: derived {derived:.3f} vs printed {printed:.3f}")
print()

rows = empirical_are(MU, SIGMA, SCHEDULE, 0.8, config)
print("theta    n_t    n_w   n_t/n_w")
for row in rows:
    print(f"{row.theta:5.2f}  {row.n_t:5d}  {row.n_w:5d}   {row.ratio:.3f}")

trailing = rows[-1].ratio
print()
print(f"trailing ratio {trailing:.3f}: consistent with the derived constant "
      f"({derived:.3f}), inconsistent with the printed one ({printed:.3f})")

# The searches themselves are reproducible artifacts: every probe of every
# bisection is recorded, so a skeptical reader can re-derive n_min.
last = rows[-1].w_search
probes = ", ".join(f"{n}:{est.power:.3f}" for n, est in last.search_trace)
print()
print(f"signed-rank search trace at theta={rows[-1].theta}: {probes}")
