"""Small numeric helpers shared across modules."""
from __future__ import annotations

import math

import numpy as np

NEG_INF = float("-inf")


def refined_simpson(func, a, b, rel_tol=1e-9, max_points=2**20 + 1):
    """Composite Simpson integral of ``func`` on [a, b] with refinement.

    The panel count doubles until two successive refinements agree to
    ``rel_tol`` (relative, guarded near zero) or the evaluation budget
    ``max_points`` is reached.  Returns the finest estimate.
    """
    if b <= a:
        return 0.0
    n = 16
    prev = _simpson(func, a, b, n)
    while 2 * n + 1 <= max_points:
        n *= 2
        cur = _simpson(func, a, b, n)
        scale = max(1.0, abs(cur), abs(prev))
        if abs(cur - prev) <= rel_tol * scale:
            return cur
        prev = cur
    return prev


def _simpson(func, a, b, n):
    # n panels, n even
    xs = np.linspace(a, b, n + 1)
    ys = np.asarray([func(float(x)) for x in xs], dtype=float)
    h = (b - a) / n
    return float(h / 3.0 * (ys[0] + ys[-1] + 4.0 * ys[1:-1:2].sum() + 2.0 * ys[2:-2:2].sum()))


def log_mean_weights(log_weights):
    """Stable statistics of the mean of exp(log_weights).

    Uses a max shift and exactly rounded (``math.fsum``) accumulation, so the
    result does not depend on the order of the weights.  Entries equal to
    -inf contribute weight zero but still count toward the sample size.

    Returns (log_mean, log_stderr, ess, finite_count) where ``log_stderr`` is
    the delta-method standard error of the log of the sample mean and ``ess``
    the effective sample size (sum w)^2 / sum w^2.
    """
    lw = np.asarray(log_weights, dtype=float)
    n = lw.size
    if n == 0:
        raise ValueError("no weights")
    finite = lw[np.isfinite(lw)]
    k = finite.size
    if k == 0:
        return NEG_INF, float("inf"), 0.0, 0
    m = float(finite.max())
    shifted = np.exp(finite - m)
    s1 = math.fsum(shifted.tolist())
    s2 = math.fsum((shifted * shifted).tolist())
    log_mean = m + math.log(s1) - math.log(n)
    ess = s1 * s1 / s2
    if n > 1:
        # relative second moment r = E[w^2]/E[w]^2 = s2*n/s1^2 >= 1
        r = s2 * n / (s1 * s1)
        log_stderr = math.sqrt(max(r - 1.0, 0.0) / (n - 1))
    else:
        log_stderr = float("inf")
    return log_mean, log_stderr, ess, k


def strict_int_floor(x, tol=1e-9):
    """Largest integer strictly below x, robust to float fuzz near integers."""
    return int(math.floor(x + tol)) if abs(x - round(x)) <= tol else int(math.floor(x))


def strict_band(lower, upper, tol=1e-9):
    """Integer states x with lower < x < upper, as an inclusive (lo, hi) pair.

    May be empty (lo > hi).  Values within ``tol`` of an integer are treated
    as exactly that integer, so strictness is preserved at lattice boundaries.
    """
    lo = strict_int_floor(lower, tol) + 1
    hi = -strict_int_floor(-upper, tol) - 1
    return lo, hi
