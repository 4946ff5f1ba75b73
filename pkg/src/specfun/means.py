"""Two-point means: the AGM iteration with its trace, power and
logarithmic means, and t-modifications.

Sign convention for the logarithmic mean: L(a,b) = (a-b)/(log a - log b),
which is positive for all positive a != b.  (The variant with log(b/a)
in the denominator is negative for a > b and would break the mean
inequality chains these functions feed.)
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError, ParameterError


@dataclass(frozen=True)
class MeanPair:
    """A pair of strictly positive numbers."""
    a: float
    b: float

    def __post_init__(self):
        if not (self.a > 0 and self.b > 0):
            raise DomainError(f"mean arguments must be positive, got {self}")


@dataclass(frozen=True)
class AgmTrace:
    """The monotone envelope produced by one AGM run."""
    a_seq: tuple
    b_seq: tuple
    iterations: int


def _as_pair(a, b):
    if isinstance(a, MeanPair):
        return a
    if b is None:
        raise ParameterError("two positive numbers or a MeanPair required")
    return MeanPair(float(a), float(b))


def agm(a, b=None, rel_tol=2e-16):
    """Arithmetic-geometric mean; returns (value, AgmTrace).

    Iterates a <- (a+b)/2, b <- sqrt(ab) from the ordered pair until
    the envelope collapses to rel_tol; quadratic convergence makes
    this a handful of steps for any positive input.
    """
    pair = _as_pair(a, b)
    hi, lo = (pair.a, pair.b) if pair.a >= pair.b else (pair.b, pair.a)
    a_seq = [hi]
    b_seq = [lo]
    while hi - lo > rel_tol * hi and len(a_seq) < 64:
        hi, lo = 0.5 * (hi + lo), math.sqrt(hi * lo)
        if lo > hi:          # sqrt rounding can overshoot right at convergence
            hi, lo = lo, hi
        a_seq.append(hi)
        b_seq.append(lo)
    return 0.5 * (hi + lo), AgmTrace(tuple(a_seq), tuple(b_seq), len(a_seq) - 1)


def agm_value(a, b=None):
    """AGM without the trace."""
    return agm(a, b)[0]


def power_mean(t, a, b=None):
    """A_t(a,b) = ((a^t + b^t)/2)^(1/t), t != 0."""
    if t == 0:
        raise ParameterError("power_mean is undefined at t = 0; "
                             "the t->0 limit is the geometric mean")
    pair = _as_pair(a, b)
    return ((pair.a ** t + pair.b ** t) / 2.0) ** (1.0 / t)


def geometric_mean(a, b=None):
    pair = _as_pair(a, b)
    return math.sqrt(pair.a * pair.b)


def log_mean(a, b=None):
    """L(a,b) = (a-b)/(log a - log b); continuous extension L(a,a) = a."""
    pair = _as_pair(a, b)
    d = pair.a - pair.b
    if d == 0.0:
        return pair.a
    return d / math.log1p(d / pair.b)


def t_modification(mean_fn, t, a, b=None, limit=False):
    """M_t(a,b) = M(a^t, b^t)^(1/t) for a two-argument mean M.

    t = 0 raises unless ``limit=True``, in which case the documented
    limit sqrt(ab) is returned.
    """
    pair = _as_pair(a, b)
    if t == 0:
        if limit:
            return geometric_mean(pair)
        raise ParameterError("t = 0 requires limit=True (limit is sqrt(ab))")
    return mean_fn(pair.a ** t, pair.b ** t) ** (1.0 / t)


def borwein_chain_margins(x):
    """Margins of L_{3/2}(1,x) > AGM(1,x) > L(1,x); zeros at x = 1."""
    if x <= 0:
        raise DomainError(f"borwein_chain_margins requires x > 0, got {x}")
    if x == 1.0:
        return 0.0, 0.0
    ag = agm(1.0, x)[0]
    l32 = t_modification(log_mean, 1.5, 1.0, x)
    return l32 - ag, ag - log_mean(1.0, x)


def lt_monotone_check(x, ts, slack=1e-12):
    """True iff t |-> L_t(1,x) is nondecreasing along the positive grid ts."""
    if x <= 0:
        raise DomainError(f"lt_monotone_check requires x > 0, got {x}")
    vals = [t_modification(log_mean, float(t), 1.0, x) for t in ts]
    return all(v2 >= v1 - slack * max(1.0, abs(v1))
               for v1, v2 in zip(vals, vals[1:]))
