"""Gauss hypergeometric machinery on real arguments.

Series evaluation with explicit convergence metadata, the behavior near
z = 1 in all three parameter regimes, analytic derivatives, the five
contiguous-relation residuals, ODE residuals in three forms, Wronskian
constants, the Elliott and Kummer product identities, and a terminating
3F2.

Residual-returning operations normalize by the natural scale of the
relation (the sum of the magnitudes of its constituent terms), so their
tolerances read directly as relative figures.  Derivatives inside
residuals are always analytic (one or two applications of the parameter
shift d/dz F(a,b;c;z) = (ab/c) F(a+1,b+1;c+1;z)); finite differences
are reserved for independent cross-checks in the test-suites.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass

from .core_special import (EULER_GAMMA, SeriesEval, digamma,
                           is_nonpositive_integer, ln_gamma)
from .core_special import beta as beta_fn
from .errors import (ConfigurationError, ConvergenceError, DomainError,
                     ParameterError, RegimeError)

DEFAULT_TERM_CAP = 2_000_000
_STOP = 1e-17
_ZB_SWITCH = 0.95        # zero-balanced series hands off to the log expansion


def term_cap():
    """Series term budget; SPECFUN_TERM_CAP overrides it for stress runs."""
    raw = os.environ.get("SPECFUN_TERM_CAP")
    if raw is None:
        return DEFAULT_TERM_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise ConfigurationError(f"SPECFUN_TERM_CAP must be an integer, got {raw!r}")
    if cap < 1:
        raise ConfigurationError(f"SPECFUN_TERM_CAP must be positive, got {cap}")
    return cap


@dataclass(frozen=True)
class HypTriple:
    """Parameter triple (a, b, c) of a Gauss hypergeometric function."""
    a: float
    b: float
    c: float

    def __post_init__(self):
        if is_nonpositive_integer(self.c):
            raise ParameterError(f"c must not be zero or a negative integer, got {self.c}")

    def classify(self):
        """'above' (c > a+b), 'zero-balanced' (c = a+b) or 'below' (c < a+b)."""
        s = self.a + self.b
        tol = 1e-12 * max(1.0, abs(self.a) + abs(self.b) + abs(self.c))
        if abs(self.c - s) <= tol:
            return "zero-balanced"
        return "above" if self.c > s else "below"


def _as_triple(t, b=None, c=None):
    if isinstance(t, HypTriple):
        return t
    return HypTriple(float(t), float(b), float(c))


def _triple_args(args, n_rest, name):
    """Split a (HypTriple, rest...) or (a, b, c, rest...) argument list."""
    if args and isinstance(args[0], HypTriple):
        t, rest = args[0], args[1:]
    elif len(args) >= 3:
        t, rest = HypTriple(float(args[0]), float(args[1]), float(args[2])), args[3:]
    else:
        raise TypeError(f"{name} takes a HypTriple or three parameters")
    if len(rest) != n_rest:
        raise TypeError(f"{name}: expected {n_rest} argument(s) after the "
                        f"parameter triple, got {len(rest)}")
    return (t, *rest)


# ---------------------------------------------------------------------------
# series core
# ---------------------------------------------------------------------------

def _series(a, b, c, z):
    """Raw power series; returns (value, terms_used, est_error, converged)."""
    if z == 0.0:
        return 1.0, 1, 0.0, True
    cap = term_cap()
    term = 1.0
    total = 1.0
    small_streak = 0
    az = abs(z)
    tail_factor = az / (1.0 - az) if az < 1.0 else math.inf
    for n in range(cap):
        term *= (a + n) * (b + n) / ((c + n) * (n + 1.0)) * z
        total += term
        if term == 0.0:      # terminating series (nonpositive-integer a or b)
            return total, n + 2, 0.0, True
        if abs(term) <= _STOP * abs(total):
            small_streak += 1
            if small_streak >= 2 and n >= 4:
                return total, n + 2, abs(term) * tail_factor, True
        else:
            small_streak = 0
    return total, cap, abs(term) * tail_factor, False


def _zb_log_series(a, b, w, max_terms=600):
    """Zero-balanced F(a,b;a+b;1-w) through the complementary log expansion.

    Needs a, b > 0 and 0 < w < 1; converges like w^n, so it is the
    accurate route when the argument is close to 1 (w small).  ``w``
    is the exact complement 1 - z supplied by the caller, which keeps
    full relative precision when z itself would round.
    """
    lw = -math.log(w)
    p = 1.0
    r = -2.0 * EULER_GAMMA - digamma(a) - digamma(b)
    wn = 1.0
    total = 0.0
    for n in range(max_terms):
        term = p * (r + lw) * wn
        total += term
        if abs(term) <= _STOP * abs(total) and n >= 2:
            break
        p *= (a + n) * (b + n) / ((n + 1.0) ** 2)
        r += 2.0 / (n + 1.0) - 1.0 / (a + n) - 1.0 / (b + n)
        wn *= w
    else:
        raise ConvergenceError("zero-balanced log expansion did not settle")
    return total / beta_fn(a, b)


def hyp2f1(a, b, c, z, w=None):
    """F(a,b;c;z) for real z in (-1, 1], dispatching on the z -> 1 regime.

    ``w``, when given, is the exact value of 1 - z (useful when the
    caller knows the complement to full precision and z is close to 1).
    Arguments with |z| <= 0.95 go through the direct series; beyond
    that, zero-balanced parameters switch to the complementary log
    expansion and c < a+b reduces through the (1-z)^(c-a-b) transform.
    """
    if is_nonpositive_integer(c):
        raise ParameterError(f"c must not be zero or a negative integer, got {c}")
    if w is None:
        w = 1.0 - z
    else:
        z = 1.0 - w
    if z == 1.0 and w == 0.0:
        return gauss_value_at_1(HypTriple(a, b, c))
    if not -1.0 < z < 1.0:
        raise RegimeError(f"argument must satisfy |z| < 1, got {z}")
    t = HypTriple(a, b, c)
    regime = t.classify()
    if regime == "below":
        # reduces to the 'above' case with parameters (c-a, c-b)
        return w ** (c - a - b) * hyp2f1(c - a, c - b, c, z, w=w)
    if z <= _ZB_SWITCH:
        value, _, _, converged = _series(a, b, c, z)
        if not converged:
            raise ConvergenceError(f"series for F({a},{b};{c};{z}) hit the term cap")
        return value
    if regime == "zero-balanced" and a > 0 and b > 0:
        return _zb_log_series(a, b, w)
    value, _, _, converged = _series(a, b, c, z)
    if not converged:
        raise ConvergenceError(f"series for F({a},{b};{c};{z}) hit the term cap")
    return value


def gauss_2f1(*args):
    """Direct series evaluation of F(a,b;c;z), |z| < 1, with metadata.

    Returns a SeriesEval; hitting the term cap raises ConvergenceError
    with the partial SeriesEval attached.  Accepts ``(triple, z)`` or
    ``(a, b, c, z)``.
    """
    t, z = _triple_args(args, 1, "gauss_2f1")
    if not -1.0 < z < 1.0:
        raise RegimeError(f"gauss_2f1 requires |z| < 1, got {z}")
    value, used, est, converged = _series(t.a, t.b, t.c, z)
    result = SeriesEval(value, used, est, converged)
    if not converged:
        raise ConvergenceError(
            f"series for F({t.a},{t.b};{t.c};{z}) did not converge "
            f"within {used} terms", partial=result)
    return result


def gauss_value_at_1(*args):
    """F(a,b;c;1) = Gamma(c)Gamma(c-a-b) / (Gamma(c-a)Gamma(c-b)); needs c > a+b."""
    (t,) = _triple_args(args, 0, "gauss_value_at_1")
    a, bb, c = t.a, t.b, t.c
    if min(a, bb, c) <= 0:
        raise ParameterError("gauss_value_at_1 needs positive parameters")
    if c - a - bb <= 0:
        raise RegimeError(f"F(a,b;c;1) is finite only for c > a+b, "
                          f"got c-a-b = {c - a - bb}")
    return math.exp(ln_gamma(c) + ln_gamma(c - a - bb)
                    - ln_gamma(c - a) - ln_gamma(c - bb))


def zero_balanced_R(a, b):
    """R(a,b) = -2*gamma - Psi(a) - Psi(b); R(1/2,1/2) = log 16."""
    if a <= 0 or b <= 0:
        raise DomainError(f"zero_balanced_R requires positive arguments, got ({a}, {b})")
    return -2.0 * EULER_GAMMA - digamma(a) - digamma(b)


def zero_balanced_error_scale(z):
    """Scale of the truncation error of zero_balanced_near_one: (1-z)|log(1-z)|."""
    w = 1.0 - z
    return w * abs(math.log(w))


def zero_balanced_near_one(a, b, z):
    """Leading asymptotics of F(a,b;a+b;z) as z -> 1: (R(a,b) - log(1-z))/B(a,b).

    Valid for z in (0.9, 1); the truncation error is of the order
    zero_balanced_error_scale(z).
    """
    if a <= 0 or b <= 0:
        raise DomainError("zero_balanced_near_one requires positive parameters")
    if not 0.9 < z < 1.0:
        raise RegimeError(f"z must lie in (0.9, 1); use gauss_2f1 for z = {z}")
    return (zero_balanced_R(a, b) - math.log(1.0 - z)) / beta_fn(a, b)


# ---------------------------------------------------------------------------
# derivatives
# ---------------------------------------------------------------------------

def _d1(a, b, c, z, w=None):
    return a * b / c * hyp2f1(a + 1, b + 1, c + 1, z, w=w)


def _d2(a, b, c, z, w=None):
    return (a * b / c) * ((a + 1) * (b + 1) / (c + 1)) \
        * hyp2f1(a + 2, b + 2, c + 2, z, w=w)


def gauss_2f1_derivative(*args, order=1):
    """d^order/dz^order F(a,b;c;z) via the parameter-shift formula, order 1 or 2."""
    t, z = _triple_args(args, 1, "gauss_2f1_derivative")
    if order == 1:
        return _d1(t.a, t.b, t.c, z)
    if order == 2:
        return _d2(t.a, t.b, t.c, z)
    raise ConfigurationError(f"order must be 1 or 2, got {order}")


# ---------------------------------------------------------------------------
# contiguous relations
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ContiguousQuad:
    """u = F(a-1,b;c;.), v = F(a,b;c;.) evaluated at z and at 1-z."""
    u: float
    v: float
    u1: float
    v1: float


def contiguous_quad(*args):
    t, z = _triple_args(args, 1, "contiguous_quad")
    a, bb, c = t.a, t.b, t.c
    if not 0.0 < z < 1.0:
        raise DomainError(f"contiguous_quad needs z in (0,1), got {z}")
    return ContiguousQuad(
        hyp2f1(a - 1, bb, c, z),
        hyp2f1(a, bb, c, z),
        hyp2f1(a - 1, bb, c, 1.0 - z, w=z),
        hyp2f1(a, bb, c, 1.0 - z, w=z),
    )


def _norm(diff, scale):
    return diff / max(scale, 1e-300)


def contiguous_residuals(*args):
    """Normalized residuals of the five Gauss contiguous relations at (t, z).

    Keys: 'shift-a' (the a-1 shift against z u'), 'derivative' (the
    first-derivative relation), 'product' (its parameter-shift product
    form), 'symmetric' (the derivative of u v1 + u1 v - v v1, expanded
    through the first two relations), and 'shift-b' (the b-1 shift
    obtained from parameter symmetry).
    """
    t, z = _triple_args(args, 1, "contiguous_residuals")
    a, bb, c = t.a, t.b, t.c
    if min(a, bb, c) <= 0:
        raise ParameterError("contiguous_residuals needs positive parameters")
    if not 0.0 < z < 1.0:
        raise DomainError(f"z must lie in (0,1), got {z}")
    q = contiguous_quad(t, z)
    u, v, u1, v1 = q.u, q.v, q.u1, q.v1
    du = (a - 1) * bb / c * hyp2f1(a, bb + 1, c + 1, z)          # u'(z)
    dv = a * bb / c * hyp2f1(a + 1, bb + 1, c + 1, z)            # v'(z)
    out = {}

    lhs = z * du
    rhs = (a - 1) * (v - u)
    out["shift-a"] = _norm(lhs - rhs, abs(lhs) + abs(rhs))

    lhs = z * (1 - z) * dv
    r1 = (c - a) * u
    r2 = (a - c + bb * z) * v
    out["derivative"] = _norm(lhs - (r1 + r2), abs(lhs) + abs(r1) + abs(r2))

    lhs2 = a * bb / c * z * (1 - z) * hyp2f1(a + 1, bb + 1, c + 1, z)
    out["product"] = _norm(lhs2 - (r1 + r2), abs(lhs2) + abs(r1) + abs(r2))

    # z(1-z) d/dz (u v1 + u1 v - v v1), with every derivative replaced
    # through the first two relations (no division by z or 1-z survives)
    p1 = (a - 1) * (1 - z) * (v - u) * v1                        # z(1-z) u' v1
    p2 = -u * ((c - a) * u1 + (a - c + bb * (1 - z)) * v1)       # z(1-z) u v1'
    p3 = -z * (a - 1) * (v1 - u1) * v                            # z(1-z) u1' v
    p4 = u1 * ((c - a) * u + (a - c + bb * z) * v)               # z(1-z) u1 v'
    p5 = -v1 * ((c - a) * u + (a - c + bb * z) * v)              # -z(1-z) v' v1
    p6 = v * ((c - a) * u1 + (a - c + bb * (1 - z)) * v1)        # -z(1-z) v v1'
    lhs = p1 + p2 + p3 + p4 + p5 + p6
    rhs = (1 - a - bb) * ((1 - z) * u * v1 - z * u1 * v - (1 - 2 * z) * v * v1)
    scale = sum(abs(x) for x in (p1, p2, p3, p4, p5, p6)) + abs(rhs)
    out["symmetric"] = _norm(lhs - rhs, scale)

    lhs = z * (1 - z) * dv
    r1 = (c - bb) * hyp2f1(a, bb - 1, c, z)
    r2 = (bb - c + a * z) * v
    out["shift-b"] = _norm(lhs - (r1 + r2), abs(lhs) + abs(r1) + abs(r2))
    return out


def contiguous_constant(a, c, z):
    """(lhs, rhs) of u v1 + u1 v - v v1 = Gamma(c)^2/(Gamma(c+a-1)Gamma(c-a+1)).

    Holds for b = 1 - a with a in (0,1) and c > 1 - a; the left side is
    independent of z across (0,1).
    """
    if not 0.0 < a < 1.0:
        raise ParameterError(f"a must lie in (0,1), got {a}")
    if c <= 1.0 - a:
        raise ParameterError(f"need c > 1-a, got c = {c}, 1-a = {1 - a}")
    q = contiguous_quad(HypTriple(a, 1.0 - a, c), z)
    lhs = q.u * q.v1 + q.u1 * q.v - q.v * q.v1
    rhs = math.exp(2 * ln_gamma(c) - ln_gamma(c + a - 1.0) - ln_gamma(c - a + 1.0))
    return lhs, rhs


# ---------------------------------------------------------------------------
# the two singularity-removing profiles
# ---------------------------------------------------------------------------

def k_linearized(a, b, x):
    """F(a,b;a+b;1-e^{-x}) for x > 0: increasing, convex, asymptotically linear.

    Its slope runs over (ab/(a+b), Gamma(a+b)/(Gamma(a)Gamma(b))).
    """
    if a <= 0 or b <= 0:
        raise ParameterError("k_linearized needs positive a, b")
    if x <= 0:
        raise DomainError(f"k_linearized needs x > 0, got {x}")
    w = math.exp(-x)
    return hyp2f1(a, b, a + b, 1.0 - w, w=w)


def ell_linearized(a, b, c, x):
    """F(a,b;c;1-(1+x)^(-1/d)) with d = a+b-c > 0: increasing and convex.

    Its slope runs over (ab/(cd), Gamma(c)Gamma(d)/(Gamma(a)Gamma(b))).
    """
    d = a + b - c
    if min(a, b, c) <= 0 or d <= 0:
        raise ParameterError(f"ell_linearized needs positive parameters with "
                             f"a+b > c, got d = {d}")
    if x <= 0:
        raise DomainError(f"ell_linearized needs x > 0, got {x}")
    w = math.exp(-math.log1p(x) / d)
    return hyp2f1(a, b, c, 1.0 - w, w=w)


# ---------------------------------------------------------------------------
# ODE residuals
# ---------------------------------------------------------------------------

def _require_row_balanced(a, b, c):
    if abs(2.0 * c - (a + b + 1.0)) > 1e-12 * max(1.0, abs(a) + abs(b) + abs(c)):
        raise ParameterError(f"this form needs 2c = a+b+1, got (a,b,c) = ({a},{b},{c})")


def ode_residual(kind, *args, solution="direct"):
    """Normalized residual of one hypergeometric differential equation.

    kind 'gauss'      -- the second-order equation in w(z); with
                         solution='complement' (w = F(..;1-z)) the
                         parameters must satisfy 2c = a+b+1.
    kind 'squared'    -- the equation satisfied by F(..;z^2) and, with
                         solution='complement', by F(..;1-z^2); both
                         need 2c = a+b+1.
    kind 'conjugate'  -- the equation satisfied by F(..;sqrt(1-z^2))
                         on real z in (0,1).
    """
    t, z = _triple_args(args, 1, "ode_residual")
    a, bb, c = t.a, t.b, t.c
    if not 0.0 < z < 1.0:
        raise DomainError(f"z must lie in (0,1), got {z}")
    if solution not in ("direct", "complement"):
        raise ConfigurationError(f"unknown solution branch {solution!r}")

    if kind == "gauss":
        if solution == "complement":
            _require_row_balanced(a, bb, c)
            arg, sign = 1.0 - z, -1.0
        else:
            arg, sign = z, 1.0
        w = hyp2f1(a, bb, c, arg)
        w1 = sign * _d1(a, bb, c, arg)
        w2 = _d2(a, bb, c, arg)
        t1 = z * (1 - z) * w2
        t2 = (c - (a + bb + 1) * z) * w1
        t3 = -a * bb * w
    elif kind == "squared":
        _require_row_balanced(a, bb, c)
        if solution == "complement":
            arg = 1.0 - z * z
            f1 = _d1(a, bb, c, arg)
            f2 = _d2(a, bb, c, arg)
            w = hyp2f1(a, bb, c, arg)
            w1 = -2.0 * z * f1
            w2 = -2.0 * f1 + 4.0 * z * z * f2
        else:
            arg = z * z
            f1 = _d1(a, bb, c, arg)
            f2 = _d2(a, bb, c, arg)
            w = hyp2f1(a, bb, c, arg)
            w1 = 2.0 * z * f1
            w2 = 2.0 * f1 + 4.0 * z * z * f2
        t1 = z * (1 - z * z) * w2
        t2 = (2 * c - 1 - (2 * a + 2 * bb + 1) * z * z) * w1
        t3 = -4.0 * a * bb * z * w
    elif kind == "conjugate":
        if solution != "direct":
            raise ConfigurationError("the conjugate form has a single branch")
        Z = math.sqrt((1.0 - z) * (1.0 + z))
        f1 = _d1(a, bb, c, Z)
        f2 = _d2(a, bb, c, Z)
        w = hyp2f1(a, bb, c, Z)
        w1 = -(z / Z) * f1
        w2 = (z * z) / (Z * Z) * f2 - (1.0 / Z + z * z / Z ** 3) * f1
        t1 = Z ** 3 * (1.0 - Z) * z * w2
        t2 = -(Z * (1.0 - Z) + (c - (a + bb + 1) * Z) * Z * z * z) * w1
        t3 = -a * bb * z ** 3 * w
    else:
        raise ConfigurationError(f"unknown ODE kind {kind!r}")
    return _norm(t1 + t2 + t3, abs(t1) + abs(t2) + abs(t3))


def wronskian_identity(*args):
    """(lhs, rhs) of (c-a)(u v1 + u1 v) + (a-1) v v1 = A z^(1-c)(1-z)^(1-c).

    Requires a, b > 0, c >= 1 and 2c = a+b+1; the constant is
    A = Gamma(c)^2 / (Gamma(a) Gamma(b)).
    """
    t, z = _triple_args(args, 1, "wronskian_identity")
    a, bb, c = t.a, t.b, t.c
    if a <= 0 or bb <= 0:
        raise ParameterError("wronskian_identity needs positive a, b")
    if c < 1.0:
        raise ParameterError(f"wronskian_identity needs c >= 1, got {c}")
    _require_row_balanced(a, bb, c)
    if not 0.0 < z < 1.0:
        raise DomainError(f"z must lie in (0,1), got {z}")
    q = contiguous_quad(t, z)
    lhs = (c - a) * (q.u * q.v1 + q.u1 * q.v) + (a - 1.0) * q.v * q.v1
    A = wronskian_constant(a, bb, c)
    rhs = A * z ** (1.0 - c) * (1.0 - z) ** (1.0 - c)
    return lhs, rhs


def wronskian_constant(a, b, c):
    """A = Gamma(c)^2 / (Gamma(a) Gamma(b))."""
    return math.exp(2 * ln_gamma(c) - ln_gamma(a) - ln_gamma(b))


# ---------------------------------------------------------------------------
# Elliott's identity and Kummer's product formula
# ---------------------------------------------------------------------------

def elliott_identity(a, b, c, x):
    """(lhs, rhs) of Elliott's three-parameter product identity.

    lhs = F1 F2 + F3 F4 - F2 F3 with the four half-shifted factors at x
    and 1-x; rhs = Gamma(a+b+1)Gamma(b+c+1) /
    (Gamma(a+b+c+3/2)Gamma(b+1/2)).  Constant in x on (0,1).
    """
    if a < 0 or b < 0 or c < 0:
        raise ParameterError("elliott_identity needs nonnegative a, b, c")
    if not 0.0 < x < 1.0:
        raise DomainError(f"x must lie in (0,1), got {x}")
    f1 = hyp2f1(0.5 + a, -0.5 - c, 1.0 + a + b, x)
    f2 = hyp2f1(0.5 - a, 0.5 + c, 1.0 + b + c, 1.0 - x, w=x)
    f3 = hyp2f1(0.5 + a, 0.5 - c, 1.0 + a + b, x)
    f4 = hyp2f1(-0.5 - a, 0.5 + c, 1.0 + b + c, 1.0 - x, w=x)
    lhs = f1 * f2 + f3 * f4 - f2 * f3
    rhs = math.exp(ln_gamma(a + b + 1.0) + ln_gamma(b + c + 1.0)
                   - ln_gamma(a + b + c + 1.5) - ln_gamma(b + 0.5))
    return lhs, rhs


def kummer_product_identity(a, b, c, x):
    """(lhs, rhs) of Kummer's cross-product relation.

    lhs = F(a,b;e;1-x) F(a+1,b+1;c+1;x) + (c/e) F(a,b;c;x) F(a+1,b+1;e+1;1-x)
    with e = a+b-c+1; rhs = D x^(-c) (1-x)^(c-a-b-1),
    D = Gamma(e) Gamma(c+1) / (Gamma(a+1) Gamma(b+1)).
    The self-dual case is c = e.
    """
    e = a + b - c + 1.0
    if a <= -1 or b <= -1 or c <= -1 or e <= 0:
        raise ParameterError(f"parameters leave the admissible range: "
                             f"(a,b,c) = ({a},{b},{c}), e = {e}")
    for p in (c, c + 1.0, e, e + 1.0):
        if is_nonpositive_integer(p):
            raise ParameterError(f"denominator parameter {p} is a nonpositive integer")
    if not 0.0 < x < 1.0:
        raise DomainError(f"x must lie in (0,1), got {x}")
    lhs = (hyp2f1(a, b, e, 1.0 - x, w=x) * hyp2f1(a + 1, b + 1, c + 1, x)
           + c / e * hyp2f1(a, b, c, x) * hyp2f1(a + 1, b + 1, e + 1, 1.0 - x, w=x))
    D = math.exp(ln_gamma(e) + ln_gamma(c + 1.0)
                 - ln_gamma(a + 1.0) - ln_gamma(b + 1.0))
    rhs = D * x ** (-c) * (1.0 - x) ** (c - a - b - 1.0)
    return lhs, rhs


# ---------------------------------------------------------------------------
# terminating 3F2
# ---------------------------------------------------------------------------

def pfq_terminating_3f2(n, a, b, e):
    """3F2(-n, a, b; 1+a+b, 1+e-n; 1), an exact (n+1)-term sum.

    Positive for every n >= 1 whenever ab/(1+a+b) < e < 1.
    """
    if isinstance(n, float):
        if not n.is_integer():
            raise ParameterError(f"n must be an integer, got {n}")
        n = int(n)
    if n < 1:
        raise ParameterError(f"n must be >= 1, got {n}")
    if a <= 0 or b <= 0:
        raise ParameterError("pfq_terminating_3f2 needs positive a, b")
    if float(e).is_integer() and 0 <= e <= n - 1:
        raise ParameterError(
            f"lower parameter 1+e-n hits a nonpositive integer for e = {e}")
    terms = [1.0]
    term = 1.0
    for k in range(n):
        term *= ((k - n) * (a + k) * (b + k)
                 / ((1.0 + a + b + k) * (1.0 + e - n + k) * (k + 1.0)))
        terms.append(term)
    return math.fsum(terms)
