"""Complete and generalized elliptic integrals, the ring modulus and its
inverse, the distortion function, and the classical identity and sharp
inequality margins attached to them.

K goes through the AGM identity pi/(2 AGM(1, r')), which is exact to a
few ulps uniformly in the modulus; the series route is kept separately
for the cross-check suite.  E switches from the series to an AGM-based
route above r = 0.95 (the c - a - b = 1 degenerate complement series
would need logarithmic terms; the AGM route is uniformly accurate and
the seam is verified to 1e-10 in the tests).

Boundary behavior follows the convention: mathematically infinite
values are returned as ``inf`` (a distinguished value, not a crash);
arguments outside closed domains raise DomainError.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import mpmath as mp

from .core_special import ln_gamma
from .errors import DomainError, ParameterError, QuadratureError
from .hypergeo import hyp2f1, zero_balanced_R
from .core_special import beta as beta_fn
from .means import agm_value


@dataclass(frozen=True)
class Modulus:
    """Elliptic modulus r in [0,1] with its cached complement r' = sqrt(1-r^2).

    Constructing from r computes the complement as sqrt((1-r)(1+r));
    passing both fields keeps an exactly-known complement (useful when
    r rounds to 1 but r' is known to full precision).
    """
    r: float
    r_prime: float = -1.0

    def __post_init__(self):
        if not 0.0 <= self.r <= 1.0 or math.isnan(self.r):
            raise DomainError(f"modulus must lie in [0,1], got {self.r}")
        if self.r_prime < 0.0:
            object.__setattr__(self, "r_prime",
                               math.sqrt((1.0 - self.r) * (1.0 + self.r)))

    @property
    def complement(self):
        """The complementary modulus as a Modulus (swaps the cached pair)."""
        return Modulus(self.r_prime, self.r)


def _as_modulus(m):
    return m if isinstance(m, Modulus) else Modulus(float(m))


# ---------------------------------------------------------------------------
# complete elliptic integrals
# ---------------------------------------------------------------------------

def ellint_K(m):
    """Complete elliptic integral of the first kind, via the AGM identity."""
    m = _as_modulus(m)
    if m.r_prime == 0.0:
        return math.inf
    return math.pi / (2.0 * agm_value(1.0, m.r_prime))


def ellint_K_series(m):
    """(pi/2) F(1/2,1/2;1;r^2): the hypergeometric route, kept for cross-checks."""
    m = _as_modulus(m)
    if m.r_prime == 0.0:
        return math.inf
    return math.pi / 2.0 * hyp2f1(0.5, 0.5, 1.0, m.r * m.r,
                                  w=m.r_prime * m.r_prime)


def ellint_Kprime(m):
    """K'(r) = K(r')."""
    return ellint_K(_as_modulus(m).complement)


_E_SWITCH = 0.95


def _ellint_E_agm(m):
    # E = K (1 - sum_{n>=0} 2^(n-1) c_n^2), c_0 = r, c_n the AGM gaps
    a, b = 1.0, m.r_prime
    csum = 0.5 * m.r * m.r
    pow2 = 1.0
    for _ in range(64):
        if abs(a - b) <= 2e-16 * a:
            break
        c = 0.5 * (a - b)
        a, b = 0.5 * (a + b), math.sqrt(a * b)
        csum += pow2 * c * c
        pow2 *= 2.0
    k_val = math.pi / (2.0 * (0.5 * (a + b)))
    return k_val * (1.0 - csum)


def ellint_E(m):
    """Complete elliptic integral of the second kind on [0, 1]."""
    m = _as_modulus(m)
    if m.r_prime == 0.0:
        return 1.0
    if m.r <= _E_SWITCH:
        return math.pi / 2.0 * hyp2f1(0.5, -0.5, 1.0, m.r * m.r)
    return _ellint_E_agm(m)


def ellint_Eprime(m):
    """E'(r) = E(r')."""
    return ellint_E(_as_modulus(m).complement)


# ---------------------------------------------------------------------------
# generalized elliptic integrals
# ---------------------------------------------------------------------------

def _check_order(a):
    if not 0.0 < a < 1.0:
        raise ParameterError(f"the order must lie in (0,1), got {a}")


def gen_K(a, m):
    """K_a(r) = (pi/2) F(a, 1-a; 1; r^2), zero-balanced in its parameters."""
    _check_order(a)
    m = _as_modulus(m)
    if m.r_prime == 0.0:
        return math.inf
    return math.pi / 2.0 * hyp2f1(a, 1.0 - a, 1.0, m.r * m.r,
                                  w=m.r_prime * m.r_prime)


def gen_Kprime(a, m):
    return gen_K(a, _as_modulus(m).complement)


def _gen_E_complement_series(a, w):
    """F(a-1, 1-a; 1; 1-w) for small w > 0 (the c-a-b = 1 degenerate row).

    The unit-gap complement expansion: value at 1 plus a w log w series,
    F = sin(pi a)/((1-a) pi)
        + w (a-1) sin(pi a)/pi * sum p_n (log w + q_n) w^n,
    p_0 = 1, p_{n+1} = p_n (a+n)(2-a+n)/((n+1)(n+2)),
    q_0 = psi(a) + psi(2-a) - psi(1) - psi(2),
    q_{n+1} = q_n + 1/(a+n) + 1/(2-a+n) - 1/(n+1) - 1/(n+2).
    """
    from .core_special import EULER_GAMMA, digamma
    sin_pa = math.sin(math.pi * a)
    head = sin_pa / ((1.0 - a) * math.pi)
    lw = math.log(w)
    p = 1.0
    q = digamma(a) + digamma(2.0 - a) + EULER_GAMMA + (EULER_GAMMA - 1.0)
    total = 0.0
    wn = 1.0
    for n in range(400):
        term = p * (lw + q) * wn
        total += term
        if abs(term) <= 1e-17 * (abs(total) + abs(head)) and n >= 2:
            break
        p *= (a + n) * (2.0 - a + n) / ((n + 1.0) * (n + 2.0))
        q += 1.0 / (a + n) + 1.0 / (2.0 - a + n) - 1.0 / (n + 1.0) - 1.0 / (n + 2.0)
        wn *= w
    return head + w * (a - 1.0) * sin_pa / math.pi * total


def gen_E(a, m):
    """E_a(r) = (pi/2) F(a-1, 1-a; 1; r^2); E_a(0) = pi/2, E_a(1) = sin(pi a)/(2(1-a)).

    Above r^2 = 0.95 the direct series crawls (its terms only decay like
    n^-2), so the complement log expansion takes over there.
    """
    _check_order(a)
    m = _as_modulus(m)
    if m.r_prime == 0.0:
        return math.sin(math.pi * a) / (2.0 * (1.0 - a))
    z = m.r * m.r
    if z > 0.95:
        w = m.r_prime * m.r_prime
        return math.pi / 2.0 * _gen_E_complement_series(a, w)
    return math.pi / 2.0 * hyp2f1(a - 1.0, 1.0 - a, 1.0, z)


def gen_Eprime(a, m):
    return gen_E(a, _as_modulus(m).complement)


def gen_K_quadrature(a, m, tol=1e-10):
    """K_a(r) as (sin pi a) times the singular trig integral, by tanh-sinh.

    The integrand (tan t)^(1-2a) (1 - r^2 sin^2 t)^(-a) has an
    integrable endpoint singularity at one end for every a != 1/2; the
    double-exponential transform absorbs it.  Levels double until two
    successive refinements agree to ``tol`` relative.
    """
    _check_order(a)
    m = _as_modulus(m)
    if m.r_prime == 0.0:
        raise DomainError("gen_K_quadrature requires r < 1")
    r2 = m.r * m.r
    p = 1.0 - 2.0 * a
    quarter_pi = 0.25 * math.pi

    def integrand(u):
        # map x = tanh((pi/2) sinh u) of (-1,1), then t = (pi/4)(x+1)
        y = 0.5 * math.pi * math.sinh(u)
        e = math.exp(-2.0 * abs(y))
        dist = 2.0 * e / (1.0 + e)            # 1 - |x|, no cancellation
        if y >= 0:
            sin_t = math.sin(quarter_pi * (2.0 - dist))
            cos_t = math.sin(quarter_pi * dist)   # cos t = sin(pi/2 - t)
        else:
            sin_t = math.sin(quarter_pi * dist)
            cos_t = math.cos(quarter_pi * dist)
        if sin_t == 0.0 or cos_t == 0.0:
            return 0.0
        tan_t = sin_t / cos_t
        sech2 = (2.0 * e / (1.0 + e)) * (2.0 / (1.0 + e))   # sech^2(y)
        w = 0.5 * math.pi * math.cosh(u) * sech2
        return tan_t ** p * (1.0 - r2 * sin_t * sin_t) ** (-a) * w

    # the endpoint weight decays like exp(-2 min(a, 1-a) pi sinh u); u_max = 6
    # pushes the truncated mass below 1e-12 for any order down to ~0.05
    u_max = 6.0
    h = 0.5
    prev = None
    total = sum(integrand(-u_max + i * h)
                for i in range(int(2 * u_max / h) + 1)) * h
    for _ in range(12):
        h *= 0.5
        mids = sum(integrand(-u_max + (2 * i + 1) * h)
                   for i in range(int(2 * u_max / (2 * h))))
        total = 0.5 * total + mids * h
        if prev is not None and abs(total - prev) <= tol * abs(total):
            # Jacobian pi/4 of the x -> t map, times the sine prefactor
            return total * quarter_pi * math.sin(math.pi * a)
        prev = total
    raise QuadratureError(f"tanh-sinh failed to reach {tol} for a={a}, r={m.r}")


# ---------------------------------------------------------------------------
# ring modulus, its inverse, and the distortion function
# ---------------------------------------------------------------------------

def mu(m):
    """Ring-domain modulus pi K'(r) / (2 K(r)); decreasing from +inf to 0."""
    m = _as_modulus(m)
    if m.r == 0.0:
        return math.inf
    if m.r_prime == 0.0:
        return 0.0
    # K'/K = AGM(1, r') / AGM(1, r), keeping a single rounding each
    return math.pi / 2.0 * agm_value(1.0, m.r_prime) / agm_value(1.0, m.r)


def mu_a(a, m):
    """mu_a(r) = pi/(2 sin(pi a)) K_a'(r)/K_a(r); reduces to mu at a = 1/2."""
    _check_order(a)
    m = _as_modulus(m)
    if m.r == 0.0:
        return math.inf
    if m.r_prime == 0.0:
        return 0.0
    return math.pi / (2.0 * math.sin(math.pi * a)) * gen_Kprime(a, m) / gen_K(a, m)


def _sigmoid(t):
    if t >= 0:
        return 1.0 / (1.0 + math.exp(-t))
    e = math.exp(t)
    return e / (1.0 + e)


_MU_T_RANGE = 36.0
_MU_HIGH = 37.0           # above this, r = 4 exp(-y) is exact to ~e^{-2y}
_MU_LOW = 0.5             # below this, invert through the complement


def mu_inverse(y):
    """The modulus r with mu(r) = y, to ~1e-13 absolute in mu.

    Monotone bisection in the logit of r (both endpoints of (0,1) are
    sensitivity-balanced there); very large y uses the asymptote
    r = 4 e^{-y}, very small y the exact duality mu(r) mu(r') = pi^2/4.
    The returned Modulus carries an exact complement even when r itself
    rounds to 1.
    """
    if not y > 0 or math.isnan(y):
        raise DomainError(f"mu_inverse requires y > 0, got {y}")
    if y >= _MU_HIGH:
        return Modulus(4.0 * math.exp(-y))
    if y < _MU_LOW:
        comp = mu_inverse(math.pi * math.pi / (4.0 * y))
        return comp.complement
    lo, hi = -_MU_T_RANGE, _MU_T_RANGE      # mu decreases along t
    for _ in range(80):
        mid = 0.5 * (lo + hi)
        if mu(Modulus(_sigmoid(mid))) > y:
            lo = mid
        else:
            hi = mid
    return Modulus(_sigmoid(0.5 * (lo + hi)))


def phi_K(K, r):
    """Distortion function mu^{-1}(mu(r)/K) on r in (0,1); phi_1 = identity.

    K < 1 gives the inverse family, so phi_K(phi_{1/K}(r)) = r.
    """
    if not K > 0 or math.isnan(K):
        raise DomainError(f"phi_K requires K > 0, got {K}")
    m = _as_modulus(r)
    if not 0.0 < m.r < 1.0:
        raise DomainError(f"phi_K requires r in (0,1), got {m.r}")
    if K == 1.0:
        return m.r
    return mu_inverse(mu(m) / K).r


# ---------------------------------------------------------------------------
# identities
# ---------------------------------------------------------------------------

def legendre_residual(m):
    """E K' + E' K - K K' - pi/2 (absolute residual), r in (0,1)."""
    m = _as_modulus(m)
    if not 0.0 < m.r < 1.0:
        raise DomainError(f"legendre_residual needs r in (0,1), got {m.r}")
    comp = m.complement
    K = ellint_K(m)
    Kp = ellint_K(comp)
    E = ellint_E(m)
    Ep = ellint_E(comp)
    return E * Kp + Ep * K - K * Kp - math.pi / 2.0


def gen_legendre_residual(a, m):
    """E_a K_a' + E_a' K_a - K_a K_a' - pi sin(pi a)/(4(1-a)), r in (0,1)."""
    _check_order(a)
    m = _as_modulus(m)
    if not 0.0 < m.r < 1.0:
        raise DomainError(f"gen_legendre_residual needs r in (0,1), got {m.r}")
    comp = m.complement
    Ka = gen_K(a, m)
    Kap = gen_K(a, comp)
    Ea = gen_E(a, m)
    Eap = gen_E(a, comp)
    target = math.pi * math.sin(math.pi * a) / (4.0 * (1.0 - a))
    return Ea * Kap + Eap * Ka - Ka * Kap - target


def landen_residuals(r):
    """Relative residuals of the two modulus-doubling identities.

    K(2 sqrt(r)/(1+r)) = (1+r) K(r) and K((1-r)/(1+r)) = ((1+r)/2) K'(r).
    The ascending argument pairs with the exact complement (1-r)/(1+r).
    """
    if not 0.0 < r < 1.0:
        raise DomainError(f"landen_residuals needs r in (0,1), got {r}")
    asc = 2.0 * math.sqrt(r) / (1.0 + r)
    desc = (1.0 - r) / (1.0 + r)
    m = Modulus(r)
    lhs1 = ellint_K(Modulus(asc, desc))
    rhs1 = (1.0 + r) * ellint_K(m)
    lhs2 = ellint_K(Modulus(desc, asc))
    rhs2 = 0.5 * (1.0 + r) * ellint_Kprime(m)
    return (lhs1 - rhs1) / rhs1, (lhs2 - rhs2) / rhs2


def landen_inequality_margins(a, b, r):
    """Margins of the four modulus-doubling bounds for zero-balanced F.

    With c = a+b, B = B(a,b), R = R(a,b), y = (2 sqrt(r)/(1+r))^2 and
    y' = ((1-r)/(1+r))^2:
      m1 = (1+r) F(r^2) - F(y)                      >= 0
      m2 = F(y) + (R - log 16)/B - (1+r) F(r^2)     >= 0
      m3 = F(y') - ((1+r)/2) F(1-r^2)               >= 0
      m4 = ((1+r)/2)[F(1-r^2) + (R - log 16)/B] - F(y') >= 0
    All vanish identically at a = b = 1/2.
    """
    if not (0.0 < a < 1.0 and 0.0 < b < 1.0):
        raise ParameterError(f"orders must lie in (0,1), got ({a}, {b})")
    if not 0.0 < r < 1.0:
        raise DomainError(f"landen_inequality_margins needs r in (0,1), got {r}")
    c = a + b
    r2 = r * r
    rp2 = (1.0 - r) * (1.0 + r)
    y_asc = (2.0 * math.sqrt(r) / (1.0 + r)) ** 2
    y_desc = ((1.0 - r) / (1.0 + r)) ** 2
    excess = (zero_balanced_R(a, b) - math.log(16.0)) / beta_fn(a, b)
    f_r = hyp2f1(a, b, c, r2, w=rp2)
    f_asc = hyp2f1(a, b, c, y_asc, w=y_desc)
    f_desc = hyp2f1(a, b, c, y_desc, w=y_asc)
    f_comp = hyp2f1(a, b, c, rp2, w=r2)
    m1 = (1.0 + r) * f_r - f_asc
    m2 = f_asc + excess - (1.0 + r) * f_r
    m3 = f_desc - 0.5 * (1.0 + r) * f_comp
    m4 = 0.5 * (1.0 + r) * (f_comp + excess) - f_desc
    return m1, m2, m3, m4


# ---------------------------------------------------------------------------
# sharp bounds for K and E
# ---------------------------------------------------------------------------

def k_bound_margins(r):
    """Signed margins of six sharp bounds for K(r), positive on (0,1).

    Order: arth-lower (exponent 1/2), arth-upper (exponent 1),
    log-ratio lower 9/(8+r^2), log-ratio upper 1 + r'^2/4,
    log-ratio lower 1 + (pi/(4 log 2) - 1) r'^2, arth-lower with the
    sharp exponent 3/4.
    """
    if not 0.0 < r < 1.0:
        raise DomainError(f"k_bound_margins needs r in (0,1), got {r}")
    K = ellint_K(r)
    rp2 = (1.0 - r) * (1.0 + r)
    at = math.atanh(r) / r
    log4rp = math.log(4.0) - 0.5 * math.log1p(-r * r)
    ratio = K / log4rp
    half_pi = 0.5 * math.pi
    return (
        K - half_pi * math.sqrt(at),
        half_pi * at - K,
        ratio - 9.0 / (8.0 + r * r),
        1.0 + 0.25 * rp2 - ratio,
        ratio - (1.0 + (math.pi / (4.0 * math.log(2.0)) - 1.0) * rp2),
        K - half_pi * at ** 0.75,
    )


def arth_exponent_margin(r, p):
    """K(r) - (pi/2)((arth r)/r)^p; goes negative somewhere iff p > 3/4."""
    if not 0.0 < r < 1.0:
        raise DomainError(f"arth_exponent_margin needs r in (0,1), got {r}")
    return ellint_K(r) - 0.5 * math.pi * (math.atanh(r) / r) ** p


_E_MARGIN_MP_SWITCH = 0.3


def e_bound_margins(r):
    """Margins of the power-mean envelope of (2/pi) E(r) on [0,1].

    muir  = (2/pi) E - ((1 + r'^{3/2})/2)^{2/3}  (lower bound margin)
    upper = ((1 + r'^2)/2)^{1/2} - (2/pi) E      (upper bound margin)
    Both vanish at r = 0.  The lower margin is O(r^8) there, far below
    double rounding, so small r is evaluated in 60-digit arithmetic.
    """
    if not 0.0 <= r <= 1.0 or math.isnan(r):
        raise DomainError(f"e_bound_margins needs r in [0,1], got {r}")
    if r == 0.0:
        return 0.0, 0.0
    if r < _E_MARGIN_MP_SWITCH:
        with mp.workdps(60):
            rm = mp.mpf(r)
            rp = mp.sqrt((1 - rm) * (1 + rm))
            e2pi = 2 / mp.pi * mp.ellipe(rm * rm)
            muir = e2pi - ((1 + rp ** mp.mpf(1.5)) / 2) ** (mp.mpf(2) / 3)
            upper = mp.sqrt((1 + rp * rp) / 2) - e2pi
            return float(muir), float(upper)
    e2pi = 2.0 / math.pi * ellint_E(r)
    rp = math.sqrt((1.0 - r) * (1.0 + r))
    muir = e2pi - ((1.0 + rp ** 1.5) / 2.0) ** (2.0 / 3.0)
    upper = math.sqrt((1.0 + rp * rp) / 2.0) - e2pi
    return muir, upper


def ellipse_perimeter(b):
    """Arc length of the ellipse with semiaxes 1 and b: 4 E(sqrt(1-b^2))."""
    if not 0.0 < b <= 1.0 or math.isnan(b):
        raise DomainError(f"ellipse_perimeter needs b in (0,1], got {b}")
    ecc = math.sqrt((1.0 - b) * (1.0 + b))
    return 4.0 * ellint_E(Modulus(ecc, b))


# ---------------------------------------------------------------------------
# differential relations
# ---------------------------------------------------------------------------

def elliptic_ode_residuals(a, r):
    """Normalized residuals of the second-order equations for K_a and E_a.

    r r'^2 K_a'' + (1-3r^2) K_a' - 4a(1-a) r K_a = 0 and
    r r'^2 E_a'' + r'^2 E_a'   + 4(1-a)^2 r E_a = 0, derivatives taken
    analytically through the series layer (chain rule in r^2).
    """
    _check_order(a)
    if not 0.0 < r < 1.0:
        raise DomainError(f"elliptic_ode_residuals needs r in (0,1), got {r}")
    r2 = r * r
    rp2 = (1.0 - r) * (1.0 + r)
    half_pi = 0.5 * math.pi

    def pieces(p, q):
        f = hyp2f1(p, q, 1.0, r2)
        f1 = p * q * hyp2f1(p + 1, q + 1, 2.0, r2)
        f2 = p * q * (p + 1) * (q + 1) / 2.0 * hyp2f1(p + 2, q + 2, 3.0, r2)
        val = half_pi * f
        d1 = half_pi * 2.0 * r * f1
        d2 = half_pi * (2.0 * f1 + 4.0 * r2 * f2)
        return val, d1, d2

    K, K1, K2 = pieces(a, 1.0 - a)
    t1 = r * rp2 * K2
    t2 = (1.0 - 3.0 * r2) * K1
    t3 = -4.0 * a * (1.0 - a) * r * K
    res_k = (t1 + t2 + t3) / (abs(t1) + abs(t2) + abs(t3))

    E, E1, E2 = pieces(a - 1.0, 1.0 - a)
    s1 = r * rp2 * E2
    s2 = rp2 * E1
    s3 = 4.0 * (1.0 - a) ** 2 * r * E
    res_e = (s1 + s2 + s3) / (abs(s1) + abs(s2) + abs(s3))
    return res_k, res_e


def schwarzian_mu_residual(a, r):
    """Relative gap between the stencil Schwarzian of mu_a and its closed form.

    The closed form is -8a(1-a)/r'^2 + (1+6r^2-3r^4)/(2r^2 r'^4).
    Derivatives come from 5-point central stencils with step 1e-3, so
    this is a smoke test at the 1e-4 level, not a precision test.
    """
    _check_order(a)
    if not 0.05 <= r <= 0.95:
        raise DomainError(f"stencil window is [0.05, 0.95], got r = {r}")
    h = 1e-3
    f = [mu_a(a, r + j * h) for j in (-2, -1, 0, 1, 2)]
    d1 = (-f[4] + 8.0 * f[3] - 8.0 * f[1] + f[0]) / (12.0 * h)
    d2 = (-f[4] + 16.0 * f[3] - 30.0 * f[2] + 16.0 * f[1] - f[0]) / (12.0 * h * h)
    d3 = (f[4] - 2.0 * f[3] + 2.0 * f[1] - f[0]) / (2.0 * h ** 3)
    s_num = d3 / d1 - 1.5 * (d2 / d1) ** 2
    r2 = r * r
    rp2 = 1.0 - r2
    s_closed = -8.0 * a * (1.0 - a) / rp2 \
        + (1.0 + 6.0 * r2 - 3.0 * r2 * r2) / (2.0 * r2 * rp2 * rp2)
    return (s_num - s_closed) / abs(s_closed)
