"""The Stieltjes J-function, evaluated by several independent routes.

J(z) is the logarithmic remainder of the gamma function,

    J(z) = log Gamma(z+1) - log sqrt(2 pi) - (z + 1/2) log z + z,

equal on the right half plane to the integral

    J(z) = -(1/pi) * Integral_0^inf dt log(1 - exp(-2 pi t)) * z / (z^2 + t^2).

Conventions differ on the stated domain of that integral (Re z > 0 versus
Im z > 0); this module adopts Re z > 0, where the integral converges.  The
imaginary axis is a natural boundary of the integral: continuation into the
left half plane is *not* the continuation of the integral but follows from
the log-gamma form, which holds on the plane cut along the negative real
axis, and reduces to the reflection identity

    J(z e^{+-i pi}) = -J(z) - log(1 - e^{-+ 2 pi i z}),   Re z > 0.

Available routes:

* :func:`j_quadrature`  -- the defining integral, via adaptive quadrature.
  The only route not built on the Lanczos rational core, hence the
  independent cross-check for all the others.
* :func:`j_loggamma`    -- the log-gamma form, usable off the cut.
* :func:`j_lanczos`     -- the Lanczos rational approximation (g = 5, N = 6),
  right half plane, error below one part per billion on the gamma scale
  (i.e. absolute error on J below ~1e-9; note this is *not* a relative
  bound on J itself, which decays like 1/(12 z)).
* :func:`j_series_small` -- Taylor-type series for |z| < 1.
* :func:`j_asymptotic`  -- divergent large-|z| series in even Bernoulli
  numbers, with the first omitted term reported as the truncation bound.
* :func:`j_continue_left` -- the reflection identity above, left half plane.
* :func:`j_auto`        -- region dispatch over the routes.

Everything here is pure and thread-safe; the coefficient tables are built
once at import time.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction

from .quadrature import QuadratureSpec, integrate_semi_infinite

__all__ = [
    "EULER_GAMMA", "LOG_SQRT_2PI",
    "LANCZOS_G", "LANCZOS_N", "LANCZOS_D",
    "BERNOULLI_EVEN", "zeta",
    "log_gamma",
    "j_quadrature", "j_loggamma", "j_lanczos", "j_series_small",
    "j_asymptotic", "j_continue_left", "j_auto", "j_auto_named",
]

EULER_GAMMA = 0.5772156649015328606
LOG_SQRT_2PI = 0.9189385332046727418

# Lanczos approximation, shift g = 5 with N = 6 correction terms.
LANCZOS_G = 5.0
LANCZOS_N = 6
LANCZOS_D = (
    1.000000000190015,
    76.18009172947146,
    -86.50532032941677,
    24.01409824083091,
    -1.231739572450155,
    0.001208650973866179,
    -0.000005395239384953,
)

# Even-index Bernoulli numbers B_2 .. B_22 as exact rationals.
BERNOULLI_EVEN = {
    2: Fraction(1, 6),
    4: Fraction(-1, 30),
    6: Fraction(1, 42),
    8: Fraction(-1, 30),
    10: Fraction(5, 66),
    12: Fraction(-691, 2730),
    14: Fraction(7, 6),
    16: Fraction(-3617, 510),
    18: Fraction(43867, 798),
    20: Fraction(-174611, 330),
    22: Fraction(854513, 138),
}
# B_24, kept private: only used for the truncation bound of the longest
# asymptotic partial sum, never as a series term.
_B24 = Fraction(-236364091, 2730)

_MAX_ASYMPTOTIC_TERMS = len(BERNOULLI_EVEN)  # 11


def _zeta_euler_maclaurin(s: int, cut: int = 50, corrections: int = 8) -> float:
    """zeta(s) for integer s >= 2: direct sum to ``cut`` plus the
    Euler-Maclaurin tail.  Accurate to well below 1e-16 for s >= 2."""
    total = sum(k ** (-float(s)) for k in range(1, cut))
    total += 0.5 * cut ** (-float(s))
    total += cut ** (1.0 - s) / (s - 1.0)
    rising = float(s)                       # s (s+1) ... (s + 2j - 2)
    for j in range(1, corrections + 1):
        b2j = float(BERNOULLI_EVEN[2 * j])
        total += (b2j / math.factorial(2 * j)) * rising * cut ** (-float(s + 2 * j - 1))
        rising *= (s + 2 * j - 1) * (s + 2 * j)
    return total


_ZETA_TABLE_MAX = 60
_ZETA = {n: _zeta_euler_maclaurin(n) for n in range(2, _ZETA_TABLE_MAX + 1)}


def zeta(n: int) -> float:
    """Riemann zeta at integer n >= 2, from the precomputed table.

    Beyond the table zeta(n) - 1 - 2^-n - 3^-n < 4^-n, far below double
    precision, so the first three terms suffice.
    """
    if n < 2:
        raise ValueError("zeta table covers integer arguments n >= 2")
    if n <= _ZETA_TABLE_MAX:
        return _ZETA[n]
    return 1.0 + 2.0 ** (-n) + 3.0 ** (-n)


def _on_cut(z: complex) -> bool:
    return z.imag == 0.0 and z.real <= 0.0


def _log1p(z: complex) -> complex:
    """Principal log(1 + z) for complex z, accurate for small |z|."""
    if abs(z) > 1e-4:
        return cmath.log(1.0 + z)
    # |z| <= 1e-4: five series terms reach full double precision
    return z * (1 + z * (-1 / 2 + z * (1 / 3 + z * (-1 / 4 + z / 5))))


def _lanczos_series(z: complex) -> complex:
    acc = LANCZOS_D[0]
    for n in range(1, LANCZOS_N + 1):
        acc += LANCZOS_D[n] / (z + n)
    return acc


def log_gamma(w: complex) -> complex:
    """log Gamma(w), continuous on the plane cut along (-inf, 0].

    Lanczos form for Re w >= 0.5; smaller real parts are shifted right with
    the recurrence log Gamma(w) = log Gamma(w+n) - sum log(w+k), which
    preserves the continuous branch for w off the cut.
    """
    w = complex(w)
    if _on_cut(w):
        raise ValueError("log_gamma: argument on the branch cut (-inf, 0]")
    shift = 0.0 + 0.0j
    while w.real < 0.5:
        shift += cmath.log(w)
        w += 1.0
    g_half = LANCZOS_G + 0.5
    t = w + (g_half - 1.0)
    value = ((w - 0.5) * cmath.log(t) - t + LOG_SQRT_2PI
             + cmath.log(_lanczos_series(w - 1.0)))
    return value - shift


def j_loggamma(z: complex) -> complex:
    """J(z) from the log-gamma form; valid off the cut (-inf, 0].

    At very large |z| this route loses accuracy to cancellation between the
    log-gamma and Stirling terms; prefer :func:`j_lanczos` or
    :func:`j_asymptotic` there.
    """
    z = complex(z)
    if _on_cut(z):
        raise ValueError("j_loggamma: z on the branch cut (-inf, 0]")
    return log_gamma(z + 1.0) - LOG_SQRT_2PI - (z + 0.5) * cmath.log(z) + z


def j_lanczos(z: complex) -> complex:
    """J(z) by the Lanczos rational formula, closed right half plane.

    J(z) = (z + 1/2) log((z + g + 1/2)/z) - g - 1/2 + log(d0 + sum dn/(z+n))

    Absolute error stays below one part per billion for Re z >= 0 (the same
    rational core as :func:`log_gamma`, with the Stirling part cancelled
    analytically, so no large-|z| cancellation).  The imaginary axis
    (z != 0) is allowed: the formula remains finite and continuous there.
    """
    z = complex(z)
    if z == 0:
        raise ValueError("j_lanczos: z = 0 is a singular point")
    if z.real < 0.0:
        raise ValueError("j_lanczos: requires Re z >= 0; use j_continue_left")
    g_half = LANCZOS_G + 0.5
    return ((z + 0.5) * _log1p(g_half / z) - g_half
            + cmath.log(_lanczos_series(z)))


def j_series_small(z: complex, n_terms: int = 60) -> complex:
    """J(z) for |z| < 1 by the series

    J(z) = -log sqrt(2 pi) - (z + 1/2) log z + z - gamma_E z
           + sum_{n=2}^{n_terms} (-1)^n zeta(n)/n z^n.

    Terms shrink like |z|^n, so n_terms must grow as |z| -> 1 (about 300
    terms at |z| = 0.9 for full double precision).
    """
    z = complex(z)
    if n_terms < 2:
        raise ValueError("j_series_small: n_terms must be >= 2")
    if abs(z) >= 1.0:
        raise ValueError("j_series_small: series diverges for |z| >= 1")
    if _on_cut(z):
        raise ValueError("j_series_small: z on the branch cut (-inf, 0]")
    value = -LOG_SQRT_2PI - (z + 0.5) * cmath.log(z) + z - EULER_GAMMA * z
    power = z
    sign = 1.0
    for n in range(2, n_terms + 1):
        power *= z
        value += sign * (zeta(n) / n) * power
        sign = -sign
    return value


def j_asymptotic(z: complex, n_terms: int = 11) -> tuple[complex, float]:
    """Large-|z| asymptotic series for J(z), with its truncation bound.

    Returns the partial sum

        sum_{n=0}^{n_terms-1} B_{2n+2} / ((2n+1)(2n+2)) * z^{-(2n+1)}

    together with the magnitude of the first omitted term, the usual
    accuracy heuristic for an optimally truncated asymptotic series.  The
    series is divergent: if the first omitted term already exceeds the last
    kept one the requested order is in the divergent regime and a
    ValueError is raised instead.
    """
    z = complex(z)
    if z == 0:
        raise ValueError("j_asymptotic: z = 0 is a singular point")
    if not 1 <= n_terms <= _MAX_ASYMPTOTIC_TERMS:
        raise ValueError(
            f"j_asymptotic: n_terms must be in 1..{_MAX_ASYMPTOTIC_TERMS}")
    inv_z = 1.0 / z
    inv_z2 = inv_z * inv_z
    power = inv_z
    value = 0.0 + 0.0j
    last_magnitude = math.inf
    for n in range(n_terms):
        m = 2 * n + 2
        term = (float(BERNOULLI_EVEN[m]) / ((m - 1) * m)) * power
        value += term
        last_magnitude = abs(term)
        power *= inv_z2
    m = 2 * n_terms + 2
    b_next = _B24 if m > 22 else BERNOULLI_EVEN[m]
    bound = abs((float(b_next) / ((m - 1) * m)) * power)
    if bound > last_magnitude:
        raise ValueError(
            "j_asymptotic: divergent regime at this order "
            f"(first omitted term {bound:.2e} exceeds last kept "
            f"{last_magnitude:.2e}); use fewer terms or another method")
    return value, bound


def j_continue_left(w: complex) -> complex:
    """J(w) for Re w < 0, off the negative real axis.

    Writes w = z e^{+i pi} (Im w > 0) or w = z e^{-i pi} (Im w < 0) with
    Re z > 0 and applies

        J(z e^{+-i pi}) = -J(z) - log(1 - e^{-+ 2 pi i z}).

    The sign choice keeps |e^{-+ 2 pi i z}| < 1, so the principal log is
    safe.  Values from above and below the negative real axis genuinely
    differ there (branch structure inherited from log Gamma).
    """
    w = complex(w)
    if w.imag == 0.0:
        raise ValueError("j_continue_left: negative real axis is the branch cut")
    if w.real >= 0.0:
        raise ValueError("j_continue_left: requires Re w < 0 "
                         "(the imaginary axis is a natural boundary)")
    z = -w
    right_value = j_auto(z)
    if w.imag > 0.0:
        correction = _log1p(-cmath.exp(-2j * math.pi * z))
    else:
        correction = _log1p(-cmath.exp(2j * math.pi * z))
    return -right_value - correction


def j_quadrature(z: complex, spec: QuadratureSpec | None = None) -> complex:
    """J(z) from the defining integral, Re z > 0 only.

    Real and imaginary parts of the integrand are integrated separately by
    the adaptive semi-infinite scheme, making this route independent of the
    Lanczos rational core used by every analytic formula here.
    """
    z = complex(z)
    if not z.real > 0.0:
        raise ValueError("j_quadrature: the integral requires Re z > 0")
    if spec is None:
        spec = QuadratureSpec()
    z_sq = z * z
    inv_pi = 1.0 / math.pi

    def log_factor(t: float) -> float:
        # log(1 - e^{-2 pi t}), stable at both ends
        return math.log(-math.expm1(-2.0 * math.pi * t))

    def real_part(t: float) -> float:
        kernel = z / (z_sq + t * t)
        return -inv_pi * log_factor(t) * kernel.real

    value_re = integrate_semi_infinite(real_part, spec).value
    if z.imag == 0.0:
        return complex(value_re, 0.0)

    def imag_part(t: float) -> float:
        kernel = z / (z_sq + t * t)
        return -inv_pi * log_factor(t) * kernel.imag

    value_im = integrate_semi_infinite(imag_part, spec).value
    return complex(value_re, value_im)


def j_auto_named(z: complex) -> tuple[complex, str]:
    """J(z) by region dispatch, returning (value, route name).

    Re z > 0 goes to the Lanczos formula, Re z < 0 to the left-half-plane
    continuation.  Points exactly on the imaginary axis are rejected by the
    continuation route (natural boundary); call a formula route directly if
    a boundary value is wanted.
    """
    z = complex(z)
    if _on_cut(z):
        raise ValueError("j_auto: z on the branch cut (-inf, 0]")
    if z.real > 0.0:
        return j_lanczos(z), "lanczos"
    return j_continue_left(z), "continuation"


def j_auto(z: complex) -> complex:
    """J(z) by region dispatch (see :func:`j_auto_named`)."""
    return j_auto_named(z)[0]
