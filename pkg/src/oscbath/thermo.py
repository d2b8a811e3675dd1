"""Thermodynamic functions of the damped oscillator.

Everything is computed in reduced units: temperatures enter as
theta = k T / (hbar omega0), free energy and internal energy come out in
units of hbar omega0, entropy and heat capacity in units of k.  The
zero-point contribution hbar omega / 2 is omitted throughout except in the
dedicated zero-point routines.

Two independent exact routes are provided.  The closed form writes the
free energy through the Stieltjes J-function at the four characteristic
frequencies,

    F(theta) = theta [ J(W) - J(W') - J(x1) - J(x1*) ],

with W = Omega/(2 pi theta omega0) etc. and x1 from the root pair of the
oscillator factor; for the Ohmic bath the cutoff terms are absent.  The
quadrature route integrates the spectral form

    F(theta) = (theta/pi) Integral dw log(1 - e^{-w/theta}) * bracket(w)

directly and exists purely to cross-check the closed form.  Low- and
high-temperature expansions of both the Ohmic and blackbody (QED) models
are implemented as printed series with their exact coefficients.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

from .baths import CanonicalBath, free_energy_integrand, roots
from .quadrature import QuadratureSpec, integrate_semi_infinite
from .stieltjes import EULER_GAMMA, j_asymptotic, j_lanczos, j_series_small, zeta

__all__ = [
    "ThermoPoint", "ExpansionSpec", "DivergenceError",
    "free_energy_exact", "free_energy_quadrature", "thermo_point",
    "ohmic_low_temperature", "ohmic_high_temperature",
    "qed_low_temperature", "qed_high_temperature",
    "cutoff_correction", "series_point",
    "zero_point", "zero_point_ohmic_asymptotic",
]

# finite-difference steps (in log theta) for entropy and heat capacity
_ENTROPY_STEP = 1e-3
_HEAT_CAPACITY_STEP = 1e-2
_MIN_THETA_EXACT = 1e-12

# J arguments at least this large use the large-argument series (11 terms),
# whose truncation error is then below 1e-21; smaller arguments use the
# Lanczos formula, or the power series when small enough for it to converge
# fast.  Cutoff pairs share one method so their difference benefits from
# error cancellation.
_ASYMPTOTIC_CUT = 10.0
_SERIES_CUT = 0.5


class DivergenceError(ValueError):
    """A requested quantity has no finite value for this bath."""


@dataclass(frozen=True)
class ThermoPoint:
    """One temperature sample: theta = kT/(hbar omega0), F and U in
    hbar omega0, S and C in k, and the route that produced them."""
    theta: float
    F: float
    S: float
    U: float
    C: float
    method: str


@dataclass(frozen=True)
class ExpansionSpec:
    """Requested series evaluation; regime bounds are advisory."""
    regime: str               # "low_T" | "high_T"
    n_terms: int
    model: str                # "ohmic" | "srt" | "qed"

    def __post_init__(self):
        if self.regime not in ("low_T", "high_T"):
            raise ValueError(f"unknown regime {self.regime!r}")
        if self.n_terms < 1:
            raise ValueError("n_terms must be >= 1")
        if self.model not in ("ohmic", "srt", "qed"):
            raise ValueError(f"unknown model {self.model!r}")

    def warn_if_outside(self, theta: float):
        boundary = 1.0 / (2.0 * math.pi)
        if self.regime == "low_T" and theta > boundary:
            warnings.warn(f"low-temperature series at theta = {theta:g} "
                          f"(intended for theta << {boundary:.3g})",
                          stacklevel=2)
        if self.regime == "high_T" and theta < boundary:
            warnings.warn(f"high-temperature series at theta = {theta:g} "
                          f"(intended for theta >> {boundary:.3g})",
                          stacklevel=2)


def _j_right(z: complex) -> complex:
    """J on the closed right half plane, by the most accurate formula route
    for the size of the argument (the full asymptotic sum is good to ~1e-17
    absolute for |z| >= 10 at any angle; the power series to ~1e-16 below
    |z| = 0.5; the Lanczos formula covers the ring between)."""
    size = abs(z)
    if size < _SERIES_CUT:
        return j_series_small(z, 60)
    if size >= _ASYMPTOTIC_CUT:
        return j_asymptotic(z, 11)[0]
    return j_lanczos(z)


def _cutoff_j_difference(a: float, b: float) -> float:
    """J(a) - J(b) for the positive real cutoff arguments, both values from
    one method."""
    if min(a, b) >= _ASYMPTOTIC_CUT:
        return (j_asymptotic(a, 11)[0] - j_asymptotic(b, 11)[0]).real
    return (_j_right(complex(a)) - _j_right(complex(b))).real


def free_energy_exact(bath: CanonicalBath, theta: float) -> float:
    """Oscillator free energy by the closed J-function form.

    Underdamped root arguments are complex with positive real part and are
    evaluated by right-half-plane routes; the result is real up to a
    residue below 1e-12, which is checked and discarded.  Infinite cutoffs
    contribute nothing (J -> 0 at infinity) and are skipped analytically.
    """
    if not theta > 0.0:
        raise ValueError("free_energy_exact needs theta > 0; "
                         "the theta = 0 limit is zero_point()")
    scaled = bath.scaled()
    pair = roots(1.0, scaled.gamma)
    s = 1.0 / (2.0 * math.pi * theta)
    total = -(_j_right(pair.z1 * s) + _j_right(pair.z1_conj * s))
    if abs(total.imag) > 1e-12 * max(1.0, abs(total.real)):
        raise ArithmeticError(
            f"root J-pair left an imaginary residue {total.imag:.3e}")
    value = total.real
    finite_O = math.isfinite(scaled.Omega)
    finite_Op = math.isfinite(scaled.OmegaPrime)
    if finite_O and finite_Op:
        value += _cutoff_j_difference(scaled.Omega * s, scaled.OmegaPrime * s)
    elif finite_O:
        value += _j_right(complex(scaled.Omega * s)).real
    elif finite_Op:
        value -= _j_right(complex(scaled.OmegaPrime * s)).real
    return theta * value


def free_energy_quadrature(bath: CanonicalBath, theta: float,
                           spec: QuadratureSpec | None = None) -> float:
    """Oscillator free energy by direct quadrature of the spectral form;
    the independent cross-check of :func:`free_energy_exact`."""
    if not theta > 0.0:
        raise ValueError("free_energy_quadrature needs theta > 0")
    if spec is None:
        spec = QuadratureSpec()
    scaled = bath.scaled()

    def integrand(w: float) -> float:
        # log(1 - e^{-w/theta}); expm1 keeps the w -> 0 end accurate
        return math.log(-math.expm1(-w / theta)) * free_energy_integrand(scaled, w)

    result = integrate_semi_infinite(integrand, spec)
    return (theta / math.pi) * result.value


def _entropy_from(free_energy, theta: float, step: float) -> float:
    """S = -dF/dtheta by central differences in log theta, one Richardson
    level."""
    u = math.log(theta)

    def slope(h: float) -> float:
        return (free_energy(math.exp(u + h)) - free_energy(math.exp(u - h))) / (2.0 * h)

    refined = (4.0 * slope(0.5 * step) - slope(step)) / 3.0
    return -refined / theta


def thermo_point(bath: CanonicalBath, theta: float,
                 method: str = "exact_j") -> ThermoPoint:
    """F, S, U, C at one temperature from an exact route.

    S comes from differencing the free energy in log theta (Richardson
    refined), U = F + theta S, and C = theta dS/dtheta by nested
    differencing; error budget is ~1e-9 in reduced units.
    """
    if method == "exact_j":
        free_energy = lambda th: free_energy_exact(bath, th)
    elif method == "exact_quadrature":
        free_energy = lambda th: free_energy_quadrature(bath, th)
    else:
        raise ValueError(f"unknown exact method {method!r}")
    if not theta > 0.0:
        raise ValueError("thermo_point needs theta > 0")
    if theta < _MIN_THETA_EXACT:
        raise ValueError(
            f"theta = {theta:g} is too small for stable differentiation; "
            "use the low-temperature series")

    entropy_at = lambda th: _entropy_from(free_energy, th, _ENTROPY_STEP)
    F = free_energy(theta)
    S = entropy_at(theta)
    U = F + theta * S

    u = math.log(theta)

    def s_slope(h: float) -> float:
        return (entropy_at(math.exp(u + h)) - entropy_at(math.exp(u - h))) / (2.0 * h)

    h = _HEAT_CAPACITY_STEP
    C = (4.0 * s_slope(0.5 * h) - s_slope(h)) / 3.0   # theta dS/dtheta = dS/du
    return ThermoPoint(theta, F, S, U, C, method)


def _low_t_tables(theta: float, gamma: float):
    """Term-by-term low-temperature series of F, S, U, C (omega0 = 1)."""
    g2 = gamma * gamma
    a = gamma
    b = gamma * (3.0 - g2)
    c = gamma * (5.0 - 5.0 * g2 + g2 * g2)
    pi = math.pi
    t = theta
    F_terms = (pi * t**2 * a / 6.0,
               pi**3 * t**4 * b / 45.0,
               8.0 * pi**5 * t**6 * c / 315.0)
    S_terms = (pi * t * a / 3.0,
               4.0 * pi**3 * t**3 * b / 45.0,
               16.0 * pi**5 * t**5 * c / 105.0)
    U_terms = (pi * t**2 * a / 6.0,
               pi**3 * t**4 * b / 15.0,
               8.0 * pi**5 * t**6 * c / 63.0)
    C_terms = (pi * t * a / 3.0,
               4.0 * pi**3 * t**3 * b / 15.0,
               16.0 * pi**5 * t**5 * c / 21.0)
    return F_terms, S_terms, U_terms, C_terms


def ohmic_low_temperature(theta: float, gamma: float,
                          n_terms: int = 3) -> ThermoPoint:
    """Low-temperature series for the Ohmic bath (reduced units):

        F = -[ pi theta^2 gamma/6 + pi^3 theta^4 gamma(3-gamma^2)/45
               + 8 pi^5 theta^6 gamma(5-5 gamma^2+gamma^4)/315 ]

    and the matching term-by-term S, U = F + theta S and C.  Every term
    carries a factor gamma, so the uncoupled limit vanishes identically.
    """
    if not 1 <= n_terms <= 3:
        raise ValueError("ohmic_low_temperature: n_terms must be 1..3")
    F_terms, S_terms, U_terms, C_terms = _low_t_tables(theta, gamma)
    n = n_terms
    return ThermoPoint(theta, -sum(F_terms[:n]), sum(S_terms[:n]),
                       sum(U_terms[:n]), sum(C_terms[:n]), "low_T_series")


def qed_low_temperature(theta: float, gamma: float,
                        n_terms: int = 2) -> ThermoPoint:
    """Low-temperature series for the blackbody (QED) bath: the theta^2
    term of the Ohmic series is cancelled exactly by the cutoff
    correction, leaving the theta^4 term in front."""
    if not 1 <= n_terms <= 2:
        raise ValueError("qed_low_temperature: n_terms must be 1..2")
    F_terms, S_terms, U_terms, C_terms = _low_t_tables(theta, gamma)
    n = n_terms + 1
    return ThermoPoint(theta, -sum(F_terms[1:n]), sum(S_terms[1:n]),
                       sum(U_terms[1:n]), sum(C_terms[1:n]), "low_T_series")


def _chebyshev(n: int, x: float) -> float:
    """T_n(x) by the recurrence; for x > 1 this continues cos(n arccos x)
    to cosh(n arccosh x), which is what the overdamped case needs."""
    if n == 0:
        return 1.0
    prev, cur = 1.0, x
    for _ in range(n - 1):
        prev, cur = cur, 2.0 * x * cur - prev
    return cur


def _arc_term(gamma: float) -> float:
    """omega1 * arccos(gamma/2) continued through critical damping as
    |omega1| * log(gamma/2 - |omega1|) (omega0 = 1)."""
    pair = roots(1.0, gamma)
    if pair.regime == "underdamped":
        return pair.omega1 * math.acos(0.5 * gamma)
    if pair.regime == "critical":
        return 0.0
    return pair.omega1 * math.log(pair.z1.real)


def ohmic_high_temperature(theta: float, gamma: float,
                           n_terms: int = 6) -> ThermoPoint:
    """High-temperature series for the Ohmic bath (reduced units).

    With x = 1/(2 pi theta) and T_n the Chebyshev polynomial at gamma/2,

        F = -theta log theta - (gamma/2 pi) log(2 pi theta)
            - arc/pi - (gamma/2 pi)(1 - gamma_E)
            - 2 theta sum_n (-1)^n (zeta(n)/n) x^n T_n,

    where arc = omega1 arccos(gamma/2), continued for overdamped friction
    as |omega1| log(gamma/2 - |omega1|); S, U, C are the term-by-term
    derivatives.  The sum runs over n = 2 .. n_terms+1.  As gamma -> 0 the
    series resums to the uncoupled result theta log(1 - e^{-1/theta}).
    """
    if not theta > 0.0:
        raise ValueError("ohmic_high_temperature needs theta > 0")
    if n_terms < 1:
        raise ValueError("n_terms must be >= 1")
    x = 1.0 / (2.0 * math.pi * theta)
    arc = _arc_term(gamma)
    half_g = gamma / (2.0 * math.pi)

    sum_F = sum_S = sum_U = sum_C = 0.0
    xn = x
    half = 0.5 * gamma
    for n in range(2, n_terms + 2):
        xn *= x
        base = (-1.0) ** n * zeta(n) * xn * _chebyshev(n, half)
        sum_F += base / n
        sum_S += base * (n - 1) / n
        sum_U += base
        sum_C += base * (n - 1)

    log_2pt = math.log(2.0 * math.pi * theta)
    F = (-theta * math.log(theta) - half_g * log_2pt - arc / math.pi
         - half_g * (1.0 - EULER_GAMMA) - 2.0 * theta * sum_F)
    S = math.log(theta) + 1.0 + half_g / theta - 2.0 * sum_S
    U = (theta - half_g * (log_2pt - EULER_GAMMA) - arc / math.pi
         - 2.0 * theta * sum_U)
    C = 1.0 - half_g / theta + 2.0 * sum_C
    return ThermoPoint(theta, F, S, U, C, "high_T_series")


def qed_high_temperature(theta: float, gamma: float,
                         n_terms: int = 2) -> ThermoPoint:
    """Leading high-temperature behavior of the blackbody (QED) bath:

        F = -theta log theta + pi theta^2 gamma / 6
        S = log theta + 1 - pi theta gamma / 3
        U = theta - pi theta^2 gamma / 3
        C = 1 - 2 pi theta gamma / 3        (= dU/dtheta)

    These are truncations at different orders of the same expansion, so
    U - F - theta S is not zero here but of the dropped order
    (pi theta^2 gamma / 6).
    """
    if not 1 <= n_terms <= 2:
        raise ValueError("qed_high_temperature: n_terms must be 1..2")
    if not theta > 0.0:
        raise ValueError("qed_high_temperature needs theta > 0")
    F = -theta * math.log(theta)
    S = math.log(theta) + 1.0
    U = theta
    C = 1.0
    if n_terms == 2:
        F += math.pi * theta * theta * gamma / 6.0
        S -= math.pi * theta * gamma / 3.0
        U -= math.pi * theta * theta * gamma / 3.0
        C -= 2.0 * math.pi * theta * gamma / 3.0
    return ThermoPoint(theta, F, S, U, C, "high_T_series")


def cutoff_correction(bath: CanonicalBath, theta: float) -> float:
    """Leading finite-cutoff shift of the free energy away from Ohmic,

        pi theta^2 / 6 * (1/Omega - 1/Omega')      (reduced units),

    valid while both cutoffs are large against kT.  Zero when the cutoffs
    are infinite; for the QED bath it equals + pi theta^2 gamma / 6, for
    the single-relaxation-time bath it is small and negative.
    """
    scaled = bath.scaled()
    inv_O = 0.0 if math.isinf(scaled.Omega) else 1.0 / scaled.Omega
    inv_Op = 0.0 if math.isinf(scaled.OmegaPrime) else 1.0 / scaled.OmegaPrime
    return math.pi * theta * theta / 6.0 * (inv_O - inv_Op)


def series_point(bath: CanonicalBath, theta: float, regime: str,
                 model: str, n_terms: int | None = None) -> ThermoPoint:
    """Series-route ThermoPoint for a canonical bath.

    Ohmic uses the Ohmic series; QED uses the dedicated QED series; the
    single-relaxation-time model uses the Ohmic series plus the
    finite-cutoff correction and its temperature derivatives.  Requests
    outside the series' intended regime warn but still evaluate.
    """
    ExpansionSpec(regime, n_terms or 2, model).warn_if_outside(theta)
    scaled = bath.scaled()
    g = scaled.gamma
    if model == "qed":
        if regime == "low_T":
            return qed_low_temperature(theta, g, n_terms or 2)
        return qed_high_temperature(theta, g, n_terms or 2)
    if regime == "low_T":
        point = ohmic_low_temperature(theta, g, n_terms or 3)
    else:
        point = ohmic_high_temperature(theta, g, n_terms or 6)
    if model == "ohmic":
        return point
    # finite-cutoff shift: dF = pi theta^2 delta / 6
    delta = cutoff_correction(bath, theta)          # = pi theta^2 delta/6
    dS = -2.0 * delta / theta                        # -d(dF)/dtheta
    return ThermoPoint(theta, point.F + delta, point.S + dS,
                       point.U + delta + theta * dS, point.C + dS,
                       point.method)


def zero_point(bath: CanonicalBath) -> float:
    """Zero-point free energy (= zero-point energy), units hbar omega0.

    Finite only when the cutoff sum rule Omega = Omega' + gamma holds (the
    single-relaxation-time bath): the four-Lorentzian spectral integrand
    then decays fast enough.  The value is

        (1/2 pi) [ Omega' log((Omega'+gamma)/Omega')
                   + gamma log((Omega'+gamma)/omega0) + 2 arc ],

    with arc = omega1 arccos(gamma/2 omega0) continued overdamped as for
    the high-temperature series.  The QED cutoff relation breaks the sum
    rule no matter how large the cutoffs are, and the Ohmic limit diverges
    logarithmically; both raise :class:`DivergenceError`.
    """
    scaled = bath.scaled()
    if math.isinf(scaled.OmegaPrime) and math.isinf(scaled.Omega):
        raise DivergenceError(
            "zero-point energy of the Ohmic bath is logarithmically "
            "divergent; use zero_point_ohmic_asymptotic for small tau")
    if math.isinf(scaled.OmegaPrime) or math.isinf(scaled.Omega):
        raise DivergenceError(
            "zero-point energy diverges for the QED model, for any value "
            "of the cutoff (the spectral sum rule Omega = Omega' + gamma "
            "fails)")
    mismatch = abs(scaled.Omega - scaled.OmegaPrime - scaled.gamma)
    if mismatch > 1e-9 * scaled.Omega:
        raise DivergenceError(
            "zero-point energy diverges for the QED model, for any value "
            f"of the cutoff (Omega - Omega' - gamma = {mismatch:.3g} != 0)")
    op, g = scaled.OmegaPrime, scaled.gamma
    value = op * math.log1p(g / op) + g * math.log(op + g) + 2.0 * _arc_term(g)
    return value / (2.0 * math.pi)


def zero_point_ohmic_asymptotic(omega0: float, gamma: float,
                                tau: float) -> float:
    """Small-tau zero-point energy of the Ohmic bath (tau dimensionless,
    tau * omega0):

        (1/2 pi) [ gamma (1 - log tau) + 2 arc ]      (units hbar omega0)

    which diverges logarithmically as tau -> 0: shrinking tau tenfold adds
    exactly (gamma / 2 pi) log 10.
    """
    if not tau > 0.0:
        raise ValueError("tau must be > 0")
    g = gamma / omega0
    value = g * (1.0 - math.log(tau)) + 2.0 * _arc_term(g)
    return value / (2.0 * math.pi)
