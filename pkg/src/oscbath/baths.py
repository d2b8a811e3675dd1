"""Heat-bath models for a damped quantum oscillator.

Three standard baths are supported, each defined by its memory-friction
kernel mu(z) (the half-line Fourier transform of the memory function, per
unit oscillator mass):

* Ohmic:                  mu(z) = gamma                  (frequency independent)
* single relaxation time: mu(z) = zeta / (1 - i z tau)   (Drude cutoff 1/tau)
* blackbody radiation:    mu(z) ~ z Omega^2 / (z + i Omega)  (electron form factor)

All three give a generalized susceptibility of one canonical shape,

    alpha(z) = (z + i Omega) / ( -m (z + i Omega') (z^2 + i gamma z - omega0^2) ),

parametrized by the quadruple (omega0, gamma, Omega, Omega'), with the
cutoffs related to the native parameters by

    single relaxation time:  tau = 1/Omega,  Omega = Omega' + gamma
    blackbody (QED):         1/Omega = 1/Omega' + gamma / omega0^2

and the Ohmic model the limit Omega, Omega' -> infinity.  Infinite cutoffs
are represented exactly (math.inf), never as large finite numbers.

Frequencies (gamma, omega0 and the cutoffs) share one unit; reduced units
set omega0 = 1.  tau and omega_prime in the spec types below are
dimensionless (tau * omega0 and Omega'/omega0 respectively).
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Union

__all__ = [
    "TAU_E_SECONDS",
    "OhmicSpec", "SingleRelaxationSpec", "QEDSpec", "BathSpec",
    "CanonicalBath", "RootPair",
    "canonicalize", "roots", "mu_tilde",
    "susceptibility", "susceptibility_kernel_form",
    "free_energy_integrand", "qed_mass_ratio", "gamma_large_cutoff",
]

# Electron radiation-reaction time 2 e^2 / (3 M c^3); the large-cutoff limit
# of the blackbody bath has gamma = omega0^2 * tau_e.
TAU_E_SECONDS = 6e-24


@dataclass(frozen=True)
class OhmicSpec:
    """Frequency-independent friction gamma = zeta / m."""
    gamma: float
    omega0: float = 1.0

    def __post_init__(self):
        _require_positive(omega0=self.omega0, gamma=self.gamma)


@dataclass(frozen=True)
class SingleRelaxationSpec:
    """Drude-type friction with relaxation time tau (dimensionless, tau*omega0).

    The model is meant for short memory, tau * gamma << 1 (equivalently a
    cutoff Omega = 1/tau far above gamma); construction warns when that
    ordering is violated and fails outright when the implied second cutoff
    Omega' = 1/tau - gamma would not be positive.
    """
    gamma: float
    tau: float
    omega0: float = 1.0

    def __post_init__(self):
        _require_positive(omega0=self.omega0, gamma=self.gamma, tau=self.tau)
        tau_gamma = self.tau * self.gamma / self.omega0
        if tau_gamma >= 1.0:
            raise ValueError(
                f"single-relaxation-time bath needs 1/tau > gamma "
                f"(got tau*gamma = {tau_gamma:g}); Omega' would be <= 0")
        if tau_gamma > 0.1:
            warnings.warn(
                f"relaxation time is not small (tau*gamma = {tau_gamma:.3g}); "
                "the single-relaxation-time model assumes tau*gamma << 1",
                stacklevel=2)


@dataclass(frozen=True)
class QEDSpec:
    """Blackbody-radiation bath with form-factor cutoff.

    ``omega_prime`` is Omega'/omega0.  ``large_cutoff_limit`` selects the
    point-electron limit Omega' -> infinity (bare mass -> 0), in which case
    Omega = omega0^2 / gamma and ``omega_prime`` is ignored.
    """
    gamma: float
    omega_prime: float | None = None
    large_cutoff_limit: bool = False
    omega0: float = 1.0

    def __post_init__(self):
        _require_positive(omega0=self.omega0, gamma=self.gamma)
        if not self.large_cutoff_limit:
            if self.omega_prime is None:
                raise ValueError("QED bath needs omega_prime "
                                 "(or large_cutoff_limit=True)")
            _require_positive(omega_prime=self.omega_prime)


BathSpec = Union[OhmicSpec, SingleRelaxationSpec, QEDSpec]


@dataclass(frozen=True)
class CanonicalBath:
    """The (omega0, gamma, Omega, Omega') quadruple of the canonical
    susceptibility.  Cutoffs are math.inf for the Ohmic case."""
    omega0: float
    gamma: float
    Omega: float = math.inf
    OmegaPrime: float = math.inf

    def __post_init__(self):
        _require_positive(omega0=self.omega0, gamma=self.gamma,
                          Omega=self.Omega, OmegaPrime=self.OmegaPrime)

    @property
    def has_finite_cutoff(self) -> bool:
        return math.isfinite(self.Omega) or math.isfinite(self.OmegaPrime)

    def scaled(self) -> "CanonicalBath":
        """The same bath in reduced units (frequencies over omega0)."""
        if self.omega0 == 1.0:
            return self
        w = self.omega0
        return CanonicalBath(1.0, self.gamma / w, self.Omega / w,
                             self.OmegaPrime / w)


@dataclass(frozen=True)
class RootPair:
    """Characteristic roots of z^2 + i gamma z - omega0^2 written as
    z = -i z1, -i z1*: z1 z1* = omega0^2 and z1 + z1* = gamma.

    Underdamped (gamma < 2 omega0): z1 = gamma/2 + i omega1 with
    omega1 = sqrt(omega0^2 - gamma^2/4).  Overdamped: both roots real and
    positive, z1 = gamma/2 - |omega1| the smaller; ``omega1`` then holds the
    magnitude of the imaginary frequency.  Critical damping is handled by
    the overdamped branch with omega1 = 0.
    """
    z1: complex
    z1_conj: complex
    omega1: float
    regime: str


def _require_positive(**values: float):
    for name, value in values.items():
        if not value > 0.0:
            raise ValueError(f"{name} must be > 0 (got {value!r})")


def canonicalize(spec: BathSpec) -> CanonicalBath:
    """Map a bath description onto the canonical (omega0, gamma, Omega,
    Omega') quadruple, applying the cutoff relations exactly."""
    if isinstance(spec, OhmicSpec):
        return CanonicalBath(spec.omega0, spec.gamma)
    if isinstance(spec, SingleRelaxationSpec):
        big_omega = spec.omega0 / spec.tau
        return CanonicalBath(spec.omega0, spec.gamma, big_omega,
                             big_omega - spec.gamma)
    if isinstance(spec, QEDSpec):
        if spec.large_cutoff_limit:
            return CanonicalBath(spec.omega0, spec.gamma,
                                 spec.omega0 ** 2 / spec.gamma, math.inf)
        omega_prime = spec.omega_prime * spec.omega0
        big_omega = 1.0 / (1.0 / omega_prime + spec.gamma / spec.omega0 ** 2)
        return CanonicalBath(spec.omega0, spec.gamma, big_omega, omega_prime)
    raise TypeError(f"not a bath spec: {spec!r}")


def roots(omega0: float, gamma: float) -> RootPair:
    """Characteristic root pair for given oscillator frequency and friction.

    The smaller overdamped root is computed as omega0^2 / (gamma/2 + |omega1|)
    to avoid the cancellation in gamma/2 - |omega1|.
    """
    _require_positive(omega0=omega0, gamma=gamma)
    disc = omega0 * omega0 - 0.25 * gamma * gamma
    if disc > 0.0:
        omega1 = math.sqrt(disc)
        return RootPair(complex(0.5 * gamma, omega1),
                        complex(0.5 * gamma, -omega1), omega1, "underdamped")
    if disc == 0.0:
        half = 0.5 * gamma
        return RootPair(complex(half, 0.0), complex(half, 0.0), 0.0, "critical")
    omega1 = math.sqrt(-disc)
    larger = 0.5 * gamma + omega1
    smaller = omega0 * omega0 / larger
    return RootPair(complex(smaller, 0.0), complex(larger, 0.0), omega1,
                    "overdamped")


def _friction_strength(spec: SingleRelaxationSpec) -> float:
    """zeta/m for the single-relaxation-time bath in terms of
    (gamma, Omega', omega0); tends to gamma in the Ohmic limit."""
    bath = canonicalize(spec)
    op, g, w0 = bath.OmegaPrime, bath.gamma, bath.omega0
    return g * (op * op + g * op + w0 * w0) / (op + g) ** 2


def _spring_rate(spec: BathSpec) -> float:
    """K/m, the oscillator spring constant per unit (bare) mass."""
    if isinstance(spec, OhmicSpec):
        return spec.omega0 ** 2
    bath = canonicalize(spec)
    op, g, w0 = bath.OmegaPrime, bath.gamma, bath.omega0
    if isinstance(spec, SingleRelaxationSpec):
        return w0 * w0 * op / (op + g)
    return w0 * w0 + g * op


def mu_tilde(spec: BathSpec, z: complex) -> complex:
    """Memory-friction kernel mu(z) per unit mass, upper half plane only.

    Ohmic: the constant gamma.  Single relaxation time: zeta/(1 - i z tau)
    with zeta and tau from the cutoff relations.  QED (finite cutoff):
    (gamma + Omega' - Omega) z / (z + i Omega), the form-factor kernel
    rewritten in the canonical parameters.
    """
    z = complex(z)
    if z.imag < 0.0:
        raise ValueError("mu_tilde: kernel is analytic for Im z >= 0 only")
    if isinstance(spec, OhmicSpec):
        return complex(spec.gamma, 0.0)
    if isinstance(spec, SingleRelaxationSpec):
        bath = canonicalize(spec)
        zeta = _friction_strength(spec)
        return zeta / (1.0 - 1j * z / bath.Omega)
    if isinstance(spec, QEDSpec):
        if spec.large_cutoff_limit:
            raise ValueError(
                "mu_tilde per unit bare mass is undefined in the "
                "point-electron limit (bare mass -> 0)")
        bath = canonicalize(spec)
        strength = bath.gamma + bath.OmegaPrime - bath.Omega
        return strength * z / (z + 1j * bath.Omega)
    raise TypeError(f"not a bath spec: {spec!r}")


def susceptibility(bath: CanonicalBath, z: complex,
                   mass_scale: float = 1.0) -> complex:
    """Generalized susceptibility alpha(z) in the canonical form.

    For infinite cutoffs the ratio (z + i Omega)/(z + i Omega') is taken as
    1 analytically.  All poles lie in the open lower half plane.
    """
    z = complex(z)
    osc = z * z + 1j * bath.gamma * z - bath.omega0 ** 2
    finite_O = math.isfinite(bath.Omega)
    finite_Op = math.isfinite(bath.OmegaPrime)
    if finite_O != finite_Op:
        raise ValueError(
            "susceptibility needs both cutoffs finite or both infinite; "
            "the point-electron limit has zero bare mass")
    if finite_O:
        denominator = -mass_scale * (z + 1j * bath.OmegaPrime) * osc
        numerator = z + 1j * bath.Omega
    else:
        denominator = -mass_scale * osc
        numerator = 1.0 + 0.0j
    if denominator == 0:
        raise ValueError(f"susceptibility: z = {z!r} is a pole")
    return numerator / denominator


def susceptibility_kernel_form(spec: BathSpec, z: complex) -> complex:
    """alpha(z) = 1 / (-z^2 - i z mu(z) + K/m) straight from the kernel;
    agrees with :func:`susceptibility` of the canonicalized bath (mass 1)."""
    z = complex(z)
    denominator = -z * z - 1j * z * mu_tilde(spec, z) + _spring_rate(spec)
    if denominator == 0:
        raise ValueError(f"susceptibility: z = {z!r} is a pole")
    return 1.0 / denominator


def free_energy_integrand(bath: CanonicalBath, omega: float) -> float:
    """Spectral factor of the free-energy integral (the thermal log factor
    is applied by the caller):

        -Omega/(w^2+Omega^2) + Omega'/(w^2+Omega'^2)
            + gamma (w^2 + omega0^2) / ((w^2-omega0^2)^2 + gamma^2 w^2)

    which is Im d log alpha(w + i0+)/dw.  Infinite cutoffs drop their
    Lorentzian terms analytically.
    """
    if not omega > 0.0:
        raise ValueError("free_energy_integrand: omega must be > 0")
    w2 = omega * omega
    w0sq = bath.omega0 ** 2
    diff = w2 - w0sq
    value = bath.gamma * (w2 + w0sq) / (diff * diff + (bath.gamma * omega) ** 2)
    if math.isfinite(bath.Omega):
        value -= bath.Omega / (w2 + bath.Omega ** 2)
    if math.isfinite(bath.OmegaPrime):
        value += bath.OmegaPrime / (w2 + bath.OmegaPrime ** 2)
    return value


def qed_mass_ratio(spec: QEDSpec) -> float:
    """Renormalized over bare mass, M/m = (omega0^2 + gamma Omega')
    (Omega' + gamma) / (omega0^2 Omega'); infinite in the point-electron
    limit."""
    if spec.large_cutoff_limit:
        return math.inf
    bath = canonicalize(spec)
    op, g, w0sq = bath.OmegaPrime, bath.gamma, bath.omega0 ** 2
    return (w0sq + g * op) * (op + g) / (w0sq * op)


def gamma_large_cutoff(omega0_si: float) -> float:
    """Reduced friction gamma/omega0 = omega0 * tau_e of the large-cutoff
    blackbody bath, for an oscillator frequency omega0 in rad/s."""
    _require_positive(omega0_si=omega0_si)
    return omega0_si * TAU_E_SECONDS
