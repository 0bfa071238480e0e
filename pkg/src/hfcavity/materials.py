"""Mirror materials: Drude metals, the Si substrate, Fresnel and layer optics.

All reflection coefficients use the wavevector branch Im k_x >= 0 (waves
decay into each medium); mu = 1 for every material.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .constants import CONST, ev_to_rad_s


@dataclass(frozen=True)
class DrudeMaterial:
    """Drude metal, eps = 1 - Omega_p^2/(omega (omega + i gamma(T)))."""

    name: str
    omega_p_ev: float        # plasma frequency [eV/hbar]
    gamma_room_ev: float     # room-temperature relaxation frequency [eV/hbar]
    alpha_T: float           # linear thermal coefficient of gamma [1/K]
    T_debye: float           # Debye temperature [K]

    @property
    def omega_p(self) -> float:
        return ev_to_rad_s(self.omega_p_ev)

    @property
    def gamma_room(self) -> float:
        return ev_to_rad_s(self.gamma_room_ev)


@dataclass(frozen=True)
class OscillatorMaterial:
    """Single-oscillator dielectric (the Si substrate)."""

    name: str
    eps_inf: float
    eps_0: float
    omega_uv: float          # [rad/s]
    gamma: float             # [rad/s]


@dataclass(frozen=True)
class IdealMaterial:
    """Debug materials: 'vacuum' (no reflection) or 'perfect' conductor."""

    name: str


GOLD = DrudeMaterial("Au", 9.0, 0.035, 3.4e-3, 165.0)
ALUMINIUM = DrudeMaterial("Al", 11.5, 0.050, 4.3e-3, 428.0)
SILVER = DrudeMaterial("Ag", 9.014, 0.018, 4.0e-3, 225.0)
PLATINUM = DrudeMaterial("Pt", 4.89, 0.07, 3.9e-3, 240.0)
SILICON = OscillatorMaterial("Si", 1.035, 11.67, 6.6e15, 1.52e12)
VACUUM = IdealMaterial("vacuum")
PERFECT = IdealMaterial("perfect")

METALS = {m.name: m for m in (GOLD, ALUMINIUM, SILVER, PLATINUM)}
MATERIALS = {**METALS, "Si": SILICON, "vacuum": VACUUM, "perfect": PERFECT}

# Operating convention for cryogenic runs: at and below this temperature the
# relaxation frequency sits at its residual (impurity-limited) value
# gamma_room/RRR; above it the phonon-dominated linear law applies.
SATURATION_TEMPERATURE_K = 70.0


def relaxation_frequency(mat: DrudeMaterial, T: float, RRR: float = 1.0) -> float:
    """Temperature-dependent Drude relaxation frequency gamma(T) [rad/s].

    gamma = gamma_room [1 + (T - 300 K) alpha] in the linear regime, never
    below the saturation value gamma_room/RRR; for T <= 70 K the saturation
    value itself is used.
    """
    if T <= 0:
        raise ValueError("temperature must be positive")
    if RRR < 1:
        raise ValueError("RRR must be >= 1")
    gamma_sat = mat.gamma_room / RRR
    if T <= SATURATION_TEMPERATURE_K:
        return gamma_sat
    linear = mat.gamma_room * (1.0 + (T - 300.0) * mat.alpha_T)
    return max(linear, gamma_sat)


def permittivity(mat, omega: complex, T: float = 300.0,
                 RRR: float = 1.0) -> complex:
    """Material permittivity at complex frequency omega [rad/s].

    Real omega gives the retarded response (Im eps > 0); purely imaginary
    omega = i xi gives the real, monotone eps(i xi).  omega = 0 raises for
    the Drude model (conductor pole).
    """
    if isinstance(mat, IdealMaterial):
        raise ValueError(f"{mat.name!r} has no permittivity; it is a debug mirror")
    omega = complex(omega)
    if isinstance(mat, DrudeMaterial):
        if omega == 0:
            raise ZeroDivisionError("Drude permittivity diverges at omega = 0")
        gamma = relaxation_frequency(mat, T, RRR)
        if omega.real == 0.0 and omega.imag > 0.0:
            xi = omega.imag
            return complex(1.0 + mat.omega_p**2 / (xi * (xi + gamma)))
        return 1.0 - mat.omega_p**2 / (omega * (omega + 1j * gamma))
    if isinstance(mat, OscillatorMaterial):
        if omega.real == 0.0 and omega.imag >= 0.0:
            xi = omega.imag
            return complex(mat.eps_inf + mat.omega_uv**2 * (mat.eps_0 - mat.eps_inf)
                           / (mat.omega_uv**2 + xi**2 + xi * mat.gamma))
        return (mat.eps_inf + mat.omega_uv**2 * (mat.eps_0 - mat.eps_inf)
                / (mat.omega_uv**2 - omega**2 - 1j * omega * mat.gamma))
    raise TypeError(f"unsupported material {mat!r}")


def kx_medium(eps: complex, omega: complex, k_perp) -> complex:
    """Normal wavevector sqrt(eps omega^2/c^2 - k_perp^2), branch Im >= 0.

    Accepts a scalar or an ndarray of transverse wavevectors.
    """
    k_perp = np.asarray(k_perp, dtype=complex)
    arg = eps * (omega / CONST.c) ** 2 - k_perp**2
    root = np.sqrt(arg)
    flip = (root.imag < 0.0) | ((root.imag == 0.0) & (root.real < 0.0))
    root = np.where(flip, -root, root)
    if root.ndim == 0:
        return complex(root)
    return root


def fresnel_interface(pol: str, eps_a: complex, eps_b: complex,
                      omega: complex, k_perp: float) -> complex:
    """Fresnel reflection coefficient of the (a -> b) planar interface.

    r_TE = (kx_a - kx_b)/(kx_a + kx_b);
    r_TM = (eps_b kx_a - eps_a kx_b)/(eps_b kx_a + eps_a kx_b).
    """
    kx_a = kx_medium(eps_a, omega, k_perp)
    kx_b = kx_medium(eps_b, omega, k_perp)
    if pol == "s":
        return (kx_a - kx_b) / (kx_a + kx_b)
    if pol == "p":
        return (eps_b * kx_a - eps_a * kx_b) / (eps_b * kx_a + eps_a * kx_b)
    raise ValueError("polarization must be 's' or 'p'")


@dataclass(frozen=True)
class MirrorStack:
    """Layered mirror: ordered (material, thickness_cm) layers on a substrate.

    Layers are listed from the vacuum side.  The headline configuration is
    one metal layer of thickness w on a thick Si substrate.
    """

    layers: tuple
    substrate: object

    def __post_init__(self):
        for _, w in self.layers:
            if w <= 0:
                raise ValueError("layer thicknesses must be positive")

    @staticmethod
    def metal_on_si(metal, thickness_cm: float) -> "MirrorStack":
        return MirrorStack(((metal, thickness_cm),), SILICON)

    @staticmethod
    def bulk(material) -> "MirrorStack":
        return MirrorStack((), material)


def mirror_reflection(stack: MirrorStack, pol: str, omega: complex,
                      k_perp: float, T: float = 300.0, RRR: float = 1.0) -> complex:
    """Reflection coefficient of a layered mirror seen from vacuum.

    Substrate-up recursion; a single layer reduces to
    R = (r01 + e^{2 i w kx1} r12)/(1 + e^{2 i w kx1} r01 r12).
    """
    scalar = np.ndim(k_perp) == 0
    if isinstance(stack.substrate, IdealMaterial):
        value = 0.0j if stack.substrate.name == "vacuum" \
            else (-1.0 + 0.0j if pol == "s" else 1.0 + 0.0j)
        out = np.full(np.shape(k_perp), value) if not scalar else value
        return out

    def eps_of(mat) -> complex:
        return permittivity(mat, omega, T, RRR)

    media = [1.0 + 0.0j] + [eps_of(m) for m, _ in stack.layers] \
        + [eps_of(stack.substrate)]
    widths = [w for _, w in stack.layers]

    # reflection looking down from the deepest layer into the substrate
    R = fresnel_interface(pol, media[-2], media[-1], omega, k_perp)
    for j in range(len(widths) - 1, -1, -1):
        r_top = fresnel_interface(pol, media[j], media[j + 1], omega, k_perp)
        phase = np.exp(2j * widths[j] * kx_medium(media[j + 1], omega, k_perp))
        R = (r_top + phase * R) / (1.0 + phase * r_top * R)
    return R


def static_tm_reflection(stack: MirrorStack, k_perp, T: float = 300.0,
                         RRR: float = 1.0):
    """TM mirror reflection in the xi -> 0+ limit (TE vanishes there).

    Every normal wavevector tends to i k_perp, so interface coefficients
    reduce to (eps_b - eps_a)/(eps_b + eps_a) with the static permittivities;
    the Drude model's eps -> infinity makes a metal interface +1 from vacuum
    and -1 from within the metal.  Only the layer phases keep a k_perp
    dependence.
    """
    scalar = np.ndim(k_perp) == 0
    k_perp = np.asarray(k_perp, dtype=float)
    if isinstance(stack.substrate, IdealMaterial):
        value = 0.0j if stack.substrate.name == "vacuum" else 1.0 + 0.0j
        out = np.full(k_perp.shape, value)
        return complex(out) if scalar else out

    def eps0(mat):
        if isinstance(mat, DrudeMaterial):
            return math.inf
        return permittivity(mat, 0.0, T, RRR).real

    def r_static(ea, eb) -> complex:
        if math.isinf(eb) and math.isinf(ea):
            return 0.0 + 0.0j
        if math.isinf(eb):
            return 1.0 + 0.0j
        if math.isinf(ea):
            return -1.0 + 0.0j
        return complex((eb - ea) / (eb + ea))

    eps_list = [1.0] + [eps0(m) for m, _ in stack.layers] + [eps0(stack.substrate)]
    widths = [w for _, w in stack.layers]
    R = np.full(k_perp.shape, r_static(eps_list[-2], eps_list[-1]))
    for j in range(len(widths) - 1, -1, -1):
        r_top = r_static(eps_list[j], eps_list[j + 1])
        phase = np.exp(-2.0 * widths[j] * k_perp)
        R = (r_top + phase * R) / (1.0 + phase * r_top * R)
    return complex(R) if scalar else R


def dc_conductivity(mat: DrudeMaterial, T: float = 300.0, RRR: float = 1.0) -> float:
    """Drude dc conductivity sigma = Omega_p^2/(4 pi gamma) [1/s]."""
    return mat.omega_p**2 / (4.0 * math.pi * relaxation_frequency(mat, T, RRR))


def skin_depth(mat: DrudeMaterial, nu_hz: float, T: float = 300.0,
               RRR: float = 1.0) -> float:
    """Skin depth delta = c/(2 pi sqrt(nu sigma)) at frequency nu [cm]."""
    if nu_hz <= 0:
        raise ValueError("frequency must be positive")
    sigma = dc_conductivity(mat, T, RRR)
    return CONST.c / (2.0 * math.pi * math.sqrt(nu_hz * sigma))
