"""Electric and magnetic polarizabilities of ground hyperfine sub-levels.

The electric polarizability sums discrete nP shells (hyperfine-resolved up
to `n_max`), a lumped far tail of high shells, and the P-wave continuum.
Differences between sub-levels are ~1e-6 of the total; they are computed
term-by-term on one shared intermediate-state grid so the cancellation is
exact to rounding.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy import special as sp_special

from .constants import CONST
from .dipole import (magnetic_dipole_element, radial_integral_continuum,
                     radial_integral_discrete, shell_angular_weights)
from .hyperfine import (HyperfineState, breit_rabi_energy,
                        enumerate_ground_manifold, fine_structure_energy,
                        hyperfine_constant_A, zero_field_hyperfine_energy)
from .isotopes import Isotope
from .quantum import HalfInteger
from .special import PoleError

# far-tail discrete shells beyond the hyperfine-resolved ones
_N_FAR = 400
_HALF = HalfInteger.of(0.5)
_THREE_HALF = HalfInteger.of(1.5)
_ONE = HalfInteger.of(1)


@dataclass(frozen=True)
class PolarizabilityTensor:
    """Diagonal polarizability tensor in the (x, y, z) frame, units cm^3."""

    xx: float
    yy: float
    zz: float

    def trace(self) -> float:
        return self.xx + self.yy + self.zz

    def dimensionless(self) -> "PolarizabilityTensor":
        """The same tensor in units of a0^3."""
        s = CONST.a0**3
        return PolarizabilityTensor(self.xx / s, self.yy / s, self.zz / s)

    def __sub__(self, other: "PolarizabilityTensor") -> "PolarizabilityTensor":
        return PolarizabilityTensor(self.xx - other.xx, self.yy - other.yy,
                                    self.zz - other.zz)


def ground_level_energy(iso: Isotope, a: HyperfineState) -> float:
    """Total E(1S, F) = E_J + hyperfine term at B = 0 [erg]."""
    return zero_field_hyperfine_energy(iso, 1, 0, _HALF, a.F)


@lru_cache(maxsize=None)
def _continuum_grid():
    """Cached Gauss grid over k = k*a0 with |R|^2 values (a0^2 units)."""
    x, w = np.polynomial.legendre.leggauss(32)
    edges = [0.0, 0.15, 0.35, 0.7, 1.1, 1.6, 2.3, 3.2, 4.5, 6.5, 9.0, 13.0]
    nodes, weights = [], []
    for lo, hi in zip(edges[:-1], edges[1:]):
        half = 0.5 * (hi - lo)
        nodes.append(0.5 * (lo + hi) + half * x)
        weights.append(half * w)
    k = np.concatenate(nodes)
    wts = np.concatenate(weights)
    r2 = np.array([radial_integral_continuum(float(kk)) ** 2 for kk in k])
    return k, wts, r2


@lru_cache(maxsize=64)
def _electric_tables(iso: Isotope, a: HyperfineState, n_max: int):
    """Intermediate-state grid for alpha^(a): (E_b, s_x, s_y, s_z).

    s_i = e^2 a0^2 |R|^2 w_i carries the full dipole strength along axis i
    (for continuum nodes the Gauss weight is folded in), so that
    alpha_i(i xi) = (2/hbar) sum s_i w_ba/(w_ba^2 + xi^2) with
    w_ba = (E_b - E_a)/hbar.
    """
    e2a02 = (CONST.e * CONST.a0) ** 2
    E_b, s_x, s_y, s_z = [], [], [], []

    # hyperfine-resolved nP shells
    for n in range(2, n_max + 1):
        r2 = radial_integral_discrete(n) ** 2
        for J_b in (_HALF, _THREE_HALF):
            A = hyperfine_constant_A(iso, n, _ONE, J_b)
            e_fine = fine_structure_energy(n, J_b)
            tF_lo = abs(iso.I.twice - J_b.twice)
            tF_hi = iso.I.twice + J_b.twice
            for tF in range(tF_lo, tF_hi + 1, 2):
                F_b = HalfInteger(tF)
                wx, wy, wz = shell_angular_weights(iso, a, J_b, F_b)
                fI, fJ, fF = float(iso.I), float(J_b), float(F_b)
                K = fF * (fF + 1.0) - fI * (fI + 1.0) - fJ * (fJ + 1.0)
                E_b.append(e_fine + 0.5 * A * K)
                s_x.append(e2a02 * r2 * wx)
                s_y.append(e2a02 * r2 * wy)
                s_z.append(e2a02 * r2 * wz)

    # far discrete tail, angular structure lumped to 1/3 per axis
    for n in range(n_max + 1, _N_FAR + 1):
        r2 = radial_integral_discrete(n) ** 2
        E_b.append(fine_structure_energy(n, _HALF))
        s = e2a02 * r2 / 3.0
        s_x.append(s)
        s_y.append(s)
        s_z.append(s)
    # zeta tail beyond _N_FAR: |R|^2 ~ 256 e^-4 / n^3
    r2_tail = 256.0 * math.exp(-4.0) * float(sp_special.zeta(3, _N_FAR + 1))
    E_b.append(0.0)
    s = e2a02 * r2_tail / 3.0
    s_x.append(s)
    s_y.append(s)
    s_z.append(s)

    # continuum, per-axis weight exactly 1/3 (closure over the P shell)
    k, wts, r2 = _continuum_grid()
    E_cont = CONST.w0 * k**2
    s_cont = e2a02 * (wts * r2) / 3.0

    E_b = np.concatenate([np.array(E_b), E_cont])
    s_x = np.concatenate([np.array(s_x), s_cont])
    s_y = np.concatenate([np.array(s_y), s_cont])
    s_z = np.concatenate([np.array(s_z), s_cont])
    E_a = ground_level_energy(iso, a)
    omega = (E_b - E_a) / CONST.hbar
    return omega, s_x, s_y, s_z


def _alpha_components(omega_ba, strengths, xi: float):
    g = (2.0 / CONST.hbar) * omega_ba / (omega_ba**2 + xi**2)
    return tuple(float(np.dot(s, g)) for s in strengths)


def static_electric_polarizability(iso: Isotope, a: HyperfineState,
                                   n_max: int = 30) -> PolarizabilityTensor:
    """alpha^(a)(0), discrete + continuum, hyperfine energies included [cm^3]."""
    return electric_polarizability(iso, a, xi=0.0, n_max=n_max)


def electric_polarizability(iso: Isotope, a: HyperfineState, xi: float = 0.0,
                            n_max: int = 30) -> PolarizabilityTensor:
    """alpha^(a)(i xi) at a point on the imaginary axis (xi = 0 is static)."""
    omega, s_x, s_y, s_z = _electric_tables(iso, a, n_max)
    ax, ay, az = _alpha_components(omega, (s_x, s_y, s_z), xi)
    return PolarizabilityTensor(ax, ay, az)


def electric_polarizability_vs_xi(iso: Isotope, a: HyperfineState,
                                  xi: np.ndarray, n_max: int = 30) -> np.ndarray:
    """alpha^(a)(i xi_n) for an array of xi; returns shape (3, len(xi))."""
    omega, s_x, s_y, s_z = _electric_tables(iso, a, n_max)
    g = (2.0 / CONST.hbar) * omega[:, None] / (omega[:, None] ** 2
                                               + np.asarray(xi)[None, :] ** 2)
    return np.vstack([s @ g for s in (s_x, s_y, s_z)])


def polarizability_difference(iso: Isotope, a: HyperfineState,
                              a_prime: HyperfineState, xi: float = 0.0,
                              n_max: int = 30) -> PolarizabilityTensor:
    """Delta alpha = alpha^(a) - alpha^(a'), matched term-by-term [cm^3]."""
    d = polarizability_difference_vs_xi(iso, a, a_prime,
                                        np.array([xi]), n_max=n_max)
    return PolarizabilityTensor(float(d[0, 0]), float(d[1, 0]), float(d[2, 0]))


def polarizability_difference_vs_xi(iso: Isotope, a: HyperfineState,
                                    a_prime: HyperfineState, xi: np.ndarray,
                                    n_max: int = 30) -> np.ndarray:
    """Delta alpha(i xi_n) on a shared intermediate grid; shape (3, len(xi)).

    Angular weights and the ground hyperfine energy both differ between the
    two sub-levels; each grid term is differenced before accumulation, so
    the ~1e-6 relative difference survives in double precision.
    """
    if a == a_prime:
        return np.zeros((3, len(np.asarray(xi))))
    om_a, *s_a = _electric_tables(iso, a, n_max)
    om_p, *s_p = _electric_tables(iso, a_prime, n_max)
    xi = np.asarray(xi, dtype=float)
    g_a = (2.0 / CONST.hbar) * om_a[:, None] / (om_a[:, None] ** 2 + xi[None, :] ** 2)
    g_p = (2.0 / CONST.hbar) * om_p[:, None] / (om_p[:, None] ** 2 + xi[None, :] ** 2)
    out = np.empty((3, len(xi)))
    for i in range(3):
        diff = s_a[i][:, None] * g_a - s_p[i][:, None] * g_p
        out[i] = diff.sum(axis=0)
    return out


@lru_cache(maxsize=256)
def _magnetic_tables(iso: Isotope, a: HyperfineState, B: float):
    """(omega_ba, m_x, m_y, m_z) over the other ground sub-levels at field B."""
    omega, m_x, m_y, m_z = [], [], [], []
    E_a = breit_rabi_energy(iso, a, B)
    for b in enumerate_ground_manifold(iso):
        if b == a:
            continue
        mu = magnetic_dipole_element(iso, a, b)
        w2 = mu.abs2()
        omega.append((breit_rabi_energy(iso, b, B) - E_a) / CONST.hbar)
        m_x.append(w2[0])
        m_y.append(w2[1])
        m_z.append(w2[2])
    return (np.array(omega), np.array(m_x), np.array(m_y), np.array(m_z))


def magnetic_polarizability(iso: Isotope, a: HyperfineState,
                            omega: float = 0.0, imag_axis: bool = False,
                            B: float = 0.0) -> PolarizabilityTensor:
    """beta^(a) at real frequency omega or at i*omega (imag_axis=True) [cm^3].

    Intermediate states are the ground sub-levels themselves.  Real-axis
    evaluation at a transition frequency raises PoleError; the resonant
    physics is handled separately by the shift engine.
    """
    om_ba, m_x, m_y, m_z = _magnetic_tables(iso, a, B)
    if imag_axis:
        g = (2.0 / CONST.hbar) * om_ba / (om_ba**2 + omega**2)
    else:
        res = om_ba**2 - omega**2
        if np.any(np.abs(res) <= 1e-9 * (om_ba**2 + omega**2)):
            raise PoleError(f"omega = {omega} rad/s hits a magnetic transition")
        g = (2.0 / CONST.hbar) * om_ba / res
    return PolarizabilityTensor(float(np.dot(m_x, g)), float(np.dot(m_y, g)),
                                float(np.dot(m_z, g)))


def magnetic_polarizability_vs_xi(iso: Isotope, a: HyperfineState,
                                  xi: np.ndarray, B: float = 0.0) -> np.ndarray:
    """beta^(a)(i xi_n) for an array of xi; returns shape (3, len(xi))."""
    om_ba, m_x, m_y, m_z = _magnetic_tables(iso, a, B)
    xi = np.asarray(xi, dtype=float)
    g = (2.0 / CONST.hbar) * om_ba[:, None] / (om_ba[:, None] ** 2 + xi[None, :] ** 2)
    return np.vstack([m @ g for m in (m_x, m_y, m_z)])


def magnetic_difference_vs_xi(iso: Isotope, a: HyperfineState,
                              a_prime: HyperfineState, xi: np.ndarray,
                              B: float = 0.0) -> np.ndarray:
    """Delta beta(i xi_n) between two sub-levels; shape (3, len(xi))."""
    return (magnetic_polarizability_vs_xi(iso, a, xi, B)
            - magnetic_polarizability_vs_xi(iso, a_prime, xi, B))
