"""Hyperfine and Zeeman energies of hydrogenic levels, up to Breit-Rabi.

Energies returned by `breit_rabi_energy` and the zero-field hyperfine terms
are measured from the fine-structure level E_J; that additive constant
drops out of every transition frequency.  g_J = 2 is used for the ground
state (leading-order electron gyromagnetic factor).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .constants import CONST
from .isotopes import Isotope
from .quantum import HalfInteger

G_J_GROUND = 2.0


class DegenerateTransitionError(ValueError):
    """The requested pair of states is degenerate at this field."""


@dataclass(frozen=True)
class HyperfineState:
    """Ground-state Zeeman sub-level (F, M_F).

    `branch` is +1 for states connected to the zero-field level F = I+1/2
    and -1 for F = I-1/2; it fixes the square-root sign in the Breit-Rabi
    formula once the weak-field labels stop being good quantum numbers.
    """

    F: HalfInteger
    M_F: HalfInteger
    branch: int

    def __post_init__(self):
        if self.branch not in (-1, +1):
            raise ValueError("branch must be +1 or -1")
        if abs(self.M_F.twice) > self.F.twice:
            raise ValueError(f"|M_F| = {abs(self.M_F)} exceeds F = {self.F}")

    def label(self) -> str:
        return f"({self.F},{self.M_F})"


def ground_state(iso: Isotope, F, M_F) -> HyperfineState:
    """The ground-manifold sub-level (F, M_F), with branch inferred from F."""
    F = HalfInteger.of(F)
    M_F = HalfInteger.of(M_F)
    upper = iso.I + HalfInteger.of(0.5)
    lower = iso.I - HalfInteger.of(0.5)
    if F == upper:
        branch = +1
    elif F == lower:
        branch = -1
    else:
        raise ValueError(f"F = {F} is not I +/- 1/2 for isotope {iso.name}")
    return HyperfineState(F, M_F, branch)


@dataclass(frozen=True)
class ExcitedLevel:
    """An intermediate |n L J; F M_F> level, or a continuum level at k_tilde.

    For continuum states `n` is None and `k_tilde` = k*a0 labels the energy
    E = w0 * k_tilde^2 above threshold.
    """

    n: int | None
    L: HalfInteger
    J: HalfInteger
    F: HalfInteger
    M_F: HalfInteger
    k_tilde: float | None = None

    def __post_init__(self):
        tL, tJ, tF = self.L.twice, self.J.twice, self.F.twice
        if not abs(tL - 1) <= tJ <= tL + 1:
            raise ValueError("J must satisfy |L - 1/2| <= J <= L + 1/2")
        if self.n is None and self.k_tilde is None:
            raise ValueError("either n or k_tilde must be given")

    def with_projection(self, M_F) -> "ExcitedLevel":
        return ExcitedLevel(self.n, self.L, self.J, self.F,
                            HalfInteger.of(M_F), self.k_tilde)


def fine_structure_energy(n: int, J) -> float:
    """Fine-structure level energy E_J to order alpha^2 [erg].

    E_J = -w0 [1/n^2 + (alpha^2/n^3)(1/(J+1/2) - 3/(4n))]
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    J = HalfInteger.of(J)
    a2 = CONST.alpha_e**2
    return -CONST.w0 * (1.0 / n**2
                        + a2 / n**3 * (1.0 / (float(J) + 0.5) - 0.75 / n))


def hyperfine_constant_A(iso: Isotope, n: int, L, J) -> float:
    """Magnetic hyperfine constant A_J of the |n L J> shell [erg].

    The ground shell uses the measured splitting (iso.ground_A); excited
    shells use A_J = w0 g_I (m/M) alpha^2 / [n^3 J(J+1)(L+1/2)].
    """
    L = HalfInteger.of(L)
    J = HalfInteger.of(J)
    if n == 1 and L.twice == 0:
        return iso.ground_A
    jj1 = float(J) * (float(J) + 1.0)
    return (CONST.w0 * iso.g_I * iso.mass_ratio_m_over_M
            * CONST.alpha_e**2 / n**3 / (jj1 * (float(L) + 0.5)))


def _K_factor(I: HalfInteger, J: HalfInteger, F: HalfInteger) -> float:
    fI, fJ, fF = float(I), float(J), float(F)
    return fF * (fF + 1.0) - fI * (fI + 1.0) - fJ * (fJ + 1.0)


def zero_field_hyperfine_energy(iso: Isotope, n: int, L, J, F,
                                include_fine_structure: bool = True) -> float:
    """Energy of the |n L J; F> hyperfine level at B = 0 [erg].

    E_F = E_J + A_J K / 2 with K = F(F+1) - I(I+1) - J(J+1).  The electric
    quadrupole term vanishes for every shell treated here (I <= 1 pairs with
    J = 1/2, and no quadrupole constant is tabulated for nP_{3/2}).
    """
    L, J, F = HalfInteger.of(L), HalfInteger.of(J), HalfInteger.of(F)
    tsum = iso.I.twice + J.twice
    if not (abs(iso.I.twice - J.twice) <= F.twice <= tsum and
            (F.twice - tsum) % 2 == 0):
        raise ValueError(f"(I={iso.I}, J={J}, F={F}) violates the triangle rule")
    A = hyperfine_constant_A(iso, n, L, J)
    energy = 0.5 * A * _K_factor(iso.I, J, F)
    if include_fine_structure:
        energy += fine_structure_energy(n, J)
    return energy


def lande_g_F(iso: Isotope, F, J=HalfInteger.of(0.5), L=HalfInteger.of(0)) -> float:
    """Effective g-value of an (F, I, J) level from the Landé projection.

    Includes the nuclear term, g_F = g_J <J.F>/F(F+1) - g_I (mu_n/mu_B)
    <I.F>/F(F+1); for L = 0 the electron factor g_J = 2 is used.
    """
    F, J, L = HalfInteger.of(F), HalfInteger.of(J), HalfInteger.of(L)
    fF, fJ, fI = float(F), float(J), float(iso.I)
    if L.twice == 0:
        g_J = G_J_GROUND
    else:
        g_J = (3.0 * fJ * (fJ + 1.0) + 0.75 - float(L) * (float(L) + 1.0)) \
            / (2.0 * fJ * (fJ + 1.0))
    ff1 = fF * (fF + 1.0)
    if ff1 == 0.0:
        return 0.0
    elec = g_J * (ff1 + fJ * (fJ + 1.0) - fI * (fI + 1.0)) / (2.0 * ff1)
    nucl = (iso.g_I * (CONST.mu_n / CONST.mu_B)
            * (ff1 + fI * (fI + 1.0) - fJ * (fJ + 1.0)) / (2.0 * ff1))
    return elec - nucl


def weak_field_zeeman(iso: Isotope, state: HyperfineState, B: float) -> float:
    """Linear Zeeman energy g_F mu_B B M_F of a ground sub-level [erg]."""
    return lande_g_F(iso, state.F) * CONST.mu_B * B * float(state.M_F)


def breit_rabi_x(iso: Isotope, B: float) -> float:
    """Dimensionless field parameter x = (g_J + g_I m/M) mu_B B / (h nu_HFS)."""
    g_eff = G_J_GROUND + iso.g_I * iso.mass_ratio_m_over_M
    return g_eff * CONST.mu_B * B / (CONST.h * iso.nu_hfs_hz)


def breit_rabi_energy(iso: Isotope, state: HyperfineState, B: float) -> float:
    """Ground sub-level energy at arbitrary field from the Breit-Rabi formula.

    E = -h nu/(2(2I+1)) - g_I mu_n B M_F
        +/- (h nu/2) sqrt(1 + 4 M_F x/(2I+1) + x^2)                  [erg]

    measured from the fine-structure level.  Stretched states
    |M_F| = I + 1/2 (necessarily branch +) use the exact linear reduction
    of the square root, which avoids the branch ambiguity at x > 1.
    """
    h_nu = CONST.h * iso.nu_hfs_hz
    two_I_1 = iso.I.twice + 1
    x = breit_rabi_x(iso, B)
    m = float(state.M_F)
    base = -h_nu / (2.0 * two_I_1) - iso.g_I * CONST.mu_n * B * m

    if state.branch == +1 and abs(state.M_F.twice) == two_I_1:
        sign = 1.0 if state.M_F.twice > 0 else -1.0
        return base + 0.5 * h_nu * (1.0 + sign * x)

    root = math.sqrt(1.0 + 4.0 * m * x / two_I_1 + x * x)
    return base + state.branch * 0.5 * h_nu * root


def transition_frequency(iso: Isotope, a: HyperfineState, a_prime: HyperfineState,
                         B: float) -> float:
    """Positive transition frequency (E_a - E_a')/h at field B [Hz].

    Requires E_a > E_a'; a degenerate pair raises
    DegenerateTransitionError.
    """
    ea = breit_rabi_energy(iso, a, B)
    eb = breit_rabi_energy(iso, a_prime, B)
    if ea == eb:
        raise DegenerateTransitionError(
            f"states {a.label()} and {a_prime.label()} are degenerate at B = {B} G")
    if ea < eb:
        raise ValueError("expected E_a > E_a'; swap the states")
    return (ea - eb) / CONST.h


def enumerate_ground_manifold(iso: Isotope) -> list[HyperfineState]:
    """All ground (F, M_F) sub-levels: F = I+1/2 first, ascending M_F."""
    states = []
    for branch in (+1, -1):
        tF = iso.I.twice + branch
        if tF < 0:
            continue
        for tM in range(-tF, tF + 1, 2):
            states.append(HyperfineState(HalfInteger(tF), HalfInteger(tM), branch))
    return states
