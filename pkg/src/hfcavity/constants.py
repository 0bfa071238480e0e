"""CODATA-2018 physical constants in Gaussian (CGS-esu) units.

Derived quantities (magnetons, Bohr radius, fine-structure constant,
Bohr energy) are computed from the fundamental set so that the defining
relations hold exactly in floating point.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class PhysicalConstants:
    c: float = 2.99792458e10          # speed of light [cm/s]
    hbar: float = 1.054571817e-27     # reduced Planck constant [erg s]
    k_B: float = 1.380649e-16         # Boltzmann constant [erg/K]
    e: float = 4.80320471257e-10      # elementary charge [statC]
    m_e: float = 9.1093837015e-28     # electron mass [g]
    m_p: float = 1.67262192369e-24    # proton mass [g]

    @property
    def h(self) -> float:
        """Planck constant [erg s]."""
        return 2.0 * 3.141592653589793 * self.hbar

    @property
    def mu_B(self) -> float:
        """Bohr magneton e*hbar/(2 m_e c) [erg/G]."""
        return self.e * self.hbar / (2.0 * self.m_e * self.c)

    @property
    def mu_n(self) -> float:
        """Nuclear magneton e*hbar/(2 m_p c) [erg/G]."""
        return self.e * self.hbar / (2.0 * self.m_p * self.c)

    @property
    def a0(self) -> float:
        """Bohr radius hbar^2/(m_e e^2) [cm]."""
        return self.hbar**2 / (self.m_e * self.e**2)

    @property
    def alpha_e(self) -> float:
        """Fine-structure constant e^2/(hbar c)."""
        return self.e**2 / (self.hbar * self.c)

    @property
    def w0(self) -> float:
        """Bohr energy e^2/(2 a0) = 13.6 eV [erg]."""
        return self.e**2 / (2.0 * self.a0)

    @property
    def mass_ratio(self) -> float:
        """Electron-to-proton mass ratio m/M."""
        return self.m_e / self.m_p


CONST = PhysicalConstants()

ERG_PER_EV = 1.602176634e-12
# 1 eV / hbar, the conversion used for the tabulated Drude parameters
RADS_PER_EV = ERG_PER_EV / CONST.hbar


def ev_to_rad_s(energy_ev: float) -> float:
    """Convert an energy in eV to an angular frequency in rad/s."""
    return energy_ev * RADS_PER_EV
