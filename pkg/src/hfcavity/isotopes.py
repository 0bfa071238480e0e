"""Hydrogen isotope data: nuclear spin, hyperfine splitting, nuclear g-factor.

The ground-state splittings are the measured maser values; the nuclear
g-factors follow the mu = g_I * mu_n * I convention with mu_n the (proton)
nuclear magneton, so the same m/M ratio enters all three isotopes.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .constants import CONST
from .quantum import HalfInteger


@dataclass(frozen=True)
class Isotope:
    name: str
    I: HalfInteger                 # nuclear spin
    nu_hfs_hz: float               # ground-state hyperfine splitting [Hz]
    g_I: float                     # nuclear g-factor (positive, mu_n units)
    mass_ratio_m_over_M: float = CONST.mass_ratio

    def __post_init__(self):
        if self.nu_hfs_hz <= 0:
            raise ValueError("hyperfine splitting must be positive")

    @property
    def ground_A(self) -> float:
        """Ground-state magnetic hyperfine constant A = h nu_HFS/(I+1/2) [erg].

        Fixed from the measured splitting rather than the alpha^2 formula,
        so that transition frequencies are anchored to experiment.
        """
        return CONST.h * self.nu_hfs_hz / (float(self.I) + 0.5)


HYDROGEN = Isotope("H", HalfInteger.of(0.5), 1_420_405_751.768, 5.585486)
DEUTERIUM = Isotope("D", HalfInteger.of(1), 327_384_352.522, 0.8574073)
TRITIUM = Isotope("T", HalfInteger.of(0.5), 1_516_701_470.773, 5.95768)

ISOTOPES = {iso.name: iso for iso in (HYDROGEN, DEUTERIUM, TRITIUM)}


def get_isotope(name: str, overrides: dict | None = None) -> Isotope:
    """Look up an isotope by name, optionally overriding tabulated fields.

    Recognized override keys: ``nu_hfs_hz``, ``g_I``.
    """
    try:
        iso = ISOTOPES[name]
    except KeyError:
        raise ValueError(
            f"unknown isotope {name!r}; expected one of {sorted(ISOTOPES)}"
        ) from None
    if overrides:
        unknown = set(overrides) - {"nu_hfs_hz", "g_I"}
        if unknown:
            raise ValueError(f"unknown isotope override keys: {sorted(unknown)}")
        iso = replace(iso, **overrides)
    return iso
