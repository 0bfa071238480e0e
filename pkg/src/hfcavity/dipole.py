"""Magnetic-moment and electric-dipole matrix elements of hydrogen isotopes.

Magnetic elements act within the ground hyperfine manifold only (the
moment operator preserves n and L); electric elements connect the ground
state to nL=1 levels, discrete and continuum, factorized into radial and
angular parts.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy import integrate

from .constants import CONST
from .hyperfine import G_J_GROUND, ExcitedLevel, HyperfineState
from .isotopes import Isotope
from .quantum import HalfInteger, clebsch_gordan, wigner_6j


@dataclass(frozen=True)
class VectorElement:
    """Cartesian components of a vector-operator matrix element."""

    x: complex
    y: complex
    z: complex

    def conj(self) -> "VectorElement":
        return VectorElement(self.x.conjugate(), self.y.conjugate(),
                             self.z.conjugate())

    def abs2(self) -> tuple[float, float, float]:
        return (abs(self.x) ** 2, abs(self.y) ** 2, abs(self.z) ** 2)

    def norm2(self) -> float:
        return sum(self.abs2())


_ZERO = VectorElement(0j, 0j, 0j)


def _f_ladder(F: float, M_a: float, M_b: float) -> tuple[complex, complex, complex]:
    """<F M_a | F_i | F M_b> for i = x, y, z."""
    up = math.sqrt(max((F - M_b) * (F + M_b + 1.0), 0.0))
    dn = math.sqrt(max((F + M_b) * (F - M_b + 1.0), 0.0))
    fx = fy = 0j
    if M_a == M_b + 1.0:
        fx += 0.5 * up
        fy += -0.5j * up
    if M_a == M_b - 1.0:
        fx += 0.5 * dn
        fy += 0.5j * dn
    fz = M_a if M_a == M_b else 0.0
    return fx, fy, complex(fz)


def _s_cross(I: float, M_a: float, M_b: float) -> tuple[complex, complex, complex]:
    """<I+1/2, M_a | S_i | I-1/2, M_b> for i = x, y, z."""
    denom = 2.0 * (2.0 * I + 1.0)
    up = math.sqrt(max((I + M_b + 1.5) * (I + M_b + 0.5), 0.0)) / denom
    dn = math.sqrt(max((I - M_b + 1.5) * (I - M_b + 0.5), 0.0)) / denom
    sx = sy = 0j
    if M_a == M_b + 1.0:
        sx += up
        sy += -1j * up
    if M_a == M_b - 1.0:
        sx += -dn
        sy += -1j * dn
    sz = 0j
    if M_a == M_b:
        sz = complex(-math.sqrt(max((I + 0.5) ** 2 - M_b**2, 0.0))
                     / (2.0 * I + 1.0))
    return sx, sy, sz


def magnetic_dipole_element(iso: Isotope, a: HyperfineState,
                            b: HyperfineState) -> VectorElement:
    """<a| mu_i |b> between ground sub-levels, mu = -2 mu_B S + g_I mu_n I.

    Units erg/G.  Within one F level the Wigner-Eckart projection onto F_i
    applies; across F = I+/-1/2 only the electron-spin part contributes.
    """
    I = float(iso.I)
    upper = iso.I.twice + 1
    for st in (a, b):
        if st.F.twice not in (upper, upper - 2):
            raise ValueError(f"{st.label()} is not in the ground manifold")

    M_a, M_b = float(a.M_F), float(b.M_F)
    if a.F == b.F:
        F = float(a.F)
        if F == 0.0:
            return _ZERO
        ff1 = F * (F + 1.0)
        coeff = (iso.g_I * CONST.mu_n * (ff1 - 0.75 + I * (I + 1.0))
                 - G_J_GROUND * CONST.mu_B * (ff1 + 0.75 - I * (I + 1.0))) \
            / (2.0 * ff1)
        fx, fy, fz = _f_ladder(F, M_a, M_b)
        return VectorElement(coeff * fx, coeff * fy, coeff * fz)

    if a.F.twice == upper:  # a in F = I+1/2, b in F = I-1/2
        g_sum = G_J_GROUND * CONST.mu_B + iso.g_I * CONST.mu_n
        sx, sy, sz = _s_cross(I, M_a, M_b)
        return VectorElement(-g_sum * sx, -g_sum * sy, -g_sum * sz)

    return magnetic_dipole_element(iso, b, a).conj()


def radial_integral_discrete(n: int) -> float:
    """|R^{10}_{n1}| = 16 sqrt(n^7 (n-1)^{2n-5} / (n+1)^{2n+5}), in a0 units."""
    if n < 2:
        raise ValueError("discrete nP levels require n >= 2")
    log_r = (math.log(16.0)
             + 0.5 * (7.0 * math.log(n)
                      + (2 * n - 5) * math.log(n - 1.0)
                      - (2 * n + 5) * math.log(n + 1.0)))
    return math.exp(log_r)


# --- bound-free radial integral -----------------------------------------
#
# I(k) = int_0^inf x^4 exp(-(i + 1/k) x) Phi(2 + i/k; 4; 2ix) dx.
#
# Two complementary evaluations:
#  * small k: scale x = k*u and sum the Kummer series rearranged as
#    sum_m (-2u)^m prod_j (1 - i k (2+j)) / ((4)_m m!), which stays
#    cancellation-free while 2*k*u is moderate;
#  * general k: replace Phi by its Euler integral, do the x integral in
#    closed form, and keep a single smooth integral over [0, 1].
# The two routes agree in the overlap window (checked in the tests).

_SMALL_K_SWITCH = 0.4
_SERIES_MAX_TERMS = 600


def _phi_rearranged(k: float, u: np.ndarray) -> np.ndarray:
    """Phi(2 + i/k; 4; 2 i k u) via the rescaled series, vectorized in u."""
    from .special import ConvergenceError

    total = np.ones(len(u), dtype=complex)
    term = np.ones(len(u), dtype=complex)
    z = -2.0 * u
    for m in range(_SERIES_MAX_TERMS):
        term = term * z * ((1.0 - 1j * k * (2.0 + m)) / ((4.0 + m) * (1.0 + m)))
        total += term
        if np.all(np.abs(term) <= 1e-17 * np.abs(total)):
            return total
    raise ConvergenceError("rearranged Kummer series did not converge")


def _gauss_panels(a: float, b: float, n_panels: int, n_nodes: int):
    x, w = np.polynomial.legendre.leggauss(n_nodes)
    edges = np.linspace(a, b, n_panels + 1)
    nodes, weights = [], []
    for lo, hi in zip(edges[:-1], edges[1:]):
        half = 0.5 * (hi - lo)
        nodes.append(0.5 * (lo + hi) + half * x)
        weights.append(half * w)
    return np.concatenate(nodes), np.concatenate(weights)


def _bound_free_I_series(k: float) -> complex:
    """I(k) for small k via the rescaled series; returns I(k)/k^5 * k^5."""
    u, w = _gauss_panels(0.0, 55.0, 11, 24)
    phi = _phi_rearranged(k, u)
    integrand = u**4 * np.exp(-(1.0 + 1j * k) * u) * phi
    return k**5 * np.sum(w * integrand)


def _bound_free_I_euler(k: float) -> complex:
    """I(k) via the Euler representation of the Kummer function.

    I(k) = 24 N int_0^1 t^{1+iy} (1-t)^{1-iy} / (y + i(1-2t))^5 dt with
    y = 1/k and N = 6 sinh(pi y) / (pi y (1 + y^2)).
    """
    y = 1.0 / k
    norm = 6.0 * math.sinh(math.pi * y) / (math.pi * y * (1.0 + y * y))

    def f(t: float) -> complex:
        s = y + 1j * (1.0 - 2.0 * t)
        return t ** (1.0 + 1j * y) * (1.0 - t) ** (1.0 - 1j * y) / s**5

    # the |s|^-5 factor peaks at t = 1/2 with width ~ k
    half_width = min(0.4, 0.5 * k)
    pts = [0.5 - half_width, 0.5, 0.5 + half_width]
    re, _ = integrate.quad(lambda t: f(t).real, 0.0, 1.0, points=pts,
                           limit=200, epsabs=1e-300, epsrel=1e-10)
    im, _ = integrate.quad(lambda t: f(t).imag, 0.0, 1.0, points=pts,
                           limit=200, epsabs=1e-300, epsrel=1e-10)
    return 24.0 * norm * complex(re, im)


def bound_free_I(k_tilde: float) -> complex:
    """The oscillatory integral I(k) entering |R^{10}_{k 1}|."""
    if k_tilde <= 0:
        raise ValueError("k_tilde must be positive")
    if k_tilde < _SMALL_K_SWITCH:
        return _bound_free_I_series(k_tilde)
    return _bound_free_I_euler(k_tilde)


@lru_cache(maxsize=4096)
def radial_integral_continuum(k_tilde: float) -> float:
    """|R^{10}_{k 1}| for a continuum P state normalized to delta(k - k').

    |R| = (4/3) k^{-4} sqrt((k + 1/k)/(1 - e^{-2 pi/k})) |I(k)|, a0 units.
    Threshold behavior: |R| -> 16 e^{-2} sqrt(k) as k -> 0.
    """
    k = float(k_tilde)
    I_val = abs(bound_free_I(k))
    denom = -math.expm1(-2.0 * math.pi / k)
    return (4.0 / 3.0) * k**-4 * math.sqrt((k + 1.0 / k) / denom) * I_val


def angular_dipole_factor(iso: Isotope, F_a, M_a, J_b, F_b, M_b, q: int) -> float:
    """Angular part <1,0,1/2; F_a M_a| C^1_q |n,1,J_b; F_b M_b>.

    (1/sqrt3) sqrt((2J_b+1)(2F_a+1)) (-1)^{3/2+I+F_b}
    {1 1/2 J_b; I F_b F_a} <1 q; F_a M_a | F_b M_b>.
    Zero unless M_b = M_a + q.
    """
    F_a, M_a = HalfInteger.of(F_a), HalfInteger.of(M_a)
    J_b, F_b, M_b = HalfInteger.of(J_b), HalfInteger.of(F_b), HalfInteger.of(M_b)
    cg = clebsch_gordan(1, q, F_a, M_a, F_b, M_b)
    if cg == 0.0:
        return 0.0
    six_j = wigner_6j(1, HalfInteger.of(0.5), J_b, iso.I, F_b, F_a)
    if six_j == 0.0:
        return 0.0
    twice_phase = 3 + iso.I.twice + F_b.twice
    if twice_phase % 2:
        raise ValueError("non-integer phase exponent; check quantum numbers")
    sign = -1.0 if (twice_phase // 2) % 2 else 1.0
    pref = math.sqrt((J_b.twice + 1) * (F_a.twice + 1) / 3.0)
    return pref * sign * six_j * cg


def _radial_for_level(b: ExcitedLevel) -> float:
    if b.n is not None:
        return radial_integral_discrete(b.n)
    return radial_integral_continuum(b.k_tilde)


def electric_dipole_element(iso: Isotope, a: HyperfineState,
                            b: ExcitedLevel) -> VectorElement:
    """<a| d_i |b> = -e a0 R^{10} x (angular factors), statC cm.

    Zero unless L_b = 1 (electric-dipole selection rule from L_a = 0).
    """
    if b.L.twice != 2:
        return _ZERO
    radial = -CONST.e * CONST.a0 * _radial_for_level(b)

    def A(q: int) -> float:
        return angular_dipole_factor(iso, a.F, a.M_F, b.J, b.F, b.M_F, q)

    a_m1, a_0, a_p1 = A(-1), A(0), A(+1)
    dx = radial * (a_m1 - a_p1) / math.sqrt(2.0)
    dy = radial * 1j * (a_m1 + a_p1) / math.sqrt(2.0)
    dz = radial * complex(a_0)
    return VectorElement(dx, dy, dz)


def shell_angular_weights(iso: Isotope, a: HyperfineState, J_b, F_b):
    """Per-axis summed squared angular factors over M_b for one (J_b, F_b).

    Returns (w_x, w_y, w_z) with w_x = w_y; summing over the whole nL=1
    shell gives 1/3 per axis (completeness).
    """
    M_a = a.M_F
    w_z = angular_dipole_factor(iso, a.F, M_a, J_b, F_b, M_a, 0) ** 2
    w_perp = 0.0
    for q in (-1, +1):
        w_perp += 0.5 * angular_dipole_factor(
            iso, a.F, M_a, J_b, F_b, M_a + HalfInteger.of(q), q) ** 2
    return w_perp, w_perp, w_z
