"""Half-integer angular momenta and exact recoupling coefficients.

Clebsch-Gordan coefficients and 6j symbols are evaluated with the Racah
sum formulas in exact integer/rational arithmetic (all angular momenta of
interest are small), converting to float only at the end.  The phase
convention is Condon-Shortley throughout.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache


@dataclass(frozen=True, order=True)
class HalfInteger:
    """An exact (half-)integer quantum number, stored as twice its value."""

    twice: int

    @staticmethod
    def of(value) -> "HalfInteger":
        """Build from an int, float or Fraction equal to n/2 for integer n."""
        if isinstance(value, HalfInteger):
            return value
        twice = Fraction(value) * 2
        if twice.denominator != 1:
            raise ValueError(f"{value!r} is not a half-integer")
        return HalfInteger(int(twice))

    @property
    def value(self) -> float:
        return self.twice / 2.0

    def as_fraction(self) -> Fraction:
        return Fraction(self.twice, 2)

    @property
    def is_integer(self) -> bool:
        return self.twice % 2 == 0

    def __add__(self, other) -> "HalfInteger":
        return HalfInteger(self.twice + HalfInteger.of(other).twice)

    def __sub__(self, other) -> "HalfInteger":
        return HalfInteger(self.twice - HalfInteger.of(other).twice)

    def __neg__(self) -> "HalfInteger":
        return HalfInteger(-self.twice)

    def __abs__(self) -> "HalfInteger":
        return HalfInteger(abs(self.twice))

    def __float__(self) -> float:
        return self.twice / 2.0

    def __repr__(self) -> str:
        if self.twice % 2 == 0:
            return f"{self.twice // 2}"
        return f"{self.twice}/2"


def _as_twice(j) -> int:
    return HalfInteger.of(j).twice


def _triangle_ok(tj1: int, tj2: int, tj3: int) -> bool:
    """Triangle rule for three angular momenta given as twice-values."""
    if (tj1 + tj2 + tj3) % 2 != 0:
        return False
    return abs(tj1 - tj2) <= tj3 <= tj1 + tj2


def _fact(n: int) -> int:
    if n < 0:
        raise ValueError("negative factorial argument")
    return math.factorial(n)


@lru_cache(maxsize=None)
def _cg_exact(tj1: int, tm1: int, tj2: int, tm2: int, tJ: int, tM: int):
    """<J M | j1 m1; j2 m2> as (sign, rational square); arguments are 2j."""
    if tm1 + tm2 != tM:
        return 0, Fraction(0)
    if not _triangle_ok(tj1, tj2, tJ):
        return 0, Fraction(0)
    if abs(tm1) > tj1 or abs(tm2) > tj2 or abs(tM) > tJ:
        return 0, Fraction(0)
    # m and j must both be integer or both half-integer
    if (tj1 - tm1) % 2 or (tj2 - tm2) % 2 or (tJ - tM) % 2:
        return 0, Fraction(0)

    # Racah's closed form, e.g. Messiah App. C. All arguments divided by 2.
    def f2(t):  # factorial of a twice-value, which must be even
        if t % 2:
            raise ValueError("non-integer factorial in CG")
        return _fact(t // 2)

    pref = Fraction(
        (tJ + 1)
        * f2(tJ + tj1 - tj2)
        * f2(tJ - tj1 + tj2)
        * f2(tj1 + tj2 - tJ)
        * f2(tJ + tM)
        * f2(tJ - tM),
        f2(tj1 + tj2 + tJ + 2),
    ) * Fraction(
        f2(tj1 - tm1) * f2(tj1 + tm1) * f2(tj2 - tm2) * f2(tj2 + tm2)
    )

    ksum = Fraction(0)
    kmin = max(0, (tj2 - tm1 - tJ) // 2, (tj1 + tm2 - tJ) // 2)
    kmax = min((tj1 + tj2 - tJ) // 2, (tj1 - tm1) // 2, (tj2 + tm2) // 2)
    for k in range(kmin, kmax + 1):
        denom = (
            _fact(k)
            * f2(tj1 + tj2 - tJ - 2 * k)
            * f2(tj1 - tm1 - 2 * k)
            * f2(tj2 + tm2 - 2 * k)
            * f2(tJ - tj2 + tm1 + 2 * k)
            * f2(tJ - tj1 - tm2 + 2 * k)
        )
        ksum += Fraction((-1) ** k, denom)

    if ksum == 0:
        return 0, Fraction(0)
    sign = 1 if ksum > 0 else -1
    return sign, pref * ksum * ksum


def clebsch_gordan(j1, m1, j2, m2, J, M) -> float:
    """Clebsch-Gordan coefficient <J M | j1 m1; j2 m2> (Condon-Shortley).

    Returns 0 for M != m1 + m2 or when the triangle rule fails.  Raises
    ValueError for negative j.
    """
    tj1, tm1 = _as_twice(j1), _as_twice(m1)
    tj2, tm2 = _as_twice(j2), _as_twice(m2)
    tJ, tM = _as_twice(J), _as_twice(M)
    if tj1 < 0 or tj2 < 0 or tJ < 0:
        raise ValueError("angular momenta must be non-negative")
    sign, sq = _cg_exact(tj1, tm1, tj2, tm2, tJ, tM)
    return sign * math.sqrt(sq)


@lru_cache(maxsize=None)
def _wigner_6j_exact(tj1: int, tj2: int, tj3: int, tl1: int, tl2: int, tl3: int):
    """{j1 j2 j3; l1 l2 l3} as (sign, rational square), args are 2j."""
    triads = (
        (tj1, tj2, tj3),
        (tj1, tl2, tl3),
        (tl1, tj2, tl3),
        (tl1, tl2, tj3),
    )
    for t in triads:
        if not _triangle_ok(*t):
            return 0, Fraction(0)

    def tri_fac(ta, tb, tc) -> Fraction:
        return Fraction(
            _fact((ta + tb - tc) // 2)
            * _fact((ta - tb + tc) // 2)
            * _fact((-ta + tb + tc) // 2),
            _fact((ta + tb + tc) // 2 + 1),
        )

    pref = Fraction(1)
    for t in triads:
        pref *= tri_fac(*t)

    # Racah sum over z
    t1 = (tj1 + tj2 + tj3) // 2
    t2 = (tj1 + tl2 + tl3) // 2
    t3 = (tl1 + tj2 + tl3) // 2
    t4 = (tl1 + tl2 + tj3) // 2
    q1 = (tj1 + tj2 + tl1 + tl2) // 2
    q2 = (tj2 + tj3 + tl2 + tl3) // 2
    q3 = (tj3 + tj1 + tl3 + tl1) // 2
    ksum = Fraction(0)
    for z in range(max(t1, t2, t3, t4), min(q1, q2, q3) + 1):
        num = (-1) ** z * _fact(z + 1)
        den = (
            _fact(z - t1)
            * _fact(z - t2)
            * _fact(z - t3)
            * _fact(z - t4)
            * _fact(q1 - z)
            * _fact(q2 - z)
            * _fact(q3 - z)
        )
        ksum += Fraction(num, den)

    if ksum == 0:
        return 0, Fraction(0)
    sign = 1 if ksum > 0 else -1
    return sign, pref * ksum * ksum


def wigner_6j(j1, j2, j3, l1, l2, l3) -> float:
    """6j symbol {j1 j2 j3; l1 l2 l3} via the Racah sum.

    Returns 0 when any of the four triads violates the triangle rules.
    """
    args = tuple(_as_twice(j) for j in (j1, j2, j3, l1, l2, l3))
    if any(t < 0 for t in args):
        raise ValueError("angular momenta must be non-negative")
    sign, sq = _wigner_6j_exact(*args)
    return sign * math.sqrt(sq)
