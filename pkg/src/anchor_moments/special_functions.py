"""Gamma/Beta layer: exact values at integer and half-integer arguments.

Half-integer Gamma and Beta values live in the ring of monomials
q * sqrt(2)**s * sqrt(pi)**p with q rational, so identities between them can
be verified exactly instead of to a tolerance.  The regularized incomplete
Beta function has an exact rational path (integer parameters, rational z) and
a float path for large parameters.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from scipy.special import betainc as _betainc

__all__ = [
    "HalfIntValue",
    "IncompleteBetaQuery",
    "gamma_half_int",
    "beta_exact",
    "incomplete_beta_regularized_exact",
    "incomplete_beta_step_down",
    "incomplete_beta_float",
    "stirling_bounds",
]

Rational = Union[int, Fraction]
_SQRT_PI = math.sqrt(math.pi)
_SQRT_2 = math.sqrt(2.0)


@dataclass(frozen=True)
class HalfIntValue:
    """Exact scalar of the form rational * sqrt(2)**sqrt2_pow * sqrt(pi)**sqrt_pi_pow.

    Even sqrt(2) powers are folded into the rational part on construction, so
    sqrt2_pow is always 0 or 1; sqrt(pi) powers are kept verbatim (pi is
    transcendental, nothing folds).  Addition is defined only between values
    carrying the same monomial, which is all the verified identities need.
    """

    rational: Fraction
    sqrt2_pow: int = 0
    sqrt_pi_pow: int = 0

    def __post_init__(self) -> None:
        q = Fraction(self.rational)
        s2, sp = self.sqrt2_pow, self.sqrt_pi_pow
        if q == 0:
            s2 = sp = 0
        else:
            q *= Fraction(2) ** ((s2 - (s2 % 2)) // 2)
            s2 %= 2
        object.__setattr__(self, "rational", q)
        object.__setattr__(self, "sqrt2_pow", s2)
        object.__setattr__(self, "sqrt_pi_pow", sp)

    # -- arithmetic (exact) --
    def _coerce(self, other) -> "HalfIntValue":
        if isinstance(other, HalfIntValue):
            return other
        if isinstance(other, (int, Fraction)):
            return HalfIntValue(Fraction(other))
        return NotImplemented  # type: ignore[return-value]

    def __mul__(self, other) -> "HalfIntValue":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return HalfIntValue(self.rational * o.rational, self.sqrt2_pow + o.sqrt2_pow,
                            self.sqrt_pi_pow + o.sqrt_pi_pow)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "HalfIntValue":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if o.rational == 0:
            raise ZeroDivisionError("division by zero HalfIntValue")
        return HalfIntValue(self.rational / o.rational, self.sqrt2_pow - o.sqrt2_pow,
                            self.sqrt_pi_pow - o.sqrt_pi_pow)

    def __rtruediv__(self, other) -> "HalfIntValue":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o / self

    def __neg__(self) -> "HalfIntValue":
        return HalfIntValue(-self.rational, self.sqrt2_pow, self.sqrt_pi_pow)

    def __add__(self, other) -> "HalfIntValue":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if self.rational == 0:
            return o
        if o.rational == 0:
            return self
        if (self.sqrt2_pow, self.sqrt_pi_pow) != (o.sqrt2_pow, o.sqrt_pi_pow):
            raise ValueError("cannot add HalfIntValues with different monomials")
        return HalfIntValue(self.rational + o.rational, self.sqrt2_pow, self.sqrt_pi_pow)

    __radd__ = __add__

    def __sub__(self, other) -> "HalfIntValue":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def to_float(self) -> float:
        return float(self.rational) * _SQRT_2 ** self.sqrt2_pow * _SQRT_PI ** self.sqrt_pi_pow

    def __float__(self) -> float:
        return self.to_float()

    def __str__(self) -> str:
        parts = [str(self.rational)]
        if self.sqrt2_pow:
            parts.append("sqrt(2)" if self.sqrt2_pow == 1 else f"sqrt(2)^{self.sqrt2_pow}")
        if self.sqrt_pi_pow:
            parts.append("sqrt(pi)" if self.sqrt_pi_pow == 1 else f"sqrt(pi)^{self.sqrt_pi_pow}")
        return "*".join(parts)


@dataclass(frozen=True)
class IncompleteBetaQuery:
    """Validated argument triple for I(z; c, d) with integer parameters."""

    z: Fraction
    c: int
    d: int

    def __post_init__(self) -> None:
        if not (0 <= self.z <= 1):
            raise ValueError("z must lie in [0, 1]")
        if self.c < 1 or self.d < 1:
            raise ValueError("c and d must be integers >= 1")


def gamma_half_int(two_z: int) -> HalfIntValue:
    """Gamma(two_z / 2), exact.

    Integer arguments give (z-1)!; half-integer arguments give a rational
    multiple of sqrt(pi), via Gamma(1/2) = sqrt(pi) and Gamma(z+1) = z Gamma(z).
    """
    if two_z < 1:
        raise ValueError("gamma_half_int requires two_z >= 1")
    if two_z % 2 == 0:
        return HalfIntValue(Fraction(math.factorial(two_z // 2 - 1)))
    r = Fraction(1)
    z = Fraction(two_z, 2)
    while z > Fraction(1, 2):
        z -= 1
        r *= z
    return HalfIntValue(r, 0, 1)


def _as_two_z(x: Rational) -> int:
    two = Fraction(x) * 2
    if two.denominator != 1 or two <= 0:
        raise ValueError("argument must be a positive integer or half-integer")
    return int(two)


def beta_exact(c: Rational, d: Rational) -> HalfIntValue:
    """Beta(c, d) = Gamma(c)Gamma(d)/Gamma(c+d) for (half-)integer c, d > 0.

    For positive integers this reduces to 1 / (C(c+d-1, c) * c).
    """
    c2, d2 = _as_two_z(c), _as_two_z(d)
    if c2 % 2 == 0 and d2 % 2 == 0:
        ci, di = c2 // 2, d2 // 2
        return HalfIntValue(Fraction(1, math.comb(ci + di - 1, ci) * ci))
    return gamma_half_int(c2) * gamma_half_int(d2) / gamma_half_int(c2 + d2)


def incomplete_beta_regularized_exact(z: Rational, c: int, d: int) -> Fraction:
    """Regularized incomplete Beta I(z; c, d), exact rational.

    Expands (1-x)^(d-1) binomially and integrates termwise; the alternating
    sum is assembled over a single common denominator q^(c+d-1) * lcm(c..c+d-1)
    so the whole evaluation is one big-integer pass plus one final reduction.
    """
    z = Fraction(z)
    if not (0 <= z <= 1):
        raise ValueError("z must lie in [0, 1]")
    if c < 1 or d < 1:
        raise ValueError("c and d must be integers >= 1")
    if z == 0:
        return Fraction(0)
    if z == 1:
        return Fraction(1)
    p, q = z.numerator, z.denominator
    lcm = math.lcm(*range(c, c + d))
    num = 0
    p_pow = p**c
    q_pow = q ** (d - 1)
    for m in range(d):
        term = math.comb(d - 1, m) * p_pow * q_pow * (lcm // (c + m))
        num = num + term if m % 2 == 0 else num - term
        p_pow *= p
        if m < d - 1:
            q_pow //= q
    return Fraction(math.comb(c + d - 1, c) * c * num, q ** (c + d - 1) * lcm)


def incomplete_beta_step_down(z: Rational, c: int, d: int) -> Fraction:
    """I(z; c, d) via one step of the parameter recurrence.

    I(z;c,d) = I(z;c-1,d) - Gamma(c+d-1)/(Gamma(c)Gamma(d)) z^(c-1)(1-z)^d,
    with the lower value evaluated directly.  Requires c >= 2.
    """
    z = Fraction(z)
    if c < 2:
        raise ValueError("incomplete_beta_step_down requires c >= 2")
    if not (0 <= z <= 1):
        raise ValueError("z must lie in [0, 1]")
    if d < 1:
        raise ValueError("d must be an integer >= 1")
    coeff = Fraction(math.factorial(c + d - 2), math.factorial(c - 1) * math.factorial(d - 1))
    return incomplete_beta_regularized_exact(z, c - 1, d) - coeff * z ** (c - 1) * (1 - z) ** d


def incomplete_beta_float(z: float, c: float, d: float) -> float:
    """Float I(z; c, d) for c, d > 0; the large-parameter fast path."""
    if not (0.0 <= z <= 1.0):
        raise ValueError("z must lie in [0, 1]")
    if c <= 0 or d <= 0:
        raise ValueError("c and d must be positive")
    return float(_betainc(c, d, z))


def stirling_bounds(m: int) -> tuple[float, float, float]:
    """Two-sided factorial bounds and the exactly-computed log(m!).

    Returns (lower, upper, exact_log) where
    lower = sqrt(2 pi) m^(m+1/2) exp(-m + 1/(12m+1)) and upper uses 1/(12m);
    lower < m! < upper holds strictly for every m >= 1.  Bounds are evaluated
    in log space first so they survive m beyond factorial float range, and
    exact_log is log of the big-integer factorial.
    """
    if m < 1:
        raise ValueError("stirling_bounds requires m >= 1")
    base = 0.5 * math.log(2 * math.pi) + (m + 0.5) * math.log(m) - m
    log_lower = base + 1.0 / (12 * m + 1)
    log_upper = base + 1.0 / (12 * m)
    exact_log = math.log(math.factorial(m))
    return math.exp(log_lower), math.exp(log_upper), exact_log
