"""Exact arithmetic in Q and Q(sqrt 5).

The golden ratio phi = (1 + sqrt 5)/2 lives in the quadratic field Q(sqrt 5),
so every identity it satisfies can be checked by exact rational bookkeeping
instead of floating point.  This module provides that bookkeeping: rationals
are stdlib ``fractions.Fraction`` values, field elements are
:class:`QuadExt` pairs, and nothing here ever rounds.  Conversion to float
happens only through ``float(x)`` and is the one lossy door out.

Also here, because they are exact-arithmetic consumers of the same field:
a monic quadratic solver that works by root symmetry rather than the
radical formula, Fibonacci numbers, and the two classic rational
approximation ladders for phi (consecutive Fibonacci ratios and the
all-ones continued fraction).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

#: Exact rationals.  ``fractions.Fraction`` keeps values normalized with a
#: positive denominator and arbitrary-precision integer parts, which is
#: everything the kernel needs from a rational type.
Rational = Fraction

RationalLike = Union[int, Fraction]


class NoRealRootsError(ValueError):
    """The quadratic's discriminant is negative: no real roots exist."""


class OutsideFieldError(ValueError):
    """The quadratic has real roots, but they fall outside Q(sqrt 5)."""


def _as_fraction(value: RationalLike, what: str = "value") -> Fraction:
    """Accept int or Fraction, reject float so no rounding sneaks in."""
    if isinstance(value, float):
        raise TypeError(f"{what} must be exact (int or Fraction), got a float")
    return Fraction(value)


@dataclass(frozen=True)
class QuadExt:
    """An element p + q*sqrt(5) of Q(sqrt 5), with exact rational p and q.

    Because sqrt 5 is irrational the representation is unique, so equality
    is plain componentwise comparison and ordering can be decided in
    integer arithmetic (see :meth:`sign`).  Instances are immutable and
    hashable; the operators accept ``int`` and ``Fraction`` operands and
    coerce them into the field.
    """

    rat_part: Fraction
    root_coeff: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        object.__setattr__(self, "rat_part", _as_fraction(self.rat_part, "rat_part"))
        object.__setattr__(self, "root_coeff", _as_fraction(self.root_coeff, "root_coeff"))

    @staticmethod
    def _coerce(value: object) -> "QuadExt | None":
        if isinstance(value, QuadExt):
            return value
        if isinstance(value, (int, Fraction)):
            return QuadExt(Fraction(value))
        return None

    # ------------------------------------------------------------------
    # field operations
    # ------------------------------------------------------------------

    def __add__(self, other: object) -> "QuadExt":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadExt(self.rat_part + o.rat_part, self.root_coeff + o.root_coeff)

    __radd__ = __add__

    def __sub__(self, other: object) -> "QuadExt":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadExt(self.rat_part - o.rat_part, self.root_coeff - o.root_coeff)

    def __rsub__(self, other: object) -> "QuadExt":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other: object) -> "QuadExt":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        # (p1 + q1 s)(p2 + q2 s) with s^2 = 5
        return QuadExt(
            self.rat_part * o.rat_part + 5 * self.root_coeff * o.root_coeff,
            self.rat_part * o.root_coeff + self.root_coeff * o.rat_part,
        )

    __rmul__ = __mul__

    def inverse(self) -> "QuadExt":
        """Multiplicative inverse via the conjugate.

        The norm p^2 - 5 q^2 vanishes only for the zero element (again
        because sqrt 5 is irrational), so division by a nonzero element is
        always possible and stays in the field.
        """
        norm = self.rat_part * self.rat_part - 5 * self.root_coeff * self.root_coeff
        if norm == 0:
            raise ZeroDivisionError("division by zero element of Q(sqrt 5)")
        return QuadExt(self.rat_part / norm, -self.root_coeff / norm)

    def __truediv__(self, other: object) -> "QuadExt":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other: object) -> "QuadExt":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, exponent: int) -> "QuadExt":
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = QuadExt(Fraction(1))
        base = self
        for _ in range(exponent):
            result = result * base
        return result

    def __neg__(self) -> "QuadExt":
        return QuadExt(-self.rat_part, -self.root_coeff)

    # ------------------------------------------------------------------
    # ordering, decided exactly
    # ------------------------------------------------------------------

    def sign(self) -> int:
        """Exact sign of the element: -1, 0 or +1, no floats involved.

        When the rational part and the sqrt-5 part pull in opposite
        directions the winner is found by comparing p^2 against 5 q^2,
        which is a pure integer comparison.
        """
        p, q = self.rat_part, self.root_coeff
        if q == 0:
            return -1 if p < 0 else (0 if p == 0 else 1)
        if p == 0:
            return -1 if q < 0 else 1
        if (p > 0) == (q > 0):
            return 1 if p > 0 else -1
        # opposite pulls; equality p^2 == 5 q^2 cannot happen for q != 0
        if p * p > 5 * q * q:
            return 1 if p > 0 else -1
        return 1 if q > 0 else -1

    def __lt__(self, other: object) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() < 0

    def __le__(self, other: object) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() <= 0

    def __gt__(self, other: object) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() > 0

    def __ge__(self, other: object) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() >= 0

    def __abs__(self) -> "QuadExt":
        return -self if self.sign() < 0 else self

    def __float__(self) -> float:
        return float(self.rat_part) + float(self.root_coeff) * math.sqrt(5.0)

    def __str__(self) -> str:
        if self.root_coeff == 0:
            return str(self.rat_part)
        if self.rat_part == 0:
            return f"{self.root_coeff}*sqrt(5)"
        op = "+" if self.root_coeff > 0 else "-"
        return f"{self.rat_part} {op} {abs(self.root_coeff)}*sqrt(5)"


ZERO = QuadExt(Fraction(0))
ONE = QuadExt(Fraction(1))

#: The golden ratio (1 + sqrt 5)/2 as an exact field element.
PHI = QuadExt(Fraction(1, 2), Fraction(1, 2))

#: Nearest double to phi, for the floating-point geometry layers.
PHI_FLOAT = float(PHI)


def golden_identity_check(x: QuadExt) -> bool:
    """Exact test of the defining identity x^2 - x - 1 = 0."""
    return x * x - x - ONE == ZERO


# ----------------------------------------------------------------------
# monic quadratics, solved by root symmetry
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class QuadraticRoots:
    """Roots of a monic quadratic, reported as symmetry point +/- offset.

    ``symmetry_point`` is the rational midpoint the two roots share,
    ``offset_squared`` the exact square of their half-distance, and
    ``roots`` the two field elements (larger first; equal for a double
    root).
    """

    symmetry_point: Fraction
    offset_squared: Fraction
    roots: tuple[QuadExt, QuadExt]


def _rational_sqrt(value: Fraction) -> "Fraction | None":
    """Exact square root of a nonnegative rational, or None if irrational."""
    num_root = math.isqrt(value.numerator)
    den_root = math.isqrt(value.denominator)
    if num_root * num_root == value.numerator and den_root * den_root == value.denominator:
        return Fraction(num_root, den_root)
    return None


def _exact_offset(offset_squared: Fraction) -> QuadExt:
    """Write sqrt(offset_squared) as a field element, if one exists.

    A nonnegative rational has a square root in Q(sqrt 5) exactly when it
    is k^2 or 5 k^2 for rational k (cross terms of (p + q sqrt 5)^2 force
    p or q to vanish).  Everything else raises OutsideFieldError.
    """
    if offset_squared == 0:
        return ZERO
    root = _rational_sqrt(offset_squared)
    if root is not None:
        return QuadExt(root)
    root = _rational_sqrt(offset_squared / 5)
    if root is not None:
        return QuadExt(Fraction(0), root)
    raise OutsideFieldError(
        f"root outside supported field: offset squared {offset_squared} "
        f"is neither k^2 nor 5*k^2 for rational k"
    )


def solve_monic_quadratic(linear: RationalLike, constant: RationalLike) -> QuadraticRoots:
    """Solve x^2 + linear*x + constant = 0 exactly over Q(sqrt 5).

    Works from the symmetry of the root pair rather than the quadratic
    formula: the roots sit at u +/- k where u = -linear/2 is forced by
    their sum and k^2 = u^2 - constant by their product.  Raises
    :class:`NoRealRootsError` when k^2 < 0 and :class:`OutsideFieldError`
    when k exists but is not a field element.

    For the golden polynomial (linear = constant = -1) this yields
    u = 1/2, k^2 = 5/4 and the root pair phi, 1 - phi.
    """
    lin = _as_fraction(linear, "linear coefficient")
    const = _as_fraction(constant, "constant coefficient")
    symmetry = -lin / 2
    offset_squared = symmetry * symmetry - const
    if offset_squared < 0:
        raise NoRealRootsError(
            f"no real roots: discriminant/4 = {offset_squared} is negative"
        )
    offset = _exact_offset(offset_squared)
    center = QuadExt(symmetry)
    return QuadraticRoots(
        symmetry_point=symmetry,
        offset_squared=offset_squared,
        roots=(center + offset, center - offset),
    )


# ----------------------------------------------------------------------
# rational ladders that climb toward phi
# ----------------------------------------------------------------------


def fibonacci(n: int) -> int:
    """F(n) with F(0) = 0, F(1) = 1, computed iteratively.

    Python integers never overflow, so the only practical limit is time;
    F(n) has about 0.209*n digits.
    """
    if n < 0:
        raise ValueError(f"Fibonacci index must be nonnegative, got {n}")
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def fib_ratio(n: int) -> Fraction:
    """F(n+1)/F(n) as an exact rational; defined for n >= 1."""
    if n < 1:
        raise ValueError(f"fib_ratio needs n >= 1 (F(n) must be nonzero), got {n}")
    return Fraction(fibonacci(n + 1), fibonacci(n))


def cf_convergent(depth: int) -> Fraction:
    """Truncation of the all-ones continued fraction 1 + 1/(1 + 1/(...)).

    ``depth`` counts the nested fraction bars: depth 0 is the bare leading
    1, depth 1 is 1 + 1/1, and so on.  The values agree with consecutive
    Fibonacci ratios, which is what the tests pit them against.
    """
    if depth < 0:
        raise ValueError(f"continued-fraction depth must be nonnegative, got {depth}")
    value = Fraction(1)
    for _ in range(depth):
        value = 1 + 1 / value
    return value
