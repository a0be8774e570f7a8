"""Exact integer/rational combinatorial primitives.

Factorials, binomials, rising/falling factorials, both kinds of Stirling
numbers, second-order Eulerian numbers and the alternating finite-difference
operator.  Everything here is exact: integer tables are filled by their
defining recurrences and rational arithmetic uses ``fractions.Fraction``
(always in lowest terms, positive denominator).

Sign conventions: Stirling cycle numbers are the *unsigned* first kind; signs
are applied at call sites when converting falling factorials to powers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Callable, Union

__all__ = [
    "ExactRational",
    "TriangleKind",
    "TriangleTable",
    "binomial",
    "rising_factorial",
    "falling_factorial",
    "stirling_cycle",
    "stirling_subset",
    "eulerian_second_order",
    "finite_difference",
    "expand_rising_to_powers",
]

# Exact scalar used throughout the package (arbitrary-precision rational,
# stored in lowest terms with positive denominator, exact +,-,*,/).
ExactRational = Fraction

Rational = Union[int, Fraction]


def binomial(n: int, k: int) -> int:
    """C(n, k) with the convention that it vanishes for k < 0 or k > n.

    Out-of-triangle arguments are routine in the summation identities served
    here, so they return 0 rather than raising.
    """
    if n < 0:
        raise ValueError("binomial requires n >= 0")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def rising_factorial(x: Rational, k: int) -> Rational:
    """x(x+1)...(x+k-1); the empty product (k = 0) is 1."""
    if k < 0:
        raise ValueError("rising_factorial requires k >= 0")
    out: Rational = 1
    for u in range(k):
        out *= x + u
    return out


def falling_factorial(x: Rational, k: int) -> Rational:
    """x(x-1)...(x-k+1); the empty product (k = 0) is 1."""
    if k < 0:
        raise ValueError("falling_factorial requires k >= 0")
    out: Rational = 1
    for u in range(k):
        out *= x - u
    return out


# --- triangle tables -------------------------------------------------------
#
# Rows are grown on demand and memoized at module level; row n holds entries
# for k = 0..n.  Construction is single-threaded; lookups never mutate
# existing rows.

_cycle_rows: list[list[int]] = [[1]]
_subset_rows: list[list[int]] = [[1]]
_euler2_rows: list[list[int]] = [[1]]


def _grow(rows: list[list[int]], n: int, cell: Callable[[int, list[int], int], int]) -> None:
    while len(rows) <= n:
        m = len(rows)
        prev = rows[-1]
        row = [cell(m, prev, k) for k in range(m + 1)]
        rows.append(row)


def _cycle_cell(n: int, prev: list[int], k: int) -> int:
    left = prev[k - 1] if 1 <= k <= n else 0
    right = prev[k] if k < n else 0
    return left + (n - 1) * right


def _subset_cell(n: int, prev: list[int], k: int) -> int:
    left = prev[k - 1] if 1 <= k <= n else 0
    right = prev[k] if k < n else 0
    return left + k * right


def _euler2_cell(n: int, prev: list[int], k: int) -> int:
    # <<n,k>> = (k+1)<<n-1,k>> + (2n-1-k)<<n-1,k-1>>
    left = prev[k] if k < n else 0
    right = prev[k - 1] if 1 <= k <= n else 0
    return (k + 1) * left + (2 * n - 1 - k) * right


def _lookup(rows: list[list[int]], cell, n: int, k: int) -> int:
    if n < 0:
        raise ValueError("triangle index requires n >= 0")
    if k < 0 or k > n:
        return 0
    _grow(rows, n, cell)
    return rows[n][k]


def stirling_cycle(n: int, k: int) -> int:
    """Unsigned Stirling number of the first kind (permutations by cycles)."""
    return _lookup(_cycle_rows, _cycle_cell, n, k)


def stirling_subset(n: int, k: int) -> int:
    """Stirling number of the second kind (set partitions into k blocks)."""
    return _lookup(_subset_rows, _subset_cell, n, k)


def eulerian_second_order(n: int, k: int) -> int:
    """Second-order Eulerian number; row n sums to (2n)!/(n! 2^n)."""
    return _lookup(_euler2_rows, _euler2_cell, n, k)


class TriangleKind(Enum):
    STIRLING_CYCLE = "stirling_cycle"
    STIRLING_SUBSET = "stirling_subset"
    EULERIAN_SECOND_ORDER = "eulerian_second_order"


_KIND_FN = {
    TriangleKind.STIRLING_CYCLE: stirling_cycle,
    TriangleKind.STIRLING_SUBSET: stirling_subset,
    TriangleKind.EULERIAN_SECOND_ORDER: eulerian_second_order,
}


@dataclass(frozen=True)
class TriangleTable:
    """Dense lower-triangular table of one combinatorial triangle.

    entries[n][k] is defined for 0 <= k <= n <= max_row; value() returns 0
    outside the triangle.
    """

    kind: TriangleKind
    max_row: int
    entries: tuple[tuple[int, ...], ...]

    @classmethod
    def build(cls, kind: TriangleKind, max_row: int) -> "TriangleTable":
        if max_row < 0:
            raise ValueError("max_row must be >= 0")
        fn = _KIND_FN[kind]
        rows = tuple(tuple(fn(n, k) for k in range(n + 1)) for n in range(max_row + 1))
        return cls(kind=kind, max_row=max_row, entries=rows)

    def value(self, n: int, k: int) -> int:
        if n < 0 or n > self.max_row:
            raise ValueError(f"row {n} outside table (max_row={self.max_row})")
        if k < 0 or k > n:
            return 0
        return self.entries[n][k]


def finite_difference(a: int, f: Callable[[int], Rational]) -> Rational:
    """Alternating binomial difference sum(j=0..a) C(a,j)(-1)^j f(j).

    Annihilates polynomials of degree < a and maps j^a to (-1)^a a!.
    """
    if a < 1:
        raise ValueError("finite_difference requires a >= 1")
    out: Rational = 0
    for j in range(a + 1):
        term = math.comb(a, j) * f(j)
        out = out + term if j % 2 == 0 else out - term
    return out


def expand_rising_to_powers(m: int) -> list[int]:
    """Coefficients c_l with x(x+1)...(x+m-1) = sum c_l x^l, l = 0..m."""
    if m < 0:
        raise ValueError("expand_rising_to_powers requires m >= 0")
    return [stirling_cycle(m, l) for l in range(m + 1)]
