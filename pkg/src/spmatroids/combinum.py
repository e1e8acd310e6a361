"""Exact combinatorial numbers.

Factorials, double factorials, binomial coefficients, Stirling numbers of
the second kind, derangement numbers refined by cycle count (the unsigned
associated Stirling numbers of the first kind), reciprocal composition
sums, and partial Bell polynomials.  Everything is exact: integers are
unbounded and rational values are fractions.Fraction.

All functions are pure.  Memo tables are grown with idempotent writes of
immutable rows, so concurrent readers always observe values identical to a
single-threaded run.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial
from typing import Iterator, Sequence

__all__ = [
    "binomial",
    "double_factorial",
    "stirling2",
    "assoc_stirling1",
    "h_value",
    "h_value_compositions",
    "bell_partial",
    "compositions",
]

_STIRLING2_ROWS: dict[int, tuple[int, ...]] = {}
_ASSOC_ROWS: dict[int, tuple[int, ...]] = {}
_H_ROWS: dict[int, tuple[Fraction, ...]] = {}


def binomial(n: int, k: int) -> int:
    """Binomial coefficient C(n, k); 0 outside the range 0 <= k <= n."""
    if n < 0:
        raise ValueError("binomial requires n >= 0")
    if k < 0 or k > n:
        return 0
    return comb(n, k)


def double_factorial(n: int) -> int:
    """n!! = n (n-2) (n-4) ..., with the conventions (-1)!! = 0!! = 1."""
    if n < -1:
        raise ValueError("double_factorial requires n >= -1")
    result = 1
    while n > 1:
        result *= n
        n -= 2
    return result


def _stirling2_row(n: int) -> tuple[int, ...]:
    # row[k] = S2(n, k) for 0 <= k <= n
    row = _STIRLING2_ROWS.get(n)
    if row is None:
        if n == 0:
            row = (1,)
        else:
            prev = _stirling2_row(n - 1)
            row = tuple(
                (prev[k - 1] if k >= 1 else 0) + k * (prev[k] if k < n else 0)
                for k in range(n + 1)
            )
        _STIRLING2_ROWS[n] = row
    return row


def stirling2(n: int, k: int) -> int:
    """Number of partitions of an n-set into k nonempty blocks; S2(0,0) = 1."""
    if n < 0 or k < 0 or k > n:
        return 0
    return _stirling2_row(n)[k]


def _assoc_row(n: int) -> tuple[int, ...]:
    # row[k] = number of derangements of [n] with exactly k cycles
    row = _ASSOC_ROWS.get(n)
    if row is None:
        if n == 0:
            row = (1,)
        elif n == 1:
            row = (0, 0)
        else:
            p1 = _assoc_row(n - 1)
            p2 = _assoc_row(n - 2)
            row = tuple(
                (n - 1) * ((p2[k - 1] if 1 <= k <= n - 1 else 0)
                           + (p1[k] if k <= n - 1 else 0))
                for k in range(n + 1)
            )
        _ASSOC_ROWS[n] = row
    return row


def assoc_stirling1(n: int, k: int) -> int:
    """Number of fixed-point-free permutations of [n] with exactly k cycles.

    Vanishes for n < 2k; assoc_stirling1(0, 0) = 1.
    """
    if n < 0 or k < 0 or k > n:
        return 0
    if n < 2 * k:
        return 0
    return _assoc_row(n)[k]


def _h_row(m: int) -> tuple[Fraction, ...]:
    # row[k] = H(m, k) for 0 <= k <= m, where H(m, k) sums the reciprocals
    # 1 / ((j_1 + 1) ... (j_k + 1)) over compositions j_1 + ... + j_k = m.
    row = _H_ROWS.get(m)
    if row is None:
        if m == 0:
            row = (Fraction(1),)
        else:
            prev = _h_row(m - 1)
            vals = [Fraction(0)]
            for k in range(1, m + 1):
                a = prev[k - 1] if k - 1 <= m - 1 else Fraction(0)
                b = prev[k] if k <= m - 1 else Fraction(0)
                vals.append((k * a + (m + k - 1) * b) / (m + k))
            row = tuple(vals)
        _H_ROWS[m] = row
    return row


def h_value(m: int, k: int) -> Fraction:
    """Reciprocal composition sum over j_1 + ... + j_k = m with all j_i >= 1.

    Computed by dynamic programming via the recursion
    (m+k) H(m,k) = k H(m-1,k-1) + (m+k-1) H(m-1,k).
    Returns 1 for m = k = 0 and 0 whenever k > m or (m > 0 and k = 0).
    """
    if m < 0 or k < 0 or k > m:
        return Fraction(0)
    return _h_row(m)[k]


def compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Yield all ordered tuples of `parts` positive integers summing to `total`."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        if total >= 1:
            yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def h_value_compositions(m: int, k: int) -> Fraction:
    """Reference evaluation of h_value by direct composition enumeration.

    Exponential in k; intended for cross-checks at small indices only.
    """
    if m < 0 or k < 0:
        return Fraction(0)
    total = Fraction(0)
    for js in compositions(m, k):
        prod = Fraction(1)
        for j in js:
            prod /= j + 1
        total += prod
    return total


def bell_partial(n: int, k: int, t: Sequence[Fraction | int]) -> Fraction:
    """Partial Bell polynomial B(n, k) evaluated at t = (t_1, t_2, ...).

    Uses the composition-sum expansion
    B(n,k)(t) = (n!/k!) * sum over j_1+...+j_k = n of prod t_{j_i} / j_i!.
    Requires 1 <= k <= n and at least n - k + 1 entries in t.
    """
    if not 1 <= k <= n:
        raise ValueError("bell_partial requires 1 <= k <= n")
    if len(t) < n - k + 1:
        raise ValueError(
            f"bell_partial needs at least {n - k + 1} entries in t, got {len(t)}"
        )
    total = Fraction(0)
    for js in compositions(n, k):
        prod = Fraction(1)
        for j in js:
            prod *= Fraction(t[j - 1]) / factorial(j)
        total += prod
    return total * Fraction(factorial(n), factorial(k))
