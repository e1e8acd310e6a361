"""Count families for series-parallel matroids.

Five triangular families are computed here, indexed by ground-set size n
and rank k:

  C  series-parallel matroids (connected; rows start at n = 1)
  E  simple series-parallel matroids
  A  quasi series-parallel matroids, i.e. direct sums (rows start at n = 0)
  S  simple quasi series-parallel matroids
  G  normalized coefficients of the compositional inverse of build_F,
      which satisfy C(n, l) = G(n-1, l-1) for n >= 2

E and C come from closed-form alternating sums, A and S from the
exponential identities A = exp(C) and S = exp(E), and G from its own
closed form.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .combinum import assoc_stirling1, double_factorial, stirling2
from .powerseries import BivariateSeries, count_coefficient, series_exp

FAMILIES = ("E", "C", "A", "S", "G")

# rows of E, C and G start at n = 1; A and S include the empty matroid row
FAMILY_START_N = {"E": 1, "C": 1, "A": 0, "S": 0, "G": 1}


@dataclass(frozen=True)
class TriangularCountTable:
    """A count family as rows indexed by ground-set size n, columns by rank k."""

    family: str
    start_n: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        for i, row in enumerate(self.rows):
            n = self.start_n + i
            if len(row) != n + 1:
                raise ValueError(f"row for n = {n} must have {n + 1} entries")
            if any(v < 0 for v in row):
                raise ValueError(f"negative count in row n = {n}: {row}")

    @property
    def max_n(self) -> int:
        return self.start_n + len(self.rows) - 1

    def row(self, n: int) -> tuple[int, ...]:
        if not self.start_n <= n <= self.max_n:
            raise ValueError(f"row {n} outside table range")
        return self.rows[n - self.start_n]

    def value(self, n: int, k: int) -> int:
        if not self.start_n <= n <= self.max_n:
            raise ValueError(f"row {n} outside table range")
        if k < 0 or k > n:
            return 0
        return self.rows[n - self.start_n][k]


def e_closed(n: int, k: int) -> int:
    """Number of simple series-parallel matroids on n elements of rank k.

    Evaluates, with r = 2k - n,

        E(2k-r, k) = sum_{p=1}^{r} D(2k-p-1, k-p)
                     sum_{i=0}^{r-p} (-1)^(i+p+1) (2k-p-i)^(k-p-1) / (i! (r-p-i)!)

    where D is assoc_stirling1.  Terms with a vanishing D factor are
    skipped before the power is formed, so the only negative exponent ever
    evaluated is 1^(-1) in the (n, k) = (1, 1) base case.  Returns 0 for
    k = 0, k > n, or n >= 2k > 0.
    """
    if n < 1 or k < 1 or k > n:
        return 0
    r = 2 * k - n
    if r < 1:
        return 0
    total = Fraction(0)
    for p in range(1, r + 1):
        d = assoc_stirling1(2 * k - p - 1, k - p)
        if d == 0:
            continue
        inner = Fraction(0)
        for i in range(r - p + 1):
            power = Fraction(2 * k - p - i) ** (k - p - 1)
            inner += (
                Fraction((-1) ** (i + p + 1))
                * power
                / (factorial(i) * factorial(r - p - i))
            )
        total += d * inner
    if total.denominator != 1:
        raise ValueError(f"non-integral E value at (n, k) = ({n}, {k}): {total}")
    return int(total)


def c_closed(n: int, l: int) -> int:
    """Number of series-parallel matroids on n elements of rank l.

    For n >= 2 evaluates the alternating sum

        C(n, l) = sum_{k=0}^{l-1} (-1)^(k+l-1) D(k+l-1, k) S2(n-1+k, k+l);

    the single edge and the single loop give C(1, 0) = C(1, 1) = 1 by
    convention.
    """
    if n < 1 or l < 0 or l > n:
        return 0
    if n == 1:
        return 1
    total = 0
    for k in range(l):
        total += (
            (-1) ** (k + l - 1)
            * assoc_stirling1(k + l - 1, k)
            * stirling2(n - 1 + k, k + l)
        )
    return total


def g_closed(n: int, l: int) -> int:
    """Normalized inverse-series coefficient G(n, l).

    Evaluates sum_{j=0}^{l} (-1)^(j+l) D(j+l, j) S2(n+j, j+l+1); zero
    outside 0 <= l <= n - 1.  Satisfies the palindromy G(n, l) = G(n, n-1-l).
    """
    if n < 1 or l < 0 or l > n - 1:
        return 0
    total = 0
    for j in range(l + 1):
        total += (
            (-1) ** (j + l)
            * assoc_stirling1(j + l, j)
            * stirling2(n + j, j + l + 1)
        )
    return total


def e_from_c(max_n: int) -> TriangularCountTable:
    """Recover the E table from c_closed by inverting the parallel-class sum.

    Solves C(n, l) = sum_{m=l}^{n} S2(n, m) E(m, l) for E by forward
    substitution (S2(n, n) = 1), seeding row 1 with the coloop convention
    E(1, 0) = 0, E(1, 1) = 1.  The result must agree with e_closed entrywise.
    """
    if max_n < 1:
        raise ValueError("e_from_c needs max_n >= 1")
    e: dict[tuple[int, int], int] = {(1, 0): 0, (1, 1): 1}
    for n in range(2, max_n + 1):
        for l in range(n + 1):
            acc = c_closed(n, l)
            for m in range(max(l, 1), n):
                acc -= stirling2(n, m) * e.get((m, l), 0)
            e[(n, l)] = acc
    rows = tuple(
        tuple(e.get((n, l), 0) for l in range(n + 1)) for n in range(1, max_n + 1)
    )
    return TriangularCountTable("E", 1, rows)


def e_special(n: int, k: int, r: int) -> int:
    """Literal transcription of the published special-case formulas at r <= 3.

    Evaluated in exact rationals.  Note that the r = 2 variant, as printed,
    carries a plus sign on its last term and disagrees with e_closed (first
    at k = 3, where it yields 5 while e_closed(4, 3) = 1, the value
    confirmed by exhaustive enumeration); it is kept verbatim so the
    verification report can surface both numbers.
    """
    if r not in (1, 2, 3):
        raise ValueError("e_special handles r in {1, 2, 3}")
    if n != 2 * k - r or k < r:
        raise ValueError(f"e_special requires n = 2k - r and k >= r, got ({n}, {k}, {r})")
    if r == 1:
        total = double_factorial(2 * k - 1) * Fraction(2 * k - 1) ** (k - 3)
    elif r == 2:
        total = double_factorial(2 * k - 3) * (
            Fraction(2 * k - 1) ** (k - 2)
            - Fraction(2 * k - 2) ** (k - 2)
            + Fraction(2, 3) * (k - 2) * Fraction(2 * k - 2) ** (k - 3)
        )
    else:
        total = double_factorial(2 * k - 3) * (
            Fraction(1, 2) * Fraction(2 * k - 1) ** (k - 2)
            - Fraction(2 * k - 2) ** (k - 2)
            + Fraction(1, 2) * Fraction(2 * k - 3) ** (k - 2)
            + Fraction(2, 3)
            * (k - 2)
            * (Fraction(2 * k - 3) ** (k - 3) - Fraction(2 * k - 2) ** (k - 3))
            + Fraction(1, 9)
            * (4 * k - 7)
            * (k - 2)
            * (k - 3)
            * Fraction(2 * k - 3) ** (k - 5)
        )
    if total.denominator != 1:
        raise ValueError(f"non-integral special-case value at ({n}, {k}, {r}): {total}")
    return int(total)


# ---------------------------------------------------------------------------
# series builders (raw coefficients: count / n!)
# ---------------------------------------------------------------------------

def e_series(order: int) -> BivariateSeries:
    rows = [[Fraction(0)]] + [
        [Fraction(e_closed(n, k), factorial(n)) for k in range(n + 1)]
        for n in range(1, order + 1)
    ]
    return BivariateSeries(order, rows)


def c_series(order: int) -> BivariateSeries:
    rows = [[Fraction(0)]] + [
        [Fraction(c_closed(n, k), factorial(n)) for k in range(n + 1)]
        for n in range(1, order + 1)
    ]
    return BivariateSeries(order, rows)


def g_series(order: int) -> BivariateSeries:
    rows = [[Fraction(0)]] + [
        [Fraction(g_closed(n, k), factorial(n)) for k in range(n + 1)]
        for n in range(1, order + 1)
    ]
    return BivariateSeries(order, rows)


def s_series(order: int) -> BivariateSeries:
    return series_exp(e_series(order))


def a_series(order: int) -> BivariateSeries:
    return series_exp(c_series(order))


def build_tables(max_n: int, family: str) -> TriangularCountTable:
    """Build the full triangle of one family up to ground-set size max_n."""
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")
    if max_n < 1:
        raise ValueError("build_tables needs max_n >= 1")
    start = FAMILY_START_N[family]
    if family in ("E", "C", "G"):
        fn = {"E": e_closed, "C": c_closed, "G": g_closed}[family]
        rows = tuple(
            tuple(fn(n, k) for k in range(n + 1)) for n in range(1, max_n + 1)
        )
        return TriangularCountTable(family, start, rows)
    series = s_series(max_n) if family == "S" else a_series(max_n)
    rows = tuple(
        tuple(count_coefficient(series, n, k) for k in range(n + 1))
        for n in range(max_n + 1)
    )
    return TriangularCountTable(family, start, rows)
