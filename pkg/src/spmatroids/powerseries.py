"""Truncated bivariate power series with exact rational coefficients.

A series is a triangular table: row n holds the coefficients of
y^0 .. y^n at x^n, since every series arising here has y-degree bounded by
x-degree.  Coefficients are stored raw (the coefficient of y^k x^n, not the
exponential-generating-function numerator); count extraction multiplies by
n! at the boundary.

Series values are immutable and all operations are pure, so they are safe
to share across threads.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from .combinum import compositions

Poly = tuple[Fraction, ...]


# ---------------------------------------------------------------------------
# polynomial-in-y helpers (dense coefficient lists)
# ---------------------------------------------------------------------------

def _padd(a, b):
    n = max(len(a), len(b))
    return [
        (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)
        for i in range(n)
    ]


def _pmul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] += ai * bj
    return out


def _pscale(a, c):
    return [ai * c for ai in a]


def _fit_row(poly, n) -> Poly:
    # Trim trailing zeros and pad to the triangular row length n + 1.
    # Any surviving coefficient beyond y^n breaks the triangular invariant.
    vals = list(poly)
    while vals and vals[-1] == 0:
        vals.pop()
    if len(vals) > n + 1:
        raise ValueError(
            f"y-degree {len(vals) - 1} exceeds x-degree {n}: "
            "triangular invariant violated"
        )
    vals.extend([Fraction(0)] * (n + 1 - len(vals)))
    return tuple(Fraction(v) for v in vals)


# ---------------------------------------------------------------------------
# series types
# ---------------------------------------------------------------------------

class BivariateSeries:
    """Triangular truncated series sum_{n <= order} sum_{k <= n} c[n][k] y^k x^n."""

    __slots__ = ("_order", "_rows")

    def __init__(self, order: int, rows):
        if order < 0:
            raise ValueError("order must be nonnegative")
        rows = tuple(tuple(Fraction(c) for c in row) for row in rows)
        if len(rows) != order + 1:
            raise ValueError(f"expected {order + 1} rows, got {len(rows)}")
        for n, row in enumerate(rows):
            if len(row) != n + 1:
                raise ValueError(f"row {n} must have {n + 1} entries, got {len(row)}")
        self._order = order
        self._rows = rows

    @property
    def order(self) -> int:
        return self._order

    @property
    def rows(self) -> tuple[Poly, ...]:
        return self._rows

    def coeff(self, n: int, k: int) -> Fraction:
        """Coefficient of y^k x^n.  Reading beyond the stored order is an error."""
        if n < 0 or n > self._order:
            raise ValueError(f"x-degree {n} outside stored order {self._order}")
        if k < 0 or k > n:
            return Fraction(0)
        return self._rows[n][k]

    @classmethod
    def zero(cls, order: int) -> "BivariateSeries":
        return cls(order, [[0] * (n + 1) for n in range(order + 1)])

    @classmethod
    def x(cls, order: int) -> "BivariateSeries":
        if order < 1:
            raise ValueError("the series x needs order >= 1")
        rows = [[0] * (n + 1) for n in range(order + 1)]
        rows[1][0] = 1
        return cls(order, rows)

    def __eq__(self, other) -> bool:
        # Equality compares coefficients up to the common truncation order.
        if not isinstance(other, BivariateSeries):
            return NotImplemented
        n = min(self._order, other._order)
        return self._rows[: n + 1] == other._rows[: n + 1]

    def __hash__(self):
        raise TypeError("BivariateSeries is not hashable (order-relative equality)")

    def __add__(self, other):
        return series_add(self, other)

    def __sub__(self, other):
        return series_add(self, series_scale(other, Fraction(-1)))

    def __mul__(self, other):
        if isinstance(other, BivariateSeries):
            return series_mul(self, other)
        return series_scale(self, other)

    __rmul__ = __mul__

    def __repr__(self):
        terms = sum(1 for row in self._rows for c in row if c)
        return f"BivariateSeries(order={self._order}, nonzero_terms={terms})"


class UnivariateSeries:
    """Truncated series sum_{n <= order} c[n] x^n, used as inner series of compositions."""

    __slots__ = ("_order", "_coeffs")

    def __init__(self, order: int, coeffs):
        if order < 0:
            raise ValueError("order must be nonnegative")
        coeffs = tuple(Fraction(c) for c in coeffs)
        if len(coeffs) != order + 1:
            raise ValueError(f"expected {order + 1} coefficients, got {len(coeffs)}")
        self._order = order
        self._coeffs = coeffs

    @property
    def order(self) -> int:
        return self._order

    @property
    def coeffs(self) -> Poly:
        return self._coeffs

    @classmethod
    def x(cls, order: int) -> "UnivariateSeries":
        if order < 1:
            raise ValueError("the series x needs order >= 1")
        return cls(order, [0, 1] + [0] * (order - 1))

    def __eq__(self, other):
        if not isinstance(other, UnivariateSeries):
            return NotImplemented
        n = min(self._order, other._order)
        return self._coeffs[: n + 1] == other._coeffs[: n + 1]

    def __hash__(self):
        raise TypeError("UnivariateSeries is not hashable (order-relative equality)")

    def __repr__(self):
        return f"UnivariateSeries(order={self._order})"


def exp_minus_one(order: int) -> UnivariateSeries:
    """The series e^x - 1 truncated at the given order."""
    return UnivariateSeries(order, [0] + [Fraction(1, factorial(n)) for n in range(1, order + 1)])


def exp_x(order: int) -> BivariateSeries:
    """The series e^x as a bivariate series (constant in y)."""
    rows = [[Fraction(1, factorial(n))] + [0] * n for n in range(order + 1)]
    return BivariateSeries(order, rows)


# ---------------------------------------------------------------------------
# ring operations
# ---------------------------------------------------------------------------

def series_add(a: BivariateSeries, b: BivariateSeries) -> BivariateSeries:
    """Coefficientwise sum, truncated at the smaller order."""
    order = min(a.order, b.order)
    rows = [
        [a.rows[n][k] + b.rows[n][k] for k in range(n + 1)]
        for n in range(order + 1)
    ]
    return BivariateSeries(order, rows)


def series_scale(a: BivariateSeries, c) -> BivariateSeries:
    """Scalar multiple c * a."""
    c = Fraction(c)
    rows = [[v * c for v in row] for row in a.rows]
    return BivariateSeries(a.order, rows)


def series_mul(a: BivariateSeries, b: BivariateSeries) -> BivariateSeries:
    """Cauchy product truncated at the smaller order."""
    order = min(a.order, b.order)
    rows = []
    for n in range(order + 1):
        acc = [Fraction(0)] * (n + 1)
        for i in range(n + 1):
            ra = a.rows[i]
            rb = b.rows[n - i]
            if any(ra) and any(rb):
                acc = _padd(acc, _pmul(ra, rb))
        rows.append(_fit_row(acc, n))
    return BivariateSeries(order, rows)


def series_mul_y(f: BivariateSeries) -> BivariateSeries:
    """Multiply by y.  Valid only when every row has y-degree below its x-degree."""
    rows = []
    for n, row in enumerate(f.rows):
        if row[n] != 0:
            raise ValueError(
                f"cannot multiply by y: row {n} already has y-degree {n}"
            )
        rows.append((Fraction(0),) + row[:n])
    return BivariateSeries(f.order, rows)


# ---------------------------------------------------------------------------
# exp / log / composition / integration
# ---------------------------------------------------------------------------

def series_exp(f: BivariateSeries) -> BivariateSeries:
    """exp(f) for a series with zero constant term.

    Uses the differential recurrence n g_n = sum_m m f_m g_{n-m}, which keeps
    every coefficient exact.
    """
    if f.rows[0][0] != 0:
        raise ValueError("series_exp requires zero constant term")
    n_max = f.order
    g: list[list[Fraction]] = [[Fraction(1)]]
    for n in range(1, n_max + 1):
        acc = [Fraction(0)]
        for m in range(1, n + 1):
            fm = f.rows[m]
            if any(fm):
                acc = _padd(acc, _pscale(_pmul(fm, g[n - m]), m))
        g.append(_pscale(acc, Fraction(1, n)))
    return BivariateSeries(n_max, [_fit_row(row, n) for n, row in enumerate(g)])


def series_log(f: BivariateSeries) -> BivariateSeries:
    """log(f) for a series with constant term 1; inverse of series_exp."""
    if f.rows[0][0] != 1:
        raise ValueError("series_log requires constant term 1")
    n_max = f.order
    g: list[list[Fraction]] = [[Fraction(0)]]
    for n in range(1, n_max + 1):
        acc = [Fraction(0)]
        for m in range(1, n):
            gm = g[m]
            fnm = f.rows[n - m]
            if any(gm) and any(fnm):
                acc = _padd(acc, _pscale(_pmul(gm, fnm), m))
        g.append(_padd(list(f.rows[n]), _pscale(acc, Fraction(-1, n))))
    return BivariateSeries(n_max, [_fit_row(row, n) for n, row in enumerate(g)])


def series_compose_x(outer: BivariateSeries, inner: UnivariateSeries) -> BivariateSeries:
    """Substitute the univariate series `inner` for x in `outer`; y is untouched."""
    if inner.coeffs[0] != 0:
        raise ValueError("series_compose_x requires inner constant term 0")
    order = min(outer.order, inner.order)
    acc: list[list[Fraction]] = [[Fraction(0)] for _ in range(order + 1)]
    acc[0][0] += outer.rows[0][0]
    power = list(inner.coeffs[: order + 1])  # inner^m, coefficient list in x
    for m in range(1, order + 1):
        if m > 1:
            nxt = [Fraction(0)] * (order + 1)
            for i in range(m - 1, order + 1):
                if power[i]:
                    for j in range(1, order + 1 - i):
                        if inner.coeffs[j]:
                            nxt[i + j] += power[i] * inner.coeffs[j]
            power = nxt
        row_m = outer.rows[m]
        if any(row_m):
            for n in range(m, order + 1):
                if power[n]:
                    acc[n] = _padd(acc[n], _pscale(row_m, power[n]))
    return BivariateSeries(order, [_fit_row(row, n) for n, row in enumerate(acc)])


def series_compose_shared_y(outer: BivariateSeries, inner: BivariateSeries) -> BivariateSeries:
    """Substitute the bivariate series `inner` for x in `outer`, sharing y.

    Intermediate y-degrees may exceed the triangular bound; the result must
    land back inside it (as it does when composing a series with its
    compositional inverse), otherwise this raises.
    """
    if inner.rows[0][0] != 0:
        raise ValueError("series_compose_shared_y requires inner constant term 0")
    order = min(outer.order, inner.order)
    acc: list[list[Fraction]] = [[Fraction(0)] for _ in range(order + 1)]
    acc[0][0] += outer.rows[0][0]
    # power[n] = y-polynomial coefficient of x^n in inner^m
    power: list[list[Fraction]] = [list(row) for row in inner.rows[: order + 1]]
    for m in range(1, order + 1):
        if m > 1:
            nxt: list[list[Fraction]] = [[Fraction(0)] for _ in range(order + 1)]
            for i in range(m - 1, order + 1):
                if any(power[i]):
                    for j in range(1, order + 1 - i):
                        rj = inner.rows[j]
                        if any(rj):
                            nxt[i + j] = _padd(nxt[i + j], _pmul(power[i], rj))
            power = nxt
        row_m = outer.rows[m]
        if any(row_m):
            for n in range(m, order + 1):
                if any(power[n]):
                    acc[n] = _padd(acc[n], _pmul(row_m, power[n]))
    return BivariateSeries(order, [_fit_row(row, n) for n, row in enumerate(acc)])


def series_integrate_x(f: BivariateSeries) -> BivariateSeries:
    """Termwise antiderivative in x with zero constant term; order grows by one."""
    rows: list[list[Fraction]] = [[Fraction(0)]]
    for n, row in enumerate(f.rows):
        new = _pscale(row, Fraction(1, n + 1))
        new.append(Fraction(0))  # pad y-degree up to n + 1
        rows.append(new)
    return BivariateSeries(f.order + 1, rows)


# ---------------------------------------------------------------------------
# compositional inversion in x
# ---------------------------------------------------------------------------

def _check_reversible(f: BivariateSeries) -> Fraction:
    if f.order < 1:
        raise ValueError("inversion needs order >= 1")
    if f.rows[0][0] != 0:
        raise ValueError("inversion requires zero constant term")
    row1 = f.rows[1]
    if row1[0] == 0 or row1[1] != 0:
        raise ValueError("inversion requires a nonzero constant x-linear coefficient")
    return row1[0]


def series_reverse_x(f: BivariateSeries) -> BivariateSeries:
    """Compositional inverse of f in x: the unique g with g(f(x,y), y) = x.

    Solves for the coefficients of g order by order from the triangular
    system [x^n] sum_m g_m (f^m) = [n == 1].
    """
    c = _check_reversible(f)
    n_max = f.order
    # fpow[m][n] = y-polynomial coefficient of x^n in f^m
    fpow: list[list[list[Fraction]]] = [[], [list(row) for row in f.rows]]
    for m in range(2, n_max + 1):
        prev = fpow[m - 1]
        cur: list[list[Fraction]] = [[Fraction(0)] for _ in range(n_max + 1)]
        for i in range(m - 1, n_max + 1):
            if any(prev[i]):
                for j in range(1, n_max + 1 - i):
                    rj = f.rows[j]
                    if any(rj):
                        cur[i + j] = _padd(cur[i + j], _pmul(prev[i], rj))
        fpow.append(cur)
    g: list[list[Fraction]] = [[Fraction(0)], [Fraction(1) / c]]
    for n in range(2, n_max + 1):
        acc = [Fraction(0)]
        for m in range(1, n):
            if any(g[m]) and any(fpow[m][n]):
                acc = _padd(acc, _pmul(g[m], fpow[m][n]))
        g.append(_pscale(acc, Fraction(-1) / c ** n))
    return BivariateSeries(n_max, [_fit_row(row, n) for n, row in enumerate(g)])


def lagrange_invert(f: BivariateSeries) -> BivariateSeries:
    """Compositional inverse of f in x via the explicit inversion formula.

    With F_n = n! [x^n] f and hat F_j = F_{j+1} / ((j+1) F_1), the n-th
    normalized coefficient of the inverse is

        G_n = F_1^{-n} sum_{k=1}^{n-1} (-1)^k (n+k-1)!/k!
                  sum_{j_1+...+j_k = n-1} prod_i hat F_{j_i} / j_i!

    and G_1 = 1/F_1.  The inner sum is enumerated literally over
    compositions, which keeps this route independent of series_reverse_x.
    """
    c = _check_reversible(f)
    n_max = f.order
    big_f = [None] + [_pscale(f.rows[n], factorial(n)) for n in range(1, n_max + 1)]
    hat = {
        j: _pscale(big_f[j + 1], Fraction(1, j + 1) / c)
        for j in range(1, n_max)
    }
    g: list[list[Fraction]] = [[Fraction(0)], [Fraction(1) / c]]
    for n in range(2, n_max + 1):
        total = [Fraction(0)]
        for k in range(1, n):
            comp_sum = [Fraction(0)]
            for js in compositions(n - 1, k):
                term = [Fraction(1)]
                for j in js:
                    term = _pscale(_pmul(term, hat[j]), Fraction(1, factorial(j)))
                comp_sum = _padd(comp_sum, term)
            weight = Fraction((-1) ** k * factorial(n + k - 1), factorial(k))
            total = _padd(total, _pscale(comp_sum, weight))
        gn = _pscale(total, Fraction(1) / c ** n)
        g.append(_pscale(gn, Fraction(1, factorial(n))))
    return BivariateSeries(n_max, [_fit_row(row, n) for n, row in enumerate(g)])


# ---------------------------------------------------------------------------
# named series and count extraction
# ---------------------------------------------------------------------------

def build_F(order: int) -> BivariateSeries:
    """The series (1/y) log(1+xy) + log(1+x) - x.

    Its normalized coefficients are F_1 = 1 and
    F_n(y) = (-1)^(n-1) (n-1)! (1 + y^(n-1)) for n > 1, i.e. the raw row n
    carries (-1)^(n-1)/n at y^0 and at y^(n-1).
    """
    if order < 1:
        raise ValueError("build_F needs order >= 1")
    rows: list[list[Fraction]] = [[Fraction(0)], [Fraction(1), Fraction(0)]]
    for n in range(2, order + 1):
        row = [Fraction(0)] * (n + 1)
        v = Fraction((-1) ** (n - 1), n)
        row[0] += v
        row[n - 1] += v
        rows.append(row)
    return BivariateSeries(order, rows)


def count_coefficient(f: BivariateSeries, n: int, k: int) -> int:
    """Extract the integer count n! [y^k x^n] f.

    A non-integral value means an upstream computation is wrong, so it
    raises rather than rounding.
    """
    if n < 0 or n > f.order:
        raise ValueError(f"x-degree {n} outside stored order {f.order}")
    if k < 0 or k > n:
        return 0
    value = f.coeff(n, k) * factorial(n)
    if value.denominator != 1:
        raise ValueError(f"non-integral count at (n, k) = ({n}, {k}): {value}")
    return int(value)
