"""Tests for the closed-form count families and their conversions."""

from fractions import Fraction

import pytest

from spmatroids.combinum import double_factorial, stirling2
from spmatroids.powerseries import count_coefficient
from spmatroids.spcounts import (
    TriangularCountTable,
    a_series,
    build_tables,
    c_closed,
    e_closed,
    e_from_c,
    e_series,
    e_special,
    g_closed,
    s_series,
)


def test_e_closed_pinned_values():
    assert e_closed(5, 3) == 15  # 5!! * 5^0
    assert e_closed(7, 4) == 735  # 7!! * 7
    assert e_closed(4, 3) == 1  # the 4-cycle, unique labeled matroid
    assert e_closed(1, 1) == 1  # single coloop
    assert e_closed(3, 2) == 1  # the triangle
    assert e_closed(3, 3) == 0
    assert e_closed(5, 4) == 1  # the 5-cycle


def test_e_closed_total_function():
    assert e_closed(4, 0) == 0
    assert e_closed(2, 5) == 0
    assert e_closed(10, 3) == 0  # vanishing region n >= 2k > 0
    for n in range(1, 41):
        for k in range(1, n // 2 + 1):
            assert e_closed(n, k) == 0


def test_e_closed_odd_row_double_factorial_form():
    for k in range(1, 13):
        expected = double_factorial(2 * k - 1) * Fraction(2 * k - 1) ** (k - 3)
        assert expected.denominator == 1
        assert e_closed(2 * k - 1, k) == int(expected)


def test_c_closed_pinned_values():
    assert c_closed(4, 2) == 6  # six labelings of the doubled-edge triangle
    assert c_closed(3, 1) == 1  # triple edge
    assert c_closed(5, 2) == 25
    assert c_closed(1, 0) == 1 and c_closed(1, 1) == 1
    for n in range(2, 20):
        assert c_closed(n, n) == 0
        assert c_closed(n, 0) == 0


def test_c_duality():
    for n in range(1, 31):
        for k in range(n + 1):
            assert c_closed(n, k) == c_closed(n, n - k)


def test_g_closed_values():
    assert g_closed(2, 0) == 1 and g_closed(2, 1) == 1
    assert g_closed(3, 1) == 6
    assert g_closed(3, 3) == 0
    assert g_closed(1, 0) == 1
    assert g_closed(4, -1) == 0


def test_g_palindromy_and_c_shift():
    for n in range(1, 31):
        for l in range(n):
            assert g_closed(n, l) == g_closed(n, n - 1 - l)
    for n in range(2, 31):
        for l in range(1, n + 1):
            assert c_closed(n, l) == g_closed(n - 1, l - 1)


def test_e_from_c_rows():
    table = e_from_c(5)
    assert table.row(3) == (0, 0, 1, 0)
    assert table.row(4) == (0, 0, 0, 1, 0)
    assert table.row(5)[3] == 15


def test_e_from_c_matches_e_closed():
    table = e_from_c(40)
    for n in range(1, 41):
        for k in range(n + 1):
            assert table.value(n, k) == e_closed(n, k)


def test_stirling_convolution_of_e_gives_c():
    for n in range(2, 21):
        for l in range(n + 1):
            total = sum(stirling2(n, m) * e_closed(m, l) for m in range(1, n + 1))
            assert total == c_closed(n, l)


def test_e_special_r1():
    for k in range(1, 13):
        assert e_special(2 * k - 1, k, 1) == e_closed(2 * k - 1, k)
    assert e_special(7, 4, 1) == 735


def test_e_special_r2_printed_discrepancy():
    # The printed r = 2 variant disagrees with every other route at k = 3.
    assert e_special(4, 3, 2) == 5
    assert e_closed(4, 3) == 1
    assert e_special(2, 2, 2) == 0 == e_closed(2, 2)


def test_e_special_r3():
    assert e_special(3, 3, 3) == 0 == e_closed(3, 3)
    assert e_special(5, 4, 3) == 1 == e_closed(5, 4)
    for k in range(3, 13):
        assert e_special(2 * k - 3, k, 3) == e_closed(2 * k - 3, k)


def test_e_special_validation():
    with pytest.raises(ValueError):
        e_special(4, 3, 4)
    with pytest.raises(ValueError):
        e_special(5, 3, 2)  # n != 2k - r
    with pytest.raises(ValueError):
        e_special(1, 2, 3)  # k < r


def test_build_tables_rows():
    a = build_tables(4, "A")
    assert a.row(0) == (1,)
    assert a.row(2) == (1, 3, 1)
    s = build_tables(4, "S")
    assert s.row(4) == (0, 0, 0, 5, 1)
    c = build_tables(4, "C")
    assert c.row(4) == (0, 1, 6, 1, 0)
    e = build_tables(4, "E")
    assert e.row(4) == (0, 0, 0, 1, 0)
    with pytest.raises(ValueError):
        build_tables(4, "X")


def test_count_coefficient_on_family_series():
    a = a_series(4)
    assert count_coefficient(a, 2, 1) == 3
    s = s_series(4)
    assert count_coefficient(s, 3, 2) == 1
    e = e_series(4)
    assert count_coefficient(e, 4, 3) == 1


def test_table_type_validation():
    with pytest.raises(ValueError):
        TriangularCountTable("C", 1, ((1, -1),))
    with pytest.raises(ValueError):
        TriangularCountTable("C", 1, ((1, 1, 1),))
    t = build_tables(3, "C")
    assert t.max_n == 3
    assert t.value(3, 9) == 0
    with pytest.raises(ValueError):
        t.row(0)
