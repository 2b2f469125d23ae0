"""Triangle rows, tangent numbers, and the Poupard-matrix predicate."""

import pytest

from poupard.triangle import (
    Triangle,
    is_poupard_matrix,
    poupard_triangle,
    tangent_numbers,
)

# Frozen from an independent symbolic expansion of tan (see
# test_tangent_against_sympy, which recomputes them from scratch).
TANGENT_ORACLE = [1, 2, 16, 272, 7936, 353792, 22368256]

TABLE_ROWS = [
    [1],
    [0, 1, 0],
    [0, 1, 2, 1, 0],
    [0, 4, 8, 10, 8, 4, 0],
    [0, 34, 68, 94, 104, 94, 68, 34, 0],
]


def test_first_rows_match_table():
    tri = poupard_triangle(4)
    for n, row in enumerate(TABLE_ROWS):
        assert list(tri.row(n)) == row


def test_row_properties_through_n8():
    tri = poupard_triangle(8)
    for n in range(1, 9):
        row = tri.row(n)
        assert row[0] == 0 and row[-1] == 0
        # palindromic rows
        assert list(row) == list(reversed(row))
        # second difference against the previous row
        for m in range(1, 2 * n):
            d2 = tri.value(n, m + 2) - 2 * tri.value(n, m + 1) + tri.value(n, m)
            assert d2 + 2 * tri.value(n - 1, m) == 0
        if n < len(TANGENT_ORACLE):
            assert sum(row) == TANGENT_ORACLE[n] // 2**n


def test_row5_sum():
    assert sum(poupard_triangle(5).row(5)) == 11056


def test_tangent_numbers_frozen():
    assert tangent_numbers(7) == TANGENT_ORACLE
    assert tangent_numbers(1) == [1]


def test_tangent_against_sympy():
    sympy = pytest.importorskip("sympy")
    u = sympy.Symbol("u")
    series = sympy.series(sympy.tan(u), u, 0, 16).removeO()
    expected = [
        int(series.coeff(u, k) * sympy.factorial(k)) for k in range(1, 16, 2)
    ]
    assert tangent_numbers(8) == expected


def test_tangent_power_of_two_divisibility():
    ts = tangent_numbers(8)
    for idx, t in enumerate(ts):
        assert t % 2**idx == 0


def test_is_poupard_matrix():
    # a reindexed lower-triangle grid (known to satisfy the rule)
    grid = [
        [1, 0, 0, 0, 0, 0, 0],
        [0, 1, 0, 1, 0, 4, 0],
        [0, 0, 2, 0, 8, 0, 68],
        [0, 1, 0, 10, 0, 94, 0],
        [0, 0, 8, 0, 104, 0, 1712],
        [0, 4, 0, 94, 0, 1816, 0],
        [0, 0, 68, 0, 1712, 0, 47312],
    ]
    assert is_poupard_matrix(grid).ok
    zero = [[0] * 5 for _ in range(5)]
    assert is_poupard_matrix(zero).ok
    grid[2][2] += 1
    res = is_poupard_matrix(grid)
    assert not res.ok
    i, j = res.violation
    # the violated four-term rule must touch the perturbed cell (2,2)
    assert (i, j) in {(2, 0), (1, 1), (0, 2), (2, 2)}


def test_triangle_json_roundtrip():
    tri = poupard_triangle(3)
    again = Triangle.from_json(tri.to_json())
    assert again == tri


def test_bfile_lines():
    tri = poupard_triangle(1)
    assert tri.bfile_lines() == ["1 1", "2 0", "3 1", "4 0"]
