"""Second-difference census identities on enumerated trees."""

import pytest

from poupard.delta import build_matrix, region_cells
from poupard.trees import (
    CountMatrix,
    census_tables,
    structural_census,
)


def test_structural_census_examples():
    assert structural_census(3, 3, 1, "R1Witness") == 1
    assert structural_census(3, 2, 3, "R2WitnessInside") == 0
    total = structural_census(2, 4, 1, "R2WitnessOutside") + structural_census(
        2, 4, 1, "R2WitnessInside"
    )
    assert total == 1  # equals f_1(2,1) via the reduction identity


def test_unknown_condition_rejected():
    with pytest.raises(ValueError):
        structural_census(2, 2, 1, "NoSuchCondition")


@pytest.mark.parametrize("n", [2, 3, 4])
def test_row_second_difference_identity(n):
    tables = census_tables(n)
    joint = CountMatrix(n, tables.joint)
    for (m, k) in list(region_cells("L1", n)) + list(region_cells("U2", n)):
        d2 = joint.value(m + 2, k) - 2 * joint.value(m + 1, k) + joint.value(m, k)
        assert d2 + 2 * tables.r1_witness[m - 1][k - 1] == 0, (n, m, k)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_column_second_difference_identity(n):
    tables = census_tables(n)
    joint = CountMatrix(n, tables.joint)
    for (m, k) in list(region_cells("L2", n)) + list(region_cells("U1", n)):
        d2 = joint.value(m, k + 2) - 2 * joint.value(m, k + 1) + joint.value(m, k)
        outside = tables.r2_outside[m - 1][k - 1]
        inside = tables.r2_inside[m - 1][k - 1]
        assert d2 + 2 * (outside + inside) == 0, (n, m, k)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_inside_term_vanishes_above_diagonal(n):
    tables = census_tables(n)
    for (m, k) in region_cells("U1", n):
        assert tables.r2_inside[m - 1][k - 1] == 0


def test_witness_counts_match_previous_matrix():
    # the reduction identities: the R1 witness count at (m,k) equals
    # f_{n-1}(m,k) on L1 and f_{n-1}(m,k-2) on U2; the combined R2 witnesses
    # give f_{n-1}(m-2,k) on L2 and f_{n-1}(m,k) on U1.
    for n in (2, 3, 4):
        tables = census_tables(n)
        prev = build_matrix(n - 1, "D1")
        for (m, k) in region_cells("L1", n):
            assert tables.r1_witness[m - 1][k - 1] == prev.value(m, k)
        for (m, k) in region_cells("U2", n):
            assert tables.r1_witness[m - 1][k - 1] == prev.value(m, k - 2)
        for (m, k) in region_cells("L2", n):
            combined = tables.r2_outside[m - 1][k - 1] + tables.r2_inside[m - 1][k - 1]
            assert combined == prev.value(m - 2, k)
        for (m, k) in region_cells("U1", n):
            combined = tables.r2_outside[m - 1][k - 1] + tables.r2_inside[m - 1][k - 1]
            assert combined == prev.value(m, k)


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_matrix_recurrences(n):
    mat = build_matrix(n, "D1")
    prev = build_matrix(n - 1, "D1")
    for (m, k) in region_cells("L1", n):
        assert (
            mat.value(m + 2, k) - 2 * mat.value(m + 1, k) + mat.value(m, k)
            + 2 * prev.value(m, k)
            == 0
        )
    for (m, k) in region_cells("U2", n):
        assert (
            mat.value(m + 2, k) - 2 * mat.value(m + 1, k) + mat.value(m, k)
            + 2 * prev.value(m, k - 2)
            == 0
        )
    for (m, k) in region_cells("L2", n):
        assert (
            mat.value(m, k + 2) - 2 * mat.value(m, k + 1) + mat.value(m, k)
            + 2 * prev.value(m - 2, k)
            == 0
        )
    for (m, k) in region_cells("U1", n):
        assert (
            mat.value(m, k + 2) - 2 * mat.value(m, k + 1) + mat.value(m, k)
            + 2 * prev.value(m, k)
            == 0
        )
