"""Generating functions: triple series, reindexed grids, closed forms."""

from fractions import Fraction

import pytest

from poupard import gf
from poupard.delta import delta_matrices
from poupard.scalars import RootTwoScalar
from poupard.triangle import is_poupard_matrix


@pytest.fixture(scope="module")
def matrices():
    return delta_matrices(10)


def test_lambda_identity_small_cap(matrices):
    cap = 6
    lhs = gf.lambda_lhs(cap, matrices)
    rhs = gf.lambda_rhs(cap)
    assert lhs == rhs
    assert rhs.is_rational()


def test_omega_identity_small_cap(matrices):
    cap = 6
    lhs = gf.omega_lhs(cap, matrices)
    rhs = gf.omega_rhs(cap)
    assert lhs == rhs
    assert rhs.is_rational()


def test_series_spot_coefficients(matrices):
    lam = gf.lambda_lhs(8, matrices)
    assert lam.coefficient((0, 0, 0)) == RootTwoScalar(1)  # f_1(2,1)
    # x^1 y^0 z^5: f_4(3,1)/(1! 0! 5!) = 4/120
    assert lam.coefficient((1, 0, 5)) == RootTwoScalar(Fraction(1, 30))
    om = gf.omega_lhs(8, matrices)
    assert om.coefficient((0, 0, 0)).is_zero()
    assert om.coefficient((1, 0, 1)) == RootTwoScalar(1)  # f_2(2,3)


def test_series_symmetries(matrices):
    lam = gf.lambda_lhs(8, matrices)
    assert gf.swap_variables(lam, (0, 2, 1)) == lam
    om = gf.omega_lhs(8, matrices)
    assert gf.swap_variables(om, (2, 1, 0)) == om


def test_insufficient_matrices():
    few = delta_matrices(2)
    with pytest.raises(gf.InsufficientMatrices):
        gf.lambda_lhs(10, few)
    with pytest.raises(gf.InsufficientMatrices):
        gf.reindex_lambda(3, 8, few)


def test_reindex_lambda1_grid(matrices):
    grid = gf.reindex_lambda(1, 7, matrices)
    assert grid[0] == (1, 0, 0, 0, 0, 0, 0)
    assert grid[1] == (0, 1, 0, 1, 0, 4, 0)
    assert grid[2][:5] == (0, 0, 2, 0, 8)
    assert grid[3][:4] == (0, 1, 0, 10)
    # entries on even counter-diagonals are the triangle's row sums
    assert grid[5][1] == 4  # f_3(2, .)


def test_reindex_omega_grids(matrices):
    omega1 = gf.reindex_omega(1, 8, matrices)
    assert omega1[0] == (0,) * 8
    assert omega1[1][:7] == (1, 0, 1, 0, 4, 0, 34)
    omega0 = gf.reindex_omega(0, 8, matrices)
    assert all(v == 0 for row in omega0 for v in row)
    lambda0 = gf.reindex_lambda(0, 8, matrices)
    assert all(v == 0 for row in lambda0 for v in row)


@pytest.mark.parametrize("p", [0, 1, 2, 3, 4, 5])
def test_reindexed_grids_are_poupard(p, matrices):
    assert is_poupard_matrix(gf.reindex_lambda(p, 6, matrices)).ok
    assert is_poupard_matrix(gf.reindex_omega(p, 6, matrices)).ok


def test_transfer_relations(matrices):
    for p in range(1, 5):
        assert gf.boundary_relations_check(p, 6, matrices) == []
    # p=2, i=0: lambda^(2)[0,0] = lambda^(1)[0,1] = 0
    assert gf.lambda_entry(2, 0, 0, matrices) == gf.lambda_entry(1, 0, 1, matrices) == 0
    # p=2, i=1: lambda^(2)[1,1] = lambda^(1)[2,1] + lambda^(1)[1,2]
    assert gf.lambda_entry(2, 1, 1, matrices) == gf.lambda_entry(
        1, 2, 1, matrices
    ) + gf.lambda_entry(1, 1, 2, matrices)


def test_closed_forms_small_cap(matrices):
    assert gf.lambda1_closed_forms(8, matrices) == []


def test_grid_egf_spot_value(matrices):
    series = gf.lambda_grid_egf(1, 6, matrices)
    # coefficient of x^1 y^1 is lambda^(1)_{1,1} = f_2(4,2) = 1
    assert series.coefficient((1, 1, 0)) == RootTwoScalar(1)
