"""Trigonometric generating functions for the lower and upper triangles.

The lower-triangle entries of the matrices M_n assemble into

  Lambda(x,y,z) = sum f_n(m,k) x^(m-k-1)/(m-k-1)! y^(k-1)/(k-1)! z^(2n-m)/(2n-m)!
                = (cos(sqrt2 x) + cos(sqrt2 y) cos(sqrt2 z)) / (2 cos^2((x+y+z)/sqrt2))

over 2 <= k+1 <= m <= 2n, and the upper-triangle entries into

  Omega(x,y,z) = sum f_n(m,k) x^(2n-k)/(2n-k)! y^(k-m-1)/(k-m-1)! z^(m-1)/(m-1)!
               = sin(sqrt2 x) sin(sqrt2 z) / (2 cos^2((x+y+z)/sqrt2)),

both truncated by total degree (a monomial from M_n has total degree 2n-2).
All right-hand sides live in Q(sqrt2); the sqrt2-parts must cancel, which is
asserted rather than assumed.

The same entries, reindexed, give infinite matrices lambda^(p), omega^(p)
(slice p collects the p-th diagonal layer of lower/upper triangles).  These
satisfy the four-term Poupard rule, fixed column/row transfer relations, and
closed-form bivariate generating functions, all checked here exactly.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Dict, List, Sequence, Tuple

from .delta import DeltaMatrix
from .scalars import HALF_SQRT2, SQRT2, ZERO, RootTwoScalar
from .series import LinearForm, Monomial, TriSeries, mul, reciprocal, trig_series

Grid = Tuple[Tuple[int, ...], ...]


class InsufficientMatrices(ValueError):
    """A required M_n is missing from the supplied list."""


def _lookup(matrices: Sequence[DeltaMatrix], n: int) -> DeltaMatrix:
    for mat in matrices:
        if mat.n == n:
            return mat
    raise InsufficientMatrices(f"M_{n} required but not supplied")


def _zero_rt() -> RootTwoScalar:
    return ZERO


# ---------------------------------------------------------------------------
# Linear forms used throughout
# ---------------------------------------------------------------------------

_R0 = RootTwoScalar(0)


def _form(cx, cy, cz) -> LinearForm:
    return LinearForm(cx, cy, cz)


FORM_S2X = _form(SQRT2, _R0, _R0)  # sqrt2 * x
FORM_S2Y = _form(_R0, SQRT2, _R0)
FORM_S2Z = _form(_R0, _R0, SQRT2)
FORM_XYZ_OVER_S2 = _form(HALF_SQRT2, HALF_SQRT2, HALF_SQRT2)  # (x+y+z)/sqrt2


def _den_2cos2_xyz(cap: int) -> TriSeries:
    c = trig_series("cos", FORM_XYZ_OVER_S2, cap)
    return (c * c).scale(2)


# ---------------------------------------------------------------------------
# Full trivariate series
# ---------------------------------------------------------------------------


def lambda_rhs(cap: int) -> TriSeries:
    """(cos(sqrt2 x) + cos(sqrt2 y) cos(sqrt2 z)) / (2 cos^2((x+y+z)/sqrt2))."""
    num = trig_series("cos", FORM_S2X, cap) + mul(
        trig_series("cos", FORM_S2Y, cap), trig_series("cos", FORM_S2Z, cap)
    )
    out = mul(num, reciprocal(_den_2cos2_xyz(cap)))
    assert out.is_rational(), "sqrt2-parts must cancel in the lower-triangle series"
    return out


def omega_rhs(cap: int) -> TriSeries:
    """sin(sqrt2 x) sin(sqrt2 z) / (2 cos^2((x+y+z)/sqrt2))."""
    num = mul(trig_series("sin", FORM_S2X, cap), trig_series("sin", FORM_S2Z, cap))
    out = mul(num, reciprocal(_den_2cos2_xyz(cap)))
    assert out.is_rational(), "sqrt2-parts must cancel in the upper-triangle series"
    return out


def required_matrix_count(cap: int) -> int:
    # a matrix M_n contributes monomials of total degree 2n-2
    return (cap + 2) // 2


def lambda_lhs(cap: int, matrices: Sequence[DeltaMatrix]) -> TriSeries:
    """Assemble the lower-triangle series directly from matrix entries."""
    coeffs: Dict[Monomial, RootTwoScalar] = {}
    for n in range(1, required_matrix_count(cap) + 1):
        mat = _lookup(matrices, n)
        if 2 * n - 2 > cap:
            continue
        for m in range(2, 2 * n + 1):
            for k in range(1, m):
                v = mat.value(m, k)
                if v == 0:
                    continue
                i, j, l = m - k - 1, k - 1, 2 * n - m
                q = Fraction(v, factorial(i) * factorial(j) * factorial(l))
                mono = (i, j, l)
                prev = coeffs.get(mono, _zero_rt())
                coeffs[mono] = prev + RootTwoScalar(q)
    return TriSeries(cap, coeffs)


def omega_lhs(cap: int, matrices: Sequence[DeltaMatrix]) -> TriSeries:
    """Assemble the upper-triangle series (column 2n is zero, so summing the
    full upper triangle matches the k <= 2n-1 statement)."""
    coeffs: Dict[Monomial, RootTwoScalar] = {}
    for n in range(1, required_matrix_count(cap) + 1):
        mat = _lookup(matrices, n)
        if 2 * n - 2 > cap:
            continue
        for m in range(1, 2 * n):
            for k in range(m + 1, 2 * n + 1):
                v = mat.value(m, k)
                if v == 0:
                    continue
                i, j, l = 2 * n - k, k - m - 1, m - 1
                q = Fraction(v, factorial(i) * factorial(j) * factorial(l))
                mono = (i, j, l)
                prev = coeffs.get(mono, _zero_rt())
                coeffs[mono] = prev + RootTwoScalar(q)
    return TriSeries(cap, coeffs)


def swap_variables(series: TriSeries, perm: Tuple[int, int, int]) -> TriSeries:
    """Permute exponent axes, e.g. perm=(0,2,1) swaps y and z."""
    out: Dict[Monomial, RootTwoScalar] = {}
    for mono, c in series.monomials():
        out[(mono[perm[0]], mono[perm[1]], mono[perm[2]])] = c
    return TriSeries(series.cap, out)


# ---------------------------------------------------------------------------
# Reindexed infinite matrices (finite truncations)
# ---------------------------------------------------------------------------


def lambda_entry(p: int, i: int, j: int, matrices: Sequence[DeltaMatrix]) -> int:
    """lambda^(p)_{i,j}: zero on one parity class, else a lower-triangle
    f_n(m,k) with k=j+1, m=i+j+2, 2n=p+i+j+1."""
    if (i + j) % 2 == p % 2:
        return 0
    two_n = p + i + j + 1
    return _lookup(matrices, two_n // 2).value(i + j + 2, j + 1)


def omega_entry(p: int, i: int, j: int, matrices: Sequence[DeltaMatrix]) -> int:
    """omega^(p)_{i,j}: zero off the parity class of p, else an upper-triangle
    f_n(m,k) with m=p+1, k=p+j+2, 2n=p+i+j+2."""
    if (i + j) % 2 != p % 2:
        return 0
    two_n = p + i + j + 2
    return _lookup(matrices, two_n // 2).value(p + 1, p + j + 2)


def reindex_lambda(p: int, size: int, matrices: Sequence[DeltaMatrix]) -> Grid:
    return tuple(
        tuple(lambda_entry(p, i, j, matrices) for j in range(size)) for i in range(size)
    )


def reindex_omega(p: int, size: int, matrices: Sequence[DeltaMatrix]) -> Grid:
    return tuple(
        tuple(omega_entry(p, i, j, matrices) for j in range(size)) for i in range(size)
    )


def boundary_relations_check(
    p: int, size: int, matrices: Sequence[DeltaMatrix]
) -> List[str]:
    """Column/row transfer relations tying lambda^(p) and omega^(p) back to
    the p=1 matrices; returns human-readable failure strings (empty = pass)."""
    failures = []
    if p < 1:
        raise ValueError("transfer relations need p >= 1")
    for i in range(size):
        lhs = lambda_entry(p, i, 0, matrices)
        rhs = lambda_entry(1, i, p - 1, matrices)
        if lhs != rhs:
            failures.append(f"lambda^{p}[{i},0]={lhs} != lambda^1[{i},{p-1}]={rhs}")
        lhs = lambda_entry(p, i, 1, matrices)
        rhs = lambda_entry(1, i + 1, p - 1, matrices) + lambda_entry(1, i, p, matrices)
        if lhs != rhs:
            failures.append(
                f"lambda^{p}[{i},1]={lhs} != lambda^1[{i+1},{p-1}]+lambda^1[{i},{p}]={rhs}"
            )
    for j in range(size):
        lhs = omega_entry(p, 1, j, matrices)
        rhs = omega_entry(1, p, j, matrices)
        if lhs != rhs:
            failures.append(f"omega^{p}[1,{j}]={lhs} != omega^1[{p},{j}]={rhs}")
    return failures


# ---------------------------------------------------------------------------
# Bivariate grid generating functions and closed forms
# ---------------------------------------------------------------------------


def lambda_grid_egf(p: int, cap: int, matrices: Sequence[DeltaMatrix]) -> TriSeries:
    """sum lambda^(p)_{i,j} x^i y^j / (i! j!) to total degree cap."""
    coeffs: Dict[Monomial, RootTwoScalar] = {}
    for i in range(cap + 1):
        for j in range(cap + 1 - i):
            v = lambda_entry(p, i, j, matrices)
            if v:
                coeffs[(i, j, 0)] = RootTwoScalar(
                    Fraction(v, factorial(i) * factorial(j))
                )
    return TriSeries(cap, coeffs)


def omega_grid_egf(p: int, cap: int, matrices: Sequence[DeltaMatrix]) -> TriSeries:
    coeffs: Dict[Monomial, RootTwoScalar] = {}
    for i in range(cap + 1):
        for j in range(cap + 1 - i):
            v = omega_entry(p, i, j, matrices)
            if v:
                coeffs[(i, j, 0)] = RootTwoScalar(
                    Fraction(v, factorial(i) * factorial(j))
                )
    return TriSeries(cap, coeffs)


def _lambda_column_at_xy(q: int, cap: int, matrices: Sequence[DeltaMatrix]) -> TriSeries:
    """Column-q exponential generating function of lambda^(1), composed at
    x+y: sum_i lambda^(1)_{i,q} (x+y)^i / i!."""
    coeffs: Dict[Monomial, RootTwoScalar] = {}
    for total in range(cap + 1):
        v = lambda_entry(1, total, q, matrices)
        if not v:
            continue
        for a in range(total + 1):
            b = total - a
            mono = (a, b, 0)
            add = RootTwoScalar(Fraction(v, factorial(a) * factorial(b)))
            prev = coeffs.get(mono, _zero_rt())
            coeffs[mono] = prev + add
    return TriSeries(cap, coeffs)


def _omega_row_at_xy(p: int, cap: int, matrices: Sequence[DeltaMatrix]) -> TriSeries:
    """Row-1 exponential generating function of omega^(p) composed at x+y."""
    coeffs: Dict[Monomial, RootTwoScalar] = {}
    for total in range(cap + 1):
        v = omega_entry(p, 1, total, matrices)
        if not v:
            continue
        for a in range(total + 1):
            b = total - a
            mono = (a, b, 0)
            add = RootTwoScalar(Fraction(v, factorial(a) * factorial(b)))
            prev = coeffs.get(mono, _zero_rt())
            coeffs[mono] = prev + add
    return TriSeries(cap, coeffs)


FORM_XY_OVER_S2 = _form(HALF_SQRT2, HALF_SQRT2, _R0)  # (x+y)/sqrt2
FORM_XmY_OVER_S2 = _form(HALF_SQRT2, -HALF_SQRT2, _R0)  # (x-y)/sqrt2
FORM_S2_XY = _form(SQRT2, SQRT2, _R0)  # sqrt2*(x+y)


def lambda1_closed_forms(cap: int, matrices: Sequence[DeltaMatrix]) -> List[str]:
    """Exact cross-checks of every bivariate closed form against the grids.

    Verified as series identities at the given cap:
      * cos((x-y)/sqrt2)/cos((x+y)/sqrt2), (sin sqrt2x + sin sqrt2y)/sin(sqrt2(x+y))
        (by cross-multiplication) and (cos sqrt2x + cos sqrt2y)/(2cos^2((x+y)/sqrt2))
        all equal the lambda^(1) grid generating function;
      * the grid function restricted to one variable is identically 1;
      * omega^(1) grid function equals sin(sqrt2 x)/(sqrt2 cos^2((x+y)/sqrt2));
      * the column/row composition formulas reproduce lambda^(p), omega^(p)
        grid functions for p <= 4.
    Returns failure descriptions; empty means all identities hold.
    """
    failures: List[str] = []
    grid1 = lambda_grid_egf(1, cap, matrices)

    cos_xy = trig_series("cos", FORM_XY_OVER_S2, cap)
    form_a = mul(trig_series("cos", FORM_XmY_OVER_S2, cap), reciprocal(cos_xy))
    if form_a != grid1:
        failures.append("cos-ratio closed form != lambda^(1) grid series")

    # sine form has a non-unit denominator: compare by cross-multiplication
    sin_sum = trig_series("sin", FORM_S2X, cap) + trig_series("sin", FORM_S2Y, cap)
    sin_xy = trig_series("sin", FORM_S2_XY, cap)
    if mul(grid1, sin_xy) != sin_sum:
        failures.append("sine-ratio closed form != lambda^(1) grid series")
    if mul(sin_sum, cos_xy) != mul(
        trig_series("cos", FORM_XmY_OVER_S2, cap), sin_xy
    ):
        failures.append("sine-ratio and cos-ratio closed forms disagree")

    cos_sum = trig_series("cos", FORM_S2X, cap) + trig_series("cos", FORM_S2Y, cap)
    den = (cos_xy * cos_xy).scale(2)
    form_c = mul(cos_sum, reciprocal(den))
    if form_c != grid1:
        failures.append("cosine-sum closed form != lambda^(1) grid series")

    one = TriSeries.constant(1, cap)
    x_only = TriSeries(cap, {m: c for m, c in grid1.monomials() if m[1] == 0})
    y_only = TriSeries(cap, {m: c for m, c in grid1.monomials() if m[0] == 0})
    if x_only != one or y_only != one:
        failures.append("lambda^(1)(x,0) or lambda^(1)(0,y) differs from 1")

    # omega^(1): sin(sqrt2 x) / (sqrt2 cos^2((x+y)/sqrt2))
    omega1 = omega_grid_egf(1, cap, matrices)
    om_closed = mul(
        trig_series("sin", FORM_S2X, cap),
        reciprocal((cos_xy * cos_xy).scale(SQRT2)),
    )
    if om_closed != omega1:
        failures.append("omega^(1) closed form != omega^(1) grid series")

    # column composition for lambda^(p), row composition for omega^(p)
    cos_s2y = trig_series("cos", FORM_S2Y, cap)
    sin_s2y_over = trig_series("sin", FORM_S2Y, cap).scale(HALF_SQRT2)
    sin_s2x_over = trig_series("sin", FORM_S2X, cap).scale(HALF_SQRT2)
    for p in range(1, 5):
        gridp = lambda_grid_egf(p, cap, matrices)
        composed = mul(_lambda_column_at_xy(p - 1, cap, matrices), cos_s2y) + mul(
            _lambda_column_at_xy(p, cap, matrices), sin_s2y_over
        )
        if composed != gridp:
            failures.append(f"column composition fails for lambda^({p})")
        ogridp = omega_grid_egf(p, cap, matrices)
        ocomposed = mul(sin_s2x_over, _omega_row_at_xy(p, cap, matrices))
        if ocomposed != ogridp:
            failures.append(f"row composition fails for omega^({p})")
    return failures
