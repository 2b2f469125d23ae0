"""Bivariate difference-equation matrices M_n and their nine constructions.

Each M_n is a (2n)x(2n) nonnegative integer matrix f_n(m, k) (1-based, zero
diagonal, zero outside the grid) determined from M_{n-1} by recurrences

  R1:  f_n(m+2,k) - 2 f_n(m+1,k) + f_n(m,k)   + 2 f_{n-1}(m,k)   = 0  on L1
  R2:  f_n(m,k+2) - 2 f_n(m,k+1) + f_n(m,k)   + 2 f_{n-1}(m,k)   = 0  on U1
  R3:  f_n(m+2,k) - 2 f_n(m+1,k) + f_n(m,k)   + 2 f_{n-1}(m,k-2) = 0  on U2
  R4:  f_n(m,k+2) - 2 f_n(m,k+1) + f_n(m,k)   + 2 f_{n-1}(m-2,k) = 0  on L2

over the four index triangles

  L1 = {2 <= k+1 <= m <= 2n-2}      L2 = {4 <= k+3 <= m <= 2n}
  U1 = {2 <= m+1 <= k <= 2n-2}      U2 = {4 <= m+3 <= k <= 2n}

plus boundary data taken from the marginals of M_{n-1} (conditions I1-I4 on
the outermost rows/columns, or just the 2x2 SW / NE corners).  Nine catalog
strategies combine these; all are solved by one generic propagation engine
that repeatedly resolves any recurrence instance with a single unknown cell,
flagging under-determination (Unresolved) and contradictions (Inconsistent)
instead of trusting any particular fill order.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, FrozenSet, Iterator, List, Optional, Sequence, Tuple

Cell = Tuple[int, int]


class Unresolved(ValueError):
    """Constraint propagation reached a fixpoint with unknown cells left."""

    def __init__(self, n: int, cells: Sequence[Cell]):
        self.n = n
        self.cells = tuple(sorted(cells))
        super().__init__(f"M_{n}: {len(self.cells)} cells undetermined, e.g. {self.cells[:4]}")


class Inconsistent(ValueError):
    """Two derivations disagree, or a fully known instance is violated."""

    def __init__(self, n: int, detail: str):
        self.n = n
        super().__init__(f"M_{n}: {detail}")


@dataclass(frozen=True)
class DeltaMatrix:
    """(2n)x(2n) big-integer grid; rows[m-1][k-1] = f_n(m, k)."""

    n: int
    rows: Tuple[Tuple[int, ...], ...]

    def value(self, m: int, k: int) -> int:
        """f_n(m,k) with the zero convention outside [1,2n]^2."""
        if 1 <= m <= 2 * self.n and 1 <= k <= 2 * self.n:
            return self.rows[m - 1][k - 1]
        return 0

    def row_sum(self, m: int) -> int:
        return sum(self.rows[m - 1]) if 1 <= m <= 2 * self.n else 0

    def col_sum(self, k: int) -> int:
        if not 1 <= k <= 2 * self.n:
            return 0
        return sum(row[k - 1] for row in self.rows)

    def row_sums(self) -> Tuple[int, ...]:
        return tuple(sum(r) for r in self.rows)

    def col_sums(self) -> Tuple[int, ...]:
        return tuple(sum(r[j] for r in self.rows) for j in range(2 * self.n))

    def total(self) -> int:
        return sum(sum(r) for r in self.rows)

    # -- interchange formats -------------------------------------------

    def to_json(self) -> str:
        return json.dumps(
            {"n": self.n, "rows": [list(r) for r in self.rows]}, separators=(",", ":")
        )

    @staticmethod
    def from_json(text: str) -> "DeltaMatrix":
        data = json.loads(text)
        n = int(data["n"])
        rows = tuple(tuple(int(v) for v in row) for row in data["rows"])
        if len(rows) != 2 * n or any(len(r) != 2 * n for r in rows):
            raise ValueError(f"expected a {2*n}x{2*n} grid")
        return DeltaMatrix(n, rows)

    def to_csv(self) -> str:
        return "\n".join(",".join(str(v) for v in row) for row in self.rows)

    @staticmethod
    def from_csv(text: str, n: Optional[int] = None) -> "DeltaMatrix":
        rows = tuple(
            tuple(int(v) for v in line.split(",")) for line in text.strip().splitlines()
        )
        if n is None:
            n = len(rows) // 2
        if len(rows) != 2 * n or any(len(r) != 2 * n for r in rows):
            raise ValueError(f"expected a {2*n}x{2*n} grid")
        return DeltaMatrix(n, rows)

    def pretty(self) -> str:
        width = max(len(str(v)) for row in self.rows for v in row)
        return "\n".join(" ".join(str(v).rjust(width) for v in row) for row in self.rows)


# ---------------------------------------------------------------------------
# Regions and recurrence instances
# ---------------------------------------------------------------------------

REGION_TAGS = ("L1", "L2", "U1", "U2")


def in_region(tag: str, n: int, m: int, k: int) -> bool:
    if tag == "L1":
        return 2 <= k + 1 <= m <= 2 * n - 2
    if tag == "L2":
        return 4 <= k + 3 <= m <= 2 * n
    if tag == "U1":
        return 2 <= m + 1 <= k <= 2 * n - 2
    if tag == "U2":
        return 4 <= m + 3 <= k <= 2 * n
    raise ValueError(f"unknown region {tag!r}")


def region_cells(tag: str, n: int) -> Iterator[Cell]:
    for m in range(1, 2 * n + 1):
        for k in range(1, 2 * n + 1):
            if in_region(tag, n, m, k):
                yield (m, k)


#: recurrence tag -> (anchor region, vertical?, prev-matrix index shift)
_RECURRENCES: Dict[str, Tuple[str, bool, Tuple[int, int]]] = {
    "R1": ("L1", True, (0, 0)),
    "R2": ("U1", False, (0, 0)),
    "R3": ("U2", True, (0, -2)),
    "R4": ("L2", False, (-2, 0)),
}


@dataclass(frozen=True)
class Instance:
    """One recurrence instance: cells c0 - 2*c1 + c2 + const = 0."""

    tag: str
    cells: Tuple[Cell, Cell, Cell]
    const: int

    def residual(self, values: Dict[Cell, int]) -> int:
        c0, c1, c2 = self.cells
        return values[c0] - 2 * values[c1] + values[c2] + self.const


def recurrence_instances(
    n: int, prev: Optional[DeltaMatrix], recurrences: FrozenSet[str]
) -> List[Instance]:
    out: List[Instance] = []
    for tag in sorted(recurrences):
        region, vertical, (dm, dk) = _RECURRENCES[tag]
        for (m, k) in region_cells(region, n):
            if vertical:
                cells = ((m, k), (m + 1, k), (m + 2, k))
            else:
                cells = ((m, k), (m, k + 1), (m, k + 2))
            const = 2 * prev.value(m + dm, k + dk) if prev is not None else 0
            out.append(Instance(tag, cells, const))
    return out


# ---------------------------------------------------------------------------
# Boundary conditions
# ---------------------------------------------------------------------------

BOUNDARY_TAGS = ("I1", "I2", "I3", "I4", "SW", "NE")


def _marginal_row(prev: DeltaMatrix, width: int) -> List[int]:
    # f_{n-1}(1,.), ..., f_{n-1}(2n-2,.), 0, 0 padded to 2n entries
    sums = list(prev.row_sums())
    return sums + [0] * (width - len(sums))


def boundary_cells(tag: str, n: int, prev: DeltaMatrix) -> Dict[Cell, int]:
    """Known-cell assignments contributed by one boundary condition."""
    w = 2 * n
    rs = prev.row_sums()  # f_{n-1}(m, .), m = 1..2n-2
    cs = prev.col_sums()  # f_{n-1}(., k), k = 1..2n-2
    out: Dict[Cell, int] = {}
    if tag == "I1":
        col = _marginal_row(prev, w)
        for m in range(1, w + 1):
            out[(m, w)] = 0
            out[(m, w - 1)] = col[m - 1]
    elif tag == "I2":
        row = _marginal_row(prev, w)
        for k in range(1, w + 1):
            out[(w, k)] = row[k - 1]
            out[(w - 1, k)] = (
                rs[k - 1] + cs[k - 1] if k <= len(rs) else 0
            )
    elif tag == "I3":
        for k in range(1, w + 1):
            out[(1, k)] = 0
            # row 2 reads 0, f_{n-1}(1,.), f_{n-1}(2,.), ..., zero-padded
            out[(2, k)] = rs[k - 2] if 2 <= k <= len(rs) + 1 else 0
    elif tag == "I4":
        for m in range(1, w + 1):
            out[(m, 1)] = rs[m - 2] if 2 <= m <= len(rs) + 1 else 0
            if m <= 2:
                out[(m, 2)] = 0
            elif m <= w - 1:
                out[(m, 2)] = rs[m - 2] + rs[m - 3]
            else:
                out[(m, 2)] = rs[w - 3]  # f_{n-1}(2n-2, .)
    elif tag == "SW":
        out[(w - 1, 1)] = cs[0]
        out[(w - 1, 2)] = rs[1] + cs[1]
        out[(w, 1)] = 0
        out[(w, 2)] = cs[0]
    elif tag == "NE":
        out[(1, w - 1)] = 0
        out[(1, w)] = 0
        out[(2, w - 1)] = rs[1]
        out[(2, w)] = 0
    else:
        raise ValueError(f"unknown boundary condition {tag!r}")
    return out


@dataclass(frozen=True)
class BuildStrategy:
    tag: str
    recurrences: FrozenSet[str]
    boundary: FrozenSet[str]


def _strategy(tag: str, recs: str, bounds: str) -> BuildStrategy:
    return BuildStrategy(tag, frozenset(recs.split()), frozenset(bounds.split()))


#: The nine equivalent construction schemes.  D5's corner condition needs the
#: first two rows alongside it (the upper triangle is otherwise untouched by
#: R1/R3/R4 and the corner alone pins too few cells).
STRATEGIES: Dict[str, BuildStrategy] = {
    s.tag: s
    for s in (
        _strategy("D1", "R1 R2", "I1 I2"),
        _strategy("D2", "R3 R4", "I3 I4"),
        _strategy("D3", "R1 R3", "I2 I3"),
        _strategy("D4", "R2 R4", "I1 I4"),
        _strategy("D5", "R1 R3 R4", "SW I3"),
        _strategy("D6", "R1 R2 R4", "SW I1"),
        _strategy("D7", "R1 R2 R3", "NE I2"),
        _strategy("D8", "R2 R3 R4", "NE I4"),
        _strategy("D9", "R1 R2 R3 R4", "SW NE"),
    )
}

M1 = DeltaMatrix(1, ((0, 0), (1, 0)))


# ---------------------------------------------------------------------------
# Generic propagation solver
# ---------------------------------------------------------------------------


def solve_constraints(
    n: int,
    known,
    recurrences: FrozenSet[str] | Sequence[str],
    prev: Optional[DeltaMatrix],
) -> DeltaMatrix:
    """Determine M_n from known-cell assignments plus recurrence instances.

    `known` is a mapping or an iterable of ((m, k), value) pairs; duplicate
    assignments with different values raise Inconsistent.  Propagation
    repeatedly solves any instance with exactly one unknown cell until a
    fixpoint.  Raises Unresolved if cells remain unknown, Inconsistent if a
    fully determined instance has nonzero residual.
    """
    w = 2 * n
    pairs = known.items() if hasattr(known, "items") else known
    values: Dict[Cell, int] = {}
    for cell, v in pairs:
        m, k = cell
        if not (1 <= m <= w and 1 <= k <= w):
            raise ValueError(f"known cell {cell} outside the {w}x{w} grid")
        if cell in values and values[cell] != v:
            raise Inconsistent(n, f"conflicting known values at {cell}: {values[cell]} vs {v}")
        values[cell] = v

    instances = recurrence_instances(n, prev, frozenset(recurrences))

    def unknowns(inst: Instance) -> List[Cell]:
        return [c for c in inst.cells if c not in values]

    pending = list(range(len(instances)))
    while pending:
        progressed = []
        stuck = []
        for idx in pending:
            inst = instances[idx]
            missing = unknowns(inst)
            if not missing:
                r = inst.residual(values)
                if r != 0:
                    raise Inconsistent(
                        n, f"{inst.tag} instance at cells {inst.cells} has residual {r}"
                    )
                continue
            if len(missing) > 1:
                stuck.append(idx)
                continue
            cell = missing[0]
            c0, c1, c2 = inst.cells
            if cell == c0:
                v = 2 * values[c1] - values[c2] - inst.const
            elif cell == c1:
                # 2*c1 = c0 + c2 + const; the division must be exact
                num = values[c0] + values[c2] + inst.const
                if num % 2 != 0:
                    raise Inconsistent(n, f"odd middle value in {inst.tag} at {inst.cells}")
                v = num // 2
            else:
                v = 2 * values[c1] - values[c0] - inst.const
            values[cell] = v
            progressed.append(idx)  # re-check residual next round
        if not progressed:
            break
        pending = stuck + progressed

    missing_cells = [
        (m, k) for m in range(1, w + 1) for k in range(1, w + 1) if (m, k) not in values
    ]
    if missing_cells:
        raise Unresolved(n, missing_cells)

    # final full consistency sweep
    for inst in instances:
        r = inst.residual(values)
        if r != 0:
            raise Inconsistent(n, f"{inst.tag} instance at cells {inst.cells} has residual {r}")

    rows = tuple(tuple(values[(m, k)] for k in range(1, w + 1)) for m in range(1, w + 1))
    return DeltaMatrix(n, rows)


def _known_for(strategy: BuildStrategy, n: int, prev: DeltaMatrix) -> Dict[Cell, int]:
    known: Dict[Cell, int] = {(i, i): 0 for i in range(1, 2 * n + 1)}
    for tag in sorted(strategy.boundary):
        for cell, v in boundary_cells(tag, n, prev).items():
            if cell in known and known[cell] != v:
                raise Inconsistent(
                    n, f"boundary conditions disagree at {cell}: {known[cell]} vs {v}"
                )
            known[cell] = v
    return known


@lru_cache(maxsize=None)
def _build_chain(n: int, tag: str) -> DeltaMatrix:
    if n == 1:
        return M1
    strategy = STRATEGIES[tag]
    prev = _build_chain(n - 1, tag)
    known = _known_for(strategy, n, prev)
    return solve_constraints(n, known, strategy.recurrences, prev)


def build_matrix(n: int, strategy: BuildStrategy | str = "D1") -> DeltaMatrix:
    """Build M_n under one of the nine catalog strategies (M_1 is fixed)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    tag = strategy if isinstance(strategy, str) else strategy.tag
    tag = tag.upper()
    if tag not in STRATEGIES:
        raise ValueError(f"unknown strategy {tag!r}; expected D1..D9")
    return _build_chain(n, tag)


def delta_matrices(n_max: int, strategy: BuildStrategy | str = "D1") -> List[DeltaMatrix]:
    """[M_1, ..., M_{n_max}] under one strategy."""
    return [build_matrix(n, strategy) for n in range(1, n_max + 1)]


# ---------------------------------------------------------------------------
# Matrix-level identities
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PropertyReport:
    """Outcome of the per-matrix identity checks; first failure wins."""

    n: int
    ok: bool
    failures: Tuple[str, ...]


def matrix_properties_check(
    mat: DeltaMatrix, prev: Optional[DeltaMatrix], triangle_row: Optional[Sequence[int]] = None
) -> PropertyReport:
    """Check the counter-diagonal symmetry, the sub/super-diagonal equality,
    the crossing equalities, and (given M_{n-1}) the marginal difference
    equations; optionally pin marginals against a 1-D triangle row."""
    n = mat.n
    w = 2 * n
    failures: List[str] = []

    def f(m, k):
        return mat.value(m, k)

    for m in range(1, w + 1):
        for k in range(1, w + 1):
            if f(m, k) != f(w + 1 - k, w + 1 - m):
                failures.append(
                    f"counter-diagonal symmetry fails at (m,k)=({m},{k}): "
                    f"{f(m,k)} != {f(w+1-k,w+1-m)}"
                )
                break
        if failures:
            break

    if n >= 2:
        for k in range(1, w):
            if f(k + 1, k) != f(k, k + 1):
                failures.append(
                    f"sub/super diagonal equality fails at k={k}: "
                    f"{f(k+1,k)} != {f(k,k+1)}"
                )
                break
        for k in range(2, w):
            s1 = f(k + 1, k - 1) + f(k - 1, k + 1)
            s2 = f(k + 1, k) + f(k - 1, k)
            s3 = f(k, k + 1) + f(k, k - 1)
            if not (s1 == s2 == s3):
                failures.append(f"crossing equality fails at k={k}: {s1}, {s2}, {s3}")
                break

    if prev is not None:
        if prev.n != n - 1:
            raise ValueError(f"prev must be M_{n-1}, got M_{prev.n}")
        for m in range(1, w):
            lhs = mat.row_sum(m + 2) - 2 * mat.row_sum(m + 1) + mat.row_sum(m)
            if lhs + 2 * prev.row_sum(m) != 0:
                failures.append(f"row-marginal difference equation fails at m={m}")
                break
        for k in range(0, w - 1):
            lhs = mat.col_sum(k + 2) - 2 * mat.col_sum(k + 1) + mat.col_sum(k)
            if lhs + 2 * prev.col_sum(k) != 0:
                failures.append(f"column-marginal difference equation fails at k={k}")
                break

    # marginals against the 1-D triangle: row sums align at the same index,
    # column sums at index k+1 (the verified alignment).
    if triangle_row is not None:
        tri = list(triangle_row)  # entries f_n(1..2n+1)
        for m in range(1, w + 1):
            if mat.row_sum(m) != tri[m - 1]:
                failures.append(f"row marginal != triangle at m={m}")
                break
        for k in range(1, w + 1):
            if mat.col_sum(k) != tri[k]:
                failures.append(f"column marginal != triangle at k={k} (index k+1)")
                break

    # the marginal equidistribution: #(eoc = k+1) = #(pom = k)
    for k in range(1, w + 1):
        lhs = mat.row_sum(k + 1) if k + 1 <= w else 0
        if lhs != mat.col_sum(k):
            failures.append(f"eoc/pom marginal equality fails at k={k}")
            break

    return PropertyReport(n, not failures, tuple(failures))


def eoc_pom_polynomial(mat: DeltaMatrix) -> Tuple[Tuple[int, ...], ...]:
    """Coefficient grid g_n(m,k) = f_n(m, 2n+1-k) of the symmetric joint
    generating polynomial (the pom axis reversed); asserts g = g^T."""
    n = mat.n
    w = 2 * n
    g = tuple(
        tuple(mat.value(m, w + 1 - k) for k in range(1, w + 1)) for m in range(1, w + 1)
    )
    for m in range(w):
        for k in range(w):
            if g[m][k] != g[k][m]:
                raise AssertionError(
                    f"joint generating polynomial not symmetric at ({m+1},{k+1})"
                )
    return g
