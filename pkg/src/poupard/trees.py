"""Strictly ordered binary trees and their eoc / pom statistics.

A tree lives on labels 1..2n+1: the root is 1, every node has 0 or 2
(unordered) children, and labels increase along every root-to-node path.
Such a tree has n interior nodes and n+1 leaves.

Statistics (defined for n >= 1):

  eoc   end of the minimal chain: start at the root and repeatedly descend
        to the minimum-labeled child; eoc is the leaf where that stops.
  pom   label of the parent of the maximum node 2n+1.

Enumeration is streaming and deterministic: a tree on a sorted label set S is
the root min(S) plus an unordered pair of subtrees on an odd-sized partition
of S minus the root; double counting is avoided by forcing the block that
contains the smallest remaining label to come first.  Blocks are visited by
ascending first-block size, then lexicographically, and the first subtree
varies slowest, so output order is reproducible across runs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Dict, Iterator, List, Optional, Tuple

from .triangle import tangent_numbers

# Largest shape size kept in the memo table; bigger sizes stream recursively.
_MEMO_MAX_SIZE = 11

# joint_distribution / census_tables refuse larger n unless forced: the sets
# T_{2n+1} grow like tangent numbers (n=7 already has ~14.9 million trees).
DEFAULT_ENUMERATION_LIMIT = 7


class EnumerationLimitError(ValueError):
    """Raised when an enumeration-backed operation exceeds the size bound."""


class StatisticUndefined(ValueError):
    """Raised for eoc/pom/bijection on the single-node tree (n = 0)."""


@dataclass
class Tree:
    """A strictly ordered binary tree on 2n+1 labels.

    `children` maps each interior label to its (smaller, larger) child pair.
    """

    n: int
    children: Dict[int, Tuple[int, int]]
    _parents: Optional[Dict[int, int]] = field(default=None, repr=False, compare=False)

    def size(self) -> int:
        return 2 * self.n + 1

    def parents(self) -> Dict[int, int]:
        if self._parents is None:
            par: Dict[int, int] = {}
            for p, (a, b) in self.children.items():
                par[a] = p
                par[b] = p
            self._parents = par
        return self._parents

    def is_leaf(self, label: int) -> bool:
        return label not in self.children

    def validate(self) -> None:
        """Check every axiom; raises ValueError on the first violation."""
        size = self.size()
        labels = set(range(1, size + 1))
        seen_children = []
        for p, pair in self.children.items():
            if p not in labels:
                raise ValueError(f"parent {p} out of range")
            if len(pair) != 2 or pair[0] >= pair[1]:
                raise ValueError(f"child pair of {p} not sorted: {pair}")
            for c in pair:
                if c not in labels:
                    raise ValueError(f"child {c} out of range")
                if c <= p:
                    raise ValueError(f"label order violated on edge {p}->{c}")
                seen_children.append(c)
        if len(seen_children) != len(set(seen_children)):
            raise ValueError("a node has two parents")
        if 1 in seen_children:
            raise ValueError("root has a parent")
        if set(seen_children) != labels - {1}:
            raise ValueError("nodes are not connected to the root")
        if len(self.children) != self.n:
            raise ValueError(f"expected {self.n} interior nodes")
        # connectivity: walk up from every node to the root
        par = self.parents()
        for v in labels - {1}:
            hops = 0
            w = v
            while w != 1:
                w = par[w]
                hops += 1
                if hops > size:
                    raise ValueError("parent chain does not reach the root")

    # -- serialization -------------------------------------------------

    def serialize(self) -> str:
        """Canonical text form `n=<n>; p:(a,b); ...`, parents ascending."""
        parts = [f"n={self.n}"]
        for p in sorted(self.children):
            a, b = self.children[p]
            parts.append(f"{p}:({a},{b})")
        return "; ".join(parts)

    @staticmethod
    def deserialize(text: str) -> "Tree":
        parts = [p.strip() for p in text.split(";") if p.strip()]
        if not parts or not parts[0].startswith("n="):
            raise ValueError(f"malformed tree text: {text!r}")
        n = int(parts[0][2:])
        children: Dict[int, Tuple[int, int]] = {}
        for item in parts[1:]:
            head, _, tail = item.partition(":")
            a, b = tail.strip().lstrip("(").rstrip(")").split(",")
            ca, cb = int(a), int(b)
            children[int(head)] = (min(ca, cb), max(ca, cb))
        return Tree(n=n, children=children)

    def in_subtree(self, label: int, root: int) -> bool:
        """True iff `label` lies in the subtree rooted at `root`."""
        par = self.parents()
        w = label
        while True:
            if w == root:
                return True
            if w == 1:
                return False
            w = par[w]


# ---------------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------------
#
# A "shape" is a tuple of (parent, childA, childB) position triples over
# 0..size-1, positions ordered like the labels they will receive.


def _compose(b1: Tuple[int, ...], b2: Tuple[int, ...], sh1, sh2):
    out = [(0, b1[0], b2[0])]
    out.extend((b1[p], b1[a], b1[b]) for (p, a, b) in sh1)
    out.extend((b2[p], b2[a], b2[b]) for (p, a, b) in sh2)
    return tuple(out)


def _splits(size: int) -> Iterator[Tuple[Tuple[int, ...], Tuple[int, ...]]]:
    """Odd-sized partitions (b1, b2) of positions 1..size-1 with 1 in b1,
    by ascending |b1| then lexicographic b1."""
    rest = tuple(range(1, size))
    others = rest[1:]
    for s in range(1, size - 1, 2):
        for extra in combinations(others, s - 1):
            b1 = (1,) + extra
            chosen = set(extra)
            b2 = tuple(p for p in others if p not in chosen)
            yield b1, b2


@lru_cache(maxsize=None)
def _shapes(size: int) -> Tuple[tuple, ...]:
    if size == 1:
        return ((),)
    out = []
    for b1, b2 in _splits(size):
        for sh1 in _shapes(len(b1)):
            for sh2 in _shapes(len(b2)):
                out.append(_compose(b1, b2, sh1, sh2))
    return tuple(out)


def _iter_shapes(size: int) -> Iterator[tuple]:
    if size <= _MEMO_MAX_SIZE:
        yield from _shapes(size)
        return
    for b1, b2 in _splits(size):
        for sh1 in _iter_shapes(len(b1)):
            for sh2 in _iter_shapes(len(b2)):
                yield _compose(b1, b2, sh1, sh2)


def enumerate_trees(n: int) -> Iterator[Tree]:
    """Yield every strictly ordered binary tree on 2n+1 nodes exactly once."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    for shape in _iter_shapes(2 * n + 1):
        children = {p + 1: (a + 1, b + 1) for (p, a, b) in shape}
        yield Tree(n=n, children=children)


def tree_count(n: int) -> int:
    """|T_{2n+1}| = T_{2n+1} / 2^n, computed without enumeration."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    t = tangent_numbers(n + 1)[n]
    q, r = divmod(t, 2**n)
    assert r == 0, "tangent number not divisible by 2^n"
    return q


# ---------------------------------------------------------------------------
# Statistics
# ---------------------------------------------------------------------------


def minimal_chain(t: Tree) -> List[int]:
    """Root-to-leaf path taking the minimum-labeled child at each step."""
    chain = [1]
    node = 1
    while node in t.children:
        node = min(t.children[node])
        chain.append(node)
    return chain


def eoc(t: Tree) -> int:
    """End of the minimal chain; defined for n >= 1 and lies in [2, 2n]."""
    if t.n == 0:
        raise StatisticUndefined("eoc is undefined on the single-node tree")
    return minimal_chain(t)[-1]


def pom(t: Tree) -> int:
    """Parent of the maximum leaf 2n+1; defined for n >= 1, in [1, 2n-1]."""
    if t.n == 0:
        raise StatisticUndefined("pom is undefined on the single-node tree")
    return t.parents()[2 * t.n + 1]


@dataclass(frozen=True)
class TreeStats:
    """Both statistics of one tree together with its minimal chain."""

    eoc: int
    pom: int
    chain: Tuple[int, ...]


def tree_stats(t: Tree) -> TreeStats:
    chain = minimal_chain(t)
    return TreeStats(eoc=eoc(t), pom=pom(t), chain=tuple(chain))


def ha12_map(t: Tree) -> Tree:
    """The chain-shift bijection with eoc(t) = pom(ha12_map(t)) + 1.

    With minimal chain a_1 < ... < a_j: chain node a_i is relabeled
    a_{i+1} - 1, the final a_j becomes 2n+1, and every non-chain label a
    becomes a - 1.
    """
    if t.n == 0:
        raise StatisticUndefined("bijection undefined on the single-node tree")
    chain = minimal_chain(t)
    relabel = {a: chain[i + 1] - 1 for i, a in enumerate(chain[:-1])}
    relabel[chain[-1]] = 2 * t.n + 1
    chain_set = set(chain)
    for v in range(1, 2 * t.n + 2):
        if v not in chain_set:
            relabel[v] = v - 1
    children = {}
    for p, (a, b) in t.children.items():
        ca, cb = relabel[a], relabel[b]
        children[relabel[p]] = (min(ca, cb), max(ca, cb))
    return Tree(n=t.n, children=children)


# ---------------------------------------------------------------------------
# Joint distribution and structural censuses
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CountMatrix:
    """(2n)x(2n) grid; entry (m, k), 1-based, counts trees with eoc=m, pom=k."""

    n: int
    counts: Tuple[Tuple[int, ...], ...]

    def value(self, m: int, k: int) -> int:
        if 1 <= m <= 2 * self.n and 1 <= k <= 2 * self.n:
            return self.counts[m - 1][k - 1]
        return 0

    def total(self) -> int:
        return sum(sum(row) for row in self.counts)


#: structural_census condition tags
R1_WITNESS = "R1Witness"
R2_WITNESS_OUTSIDE = "R2WitnessOutside"
R2_WITNESS_INSIDE = "R2WitnessInside"
_CONDITIONS = (R1_WITNESS, R2_WITNESS_OUTSIDE, R2_WITNESS_INSIDE)


@dataclass(frozen=True)
class CensusTables:
    """All enumeration-backed counters for one n, gathered in a single pass.

    joint[m][k]    #{eoc=m, pom=k}
    r1_witness     trees with eoc=m+1, pom=k where m is the parent of the
                   two *leaves* m+1 and m+2   (second term of the Delta_m^2
                   census identity)
    r2_outside     trees with eoc=m, pom=k+1 where k+2 is a leaf child of
                   k+1, itself a child of k, and m is outside the subtree
                   rooted at k
    r2_inside      trees with eoc=m, pom=k+1 where the two children of k are
                   k+1 and the *leaf* k+2, and m lies inside the subtree
                   rooted at k (necessarily under k+1's other child)
    """

    n: int
    joint: Tuple[Tuple[int, ...], ...]
    r1_witness: Tuple[Tuple[int, ...], ...]
    r2_outside: Tuple[Tuple[int, ...], ...]
    r2_inside: Tuple[Tuple[int, ...], ...]


def _accumulate_census(t: Tree, size: int, joint, r1w, r2o, r2i) -> None:
    children = t.children
    par = t.parents()
    e = 1
    while e in children:
        e = min(children[e])
    k_pom = par[size]
    joint[e - 1][k_pom - 1] += 1

    # R1 witness: m := eoc-1 is the parent of leaves m+1 = eoc and m+2.
    m = e - 1
    pair = children.get(m)
    if pair == (e, e + 1) and (e + 1) not in children:
        r1w[m - 1][k_pom - 1] += 1

    # R2 witnesses key on k := pom-1.
    k = k_pom - 1
    if k >= 1:
        kpair = children.get(k)
        if children.get(k + 1) == (k + 2, size) and (k + 2) not in children:
            if kpair is not None and (k + 1) in kpair:
                # chain k -- k+1 -- {k+2, 2n+1}; is eoc outside subtree(k)?
                w = e
                while w != 1 and w != k:
                    w = par[w]
                if w != k:
                    r2o[e - 1][k - 1] += 1
        if kpair == (k + 1, k + 2) and (k + 2) not in children:
            w = e
            while w != 1 and w != k:
                w = par[w]
            if w == k:
                r2i[e - 1][k - 1] += 1


@lru_cache(maxsize=4)
def census_tables(n: int, limit: int = DEFAULT_ENUMERATION_LIMIT) -> CensusTables:
    """Enumerate T_{2n+1} once, accumulating every per-(m,k) counter."""
    if n < 1:
        raise ValueError("census requires n >= 1")
    if n > limit:
        raise EnumerationLimitError(
            f"n={n} exceeds the enumeration bound {limit}; pass a larger limit"
        )
    size = 2 * n + 1
    w = 2 * n
    joint = [[0] * w for _ in range(w)]
    r1w = [[0] * w for _ in range(w)]
    r2o = [[0] * w for _ in range(w)]
    r2i = [[0] * w for _ in range(w)]
    for t in enumerate_trees(n):
        _accumulate_census(t, size, joint, r1w, r2o, r2i)
    freeze = lambda g: tuple(tuple(row) for row in g)
    return CensusTables(n, freeze(joint), freeze(r1w), freeze(r2o), freeze(r2i))


def joint_distribution(n: int, limit: int = DEFAULT_ENUMERATION_LIMIT) -> CountMatrix:
    """Exact joint (eoc, pom) counts on T_{2n+1} by full enumeration."""
    tables = census_tables(n, limit)
    return CountMatrix(n, tables.joint)


def structural_census(
    n: int, m: int, k: int, condition: str, limit: int = DEFAULT_ENUMERATION_LIMIT
) -> int:
    """Exact count of the structurally conditioned families used by the
    second-difference census identities; see CensusTables for definitions."""
    if condition not in _CONDITIONS:
        raise ValueError(f"unknown condition {condition!r}; expected one of {_CONDITIONS}")
    if n < 2:
        raise ValueError("structural census requires n >= 2")
    tables = census_tables(n, limit)
    grid = {
        R1_WITNESS: tables.r1_witness,
        R2_WITNESS_OUTSIDE: tables.r2_outside,
        R2_WITNESS_INSIDE: tables.r2_inside,
    }[condition]
    if 1 <= m <= 2 * n and 1 <= k <= 2 * n:
        return grid[m - 1][k - 1]
    return 0
