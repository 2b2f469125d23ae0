"""Enumeration, statistics, and the chain-shift bijection."""

import pytest

from poupard.trees import (
    DEFAULT_ENUMERATION_LIMIT,
    EnumerationLimitError,
    StatisticUndefined,
    Tree,
    enumerate_trees,
    eoc,
    ha12_map,
    joint_distribution,
    minimal_chain,
    pom,
    tree_count,
    tree_stats,
)

# Worked pair: 1:{6,2} 2:{4,3} 4:{5,9} 3:{7,8} maps onto
# 1:{5,2} 2:{3,6} 3:{4,8} 6:{9,7} with eoc(t) = pom(t') + 1 = 7.
SOURCE_TREE = Tree(4, {1: (2, 6), 2: (3, 4), 3: (7, 8), 4: (5, 9)})
IMAGE_TREE = Tree(4, {1: (2, 5), 2: (3, 6), 3: (4, 8), 6: (7, 9)})

COUNTS = [1, 1, 4, 34, 496, 11056]  # |T_{2n+1}| for n = 0..5


def test_tree_count_values():
    for n, expected in enumerate(COUNTS):
        assert tree_count(n) == expected
    assert tree_count(6) == 349504


def test_enumeration_counts():
    for n in range(0, 5):
        assert sum(1 for _ in enumerate_trees(n)) == COUNTS[n]


def test_enumeration_yields_valid_distinct_trees():
    for n in range(0, 5):
        seen = set()
        for t in enumerate_trees(n):
            t.validate()
            s = t.serialize()
            assert s not in seen
            seen.add(s)


def test_n0_and_n1():
    (t0,) = list(enumerate_trees(0))
    assert t0.children == {}
    (t1,) = list(enumerate_trees(1))
    assert t1.children == {1: (2, 3)}


def test_enumeration_order_frozen():
    order = [t.serialize() for t in enumerate_trees(2)]
    assert order == [
        "n=2; 1:(2,3); 3:(4,5)",
        "n=2; 1:(2,5); 2:(3,4)",
        "n=2; 1:(2,4); 2:(3,5)",
        "n=2; 1:(2,3); 2:(4,5)",
    ]


def test_eoc_pom_examples():
    assert eoc(SOURCE_TREE) == 7
    assert pom(SOURCE_TREE) == 4
    assert pom(IMAGE_TREE) == 6
    t1 = Tree(1, {1: (2, 3)})
    assert eoc(t1) == 2 and pom(t1) == 1
    t = Tree(2, {1: (2, 3), 2: (4, 5)})
    assert eoc(t) == 4
    assert minimal_chain(SOURCE_TREE) == [1, 2, 3, 7]


def test_tree_stats_bundle():
    for n in range(1, 4):
        for t in enumerate_trees(n):
            stats = tree_stats(t)
            assert stats.chain[0] == 1
            assert stats.eoc == stats.chain[-1]
            assert t.is_leaf(stats.eoc)
            assert stats.pom == t.parents()[2 * n + 1]
            assert stats.eoc != stats.pom


def test_stats_reject_single_node_tree():
    t0 = Tree(0, {})
    with pytest.raises(StatisticUndefined):
        eoc(t0)
    with pytest.raises(StatisticUndefined):
        pom(t0)
    with pytest.raises(StatisticUndefined):
        ha12_map(t0)


def test_stat_ranges():
    for n in range(1, 5):
        for t in enumerate_trees(n):
            assert 2 <= eoc(t) <= 2 * n
            assert 1 <= pom(t) <= 2 * n - 1
            assert eoc(t) != pom(t)


def test_ha12_worked_pair():
    assert ha12_map(SOURCE_TREE) == IMAGE_TREE


def test_ha12_fixed_point_n1():
    t1 = Tree(1, {1: (2, 3)})
    assert ha12_map(t1) == t1


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_ha12_bijection_exhaustive(n):
    images = set()
    total = 0
    for t in enumerate_trees(n):
        image = ha12_map(t)
        image.validate()
        assert eoc(t) == pom(image) + 1
        images.add(image.serialize())
        total += 1
    assert len(images) == total == tree_count(n)


def test_serialization_roundtrip():
    for t in enumerate_trees(3):
        assert Tree.deserialize(t.serialize()) == t
    assert Tree.deserialize("n=0") == Tree(0, {})


def test_joint_distribution_small():
    d1 = joint_distribution(1)
    assert d1.counts == ((0, 0), (1, 0))
    d2 = joint_distribution(2)
    assert d2.counts == ((0, 0, 0, 0), (0, 0, 1, 0), (1, 1, 0, 0), (0, 1, 0, 0))
    d4 = joint_distribution(4)
    assert d4.total() == 496


def test_joint_distribution_structure():
    for n in (1, 2, 3):
        d = joint_distribution(n)
        w = 2 * n
        assert all(d.value(i, i) == 0 for i in range(1, w + 1))
        assert all(d.value(1, k) == 0 for k in range(1, w + 1))
        assert all(d.value(m, w) == 0 for m in range(1, w + 1))


def test_enumeration_limit_guard():
    with pytest.raises(EnumerationLimitError):
        joint_distribution(DEFAULT_ENUMERATION_LIMIT + 1)


def test_in_subtree():
    assert SOURCE_TREE.in_subtree(9, 4)
    assert SOURCE_TREE.in_subtree(7, 2)
    assert not SOURCE_TREE.in_subtree(6, 2)
    assert SOURCE_TREE.in_subtree(5, 1)
