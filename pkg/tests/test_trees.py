import pytest

from ul2.trees import (
    BroomSpec,
    RootedTree,
    broom_counts_from_tree,
    broom_tree,
    path_tree,
    star_tree,
)


def test_star_tree():
    t = star_tree(5)
    assert t.order == 5 and t.depth == 1
    assert len(t.children) == 4
    assert star_tree(1).order == 1 and star_tree(1).depth == 0


def test_path_tree():
    t = path_tree(4)
    assert t.order == 4 and t.depth == 3


def test_encoding_identifies_isomorphic_trees():
    a = RootedTree((star_tree(2), star_tree(3)))
    b = RootedTree((star_tree(3), star_tree(2)))
    assert a.encoding == b.encoding
    assert a.encoding != RootedTree((star_tree(2), star_tree(2))).encoding


def test_broom_pendants_only():
    t = broom_tree(BroomSpec((3,)))
    assert t.encoding == star_tree(4).encoding


def test_broom_two_cherry_branches():
    spec = BroomSpec((0, 0, 2))
    assert spec.order == 7
    t = broom_tree(spec)
    assert t.order == 7 and t.depth == 2
    assert all(len(c.children) == 2 for c in t.children)


def test_broom_mixed():
    t = broom_tree(BroomSpec((1, 1)))
    assert t.order == 4
    kinds = sorted(len(c.children) for c in t.children)
    assert kinds == [0, 1]


def test_broom_rejects_negative():
    with pytest.raises(ValueError, match="nonnegative"):
        BroomSpec((1, -1))


def test_broom_counts_round_trip():
    for counts in [(), (3,), (0, 2), (1, 1, 2), (0, 0, 0, 2)]:
        assert broom_counts_from_tree(broom_tree(BroomSpec(counts))) == _trim(counts)


def _trim(counts):
    counts = list(counts)
    while counts and counts[-1] == 0:
        counts.pop()
    return tuple(counts)


def test_broom_counts_rejects_deep_tree():
    assert broom_counts_from_tree(path_tree(4)) is None
    deep = RootedTree((RootedTree((star_tree(2),)),))
    assert broom_counts_from_tree(deep) is None
