"""Rooted trees and broom-shaped trees.

A rooted tree is a recursive bag of child subtrees. A broom is the
depth-<=2 rooted tree described by counts (l0, l1, ..., lt): the root has
l_i children that each carry exactly i pendant leaves.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property


@dataclass(frozen=True)
class RootedTree:
    children: tuple["RootedTree", ...] = ()

    @cached_property
    def order(self) -> int:
        return 1 + sum(c.order for c in self.children)

    @cached_property
    def depth(self) -> int:
        """Longest root-to-leaf path length (edges)."""
        if not self.children:
            return 0
        return 1 + max(c.depth for c in self.children)

    @cached_property
    def encoding(self) -> str:
        """Canonical nested-parentheses form; equal iff trees isomorphic."""
        return "(" + "".join(sorted(c.encoding for c in self.children)) + ")"

    def sorted_by_encoding(self) -> "RootedTree":
        """Same tree with children recursively in canonical order."""
        kids = tuple(
            sorted((c.sorted_by_encoding() for c in self.children), key=lambda t: t.encoding)
        )
        return RootedTree(kids)


LEAF = RootedTree()


def star_tree(order: int) -> RootedTree:
    """Star of the given order rooted at its center (max-degree vertex)."""
    if order < 1:
        raise ValueError(f"tree order must be >= 1, got {order}")
    return RootedTree(tuple(LEAF for _ in range(order - 1)))


def path_tree(order: int) -> RootedTree:
    """Path rooted at one end."""
    if order < 1:
        raise ValueError(f"tree order must be >= 1, got {order}")
    t = LEAF
    for _ in range(order - 1):
        t = RootedTree((t,))
    return t


@dataclass(frozen=True)
class BroomSpec:
    """Branch counts l[i] = number of root children carrying i leaves each."""

    counts: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(c < 0 for c in self.counts):
            raise ValueError(f"broom counts must be nonnegative, got {self.counts}")

    @property
    def order(self) -> int:
        """1 + sum (i+1) * l[i]."""
        return 1 + sum((i + 1) * c for i, c in enumerate(self.counts))

    def count(self, i: int) -> int:
        return self.counts[i] if i < len(self.counts) else 0


def broom_tree(spec: BroomSpec) -> RootedTree:
    """Realize a broom: root with l_i children holding i leaves each."""
    kids: list[RootedTree] = []
    for i, li in enumerate(spec.counts):
        branch = RootedTree(tuple(LEAF for _ in range(i)))
        kids.extend(branch for _ in range(li))
    return RootedTree(tuple(kids))


def broom_counts_from_tree(tree: RootedTree) -> tuple[int, ...] | None:
    """Inverse of broom_tree: branch counts, or None if depth exceeds 2.

    A bare root yields (). Trailing zero counts are trimmed so the result
    is canonical.
    """
    if tree.depth > 2:
        return None
    counts: list[int] = []
    for child in tree.children:
        if any(gc.children for gc in child.children):
            return None
        i = len(child.children)
        if i >= len(counts):
            counts.extend(0 for _ in range(i - len(counts) + 1))
        counts[i] += 1
    while counts and counts[-1] == 0:
        counts.pop()
    return tuple(counts)
