"""Unicyclic graphs as a cycle with rooted trees hung on its vertices.

The description (girth g, trees T_1..T_g in cyclic order) determines the
graph up to isomorphism; conversely every connected graph with |E| = |V|
decomposes this way uniquely up to rotating/reflecting the cycle.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, girth_and_cycle, graph_from_edges, is_connected
from .trees import RootedTree, star_tree


@dataclass(frozen=True)
class UnicyclicDesc:
    """g rooted trees in cyclic order; tree i is identified with cycle vertex i."""

    trees: tuple[RootedTree, ...]

    def __post_init__(self) -> None:
        if len(self.trees) < 3:
            raise ValueError(f"girth must be >= 3, got {len(self.trees)}")

    @property
    def girth(self) -> int:
        return len(self.trees)

    @property
    def order(self) -> int:
        return sum(t.order for t in self.trees)

    def encodings(self) -> tuple[str, ...]:
        return tuple(t.encoding for t in self.trees)


def dihedral_arrangements(items: tuple) -> list[tuple]:
    """All 2g rotations and reflections of a cyclic tuple."""
    g = len(items)
    out = []
    for r in range(g):
        rot = items[r:] + items[:r]
        out.append(rot)
        out.append(rot[::-1])
    return out


def normalize_desc(desc: UnicyclicDesc) -> UnicyclicDesc:
    """Canonical representative of the dihedral class of a description.

    Ties among rotations/reflections break by the lexicographically
    smallest tuple of subtree encodings; children inside each tree are
    put in canonical order as well.
    """
    trees = tuple(t.sorted_by_encoding() for t in desc.trees)
    best = min(dihedral_arrangements(trees), key=lambda arr: tuple(t.encoding for t in arr))
    return UnicyclicDesc(best)


def realize_unicyclic(desc: UnicyclicDesc) -> Graph:
    """Deterministic labeling: cycle takes 0..g-1, then each tree's
    non-root vertices follow depth-first per cycle vertex."""
    g = desc.girth
    edges: list[tuple[int, int]] = [(i, (i + 1) % g) for i in range(g)]
    next_label = g

    def attach(root_label: int, tree: RootedTree) -> None:
        nonlocal next_label
        for child in tree.children:
            lbl = next_label
            next_label += 1
            edges.append((root_label, lbl))
            attach(lbl, child)

    for i, tree in enumerate(desc.trees):
        attach(i, tree)
    return graph_from_edges(desc.order, edges)


def star_composition(g: int, sizes) -> Graph:
    """Cycle of length g with a star of order sizes[i] rooted at vertex i."""
    sizes = list(sizes)
    if g < 3:
        raise ValueError(f"girth must be >= 3, got {g}")
    if len(sizes) != g:
        raise ValueError(f"expected {g} star sizes, got {len(sizes)}")
    if any(s < 1 for s in sizes):
        raise ValueError(f"star sizes must be >= 1, got {sizes}")
    return realize_unicyclic(UnicyclicDesc(tuple(star_tree(s) for s in sizes)))


def cycle_with_pendant(cycle_len: int) -> Graph:
    """Cycle of the given length plus one pendant edge (order cycle_len + 1)."""
    trees = [star_tree(2)] + [star_tree(1)] * (cycle_len - 1)
    return realize_unicyclic(UnicyclicDesc(tuple(trees)))


def decompose_unicyclic(graph: Graph) -> UnicyclicDesc:
    """Inverse of realize_unicyclic up to dihedral symmetry of the cycle."""
    if graph.m != graph.n or not is_connected(graph):
        raise ValueError(
            f"graph is not unicyclic (n={graph.n}, m={graph.m})"
        )
    _, cycle = girth_and_cycle(graph)
    on_cycle = set(cycle)

    def grow(v: int, parent: int) -> RootedTree:
        kids = []
        for u in graph.neighbors[v]:
            if u == parent or u in on_cycle:
                continue
            kids.append(grow(u, v))
        kids.sort(key=lambda t: t.encoding)
        return RootedTree(tuple(kids))

    trees = tuple(grow(v, -1) for v in cycle)
    return normalize_desc(UnicyclicDesc(trees))
