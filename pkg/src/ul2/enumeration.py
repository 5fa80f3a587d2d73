"""Exhaustive generation of small unicyclic graphs.

One representative per isomorphism class, produced by hanging every
multiset of rooted trees on every cycle length and deduplicating with
the canonical labeler. Also hosts the labeled brute-force counter used
to cross-check the class counts independently.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, combinations_with_replacement
from typing import Iterator

from .canon import canonical_form
from .config import DEFAULT_ENUM_BOUND
from .graphs import Graph, graph_from_edges
from .trees import RootedTree
from .unicyclic import UnicyclicDesc, dihedral_arrangements, realize_unicyclic


@lru_cache(maxsize=None)
def rooted_trees(order: int) -> tuple[RootedTree, ...]:
    """All non-isomorphic rooted trees of the given order."""
    if order < 1:
        raise ValueError(f"order must be >= 1, got {order}")
    if order == 1:
        return (RootedTree(),)
    out: list[RootedTree] = []
    seen: set[str] = set()
    for child_orders in _partitions(order - 1):
        for kids in _choose_children(child_orders):
            tree = RootedTree(tuple(sorted(kids, key=lambda t: t.encoding)))
            if tree.encoding not in seen:
                seen.add(tree.encoding)
                out.append(tree)
    return tuple(out)


def _partitions(total: int, cap: int | None = None) -> Iterator[tuple[int, ...]]:
    """Integer partitions of total, parts descending."""
    cap = total if cap is None else cap
    if total == 0:
        yield ()
        return
    for first in range(min(total, cap), 0, -1):
        for rest in _partitions(total - first, first):
            yield (first,) + rest


def _choose_children(child_orders: tuple[int, ...]) -> Iterator[list[RootedTree]]:
    """All multisets of child trees matching a partition of orders."""
    if not child_orders:
        yield []
        return
    size = child_orders[0]
    run = sum(1 for s in child_orders if s == size)
    rest_orders = child_orders[run:]
    pool = rooted_trees(size)
    for picked in combinations_with_replacement(pool, run):
        for rest in _choose_children(rest_orders):
            yield list(picked) + rest


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Ordered compositions of total into the given number of parts >= 1."""
    if parts == 1:
        yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def enumerate_unicyclic(
    n: int,
    girth: int | None = None,
    bound: int = DEFAULT_ENUM_BOUND,
) -> Iterator[Graph]:
    """One graph per isomorphism class of connected unicyclic graphs of
    order n (optionally restricted to one girth)."""
    if not (3 <= n <= bound):
        raise ValueError(f"order must lie in 3..{bound}, got {n}")
    if girth is not None and not (3 <= girth <= n):
        raise ValueError(f"girth must lie in 3..{n}, got {girth}")
    girths = [girth] if girth is not None else list(range(3, n + 1))
    seen: set[str] = set()
    for g in girths:
        for sizes in _compositions(n, g):
            for trees in _tree_tuples(sizes):
                if not _is_dihedral_min(trees):
                    continue
                graph = realize_unicyclic(UnicyclicDesc(trees))
                key = canonical_form(graph, bound)
                if key not in seen:
                    seen.add(key)
                    yield graph


def _tree_tuples(sizes: tuple[int, ...]) -> Iterator[tuple[RootedTree, ...]]:
    if not sizes:
        yield ()
        return
    for head in rooted_trees(sizes[0]):
        for rest in _tree_tuples(sizes[1:]):
            yield (head,) + rest


def _is_dihedral_min(trees: tuple[RootedTree, ...]) -> bool:
    enc = tuple(t.encoding for t in trees)
    return all(enc <= tuple(t.encoding for t in arr) for arr in dihedral_arrangements(trees))


def count_unicyclic_classes(n: int, girth: int | None = None, bound: int = DEFAULT_ENUM_BOUND) -> int:
    return sum(1 for _ in enumerate_unicyclic(n, girth, bound))


def labeled_unicyclic_class_counts(n: int, girth: int | None = None) -> dict[str, int]:
    """Brute force over all labeled n-vertex, n-edge graphs: keep the
    connected ones (optionally of one girth) and bucket by canonical
    form. Independent of the constructive enumeration above.
    """
    if n < 3:
        raise ValueError(f"order must be >= 3, got {n}")
    all_edges = [(u, v) for u in range(n) for v in range(u + 1, n)]
    buckets: dict[str, int] = {}
    for chosen in combinations(all_edges, n):
        if not _connected_edges(n, chosen):
            continue
        graph = graph_from_edges(n, chosen)
        if girth is not None:
            from .graphs import girth_and_cycle

            if girth_and_cycle(graph)[0] != girth:
                continue
        key = canonical_form(graph, max(n, DEFAULT_ENUM_BOUND))
        buckets[key] = buckets.get(key, 0) + 1
    return buckets


def _connected_edges(n: int, edges) -> bool:
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    comps = n
    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            comps -= 1
    return comps == 1
