"""Seeded random graph generation for the verification suites.

Everything takes an explicit random.Random so runs are reproducible:
identical seed, identical stream of graphs.
"""

from __future__ import annotations

from random import Random

from .graphs import Graph, graph_from_edges
from .trees import RootedTree
from .unicyclic import UnicyclicDesc


def random_rooted_tree(rng: Random, order: int) -> RootedTree:
    """Random attachment tree: node i picks a uniform parent among 0..i-1."""
    if order < 1:
        raise ValueError(f"order must be >= 1, got {order}")
    children: list[list[int]] = [[] for _ in range(order)]
    for i in range(1, order):
        children[rng.randrange(i)].append(i)

    def build(v: int) -> RootedTree:
        return RootedTree(tuple(build(c) for c in children[v]))

    return build(0)


def random_unicyclic_desc(rng: Random, n: int, girth: int | None = None) -> UnicyclicDesc:
    if girth is None:
        girth = rng.randint(3, n)
    if not (3 <= girth <= n):
        raise ValueError(f"girth must lie in 3..{n}, got {girth}")
    orders = [1] * girth
    for _ in range(n - girth):
        orders[rng.randrange(girth)] += 1
    return UnicyclicDesc(tuple(random_rooted_tree(rng, k) for k in orders))


def random_unicyclic_graph(
    rng: Random, n: int, girth: int | None = None, min_girth: int = 3, max_girth: int | None = None
) -> Graph:
    """Random cycle length in [min_girth, max_girth] with random trees
    attached; labels follow the deterministic realization order."""
    from .unicyclic import realize_unicyclic

    if girth is None:
        hi = min(n, max_girth) if max_girth is not None else n
        if min_girth > hi:
            raise ValueError(f"no girth available in [{min_girth}, {hi}]")
        girth = rng.randint(min_girth, hi)
    return realize_unicyclic(random_unicyclic_desc(rng, n, girth))


def random_tree_graph(rng: Random, n: int) -> Graph:
    """Random attachment tree as a labeled graph."""
    if n < 1:
        raise ValueError(f"order must be >= 1, got {n}")
    edges = [(rng.randrange(i), i) for i in range(1, n)]
    return graph_from_edges(n, edges)


def random_connected_graph(rng: Random, n: int, extra_edges: int | None = None) -> Graph:
    """Random spanning tree plus a few random extra edges."""
    if n < 2:
        raise ValueError(f"order must be >= 2, got {n}")
    tree = random_tree_graph(rng, n)
    edges = set(tree.edges)
    if extra_edges is None:
        extra_edges = rng.randint(0, max(1, n // 3))
    candidates = [
        (u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in edges
    ]
    rng.shuffle(candidates)
    edges.update(candidates[:extra_edges])
    return graph_from_edges(n, sorted(edges))
