"""Canonical labeling for small graphs.

Equitable degree-partition refinement plus backtracking over the
candidate orderings of the first non-singleton cell. Two graphs receive
the same label string iff they are isomorphic. Intended for the desk
scales used by enumeration (n <= 14); larger inputs are rejected.

The only performance trick is twin pruning: when branching inside a
cell, vertices with identical neighborhoods (after removing each other)
are interchangeable by an automorphism, so only one per twin class is
tried. Correctness does not depend on the pruning being complete.
"""

from __future__ import annotations

from .config import DEFAULT_ENUM_BOUND
from .graphs import Graph

Partition = list[tuple[int, ...]]


def _refine(neigh: list[set[int]], part: Partition) -> Partition:
    """Equitable refinement; new cells are ordered by their split keys so
    the result is independent of vertex labels."""
    part = list(part)
    changed = True
    while changed:
        changed = False
        cell_of = {}
        for idx, cell in enumerate(part):
            for v in cell:
                cell_of[v] = idx
        new_part: Partition = []
        for cell in part:
            if len(cell) == 1:
                new_part.append(cell)
                continue
            keys: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                counts = [0] * len(part)
                for u in neigh[v]:
                    counts[cell_of[u]] += 1
                keys.setdefault(tuple(counts), []).append(v)
            if len(keys) > 1:
                changed = True
            for key in sorted(keys):
                new_part.append(tuple(sorted(keys[key])))
        part = new_part
    return part


def _twin_classes(neigh: list[set[int]], cell: tuple[int, ...]) -> list[int]:
    """One representative per twin class inside the cell (u, v are twins
    when N(u) - {v} == N(v) - {u}; swapping them is an automorphism)."""
    reps: list[int] = []
    for v in cell:
        if not any(neigh[v] - {r} == neigh[r] - {v} for r in reps):
            reps.append(v)
    return reps


def _signature(g: Graph, order: list[int]) -> tuple:
    pos = {v: i for i, v in enumerate(order)}
    return tuple(sorted(tuple(sorted((pos[u], pos[v]))) for u, v in g.edges))


def canonical_form(g: Graph, bound: int = DEFAULT_ENUM_BOUND) -> str:
    """Label string shared exactly by isomorphic graphs (n <= bound)."""
    if g.n > bound:
        raise ValueError(f"canonical_form supports n <= {bound}, got n = {g.n}")
    if g.n == 0:
        return "0:"
    neigh = [set(a) for a in g.neighbors]
    degs = g.degrees()
    by_deg: dict[int, list[int]] = {}
    for v in range(g.n):
        by_deg.setdefault(degs[v], []).append(v)
    initial: Partition = [tuple(sorted(by_deg[d])) for d in sorted(by_deg)]

    best: list[tuple | None] = [None]

    def descend(part: Partition) -> None:
        part = _refine(neigh, part)
        branch_idx = next((i for i, c in enumerate(part) if len(c) > 1), None)
        if branch_idx is None:
            order = [c[0] for c in part]
            sig = _signature(g, order)
            if best[0] is None or sig < best[0]:
                best[0] = sig
            return
        cell = part[branch_idx]
        for v in _twin_classes(neigh, cell):
            rest = tuple(w for w in cell if w != v)
            descend(part[:branch_idx] + [(v,), rest] + part[branch_idx + 1 :])

    descend(initial)
    sig = best[0]
    assert sig is not None
    body = ",".join(f"{u}-{v}" for u, v in sig)
    return f"{g.n}:{body}"


def are_isomorphic(a: Graph, b: Graph, bound: int = DEFAULT_ENUM_BOUND) -> bool:
    if a.n != b.n or a.m != b.m:
        return False
    return canonical_form(a, bound) == canonical_form(b, bound)
