"""Simple undirected graphs on vertices 0..n-1, plus the transforms used
throughout: pendant deletion, edge separation, and cycle extraction for
unicyclic graphs.

Graphs are immutable after construction; every operation returns a new
Graph. Vertex labels are always contiguous, and operations that remove a
vertex relabel the remainder to keep them contiguous.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph: vertex count plus a sorted edge tuple."""

    n: int
    edges: tuple[tuple[int, int], ...]

    @cached_property
    def neighbors(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    def degree(self, v: int) -> int:
        return len(self.neighbors[v])

    @property
    def m(self) -> int:
        return len(self.edges)

    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.neighbors)

    def has_edge(self, u: int, v: int) -> bool:
        if u > v:
            u, v = v, u
        return (u, v) in self._edge_set

    @cached_property
    def _edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.edges)


def graph_from_edges(n: int, edges) -> Graph:
    """Build a graph, rejecting anything that is not simple.

    Each failure mode gets its own diagnostic: endpoints out of range,
    self-loops, and duplicate edges.
    """
    if n < 0:
        raise ValueError(f"vertex count must be nonnegative, got {n}")
    seen: set[tuple[int, int]] = set()
    norm: list[tuple[int, int]] = []
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u},{v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise ValueError(f"self-loop at vertex {u} is not allowed")
        e = (u, v) if u < v else (v, u)
        if e in seen:
            raise ValueError(f"duplicate edge ({e[0]},{e[1]})")
        seen.add(e)
        norm.append(e)
    return Graph(n, tuple(sorted(norm)))


def cycle_graph(n: int) -> Graph:
    """The cycle on n >= 3 vertices, labeled 0..n-1 in cyclic order."""
    if n < 3:
        raise ValueError(f"cycle needs at least 3 vertices, got {n}")
    return graph_from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs at least one vertex")
    return graph_from_edges(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(n: int) -> Graph:
    """Star on n vertices with center 0."""
    if n < 1:
        raise ValueError("star needs at least one vertex")
    return graph_from_edges(n, [(0, i) for i in range(1, n)])


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return False
    seen = [False] * g.n
    stack = [0]
    seen[0] = True
    count = 1
    while stack:
        v = stack.pop()
        for u in g.neighbors[v]:
            if not seen[u]:
                seen[u] = True
                count += 1
                stack.append(u)
    return count == g.n


def is_unicyclic(g: Graph) -> bool:
    """Connected with exactly as many edges as vertices."""
    return g.m == g.n and is_connected(g)


def delete_pendant(g: Graph, v: int) -> Graph:
    """Remove a degree-1 vertex and relabel the rest contiguously."""
    if not (0 <= v < g.n):
        raise ValueError(f"vertex {v} out of range")
    if g.degree(v) != 1:
        raise ValueError(f"vertex {v} has degree {g.degree(v)}, expected a pendant")
    relabel = [w if w < v else w - 1 for w in range(g.n)]
    edges = [
        (relabel[a], relabel[b]) for a, b in g.edges if a != v and b != v
    ]
    return graph_from_edges(g.n - 1, edges)


def separate_edge(g: Graph, u: int, v: int) -> Graph:
    """Contract the edge uv into one vertex and hang a new pendant off it.

    Duplicate adjacencies produced by the contraction are merged, so the
    result is always simple. For a cut edge this keeps the vertex count:
    one vertex is lost to the contraction and one gained as the pendant.
    """
    if not g.has_edge(u, v):
        raise ValueError(f"({u},{v}) is not an edge")
    hi, lo = (u, v) if u > v else (v, u)
    # Merge hi into lo, relabel above hi down by one; the merged vertex
    # keeps label lo and the new pendant takes the last label.
    def relabel(w: int) -> int:
        if w == hi:
            return lo
        return w if w < hi else w - 1

    edge_set: set[tuple[int, int]] = set()
    for a, b in g.edges:
        ra, rb = relabel(a), relabel(b)
        if ra == rb:
            continue
        edge_set.add((ra, rb) if ra < rb else (rb, ra))
    n_new = g.n - 1
    edge_set.add((relabel(lo), n_new))
    return graph_from_edges(n_new + 1, sorted(edge_set))


def girth_and_cycle(g: Graph) -> tuple[int, list[int]]:
    """The unique cycle of a unicyclic graph, found by stripping leaves.

    Returns (girth, cycle vertices) with the cycle listed in traversal
    order starting from its minimum-label vertex, stepping first to the
    smaller-labeled of its two cycle neighbors.
    """
    if g.m != g.n or not is_connected(g):
        raise ValueError(
            f"graph is not unicyclic (n={g.n}, m={g.m}, connected={is_connected(g)})"
        )
    deg = [g.degree(v) for v in range(g.n)]
    alive = [True] * g.n
    queue = [v for v in range(g.n) if deg[v] == 1]
    while queue:
        v = queue.pop()
        alive[v] = False
        for u in g.neighbors[v]:
            if alive[u]:
                deg[u] -= 1
                if deg[u] == 1:
                    queue.append(u)
    cycle_vertices = [v for v in range(g.n) if alive[v]]
    start = cycle_vertices[0]
    nbrs_on_cycle = [u for u in g.neighbors[start] if alive[u]]
    order = [start, min(nbrs_on_cycle)]
    while len(order) < len(cycle_vertices):
        prev, cur = order[-2], order[-1]
        nxt = next(u for u in g.neighbors[cur] if alive[u] and u != prev)
        order.append(nxt)
    return len(order), order


def parse_graph_text(text: str) -> Graph:
    """Read the plain edge-list format: first line "n m", then m lines "u v"."""
    lines = [ln for ln in (s.strip() for s in text.splitlines()) if ln]
    if not lines:
        raise ValueError("empty graph text")
    head = lines[0].split()
    if len(head) != 2:
        raise ValueError(f"header must be 'n m', got {lines[0]!r}")
    n, m = int(head[0]), int(head[1])
    if len(lines) - 1 != m:
        raise ValueError(f"expected {m} edge lines, got {len(lines) - 1}")
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ValueError(f"edge line must be 'u v', got {ln!r}")
        edges.append((int(parts[0]), int(parts[1])))
    return graph_from_edges(n, edges)


def format_graph_text(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"
