"""Simple undirected graphs, BFS metrics, structural predicates and the
bipartite double cover."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator

from .errors import BadParams, Disconnected, OutOfRange, SelfLoop
from .matrix import IntMatrix


@dataclass(frozen=True)
class Graph:
    """Finite simple undirected graph on vertices ``0..order-1``.

    ``adjacency[v]`` is the sorted tuple of neighbours of ``v``. Build
    instances through :func:`new_graph`, which enforces the invariants.
    """

    order: int
    adjacency: tuple[tuple[int, ...], ...]

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._neighbor_sets[u]

    @cached_property
    def _neighbor_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(nb) for nb in self.adjacency)

    def edges(self) -> list[tuple[int, int]]:
        """Canonical edge list: ``u < v``, lexicographic."""
        return [(u, v) for u in range(self.order) for v in self.adjacency[u] if u < v]

    @property
    def size(self) -> int:
        return sum(len(nb) for nb in self.adjacency) // 2

    def adjacency_matrix(self) -> IntMatrix:
        n = self.order
        rows = [[0] * n for _ in range(n)]
        for u, nb in enumerate(self.adjacency):
            for v in nb:
                rows[u][v] = 1
        return IntMatrix(rows)

    def regular_degree(self) -> int | None:
        degs = {len(nb) for nb in self.adjacency}
        return degs.pop() if len(degs) == 1 else None


def new_graph(order: int, edges: Iterable[tuple[int, int]]) -> Graph:
    if order < 1:
        raise BadParams(f"order must be positive, got {order}")
    nbrs: list[set[int]] = [set() for _ in range(order)]
    for u, v in edges:
        if not (0 <= u < order and 0 <= v < order):
            raise OutOfRange(f"edge ({u}, {v}) outside 0..{order - 1}")
        if u == v:
            raise SelfLoop(f"self loop at vertex {u}")
        nbrs[u].add(v)
        nbrs[v].add(u)
    return Graph(order, tuple(tuple(sorted(s)) for s in nbrs))


class DistanceMatrix(IntMatrix):
    """All-pairs shortest path distances of a connected graph."""

    __slots__ = ()

    def max_entry(self) -> int:
        return max(max(r) for r in self.rows)


def bfs_distances(g: Graph, source: int) -> list[int]:
    """Distances from ``source``; unreachable vertices get -1."""
    dist = [-1] * g.order
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in g.adjacency[u]:
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def connected_components(g: Graph) -> list[list[int]]:
    seen = [False] * g.order
    comps = []
    for s in range(g.order):
        if seen[s]:
            continue
        comp = [v for v, d in enumerate(bfs_distances(g, s)) if d >= 0]
        for v in comp:
            seen[v] = True
        comps.append(comp)
    return comps


def is_connected(g: Graph) -> bool:
    return min(bfs_distances(g, 0)) >= 0


def distance_matrix(g: Graph) -> DistanceMatrix:
    """BFS from every vertex. This is the metric oracle for all closed forms."""
    rows = []
    for s in range(g.order):
        row = bfs_distances(g, s)
        if min(row) < 0:
            raise Disconnected(f"vertex {row.index(-1)} unreachable from {s}")
        rows.append(row)
    return DistanceMatrix(rows)


def diameter(g: Graph) -> int:
    return distance_matrix(g).max_entry()


def is_bipartite(g: Graph) -> bool:
    color = [-1] * g.order
    for s in range(g.order):
        if color[s] >= 0:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if color[w] < 0:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return False
    return True


def common_neighbors(g: Graph, u: int, v: int) -> int:
    return len(g._neighbor_sets[u] & g._neighbor_sets[v])


def is_irreducible(g: Graph) -> bool:
    """True iff no two distinct vertices have identical neighbour sets."""
    return len(set(g.adjacency)) == g.order


def is_triangle_free(g: Graph) -> bool:
    sets = g._neighbor_sets
    return not any(sets[u] & sets[v] for u, v in g.edges())


def adjacent_pairs_share_neighbor(g: Graph) -> bool:
    sets = g._neighbor_sets
    return all(sets[u] & sets[v] for u, v in g.edges())


@dataclass(frozen=True)
class SrgParams:
    """Parameters ``(n, d, a, c)`` of a strongly regular graph."""

    n: int
    d: int
    a: int
    c: int

    def __post_init__(self) -> None:
        n, d, a, c = self.n, self.d, self.a, self.c
        if min(n, d, a, c) < 0:
            raise BadParams(f"negative parameter in {self.astuple()}")
        if not 0 < d < n:
            raise BadParams(f"need 0 < d < n, got {self.astuple()}")
        if a > d - 1 or c > d:
            raise BadParams(f"need a <= d-1 and c <= d, got {self.astuple()}")
        if d * (d - a - 1) != (n - 1 - d) * c:
            raise BadParams(f"counting identity d(d-a-1) = (n-1-d)c fails for {self.astuple()}")

    def astuple(self) -> tuple[int, int, int, int]:
        return (self.n, self.d, self.a, self.c)

    def __iter__(self) -> Iterator[int]:
        return iter(self.astuple())

    def __str__(self) -> str:
        return "({},{},{},{})".format(*self.astuple())


def is_strongly_regular(g: Graph) -> SrgParams | None:
    """Return ``(n, d, a, c)`` if ``g`` is strongly regular, else ``None``.

    Complete and disconnected graphs are never reported as strongly regular.
    """
    n = g.order
    d = g.regular_degree()
    if d is None or d == n - 1 or not is_connected(g):
        return None
    adj_counts = set()
    non_counts = set()
    for u, v in combinations(range(n), 2):
        k = common_neighbors(g, u, v)
        (adj_counts if g.has_edge(u, v) else non_counts).add(k)
        if len(adj_counts) > 1 or len(non_counts) > 1:
            return None
    a = adj_counts.pop() if adj_counts else 0
    c = non_counts.pop()
    return SrgParams(n, d, a, c)


def bipartite_double_cover(g: Graph) -> Graph:
    """``g x K2`` with vertex ``(v, i)`` encoded as ``v + i*n``.

    Under this encoding the adjacency matrix is literally ``[[O, A], [A, O]]``.
    """
    n = g.order
    edges = []
    for u, v in g.edges():
        edges.append((u, v + n))
        edges.append((v, u + n))
    return new_graph(2 * n, edges)
