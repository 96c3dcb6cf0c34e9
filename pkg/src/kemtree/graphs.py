"""Graph and tree types with cached structural queries.

Vertices are dense 0-based integer labels, which keeps every matrix and
array operation O(1)-indexable. Both types are immutable once constructed
and safe to share read-only across threads.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Sequence

from .errors import DisconnectedError, NotATreeError, ParseError

Edge = tuple[int, int]
DistanceMatrix = tuple[tuple[int, ...], ...]


def _normalize(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class Graph:
    """Simple undirected graph on vertices 0..n-1 with sorted adjacency lists."""

    __slots__ = ("n", "edges", "adjacency")

    def __init__(self, n: int, edges: Iterable[Sequence[int]]) -> None:
        if n < 1:
            raise ValueError("vertex count must be positive")
        seen: set[Edge] = set()
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) outside vertex range 0..{n - 1}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            key = _normalize(u, v)
            if key in seen:
                raise ValueError(f"duplicate edge {key}")
            seen.add(key)
            adj[u].append(v)
            adj[v].append(u)
        self.n: int = n
        self.edges: tuple[Edge, ...] = tuple(sorted(seen))
        self.adjacency: tuple[tuple[int, ...], ...] = tuple(
            tuple(sorted(nb)) for nb in adj
        )

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(nb) for nb in self.adjacency)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def parse_edge_list(text: str) -> Graph:
    """Parse edge-list text into a validated Graph.

    Format: one edge per line as two nonnegative integers "u v", with an
    optional first significant line "n <count>" declaring the vertex count.
    Lines starting with '#' and blank lines are ignored. Without a header,
    the vertex count is inferred as 1 + the largest label seen.
    """
    declared: int | None = None
    header_allowed = True
    pairs: list[tuple[int, int, int]] = []
    seen: set[Edge] = set()
    max_label = -1
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if header_allowed and tokens[0] == "n":
            header_allowed = False
            if len(tokens) != 2:
                raise ParseError("header must be 'n <count>'", lineno)
            try:
                declared = int(tokens[1])
            except ValueError:
                raise ParseError(f"non-integer token {tokens[1]!r}", lineno) from None
            if declared < 1:
                raise ParseError("vertex count must be positive", lineno)
            continue
        header_allowed = False
        if len(tokens) != 2:
            raise ParseError(f"expected two labels, got {len(tokens)}", lineno)
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            bad = tokens[0] if not tokens[0].lstrip("-").isdigit() else tokens[1]
            raise ParseError(f"non-integer token {bad!r}", lineno) from None
        if u < 0 or v < 0:
            raise ParseError("labels must be nonnegative", lineno)
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", lineno)
        if declared is not None and (u >= declared or v >= declared):
            raise ParseError(
                f"label {max(u, v)} exceeds declared vertex count {declared}", lineno
            )
        key = _normalize(u, v)
        if key in seen:
            raise ParseError(f"duplicate edge {key}", lineno)
        seen.add(key)
        pairs.append((u, v, lineno))
        max_label = max(max_label, u, v)
    n = declared if declared is not None else max_label + 1
    if n < 1:
        raise ParseError("input declares no vertices", None)
    return Graph(n, [(u, v) for u, v, _ in pairs])


def bfs_distances(g: Graph, source: int) -> list[int]:
    """Hop distances from `source`; unreachable vertices are -1."""
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        dv = dist[v]
        for u in g.adjacency[v]:
            if dist[u] < 0:
                dist[u] = dv + 1
                queue.append(u)
    return dist


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    """BFS from every vertex; raises DisconnectedError naming one missing pair."""
    rows = []
    for s in range(g.n):
        row = bfs_distances(g, s)
        for v, d in enumerate(row):
            if d < 0:
                raise DisconnectedError(s, v)
        rows.append(tuple(row))
    return tuple(rows)


class Tree:
    """A Graph validated connected and acyclic, with cached metric data.

    Distances, eccentricities, diameter, radius, and the center set are
    computed eagerly at construction; every downstream invariant reads them.
    """

    __slots__ = ("graph", "dist", "eccentricities", "radius", "diameter", "center")

    def __init__(self, graph: Graph) -> None:
        n = graph.n
        if graph.m >= n:
            raise NotATreeError("cyclic")
        rows = []
        for s in range(n):
            row = bfs_distances(graph, s)
            if any(d < 0 for d in row):
                raise NotATreeError("disconnected")
            rows.append(tuple(row))
        self.graph: Graph = graph
        self.dist: DistanceMatrix = tuple(rows)
        self.eccentricities: tuple[int, ...] = tuple(max(row) for row in rows)
        self.radius: int = min(self.eccentricities)
        self.diameter: int = max(self.eccentricities)
        self.center: frozenset[int] = frozenset(
            v for v, e in enumerate(self.eccentricities) if e == self.radius
        )

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def m(self) -> int:
        return self.graph.m

    @property
    def edges(self) -> tuple[Edge, ...]:
        return self.graph.edges

    @property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        return self.graph.adjacency

    @property
    def degrees(self) -> tuple[int, ...]:
        return self.graph.degrees

    def degree(self, v: int) -> int:
        return self.graph.degree(v)

    @property
    def leaves(self) -> tuple[int, ...]:
        return tuple(v for v in range(self.n) if self.degree(v) == 1)

    def center_distance(self, v: int) -> int:
        """Distance from the center set to v (minimum over center vertices)."""
        return min(self.dist[c][v] for c in self.center)

    def path(self, u: int, v: int) -> tuple[int, ...]:
        """The unique u-v path as a vertex sequence, endpoints included."""
        if u == v:
            return (u,)
        parent, _ = self.rooted(u)
        out = [v]
        while out[-1] != u:
            out.append(parent[out[-1]])
        out.reverse()
        return tuple(out)

    def rooted(self, root: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """BFS orientation from `root`: (parent per vertex, visit order)."""
        parent = [-1] * self.n
        order = [root]
        seen = [False] * self.n
        seen[root] = True
        head = 0
        while head < len(order):
            v = order[head]
            head += 1
            for u in self.adjacency[v]:
                if not seen[u]:
                    seen[u] = True
                    parent[u] = v
                    order.append(u)
        return tuple(parent), tuple(order)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Tree):
            return NotImplemented
        return self.graph == other.graph

    def __hash__(self) -> int:
        return hash(self.graph)

    def __repr__(self) -> str:
        return f"Tree(n={self.n}, diameter={self.diameter})"


def tree_from_graph(g: Graph) -> Tree:
    """Validate `g` as a tree and cache its metric data."""
    return Tree(g)


def tree_from_edges(n: int, edges: Iterable[Sequence[int]]) -> Tree:
    return Tree(Graph(n, edges))


def leaf_center_distances(t: Tree) -> tuple[tuple[int, int], ...]:
    """(leaf, distance to center set) for every degree-1 vertex; needs n >= 2."""
    if t.n < 2:
        raise ValueError("leaf distances need at least two vertices")
    return tuple((v, t.center_distance(v)) for v in t.leaves)
