"""Shared builders and independent oracles for the test suite.

Every oracle here is deliberately implemented by a different method than
the library routine it checks (brute-force enumeration, cofactor
expansion, Floyd-Warshall, naive decoding), so test agreement is evidence
rather than tautology.
"""

from __future__ import annotations

import itertools
from pathlib import Path

import kemtree as kt

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def load_graph(name: str) -> kt.Graph:
    return kt.parse_edge_list((FIXTURES / f"{name}.txt").read_text())


def load_tree(name: str) -> kt.Tree:
    return kt.tree_from_graph(load_graph(name))


def path_graph(n: int) -> kt.Graph:
    return kt.Graph(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(n: int) -> kt.Graph:
    return kt.Graph(n, [(0, i) for i in range(1, n)])


def cycle_graph(n: int) -> kt.Graph:
    return kt.Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> kt.Graph:
    return kt.Graph(n, itertools.combinations(range(n), 2))


def petersen_graph() -> kt.Graph:
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return kt.Graph(10, edges)


def floyd_warshall(g: kt.Graph) -> list[list[int]]:
    big = g.n + 1
    dist = [[0 if i == j else big for j in range(g.n)] for i in range(g.n)]
    for u, v in g.edges:
        dist[u][v] = dist[v][u] = 1
    for k in range(g.n):
        dk = dist[k]
        for i in range(g.n):
            dik = dist[i][k]
            if dik >= big:
                continue
            di = dist[i]
            for j in range(g.n):
                alt = dik + dk[j]
                if alt < di[j]:
                    di[j] = alt
    return dist


def det_cofactor(matrix) -> int:
    """Laplace expansion along the first available row, memoized on the
    set of remaining columns. Independent of Bareiss elimination."""
    k = len(matrix)
    if k == 0:
        return 1
    full = (1 << k) - 1
    memo: dict[int, int] = {}

    def rec(colmask: int) -> int:
        if colmask == 0:
            return 1
        cached = memo.get(colmask)
        if cached is not None:
            return cached
        row = k - bin(colmask).count("1")
        total = 0
        sign = 1
        for col in range(k):
            if colmask & (1 << col):
                entry = matrix[row][col]
                if entry:
                    total += sign * entry * rec(colmask & ~(1 << col))
                sign = -sign
        memo[colmask] = total
        return total

    return rec(full)


class UnionFind:
    def __init__(self, n: int) -> None:
        self.parent = list(range(n))
        self.groups = n

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[ra] = rb
        self.groups -= 1
        return True


def spanning_tree_count_brute(g: kt.Graph) -> int:
    """Count spanning trees by checking every (n-1)-edge subset."""
    count = 0
    for sub in itertools.combinations(g.edges, g.n - 1):
        uf = UnionFind(g.n)
        if all(uf.union(u, v) for u, v in sub):
            count += 1
    return count


def two_forest_count_brute(g: kt.Graph, i: int, j: int) -> int:
    """Count (n-2)-edge acyclic subsets whose two components separate i, j."""
    count = 0
    for sub in itertools.combinations(g.edges, g.n - 2):
        uf = UnionFind(g.n)
        if all(uf.union(u, v) for u, v in sub) and uf.find(i) != uf.find(j):
            count += 1
    return count


def naive_prufer_decode(seq, n: int) -> set[frozenset[int]]:
    """Reference decode: repeatedly join the smallest inactive leaf."""
    remaining = list(seq)
    active = set(range(n))
    edges: set[frozenset[int]] = set()
    for idx, v in enumerate(remaining):
        rest = set(remaining[idx:])
        leaf = min(u for u in active if u not in rest)
        edges.add(frozenset((leaf, v)))
        active.remove(leaf)
    a, b = sorted(active)
    edges.add(frozenset((a, b)))
    return edges


def random_tree(rng, n: int) -> kt.Tree:
    """Uniform labeled tree from a random decode sequence."""
    if n == 1:
        return kt.tree_from_edges(1, [])
    if n == 2:
        return kt.tree_from_edges(2, [(0, 1)])
    seq = tuple(rng.randrange(n) for _ in range(n - 2))
    edges = [tuple(sorted(e)) for e in naive_prufer_decode(seq, n)]
    return kt.tree_from_edges(n, edges)


def random_connected_graph(rng, n: int, extra_p: float = 0.3) -> kt.Graph:
    """Random spanning tree plus independently sampled extra edges."""
    tree = random_tree(rng, n)
    edges = set(tree.edges)
    for u in range(n):
        for v in range(u + 1, n):
            if (u, v) not in edges and rng.random() < extra_p:
                edges.add((u, v))
    return kt.Graph(n, sorted(edges))


def relabel_graph(g: kt.Graph, perm) -> kt.Graph:
    return kt.Graph(g.n, [(perm[u], perm[v]) for u, v in g.edges])


def brute_force_isomorphic(g1: kt.Graph, g2: kt.Graph) -> bool:
    """All-bijections isomorphism test; intended for n <= 7."""
    if g1.n != g2.n or g1.m != g2.m:
        return False
    target = {frozenset(e) for e in g2.edges}
    for perm in itertools.permutations(range(g1.n)):
        if {frozenset((perm[u], perm[v])) for u, v in g1.edges} == target:
            return True
    return False


def omega_by_path_enumeration(t: kt.Tree) -> dict[tuple[int, int], int]:
    """Count, for every edge, the vertex pairs whose unique path uses it."""
    counts = {e: 0 for e in t.edges}
    for u in range(t.n):
        for v in range(u + 1, t.n):
            path = t.path(u, v)
            for k in range(len(path) - 1):
                a, b = path[k], path[k + 1]
                counts[(min(a, b), max(a, b))] += 1
    return counts
