"""Exhaustive generation of non-isomorphic trees and canonical codes.

The canonical code is the classic rooted-tree encoding (nested balanced
parentheses with children sorted) rooted at the center. Trees with two
centers are encoded as the two half codes across the central edge,
concatenated in whichever order compares smaller. Two trees get equal
codes exactly when they are isomorphic, and the code is a pure function
of structure, so persisted censuses stay byte-stable across runs.

Generation grows order k+1 representatives from order k by attaching a
new leaf at every vertex and deduplicating by code. Simple, provably
complete, and adequate at the default order cap.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import ResourceLimitError
from .graphs import Edge, Tree, tree_from_edges

MAX_ORDER_DEFAULT = 16
PRUFER_ORACLE_MAX = 9

CanonicalCode = bytes


_LEAF_CODE = b"()"


def _code_from_adjacency(adj) -> bytes:
    """Canonical code from adjacency lists of a tree (not re-validated)."""
    n = len(adj)
    if n == 1:
        return _LEAF_CODE
    join = b"".join
    deg = [len(nbrs) for nbrs in adj]
    removed = [False] * n
    codes = [_LEAF_CODE] * n
    layer = [v for v in range(n) if deg[v] == 1]
    remaining = n
    while remaining > 2:
        for v in layer:
            removed[v] = True
            parts = [codes[u] for u in adj[v] if removed[u]]
            if parts:
                parts.sort()
                codes[v] = b"(" + join(parts) + b")"
        remaining -= len(layer)
        nxt = []
        for v in layer:
            for u in adj[v]:
                if not removed[u]:
                    deg[u] -= 1
                    if deg[u] == 1:
                        nxt.append(u)
        layer = nxt
    centers = [v for v in range(n) if not removed[v]]

    def finish(v: int) -> bytes:
        parts = sorted(codes[u] for u in adj[v] if removed[u])
        return b"(" + join(parts) + b")"

    if len(centers) == 1:
        return finish(centers[0])
    a, b = centers
    half_a, half_b = finish(a), finish(b)
    return min(half_a + half_b, half_b + half_a)


def canonical_code(t: Tree) -> CanonicalCode:
    """Order-invariant byte string identifying the tree up to isomorphism."""
    return _code_from_adjacency(t.adjacency)


@dataclass(frozen=True)
class TreeFamily:
    """Trees of one order (optionally one diameter), canonical-code ascending."""

    n: int
    diameter: int | None
    members: tuple[Tree, ...]

    def __len__(self) -> int:
        return len(self.members)

    def codes(self) -> tuple[CanonicalCode, ...]:
        return tuple(canonical_code(t) for t in self.members)


# order -> ((code, edges), ...) sorted by code; grown lazily and kept for reuse
_layers: dict[int, tuple[tuple[bytes, tuple[Edge, ...]], ...]] = {}


def _layer(n: int) -> tuple[tuple[bytes, tuple[Edge, ...]], ...]:
    cached = _layers.get(n)
    if cached is not None:
        return cached
    if n == 1:
        entries = ((b"()", ()),)
    else:
        found: dict[bytes, tuple[Edge, ...]] = {}
        for _, edges in _layer(n - 1):
            adj: list[list[int]] = [[] for _ in range(n)]
            for u, v in edges:
                adj[u].append(v)
                adj[v].append(u)
            adj[n - 1] = [0]
            for v in range(n - 1):
                adj[v].append(n - 1)
                adj[n - 1][0] = v
                code = _code_from_adjacency(adj)
                if code not in found:
                    found[code] = edges + ((v, n - 1),)
                adj[v].pop()
        entries = tuple(sorted(found.items()))
    _layers[n] = entries
    return entries


def enumerate_trees(n: int, cap: int = MAX_ORDER_DEFAULT) -> TreeFamily:
    """All non-isomorphic trees of order n, one representative per class."""
    if n < 1:
        raise ValueError("order must be positive")
    if n > cap:
        raise ResourceLimitError(f"order {n} exceeds enumeration cap {cap}")
    members = tuple(tree_from_edges(n, edges) for _, edges in _layer(n))
    return TreeFamily(n=n, diameter=None, members=members)


def family(n: int, d: int, cap: int = MAX_ORDER_DEFAULT) -> TreeFamily:
    """Trees of order n with diameter exactly d."""
    if not 1 <= d <= n - 1:
        raise ValueError(f"diameter {d} out of range 1..{n - 1}")
    base = enumerate_trees(n, cap)
    members = tuple(t for t in base.members if t.diameter == d)
    return TreeFamily(n=n, diameter=d, members=members)


def _prufer_decode(seq: tuple[int, ...], n: int) -> list[list[int]]:
    """Adjacency lists of the labeled tree with the given code sequence."""
    deg = [1] * n
    for x in seq:
        deg[x] += 1
    adj: list[list[int]] = [[] for _ in range(n)]
    ptr = 0
    while deg[ptr] != 1:
        ptr += 1
    leaf = ptr
    for v in seq:
        adj[leaf].append(v)
        adj[v].append(leaf)
        deg[v] -= 1
        if deg[v] == 1 and v < ptr:
            leaf = v
        else:
            ptr += 1
            while deg[ptr] != 1:
                ptr += 1
            leaf = ptr
    adj[leaf].append(n - 1)
    adj[n - 1].append(leaf)
    return adj


_prufer_counts: dict[int, int] = {}


def prufer_oracle_count(n: int) -> int:
    """Distinct canonical codes over all n^(n-2) labeled-tree sequences.

    Independent of the growth generator; capped because the sequence space
    is exponential.
    """
    if n < 1:
        raise ValueError("order must be positive")
    if n > PRUFER_ORACLE_MAX:
        raise ResourceLimitError(
            f"order {n} exceeds oracle cap {PRUFER_ORACLE_MAX}"
        )
    cached = _prufer_counts.get(n)
    if cached is not None:
        return cached
    if n <= 2:
        count = 1
    else:
        seen: set[bytes] = set()
        decode = _prufer_decode
        code = _code_from_adjacency
        for seq in itertools.product(range(n), repeat=n - 2):
            seen.add(code(decode(seq, n)))
        count = len(seen)
    _prufer_counts[n] = count
    return count


def census_line(t: Tree) -> str:
    """One census record: canonical code in hex, then the edge list."""
    edges = " ".join(f"{u}-{v}" for u, v in t.edges)
    return f"{canonical_code(t).hex()} {edges}".rstrip()


def parse_census_line(line: str) -> tuple[CanonicalCode, Tree]:
    tokens = line.split()
    code = bytes.fromhex(tokens[0])
    edges = []
    for tok in tokens[1:]:
        u, v = tok.split("-")
        edges.append((int(u), int(v)))
    n = len(code) // 2
    return code, tree_from_edges(n, edges)
