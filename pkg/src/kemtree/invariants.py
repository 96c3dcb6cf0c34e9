"""Wiener index, Gutman index, edge split weights, and Kemeny's constant.

Kemeny's constant is available through three independent routes:

* forest route (any connected graph): deg^T F deg / (4 m tau), where F
  counts separating spanning 2-forests and tau counts spanning trees;
* Wiener relation (trees only): 2 W / (n - 1) - n + 1/2;
* edge-cut route (trees only): sum over edges of
  (2 n1 - 1)(2 n2 - 1) / (2 (n - 1)), with n1, n2 the component sizes
  left by removing the edge.

All values are exact: integers or Fractions, never floats.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Mapping

from .errors import DisconnectedError
from .graphs import DistanceMatrix, Edge, Graph, Tree, bfs_distances
from .linalg import spanning_tree_count, two_forest_count

ExactRational = Fraction


class KemenyRoute(Enum):
    FOREST = "forest"
    WIENER = "wiener"
    EDGE_CUT = "edgecut"


@dataclass(frozen=True)
class WeightedEdgeMap:
    """Per-edge split weights n1(e) * n2(e) of a tree, plus their total.

    The weight of an edge counts the unordered vertex pairs whose unique
    path crosses it, so the total is the Wiener index.
    """

    weights: Mapping[Edge, int]
    total: int

    def multiset(self) -> tuple[int, ...]:
        return tuple(sorted(self.weights.values()))


def _child_split_sizes(t: Tree) -> dict[Edge, int]:
    """For each edge, the size of the component on the child side of a
    DFS rooted at vertex 0. Only the product with (n - size) is ever used,
    so the orientation choice is immaterial."""
    parent, order = t.rooted(0)
    size = [1] * t.n
    for v in reversed(order):
        p = parent[v]
        if p >= 0:
            size[p] += size[v]
    return {
        (min(v, p), max(v, p)): size[v]
        for v, p in enumerate(parent)
        if p >= 0
    }


def omega_weights(t: Tree) -> WeightedEdgeMap:
    """Split weight n1(e) * n2(e) for every edge of the tree."""
    n = t.n
    weights = {e: s * (n - s) for e, s in _child_split_sizes(t).items()}
    return WeightedEdgeMap(weights=weights, total=sum(weights.values()))


def wiener_distance_route(d: DistanceMatrix) -> int:
    """Half the grand sum of the distance matrix."""
    total = sum(sum(row) for row in d)
    return total // 2


def wiener_edge_cut_route(t: Tree) -> int:
    """Wiener index as the sum of edge split weights; trees only."""
    return omega_weights(t).total


def gutman_index(g: Graph, d: DistanceMatrix) -> int:
    """Half the degree-weighted grand sum of the distance matrix."""
    deg = g.degrees
    total = 0
    for i in range(g.n):
        row = d[i]
        di = deg[i]
        total += di * sum(row[j] * deg[j] for j in range(g.n))
    return total // 2


def _require_connected(g: Graph) -> None:
    row = bfs_distances(g, 0)
    for v, dist in enumerate(row):
        if dist < 0:
            raise DisconnectedError(0, v)


def kemeny_forest_route(g: Graph) -> Fraction:
    """Kemeny's constant of the random walk on any connected graph.

    Evaluates deg^T F deg / (4 m tau) with every entry of F obtained as an
    exact Laplacian-minor determinant.
    """
    n = g.n
    if n < 2:
        raise ValueError("Kemeny's constant needs at least two vertices")
    _require_connected(g)
    deg = g.degrees
    quad = 0
    for i in range(n):
        for j in range(i + 1, n):
            quad += 2 * deg[i] * deg[j] * two_forest_count(g, i, j)
    tau = spanning_tree_count(g)
    return Fraction(quad, 4 * g.m * tau)


def kemeny_wiener_route(t: Tree) -> Fraction:
    """Kemeny's constant of a tree from its Wiener index."""
    n = t.n
    if n < 2:
        raise ValueError("Kemeny's constant needs at least two vertices")
    w = wiener_edge_cut_route(t)
    return Fraction(2 * w, n - 1) - n + Fraction(1, 2)


def kemeny_edge_cut_route(t: Tree) -> Fraction:
    """Kemeny's constant of a tree from its edge split sizes."""
    n = t.n
    if n < 2:
        raise ValueError("Kemeny's constant needs at least two vertices")
    acc = 0
    for s in _child_split_sizes(t).values():
        acc += (2 * s - 1) * (2 * (n - s) - 1)
    return Fraction(acc, 2 * (n - 1))


@dataclass(frozen=True)
class InvariantReport:
    n: int
    m: int
    wiener: int
    gutman: int
    kemeny: Fraction
    route: KemenyRoute


def compute_invariants(g: Graph, route: KemenyRoute | str = "auto") -> InvariantReport:
    """Full invariant report for a connected graph.

    `route` picks how Kemeny's constant is computed; "auto" uses the
    edge-cut route on trees and the forest route otherwise. Tree-only
    routes on graphs with cycles raise RouteRequiresTreeError.
    """
    from .errors import RouteRequiresTreeError
    from .graphs import all_pairs_distances, tree_from_graph

    d = all_pairs_distances(g)
    tree: Tree | None = None
    if g.m == g.n - 1:
        tree = tree_from_graph(g)
    if isinstance(route, KemenyRoute):
        chosen = route
    elif route == "auto":
        chosen = KemenyRoute.EDGE_CUT if tree is not None else KemenyRoute.FOREST
    else:
        chosen = KemenyRoute(route)
    if chosen is KemenyRoute.FOREST:
        kappa = kemeny_forest_route(g)
    else:
        if tree is None:
            raise RouteRequiresTreeError(
                f"route {chosen.value!r} is defined only on trees"
            )
        if chosen is KemenyRoute.WIENER:
            kappa = kemeny_wiener_route(tree)
        else:
            kappa = kemeny_edge_cut_route(tree)
    return InvariantReport(
        n=g.n,
        m=g.m,
        wiener=wiener_distance_route(d),
        gutman=gutman_index(g, d),
        kemeny=kappa,
        route=chosen,
    )


def format_exact(value: Fraction | int, places: int = 4) -> str:
    """Fixed-point decimal rendering of an exact value, round-half-even.

    Display only; the exact value is never stored rounded.
    """
    f = Fraction(value)
    sign = "-" if f < 0 else ""
    num, den = abs(f.numerator), f.denominator
    scale = 10**places
    q, r = divmod(num * scale, den)
    double = 2 * r
    if double > den or (double == den and q % 2 == 1):
        q += 1
    if places == 0:
        return f"{sign}{q}"
    whole, frac = divmod(q, scale)
    return f"{sign}{whole}.{frac:0{places}d}"


def format_rational(value: Fraction | int) -> str:
    """Exact "p/q" rendering (plain integer when the denominator is 1)."""
    f = Fraction(value)
    if f.denominator == 1:
        return str(f.numerator)
    return f"{f.numerator}/{f.denominator}"
