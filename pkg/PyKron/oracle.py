"""Brute-force ground truth, deliberately naive and independent of the matrix
formulas: plain neighbor sets and explicit triangle enumeration"""

# PyKron
# Copyright (C) 2022  Joby Matwick
#
# This program is free software: you can redistribute it and/or modify it under
# the terms of the GNU General Public License as published by the Free Software
# Foundation, either version 3 of the License, or any later version.
#
# This program is distributed in the hope that it will be useful, but WITHOUT
# ANY WARRANTY; without even the implied warranty of MERCHANTABILITY or FITNESS
# FOR A PARTICULAR PURPOSE. See the GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License along with
# this program. If not, see <http://www.gnu.org/licenses/>.

import collections
import logging
from dataclasses import dataclass

from .graph import Graph

ORACLE_MAX_VERTICES = 2000

ROLE_ORDER = {"s": 0, "u": 1, "t": 2}

logger = logging.getLogger(__name__)


class OracleRefused(RuntimeError):
    pass


@dataclass(frozen=True, eq=False)
class BruteTriangles:
    per_vertex: list[int]
    per_edge: dict[tuple[int, int], int]
    total: int


@dataclass(frozen=True, eq=False)
class BruteCensus:
    """Counts keyed by type: a list per vertex (index v - 1) for vertex types
    and a {(row, col): count} dict for edge types."""

    vertex: dict
    edge: dict


def brute_triangles(
    graph: Graph, max_vertices: int = ORACLE_MAX_VERTICES
) -> BruteTriangles:
    """Enumerate every triangle a < b < c of the graph, loops ignored; per_edge
    holds both orientations of every edge that is in a triangle."""
    adj = _neighbor_sets(graph, max_vertices, symmetric=True)
    per_vertex = [0] * graph.n
    per_edge = collections.Counter()
    total = 0
    for a, b, c in _triangles(adj):
        total += 1
        for v in (a, b, c):
            per_vertex[v - 1] += 1
        for x, y in ((a, b), (a, c), (b, c)):
            per_edge[(x, y)] += 1
            per_edge[(y, x)] += 1
    return BruteTriangles(per_vertex, dict(per_edge), total)


def brute_directed_census(
    graph: Graph, max_vertices: int = ORACLE_MAX_VERTICES
) -> BruteCensus:
    """Classify each triangle of the undirected view from each of its vertices
    and from both ends of each of its edges."""
    arcs = _neighbor_sets(graph, max_vertices, symmetric=False)
    undirected = _neighbor_sets(graph, max_vertices, symmetric=True)
    vertex = collections.defaultdict(lambda: [0] * graph.n)
    edge = collections.defaultdict(collections.Counter)

    def rel(x: int, y: int) -> str:
        forward, backward = y in arcs[x], x in arcs[y]
        return "o" if forward and backward else "+" if forward else "-"

    def role(c: int, x: int) -> str:
        return {"+": "s", "-": "t", "o": "u"}[rel(c, x)]

    for a, b, c in _triangles(undirected):
        for center, x, y in ((a, b, c), (b, a, c), (c, a, b)):
            if (ROLE_ORDER[role(center, x)], rel(x, y) == "-") > (
                ROLE_ORDER[role(center, y)],
                rel(y, x) == "-",
            ):
                x, y = y, x
            code = role(center, x) + role(center, y) + rel(x, y)
            vertex[code][center - 1] += 1

        for x, y, w in ((a, b, c), (a, c, b), (b, c, a)):
            for tail, head in ((x, y), (y, x)):
                central = rel(tail, head)
                if central == "-":
                    continue
                code = central + rel(tail, w) + rel(w, head)
                edge[code][(tail, head)] += 1

    edge_counts = {code: dict(counts) for code, counts in edge.items()}
    return BruteCensus(dict(vertex), edge_counts)


def brute_labeled_census(
    graph: Graph, max_vertices: int = ORACLE_MAX_VERTICES
) -> BruteCensus:
    """Vertex keys are (center label, (lower label, higher label)); edge keys
    are (label of col, label of row, label of opposite) at (row, col)."""
    adj = _neighbor_sets(graph, max_vertices, symmetric=True)
    labels = graph.labels
    vertex = collections.defaultdict(lambda: [0] * graph.n)
    edge = collections.defaultdict(collections.Counter)

    for a, b, c in _triangles(adj):
        for center, x, y in ((a, b, c), (b, a, c), (c, a, b)):
            pair = tuple(sorted((labels[x - 1], labels[y - 1])))
            vertex[(labels[center - 1], pair)][center - 1] += 1
        for x, y, w in ((a, b, c), (a, c, b), (b, c, a)):
            for row, col in ((x, y), (y, x)):
                key = (labels[col - 1], labels[row - 1], labels[w - 1])
                edge[key][(row, col)] += 1

    edge_counts = {key: dict(counts) for key, counts in edge.items()}
    return BruteCensus(dict(vertex), edge_counts)


def brute_truss(
    graph: Graph, max_vertices: int = ORACLE_MAX_VERTICES
) -> dict[tuple[int, int], int]:
    """Trussness of every edge (i < j) by peeling with a full triangle recount
    after every removal round."""
    adj = _neighbor_sets(graph, max_vertices, symmetric=True)
    edges = {(i, j) for i in adj for j in adj[i] if i < j}
    trussness = {}
    kappa = 3
    while edges:
        while True:
            alive = {v: set() for v in adj}
            for i, j in edges:
                alive[i].add(j)
                alive[j].add(i)
            drop = {(i, j) for i, j in edges if len(alive[i] & alive[j]) < kappa - 2}
            if not drop:
                break
            for e in drop:
                trussness[e] = kappa - 1
            edges -= drop
        kappa += 1
    logger.debug(f"Brute truss finished at kappa {kappa - 1}")
    return trussness


def _neighbor_sets(
    graph: Graph, max_vertices: int, symmetric: bool
) -> dict[int, set[int]]:
    if graph.n > max_vertices:
        raise OracleRefused(
            f"Graph has {graph.n} vertices, oracle limit is {max_vertices}"
        )
    adj = {v: set() for v in range(1, graph.n + 1)}
    for i, j, _ in graph.adj.entries():
        if i == j:
            continue
        adj[i].add(j)
        if symmetric:
            adj[j].add(i)
    return adj


def _triangles(adj: dict[int, set[int]]):
    for a in adj:
        for b in adj[a]:
            if b <= a:
                continue
            for c in adj[a] & adj[b]:
                if c > b:
                    yield a, b, c
