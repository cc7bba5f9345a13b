"""Truss decomposition by edge peeling, and the product decomposition for a
right factor whose edges sit in at most one triangle"""

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

import numpy as np
import scipy.sparse
import scipy.sparse.csgraph

from . import factors, triangles
from .graph import Graph, GraphError, require_undirected
from .sparse import SparseMatrix, idx_split, kron_materialize

logger = logging.getLogger(__name__)

Edge = tuple[int, int]


class TrussPreconditionError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class TrussDecomposition:
    """Trussness of every undirected edge (i, j), i < j. Edges in no triangle
    have trussness 2."""

    trussness: dict[Edge, int]
    n: int

    def __getitem__(self, edge: Edge) -> int:
        i, j = edge
        return self.trussness[(min(i, j), max(i, j))]

    @property
    def max_trussness(self) -> int:
        return max(self.trussness.values(), default=2)

    def truss_set(self, kappa: int) -> set[Edge]:
        """T^(kappa), the edges of trussness at least kappa."""
        return {edge for edge, value in self.trussness.items() if value >= kappa}

    def sizes(self) -> dict[int, int]:
        """|T^(kappa)| for kappa from 3 to one past the largest trussness."""
        return {
            kappa: len(self.truss_set(kappa))
            for kappa in range(3, self.max_trussness + 2)
        }

    def histogram(self) -> dict[int, int]:
        return dict(sorted(collections.Counter(self.trussness.values()).items()))

    def components(self, kappa: int) -> list[set[Edge]]:
        """Connected pieces of T^(kappa), ordered by smallest edge."""
        edges = sorted(self.truss_set(kappa))
        if not edges:
            return []
        rows = [i - 1 for i, _ in edges]
        cols = [j - 1 for _, j in edges]
        adjacency = scipy.sparse.csr_matrix(
            (np.ones(len(edges)), (rows, cols)), shape=(self.n, self.n)
        )
        _, component = scipy.sparse.csgraph.connected_components(
            adjacency, directed=False
        )
        pieces = collections.defaultdict(set)
        for edge in edges:
            pieces[component[edge[0] - 1]].add(edge)
        return sorted(pieces.values(), key=min)


@dataclass(frozen=True, eq=False)
class ProductTruss:
    """Trussness of C = A kron B, evaluated pointwise from the decomposition of
    A and the triangle counts of B."""

    left: TrussDecomposition
    right_adj: SparseMatrix
    right_support: SparseMatrix
    right_truss_edges: int

    @property
    def n_right(self) -> int:
        return self.right_support.n

    def at(self, i: int, j: int, k: int, l: int) -> int:
        """Trussness of the product edge ((i, k), (j, l))."""
        if self.right_support.entry(k, l) == 1:
            return self.left[(i, j)]
        return 2

    def trussness(self, p: int, q: int) -> int:
        i, k = idx_split(p, self.n_right)
        j, l = idx_split(q, self.n_right)
        a_edge = (min(i, j), max(i, j)) in self.left.trussness
        if not a_edge or k == l or self.right_adj.entry(k, l) != 1:
            raise GraphError(f"({p}, {q}) is not an edge of the product")
        return self.at(i, j, k, l)

    def sizes(self) -> dict[int, int]:
        """|T_C^(kappa)| = 2 |T_A^(kappa)| |T_B^(3)|."""
        return {
            kappa: 2 * size * self.right_truss_edges
            for kappa, size in self.left.sizes().items()
        }


@dataclass(frozen=True)
class CounterexampleReport:
    vertices: int
    edges: int
    triangles: int
    edge_histogram: dict[int, int]
    truss_sizes: dict[int, int]


def truss_decompose(graph: Graph) -> TrussDecomposition:
    """Peel edges with fewer than kappa - 2 triangles until none remain below
    the threshold, record the survivors as T^(kappa), then raise kappa.
    Triangle counts are decremented as edges leave instead of recounted.

    Raises:
        GraphError: Graph is directed or has loops

    Returns:
        TrussDecomposition: Trussness of every edge
    """
    require_undirected(graph, allow_loops=False)
    neighbors = {v: set(graph.adj.row(v).tolist()) for v in range(1, graph.n + 1)}
    support = {edge: 0 for edge in graph.edges()}
    for i, j, count in triangles.triangle_edge_counts(graph).entries():
        if i < j:
            support[(i, j)] = count

    trussness = {}
    kappa = 3
    while len(trussness) < len(support):
        queue = sorted(
            edge
            for edge, count in support.items()
            if edge not in trussness and count < kappa - 2
        )
        queued = set(queue)
        while queue:
            i, j = queue.pop()
            trussness[(i, j)] = kappa - 1
            for w in neighbors[i] & neighbors[j]:
                for edge in (_key(i, w), _key(j, w)):
                    support[edge] -= 1
                    if support[edge] < kappa - 2 and edge not in queued:
                        queue.append(edge)
                        queued.add(edge)
            neighbors[i].discard(j)
            neighbors[j].discard(i)
        logger.debug(f"{len(support) - len(trussness)} edges in the {kappa}-truss")
        kappa += 1

    return TrussDecomposition(trussness, graph.n)


def check_truss_factor(b: Graph) -> SparseMatrix:
    """Triangle counts of B, after checking every edge sits in at most one
    triangle.

    Raises:
        TrussPreconditionError: Some edge of B is in two or more triangles
    """
    support = triangles.triangle_edge_counts(b)
    for k, l, count in support.entries():
        if count > 1:
            raise TrussPreconditionError(
                f"Edge ({k}, {l}) of the right factor is in {count} triangles; "
                "the product decomposition needs at most 1"
            )
    return support


def product_truss(a: Graph, b: Graph) -> ProductTruss:
    """Trussness of A kron B without building it: an edge keeps the trussness
    of its A-edge when its B-edge is in a triangle, and 2 otherwise.

    Raises:
        GraphError: A factor is directed or has loops
        TrussPreconditionError: Some edge of B is in two or more triangles
    """
    require_undirected(b, allow_loops=False)
    support = check_truss_factor(b)
    return ProductTruss(
        left=truss_decompose(a),
        right_adj=b.adj,
        right_support=support,
        right_truss_edges=support.nnz // 2,
    )


def verify_counterexample() -> CounterexampleReport:
    """Decompose hub-cycle kron hub-cycle directly. Its right factor has edges
    in two triangles, so the product decomposition does not apply, and the
    3- and 4-trusses come out larger than the factor-based sizes."""
    hub_cycle = factors.make_hub_cycle()
    product = Graph(kron_materialize(hub_cycle.adj, hub_cycle.adj))
    stats = triangles.triangle_stats(product)
    edge_histogram = collections.Counter(
        count for i, j, count in stats.per_edge.entries() if i < j
    )
    zero = product.edge_count() - sum(edge_histogram.values())
    if zero:
        edge_histogram[0] = zero
    decomposition = truss_decompose(product)
    report = CounterexampleReport(
        vertices=product.n,
        edges=product.edge_count(),
        triangles=stats.total,
        edge_histogram=dict(sorted(edge_histogram.items())),
        truss_sizes={kappa: len(decomposition.truss_set(kappa)) for kappa in (3, 4, 5)},
    )
    logger.info(f"Counterexample: {report}")
    return report


def _key(i: int, j: int) -> Edge:
    return (i, j) if i < j else (j, i)
