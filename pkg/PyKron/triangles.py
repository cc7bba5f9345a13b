"""Exact triangle participation at the vertices and edges of an undirected graph"""

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

import logging
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
import scipy.sparse

from .graph import Graph, require_undirected
from .sparse import SparseMatrix, diag_vec, hadamard, mat_mul

METHODS = ("wedge", "matrix")

logger = logging.getLogger(__name__)


class TriangleCountError(RuntimeError):
    pass


@dataclass(frozen=True, eq=False)
class TriangleStats:
    """Triangle counts of one graph: t per vertex, Delta per edge, tau total."""

    per_vertex: np.ndarray
    per_edge: SparseMatrix
    total: int


def triangle_stats(graph: Graph, method: str = "wedge") -> TriangleStats:
    """Count triangles at every vertex and edge of an undirected graph.
    Self loops are ignored.

    Args:
        graph (Graph): Undirected graph
        method (str, optional): "wedge" for degree-ordered neighbor
            intersection, "matrix" for the Hadamard product formulas.
            Defaults to "wedge".

    Raises:
        GraphError: Graph is directed
        ValueError: Unknown method
        TriangleCountError: Counts are internally inconsistent

    Returns:
        TriangleStats: Per-vertex, per-edge and total counts
    """
    require_undirected(graph)
    hollow = graph.hollow
    if method == "wedge":
        per_edge = _wedge_edge_counts(hollow)
        doubled = per_edge.row_sums()
    elif method == "matrix":
        squared = mat_mul(hollow, hollow)
        per_edge = hadamard(hollow, squared)
        doubled = diag_vec(mat_mul(squared, hollow))
    else:
        raise ValueError(f"Unknown triangle counting method '{method}'")

    if (doubled % 2).any():
        raise TriangleCountError("Odd closed 3-walk count at some vertex")
    per_vertex = doubled // 2
    return TriangleStats(per_vertex, per_edge, _total(per_vertex))


def triangle_vertex_counts(graph: Graph) -> np.ndarray:
    return triangle_stats(graph).per_vertex


def triangle_edge_counts(graph: Graph, method: str = "wedge") -> SparseMatrix:
    return triangle_stats(graph, method).per_edge


def triangle_total(graph: Graph) -> int:
    return triangle_stats(graph).total


def clustering_coefficients(graph: Graph) -> list[Fraction]:
    """Local clustering coefficient t_i / C(d_i, 2) as exact fractions, 0 when
    the degree is below 2."""
    triangles = triangle_vertex_counts(graph)
    coefficients = []
    for t, d in zip(triangles.tolist(), graph.degrees().tolist()):
        pairs = d * (d - 1) // 2
        coefficients.append(Fraction(t, pairs) if pairs else Fraction(0))
    return coefficients


def _total(per_vertex: np.ndarray) -> int:
    summed = sum(int(t) for t in per_vertex)
    if summed % 3:
        raise TriangleCountError(f"Vertex counts sum to {summed}, not a multiple of 3")
    return summed // 3


def _wedge_edge_counts(hollow: SparseMatrix) -> SparseMatrix:
    """Orient every edge from lower to higher (degree, id) rank, then close each
    oriented wedge a -> b -> c against the out-list of a. Every triangle is
    found exactly once and credited to its three edges."""
    n = hollow.n
    csr = hollow.csr
    degrees = hollow.row_sums()
    rank = np.empty(n, dtype=np.int64)
    rank[np.lexsort((np.arange(n), degrees))] = np.arange(n)

    rows = np.repeat(np.arange(n), np.diff(csr.indptr))
    cols = csr.indices
    keep = rank[rows] < rank[cols]
    oriented = scipy.sparse.csr_matrix(
        (np.ones(int(keep.sum()), dtype=np.int64), (rows[keep], cols[keep])),
        shape=(n, n),
    )
    oriented.sort_indices()
    indptr = oriented.indptr.tolist()
    indices = oriented.indices.tolist()
    counts = [0] * len(indices)

    wedges = 0
    for a in range(n):
        start, end = indptr[a], indptr[a + 1]
        if end - start < 2:
            continue
        position = {indices[pos]: pos for pos in range(start, end)}
        for pos_ab in range(start, end):
            b = indices[pos_ab]
            for pos_bc in range(indptr[b], indptr[b + 1]):
                wedges += 1
                pos_ac = position.get(indices[pos_bc])
                if pos_ac is not None:
                    counts[pos_ab] += 1
                    counts[pos_bc] += 1
                    counts[pos_ac] += 1
    logger.debug(f"Closed {wedges} oriented wedges on {n} vertices")

    upper = scipy.sparse.csr_matrix(
        (np.array(counts, dtype=np.int64), oriented.indices, oriented.indptr),
        shape=(n, n),
    )
    return SparseMatrix(upper + upper.transpose())
