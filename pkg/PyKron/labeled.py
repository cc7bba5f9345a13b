"""Labeled triangle participation through vertex-label filters"""

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

import itertools
import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .graph import Graph, GraphError, require_undirected
from .kron_stats import FactorTerms, KronMatrix, KronVector
from .sparse import SparseMatrix, hadamard, idx_split, mat_mul

logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class LabeledVertexType:
    """Triangles at a vertex labeled center whose other two vertices carry the
    labels in others (unordered)."""

    center: int
    others: tuple[int, int]

    def __post_init__(self):
        object.__setattr__(self, "others", tuple(sorted(self.others)))

    @property
    def code(self) -> str:
        return f"{self.center}:{self.others[0]},{self.others[1]}"


@dataclass(frozen=True, order=True)
class LabeledEdgeType:
    """Triangles on an edge between a first-labeled and a second-labeled
    vertex whose third vertex is labeled opposite. Counts sit at
    (second-labeled vertex, first-labeled vertex)."""

    first: int
    second: int
    opposite: int

    @property
    def code(self) -> str:
        return f"{self.first},{self.second}:{self.opposite}"


def label_filter(graph: Graph, label: int) -> SparseMatrix:
    """Diagonal projection onto the vertices carrying label."""
    return SparseMatrix.diagonal(_indicator(_labels(graph), label))


def vertex_types(num_labels: int) -> list[LabeledVertexType]:
    """All C(L + 1, 2) types per center label."""
    labels = range(1, num_labels + 1)
    return [
        LabeledVertexType(center, pair)
        for center in labels
        for pair in itertools.combinations_with_replacement(labels, 2)
    ]


def edge_types(num_labels: int) -> list[LabeledEdgeType]:
    labels = range(1, num_labels + 1)
    return [
        LabeledEdgeType(*combo) for combo in itertools.product(labels, repeat=3)
    ]


def labeled_vertex_counts(
    graph: Graph, tri_type: LabeledVertexType, num_labels: Optional[int] = None
) -> np.ndarray:
    """diag(P1 A P3 A P2 A P1), halved when the two other labels agree.

    Raises:
        GraphError: Graph is directed, has loops, or has no labels
        ValueError: A label in tri_type lies outside 1..num_labels
    """
    labels = _labels(graph)
    _check_labels(
        (tri_type.center, *tri_type.others), num_labels or graph.num_labels
    )
    adj = graph.adj
    q2, q3 = tri_type.others
    left = mat_mul(adj, label_filter(graph, q3))
    middle = mat_mul(adj, label_filter(graph, q2))
    closed = hadamard(mat_mul(left, middle), adj.T).row_sums()
    closed = closed * _indicator(labels, tri_type.center)
    if q2 == q3:
        if (closed % 2).any():
            raise ArithmeticError(f"Odd closed walk count for type {tri_type.code}")
        closed = closed // 2
    return closed


def labeled_edge_counts(
    graph: Graph, tri_type: LabeledEdgeType, num_labels: Optional[int] = None
) -> SparseMatrix:
    """(P2 A P1) o (A P3 A).

    Raises:
        GraphError: Graph is directed, has loops, or has no labels
        ValueError: A label in tri_type lies outside 1..num_labels
    """
    _labels(graph)
    _check_labels(
        (tri_type.first, tri_type.second, tri_type.opposite),
        num_labels or graph.num_labels,
    )
    adj = graph.adj
    edges = mat_mul(
        mat_mul(label_filter(graph, tri_type.second), adj),
        label_filter(graph, tri_type.first),
    )
    paths = mat_mul(mat_mul(adj, label_filter(graph, tri_type.opposite)), adj)
    return hadamard(edges, paths)


def labeled_vertex_census(
    graph: Graph, num_labels: Optional[int] = None
) -> dict[LabeledVertexType, np.ndarray]:
    num_labels = num_labels or graph.num_labels
    census = {
        tri_type: labeled_vertex_counts(graph, tri_type, num_labels)
        for tri_type in vertex_types(num_labels)
    }
    logger.debug(f"Labeled vertex census with {len(census)} types")
    return census


def labeled_edge_census(
    graph: Graph, num_labels: Optional[int] = None
) -> dict[LabeledEdgeType, SparseMatrix]:
    num_labels = num_labels or graph.num_labels
    return {
        tri_type: labeled_edge_counts(graph, tri_type, num_labels)
        for tri_type in edge_types(num_labels)
    }


def product_label(a: Graph, n_b: int, p: int) -> int:
    """Label of product vertex p, inherited from its left-factor vertex."""
    block, _ = idx_split(p, n_b)
    return _labels(a)[block - 1]


def product_labeled_vertex(
    a: Graph, b: Graph, tri_type: LabeledVertexType
) -> KronVector:
    """t_C = t_A kron diag(B^3) with the labels of C inherited from A."""
    return KronVector(
        ((1, labeled_vertex_counts(a, tri_type), _right_factor(b).diag_cube),)
    )


def product_labeled_edge(a: Graph, b: Graph, tri_type: LabeledEdgeType) -> KronMatrix:
    """Delta_C = Delta_A kron (B o B^2) with the labels of C inherited from A."""
    return KronMatrix(
        ((1, labeled_edge_counts(a, tri_type), _right_factor(b).hadamard_square),)
    )


def _right_factor(b: Graph) -> FactorTerms:
    if b.labels is not None:
        raise GraphError("Right factor of a labeled product must be unlabeled")
    return FactorTerms.of(b)


def _labels(graph: Graph) -> tuple[int, ...]:
    require_undirected(graph, allow_loops=False)
    if graph.labels is None:
        raise GraphError("Graph has no vertex labels")
    return graph.labels


def _indicator(labels: tuple[int, ...], label: int) -> np.ndarray:
    return (np.asarray(labels, dtype=np.int64) == label).astype(np.int64)


def _check_labels(labels: tuple[int, ...], num_labels: int) -> None:
    for label in labels:
        if not 1 <= label <= num_labels:
            raise ValueError(f"Label {label} outside 1..{num_labels}")
