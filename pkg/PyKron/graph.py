"""Graph type shared by the factor generators, the formulas and the oracle"""

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

from dataclasses import dataclass, replace
from typing import Optional

import numpy as np

from .sparse import SparseMatrix, strip_loops


class GraphError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class Graph:
    """Adjacency matrix plus directedness and optional vertex labels.

    adj[i, j] = 1 stores the edge i -> j. Undirected graphs store both
    directions. Labels, when present, are 1-based label ids, one per vertex.
    """

    adj: SparseMatrix
    directed: bool = False
    labels: Optional[tuple[int, ...]] = None

    def __post_init__(self):
        if self.adj.nnz and self.adj.max_entry() != 1:
            raise GraphError("Adjacency entries must be 0 or 1")
        if not self.directed and not self.adj.is_symmetric():
            raise GraphError("Undirected graph needs a symmetric adjacency matrix")
        if self.labels is not None:
            object.__setattr__(self, "labels", tuple(int(q) for q in self.labels))
            if len(self.labels) != self.adj.n:
                raise GraphError(
                    f"Expected {self.adj.n} labels, got {len(self.labels)}"
                )
            if self.labels and min(self.labels) < 1:
                raise GraphError("Labels must be positive integers")

    @property
    def n(self) -> int:
        return self.adj.n

    @property
    def loops(self) -> np.ndarray:
        """0/1 self-loop indicator per vertex."""
        return strip_loops(self.adj)[1]

    @property
    def has_loops(self) -> bool:
        return bool(self.loops.any())

    @property
    def hollow(self) -> SparseMatrix:
        return strip_loops(self.adj)[0]

    @property
    def num_labels(self) -> int:
        return max(self.labels) if self.labels else 0

    def degrees(self) -> np.ndarray:
        """Non-loop out-degree of every vertex."""
        return self.hollow.row_sums()

    def edge_count(self) -> int:
        """Undirected edges (loops counted once) or arcs for directed graphs."""
        loops = int(self.loops.sum())
        if self.directed:
            return self.adj.nnz
        return (self.adj.nnz - loops) // 2 + loops

    def edges(self) -> list[tuple[int, int]]:
        """Non-loop edges, as (i, j) with i < j when undirected."""
        return [
            (i, j)
            for i, j, _ in self.adj.entries()
            if i != j and (self.directed or i < j)
        ]

    def is_symmetric(self) -> bool:
        return self.adj.is_symmetric()

    def with_loops(self) -> "Graph":
        """The graph plus a self loop at every vertex (A + I with A hollow)."""
        return replace(self, adj=self.hollow + SparseMatrix.identity(self.n))

    def without_loops(self) -> "Graph":
        return replace(self, adj=self.hollow)

    def with_labels(self, labels: Optional[tuple[int, ...]]) -> "Graph":
        return replace(self, labels=labels)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self.adj == other.adj
            and self.directed == other.directed
            and self.labels == other.labels
        )

    __hash__ = None


def from_edges(
    n: int,
    edges: list[tuple[int, int]],
    directed: bool = False,
    labels: Optional[tuple[int, ...]] = None,
) -> Graph:
    """Build a graph from 1-based edges; undirected edges are mirrored and
    repeated edges collapse."""
    positions = set()
    for i, j in edges:
        positions.add((i, j))
        if not directed:
            positions.add((j, i))
    adj = SparseMatrix.from_entries(n, ((i, j, 1) for i, j in sorted(positions)))
    return Graph(adj, directed=directed, labels=labels)


def require_undirected(graph: Graph, allow_loops: bool = True) -> None:
    """Raise GraphError unless the graph is undirected (and loop-free if asked)."""
    if graph.directed:
        raise GraphError("Expected an undirected graph")
    if not allow_loops and graph.has_loops:
        raise GraphError("Expected a graph without self loops")
