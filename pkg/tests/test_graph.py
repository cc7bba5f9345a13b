"""Tests for the graph type"""

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

import pytest

from PyKron import graph
from PyKron.graph import Graph, GraphError
from PyKron.sparse import SparseMatrix

TRIANGLE = graph.from_edges(3, [(1, 2), (2, 3), (1, 3)])


def test_fromEdgesMirrors():
    g = graph.from_edges(3, [(1, 2), (2, 1), (2, 3)])
    assert g.adj.nnz == 4
    assert g.edges() == [(1, 2), (2, 3)]
    assert g.edge_count() == 2


def test_fromEdgesDirected():
    g = graph.from_edges(3, [(1, 2), (2, 1), (2, 3)], directed=True)
    assert g.edges() == [(1, 2), (2, 1), (2, 3)]
    assert g.edge_count() == 3


def test_asymmetricUndirected():
    with pytest.raises(GraphError):
        Graph(SparseMatrix.from_entries(2, [(1, 2, 1)]))


def test_weightedAdjacency():
    with pytest.raises(GraphError):
        Graph(SparseMatrix.from_entries(2, [(1, 2, 2), (2, 1, 2)]))


@pytest.mark.parametrize("labels", [(1, 2), (0, 1, 1)])
def test_invalidLabels(labels: tuple):
    with pytest.raises(GraphError):
        TRIANGLE.with_labels(labels)


def test_loops():
    full = TRIANGLE.with_loops()
    assert full.adj == SparseMatrix.ones(3)
    assert full.loops.tolist() == [1, 1, 1]
    assert full.has_loops
    assert full.degrees().tolist() == [2, 2, 2]
    assert full.edge_count() == 6
    assert full.without_loops() == TRIANGLE
    assert not TRIANGLE.has_loops


def test_labels():
    labeled = TRIANGLE.with_labels([3, 1, 2])
    assert labeled.labels == (3, 1, 2)
    assert labeled.num_labels == 3
    assert labeled != TRIANGLE
    assert TRIANGLE.num_labels == 0


def test_requireUndirected():
    graph.require_undirected(TRIANGLE.with_loops())
    with pytest.raises(GraphError):
        graph.require_undirected(TRIANGLE.with_loops(), allow_loops=False)
    with pytest.raises(GraphError):
        graph.require_undirected(graph.from_edges(2, [(1, 2)], directed=True))
