"""Tests for the factor generators"""

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
import scipy.sparse.csgraph

from PyKron import factors, graph, triangles
from PyKron.graph import Graph, GraphError


def _connected(g: Graph) -> bool:
    count, _ = scipy.sparse.csgraph.connected_components(g.adj.csr, directed=False)
    return count == 1


def _max_edge_triangles(g: Graph) -> int:
    return triangles.triangle_edge_counts(g).max_entry()


def test_rngDeterministic():
    assert factors.rng(7).integers(1000, size=5).tolist() == (
        factors.rng(7).integers(1000, size=5).tolist()
    )


def test_clique():
    assert factors.make_clique(4).edge_count() == 6
    assert factors.make_clique(4, with_loops=True).edge_count() == 10
    with pytest.raises(ValueError):
        factors.make_clique(0)


def test_hubCycle():
    hub_cycle = factors.make_hub_cycle()
    assert hub_cycle.n == 5
    assert hub_cycle.edge_count() == 8
    assert triangles.triangle_total(hub_cycle) == 4
    assert hub_cycle.adj.entry(2, 4) == 0
    assert hub_cycle.adj.entry(3, 5) == 0


def test_smallShapes():
    assert factors.make_path(4).edges() == [(1, 2), (2, 3), (3, 4)]
    assert factors.make_star(4).edges() == [(1, 2), (1, 3), (1, 4)]
    assert factors.make_cycle(4).edge_count() == 4
    directed = factors.make_cycle(3, directed=True)
    assert directed.edges() == [(1, 2), (2, 3), (3, 1)]
    with pytest.raises(ValueError):
        factors.make_cycle(2)


def test_erDeterministic():
    assert factors.gen_er(10, 0.5, 3) == factors.gen_er(10, 0.5, 3)
    assert factors.gen_er(10, 0.5, 3, directed=True).directed


@pytest.mark.parametrize("loops", [False, True])
def test_erExtremes(loops: bool):
    assert factors.gen_er(6, 0, 1, loops=loops).adj.nnz == 0
    complete = factors.gen_er(6, 1, 1, loops=loops)
    assert complete.adj.nnz == (36 if loops else 30)
    assert complete.has_loops == loops


def test_erInvalidProbability():
    with pytest.raises(ValueError):
        factors.gen_er(5, 1.5, 1)


def test_labels():
    labels = factors.gen_labels(50, 3, 11)
    assert len(labels) == 50
    assert set(labels) <= {1, 2, 3}
    assert labels == factors.gen_labels(50, 3, 11)
    with pytest.raises(ValueError):
        factors.gen_labels(5, 0, 1)


@pytest.mark.parametrize("seed", range(5))
def test_trianglecapPreferentialAttachment(seed: int):
    g = factors.gen_trianglecap_pa(30, seed)
    assert g.n == 30
    assert not g.has_loops
    assert _connected(g)
    assert _max_edge_triangles(g) <= 1


def test_trianglecapTooSmall():
    with pytest.raises(ValueError):
        factors.gen_trianglecap_pa(1, 1)


@pytest.mark.parametrize("seed", range(3))
def test_reduceToTrianglecap(seed: int):
    source = factors.make_clique(7)
    reduced = factors.reduce_to_trianglecap(source, seed)
    assert _connected(reduced)
    assert _max_edge_triangles(reduced) <= 1
    assert set(reduced.edges()) <= set(source.edges())


def test_reduceKeepsCappedGraph():
    hub_free = factors.make_cycle(5)
    assert factors.reduce_to_trianglecap(hub_free, 1) == hub_free


def test_reduceDisconnected():
    with pytest.raises(GraphError):
        factors.reduce_to_trianglecap(graph.from_edges(4, [(1, 2), (3, 4)]), 1)


@pytest.mark.parametrize("n", [2, 3, 200])
def test_trianglecapSizes(n: int):
    g = factors.gen_trianglecap_pa(n, 11)
    assert g.n == n
    assert not g.has_loops
    assert _connected(g)
    assert _max_edge_triangles(g) <= 1


def test_trianglecapDeterministic():
    first = factors.gen_trianglecap_pa(50, 3)
    assert first == factors.gen_trianglecap_pa(50, 3)
    assert first != factors.gen_trianglecap_pa(50, 4)


def test_reduceHubCycleKeepsTree():
    reduced = factors.reduce_to_trianglecap(factors.make_hub_cycle(), 5)
    assert {(1, v) for v in range(2, 6)} <= set(reduced.edges())
    assert _connected(reduced)
    assert _max_edge_triangles(reduced) <= 1


@pytest.mark.parametrize("n", range(1, 13))
def test_cliqueVertexTriangles(n: int):
    counts = triangles.triangle_vertex_counts(factors.make_clique(n))
    assert counts.tolist() == [(n - 1) * (n - 2) // 2] * n
