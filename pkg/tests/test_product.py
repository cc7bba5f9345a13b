"""Tests for product handles, edge streaming and ground-truth queries"""

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

from PyKron import factors, product
from PyKron.graph import GraphError
from PyKron.product import BlockRange, ProductHandle
from PyKron.sparse import MaterializationRefused

K2 = factors.make_clique(2)
K3 = factors.make_clique(3)
K4 = factors.make_clique(4)
J2 = factors.make_clique(2, with_loops=True)
CYCLE = factors.make_cycle(3, directed=True)
RGB = K3.with_labels((1, 2, 3))


def _collect(
    handle: ProductHandle, blocks: BlockRange, canonical: bool = False
) -> list:
    emitted = []
    count = product.stream_edges(
        handle, blocks, lambda p, q: emitted.append((p, q)), canonical
    )
    assert count == len(emitted)
    return emitted


def test_handle():
    handle = ProductHandle(K3, J2)
    assert handle.n == 6
    assert not handle.directed
    assert not handle.labeled
    assert ProductHandle(RGB, K2).labeled
    assert ProductHandle(CYCLE, K2).directed


@pytest.mark.parametrize("right", [CYCLE, RGB])
def test_handleRightFactorRejected(right):
    with pytest.raises(GraphError):
        ProductHandle(K3, right)


def test_directedHandleHasNoUndirectedStats():
    with pytest.raises(GraphError):
        ProductHandle(CYCLE, K3).stats
    assert ProductHandle(CYCLE, K3).product_truss is None


@pytest.mark.parametrize(
    "text, blocks", [("2:3", BlockRange(2, 3)), ("4", BlockRange(4, 4))]
)
def test_blockRangeParse(text: str, blocks: BlockRange):
    assert BlockRange.parse(text) == blocks


def test_blockRangeInvalid():
    with pytest.raises(ValueError):
        BlockRange.parse("a:b")
    handle = ProductHandle(K3, K3)
    with pytest.raises(ValueError):
        BlockRange(2, 4).check(handle)
    with pytest.raises(ValueError):
        BlockRange(3, 2).check(handle)


def test_streamK2():
    handle = ProductHandle(K2, K2)
    full = BlockRange.full(handle)
    assert _collect(handle, full) == [(1, 4), (2, 3), (3, 2), (4, 1)]
    assert _collect(handle, full, canonical=True) == [(1, 4), (2, 3)]


def test_streamPartition():
    handle = ProductHandle(K3, J2)
    full = _collect(handle, BlockRange.full(handle))
    pieces = _collect(handle, BlockRange(1, 1)) + _collect(handle, BlockRange(2, 3))
    assert pieces == full
    assert len(full) == product.predicted_entry_count(handle, BlockRange.full(handle))
    assert product.predicted_entry_count(handle, BlockRange(2, 3)) == 16
    assert full == sorted(full)


def test_streamMatchesMaterialized():
    a = factors.gen_er(5, 0.5, 2, loops=True)
    b = factors.gen_er(4, 0.6, 3, loops=True)
    handle = ProductHandle(a, b)
    c = product.materialize_product(a, b)
    assert _collect(handle, BlockRange.full(handle)) == [
        (p, q) for p, q, _ in c.adj.entries()
    ]


def test_neighbors():
    assert product.neighbors(ProductHandle(K2, K2), 1) == [4]
    assert product.neighbors(ProductHandle(K3, J2), 1) == [3, 4, 5, 6]
    with pytest.raises(IndexError):
        product.neighbors(ProductHandle(K2, K2), 5)


def test_egonet():
    handle = ProductHandle(K4, K4)
    ego = product.egonet(handle, 1)
    assert len(ego.vertices) == 9
    assert ego.graph.edge_count() == 18
    assert ego.center == 1


def test_egonetLoopedRight():
    handle = ProductHandle(K3, J2)
    for p in range(1, 7):
        ego = product.egonet(handle, p)
        assert len(ego.vertices) == handle.stats.degrees[p]
        assert ego.graph.edge_count() == handle.stats.tri_vertex[p]


def test_egonetRefused():
    with pytest.raises(MaterializationRefused):
        product.egonet(ProductHandle(K4, K4), 1, max_neighbors=3)


def test_vertexGroundTruth():
    record = product.vertex_ground_truth(ProductHandle(K4, K4), 6)
    assert (record.left_vertex, record.right_vertex) == (2, 2)
    assert record.degree == 9
    assert record.triangles == 18
    assert record.label is None


def test_edgeGroundTruth():
    handle = ProductHandle(K4, K3)
    record = product.edge_ground_truth(handle, 1, 5)
    assert record.is_edge
    assert record.triangles == 2
    assert record.trussness == 4
    missing = product.edge_ground_truth(handle, 1, 2)
    assert not missing.is_edge
    assert missing.triangles == 0
    assert missing.trussness is None


def test_edgeGroundTruthWithoutTruss():
    record = product.edge_ground_truth(ProductHandle(K4, K4), 1, 6)
    assert record.triangles == 4
    assert record.trussness is None


def test_directedGroundTruth():
    handle = ProductHandle(CYCLE, K3)
    record = product.vertex_ground_truth(handle, 1)
    assert record.directed_types["st+"] == 2
    assert record.triangles == 2
    assert record.degree == 2
    assert record.directed_degrees == {"reciprocal": 0, "out": 2, "in": 2}

    # arc 1 -> 2 of the cycle with right edge (1, 2)
    edge = product.edge_ground_truth(handle, 1, 5)
    assert edge.is_edge
    assert edge.directed_types["+--"] == 1
    assert edge.triangles == 1


def test_labeledGroundTruth():
    handle = ProductHandle(RGB, K3)
    record = product.vertex_ground_truth(handle, 4)
    assert record.label == 2
    assert record.labeled_types == {
        "2:1,1": 0,
        "2:1,2": 0,
        "2:1,3": 2,
        "2:2,2": 0,
        "2:2,3": 0,
        "2:3,3": 0,
    }
    edge = product.edge_ground_truth(handle, 4, 2)
    assert edge.labeled_types == {"1,2:3": 1}


def test_materializeInheritsLabels():
    c = product.materialize_product(RGB, K2)
    assert c.labels == (1, 1, 2, 2, 3, 3)
    assert c.n == 6
    with pytest.raises(MaterializationRefused):
        product.materialize_product(K4, K4, max_vertices=15)


def test_egonetIdentitiesOnSampledVertices():
    a = factors.gen_er(6, 0.6, 21)
    b = factors.gen_er(5, 0.7, 22)
    handle = ProductHandle(a, b)
    generator = factors.rng(23)
    for p in generator.integers(1, handle.n + 1, size=100).tolist():
        ego = product.egonet(handle, p)
        assert len(product.neighbors(handle, p)) == handle.stats.degrees[p]
        assert len(ego.vertices) == handle.stats.degrees[p]
        assert ego.graph.edge_count() == handle.stats.tri_vertex[p]


def test_egonetWithLoopedCopy():
    a = factors.make_hub_cycle()
    handle = ProductHandle(a, a.with_loops())
    for p in range(1, handle.n + 1):
        ego = product.egonet(handle, p)
        assert len(ego.vertices) == handle.stats.degrees[p]
        assert ego.graph.edge_count() == handle.stats.tri_vertex[p]
