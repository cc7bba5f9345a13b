"""Streaming, neighborhoods and pointwise ground truth of C = A (Kronecker) B,
all computed from the factors"""

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

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Optional

from . import directed, kron_stats, labeled, truss
from .graph import Graph, GraphError, from_edges
from .sparse import (
    MATERIALIZE_MAX_ENTRIES,
    MATERIALIZE_MAX_VERTICES,
    IndexMap,
    MaterializationRefused,
    kron_materialize,
)

EGONET_MAX_NEIGHBORS = 10**5

logger = logging.getLogger(__name__)

EdgeSink = Callable[[int, int], None]


@dataclass(frozen=True, eq=False)
class ProductHandle:
    """C = left kron right, held as its two factors. Factor statistics are
    computed on first use and cached."""

    left: Graph
    right: Graph

    def __post_init__(self):
        if self.right.directed:
            raise GraphError("Right factor must be undirected")
        if self.right.labels is not None:
            raise GraphError("Right factor must be unlabeled")

    @property
    def n(self) -> int:
        return self.left.n * self.right.n

    @property
    def directed(self) -> bool:
        return self.left.directed

    @property
    def labeled(self) -> bool:
        return self.left.labels is not None and not self.left.directed

    @cached_property
    def index(self) -> IndexMap:
        return IndexMap(self.right.n)

    @cached_property
    def right_terms(self) -> kron_stats.FactorTerms:
        return kron_stats.FactorTerms.of(self.right)

    @cached_property
    def stats(self) -> kron_stats.ProductStats:
        """Undirected degrees, triangle counts and totals.

        Raises:
            GraphError: Left factor is directed
            LoopRegimeError: Only the left factor has loops
        """
        if self.directed:
            raise GraphError("Undirected statistics need an undirected left factor")
        return kron_stats.product_stats(self.left, self.right)

    @cached_property
    def directed_vertex(self) -> directed.VertexCensus:
        return directed.product_directed_vertex(self.left, self.right)

    @cached_property
    def directed_edge(self) -> directed.EdgeCensus:
        return directed.product_directed_edge(self.left, self.right)

    @cached_property
    def directed_degrees(self) -> directed.DirectedDegrees:
        return directed.product_directed_degrees(self.left, self.right)

    @cached_property
    def labeled_vertex(self) -> dict:
        return labeled.labeled_vertex_census(self.left)

    @cached_property
    def labeled_edge(self) -> dict:
        return labeled.labeled_edge_census(self.left)

    @cached_property
    def product_truss(self) -> Optional[truss.ProductTruss]:
        """Product truss decomposition, None when the factors do not allow it."""
        if self.directed:
            return None
        try:
            return truss.product_truss(self.left, self.right)
        except (GraphError, truss.TrussPreconditionError) as e:
            logger.debug(f"No product truss decomposition: {e}")
            return None


@dataclass(frozen=True)
class BlockRange:
    """Rows lo..hi of the left factor, inclusive and 1-based."""

    lo: int
    hi: int

    @classmethod
    def parse(cls, text: str) -> "BlockRange":
        """Parse 'lo:hi' or a single row 'i'."""
        try:
            lo, _, hi = text.partition(":")
            return cls(int(lo), int(hi or lo))
        except ValueError:
            raise ValueError(f"Invalid block range '{text}', expected lo:hi") from None

    @classmethod
    def full(cls, handle: ProductHandle) -> "BlockRange":
        return cls(1, handle.left.n)

    def check(self, handle: ProductHandle) -> None:
        if not 1 <= self.lo <= self.hi <= handle.left.n:
            raise ValueError(
                f"Block range {self.lo}:{self.hi} outside 1:{handle.left.n}"
            )


@dataclass(frozen=True, eq=False)
class Egonet:
    """Subgraph induced on the neighbors of center; local vertex v is product
    vertex vertices[v - 1]."""

    center: int
    vertices: list[int]
    graph: Graph


@dataclass(frozen=True)
class VertexRecord:
    vertex: int
    left_vertex: int
    right_vertex: int
    degree: int
    triangles: int
    label: Optional[int] = None
    directed_degrees: dict[str, int] = field(default_factory=dict)
    directed_types: dict[str, int] = field(default_factory=dict)
    labeled_types: dict[str, int] = field(default_factory=dict)


@dataclass(frozen=True)
class EdgeRecord:
    source: int
    target: int
    is_edge: bool
    triangles: int
    trussness: Optional[int] = None
    directed_types: dict[str, int] = field(default_factory=dict)
    labeled_types: dict[str, int] = field(default_factory=dict)


def stream_edges(
    handle: ProductHandle,
    blocks: BlockRange,
    sink: EdgeSink,
    canonical: bool = False,
) -> int:
    """Emit every stored entry (p, q) of C whose row block lies in blocks:
    for each left row i, each right row k, each left neighbor j and each right
    neighbor l, emit (join(i, k), join(j, l)). This is row-major order in C.

    Args:
        handle (ProductHandle): The product
        blocks (BlockRange): Left-factor rows to cover
        sink (EdgeSink): Called once per entry
        canonical (bool, optional): Emit only p <= q. Defaults to False.

    Raises:
        ValueError: Range outside the left factor

    Returns:
        int: Entries emitted
    """
    blocks.check(handle)
    n_right = handle.right.n
    right_rows = [handle.right.adj.row(k).tolist() for k in range(1, n_right + 1)]
    emitted = 0

    for i in range(blocks.lo, blocks.hi + 1):
        left_row = handle.left.adj.row(i).tolist()
        for k, right_row in enumerate(right_rows, start=1):
            p = (i - 1) * n_right + k
            for j in left_row:
                base = (j - 1) * n_right
                for l in right_row:
                    q = base + l
                    if canonical and q < p:
                        continue
                    sink(p, q)
                    emitted += 1

    logger.debug(f"Streamed {emitted} entries for rows {blocks.lo}:{blocks.hi}")
    return emitted


def predicted_entry_count(handle: ProductHandle, blocks: BlockRange) -> int:
    """Entries stream_edges emits for blocks in full mode."""
    blocks.check(handle)
    indptr = handle.left.adj.csr.indptr
    left_entries = int(indptr[blocks.hi]) - int(indptr[blocks.lo - 1])
    return left_entries * handle.right.adj.nnz


def neighbors(handle: ProductHandle, p: int) -> list[int]:
    """Sorted out-neighbors of p, p itself excluded.

    Raises:
        IndexError: p outside 1..n_C
    """
    _check_vertex(handle, p)
    i, k = handle.index.split(p)
    n_right = handle.right.n
    right_row = handle.right.adj.row(k).tolist()
    return [
        q
        for j in handle.left.adj.row(i).tolist()
        for q in ((j - 1) * n_right + l for l in right_row)
        if q != p
    ]


def egonet(
    handle: ProductHandle, p: int, max_neighbors: int = EGONET_MAX_NEIGHBORS
) -> Egonet:
    """Subgraph induced on the neighbors of p, adjacency tested through the
    factors. For an undirected product its edge count is the triangle count
    at p.

    Raises:
        IndexError: p outside 1..n_C
        MaterializationRefused: p has more than max_neighbors neighbors
    """
    _check_vertex(handle, p)
    i, k = handle.index.split(p)
    bound = len(handle.left.adj.row(i)) * len(handle.right.adj.row(k))
    if bound > max_neighbors:
        raise MaterializationRefused(
            f"Vertex {p} has up to {bound} neighbors, limit {max_neighbors}"
        )
    vertices = neighbors(handle, p)
    split = [handle.index.split(q) for q in vertices]
    edges = []
    for u, (iu, ku) in enumerate(split, start=1):
        for v, (iv, kv) in enumerate(split, start=1):
            if u == v or (not handle.directed and v < u):
                continue
            if handle.left.adj.entry(iu, iv) and handle.right.adj.entry(ku, kv):
                edges.append((u, v))
    graph = from_edges(len(vertices), edges, directed=handle.directed)
    logger.debug(f"Egonet of {p}: {len(vertices)} vertices, {len(edges)} edges")
    return Egonet(p, vertices, graph)


def vertex_ground_truth(handle: ProductHandle, p: int) -> VertexRecord:
    """Exact statistics of product vertex p from factor lookups."""
    _check_vertex(handle, p)
    i, k = handle.index.split(p)

    if handle.directed:
        types = {
            code: handle.directed_vertex.counts[code].at(i, k)
            for code in directed.VERTEX_TYPES
        }
        degrees = handle.directed_degrees
        return VertexRecord(
            vertex=p,
            left_vertex=i,
            right_vertex=k,
            degree=_out_degree(handle, i, k),
            triangles=sum(types.values()),
            directed_degrees={
                "reciprocal": degrees.reciprocal.at(i, k),
                "out": degrees.out_degree.at(i, k),
                "in": degrees.in_degree.at(i, k),
            },
            directed_types=types,
        )

    stats = handle.stats
    label, labeled_types = None, {}
    if handle.labeled:
        label = handle.left.labels[i - 1]
        cube = handle.right_terms.diag_cube
        labeled_types = {
            tri_type.code: int(counts[i - 1]) * int(cube[k - 1])
            for tri_type, counts in handle.labeled_vertex.items()
            if tri_type.center == label
        }
    return VertexRecord(
        vertex=p,
        left_vertex=i,
        right_vertex=k,
        degree=stats.degrees.at(i, k),
        triangles=stats.tri_vertex.at(i, k),
        label=label,
        labeled_types=labeled_types,
    )


def edge_ground_truth(handle: ProductHandle, p: int, q: int) -> EdgeRecord:
    """Exact statistics of the product position (p, q) from factor lookups."""
    _check_vertex(handle, p)
    _check_vertex(handle, q)
    i, k = handle.index.split(p)
    j, l = handle.index.split(q)
    is_edge = bool(handle.left.adj.entry(i, j) and handle.right.adj.entry(k, l))

    if handle.directed:
        types = {
            code: handle.directed_edge.counts[code].at(i, j, k, l)
            for code in directed.EDGE_TYPES
        }
        # a reciprocal central edge is stored at one orientation only
        types.update(
            {
                alias: handle.directed_edge.counts[code].at(j, i, l, k)
                for alias, code in directed.EDGE_ALIASES.items()
            }
        )
        return EdgeRecord(
            source=p,
            target=q,
            is_edge=is_edge,
            triangles=sum(types.values()),
            directed_types=types,
        )

    labeled_types = {}
    if handle.labeled:
        square = handle.right_terms.hadamard_square
        factor = square.entry(k, l)
        labeled_types = {
            tri_type.code: counts.entry(i, j) * factor
            for tri_type, counts in handle.labeled_edge.items()
            if counts.entry(i, j)
        }
    trussness = None
    if is_edge and handle.product_truss is not None and p != q:
        trussness = handle.product_truss.at(i, j, k, l)
    return EdgeRecord(
        source=p,
        target=q,
        is_edge=is_edge,
        triangles=handle.stats.tri_edge.at(i, j, k, l),
        trussness=trussness,
        labeled_types=labeled_types,
    )


def _out_degree(handle: ProductHandle, i: int, k: int) -> int:
    loop = handle.left.adj.entry(i, i) * handle.right.adj.entry(k, k)
    return len(handle.left.adj.row(i)) * len(handle.right.adj.row(k)) - loop


def _check_vertex(handle: ProductHandle, p: int) -> None:
    if not 1 <= p <= handle.n:
        raise IndexError(f"Product vertex {p} outside 1..{handle.n}")


def materialize_product(
    a: Graph,
    b: Graph,
    max_vertices: int = MATERIALIZE_MAX_VERTICES,
    max_entries: int = MATERIALIZE_MAX_ENTRIES,
) -> Graph:
    """C = A kron B as an explicit graph, labels inherited from A.

    Raises:
        MaterializationRefused: Product exceeds the guard
    """
    adj = kron_materialize(
        a.adj, b.adj, max_vertices=max_vertices, max_entries=max_entries
    )
    labels = None
    if a.labels is not None:
        labels = tuple(label for label in a.labels for _ in range(b.n))
    return Graph(adj, directed=a.directed or b.directed, labels=labels)
