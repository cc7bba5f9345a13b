"""Factor graph constructors: cliques, fixtures, seeded random graphs, and the
two ways of building factors whose edges sit in at most one triangle"""

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

import numpy as np
import scipy.sparse.csgraph

from . import triangles
from .graph import Graph, GraphError, from_edges, require_undirected
from .sparse import SparseMatrix

logger = logging.getLogger(__name__)


def rng(seed: int) -> np.random.Generator:
    """The project's random source: numpy's PCG64 bit generator seeded with a
    64-bit unsigned integer."""
    return np.random.Generator(np.random.PCG64(seed))


def make_clique(n: int, with_loops: bool = False) -> Graph:
    """K_n, or J_n when with_loops is set."""
    if n < 1:
        raise ValueError(f"Clique size must be at least 1, got {n}")
    adj = SparseMatrix.ones(n) if with_loops else SparseMatrix.clique(n)
    return Graph(adj)


def make_hub_cycle() -> Graph:
    """4-cycle 2-3-4-5 plus hub vertex 1: K_5 without edges {2,4} and {3,5}."""
    cycle = [(2, 3), (3, 4), (4, 5), (5, 2)]
    hub = [(1, v) for v in range(2, 6)]
    return from_edges(5, hub + cycle)


def make_path(n: int) -> Graph:
    return from_edges(n, [(i, i + 1) for i in range(1, n)])


def make_star(n: int) -> Graph:
    """Vertex 1 joined to vertices 2..n."""
    return from_edges(n, [(1, v) for v in range(2, n + 1)])


def make_cycle(n: int, directed: bool = False) -> Graph:
    if n < 3:
        raise ValueError(f"Cycle needs at least 3 vertices, got {n}")
    arcs = [(i, i % n + 1) for i in range(1, n + 1)]
    return from_edges(n, arcs, directed=directed)


def gen_er(
    n: int,
    edge_prob: float,
    seed: int,
    directed: bool = False,
    loops: bool = False,
) -> Graph:
    """Seeded Erdos-Renyi graph: every admissible position is kept independently
    with probability edge_prob.

    Args:
        n (int): Vertex count
        edge_prob (float): Probability in [0, 1]
        seed (int): Generator seed
        directed (bool, optional): Draw each arc separately. Defaults to False.
        loops (bool, optional): Allow self loops. Defaults to False.

    Raises:
        ValueError: edge_prob outside [0, 1]

    Returns:
        Graph: The sampled graph
    """
    if not 0 <= edge_prob <= 1:
        raise ValueError(f"Edge probability must be in [0, 1], got {edge_prob}")
    draws = rng(seed).random((n, n)) < edge_prob
    if not directed:
        draws = np.triu(draws)
        draws = draws | draws.T
    if not loops:
        np.fill_diagonal(draws, False)
    adj = SparseMatrix(scipy.sparse.csr_matrix(draws.astype(np.int64)))
    return Graph(adj, directed=directed)


def gen_labels(n: int, num_labels: int, seed: int) -> tuple[int, ...]:
    """Uniform labels in 1..num_labels for n vertices."""
    if num_labels < 1:
        raise ValueError(f"Need at least one label, got {num_labels}")
    return tuple(int(q) for q in rng(seed).integers(1, num_labels + 1, size=n))


def gen_trianglecap_pa(n_target: int, seed: int) -> Graph:
    """Preferential-attachment graph whose edges sit in at most one triangle.

    Start from the edge (1, 2). Each new vertex u picks an existing edge (i, j)
    uniformly and attaches to a uniform endpoint v. If (i, j) is in no
    triangle yet, u also attaches to the other endpoint, closing a triangle.

    Args:
        n_target (int): Final vertex count, at least 2
        seed (int): Generator seed

    Raises:
        ValueError: n_target below 2

    Returns:
        Graph: Connected, loop-free, undirected graph with Delta <= 1
    """
    if n_target < 2:
        raise ValueError(f"Need at least 2 vertices, got {n_target}")
    generator = rng(seed)
    edges = [(1, 2)]
    in_triangle = {(1, 2): False}

    for u in range(3, n_target + 1):
        i, j = edges[int(generator.integers(len(edges)))]
        v, w = (i, j) if generator.integers(2) == 0 else (j, i)
        edges.append((u, v))
        in_triangle[(u, v)] = False
        if not in_triangle[(i, j)]:
            edges.append((u, w))
            for edge in ((i, j), (u, v), (u, w)):
                in_triangle[edge] = True

    logger.debug(f"Generated {len(edges)} edges on {n_target} vertices")
    return from_edges(n_target, edges)


def reduce_to_trianglecap(graph: Graph, seed: int) -> Graph:
    """Delete edges until every edge sits in at most one triangle, keeping a
    breadth-first spanning tree from vertex 1 intact.

    Args:
        graph (Graph): Undirected, loop-free, connected graph
        seed (int): Generator seed for the deletion order

    Raises:
        GraphError: Graph is directed, has loops, or is disconnected

    Returns:
        Graph: Connected spanning subgraph with Delta <= 1
    """
    require_undirected(graph, allow_loops=False)
    components, _ = scipy.sparse.csgraph.connected_components(
        graph.adj.csr, directed=False
    )
    if components > 1:
        raise GraphError(f"Graph has {components} components, expected 1")

    _, predecessors = scipy.sparse.csgraph.breadth_first_order(
        graph.adj.csr, 0, directed=False, return_predecessors=True
    )
    tree = {
        _key(v + 1, int(parent) + 1)
        for v, parent in enumerate(predecessors)
        if parent >= 0
    }
    neighbors = {v: set(graph.adj.row(v).tolist()) for v in range(1, graph.n + 1)}
    support = {
        _key(i, j): count
        for i, j, count in triangles.triangle_edge_counts(graph).entries()
        if i < j
    }
    generator = rng(seed)
    deleted = 0

    while True:
        over = sorted(edge for edge, count in support.items() if count >= 2)
        if not over:
            break
        candidates = [edge for edge in over if edge not in tree]
        if not candidates:
            # every over-full edge is a tree edge; each of its triangles has a
            # non-tree edge, which is deleted instead
            i, j = over[int(generator.integers(len(over)))]
            candidates = sorted(
                edge
                for w in neighbors[i] & neighbors[j]
                for edge in (_key(i, w), _key(j, w))
                if edge not in tree
            )
        i, j = candidates[int(generator.integers(len(candidates)))]
        for w in neighbors[i] & neighbors[j]:
            support[_key(i, w)] -= 1
            support[_key(j, w)] -= 1
        neighbors[i].discard(j)
        neighbors[j].discard(i)
        support.pop(_key(i, j), None)
        deleted += 1

    logger.info(f"Deleted {deleted} edges to cap triangle participation at 1")
    kept = [(i, j) for i in neighbors for j in neighbors[i] if i < j]
    return from_edges(graph.n, kept, labels=graph.labels)


def _key(i: int, j: int) -> tuple[int, int]:
    return (i, j) if i < j else (j, i)
