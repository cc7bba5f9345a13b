"""Named oracle-equivalence scenarios: formula results against brute force on
seeded random instances"""

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
from typing import Callable

import numpy as np

from . import directed, factors, kron_stats, labeled, oracle, product, truss
from .graph import Graph
from .sparse import (
    MATERIALIZE_MAX_ENTRIES,
    MATERIALIZE_MAX_VERTICES,
    SparseMatrix,
)

VALIDATE_PAIRS = 50
MAX_FACTOR_VERTICES = 8

logger = logging.getLogger(__name__)


class Divergence(AssertionError):
    pass


@dataclass(frozen=True)
class Limits:
    """Size caps for the brute-force oracle and for materialized products."""

    oracle_vertices: int = oracle.ORACLE_MAX_VERTICES
    max_vertices: int = MATERIALIZE_MAX_VERTICES
    max_entries: int = MATERIALIZE_MAX_ENTRIES


def validate(
    name: str,
    seed: int,
    pairs: int = VALIDATE_PAIRS,
    limits: Limits = Limits(),
) -> bool:
    """Run one named scenario.

    Args:
        name (str): Scenario name, a key of SCENARIOS
        seed (int): Seed of the instance generator
        pairs (int, optional): Random factor pairs per case. Defaults to 50.
        limits (Limits, optional): Oracle and materialization caps

    Raises:
        KeyError: Unknown scenario

    Returns:
        bool: True if every check matched; the first divergence is logged
    """
    if name not in SCENARIOS:
        raise KeyError(
            f"Unknown scenario '{name}', expected one of {', '.join(SCENARIOS)}"
        )
    generator = factors.rng(seed)
    logger.info(f"Running scenario {name} with seed {seed}")
    try:
        SCENARIOS[name](generator, pairs, limits)
    except Divergence as e:
        logger.error(f"{name}: {e}")
        return False
    logger.info(f"Scenario {name} passed")
    return True


def check_undirected_regimes(
    generator: np.random.Generator, pairs: int, limits: Limits
) -> None:
    for regime in kron_stats.LoopRegime:
        for i in range(pairs):
            a = _random_graph(generator, loops=regime is kron_stats.LoopRegime.BOTH)
            b = _random_graph(generator, loops=regime is not kron_stats.LoopRegime.NONE)
            _check_undirected_pair(a, b, limits, f"{regime.value} pair {i + 1}")
        logger.debug(f"Regime {regime.value}: {pairs} pairs matched")


def check_clique_identities(
    generator: np.random.Generator, pairs: int, limits: Limits
) -> None:
    for n_a in range(3, MAX_FACTOR_VERTICES + 1):
        for n_b in range(3, MAX_FACTOR_VERTICES + 1):
            k_a, k_b = factors.make_clique(n_a), factors.make_clique(n_b)
            j_a, j_b = factors.make_clique(n_a, True), factors.make_clique(n_b, True)
            for left, right, case in (
                (k_a, k_b, "K kron K"),
                (k_a, j_b, "K kron J"),
                (j_a, j_b, "J kron J"),
            ):
                _check_undirected_pair(left, right, limits, f"{case} {n_a}x{n_b}")

    stats = kron_stats.product_stats(factors.make_clique(4), factors.make_clique(4))
    _expect(stats.degrees[1] == 9, "K4 kron K4 degree")
    _expect(stats.tri_vertex[1] == 18, "K4 kron K4 vertex triangles")
    _expect(stats.tri_edge.entry(1, 6) == 4, "K4 kron K4 edge triangles")


def check_directed(
    generator: np.random.Generator, pairs: int, limits: Limits
) -> None:
    for i in range(pairs):
        a = _random_graph(generator, directed=True)
        b = _random_graph(generator, loops=bool(generator.integers(2)))
        where = f"pair {i + 1}"

        truth = oracle.brute_directed_census(a, limits.oracle_vertices)
        _check_census(
            dict(directed.directed_vertex_census(a).counts),
            directed.directed_edge_census(a),
            truth,
            a.n,
            f"factor of {where}",
        )

        c = product.materialize_product(a, b, limits.max_vertices, limits.max_entries)
        truth = oracle.brute_directed_census(c, limits.oracle_vertices)
        census = directed.product_directed_vertex(a, b)
        _check_census(
            {code: vector.materialize() for code, vector in census.counts.items()},
            directed.product_directed_edge(a, b),
            truth,
            c.n,
            f"product of {where}",
        )


def check_labeled(
    generator: np.random.Generator, pairs: int, limits: Limits
) -> None:
    for i in range(pairs):
        a = _random_graph(generator)
        a = a.with_labels(factors.gen_labels(a.n, 3, int(generator.integers(2**32))))
        b = _random_graph(generator, loops=bool(generator.integers(2)))
        c = product.materialize_product(a, b, limits.max_vertices, limits.max_entries)
        truth = oracle.brute_labeled_census(c, limits.oracle_vertices)
        zeros = [0] * c.n

        for tri_type in labeled.vertex_types(a.num_labels):
            counts = labeled.product_labeled_vertex(a, b, tri_type).materialize()
            expected = truth.vertex.get((tri_type.center, tri_type.others), zeros)
            _expect(
                counts.tolist() == expected,
                f"pair {i + 1} vertex type {tri_type.code}",
            )
        for tri_type in labeled.edge_types(a.num_labels):
            counts = labeled.product_labeled_edge(a, b, tri_type).materialize()
            key = (tri_type.first, tri_type.second, tri_type.opposite)
            _expect(
                _as_dict(counts) == truth.edge.get(key, {}),
                f"pair {i + 1} edge type {tri_type.code}",
            )


def check_truss_theorem(
    generator: np.random.Generator, pairs: int, limits: Limits
) -> None:
    for i in range(pairs):
        a = _random_graph(generator, max_n=10)
        b = factors.gen_trianglecap_pa(
            int(generator.integers(3, 31)), int(generator.integers(2**32))
        )
        decomposition = truss.product_truss(a, b)
        c = product.materialize_product(a, b, limits.max_vertices, limits.max_entries)
        truth = oracle.brute_truss(c, limits.oracle_vertices)
        for (p, q), value in truth.items():
            _expect(
                decomposition.trussness(p, q) == value,
                f"pair {i + 1} edge ({p}, {q}) trussness",
            )
        for kappa, size in decomposition.sizes().items():
            brute_size = sum(1 for value in truth.values() if value >= kappa)
            _expect(size == brute_size, f"pair {i + 1} size of the {kappa}-truss")

    try:
        truss.product_truss(factors.make_hub_cycle(), factors.make_hub_cycle())
    except truss.TrussPreconditionError:
        return
    raise Divergence("hub-cycle right factor was not rejected")


def check_counterexample(
    generator: np.random.Generator, pairs: int, limits: Limits
) -> None:
    report = truss.verify_counterexample()
    _expect(report.edge_histogram == {1: 32, 2: 64, 4: 32}, "edge triangle histogram")
    _expect(report.truss_sizes == {3: 128, 4: 80, 5: 0}, "truss sizes")
    _expect(report.triangles == 96, "triangle total")


def check_stream_partition(
    generator: np.random.Generator, pairs: int, limits: Limits
) -> None:
    for i in range(pairs):
        a = _random_graph(generator, loops=bool(generator.integers(2)))
        b = _random_graph(generator, loops=bool(generator.integers(2)))
        handle = product.ProductHandle(a, b)
        cuts = sorted(set(generator.integers(1, a.n + 1, size=3).tolist()) | {a.n})

        streamed, predicted, lo = [], 0, 1
        for hi in cuts:
            blocks = product.BlockRange(lo, hi)
            emitted = product.stream_edges(
                handle, blocks, lambda p, q: streamed.append((p, q))
            )
            _expect(
                emitted == product.predicted_entry_count(handle, blocks),
                f"pair {i + 1} rows {lo}:{hi} emission count",
            )
            predicted += emitted
            lo = hi + 1

        c = product.materialize_product(a, b, limits.max_vertices, limits.max_entries)
        expected = [(p, q) for p, q, _ in c.adj.entries()]
        _expect(streamed == expected, f"pair {i + 1} concatenated stream")
        _expect(predicted == len(expected), f"pair {i + 1} total count")

        canonical = []
        product.stream_edges(
            handle,
            product.BlockRange.full(handle),
            lambda p, q: canonical.append((p, q)),
            True,
        )
        _expect(
            canonical == [(p, q) for p, q in expected if p <= q],
            f"pair {i + 1} canonical stream",
        )


def check_egonets(
    generator: np.random.Generator, pairs: int, limits: Limits
) -> None:
    for i in range(pairs):
        a = _random_graph(generator)
        b = _random_graph(generator, loops=bool(generator.integers(2)))
        handle = product.ProductHandle(a, b)
        for p in generator.integers(1, handle.n + 1, size=5).tolist():
            ego = product.egonet(handle, p)
            _expect(
                len(ego.vertices) == handle.stats.degrees[p],
                f"pair {i + 1} vertex {p} egonet size",
            )
            _expect(
                ego.graph.edge_count() == handle.stats.tri_vertex[p],
                f"pair {i + 1} vertex {p} egonet edges",
            )


SCENARIOS: dict[str, Callable[[np.random.Generator, int, Limits], None]] = {
    "undirected-all-regimes": check_undirected_regimes,
    "clique-identities": check_clique_identities,
    "directed": check_directed,
    "labeled": check_labeled,
    "truss-theorem": check_truss_theorem,
    "counterexample": check_counterexample,
    "stream-partition": check_stream_partition,
    "egonet": check_egonets,
}


def _check_undirected_pair(a: Graph, b: Graph, limits: Limits, where: str) -> None:
    stats = kron_stats.product_stats(a, b)
    c = product.materialize_product(a, b, limits.max_vertices, limits.max_entries)
    truth = oracle.brute_triangles(c, limits.oracle_vertices)
    degrees = stats.degrees.materialize().tolist()
    _expect(degrees == c.degrees().tolist(), f"{where} degrees")
    per_vertex = stats.tri_vertex.materialize().tolist()
    _expect(per_vertex == truth.per_vertex, f"{where} vertex triangles")
    per_edge = _as_dict(stats.tri_edge.materialize())
    _expect(per_edge == truth.per_edge, f"{where} edge triangles")
    _expect(stats.totals.triangles == truth.total, f"{where} triangle total")
    _expect(stats.totals.edges == c.edge_count(), f"{where} edge total")
    _expect(stats.totals.loops == int(c.loops.sum()), f"{where} loop total")


def _check_census(
    vertex: dict,
    edge: directed.EdgeCensus,
    truth: oracle.BruteCensus,
    n: int,
    where: str,
) -> None:
    _expect(set(truth.vertex) <= set(directed.VERTEX_TYPES), f"{where} vertex codes")
    _expect(
        set(truth.edge) <= set(directed.EDGE_TYPES) | set(directed.EDGE_ALIASES),
        f"{where} edge codes",
    )
    for code in directed.VERTEX_TYPES:
        counts = [int(value) for value in vertex[code]]
        expected = truth.vertex.get(code, [0] * n)
        _expect(counts == expected, f"{where} vertex type {code}")
    for code in directed.EDGE_TYPES + tuple(directed.EDGE_ALIASES):
        counts = edge[code]
        if not isinstance(counts, SparseMatrix):
            counts = counts.materialize()
        expected = truth.edge.get(code, {})
        _expect(_as_dict(counts) == expected, f"{where} edge type {code}")


def _random_graph(
    generator: np.random.Generator,
    directed: bool = False,
    loops: bool = False,
    max_n: int = MAX_FACTOR_VERTICES,
) -> Graph:
    n = int(generator.integers(2, max_n + 1))
    edge_prob = float(generator.uniform(0.2, 0.9))
    seed = int(generator.integers(2**32))
    graph = factors.gen_er(n, edge_prob, seed, directed, loops)
    if loops and not graph.has_loops:
        first = np.zeros(n, dtype=np.int64)
        first[0] = 1
        graph = Graph(graph.adj + SparseMatrix.diagonal(first), directed=directed)
    return graph


def _as_dict(matrix: SparseMatrix) -> dict[tuple[int, int], int]:
    return {(i, j): value for i, j, value in matrix.entries()}


def _expect(condition: bool, what: str) -> None:
    if not condition:
        raise Divergence(f"first divergence at {what}")
