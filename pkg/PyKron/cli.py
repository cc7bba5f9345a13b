"""CLI sub-utilities"""

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

import argparse
import contextlib
import dataclasses
import json
import logging
import sys
from typing import Iterator, Optional, TextIO

from . import (
    config,
    directed,
    factors,
    graph_io,
    labeled,
    manifest,
    product,
    triangles,
    truss,
    validation,
)
from .graph import Graph

FACTOR_KINDS = [
    "clique",
    "clique-loops",
    "hub-cycle",
    "path",
    "star",
    "cycle",
    "directed-cycle",
    "er",
    "er-directed",
    "trianglecap-pa",
    "trianglecap-reduce",
]

logger = logging.getLogger(__name__)


class CLI:
    """Command line application interface. Parses arguments and runs utilities."""

    def __init__(self, args: list[str]) -> None:
        """Process command line arguments and generate a config object.

        Args:
            args (list[str]): Raw CLI arguments
        """
        parser = argparse.ArgumentParser(
            prog="pykron",
            description="Exact triangle statistics and edge streams of Kronecker "
            "product graphs, computed from their factors.",
        )
        parser.add_argument("-c", "--config", help="Config file to load")
        parser.add_argument(
            "-L", "--log-level", help="Application output logging level"
        )
        parser.add_argument("--max-vertices", type=int, help="Materialization guard")
        parser.add_argument("--max-entries", type=int, help="Materialization guard")
        parser.add_argument(
            "--egonet-max-neighbors", type=int, help="Largest egonet to build"
        )
        parser.add_argument(
            "--oracle-max-vertices", type=int, help="Largest brute-force instance"
        )
        commands = parser.add_subparsers(dest="command", required=True)

        gen = commands.add_parser("gen-factor", help="Generate a factor graph")
        gen.add_argument("kind", choices=FACTOR_KINDS)
        gen.add_argument("-n", "--n", type=int, default=5, help="Vertex count")
        gen.add_argument("-s", "--seed", type=int, help="Generator seed")
        gen.add_argument(
            "-p", "--prob", type=float, default=0.3, help="Edge probability"
        )
        gen.add_argument("-i", "--input", help="Graph to reduce (trianglecap-reduce)")
        gen.add_argument("--num-labels", type=int, help="Also draw random labels")
        gen.add_argument("--labels-out", help="Where to write the random labels")
        gen.add_argument("-o", "--output", help="Output edge list (default stdout)")

        stats = commands.add_parser("stats", help="Triangle statistics of a graph")
        _add_load_arguments(stats)
        stats.add_argument("graph", help="Edge list file")
        stats.add_argument("--labels", help="Label file; prints the labeled census")
        stats.add_argument(
            "--edges", action="store_true", help="Per-edge instead of per-vertex"
        )
        stats.add_argument(
            "--method",
            choices=triangles.METHODS,
            default="wedge",
            help="Counting method",
        )
        stats.add_argument("-o", "--output", help="Output TSV (default stdout)")

        kron = commands.add_parser("kron-manifest", help="Describe A kron B")
        _add_load_arguments(kron)
        kron.add_argument("left", help="Edge list of A")
        kron.add_argument("right", help="Edge list of B (undirected)")
        kron.add_argument("--labels", help="Label file of A")
        kron.add_argument("-s", "--seed", type=int, action="append", dest="seeds")
        kron.add_argument("-o", "--output", required=True, help="Manifest to write")

        edges = commands.add_parser("kron-edges", help="Stream product edges")
        edges.add_argument("manifest")
        edges.add_argument("-b", "--blocks", help="Rows lo:hi of A (default all)")
        edges.add_argument(
            "--canonical", action="store_true", help="Only p <= q for each pair"
        )
        edges.add_argument("-o", "--output", help="Output edge list (default stdout)")

        query = commands.add_parser("kron-query", help="Ground truth at product ids")
        query.add_argument("manifest")
        query.add_argument("-v", "--vertex", type=int, action="append", default=[])
        query.add_argument(
            "-e", "--edge", type=int, nargs=2, action="append", default=[]
        )

        ego = commands.add_parser("egonet", help="Egonet of a product vertex")
        ego.add_argument("manifest")
        ego.add_argument("vertex", type=int)
        ego.add_argument("-o", "--output", help="Output edge list (default stdout)")

        truss_parser = commands.add_parser("truss", help="Trussness of every edge")
        _add_load_arguments(truss_parser)
        truss_parser.add_argument("graph", nargs="?", help="Edge list file")
        truss_parser.add_argument("-m", "--manifest", help="Product manifest instead")
        truss_parser.add_argument("-b", "--blocks", help="Rows lo:hi of A (manifest)")
        truss_parser.add_argument("-o", "--output", help="Output (default stdout)")

        check = commands.add_parser("validate", help="Run an oracle scenario")
        check.add_argument("scenario", choices=["all", *validation.SCENARIOS])
        check.add_argument("-s", "--seed", type=int, help="Scenario seed")
        check.add_argument("--validate-pairs", type=int, help="Random pairs per case")

        self.parsed = parser.parse_args(args[1:])
        self.config = config.Config(vars(self.parsed))

    def run(self) -> int:
        """Run the selected command.

        Returns:
            int: 0 on success, 1 if a validation scenario failed
        """
        command = self.parsed.command.replace("-", "_")
        return getattr(self, command)() or 0

    def gen_factor(self) -> int:
        """Write a generated factor as an edge list."""
        args, seed = self.parsed, self.config.seed
        kinds = {
            "clique": lambda: factors.make_clique(args.n),
            "clique-loops": lambda: factors.make_clique(args.n, with_loops=True),
            "hub-cycle": factors.make_hub_cycle,
            "path": lambda: factors.make_path(args.n),
            "star": lambda: factors.make_star(args.n),
            "cycle": lambda: factors.make_cycle(args.n),
            "directed-cycle": lambda: factors.make_cycle(args.n, directed=True),
            "er": lambda: factors.gen_er(args.n, args.prob, seed),
            "er-directed": lambda: factors.gen_er(
                args.n, args.prob, seed, directed=True
            ),
            "trianglecap-pa": lambda: factors.gen_trianglecap_pa(args.n, seed),
            "trianglecap-reduce": lambda: factors.reduce_to_trianglecap(
                graph_io.load_edge_list(_required(args.input, "--input")), seed
            ),
        }
        graph = kinds[args.kind]()
        with _output(args.output) as stream:
            written = graph_io.write_edge_list(graph, stream)
        logger.info(
            f"Generated {args.kind} factor: {graph.n} vertices, {written} edges"
        )

        if args.num_labels:
            labels = factors.gen_labels(graph.n, args.num_labels, seed)
            graph_io.save_labels(labels, _required(args.labels_out, "--labels-out"))
        return 0

    def stats(self) -> int:
        """Print per-vertex or per-edge triangle statistics as TSV."""
        args = self.parsed
        graph = self._load(args.graph, args.labels)
        with _output(args.output) as stream:
            if graph.labels is not None:
                _labeled_report(graph, stream, args.edges)
            elif graph.directed:
                _directed_report(graph, stream, args.edges)
            else:
                _undirected_report(graph, stream, args.edges, args.method)
        return 0

    def kron_manifest(self) -> int:
        """Write the manifest of A kron B with its exact totals."""
        args = self.parsed
        a = self._load(args.left, args.labels)
        b = graph_io.load_edge_list(
            args.right, strip_loops=args.strip_loops, zero_based=args.zero_based
        )
        refs = [
            manifest.factor_ref(
                path,
                args.output,
                graph,
                strip_loops=args.strip_loops,
                zero_based=args.zero_based,
                labels_path=labels_path,
            )
            for path, graph, labels_path in (
                (args.left, a, args.labels),
                (args.right, b, None),
            )
        ]
        result = manifest.build_manifest(
            *refs, a, b, seeds=args.seeds or [self.config.seed]
        )
        result.save(args.output)
        print(
            f"vertices {result.vertices}\nedges {result.edges}\n"
            f"loops {result.loops}\ntriangles {result.triangles}"
        )
        return 0

    def kron_edges(self) -> int:
        """Stream product edges of a row range."""
        args = self.parsed
        handle = self._handle(args.manifest)
        blocks = _blocks(args.blocks, handle)
        with _output(args.output) as stream:
            emitted = product.stream_edges(
                handle, blocks, lambda p, q: stream.write(f"{p} {q}\n"), args.canonical
            )
        logger.info(f"Streamed {emitted} edges for rows {blocks.lo}:{blocks.hi}")
        return 0

    def kron_query(self) -> int:
        """Print one JSON record per queried vertex or edge."""
        args = self.parsed
        handle = self._handle(args.manifest)
        for p in args.vertex:
            record = product.vertex_ground_truth(handle, p)
            print(json.dumps(dataclasses.asdict(record), sort_keys=True))
        for p, q in args.edge:
            record = product.edge_ground_truth(handle, p, q)
            print(json.dumps(dataclasses.asdict(record), sort_keys=True))
        return 0

    def egonet(self) -> int:
        """Print the egonet edges of a product vertex with product ids."""
        args = self.parsed
        handle = self._handle(args.manifest)
        ego = product.egonet(handle, args.vertex, self.config.egonet_max_neighbors)
        with _output(args.output) as stream:
            for u, v in ego.graph.edges():
                stream.write(f"{ego.vertices[u - 1]} {ego.vertices[v - 1]}\n")
        logger.info(
            f"Egonet of {args.vertex}: {len(ego.vertices)} vertices, "
            f"{ego.graph.edge_count()} edges"
        )
        return 0

    def truss(self) -> int:
        """Print "u v trussness" for every edge of a graph or product."""
        args = self.parsed
        if args.manifest:
            handle = self._handle(args.manifest)
            decomposition = truss.product_truss(handle.left, handle.right)
            blocks = _blocks(args.blocks, handle)
            with _output(args.output) as stream:
                product.stream_edges(
                    handle,
                    blocks,
                    lambda p, q: stream.write(
                        f"{p} {q} {decomposition.trussness(p, q)}\n"
                    ),
                    canonical=True,
                )
            return 0

        graph = self._load(_required(args.graph, "graph or --manifest"))
        decomposition = truss.truss_decompose(graph)
        with _output(args.output) as stream:
            for (i, j), value in sorted(decomposition.trussness.items()):
                stream.write(f"{i} {j} {value}\n")
        logger.info(f"Truss sizes: {decomposition.sizes()}")
        return 0

    def validate(self) -> int:
        """Run oracle scenarios, print PASS/FAIL per scenario.

        Returns:
            int: 0 if every scenario passed, 1 otherwise
        """
        names = (
            list(validation.SCENARIOS)
            if self.parsed.scenario == "all"
            else [self.parsed.scenario]
        )
        failed = 0
        for name in names:
            passed = validation.validate(
                name,
                self.config.seed,
                self.config.validate_pairs,
                validation.Limits(
                    self.config.oracle_max_vertices,
                    self.config.max_vertices,
                    self.config.max_entries,
                ),
            )
            print(f"{'PASS' if passed else 'FAIL'} {name}")
            failed += not passed
        return 1 if failed else 0

    def _load(self, path: str, labels_path: Optional[str] = None) -> Graph:
        args = self.parsed
        graph = graph_io.load_edge_list(
            path,
            n=args.n,
            directed=args.directed,
            strip_loops=args.strip_loops,
            zero_based=args.zero_based,
        )
        if labels_path:
            graph = graph.with_labels(graph_io.load_labels(labels_path, graph.n))
        return graph

    def _handle(self, path: str) -> product.ProductHandle:
        left, right = manifest.Manifest.load(path).open_factors(path)
        return product.ProductHandle(left, right)


def _add_load_arguments(parser: argparse.ArgumentParser) -> None:
    kind = parser.add_mutually_exclusive_group()
    kind.add_argument("--directed", action="store_true", help="Keep arcs as given")
    kind.add_argument(
        "--undirected",
        dest="directed",
        action="store_false",
        help="Symmetrize on load (default)",
    )
    parser.add_argument("--strip-loops", action="store_true", help="Drop self loops")
    parser.add_argument(
        "--zero-based", action="store_true", help="Ids start at 0 in the file"
    )
    parser.add_argument("--n", type=int, help="Vertex count (default: largest id)")


def _undirected_report(graph: Graph, stream: TextIO, edges: bool, method: str) -> None:
    stats = triangles.triangle_stats(graph, method)
    logger.info(
        f"{graph.n} vertices, {graph.edge_count()} edges, {stats.total} triangles"
    )
    if edges:
        rows = ((i, j, stats.per_edge.entry(i, j)) for i, j in graph.edges())
        graph_io.write_table(stream, ["u", "v", "triangles"], rows)
        return
    clustering = triangles.clustering_coefficients(graph)
    rows = (
        (v, degree, count, clustering[v - 1])
        for v, (degree, count) in enumerate(
            zip(graph.degrees().tolist(), stats.per_vertex.tolist()), start=1
        )
    )
    graph_io.write_table(stream, ["vertex", "degree", "triangles", "clustering"], rows)


def _directed_report(graph: Graph, stream: TextIO, edges: bool) -> None:
    if edges:
        census = directed.directed_edge_census(graph)
        rows = (
            (i, j, code, count)
            for code in directed.EDGE_TYPES
            for i, j, count in census[code].entries()
        )
        header = ["tail", "head", "type", "triangles"]
        graph_io.write_table(stream, header, sorted(rows))
        return
    census = directed.directed_vertex_census(graph)
    rows = (
        (v, *(int(census[code][v - 1]) for code in directed.VERTEX_TYPES))
        for v in range(1, graph.n + 1)
    )
    graph_io.write_table(stream, ["vertex", *directed.VERTEX_TYPES], rows)


def _labeled_report(graph: Graph, stream: TextIO, edges: bool) -> None:
    if edges:
        census = labeled.labeled_edge_census(graph)
        rows = (
            (i, j, tri_type.code, count)
            for tri_type, counts in census.items()
            for i, j, count in counts.entries()
        )
        graph_io.write_table(stream, ["u", "v", "type", "triangles"], sorted(rows))
        return
    census = labeled.labeled_vertex_census(graph)
    rows = (
        (v, tri_type.code, int(counts[v - 1]))
        for tri_type, counts in census.items()
        for v in range(1, graph.n + 1)
        if counts[v - 1]
    )
    graph_io.write_table(stream, ["vertex", "type", "triangles"], sorted(rows))


def _blocks(text: Optional[str], handle: product.ProductHandle) -> product.BlockRange:
    blocks = product.BlockRange.parse(text) if text else product.BlockRange.full(handle)
    blocks.check(handle)
    return blocks


def _required(value: Optional[str], name: str) -> str:
    if not value:
        raise ValueError(f"{name} is required here")
    return value


@contextlib.contextmanager
def _output(path: Optional[str]) -> Iterator[TextIO]:
    if not path or path == "-":
        yield sys.stdout
        return
    with open(path, "w", encoding="utf-8") as f:
        yield f
