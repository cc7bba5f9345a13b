"""Edge-list and label files, and tab-separated report writers"""

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
import os
from typing import Iterable, Optional, TextIO, Union

import numpy as np
import scipy.sparse

from .graph import Graph
from .sparse import SparseMatrix

COMMENT_PREFIXES = ("#", "%")

logger = logging.getLogger(__name__)

PathLike = Union[str, os.PathLike]


class EdgeListError(ValueError):
    pass


def load_edge_list(
    path: PathLike,
    n: Optional[int] = None,
    directed: bool = False,
    strip_loops: bool = False,
    zero_based: bool = False,
    labels: Optional[tuple[int, ...]] = None,
) -> Graph:
    """Read a whitespace-separated edge list, one "u v" pair per line. Lines
    starting with '#' or '%' are comments and columns past the second are
    ignored. Repeated edges collapse.

    Args:
        path (PathLike): File to read
        n (Optional[int], optional): Vertex count. Defaults to the largest id.
        directed (bool, optional): Keep arcs as given. Undirected loads
            mirror every edge, so files may list an edge once or twice.
            Defaults to False.
        strip_loops (bool, optional): Drop (v, v) lines. Defaults to False.
        zero_based (bool, optional): Ids start at 0; add 1 to every id.
            Defaults to False.
        labels (Optional[tuple[int, ...]], optional): Vertex labels

    Raises:
        EdgeListError: Malformed line, id below 1, or id above n

    Returns:
        Graph: The loaded graph
    """
    rows, cols = [], []
    shift = 1 if zero_based else 0
    with open(path, encoding="utf-8") as f:
        for number, line in enumerate(f, start=1):
            fields = line.split()
            if not fields or fields[0].startswith(COMMENT_PREFIXES):
                continue
            try:
                u, v = int(fields[0]) + shift, int(fields[1]) + shift
            except (ValueError, IndexError):
                raise EdgeListError(
                    f"{path}:{number}: expected two vertex ids"
                ) from None
            if u < 1 or v < 1:
                raise EdgeListError(f"{path}:{number}: vertex ids must be at least 1")
            rows.append(u)
            cols.append(v)

    max_id = max(max(rows, default=0), max(cols, default=0))
    if n is None:
        n = max_id
    elif max_id > n:
        raise EdgeListError(f"{path}: vertex id {max_id} exceeds n = {n}")

    rows = np.asarray(rows, dtype=np.int64) - 1
    cols = np.asarray(cols, dtype=np.int64) - 1
    if strip_loops:
        keep = rows != cols
        logger.info(f"Stripped {int((~keep).sum())} self loop lines from {path}")
        rows, cols = rows[keep], cols[keep]
    if not directed:
        rows, cols = np.concatenate([rows, cols]), np.concatenate([cols, rows])

    coo = scipy.sparse.coo_matrix(
        (np.ones(len(rows), dtype=np.int64), (rows, cols)), shape=(n, n)
    )
    csr = coo.tocsr()
    csr.sum_duplicates()
    csr.data[:] = 1
    graph = Graph(SparseMatrix(csr), directed=directed, labels=labels)
    logger.info(f"Loaded {path}: {graph.n} vertices, {graph.edge_count()} edges")
    return graph


def save_edge_list(graph: Graph, path: PathLike, zero_based: bool = False) -> None:
    with open(path, "w", encoding="utf-8") as f:
        write_edge_list(graph, f, zero_based)


def write_edge_list(graph: Graph, stream: TextIO, zero_based: bool = False) -> int:
    """Write one line per edge: every arc when directed, i <= j otherwise.
    Returns the number of edge lines."""
    shift = 1 if zero_based else 0
    kind = "directed" if graph.directed else "undirected"
    stream.write(f"# {kind} graph, {graph.n} vertices, {graph.edge_count()} edges\n")
    written = 0
    for i, j, _ in graph.adj.entries():
        if graph.directed or i <= j:
            stream.write(f"{i - shift} {j - shift}\n")
            written += 1
    return written


def load_labels(path: PathLike, n: int) -> tuple[int, ...]:
    """Read "vertex label" lines covering every vertex 1..n exactly once.

    Raises:
        EdgeListError: Malformed line, repeated or missing vertex, or label
            below 1
    """
    labels = {}
    with open(path, encoding="utf-8") as f:
        for number, line in enumerate(f, start=1):
            fields = line.split()
            if not fields or fields[0].startswith(COMMENT_PREFIXES):
                continue
            try:
                vertex, label = int(fields[0]), int(fields[1])
            except (ValueError, IndexError):
                raise EdgeListError(
                    f"{path}:{number}: expected vertex and label"
                ) from None
            if not 1 <= vertex <= n or label < 1:
                raise EdgeListError(f"{path}:{number}: invalid vertex or label")
            if vertex in labels:
                raise EdgeListError(f"{path}:{number}: vertex {vertex} labeled twice")
            labels[vertex] = label

    missing = n - len(labels)
    if missing:
        raise EdgeListError(f"{path}: {missing} of {n} vertices have no label")
    return tuple(labels[v] for v in range(1, n + 1))


def save_labels(labels: tuple[int, ...], path: PathLike) -> None:
    with open(path, "w", encoding="utf-8") as f:
        for vertex, label in enumerate(labels, start=1):
            f.write(f"{vertex} {label}\n")


def write_table(
    stream: TextIO, header: Iterable[str], rows: Iterable[Iterable[object]]
) -> int:
    """Tab-separated header plus rows; returns the number of rows written."""
    stream.write("\t".join(header) + "\n")
    written = 0
    for row in rows:
        stream.write("\t".join(str(value) for value in row) + "\n")
        written += 1
    return written
