"""Directed triangle censuses: 15 vertex types and 15 edge types, and their
Kronecker products with an undirected right factor.

Vertex type codes describe a triangle from its center c with neighbors x, y.
The role of c towards a neighbor is s (c -> x only), t (x -> c only) or u
(reciprocal). Neighbors are listed lowest role first (s < u < t) and the third
character relates the first-listed neighbor to the second: + (first ->
second), - (second -> first), o (reciprocal).

Edge type codes describe a triangle from a central edge tail -> head with
opposite vertex w: the central edge is + (one-way) or o (reciprocal), then
come rel(tail, w) and rel(w, head).
"""

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
from typing import Union

import numpy as np

from .graph import Graph, GraphError, require_undirected
from .kron_stats import FactorTerms, KronMatrix, KronVector
from .sparse import SparseMatrix, hadamard, mat_mul

VERTEX_TYPES = (
    "ss+", "sso",
    "su+", "suo", "su-",
    "st+", "sto", "st-",
    "uu+", "uuo",
    "ut+", "uto", "ut-",
    "tt+", "tto",
)  # fmt: skip

VERTEX_ALIASES = {
    "ss-": "ss+",
    "uu-": "uu+",
    "tt-": "tt+",
    "us+": "su-",
    "uso": "suo",
    "us-": "su+",
    "ts+": "st-",
    "tso": "sto",
    "ts-": "st+",
    "tu+": "ut-",
    "tuo": "uto",
    "tu-": "ut+",
}

EDGE_TYPES = (
    "+++", "++-", "++o",
    "+-+", "+--", "+-o",
    "+o+", "+o-", "+oo",
    "o++", "o+-", "o+o",
    "o-+", "o-o",
    "ooo",
)  # fmt: skip

# Reading a reciprocal central edge from the other end; the alias is the
# transpose of its canonical matrix.
EDGE_ALIASES = {
    "o--": "o++",
    "oo+": "o-o",
    "oo-": "o+o",
}

logger = logging.getLogger(__name__)


def normalize_code(code: str) -> str:
    """Accept the typographic minus sign as well as '-'."""
    return code.replace("−", "-")


def resolve_vertex_type(code: str) -> str:
    """Canonical vertex type for any of the 27 codes.

    Raises:
        KeyError: Not a vertex type code
    """
    code = normalize_code(code)
    if code in VERTEX_TYPES:
        return code
    if code in VERTEX_ALIASES:
        return VERTEX_ALIASES[code]
    raise KeyError(f"Unknown directed vertex type '{code}'")


def resolve_edge_type(code: str) -> tuple[str, bool]:
    """Canonical edge type and whether the alias reads the central edge
    backwards (so its counts are the transpose of the canonical ones).

    Raises:
        KeyError: Not an edge type code
    """
    code = normalize_code(code)
    if code in EDGE_TYPES:
        return code, False
    if code in EDGE_ALIASES:
        return EDGE_ALIASES[code], True
    raise KeyError(f"Unknown directed edge type '{code}'")


@dataclass(frozen=True, eq=False)
class DirectedParts:
    """reciprocal = A o A^T, one_way = A - reciprocal, undirected = A + one_way^T."""

    reciprocal: SparseMatrix
    one_way: SparseMatrix
    undirected: SparseMatrix


@dataclass(frozen=True, eq=False)
class DirectedDegrees:
    reciprocal: Union[np.ndarray, KronVector]
    out_degree: Union[np.ndarray, KronVector]
    in_degree: Union[np.ndarray, KronVector]


@dataclass(frozen=True, eq=False)
class VertexCensus:
    """Per-vertex counts for the 15 canonical types; aliases resolve on lookup."""

    counts: dict[str, Union[np.ndarray, KronVector]]

    def __getitem__(self, code: str) -> Union[np.ndarray, KronVector]:
        return self.counts[resolve_vertex_type(code)]

    def total(self) -> np.ndarray:
        return sum(self.counts[code] for code in VERTEX_TYPES)


@dataclass(frozen=True, eq=False)
class EdgeCensus:
    """Per-edge counts for the 15 canonical types, stored at (tail, head) of
    the central edge. An alias returns the transposed canonical matrix."""

    counts: dict[str, Union[SparseMatrix, KronMatrix]]

    def __getitem__(self, code: str) -> Union[SparseMatrix, KronMatrix]:
        canonical, backwards = resolve_edge_type(code)
        counts = self.counts[canonical]
        return counts.transpose() if backwards else counts


def split_reciprocal_directed(graph: Graph) -> DirectedParts:
    """Split an adjacency matrix into its reciprocal and one-way parts.

    Raises:
        GraphError: Graph has self loops
    """
    if graph.has_loops:
        raise GraphError("Directed census needs a graph without self loops")
    adj = graph.adj
    reciprocal = hadamard(adj, adj.T)
    one_way = adj - reciprocal
    return DirectedParts(reciprocal, one_way, adj + one_way.T)


def directed_degrees(graph: Graph) -> DirectedDegrees:
    parts = split_reciprocal_directed(graph)
    return DirectedDegrees(
        reciprocal=parts.reciprocal.row_sums(),
        out_degree=parts.one_way.row_sums(),
        in_degree=parts.one_way.T.row_sums(),
    )


def directed_vertex_census(graph: Graph) -> VertexCensus:
    """All 15 canonical per-vertex directed triangle counts.

    With M = A^T (so M[i, j] = 1 marks the arc j -> i), every count is
    diag(X Y Z) for a triple of M_d, M_d^T, M_r, halved for sso, uuo and tto
    where both orderings of the neighbors match.
    """
    d, dt, r = _oriented_parts(graph)
    table = {
        "ss+": (dt, d, d, 1),
        "sso": (dt, r, d, 2),
        "su+": (r, d, d, 1),
        "suo": (r, r, d, 1),
        "su-": (r, dt, d, 1),
        "st+": (d, d, d, 1),
        "sto": (d, r, d, 1),
        "st-": (d, dt, d, 1),
        "uu+": (r, d, r, 1),
        "uuo": (r, r, r, 2),
        "ut+": (d, d, r, 1),
        "uto": (d, r, r, 1),
        "ut-": (d, dt, r, 1),
        "tt+": (d, dt, dt, 1),
        "tto": (d, r, dt, 2),
    }
    counts = {}
    for code, (x, y, z, divisor) in table.items():
        closed = _diag_triple(x, y, z)
        if (closed % divisor).any():
            raise ArithmeticError(f"Odd closed walk count for type {code}")
        counts[code] = closed // divisor
    logger.debug(f"Directed vertex census on {graph.n} vertices")
    return VertexCensus(counts)


def directed_edge_census(graph: Graph) -> EdgeCensus:
    """All 15 canonical per-edge directed triangle counts, each X o (Y Z) over
    M_d, M_d^T, M_r and transposed back to (tail, head) positions."""
    d, dt, r = _oriented_parts(graph)
    table = {
        "+++": (d, d, d),
        "++-": (d, dt, d),
        "++o": (d, r, d),
        "+-+": (d, d, dt),
        "+--": (d, dt, dt),
        "+-o": (d, r, dt),
        "+o+": (d, d, r),
        "+o-": (d, dt, r),
        "+oo": (d, r, r),
        "o++": (r, d, d),
        "o+-": (r, dt, d),
        "o+o": (r, r, d),
        "o-+": (r, d, dt),
        "o-o": (r, r, dt),
        "ooo": (r, r, r),
    }
    counts = {
        code: hadamard(x, mat_mul(y, z)).T for code, (x, y, z) in table.items()
    }
    return EdgeCensus(counts)


def product_directed_vertex(a: Graph, b: Graph) -> VertexCensus:
    """t_C = t_A kron diag(B^3) for every type, B undirected (loops allowed)."""
    cube = _right_factor(b).diag_cube
    census = directed_vertex_census(a)
    return VertexCensus(
        {code: KronVector(((1, census.counts[code], cube),)) for code in VERTEX_TYPES}
    )


def product_directed_edge(a: Graph, b: Graph) -> EdgeCensus:
    """Delta_C = Delta_A kron (B o B^2) for every type, B undirected."""
    square = _right_factor(b).hadamard_square
    census = directed_edge_census(a)
    return EdgeCensus(
        {code: KronMatrix(((1, census.counts[code], square),)) for code in EDGE_TYPES}
    )


def product_directed_degrees(a: Graph, b: Graph) -> DirectedDegrees:
    """Degrees of C = A kron B by kind, each the A-side degree times the full
    row sum of B (loops included)."""
    terms = _right_factor(b)
    row_sums = terms.degrees + terms.loops
    degrees = directed_degrees(a)
    return DirectedDegrees(
        reciprocal=KronVector(((1, degrees.reciprocal, row_sums),)),
        out_degree=KronVector(((1, degrees.out_degree, row_sums),)),
        in_degree=KronVector(((1, degrees.in_degree, row_sums),)),
    )


def _right_factor(b: Graph) -> FactorTerms:
    if b.directed or not b.is_symmetric():
        raise GraphError("Right factor of a directed product must be undirected")
    require_undirected(b)
    return FactorTerms.of(b)


def _oriented_parts(graph: Graph) -> tuple[SparseMatrix, SparseMatrix, SparseMatrix]:
    """M_d, M_d^T and M_r for M = A^T."""
    parts = split_reciprocal_directed(graph)
    return parts.one_way.T, parts.one_way, parts.reciprocal


def _diag_triple(x: SparseMatrix, y: SparseMatrix, z: SparseMatrix) -> np.ndarray:
    """diag(X Y Z) without forming the full triple product."""
    return hadamard(mat_mul(x, y), z.T).row_sums()
