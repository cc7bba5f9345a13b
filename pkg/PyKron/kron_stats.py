"""Degree and triangle statistics of C = A (Kronecker) B computed from factor
statistics, without building C"""

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

import enum
import logging
from dataclasses import dataclass

import numpy as np
import scipy.sparse

from . import triangles
from .graph import Graph, require_undirected
from .sparse import (
    MATERIALIZE_MAX_ENTRIES,
    MATERIALIZE_MAX_VERTICES,
    MAX_INT64,
    MaterializationRefused,
    SparseMatrix,
    idx_split,
    kron_materialize,
)

logger = logging.getLogger(__name__)


class LoopRegime(enum.Enum):
    NONE = "none"
    B_ONLY = "b_only"
    BOTH = "both"


class LoopRegimeError(ValueError):
    pass


def loop_regime(a: Graph, b: Graph) -> LoopRegime:
    """Which factors carry self loops.

    Raises:
        LoopRegimeError: Only the left factor has loops; swap the factors
    """
    if a.has_loops and not b.has_loops:
        raise LoopRegimeError(
            "Left factor has self loops but right factor does not; swap the "
            "factors (B kron A is the same graph up to vertex relabeling)"
        )
    if a.has_loops:
        return LoopRegime.BOTH
    return LoopRegime.B_ONLY if b.has_loops else LoopRegime.NONE


@dataclass(frozen=True, eq=False)
class KronVector:
    """Implicit vector (sum of coef * (left kron right)) / divisor over the
    n_left * n_right product vertices. Never allocates the full vector unless
    materialized."""

    terms: tuple[tuple[int, np.ndarray, np.ndarray], ...]
    divisor: int = 1

    @property
    def n_left(self) -> int:
        return len(self.terms[0][1])

    @property
    def n_right(self) -> int:
        return len(self.terms[0][2])

    def __len__(self) -> int:
        return self.n_left * self.n_right

    def at(self, i: int, k: int) -> int:
        """Value at the product vertex built from factor vertices i and k."""
        total = sum(
            coef * int(left[i - 1]) * int(right[k - 1])
            for coef, left, right in self.terms
        )
        return _exact_div(total, self.divisor)

    def __getitem__(self, p: int) -> int:
        if not 1 <= p <= len(self):
            raise IndexError(f"Product vertex {p} outside 1..{len(self)}")
        return self.at(*idx_split(p, self.n_right))

    def sum(self) -> int:
        total = sum(
            coef * int(left.sum()) * int(right.sum())
            for coef, left, right in self.terms
        )
        return _exact_div(total, self.divisor)

    def max(self, max_vertices: int = MATERIALIZE_MAX_VERTICES) -> int:
        """Largest entry; closed form for a single non-negative term."""
        if len(self.terms) == 1:
            coef, left, right = self.terms[0]
            if coef >= 0 and left.min() >= 0 and right.min() >= 0:
                return _exact_div(
                    coef * int(left.max()) * int(right.max()), self.divisor
                )
        return int(self.materialize(max_vertices).max())

    def materialize(self, max_vertices: int = MATERIALIZE_MAX_VERTICES) -> np.ndarray:
        """Full vector, refused above max_vertices entries."""
        if len(self) > max_vertices:
            raise MaterializationRefused(
                f"Refusing to expand a vector of {len(self)} entries"
            )
        total = sum(
            coef * np.outer(left.astype(object), right.astype(object)).ravel()
            for coef, left, right in self.terms
        )
        if any(value % self.divisor for value in total):
            raise ArithmeticError("Implicit vector has a non-integral entry")
        values = total // self.divisor
        if len(values) and max(abs(value) for value in values) > MAX_INT64:
            return values
        return values.astype(np.int64)


@dataclass(frozen=True, eq=False)
class KronMatrix:
    """Implicit matrix sum of coef * (left kron right)."""

    terms: tuple[tuple[int, SparseMatrix, SparseMatrix], ...]

    @property
    def n_right(self) -> int:
        return self.terms[0][2].n

    @property
    def n(self) -> int:
        return self.terms[0][1].n * self.n_right

    def at(self, i: int, j: int, k: int, l: int) -> int:
        """Entry at ((i, k), (j, l)) in factor coordinates."""
        return sum(
            coef * left.entry(i, j) * right.entry(k, l)
            for coef, left, right in self.terms
        )

    def entry(self, p: int, q: int) -> int:
        i, k = idx_split(p, self.n_right)
        j, l = idx_split(q, self.n_right)
        return self.at(i, j, k, l)

    def transpose(self) -> "KronMatrix":
        return KronMatrix(
            tuple((coef, left.T, right.T) for coef, left, right in self.terms)
        )

    def total(self) -> int:
        """Sum of all entries."""
        return sum(
            coef * int(left.csr.sum()) * int(right.csr.sum())
            for coef, left, right in self.terms
        )

    def materialize(
        self,
        max_vertices: int = MATERIALIZE_MAX_VERTICES,
        max_entries: int = MATERIALIZE_MAX_ENTRIES,
    ) -> SparseMatrix:
        bound = sum(
            abs(coef) * left.max_entry() * right.max_entry()
            for coef, left, right in self.terms
        )
        if bound > MAX_INT64:
            raise OverflowError("Implicit matrix could overflow 64-bit entries")
        total = scipy.sparse.csr_matrix((self.n, self.n), dtype=np.int64)
        for coef, left, right in self.terms:
            product = kron_materialize(
                left, right, max_vertices=max_vertices, max_entries=max_entries
            )
            total = total + coef * product.csr
        return SparseMatrix(total)


@dataclass(frozen=True, eq=False)
class FactorTerms:
    """Per-factor quantities the product formulas combine.

    With X = H + D (H hollow, D = diag(s) the loop indicator) and X symmetric,
    the terms reduce to cheap expressions in H, s, the degree d and the
    triangle counts t, Delta, so no power of X is ever formed:
        diag(X^3)    = 2t + 2(d o s) + Hs + s
        diag(X^2 D)  = (d + s) o s
        diag(X D X)  = Hs + s
        X o X^2      = Delta + DH + HD + diag((d + s) o s)
        D o X^2      = diag((d + s) o s)
    """

    loops: np.ndarray
    degrees: np.ndarray
    tri_vertex: np.ndarray
    tri_edge: SparseMatrix
    diag_cube: np.ndarray
    diag_square_loops: np.ndarray
    diag_loop_sandwich: np.ndarray
    hadamard_square: SparseMatrix
    loop_rows: SparseMatrix
    loop_cols: SparseMatrix
    loop_diag: SparseMatrix
    loop_square: SparseMatrix
    triangles: int
    nnz: int
    loop_count: int

    @classmethod
    def of(cls, graph: Graph) -> "FactorTerms":
        require_undirected(graph)
        stats = triangles.triangle_stats(graph)
        hollow, s = graph.hollow, graph.loops
        d = hollow.row_sums()
        hs = np.asarray(hollow.csr @ s, dtype=np.int64)
        loop_diag = SparseMatrix.diagonal(s)
        loop_rows = SparseMatrix(loop_diag.csr @ hollow.csr)
        loop_cols = SparseMatrix(hollow.csr @ loop_diag.csr)
        square_loops = (d + s) * s
        loop_square = SparseMatrix.diagonal(square_loops)
        return cls(
            loops=s,
            degrees=d,
            tri_vertex=stats.per_vertex,
            tri_edge=stats.per_edge,
            diag_cube=2 * stats.per_vertex + 2 * d * s + hs + s,
            diag_square_loops=square_loops,
            diag_loop_sandwich=hs + s,
            hadamard_square=stats.per_edge + loop_rows + loop_cols + loop_square,
            loop_rows=loop_rows + loop_diag,
            loop_cols=loop_cols + loop_diag,
            loop_diag=loop_diag,
            loop_square=loop_square,
            triangles=stats.total,
            nnz=graph.adj.nnz,
            loop_count=int(s.sum()),
        )


@dataclass(frozen=True)
class ProductTotals:
    """Exact whole-graph counts of C."""

    vertices: int
    stored_entries: int
    loops: int
    edges: int
    triangles: int
    regime: LoopRegime


@dataclass(frozen=True, eq=False)
class ProductStats:
    degrees: KronVector
    tri_vertex: KronVector
    tri_edge: KronMatrix
    totals: ProductTotals


def product_degrees(a: Graph, b: Graph) -> KronVector:
    """Non-loop degree of every product vertex,
    (d_A + s_A)_i (d_B + s_B)_k - (s_A)_i (s_B)_k."""
    return _degrees(FactorTerms.of(a), FactorTerms.of(b))


def product_tri_vertex(a: Graph, b: Graph) -> KronVector:
    """Triangles at every product vertex, by loop regime:
    NONE 2 t_A kron t_B, B_ONLY t_A kron diag(B^3), BOTH the four-term
    expansion of 1/2 diag((C - D_C)^3)."""
    regime = loop_regime(a, b)
    return _tri_vertex(FactorTerms.of(a), FactorTerms.of(b), regime)


def product_tri_edge(a: Graph, b: Graph) -> KronMatrix:
    """Triangles at every product edge, by loop regime:
    NONE Delta_A kron Delta_B, B_ONLY Delta_A kron (B o B^2), BOTH the
    five-term expansion of (C - D_C) o (C - D_C)^2."""
    regime = loop_regime(a, b)
    return _tri_edge(FactorTerms.of(a), FactorTerms.of(b), regime)


def product_tri_total(a: Graph, b: Graph) -> int:
    regime = loop_regime(a, b)
    terms_a, terms_b = FactorTerms.of(a), FactorTerms.of(b)
    return _tri_total(terms_a, terms_b, _tri_vertex(terms_a, terms_b, regime), regime)


def product_manifest(a: Graph, b: Graph) -> ProductTotals:
    return product_stats(a, b).totals


def product_stats(a: Graph, b: Graph) -> ProductStats:
    """All undirected product statistics from one pass over the factors."""
    regime = loop_regime(a, b)
    terms_a, terms_b = FactorTerms.of(a), FactorTerms.of(b)
    tri_vertex = _tri_vertex(terms_a, terms_b, regime)
    nnz = terms_a.nnz * terms_b.nnz
    loops = terms_a.loop_count * terms_b.loop_count
    totals = ProductTotals(
        vertices=a.n * b.n,
        stored_entries=nnz,
        loops=loops,
        edges=(nnz - loops) // 2 + loops,
        triangles=_tri_total(terms_a, terms_b, tri_vertex, regime),
        regime=regime,
    )
    logger.debug(f"Product totals: {totals}")
    return ProductStats(
        degrees=_degrees(terms_a, terms_b),
        tri_vertex=tri_vertex,
        tri_edge=_tri_edge(terms_a, terms_b, regime),
        totals=totals,
    )


def _degrees(a: FactorTerms, b: FactorTerms) -> KronVector:
    terms = [(1, a.degrees + a.loops, b.degrees + b.loops)]
    if a.loop_count and b.loop_count:
        terms.append((-1, a.loops, b.loops))
    return KronVector(tuple(terms))


def _tri_vertex(a: FactorTerms, b: FactorTerms, regime: LoopRegime) -> KronVector:
    if regime is LoopRegime.NONE:
        return KronVector(((2, a.tri_vertex, b.tri_vertex),))
    if regime is LoopRegime.B_ONLY:
        return KronVector(((1, a.tri_vertex, b.diag_cube),))
    return KronVector(
        (
            (1, a.diag_cube, b.diag_cube),
            (-2, a.diag_square_loops, b.diag_square_loops),
            (-1, a.diag_loop_sandwich, b.diag_loop_sandwich),
            (2, a.loops, b.loops),
        ),
        divisor=2,
    )


def _tri_edge(a: FactorTerms, b: FactorTerms, regime: LoopRegime) -> KronMatrix:
    if regime is LoopRegime.NONE:
        return KronMatrix(((1, a.tri_edge, b.tri_edge),))
    if regime is LoopRegime.B_ONLY:
        return KronMatrix(((1, a.tri_edge, b.hadamard_square),))
    return KronMatrix(
        (
            (1, a.hadamard_square, b.hadamard_square),
            (-1, a.loop_rows, b.loop_rows),
            (-1, a.loop_cols, b.loop_cols),
            (2, a.loop_diag, b.loop_diag),
            (-1, a.loop_square, b.loop_square),
        )
    )


def _tri_total(
    a: FactorTerms, b: FactorTerms, tri_vertex: KronVector, regime: LoopRegime
) -> int:
    if regime is LoopRegime.NONE:
        return 6 * a.triangles * b.triangles
    return _exact_div(tri_vertex.sum(), 3)


def _exact_div(value: int, divisor: int) -> int:
    quotient, remainder = divmod(value, divisor)
    if remainder:
        raise ArithmeticError(f"{value} is not divisible by {divisor}")
    return quotient
