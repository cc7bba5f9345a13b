"""Sparse integer matrix kernel and Kronecker index arithmetic"""

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
from typing import Iterable, Iterator

import numpy as np
import scipy.sparse

MAX_INT64 = 2**63 - 1
MATERIALIZE_MAX_VERTICES = 10**6
MATERIALIZE_MAX_ENTRIES = 10**8

logger = logging.getLogger(__name__)


class DimensionMismatch(ValueError):
    pass


class MaterializationRefused(RuntimeError):
    pass


def idx_split(p: int, n: int) -> tuple[int, int]:
    """Split a global index into its block number and intra-block index.

    Args:
        p (int): 1-based global index
        n (int): Block size

    Raises:
        ValueError: p or n is below 1

    Returns:
        tuple[int, int]: (block, intra), both 1-based
    """
    if p < 1 or n < 1:
        raise ValueError(f"Cannot split index {p} with block size {n}")
    block, intra = divmod(p - 1, n)
    return block + 1, intra + 1


def idx_join(block: int, intra: int, n: int) -> int:
    """Join a block number and intra-block index into a global index.

    Args:
        block (int): 1-based block number
        intra (int): 1-based index within the block, at most n
        n (int): Block size

    Raises:
        ValueError: An index is out of range

    Returns:
        int: 1-based global index (block - 1) * n + intra
    """
    if n < 1 or block < 1 or not 1 <= intra <= n:
        raise ValueError(f"Cannot join block {block}, index {intra} of size {n}")
    return (block - 1) * n + intra


@dataclass(frozen=True)
class IndexMap:
    """Index maps of a product whose right factor has block_size vertices."""

    block_size: int

    def __post_init__(self):
        if self.block_size < 1:
            raise ValueError(f"Block size must be positive, got {self.block_size}")

    def split(self, p: int) -> tuple[int, int]:
        return idx_split(p, self.block_size)

    def join(self, block: int, intra: int) -> int:
        return idx_join(block, intra, self.block_size)


class SparseMatrix:
    """Square sparse matrix with non-negative integer entries.

    Indices are 1-based at this interface. Storage is CSR with sorted column
    indices and no stored zeros. Instances are never modified after
    construction, so they can be shared between threads.
    """

    def __init__(self, matrix: scipy.sparse.spmatrix):
        """Normalize a scipy matrix into canonical CSR storage.

        Args:
            matrix (scipy.sparse.spmatrix): Square matrix with integer entries

        Raises:
            ValueError: Matrix is not square or has negative entries
        """
        csr = scipy.sparse.csr_matrix(matrix).astype(np.int64)
        if csr.shape[0] != csr.shape[1]:
            raise ValueError(f"Matrix must be square, got shape {csr.shape}")
        csr.sum_duplicates()
        csr.eliminate_zeros()
        csr.sort_indices()
        if csr.nnz and csr.data.min() < 0:
            raise ValueError("Matrix entries must be non-negative")
        self._csr = csr

    @classmethod
    def from_entries(
        cls, n: int, entries: Iterable[tuple[int, int, int]]
    ) -> "SparseMatrix":
        """Build a matrix from 1-based (row, col, value) triples.

        Args:
            n (int): Dimension
            entries (Iterable[tuple[int, int, int]]): Duplicate-free triples

        Raises:
            ValueError: Index out of range, duplicate position, or negative value

        Returns:
            SparseMatrix: The matrix; zero values are dropped
        """
        rows, cols, values = [], [], []
        seen = set()
        for row, col, value in entries:
            if not (1 <= row <= n and 1 <= col <= n):
                raise ValueError(f"Entry ({row}, {col}) outside 1..{n}")
            if (row, col) in seen:
                raise ValueError(f"Duplicate entry at ({row}, {col})")
            if value < 0:
                raise ValueError(f"Negative entry {value} at ({row}, {col})")
            seen.add((row, col))
            rows.append(row - 1)
            cols.append(col - 1)
            values.append(value)
        coo = scipy.sparse.coo_matrix(
            (np.array(values, dtype=np.int64), (rows, cols)), shape=(n, n)
        )
        return cls(coo)

    @classmethod
    def zeros(cls, n: int) -> "SparseMatrix":
        return cls(scipy.sparse.csr_matrix((n, n), dtype=np.int64))

    @classmethod
    def identity(cls, n: int) -> "SparseMatrix":
        return cls(scipy.sparse.identity(n, dtype=np.int64, format="csr"))

    @classmethod
    def diagonal(cls, values: np.ndarray) -> "SparseMatrix":
        values = np.asarray(values, dtype=np.int64)
        return cls(scipy.sparse.diags(values, 0, format="csr", dtype=np.int64))

    @classmethod
    def ones(cls, n: int) -> "SparseMatrix":
        """J_n, the all-ones matrix."""
        return cls(scipy.sparse.csr_matrix(np.ones((n, n), dtype=np.int64)))

    @classmethod
    def clique(cls, n: int) -> "SparseMatrix":
        """K_n = J_n - I_n."""
        return cls.ones(n) - cls.identity(n)

    @property
    def csr(self) -> scipy.sparse.csr_matrix:
        return self._csr

    @property
    def n(self) -> int:
        return self._csr.shape[0]

    @property
    def nnz(self) -> int:
        return int(self._csr.nnz)

    def entry(self, i: int, j: int) -> int:
        """Value at 1-based position (i, j), 0 when nothing is stored."""
        if not (1 <= i <= self.n and 1 <= j <= self.n):
            raise IndexError(f"Position ({i}, {j}) outside 1..{self.n}")
        start, end = self._csr.indptr[i - 1], self._csr.indptr[i]
        cols = self._csr.indices[start:end]
        pos = np.searchsorted(cols, j - 1)
        if pos < len(cols) and cols[pos] == j - 1:
            return int(self._csr.data[start + pos])
        return 0

    def row(self, i: int) -> np.ndarray:
        """Sorted 1-based column indices of the stored entries of row i."""
        start, end = self._csr.indptr[i - 1], self._csr.indptr[i]
        return self._csr.indices[start:end].astype(np.int64) + 1

    def entries(self) -> Iterator[tuple[int, int, int]]:
        """Yield (row, col, value) in row-major, ascending-column order."""
        indptr, indices, data = self._csr.indptr, self._csr.indices, self._csr.data
        for i in range(self.n):
            for pos in range(indptr[i], indptr[i + 1]):
                yield i + 1, int(indices[pos]) + 1, int(data[pos])

    def transpose(self) -> "SparseMatrix":
        return SparseMatrix(self._csr.transpose())

    @property
    def T(self) -> "SparseMatrix":
        return self.transpose()

    def is_symmetric(self) -> bool:
        return (self._csr != self._csr.transpose()).nnz == 0

    def row_sums(self) -> np.ndarray:
        return np.asarray(self._csr.sum(axis=1), dtype=np.int64).ravel()

    def max_entry(self) -> int:
        return int(self._csr.data.max()) if self._csr.nnz else 0

    def __add__(self, other: "SparseMatrix") -> "SparseMatrix":
        _check_dims(self, other)
        return SparseMatrix(self._csr + other._csr)

    def __sub__(self, other: "SparseMatrix") -> "SparseMatrix":
        _check_dims(self, other)
        return SparseMatrix(self._csr - other._csr)

    def __matmul__(self, other: "SparseMatrix") -> "SparseMatrix":
        return mat_mul(self, other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SparseMatrix):
            return NotImplemented
        return self.n == other.n and (self._csr != other._csr).nnz == 0

    __hash__ = None

    def __repr__(self) -> str:
        return f"SparseMatrix(n={self.n}, nnz={self.nnz})"


def _check_dims(x: SparseMatrix, y: SparseMatrix) -> None:
    if x.n != y.n:
        raise DimensionMismatch(f"Dimension mismatch: {x.n} vs {y.n}")


def mat_mul(x: SparseMatrix, y: SparseMatrix) -> SparseMatrix:
    """Integer matrix product; entry (i, j) counts weighted 2-paths.

    Raises:
        DimensionMismatch: Operands differ in size
        OverflowError: Some product entry could exceed 2**63 - 1
    """
    _check_dims(x, y)
    # float row sums cannot wrap
    row_bound = float(x.csr.sum(axis=1, dtype=np.float64).max()) if x.nnz else 0.0
    if row_bound * y.max_entry() >= float(MAX_INT64):
        raise OverflowError("Matrix product could overflow 64-bit entries")
    return SparseMatrix(x.csr @ y.csr)


def hadamard(x: SparseMatrix, y: SparseMatrix) -> SparseMatrix:
    """Entrywise product."""
    _check_dims(x, y)
    if x.max_entry() * y.max_entry() > MAX_INT64:
        raise OverflowError("Entrywise product could overflow 64-bit entries")
    return SparseMatrix(x.csr.multiply(y.csr))


def diag_vec(x: SparseMatrix) -> np.ndarray:
    return np.asarray(x.csr.diagonal(), dtype=np.int64)


def kron_materialize(
    x: SparseMatrix,
    y: SparseMatrix,
    override: bool = False,
    max_vertices: int = MATERIALIZE_MAX_VERTICES,
    max_entries: int = MATERIALIZE_MAX_ENTRIES,
) -> SparseMatrix:
    """Build x (Kronecker) y explicitly, entry ((i-1)n_y + k, (j-1)n_y + l) being
    x[i, j] * y[k, l].

    Args:
        x (SparseMatrix): Left factor
        y (SparseMatrix): Right factor
        override (bool, optional): Skip the size guard. Defaults to False.
        max_vertices (int, optional): Largest product dimension allowed
        max_entries (int, optional): Largest predicted entry count allowed

    Raises:
        MaterializationRefused: Product exceeds the guard; stream it instead
        OverflowError: Some entry could exceed 2**63 - 1

    Returns:
        SparseMatrix: The product
    """
    n_product = x.n * y.n
    predicted = x.nnz * y.nnz
    if not override and (n_product > max_vertices or predicted > max_entries):
        raise MaterializationRefused(
            f"Refusing to materialize {n_product} vertices / {predicted} entries "
            f"(limits {max_vertices} / {max_entries})"
        )
    if x.max_entry() * y.max_entry() > MAX_INT64:
        raise OverflowError("Kronecker product could overflow 64-bit entries")
    logger.debug(f"Materializing product with {n_product} vertices")
    return SparseMatrix(scipy.sparse.kron(x.csr, y.csr, format="csr"))


def strip_loops(x: SparseMatrix) -> tuple[SparseMatrix, np.ndarray]:
    """Split x into its hollow part x - I o x and its diagonal."""
    loops = diag_vec(x)
    return x - SparseMatrix.diagonal(loops), loops
