"""Tests for the sparse integer matrix layer"""

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

import numpy as np
import pytest
import scipy.sparse

from PyKron import sparse
from PyKron.sparse import SparseMatrix

K2 = SparseMatrix.clique(2)
PATH_3 = SparseMatrix.from_entries(3, [(1, 2, 1), (2, 1, 1), (2, 3, 1), (3, 2, 1)])


@pytest.mark.parametrize(
    "p, n, split",
    [(1, 3, (1, 1)), (3, 3, (1, 3)), (4, 3, (2, 1)), (6, 3, (2, 3)), (7, 1, (7, 1))],
)
def test_idxSplitJoin(p: int, n: int, split: tuple[int, int]):
    assert sparse.idx_split(p, n) == split
    assert sparse.idx_join(*split, n) == p


@pytest.mark.parametrize("block, intra, n", [(0, 1, 3), (1, 0, 3), (1, 4, 3)])
def test_idxJoinOutOfRange(block: int, intra: int, n: int):
    with pytest.raises(ValueError):
        sparse.idx_join(block, intra, n)


def test_idxSplitOutOfRange():
    with pytest.raises(ValueError):
        sparse.idx_split(0, 3)


def test_indexMap():
    index = sparse.IndexMap(4)
    assert index.split(6) == (2, 2)
    assert index.join(2, 2) == 6
    with pytest.raises(ValueError):
        sparse.IndexMap(0)


def test_fromEntriesLookup():
    assert PATH_3.n == 3
    assert PATH_3.nnz == 4
    assert PATH_3.entry(1, 2) == 1
    assert PATH_3.entry(1, 3) == 0
    assert PATH_3.row(2).tolist() == [1, 3]
    assert list(PATH_3.entries()) == [(1, 2, 1), (2, 1, 1), (2, 3, 1), (3, 2, 1)]


def test_fromEntriesDropsZeros():
    matrix = SparseMatrix.from_entries(2, [(1, 1, 0), (2, 1, 3)])
    assert matrix.nnz == 1
    assert matrix.max_entry() == 3


@pytest.mark.parametrize(
    "entries",
    [
        [(1, 3, 1)],
        [(0, 1, 1)],
        [(1, 2, 1), (1, 2, 1)],
        [(1, 2, -1)],
    ],
)
def test_fromEntriesInvalid(entries: list):
    with pytest.raises(ValueError):
        SparseMatrix.from_entries(2, entries)


def test_entryOutOfRange():
    with pytest.raises(IndexError):
        PATH_3.entry(4, 1)


def test_constructors():
    assert SparseMatrix.identity(3).nnz == 3
    assert SparseMatrix.ones(3).nnz == 9
    assert SparseMatrix.clique(3).nnz == 6
    assert SparseMatrix.zeros(3).nnz == 0
    assert SparseMatrix.diagonal(np.array([0, 2, 1])).entry(2, 2) == 2


def test_arithmetic():
    assert SparseMatrix.clique(3) + SparseMatrix.identity(3) == SparseMatrix.ones(3)
    assert SparseMatrix.ones(3) - SparseMatrix.identity(3) == SparseMatrix.clique(3)
    squared = PATH_3 @ PATH_3
    assert squared.entry(1, 3) == 1
    assert squared.entry(2, 2) == 2
    assert sparse.hadamard(PATH_3, SparseMatrix.clique(3)) == PATH_3
    assert sparse.diag_vec(squared).tolist() == [1, 2, 1]
    assert PATH_3.row_sums().tolist() == [1, 2, 1]


def test_dimensionMismatch():
    with pytest.raises(sparse.DimensionMismatch):
        sparse.mat_mul(PATH_3, K2)
    with pytest.raises(sparse.DimensionMismatch):
        PATH_3 + K2


def test_transposeSymmetry():
    arc = SparseMatrix.from_entries(2, [(1, 2, 1)])
    assert not arc.is_symmetric()
    assert arc.T.entry(2, 1) == 1
    assert PATH_3.is_symmetric()


def test_matMulOverflow():
    big = SparseMatrix.diagonal(np.array([2**40, 1]))
    with pytest.raises(OverflowError):
        sparse.mat_mul(big, big)


def test_matMulOverflowWideRow():
    wide = SparseMatrix.from_entries(2, [(1, 1, 2**62), (1, 2, 2**62)])
    with pytest.raises(OverflowError):
        sparse.mat_mul(wide, SparseMatrix.identity(2))


def test_hadamardOverflow():
    big = SparseMatrix.diagonal(np.array([2**32, 0]))
    with pytest.raises(OverflowError):
        sparse.hadamard(big, big)


def test_kronMaterializeK2():
    product = sparse.kron_materialize(K2, K2)
    assert product.n == 4
    assert [(p, q) for p, q, _ in product.entries()] == [(1, 4), (2, 3), (3, 2), (4, 1)]


def test_kronMaterializeIndexing():
    product = sparse.kron_materialize(PATH_3, SparseMatrix.ones(2))
    for i, j, _ in PATH_3.entries():
        for k in (1, 2):
            for l in (1, 2):
                p, q = sparse.idx_join(i, k, 2), sparse.idx_join(j, l, 2)
                assert product.entry(p, q) == 1
    assert product.nnz == PATH_3.nnz * 4


def test_kronMaterializeRefused():
    with pytest.raises(sparse.MaterializationRefused):
        sparse.kron_materialize(PATH_3, PATH_3, max_vertices=8)
    with pytest.raises(sparse.MaterializationRefused):
        sparse.kron_materialize(PATH_3, PATH_3, max_entries=15)
    assert sparse.kron_materialize(PATH_3, PATH_3, override=True, max_vertices=1).n == 9


def test_stripLoops():
    hollow, loops = sparse.strip_loops(SparseMatrix.ones(3))
    assert hollow == SparseMatrix.clique(3)
    assert loops.tolist() == [1, 1, 1]


def randomMatrix(generator: np.random.Generator, n: int) -> SparseMatrix:
    dense = generator.integers(0, 3, size=(n, n)) * (generator.random((n, n)) < 0.5)
    return SparseMatrix(scipy.sparse.csr_matrix(dense))


def randomPairs(seed: int) -> tuple[SparseMatrix, ...]:
    generator = np.random.Generator(np.random.PCG64(seed))
    n_left, n_right = generator.integers(1, 6, size=2)
    return (
        randomMatrix(generator, n_left),
        randomMatrix(generator, n_right),
        randomMatrix(generator, n_left),
        randomMatrix(generator, n_right),
    )


@pytest.mark.parametrize("seed", range(20))
def test_kronMixedProduct(seed):
    x1, x2, y1, y2 = randomPairs(seed)
    left = sparse.mat_mul(
        sparse.kron_materialize(x1, x2), sparse.kron_materialize(y1, y2)
    )
    right = sparse.kron_materialize(sparse.mat_mul(x1, y1), sparse.mat_mul(x2, y2))
    assert left == right


@pytest.mark.parametrize("seed", range(20))
def test_kronHadamardDistributes(seed):
    x1, x2, y1, y2 = randomPairs(seed)
    left = sparse.hadamard(
        sparse.kron_materialize(x1, x2), sparse.kron_materialize(y1, y2)
    )
    right = sparse.kron_materialize(sparse.hadamard(x1, y1), sparse.hadamard(x2, y2))
    assert left == right


@pytest.mark.parametrize("seed", range(20))
def test_kronDiagonalDistributes(seed):
    x1, x2, _, _ = randomPairs(seed)
    product = sparse.kron_materialize(x1, x2)
    expected = np.kron(sparse.diag_vec(x1), sparse.diag_vec(x2))
    assert np.array_equal(sparse.diag_vec(product), expected)


@pytest.mark.parametrize("seed", range(20))
def test_kronTranspose(seed):
    x1, x2, _, _ = randomPairs(seed)
    assert sparse.kron_materialize(x1, x2).T == sparse.kron_materialize(x1.T, x2.T)
