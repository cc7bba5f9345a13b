"""Product manifests: a JSON file naming the two factor files, their checksums,
and the exact totals of the product they describe"""

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

import hashlib
import json
import logging
import os
import pathlib
from dataclasses import asdict, dataclass, field
from typing import Optional

from . import __version__, directed, graph_io, kron_stats
from .graph import Graph

TOTALS = ("vertices", "stored_entries", "loops", "edges", "triangles", "regime")

logger = logging.getLogger(__name__)


class ManifestError(ValueError):
    pass


class ChecksumMismatch(ManifestError):
    pass


@dataclass
class FactorRef:
    """A factor file plus the options it was loaded with. Paths are relative to
    the manifest's directory."""

    path: str
    sha256: str
    n: int
    directed: bool = False
    strip_loops: bool = False
    zero_based: bool = False
    labels_path: Optional[str] = None
    labels_sha256: Optional[str] = None

    def load(self, base: pathlib.Path) -> Graph:
        """Load the factor after verifying its checksums.

        Raises:
            ChecksumMismatch: A file changed since the manifest was written
        """
        _verify(base / self.path, self.sha256)
        labels = None
        if self.labels_path:
            _verify(base / self.labels_path, self.labels_sha256)
            labels = graph_io.load_labels(base / self.labels_path, self.n)
        return graph_io.load_edge_list(
            base / self.path,
            n=self.n,
            directed=self.directed,
            strip_loops=self.strip_loops,
            zero_based=self.zero_based,
            labels=labels,
        )


@dataclass
class Manifest:
    """Everything needed to regenerate C = left kron right, and its totals."""

    left: FactorRef
    right: FactorRef
    vertices: int
    stored_entries: int
    loops: int
    edges: int
    triangles: int
    regime: Optional[str] = None
    tool_version: str = __version__
    seeds: list[int] = field(default_factory=list)

    def save(self, path: graph_io.PathLike) -> None:
        with open(path, "w", encoding="utf-8") as f:
            json.dump(asdict(self), f, indent=2)
            f.write("\n")
        logger.info(f"Wrote manifest {path}")

    @classmethod
    def load(cls, path: graph_io.PathLike) -> "Manifest":
        """Read a manifest written by save.

        Raises:
            ManifestError: The file is not valid JSON or misses a field
        """
        with open(path, encoding="utf-8") as f:
            try:
                data = json.load(f)
                data["left"] = FactorRef(**data["left"])
                data["right"] = FactorRef(**data["right"])
                return cls(**data)
            except (TypeError, KeyError, ValueError) as e:
                raise ManifestError(f"{path} is not a valid manifest: {e}") from None

    def open_factors(self, path: graph_io.PathLike) -> tuple[Graph, Graph]:
        """Load both factors of the manifest stored at path.

        Raises:
            ChecksumMismatch: A factor file changed since the manifest was written
            ManifestError: The stored totals differ from the loaded factors
        """
        base = pathlib.Path(path).resolve().parent
        a, b = self.left.load(base), self.right.load(base)
        self.verify_totals(a, b)
        return a, b

    def verify_totals(self, a: Graph, b: Graph) -> None:
        expected = build_manifest(self.left, self.right, a, b, self.seeds)
        for name in TOTALS:
            stored, actual = getattr(self, name), getattr(expected, name)
            if stored != actual:
                raise ManifestError(
                    f"Manifest {name} is {stored}, the factors give {actual}"
                )


def sha256_file(path: graph_io.PathLike) -> str:
    digest = hashlib.sha256()
    with open(path, "rb") as f:
        for chunk in iter(lambda: f.read(1 << 20), b""):
            digest.update(chunk)
    return digest.hexdigest()


def factor_ref(
    path: graph_io.PathLike,
    manifest_path: graph_io.PathLike,
    graph: Graph,
    strip_loops: bool = False,
    zero_based: bool = False,
    labels_path: Optional[graph_io.PathLike] = None,
) -> FactorRef:
    """Describe a loaded factor relative to where its manifest will live."""
    base = pathlib.Path(manifest_path).resolve().parent
    ref = FactorRef(
        path=_relative(path, base),
        sha256=sha256_file(path),
        n=graph.n,
        directed=graph.directed,
        strip_loops=strip_loops,
        zero_based=zero_based,
    )
    if labels_path:
        ref.labels_path = _relative(labels_path, base)
        ref.labels_sha256 = sha256_file(labels_path)
    return ref


def build_manifest(
    left_ref: FactorRef,
    right_ref: FactorRef,
    a: Graph,
    b: Graph,
    seeds: Optional[list[int]] = None,
) -> Manifest:
    """Exact totals of A kron B from the factors.

    Raises:
        LoopRegimeError: Only the undirected left factor has loops
        GraphError: Right factor of a directed product is not undirected
    """
    if a.directed:
        nnz = a.adj.nnz * b.adj.nnz
        census = directed.product_directed_vertex(a, b)
        closed = sum(census.counts[code].sum() for code in directed.VERTEX_TYPES)
        return Manifest(
            left=left_ref,
            right=right_ref,
            vertices=a.n * b.n,
            stored_entries=nnz,
            loops=0,
            edges=nnz,
            triangles=closed // 3,
            seeds=seeds or [],
        )

    totals = kron_stats.product_manifest(a, b)
    return Manifest(
        left=left_ref,
        right=right_ref,
        vertices=totals.vertices,
        stored_entries=totals.stored_entries,
        loops=totals.loops,
        edges=totals.edges,
        triangles=totals.triangles,
        regime=totals.regime.value,
        seeds=seeds or [],
    )


def _relative(path: graph_io.PathLike, base: pathlib.Path) -> str:
    return os.path.relpath(pathlib.Path(path).resolve(), base)


def _verify(path: pathlib.Path, expected: str) -> None:
    actual = sha256_file(path)
    if actual != expected:
        raise ChecksumMismatch(
            f"Checksum of {path} is {actual}, manifest expects {expected}"
        )
    logger.debug(f"Checksum of {path} verified")
