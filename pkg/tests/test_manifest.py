"""Tests for product manifests"""

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

import json
import pathlib

import pytest

from PyKron import __version__, factors, graph_io, manifest
from PyKron.kron_stats import LoopRegimeError


def _factor(tmp_path: pathlib.Path, name: str, graph) -> manifest.FactorRef:
    path = tmp_path / name
    graph_io.save_edge_list(graph, path)
    return manifest.factor_ref(path, tmp_path / "product.json", graph)


def test_buildUndirected(tmp_path: pathlib.Path):
    a, b = factors.make_clique(3), factors.make_clique(2, with_loops=True)
    result = manifest.build_manifest(
        _factor(tmp_path, "a.txt", a), _factor(tmp_path, "b.txt", b), a, b, [4]
    )
    assert result.vertices == 6
    assert result.stored_entries == 24
    assert result.loops == 0
    assert result.edges == 12
    assert result.triangles == 8
    assert result.regime == "b_only"
    assert result.seeds == [4]
    assert result.tool_version == __version__
    assert result.left.path == "a.txt"


def test_buildDirected(tmp_path: pathlib.Path):
    a, b = factors.make_cycle(3, directed=True), factors.make_clique(3)
    result = manifest.build_manifest(
        _factor(tmp_path, "a.txt", a), _factor(tmp_path, "b.txt", b), a, b
    )
    assert result.left.directed
    assert result.vertices == 9
    assert result.edges == 18
    assert result.triangles == 6
    assert result.regime is None


def test_buildLeftLoopsRejected(tmp_path: pathlib.Path):
    a, b = factors.make_clique(3, with_loops=True), factors.make_clique(3)
    with pytest.raises(LoopRegimeError):
        manifest.build_manifest(
            _factor(tmp_path, "a.txt", a), _factor(tmp_path, "b.txt", b), a, b
        )


def test_saveLoadOpen(tmp_path: pathlib.Path):
    a = factors.make_hub_cycle().with_labels((1, 2, 1, 2, 1))
    b = factors.make_clique(3)
    graph_io.save_edge_list(a, tmp_path / "a.txt")
    graph_io.save_labels(a.labels, tmp_path / "a.labels")
    path = tmp_path / "product.json"
    left = manifest.factor_ref(
        tmp_path / "a.txt", path, a, labels_path=tmp_path / "a.labels"
    )
    result = manifest.build_manifest(left, _factor(tmp_path, "b.txt", b), a, b)
    result.save(path)

    assert json.loads(path.read_text())["triangles"] == 6 * 4 * 1
    loaded = manifest.Manifest.load(path)
    assert loaded == result
    left_graph, right_graph = loaded.open_factors(path)
    assert left_graph == a
    assert right_graph == b


def test_checksumMismatch(tmp_path: pathlib.Path):
    a, b = factors.make_clique(3), factors.make_clique(3)
    path = tmp_path / "product.json"
    result = manifest.build_manifest(
        _factor(tmp_path, "a.txt", a), _factor(tmp_path, "b.txt", b), a, b
    )
    result.save(path)
    graph_io.save_edge_list(factors.make_path(3), tmp_path / "b.txt")
    with pytest.raises(manifest.ChecksumMismatch):
        manifest.Manifest.load(path).open_factors(path)


def test_sha256(tmp_path: pathlib.Path):
    path = tmp_path / "empty"
    path.write_bytes(b"")
    assert manifest.sha256_file(path) == (
        "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855"
    )


@pytest.mark.parametrize(
    "text",
    ['{"left": {}, "right": {}}', '{"vertices": 4}', "[1, 2]", "not json"],
)
def test_loadMalformed(tmp_path: pathlib.Path, text: str):
    path = tmp_path / "product.json"
    path.write_text(text)
    with pytest.raises(manifest.ManifestError):
        manifest.Manifest.load(path)


def test_storedTotalsVerified(tmp_path: pathlib.Path):
    a, b = factors.make_clique(3), factors.make_clique(3)
    path = tmp_path / "product.json"
    result = manifest.build_manifest(
        _factor(tmp_path, "a.txt", a), _factor(tmp_path, "b.txt", b), a, b
    )
    result.triangles += 1
    result.save(path)
    with pytest.raises(manifest.ManifestError, match="triangles"):
        manifest.Manifest.load(path).open_factors(path)
