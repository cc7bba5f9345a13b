"""Tests for the requirement checker"""

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

import importlib.metadata

import pytest
from packaging.requirements import Requirement
from pytest_mock import MockFixture as MockPytest

from PyKron import requirements

CHECK_FNS = ["_check_python_version", "_check_python_requirements"]


def test_pythonVersionOk():
    assert requirements._check_python_version()


def test_pythonVersionTooOld(mocker: MockPytest):
    mocker.patch("PyKron.requirements.MIN_PYTHON", (99, 0))
    assert not requirements._check_python_version()


def test_packagesOk(mocker: MockPytest):
    mocker.patch("importlib.metadata.version", return_value="99.0")
    assert requirements._check_python_requirements()


def test_packagesMissing(mocker: MockPytest, caplog):
    mocker.patch(
        "importlib.metadata.version",
        side_effect=importlib.metadata.PackageNotFoundError,
    )
    assert not requirements._check_python_requirements()
    assert "missing required package" in caplog.text


def test_packagesVersion(mocker: MockPytest, caplog):
    mocker.patch("importlib.metadata.version", return_value="0.1")
    assert not requirements._check_python_requirements()
    assert "version conflict" in caplog.text


@pytest.mark.parametrize(
    "package, installed, ok",
    [
        ("numpy >= 1.22", "1.22.0", True),
        ("numpy >= 1.22", "1.26.4", True),
        ("numpy >= 1.22", "1.22.0rc1", False),
        ("numpy >= 1.22", "1.22.dev0", False),
        ("numpy >= 1.22, < 3", "3.0.1", False),
        ("numpy >= 1.22, < 3", "2.1.0", True),
        ("numpy >= 1.22", "not-a-version", False),
    ],
)
def test_satisfies(package: str, installed: str, ok: bool):
    assert requirements._satisfies(Requirement(package), installed) == ok


def test_preReleaseRejected(mocker: MockPytest, caplog):
    mocker.patch("importlib.metadata.version", return_value="1.22.0rc1")
    assert not requirements._check_python_requirements()
    assert "version conflict" in caplog.text


def test_checkAllRequirementsMet(mocker: MockPytest):
    for check_fn in CHECK_FNS:
        mocker.patch(f"PyKron.requirements.{check_fn}", return_value=True)
    requirements.check_all()


@pytest.mark.parametrize("failing_check", CHECK_FNS)
def test_checkAllRequirementsUnmet(failing_check: str, mocker: MockPytest):
    for check_fn in CHECK_FNS:
        check_passes = check_fn != failing_check
        mocker.patch(f"PyKron.requirements.{check_fn}", return_value=check_passes)
    with pytest.raises(SystemExit) as e:
        requirements.check_all()
    assert e.value.code == 2
