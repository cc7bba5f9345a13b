"""Tests for the oracle-equivalence scenarios"""

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

import pytest
from pytest_mock import MockFixture as MockPytest

from PyKron import truss, validation

FEW_PAIRS = 3


@pytest.mark.parametrize("name", validation.SCENARIOS)
def test_scenarioPasses(name: str):
    assert validation.validate(name, seed=1, pairs=FEW_PAIRS)


@pytest.mark.parametrize("seed", [2, 3])
def test_otherSeeds(seed: int):
    assert validation.validate("undirected-all-regimes", seed, FEW_PAIRS)
    assert validation.validate("directed", seed, FEW_PAIRS)


def test_unknownScenario():
    with pytest.raises(KeyError):
        validation.validate("spectral", 1)


def test_divergenceReported(mocker: MockPytest, caplog):
    mocker.patch(
        "PyKron.truss.verify_counterexample",
        return_value=truss.CounterexampleReport(25, 128, 96, {1: 128}, {}),
    )
    assert not validation.validate("counterexample", 1)
    assert "first divergence at edge triangle histogram" in caplog.text


def test_oracleLimitEnforced():
    limits = validation.Limits(oracle_vertices=3)
    with pytest.raises(RuntimeError):
        validation.validate("undirected-all-regimes", 1, 1, limits)
