"""Combines config options from the CLI, environment vars, and config file"""

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

import os
from dataclasses import dataclass, fields
from typing import Any

import yaml

ENV_PREFIX = "PYKRON_"
LOG_LEVELS = ["debug", "info", "warning", "warn", "error", "critical"]


@dataclass
class Config:
    """Application config dataclass

    Raises:
        ValueError: a config parameter has an invalid value
    """

    seed: int = 1
    max_vertices: int = 10**6
    max_entries: int = 10**8
    egonet_max_neighbors: int = 10**5
    oracle_max_vertices: int = 2000
    validate_pairs: int = 50
    log_level: str = "info"

    def __init__(self, arguments: dict[str, Any]):
        """Generate a config object from parsed CLI arguments

        Args:
            arguments (dict[str, Any]): Parsed CLI arguments
        """
        for parameter in fields(Config):
            setattr(self, parameter.name, parameter.default)

        if "config" in arguments and arguments["config"]:
            self.load_file(arguments["config"])
        self.load_env()
        self.load_flags(arguments)
        self.validate()

    def load_file(self, config_filename: str) -> None:
        """Update config parameters with values from config yaml file

        Args:
            config_filename (str): Path of config file to load
        """
        with open(config_filename, "r") as config_file:
            config = yaml.safe_load(config_file) or {}

        for parameter in fields(Config):
            if parameter.name in config:
                setattr(self, parameter.name, config[parameter.name])

    def load_env(self) -> None:
        """Update config parameters with values from environment variables"""
        for parameter in fields(Config):
            if f"{ENV_PREFIX}{parameter.name.upper()}" in os.environ:
                value = os.environ[f"{ENV_PREFIX}{parameter.name.upper()}"]
                setattr(self, parameter.name, value)

    def load_flags(self, arguments: dict[str, Any]) -> None:
        """Update config parameters with values from CLI arguments

        Args:
            arguments (dict[str, any]): Parsed CLI arguments
        """
        for parameter in fields(Config):
            for name in (parameter.name, parameter.name.replace("_", "-")):
                if name in arguments and arguments[name] is not None:
                    setattr(self, parameter.name, arguments[name])

    def validate(self) -> None:
        """Convert integer parameters and check their ranges"""
        for parameter in fields(Config):
            if parameter.type != int:
                continue
            value = getattr(self, parameter.name)
            try:
                value = int(value)
            except (TypeError, ValueError):
                raise ValueError(
                    f"Config parameter {parameter.name} must be an integer, "
                    f"got {value!r}"
                ) from None
            if value < (0 if parameter.name == "seed" else 1):
                raise ValueError(f"Config parameter {parameter.name} is out of range")
            setattr(self, parameter.name, value)

        self.log_level = str(self.log_level).lower()
        if self.log_level not in LOG_LEVELS:
            raise ValueError(f"Unknown log level '{self.log_level}'")
