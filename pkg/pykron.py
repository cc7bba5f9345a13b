#!/usr/bin/env python3

"""Exact triangle statistics, truss decompositions and edge streams of
Kronecker product graphs, computed from their factors."""

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

import argparse
import logging
import os
import sys

from PyKron import requirements

logger = logging.getLogger("pykron")


def main(arguments: list[str]) -> int:
    """Main application entry point

    Args:
        arguments (list[str]): Raw CLI arguments

    Returns:
        int: 0 on success, 1 on a failed validation, 2 on any other error
    """
    setup_logging(arguments)

    # Check for requirements before importing modules that need them
    requirements.check_all()
    from PyKron import cli

    try:
        app = cli.CLI(arguments)
        # the config layers may come from the environment or the file
        logging.getLogger().setLevel(app.config.log_level.upper())
        return app.run()
    except (
        ArithmeticError,
        IndexError,
        KeyError,
        OSError,
        RuntimeError,
        ValueError,
    ) as e:
        logger.debug("command failed", exc_info=True)
        print(f"error: {e}", file=sys.stderr)
        return 2


def setup_logging(arguments: list[str]):
    """Set the log level from arguments, the environment or the config file

    Args:
        arguments (list[str]): Raw CLI arguments
    """
    parser = argparse.ArgumentParser(add_help=False)
    parser.add_argument("-c", "--config")
    parser.add_argument("-L", "--log-level")

    parsed = vars(parser.parse_known_args(arguments)[0])

    if parsed["log_level"]:
        level = parsed["log_level"]
    elif "PYKRON_LOG_LEVEL" in os.environ:
        level = os.environ["PYKRON_LOG_LEVEL"]
    else:
        try:
            import yaml

            with open(parsed["config"]) as config_file:
                level = yaml.safe_load(config_file)["log_level"]
        except (ImportError, FileNotFoundError, TypeError, KeyError):
            level = "info"

    # stdout carries data (edge streams, TSV reports)
    logging.basicConfig(level=level.upper(), stream=sys.stderr)


if __name__ == "__main__":
    sys.exit(main(sys.argv))
