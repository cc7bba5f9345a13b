"""Functions check for runtime requirements"""

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
import logging
import pathlib
import sys

from packaging.requirements import InvalidRequirement, Requirement
from packaging.version import InvalidVersion, Version

MIN_PYTHON = (3, 9)

logger = logging.getLogger(__name__)


def check_all() -> None:
    """Check for all the requirements and exit with status 2 if they are not met"""
    check_fns = [_check_python_version, _check_python_requirements]
    for check_fn in check_fns:
        if not check_fn():
            sys.exit(2)
    logger.debug("all requirements met")
    return


def _check_python_version() -> bool:
    """Check the interpreter is new enough for the type hints used

    Returns:
        bool: True if running on MIN_PYTHON or newer
    """
    version_ok = tuple(sys.version_info[:2]) >= MIN_PYTHON
    if not version_ok:
        logger.error(f"python {'.'.join(map(str, MIN_PYTHON))} or newer is required")
    return version_ok


def _check_python_requirements() -> bool:
    """Check to make sure the Python requirements are installed

    Returns:
        bool: True if the packages in requirements.txt are installed
    """
    packages_ok = True
    with open(pathlib.Path(__file__).parent.with_name("requirements.txt")) as reqs:
        dependencies = reqs.readlines()

    for package in [p.strip() for p in dependencies if p.strip()]:
        try:
            requirement = Requirement(package)
        except InvalidRequirement:
            logger.warning(f"can't parse requirement '{package}'")
            continue
        try:
            installed = importlib.metadata.version(requirement.name)
        except importlib.metadata.PackageNotFoundError:
            logger.error(f"missing required package '{package}'")
            packages_ok = False
            continue
        if not _satisfies(requirement, installed):
            logger.error(f"version conflict for package '{package}' ({installed})")
            packages_ok = False
        else:
            logger.debug(f"requirement '{package}' is met")
    return packages_ok


def _satisfies(requirement: Requirement, installed: str) -> bool:
    """Pre-releases and dev builds only satisfy a specifier that names one."""
    try:
        return requirement.specifier.contains(Version(installed))
    except InvalidVersion:
        return False
