"""
Custom lint tests.
"""

import dataclasses
from pathlib import Path

from interval_impropriety._constants import FamilyKind
from interval_impropriety.exact.scan import CSV_COLUMNS, ScanRow
from interval_impropriety.families import GENERATORS


def test_every_family_generated() -> None:
    """
    Every family on the command line has a registered generator.
    """
    assert set(GENERATORS) == set(FamilyKind)


def test_csv_columns() -> None:
    """
    The scan CSV columns are the fields of a scan row, in order.
    """
    fields = tuple(field.name for field in dataclasses.fields(ScanRow))
    assert fields == CSV_COLUMNS


def test_init_files() -> None:
    """
    ``__init__`` files exist where they should do.

    If ``__init__`` files are missing, linters may not run on all files that
    they should run on.
    """
    directories = (Path('src'), Path('tests'))

    for directory in directories:
        files = directory.glob('**/*.py')
        for python_file in files:
            parent = python_file.parent
            expected_init = parent / '__init__.py'
            assert expected_init.exists()
