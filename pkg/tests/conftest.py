import sys
from functools import lru_cache
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from negk.catalog import load_catalog  # noqa: E402
from negk.families import builtin_group  # noqa: E402
from negk.schur import k_minus_one  # noqa: E402

CATALOG = load_catalog()
BY_KEY = {e.key: e for e in CATALOG}


@lru_cache(maxsize=None)
def group(key):
    """Catalog group by (order, index), built once per session."""
    return BY_KEY[key].build()


@lru_cache(maxsize=None)
def family(expr: str):
    return builtin_group(expr)


@lru_cache(maxsize=None)
def rs(key):
    res = k_minus_one(group(key))
    return res.r, res.s


@pytest.fixture(scope="session")
def catalog():
    return CATALOG


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
