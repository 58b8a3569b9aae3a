import pytest

from qtsemigroups import reduction
from qtsemigroups.search import pruned_associative_tables

reduction.DEBUG_CHECKS = True

FAMILIES = [(1, 2), (2, 2), (3, 2), (4, 2), (2, 3), (2, 4), (3, 3), (2, 5)]
_cache: dict = {}


def assoc_family(k: int, n: int):
    """Associative quasitrivial tables for (k, n), found by pruned search."""
    if (k, n) not in _cache:
        _cache[k, n] = list(pruned_associative_tables(k, n))
    return _cache[k, n]


@pytest.fixture(scope="session")
def families():
    return {kn: assoc_family(*kn) for kn in FAMILIES}


# one line per acceptance criterion, printed at the end of the run
ACCEPTANCE: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        terminalreporter.write_line(ACCEPTANCE[n])
