import functools
import warnings

import pytest

from homlie import Field, IncidenceAlgebra, Poset, enumerate_connected_posets

FIELDS = (Field.rationals(), Field.prime(2), Field.prime(3))


def v_poset():
    return Poset.from_cover_relations(["a", "b", "c"], [("a", "c"), ("b", "c")])


def lambda_poset():
    return Poset.from_cover_relations(["a", "b", "c"], [("a", "b"), ("a", "c")])


def diamond():
    return Poset.from_cover_relations([0, "a", "b", 1], [(0, "a"), (0, "b"), ("a", 1), ("b", 1)])


@functools.lru_cache(maxsize=None)
def sweep_posets(max_size=5):
    """Connected poset classes with 2 <= |X| <= max_size."""
    out = []
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", RuntimeWarning)
        for n in range(2, max_size + 1):
            out += enumerate_connected_posets(n)
    return tuple(out)


def algebra(p, field="Q"):
    return IncidenceAlgebra(p, Field.parse(field) if isinstance(field, str) else field)


@pytest.fixture
def c2():
    return algebra(Poset.chain(2))


@pytest.fixture
def c3():
    return algebra(Poset.chain(3))


# acceptance summary: tests/test_acceptance.py records one line per criterion
ACCEPTANCE_LINES = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[key])
