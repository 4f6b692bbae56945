import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from sessiontypes import enumerate_processes, enumerate_types, normalize  # noqa: E402


@pytest.fixture(scope="session")
def procs3():
    """Every enumerated process over {a, b} up to depth 3."""
    return list(enumerate_processes("ab", 3))


@pytest.fixture(scope="session")
def procs2():
    return list(enumerate_processes("ab", 2))


@pytest.fixture(scope="session")
def types2():
    """Every enumerated session type over {a, b} up to depth 2."""
    return list(enumerate_types("ab", 2))


@pytest.fixture(scope="session")
def classes2(types2):
    """Normal form -> first enumerated type with that normal form."""
    reps = {}
    for t in types2:
        reps.setdefault(normalize(t), t)
    return reps
