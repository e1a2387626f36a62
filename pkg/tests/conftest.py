import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from epirich import directive, standard_episturmian


@pytest.fixture(scope="session")
def fibonacci_prefix_10k():
    return standard_episturmian(directive("01")).prefix(10000)


@pytest.fixture(scope="session")
def tribonacci_prefix_10k():
    return standard_episturmian(directive("012")).prefix(10000)
