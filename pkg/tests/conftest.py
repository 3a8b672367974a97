import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from sftalg.corpus import corpus, named_shifts  # noqa: E402


@pytest.fixture(scope="session")
def named():
    return named_shifts()


@pytest.fixture(scope="session")
def gm(named):
    return named["golden"]


@pytest.fixture(scope="session")
def full2(named):
    return named["full2"]


@pytest.fixture(scope="session")
def f10(named):
    return named["forbid10"]


@pytest.fixture(scope="session")
def onept(named):
    return named["onepoint"]


@pytest.fixture(scope="session")
def ten():
    return corpus()
