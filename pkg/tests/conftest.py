import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from gentlekit import data  # noqa: E402
from gentlekit.presentation import classify_strict, from_text  # noqa: E402


def corpus(name):
    return from_text(data.text(name))


STRICT_CORPUS = [n for n in data.NAMES if classify_strict(corpus(n)).admissible_complete]


@pytest.fixture
def proto():
    return corpus("prototype")


@pytest.fixture
def rng():
    return random.Random(20261019)
