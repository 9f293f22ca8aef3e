import os

import pytest

from rogetsim import load

DATA_DIR = os.path.join(os.path.dirname(__file__), "data")
FIXTURE_PATH = os.path.join(DATA_DIR, "roget_fixture.rt")

# One designated fixture pair per path-length tier, taken from the tier
# examples in the distance definition.
TIER_PAIRS = [
    (0, "journey's end", "terminus"),
    (2, "devotion", "abnormal affection"),
    (4, "popular misconception", "glaring error"),
    (6, "individual", "lonely"),
    (8, "finance", "apply for a loan"),
    (10, "life expectancy", "herbalize"),
    (12, "Creirwy (love)", "inspired"),
    (14, "translucid", "blind eye"),
    (16, "nag", "like greased lightning"),
]


def data_path(name):
    return os.path.join(DATA_DIR, name)


@pytest.fixture(scope="session")
def thesaurus():
    return load(FIXTURE_PATH)


@pytest.fixture(scope="session")
def fixture_text():
    with open(FIXTURE_PATH, encoding="utf-8") as handle:
        return handle.read()
