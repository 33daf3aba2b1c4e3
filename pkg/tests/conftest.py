import os

import pytest
from hypothesis import HealthCheck, settings

from weylshift.problemfile import load_path

HERE = os.path.dirname(__file__)
DATA = os.path.join(HERE, "data")
GOLDEN = os.path.join(HERE, "golden")

# exact arithmetic gets slow under load; wall-clock deadlines only flake
settings.register_profile(
    "exact", deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("exact")


def data_path(name: str) -> str:
    return os.path.join(DATA, name)


def golden_path(name: str) -> str:
    return os.path.join(GOLDEN, name)


@pytest.fixture(scope="session")
def gl3_file():
    return load_path(data_path("gl3.json"))


@pytest.fixture(scope="session")
def staircase_file():
    return load_path(data_path("staircase.json"))


@pytest.fixture(scope="session")
def staircase_config(staircase_file):
    return staircase_file.configs["fig"]
