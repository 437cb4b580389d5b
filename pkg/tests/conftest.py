from importlib import resources

import pytest

from structcon.cli import parse_spec

SPEC_NAMES = (
    "so6_bridged_triangles",
    "gl4_pair_rings_loop",
    "gl4_pair_rings_no_loop",
    "gl4_unit_drift",
    "su5_hub_with_loops",
    "su6_two_triads",
)


def load_spec_text(name: str) -> str:
    return resources.files("structcon").joinpath("specs", f"{name}.json").read_text(encoding="utf-8")


def load_pair(name: str):
    return parse_spec(load_spec_text(name))


@pytest.fixture
def so6_pair():
    return load_pair("so6_bridged_triangles")


@pytest.fixture
def gl4_loop_pair():
    return load_pair("gl4_pair_rings_loop")


@pytest.fixture
def gl4_noloop_pair():
    return load_pair("gl4_pair_rings_no_loop")


@pytest.fixture
def gl4_units_pair():
    return load_pair("gl4_unit_drift")


@pytest.fixture
def su5_pair():
    return load_pair("su5_hub_with_loops")


@pytest.fixture
def su6_pair():
    return load_pair("su6_two_triads")
