import pytest

from penrose_inflation.pattern import Shift, build_edges_faces, generate

SEVENTH = Shift.parse("1/7,0,0,0,0")


@pytest.fixture(scope="session")
def origin_patch8():
    return build_edges_faces(generate(Shift(), 8))


@pytest.fixture(scope="session")
def origin_patch6():
    return build_edges_faces(generate(Shift(), 6))


@pytest.fixture(scope="session")
def seventh_patch10():
    return build_edges_faces(generate(SEVENTH, 10))
