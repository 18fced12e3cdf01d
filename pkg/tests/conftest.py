from pathlib import Path

import pytest

from lediagram import build_le_graph, parse_diagram
from models.positroid import Positroid
from positroid import enumerate_bases

DIAGRAMS = Path(__file__).resolve().parent.parent / "diagrams"

RUNNING_EXAMPLE_BASES = [
    (2, 3, 5),
    (2, 3, 6),
    (2, 4, 5),
    (2, 4, 6),
    (2, 5, 6),
    (2, 5, 7),
    (2, 6, 7),
    (3, 5, 6),
    (3, 5, 7),
    (3, 6, 7),
    (4, 5, 6),
    (4, 5, 7),
    (4, 6, 7),
]


@pytest.fixture
def diagram_path():
    def resolve(name: str) -> str:
        return str(DIAGRAMS / name)

    return resolve


@pytest.fixture
def running_diagram():
    return parse_diagram((DIAGRAMS / "running_example.json").read_text())


@pytest.fixture
def running_graph(running_diagram):
    return build_le_graph(running_diagram)


@pytest.fixture
def running_positroid(running_graph):
    return enumerate_bases(running_graph)


@pytest.fixture
def square_graph():
    return build_le_graph(parse_diagram((DIAGRAMS / "full_square.json").read_text()))


@pytest.fixture
def u12():
    """Uniform matroid of rank 1 on two elements: M = x1 + x2"""
    return Positroid(n=2, r=1, bases=((1,), (2,)))


@pytest.fixture
def single_basis():
    return Positroid(n=2, r=2, bases=((1, 2),))


@pytest.fixture
def running_bases():
    return list(RUNNING_EXAMPLE_BASES)
