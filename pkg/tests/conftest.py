from pathlib import Path

import pytest

from hyperbetti import Hypergraph

DATA_DIR = Path(__file__).resolve().parent.parent / "data"


@pytest.fixture
def path5():
    return Hypergraph(5, [[1, 2, 3], [3, 4, 5]], labels=list("abcde"))


@pytest.fixture
def example39():
    return Hypergraph(9, [[1, 2, 3], [4, 5, 6], [7, 8, 9], [1, 4, 7]])


@pytest.fixture
def four_cycle():
    return Hypergraph(4, [[1, 2], [2, 3], [3, 4], [1, 4]])


@pytest.fixture
def data_dir():
    return DATA_DIR
