import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from core.complex import SimplicialComplex  # noqa: E402
from core.config import Caps  # noqa: E402
from core.lattice import boolean, divisor  # noqa: E402
from core.poset import Poset  # noqa: E402
from data.data_generator import chordal18_poset, nine_element_poset  # noqa: E402


@pytest.fixture(scope="session")
def nine_element():
    return nine_element_poset()


@pytest.fixture(scope="session")
def chordal18():
    return chordal18_poset()


@pytest.fixture(scope="session")
def b2():
    return boolean(2)


@pytest.fixture(scope="session")
def b3():
    return boolean(3)


@pytest.fixture(scope="session")
def d22():
    return divisor(2, 2)


@pytest.fixture(scope="session")
def forbidden3():
    """p1 < p2 with q1 incomparable to both"""
    return Poset.from_covers(["p1", "p2", "q1"], [("p1", "p2")])


@pytest.fixture
def square():
    """Boundary of a square: the 4-cycle 1-2-3-4"""
    return SimplicialComplex.from_labels([("1", "2"), ("2", "3"), ("3", "4"), ("1", "4")])


@pytest.fixture
def caps():
    return Caps()


@pytest.fixture
def poset_file(tmp_path):
    """Write a poset in text format and return the path"""
    def write(poset, name="input.poset"):
        path = tmp_path / name
        path.write_text(poset.to_text(), encoding="utf-8")
        return str(path)
    return write
