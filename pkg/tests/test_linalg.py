from sympy.polys.domains import QQ

from core.config import RATIONALS, Field
from core.linalg import RowReducer, rank


def test_rank_over_rationals():
    assert rank([{0: 1, 1: 2}, {0: 2, 1: 4}], 2) == 1
    assert rank([{0: 1, 1: 1}, {0: 1, 1: -1}], 2) == 2


def test_rank_depends_on_characteristic():
    rows = [{0: 1, 1: 1}, {0: 1, 1: -1}]
    assert rank(rows, 2, Field(2)) == 1
    assert rank(rows, 2, Field(3)) == 2


def test_rank_of_nothing():
    assert rank([], 3) == 0
    assert rank([{}], 0) == 0
    assert rank([{}, {}], 2) == 0


def test_row_reducer_keeps_free_columns():
    reducer = RowReducer([{0: 1, 1: 1}], 2, RATIONALS)
    assert reducer.rank == 1
    assert reducer.free == [1]
    assert reducer.reduce({0: 1}) == {1: QQ(-1)}
    assert reducer.reduce({0: 3, 1: 3}) == {}


def test_row_reducer_empty_space():
    reducer = RowReducer([], 3)
    assert reducer.rank == 0
    assert reducer.free == [0, 1, 2]
    assert reducer.reduce({2: 5}) == {2: QQ(5)}
