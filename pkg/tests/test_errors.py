import pytest

from core import errors
from core.errors import AslkitError, DegreeBoundExceeded, Inconclusive, SizeCapExceeded

ALL_ERRORS = [
    errors.FormatError,
    errors.CycleDetected,
    errors.UnknownLabel,
    errors.EmptyPoset,
    errors.NotComparable,
    errors.NotALattice,
    errors.IdealNotUpwardClosed,
    errors.FaceNotInComplex,
    errors.BadArguments,
    errors.NotDistributiveType,
    errors.InternalMismatch,
    errors.ConsistencyFailure,
]


@pytest.mark.parametrize("cls", ALL_ERRORS)
def test_every_error_is_an_aslkit_error(cls):
    with pytest.raises(AslkitError):
        raise cls("boom")


def test_size_cap_carries_values():
    exc = SizeCapExceeded("koszul_poset", 10, 12)
    assert (exc.cap, exc.limit, exc.actual) == ("koszul_poset", 10, 12)
    assert "12 exceeds limit 10" in str(exc)


def test_inconclusive_carries_cap():
    exc = Inconclusive("node_budget", "ran out")
    assert exc.cap == "node_budget"
    assert str(exc) == "inconclusive (node_budget): ran out"
    assert str(Inconclusive("x")) == "inconclusive (x)"


def test_degree_bound_keeps_partial_table():
    exc = DegreeBoundExceeded(1, {"partial": True})
    assert exc.bound == 1
    assert exc.partial == {"partial": True}
