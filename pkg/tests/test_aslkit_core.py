import pytest

from core.aslkit_core import PROPERTIES, ASLKitCore
from core.aslkit_utils import format_betti_table, format_invariants, format_verdict, get_aslkit_engine
from core.betti import BettiTable
from core.config import Caps, Field
from core.errors import BadArguments, FormatError, NotDistributiveType
from core.poset import chain_poset


@pytest.fixture
def engine(b3):
    core = get_aslkit_engine(Caps())
    core.set_poset(b3.underlying, source="b3")
    return core


@pytest.mark.parametrize("prop,expected", [
    ("distributive-type", True),
    ("pure", True),
    ("sum-of-antichains", False),
    ("cm", True),
    ("shellable", True),
    ("vd", True),
    ("chordal", False),
    ("linear-resolution", False),
    ("groebner", True),
])
def test_checks_on_b3(engine, prop, expected):
    assert engine.check(prop) is expected


def test_ring_properties_on_b2(b2):
    core = get_aslkit_engine()
    core.set_poset(b2.underlying)
    assert core.check("gorenstein")
    assert core.check("level")
    assert core.ring_invariants() is core.ring_invariants()


def test_chordless_cycle(engine):
    assert len(engine.chordless_cycle()) == 6


def test_unknown_property(engine):
    with pytest.raises(BadArguments):
        engine.check("planar")


def test_no_poset_loaded():
    with pytest.raises(BadArguments):
        ASLKitCore().check("pure")


def test_betti_methods_are_cached(engine):
    table = engine.betti("hochster")
    assert engine.betti("hochster") is table
    with pytest.raises(BadArguments):
        engine.betti("eagon-northcott")


def test_betti_on_a_chain():
    core = get_aslkit_engine()
    core.set_poset(chain_poset(3))
    assert core.betti("koszul").entries == {(0, 0): 1}
    assert core.betti("hochster").entries == {(0, 0): 1}


def test_load_poset_resets_cache(engine, poset_file, b2):
    engine.betti("hochster")
    engine.load_poset(poset_file(b2.underlying))
    assert engine.betti_tables == {}
    assert engine.ideal is None
    assert len(engine.poset) == 4


def test_load_poset_bad_path(engine, tmp_path):
    with pytest.raises(FormatError):
        engine.load_poset(str(tmp_path / "absent.poset"))


def test_linear_resolution_needs_distributive_type(forbidden3):
    core = get_aslkit_engine()
    core.set_poset(forbidden3)
    assert core.check("distributive-type") is False
    with pytest.raises(NotDistributiveType):
        core.check("linear-resolution")


def test_engine_field():
    assert get_aslkit_engine(field=Field(3)).field == Field(3)
    assert str(get_aslkit_engine().field) == "q"
    assert "gorenstein" in PROPERTIES


def test_format_verdict():
    assert format_verdict(True) == "yes"
    assert format_verdict(False) == "no"
    assert format_verdict(3) == "3"


def test_format_betti_table():
    text = format_betti_table(BettiTable({(0, 0): 1, (1, 2): 2, (2, 4): 1}, 4))
    lines = text.splitlines()
    assert len(lines) >= 4
    assert "." in text


def test_format_invariants(b2):
    core = get_aslkit_engine()
    core.set_poset(b2.underlying)
    text = format_invariants(core.ring_invariants())
    assert "gorenstein" in text
    assert any(line.startswith("dim") and line.rstrip().endswith(": 3") for line in text.splitlines())
