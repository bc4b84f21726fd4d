import json

import pytest

from core.asl import straightening_generators
from core.complex import SimplicialComplex
from core.errors import CycleDetected, FormatError, UnknownLabel
from core.lattice import DualOrderIdeal, boolean, divisor
from core.poset import Poset, chain_poset
from data.formats import (
    dual_ideal_to_text,
    facets_to_text,
    ideal_to_text,
    load_poset,
    parse_dual_ideal,
    parse_facets,
    parse_lattice,
    parse_poset,
    to_json,
)


def test_parse_poset_with_comments_and_split_covers():
    text = "# a diamond\nelements: 0 a b 1\ncovers: 0<a 0<b\ncovers: a<1 b<1\n"
    p = parse_poset(text)
    assert p.elements == ("0", "a", "b", "1")
    assert len(p.covers) == 4


def test_redundant_covers_are_dropped():
    p = parse_poset("elements: a b c\ncovers: a<b b<c a<c\n")
    assert len(p.covers) == 2


def test_poset_text_survives_a_reparse(nine_element):
    assert parse_poset(nine_element.to_text()) == nine_element
    assert parse_poset(Poset.empty().to_text()) == Poset.empty()


@pytest.mark.parametrize("text", [
    "covers: a<b\n",
    "elements: a b\ncovers: a-b\n",
    "elements: a b\nsizes: 2\n",
    "elements a b\n",
    "elements: a b\ncovers: <b\n",
])
def test_malformed_poset_text(text):
    with pytest.raises(FormatError):
        parse_poset(text)


def test_unknown_label_in_covers():
    with pytest.raises(UnknownLabel):
        parse_poset("elements: a b\ncovers: a<z\n")


def test_cyclic_covers_are_rejected():
    with pytest.raises(CycleDetected):
        parse_poset("elements: a b\ncovers: a<b b<a\n")


def test_lattice_headers_regenerate(b3, d22):
    again = parse_lattice(b3.to_text())
    assert again.kind == "boolean 3"
    assert again.underlying == b3.underlying
    assert parse_lattice(d22.to_text()).kind == "divisor 2 2"
    assert parse_lattice("kind: explicit\n" + chain_poset(3).to_text()).kind == "explicit"
    with pytest.raises(FormatError):
        parse_lattice("kind: divisor 2\nelements: a\n")


def test_dual_ideal_text(d22):
    ideal = DualOrderIdeal.generated_by(d22, ["6", "4"])
    text = dual_ideal_to_text(ideal)
    assert text.startswith("minimal: ")
    assert parse_dual_ideal(text, d22).carrier == ideal.carrier


def test_facets_text():
    c = parse_facets("# circle\na b\nb c\na c\n")
    assert len(c.facets) == 3
    assert parse_facets(facets_to_text(c)) == c
    assert parse_facets("{}\n").facets == SimplicialComplex.from_labels([[]]).facets
    with pytest.raises(FormatError):
        parse_facets("# nothing here\n")


def test_ideal_text():
    text = ideal_to_text(straightening_generators(boolean(2).underlying))
    lines = text.splitlines()
    assert lines[0] == "# straightening ideal, 1 generators"
    assert lines[1].startswith("f({1},{2}) = ")
    assert "-1 * " in lines[1]


def test_ideal_text_of_a_chain():
    assert ideal_to_text(straightening_generators(chain_poset(3))).splitlines() == [
        "# straightening ideal, 0 generators"
    ]


def test_json_is_deterministic(tmp_path):
    path = tmp_path / "out.json"
    text = to_json({"b": 1, "a": [1, 2]}, str(path))
    assert text.index('"a"') < text.index('"b"')
    assert json.loads(path.read_text()) == {"a": [1, 2], "b": 1}
    assert to_json({"a": [1, 2], "b": 1}) == text


def test_load_poset_errors(tmp_path):
    with pytest.raises(FormatError):
        load_poset(str(tmp_path / "missing.poset"))
    bad = tmp_path / "bad.poset"
    bad.write_text("elements: a\ncovers: a\n")
    with pytest.raises(FormatError):
        load_poset(str(bad))


def test_divisor_text_uses_numbers():
    assert "elements: 1 3 2 6\n" in divisor(1, 1).to_text()
