import pytest

from core.config import RATIONALS, Caps
from core.lattice import DualOrderIdeal, boolean, divisor, remove_dual_ideal
from core.poset import antichain_poset, ordinal_sum
from data.data_generator import fixture_path, load_facets_file
from suites.asl import asl_instance, suite_asl
from suites.chordal import chordal_instance, expected_instance, simple_lattice_instance, suite_chordal
from suites.conjecture import POTENTIAL, explore_conjecture
from suites.divposet import divposet_instance, suite_divposet
from suites.gorenstein_level import (
    BOOLEAN_KOSZUL_POSET,
    asymmetric_instance,
    boolean_instance,
    boston_instance,
    suite_gorenstein_level,
)
from suites.la_classification import classify_instance, suite_la_classification
from suites.oracles import suite_oracles
from suites.report import EXIT_OK
from suites.scans import scan_cm_shellable, scan_linear


def assert_clean(report):
    assert report.failures == []
    assert report.inconclusive == []
    assert report.exit_code == EXIT_OK
    assert report.check_totals()


def failed_checks(outcome):
    return [name for name, exp, got in outcome.checks if exp != got]


# ------------------------------------------------------------ whole suites

def test_la_classification_small():
    report = suite_la_classification(max_p=3)
    assert report.instances == 8
    assert_clean(report)
    assert report.config["max_p"] == 3


def test_divposet_small():
    report = suite_divposet(max_rank=3)
    assert_clean(report)
    assert report.instances > 20


def test_chordal_small():
    report = suite_chordal(max_p=4, include_large=False, seed=5)
    assert_clean(report)
    assert report.config["seed"] == 5


def test_gorenstein_level_small():
    report = suite_gorenstein_level(max_n=2, max_p=3, regularity_n=4)
    assert_clean(report)


def test_oracles_small():
    report = suite_oracles(max_p=4, quotients=5, restricts=5, seed=2)
    assert_clean(report)


def test_explore_triangle():
    report = explore_conjecture(load_facets_file(fixture_path("triangle_boundary.facets")))
    assert report.instances == 3
    assert report.exit_code == EXIT_OK
    assert not any(POTENTIAL in note for note in report.notes)


@pytest.mark.slow
def test_asl_suite():
    assert_clean(suite_asl(max_p=4))


@pytest.mark.slow
def test_chordal_with_the_large_example():
    assert_clean(suite_chordal(max_p=5))


@pytest.mark.slow
def test_explore_tetrahedron():
    report = explore_conjecture(load_facets_file(fixture_path("tetrahedron_boundary.facets")))
    assert report.instances == 4
    assert report.exit_code == EXIT_OK


@pytest.mark.slow
def test_la_classification_four():
    assert_clean(suite_la_classification(max_p=4))


# ---------------------------------------------------------- single instances

def test_classify_forbidden_poset(forbidden3):
    outcome = classify_instance(forbidden3, Caps().for_exhaustive(), RATIONALS)
    assert failed_checks(outcome) == []
    assert ("every L_a CM", False, False) in outcome.checks


def test_classify_skips_shelling_after_a_non_cm_interval(forbidden3):
    outcome = classify_instance(forbidden3, Caps().for_exhaustive(), RATIONALS)
    names = [name for name, _, _ in outcome.checks]
    assert "vd => shellable" not in names
    assert ("every L_a shellable", False, False) in outcome.checks
    assert outcome.notes == ["some L_a is not CM; shelling search skipped"]


def test_classify_searches_shellings_for_antichain_sums():
    poset = ordinal_sum(antichain_poset(2), antichain_poset(2))
    outcome = classify_instance(poset, Caps().for_exhaustive(), RATIONALS)
    assert failed_checks(outcome) == []
    assert ("every L_a vertex decomposable", True, True) in outcome.checks
    assert "vd => shellable" in [name for name, _, _ in outcome.checks]
    assert outcome.notes == []


def test_chordal_instance_on_b3(b3):
    outcome = chordal_instance(b3.underlying, Caps(), RATIONALS)
    assert failed_checks(outcome) == []
    assert any(note.startswith("chordless cycle") for note in outcome.notes)


def test_expected_instances():
    assert failed_checks(expected_instance(divisor(1, 2).underlying, True, Caps(), RATIONALS)) == []
    assert failed_checks(expected_instance(divisor(2, 2).underlying, True, Caps(), RATIONALS)) == ["known answer"]


def test_simple_lattice_instance(forbidden3):
    assert failed_checks(simple_lattice_instance(forbidden3, Caps())) == []


def test_divposet_instance_compares_whole_complements(d22):
    ideal = DualOrderIdeal.generated_by(d22, ["4", "6"])
    outcome = divposet_instance(d22, ideal, Caps(), RATIONALS)
    assert failed_checks(outcome) == []
    assert ("strip keeps complement", True, True) in outcome.checks


def test_boolean_h_vector_instances():
    assert failed_checks(asymmetric_instance(5, 2, Caps())) == []
    assert failed_checks(boston_instance(4, 2, Caps())) == []


def _b4_cut_off(rank):
    lattice = boolean(4)
    ideal = DualOrderIdeal.rank_fixed(lattice, rank)
    return ideal, remove_dual_ideal(lattice, ideal)


@pytest.mark.slow
def test_boolean_complement_below_rank_three_uses_koszul():
    ideal, rest = _b4_cut_off(3)
    assert len(rest) == 11
    caps = Caps().with_overrides(koszul_poset=BOOLEAN_KOSZUL_POSET)
    outcome = boolean_instance(4, ideal, rest, caps, RATIONALS)
    assert failed_checks(outcome) == []
    assert outcome.notes[0].endswith("via koszul")
    assert "type 3" in outcome.notes[0]


@pytest.mark.slow
def test_boolean_complement_without_top_falls_back():
    ideal, rest = _b4_cut_off(4)
    assert len(rest) == 15
    caps = Caps().with_overrides(koszul_poset=BOOLEAN_KOSZUL_POSET)
    outcome = boolean_instance(4, ideal, rest, caps, RATIONALS)
    assert failed_checks(outcome) == []
    assert outcome.notes[0].endswith("via artinian")


def test_boolean_rows_record_their_route():
    report = suite_gorenstein_level(max_n=2, max_p=3, regularity_n=4)
    routes = [n for n in report.notes if n.startswith("0-")]
    assert {n.rsplit(" ", 1)[1] for n in routes} == {"koszul", "empty"}


def test_asl_instance_on_b2(b2):
    outcome = asl_instance(b2.underlying, Caps(), RATIONALS)
    assert failed_checks(outcome) == []
    names = [name for name, _, _ in outcome.checks]
    assert sum(name.startswith("groebner basis, extension") for name in names) == 5
    assert sum(name.startswith("leading products, extension") for name in names) == 5


# ------------------------------------------------------------------- scans

def test_scan_linear():
    frame = scan_linear(max_p=4)
    assert list(frame.columns) == ["size", "rank", "lattice", "poset"]
    assert len(frame) > 0
    assert (frame["size"] <= 4).all()


def test_scan_cm_shellable():
    frame = scan_cm_shellable(max_p=2)
    assert len(frame) > 0
    assert frame["agree"].all()
