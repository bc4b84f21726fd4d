import pytest

from core.complex import SimplicialComplex
from core.config import Caps
from core.errors import BadArguments, IdealNotUpwardClosed, InternalMismatch, NotALattice, SizeCapExceeded
from core.lattice import (
    DualOrderIdeal,
    Lattice,
    apices,
    birkhoff,
    boolean,
    check_distributive_identity,
    check_lattice_laws,
    divisor,
    divisor_normal_form,
    enumerate_dual_ideals,
    face_poset,
    is_distributive_type,
    is_rank_fixed,
    is_simple,
    minimal_upper_bounds,
    remove_dual_ideal,
    satisfies_divisor_condition,
    strip_pure_power,
    sub_l_a,
)
from core.poset import Poset, antichain_poset, chain_poset, disjoint_union, from_covers
from core.topology import is_cm_poset
from data.data_generator import all_posets


def m3():
    return from_covers(["0", "a", "b", "c", "1"], [("0", "a"), ("0", "b"), ("0", "c"), ("a", "1"), ("b", "1"), ("c", "1")])


def n5():
    return from_covers(["0", "a", "b", "c", "1"], [("0", "a"), ("a", "b"), ("b", "1"), ("0", "c"), ("c", "1")])


def test_birkhoff_of_antichain_is_boolean():
    lattice = birkhoff(antichain_poset(3))
    assert len(lattice) == 8
    assert lattice.underlying.is_isomorphic(boolean(3).underlying)
    assert lattice.distributive


def test_birkhoff_of_chain_is_chain():
    lattice = birkhoff(chain_poset(3))
    assert len(lattice) == 4
    assert len(lattice.underlying.maximal_chains()) == 1


def test_birkhoff_of_two_chains_is_a_grid():
    two_chains = disjoint_union(chain_poset(1, "a"), chain_poset(2, "b"))
    assert birkhoff(two_chains).underlying.is_isomorphic(divisor(1, 2).underlying)


def test_birkhoff_meet_and_join(b2):
    assert b2.meet_of("{1}", "{2}") == "{}"
    assert b2.join_of("{1}", "{2}") == "{1,2}"
    assert b2.elements[b2.bottom] == "{}"
    assert b2.elements[b2.top] == "{1,2}"


def test_birkhoff_cap():
    with pytest.raises(SizeCapExceeded):
        birkhoff(antichain_poset(8), Caps(ideal_count=100))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_birkhoff_lattices_are_distributive(n):
    for p in all_posets(n):
        lattice = birkhoff(p)
        assert check_distributive_identity(lattice.meet, lattice.join)
        assert check_lattice_laws(lattice)


def test_boolean_and_divisor_shapes(d22):
    assert len(boolean(0)) == 1
    assert divisor(1, 1).underlying.is_isomorphic(boolean(2).underlying)
    assert len(d22) == 9
    assert d22.underlying.rank == 4
    assert d22.underlying.rank_sizes() == [1, 2, 3, 2, 1]
    assert d22.meet_of("4", "3") == "1"
    assert d22.join_of("4", "3") == "12"
    with pytest.raises(SizeCapExceeded):
        boolean(13)
    with pytest.raises(SizeCapExceeded):
        divisor(3, 3, Caps(lattice_elements=10))


def test_lattice_laws_sampled(d22):
    assert check_lattice_laws(d22, sample=200)


def test_non_distributive_lattices():
    for poset in (m3(), n5()):
        lattice = Lattice.from_poset(poset)
        assert not lattice.distributive
        assert check_lattice_laws(lattice)
        assert not is_distributive_type(poset)


def test_distributive_hint_is_checked():
    lattice = Lattice.from_poset(m3())
    bad = Lattice(lattice.underlying, lattice.meet, lattice.join, distributive=True)
    with pytest.raises(InternalMismatch):
        bad.distributive


def test_not_a_lattice():
    with pytest.raises(NotALattice):
        Lattice.from_poset(antichain_poset(2))
    with pytest.raises(NotALattice):
        Lattice.from_poset(Poset.empty())


def test_distributive_type(nine_element, chordal18, b3):
    assert is_distributive_type(nine_element)
    assert is_distributive_type(chordal18)
    assert is_distributive_type(b3.underlying)
    assert not is_distributive_type(antichain_poset(2))
    assert not is_distributive_type(Poset.empty())


def test_sub_l_a(b2, b3):
    assert len(sub_l_a(b3, "{}")) == 0
    assert len(sub_l_a(b3, "{1,2,3}")) == 7
    chain = sub_l_a(b2, "{1}")
    assert chain.elements == ("{}", "{2}")
    assert chain.le("{}", "{2}")


def test_remove_dual_ideal(b2, b3, d22):
    assert remove_dual_ideal(b3, DualOrderIdeal.empty(b3)) == b3.underlying
    minus_top = remove_dual_ideal(b3, DualOrderIdeal.generated_by(b3, ["{1,2,3}"]))
    assert len(minus_top) == 7 and "{1,2,3}" not in minus_top
    everything = remove_dual_ideal(b2, DualOrderIdeal.rank_fixed(b2, 0))
    assert len(everything) == 0
    # minimal element 2*3 of the 3x3 grid: two chains glued at the bottom
    rest = remove_dual_ideal(d22, DualOrderIdeal.generated_by(d22, ["6"]))
    assert rest.elements == ("1", "3", "9", "2", "4")
    assert not is_cm_poset(rest)


def test_remove_accepts_carrier_sets(b2):
    rest = remove_dual_ideal(b2, ["{1}", "{1,2}"])
    assert rest.elements == ("{}", "{2}")
    with pytest.raises(IdealNotUpwardClosed):
        remove_dual_ideal(b2, ["{1}"])


def test_remove_always_gives_distributive_type():
    for p in all_posets(3):
        lattice = birkhoff(p)
        for ideal in enumerate_dual_ideals(lattice):
            rest = remove_dual_ideal(lattice, ideal)
            assert not len(rest) or is_distributive_type(rest)


def test_enumerate_dual_ideals(b2):
    assert len(list(enumerate_dual_ideals(birkhoff(chain_poset(2))))) == 4
    assert len(list(enumerate_dual_ideals(b2))) == 6
    assert len(list(enumerate_dual_ideals(divisor(1, 1)))) == 6
    with pytest.raises(SizeCapExceeded):
        list(enumerate_dual_ideals(boolean(5)))


def test_dual_ideal_carriers_are_distinct(d22):
    carriers = [ideal.carrier for ideal in enumerate_dual_ideals(d22)]
    assert len(carriers) == len(set(carriers))
    for carrier in carriers:
        for t in carrier:
            for s in range(len(d22)):
                if d22.leq[t, s]:
                    assert s in carrier


def test_rank_fixed(b3, d22):
    assert is_rank_fixed(b3, DualOrderIdeal.empty(b3))
    assert is_rank_fixed(b3, DualOrderIdeal.rank_fixed(b3, 2))
    assert len(DualOrderIdeal.rank_fixed(b3, 2)) == 4
    assert not is_rank_fixed(d22, DualOrderIdeal.generated_by(d22, ["4", "6"]))


def test_minimal_upper_bounds(nine_element, b2):
    assert minimal_upper_bounds(nine_element, "x1", "x3") == ["x3"]
    assert sorted(minimal_upper_bounds(nine_element, "x2", "x3")) == ["x6", "x7"]
    minus_top = remove_dual_ideal(b2, DualOrderIdeal.generated_by(b2, ["{1,2}"]))
    assert minimal_upper_bounds(minus_top, "{1}", "{2}") == []


def test_simple_and_apices(b3):
    assert is_simple(b3)
    assert is_simple(boolean(2))
    assert is_simple(divisor(1, 2))
    chain = birkhoff(chain_poset(3))
    assert not is_simple(chain)
    assert apices(chain) == ["{c0}", "{c0,c1}"]


def test_face_poset(b3):
    vertex = SimplicialComplex.from_labels([["a"]])
    assert len(face_poset(vertex)) == 2
    triangle = SimplicialComplex.from_labels([["a", "b"], ["b", "c"], ["a", "c"]])
    faces = face_poset(triangle)
    assert len(faces) == 7
    assert faces.rank_sizes() == [1, 3, 3]
    simplex = SimplicialComplex.simplex(["1", "2", "3"])
    assert face_poset(simplex).is_isomorphic(b3.underlying)


def test_divisor_normal_form(d22):
    assert divisor_normal_form(d22, DualOrderIdeal.generated_by(d22, ["1"])) is None
    assert divisor_normal_form(d22, DualOrderIdeal.generated_by(d22, ["4", "6"])) == (1, 2, [(1, 1)])
    with pytest.raises(BadArguments):
        divisor_normal_form(boolean(2), DualOrderIdeal.empty(boolean(2)))


def test_divisor_condition(d22):
    assert satisfies_divisor_condition(d22, DualOrderIdeal.empty(d22))
    assert satisfies_divisor_condition(d22, DualOrderIdeal.rank_fixed(d22, 2))
    assert not satisfies_divisor_condition(d22, DualOrderIdeal.generated_by(d22, ["6"]))
    # stripping 4 leaves divisor(1, 2) minus the ideal above 6, which is not rank-fixed
    assert not satisfies_divisor_condition(d22, DualOrderIdeal.generated_by(d22, ["4", "6"]))
    assert satisfies_divisor_condition(d22, DualOrderIdeal.generated_by(d22, ["4", "18"]))


def test_strip_pure_power(d22):
    ideal = DualOrderIdeal.generated_by(d22, ["4", "6"])
    smaller, smaller_ideal = strip_pure_power(d22, ideal)
    assert smaller.kind == "divisor 1 2"
    assert smaller_ideal.minimal_labels() == ["6"]
    assert remove_dual_ideal(smaller, smaller_ideal) == remove_dual_ideal(d22, ideal)
    assert strip_pure_power(d22, DualOrderIdeal.generated_by(d22, ["6"])) is None
