import pytest

from core.complex import SimplicialComplex, barycentric_subdivision, cone, fh_vectors, order_complex, skeleton_complex
from core.config import RATIONALS, Caps, Field
from core.errors import EmptyPoset, Inconclusive, SizeCapExceeded
from core.lattice import DualOrderIdeal, birkhoff, divisor, remove_dual_ideal, sub_l_a
from core.poset import Poset, chain_poset
from core.topology import (
    homology_of_facets,
    is_cm_poset,
    is_cohen_macaulay,
    is_shellable,
    is_shellable_poset,
    is_vd_poset,
    is_vertex_decomposable,
    reduced_homology,
    strong_core,
)
from data.data_generator import all_posets, sample_complexes
from suites.report import Outcome, implication_ladder


def bowtie():
    """Two 3-cycles sharing one vertex"""
    return SimplicialComplex.from_labels([("1", "2"), ("2", "3"), ("1", "3"), ("1", "4"), ("4", "5"), ("1", "5")])


def test_homology_of_simplex():
    assert reduced_homology(SimplicialComplex.simplex("abc")).is_acyclic()


@pytest.mark.parametrize("field", [RATIONALS, Field(2), Field(3)])
def test_homology_of_square(square, field):
    profile = reduced_homology(square, field)
    assert profile.degree(1) == 1
    assert profile.degree(0) == 0
    assert profile.degree(-1) == 0


def test_homology_of_two_points():
    profile = reduced_homology(SimplicialComplex.from_labels([["a"], ["b"]]))
    assert profile.degree(0) == 1


def test_homology_of_empty_complex():
    assert reduced_homology(SimplicialComplex.empty()).degree(-1) == 1


def test_euler_poincare():
    for c in sample_complexes(15, seed=2):
        assert reduced_homology(c).euler == fh_vectors(c).euler


def test_cones_are_acyclic(square):
    assert reduced_homology(cone(square)).is_acyclic()
    assert homology_of_facets(cone(square).facets) is None


def test_strong_core_collapses_cones(square):
    assert len(strong_core(cone(square).facets)) == 1
    assert len(strong_core(square.facets)) == 4


def test_homology_cap(square):
    with pytest.raises(SizeCapExceeded):
        reduced_homology(square, caps=Caps(homology_faces=4))


def test_cohen_macaulay():
    assert is_cohen_macaulay(bowtie())
    assert is_cohen_macaulay(bowtie(), Field(2))
    # two filled triangles glued at a vertex: the link there is disconnected
    glued = SimplicialComplex.from_labels([("1", "2", "3"), ("1", "4", "5")])
    assert not is_cohen_macaulay(glued)
    assert not is_cohen_macaulay(SimplicialComplex.from_labels([("a", "b"), ("c",)]))


def test_corner_complement_is_not_cm(d22):
    rest = remove_dual_ideal(d22, DualOrderIdeal.generated_by(d22, ["6"]))
    assert not is_cohen_macaulay(order_complex(rest))


def test_shellable(b3):
    assert is_shellable(SimplicialComplex.simplex("abcd"))
    assert is_shellable(order_complex(b3.underlying))
    assert is_shellable(bowtie())
    edges = SimplicialComplex.from_labels([("a", "b"), ("c", "d")])
    assert not is_shellable(edges)


def test_distributive_lattices_are_shellable():
    for p in all_posets(3):
        assert is_shellable_poset(birkhoff(p).underlying)


def test_shelling_search_budget(b3):
    with pytest.raises(Inconclusive):
        is_shellable(order_complex(b3.underlying), Caps(node_budget=0))
    with pytest.raises(SizeCapExceeded):
        is_shellable(order_complex(b3.underlying), Caps(shell_facets=2))


def test_vertex_decomposable():
    assert is_vertex_decomposable(SimplicialComplex.simplex("abc"))
    assert not is_vertex_decomposable(SimplicialComplex.from_labels([("a", "b"), ("c", "d")]))
    assert not is_vertex_decomposable(SimplicialComplex.from_labels([("a", "b"), ("c",)]))


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_skeleton_complexes_are_vertex_decomposable(n):
    for mask in range(1, 2 ** n):
        subset = {k + 1 for k in range(n) if mask >> k & 1}
        assert is_vertex_decomposable(skeleton_complex(n, subset))


@pytest.mark.parametrize("n", [3, 4])
def test_subdivided_skeletons_are_vertex_decomposable(n):
    for mask in range(1, 2 ** n):
        subset = {k + 1 for k in range(n) if mask >> k & 1}
        assert is_vertex_decomposable(barycentric_subdivision(skeleton_complex(n, subset)))


def test_poset_oracles(forbidden3, b3):
    chain = chain_poset(3)
    assert is_cm_poset(chain) and is_shellable_poset(chain) and is_vd_poset(chain)
    lattice = birkhoff(forbidden3)
    assert not is_cm_poset(sub_l_a(lattice, "{p1,q1}"))
    with pytest.raises(EmptyPoset):
        is_cm_poset(Poset.empty())


def test_intervals_of_cm_posets_are_cm(b3):
    p = b3.underlying
    assert is_cm_poset(p)
    for a in p.elements:
        for b in p.elements:
            if p.le(a, b):
                assert is_cm_poset(p.interval(a, b))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_interval_and_reisner_methods_agree(n):
    for p in all_posets(n):
        assert is_cm_poset(p) == is_cm_poset(p, method="reisner")


def test_grid_complements_follow_the_ladder():
    lattice = divisor(1, 2)
    for ideal in [DualOrderIdeal.empty(lattice), DualOrderIdeal.generated_by(lattice, ["9"])]:
        delta = order_complex(remove_dual_ideal(lattice, ideal))
        outcome = Outcome()
        implication_ladder(outcome, is_vertex_decomposable(delta), is_shellable(delta),
                           is_cohen_macaulay(delta), delta.is_pure())
        assert all(expected == got for _, expected, got in outcome.checks)


def test_implication_ladder_on_random_complexes():
    for c in sample_complexes(25, seed=5, max_vertices=7):
        vd = is_vertex_decomposable(c)
        shellable = is_shellable(c)
        cm = is_cohen_macaulay(c)
        assert not vd or shellable
        assert not shellable or cm
        assert not cm or c.is_pure()
