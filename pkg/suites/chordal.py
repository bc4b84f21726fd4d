"""
Linear resolutions and chordal comparability graphs

J_P has a linear resolution iff Com(P) is chordal. The suite decides the left
side through Hochster's formula on the squarefree initial ideal I_Δ(P) and the
right side by maximum cardinality search, cross-checked against networkx.
"""
import logging

import networkx as nx
import numpy as np

from core.betti import chordless_cycle_witness, has_linear_resolution, hochster_betti, hochster_linear, is_chordal
from core.complex import order_complex
from core.config import RATIONALS, Caps
from core.lattice import birkhoff, boolean, divisor, enumerate_dual_ideals, is_simple, remove_dual_ideal
from core.poset import antichain_poset, chain_poset, comparability_graph, disjoint_union
from data.data_generator import all_posets, chordal18_poset, distributive_type_posets
from suites.report import Job, Outcome, run_jobs, suite_config

logger = logging.getLogger(__name__)

DEFAULT_MAX_P = 7
MONOTONICITY_SAMPLES = 40


def _record_witness(outcome, graph, chordal):
    witness = chordless_cycle_witness(graph)
    outcome.expect("witness exists iff not chordal", not chordal, witness is not None)
    if witness is not None:
        outcome.expect("witness length >= 4", True, len(witness) >= 4)
        outcome.note(f"chordless cycle {' '.join(witness)}")


def chordal_instance(poset, caps, field, full_table=True):
    """Both sides of the equivalence for one poset of distributive type"""
    outcome = Outcome()
    graph = comparability_graph(poset)
    chordal = is_chordal(graph)
    outcome.expect("mcs agrees with networkx", nx.is_chordal(graph), chordal)
    delta = order_complex(poset)
    if full_table:
        table = hochster_betti(delta, field, caps)
        linear = table.is_linear()
        outcome.expect("generated in degree 2", True, set(table.column(1)) <= {2})
    else:
        linear = hochster_linear(delta, field, caps)
    outcome.expect("linear resolution iff chordal", chordal, linear)
    outcome.expect("has_linear_resolution", chordal, has_linear_resolution(poset))
    _record_witness(outcome, graph, chordal)
    return outcome


def expected_instance(poset, expected, caps, field):
    """Named example with a known answer"""
    outcome = chordal_instance(poset, caps, field, full_table=len(poset) <= 12)
    outcome.expect("known answer", expected, is_chordal(comparability_graph(poset)))
    return outcome


def simple_lattice_instance(poset, caps):
    """A simple J(P) has linear J_L iff it is D_{2 3^n}, i.e. P = point + chain of n"""
    outcome = Outcome()
    lattice = birkhoff(poset, caps)
    target = disjoint_union(antichain_poset(1), chain_poset(len(poset) - 1))
    expected = poset.is_isomorphic(target)
    outcome.expect("linear iff D_{2 3^n}", expected, has_linear_resolution(lattice.underlying))
    return outcome


def monotonicity_instance(lattice, smaller, larger):
    """I contained in I', J_{L minus I} linear => J_{L minus I'} linear"""
    outcome = Outcome()
    first = remove_dual_ideal(lattice, smaller)
    second = remove_dual_ideal(lattice, larger)
    linear_first = not len(first) or has_linear_resolution(first)
    linear_second = not len(second) or has_linear_resolution(second)
    outcome.expect("monotone", True, not linear_first or linear_second)
    return outcome


def _monotonicity_jobs(caps, seed, count):
    rng = np.random.default_rng(seed)
    lattices = [birkhoff(p, caps) for p in all_posets(4, caps)]
    lattices = [lat for lat in lattices if len(lat) <= caps.dual_ideal_lattice]
    jobs = []
    while len(jobs) < count:
        lattice = lattices[int(rng.integers(len(lattices)))]
        ideals = list(enumerate_dual_ideals(lattice, caps))
        first = ideals[int(rng.integers(len(ideals)))]
        supersets = [j for j in ideals if first.carrier <= j.carrier]
        second = supersets[int(rng.integers(len(supersets)))]
        instance = f"{lattice.kind} {lattice.elements}; {first.to_text()} within {second.to_text()}"
        jobs.append(Job(f"3-{len(jobs):05d}", instance, monotonicity_instance, (lattice, first, second)))
    return jobs


def suite_chordal(max_p=DEFAULT_MAX_P, caps=None, field=RATIONALS, workers=1, progress=False, seed=None,
                  include_large=True):
    caps = caps or Caps()
    seed = caps.seed if seed is None else seed
    jobs = []
    for k, poset in enumerate(distributive_type_posets(max_p, caps)):
        jobs.append(Job(f"0-{k:05d}", poset.to_text().strip().replace("\n", "; "), chordal_instance, (poset, caps, field)))

    named = [(f"D(2*3^{n})", divisor(1, n, caps).underlying, True) for n in range(1, 5)]
    named.append(("B_3", boolean(3, caps).underlying, False))
    named.append(("D(2^2*3^2)", divisor(2, 2, caps).underlying, False))
    if include_large:
        named.append(("eighteen-element chordal poset", chordal18_poset(), True))
    for k, (name, poset, expected) in enumerate(named):
        jobs.append(Job(f"1-{k:05d}", name, expected_instance, (poset, expected, caps, field)))

    # the two-element chain J(point) is simple too, but has no incomparable pair at all
    simple = (p for p in all_posets(min(max_p, 5), caps) if len(p) >= 2 and is_simple(birkhoff(p, caps)))
    for k, poset in enumerate(simple):
        jobs.append(Job(f"2-{k:05d}", "J(" + poset.to_text().strip().replace("\n", "; ") + ")",
                        simple_lattice_instance, (poset, caps)))

    jobs.extend(_monotonicity_jobs(caps, seed, MONOTONICITY_SAMPLES))
    config = suite_config(caps, field, max_p=max_p, seed=seed)
    return run_jobs("chordal", jobs, config, workers, progress)
