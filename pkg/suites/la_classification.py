"""
L_a classification

For L = J(P): every L_a is vertex decomposable iff every L_a is shellable iff
every L_a is Cohen-Macaulay iff P is an ordinal sum of antichains. On simple
lattices the same conditions single out the boolean lattices.
"""
import logging

from core.complex import order_complex
from core.config import RATIONALS, Caps
from core.lattice import birkhoff, is_simple, sub_l_a
from core.poset import is_sum_of_antichains
from core.topology import is_cohen_macaulay, is_shellable, is_vertex_decomposable
from data.data_generator import all_posets
from suites.report import Job, Outcome, implication_ladder, run_jobs, suite_config

logger = logging.getLogger(__name__)

DEFAULT_MAX_P = 5


def classify_instance(poset, caps, field):
    """Check the four-way equivalence for L = J(P)

    Homology runs on every L_a first. Shellings and vertex decompositions are
    only searched when every L_a is Cohen-Macaulay, since one non-CM L_a
    already rules out both.
    """
    outcome = Outcome()
    lattice = birkhoff(poset, caps)
    antichains = is_sum_of_antichains(poset)
    complexes = []
    for a in range(len(lattice)):
        if a == lattice.bottom:
            continue  # L_0 is empty
        complexes.append(order_complex(sub_l_a(lattice, lattice.elements[a])))

    all_cm = True
    for delta in complexes:
        pure = delta.is_pure()
        cm = is_cohen_macaulay(delta, field, caps)
        outcome.expect("cm => pure", True, not cm or pure)
        if not cm:
            all_cm = False
            break

    all_shellable = all_vd = all_cm
    if all_cm:
        for delta in complexes:
            shellable = is_shellable(delta, caps, field)
            vd = is_vertex_decomposable(delta, caps)
            implication_ladder(outcome, vd, shellable, True, delta.is_pure())
            all_shellable &= shellable
            all_vd &= vd
    else:
        outcome.note("some L_a is not CM; shelling search skipped")
    outcome.expect("every L_a CM", antichains, all_cm)
    outcome.expect("every L_a shellable", antichains, all_shellable)
    outcome.expect("every L_a vertex decomposable", antichains, all_vd)
    if is_simple(lattice):
        # a simple J(P) is boolean exactly when P is an antichain
        outcome.expect("simple: all L_a CM iff boolean", not poset.covers, all_cm)
    return outcome


def suite_la_classification(max_p=DEFAULT_MAX_P, caps=None, field=RATIONALS, workers=1, progress=False):
    caps = (caps or Caps()).for_exhaustive()
    jobs = [
        Job(f"{k:05d}", poset.to_text().strip().replace("\n", "; "), classify_instance, (poset, caps, field))
        for k, poset in enumerate(all_posets(max_p, caps))
    ]
    logger.info("la-classification: %d posets with at most %d elements", len(jobs), max_p)
    config = suite_config(caps, field, max_p=max_p)
    return run_jobs("la-classification", jobs, config, workers, progress)
