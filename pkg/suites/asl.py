"""
Straightening laws

For every poset of distributive type: the quadratic generators form a Gröbner
basis, straightened products satisfy the least-factor condition, the Hilbert
function counts multichains, the initial ideal is the Stanley-Reisner ideal of
Δ(P), and R_K[P] is Cohen-Macaulay exactly when P is.
"""
import logging

import numpy as np

from core.asl import (
    asl2_violations,
    buchberger_check,
    hilbert_function,
    initial_ideal,
    join_meet_generators,
    leading_products,
    straightening_generators,
)
from core.betti import ring_invariants
from core.config import RATIONALS, Caps
from core.lattice import Lattice, boolean
from core.poset import random_linear_extension
from core.topology import is_cm_poset
from data.data_generator import distributive_type_posets, nine_element_poset
from suites.report import Job, Outcome, run_jobs, suite_config

logger = logging.getLogger(__name__)

DEFAULT_MAX_P = 6
HILBERT_DEGREES = 3
RANDOM_EXTENSIONS = 5


def _random_orders(poset, seed):
    rng = np.random.default_rng(seed)
    return [random_linear_extension(poset, rng) for _ in range(RANDOM_EXTENSIONS)]


def asl_instance(poset, caps, field, with_invariants=True):
    outcome = Outcome()
    ideal = straightening_generators(poset)
    outcome.expect("groebner basis", True, buchberger_check(ideal, caps=caps))
    outcome.expect("least-factor law", [], [str(v) for v in asl2_violations(ideal)])
    for d in range(HILBERT_DEGREES + 1):
        hilbert_function(poset, d, caps, ideal)
    initial_ideal(ideal)
    for t, order in enumerate(_random_orders(poset, caps.seed)):
        other = straightening_generators(poset, order)
        outcome.expect(f"leading products, extension {t}", True, leading_products(other))
        outcome.expect(f"groebner basis, extension {t}", True, buchberger_check(other, caps=caps))
    if poset.top() is not None:
        # a lattice: the join-meet binomials are the same generators
        lattice = Lattice.from_poset(poset)
        binomials = join_meet_generators(lattice, ideal.order)
        outcome.expect("join-meet ideal", set(map(str, ideal.generators)), set(map(str, binomials.generators)))
    if with_invariants:
        inv = ring_invariants(poset, field, caps)
        outcome.expect("CM(R) iff CM(P)", is_cm_poset(poset, field, caps), inv.cm)
    return outcome


def suite_asl(max_p=DEFAULT_MAX_P, caps=None, field=RATIONALS, workers=1, progress=False):
    caps = caps or Caps()
    jobs = [
        Job(f"0-{k:05d}", poset.to_text().strip().replace("\n", "; "), asl_instance, (poset, caps, field))
        for k, poset in enumerate(distributive_type_posets(max_p, caps))
    ]
    wide = caps.with_overrides(buchberger_poset=max(caps.buchberger_poset, 9))
    jobs.append(Job("1-nine-element", "nine-element poset", asl_instance, (nine_element_poset(), wide, field)))
    jobs.append(Job("1-boolean3", "boolean 3", asl_instance, (boolean(3, caps).underlying, caps, field)))
    return run_jobs("asl", jobs, suite_config(caps, field, max_p=max_p), workers, progress)
