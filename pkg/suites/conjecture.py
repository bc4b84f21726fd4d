"""
Explore level-ness below rank cut-offs of a face poset

The input facets are taken on trust as a sphere. For every rank cut-off of the
face poset (including none) the report lists Gorenstein, level and h-vector; a
non-level ring is flagged as a potential counterexample but never as a failure.
"""
import logging

from core.betti import ring_invariants
from core.config import RATIONALS, Caps
from core.lattice import face_poset
from suites.report import Job, Outcome, run_jobs, suite_config

logger = logging.getLogger(__name__)

POTENTIAL = "POTENTIAL COUNTEREXAMPLE"


def cutoff_instance(poset, cutoff, caps, field):
    outcome = Outcome()
    inv = ring_invariants(poset, field, caps)
    outcome.note(
        f"ranks < {cutoff}: {len(poset)} faces, gorenstein={inv.gorenstein}, level={inv.level}, "
        f"type={inv.cm_type}, h={list(inv.h_vector)}"
    )
    if not inv.level:
        logger.warning("%s: R_K[P minus I] is not level below rank %d", POTENTIAL, cutoff)
        outcome.note(f"{POTENTIAL}: not level below rank {cutoff}")
    return outcome


def explore_conjecture(complex_, caps=None, field=RATIONALS, workers=1, progress=False, source=None):
    caps = caps or Caps()
    poset = face_poset(complex_)
    jobs = []
    for cutoff in range(poset.rank + 1, 0, -1):
        keep = [i for i in range(len(poset)) if poset.ranks[i] < cutoff]
        rest = poset.induced(keep)
        name = "I empty" if cutoff > poset.rank else f"I = faces with at least {cutoff} vertices"
        jobs.append(Job(f"{cutoff:03d}", name, cutoff_instance, (rest, cutoff, caps, field)))
    config = suite_config(caps, field, source=source, facets=len(complex_.facets))
    return run_jobs("explore", jobs, config, workers, progress)
