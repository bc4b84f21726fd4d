"""
Complements in two-prime divisor lattices

For L = D_{2^n 3^m} and a dual order ideal I, four conditions must agree:
L minus I is a divisor lattice minus a rank-fixed ideal (after stripping pure
powers of 2 and 3 from min I), and Δ(L minus I) is vertex decomposable,
shellable and Cohen-Macaulay.
"""
import logging

from core.complex import order_complex
from core.config import RATIONALS, Caps
from core.lattice import remove_dual_ideal, satisfies_divisor_condition, strip_pure_power
from core.topology import is_cohen_macaulay, is_shellable, is_vertex_decomposable
from data.data_generator import divisor_instances
from suites.report import Job, Outcome, implication_ladder, run_jobs, suite_config

logger = logging.getLogger(__name__)

DEFAULT_MAX_RANK = 5


def divposet_instance(lattice, ideal, caps, field):
    outcome = Outcome()
    structural = satisfies_divisor_condition(lattice, ideal)
    rest = remove_dual_ideal(lattice, ideal)

    # stripping a pure power must not change the complement
    stripped = strip_pure_power(lattice, ideal)
    if stripped is not None:
        smaller, smaller_ideal = stripped
        again = remove_dual_ideal(smaller, smaller_ideal)
        outcome.expect("strip keeps complement", True, rest == again)
        outcome.expect("strip keeps structure", structural, satisfies_divisor_condition(smaller, smaller_ideal))

    if not len(rest):
        return outcome
    delta = order_complex(rest)
    cm = is_cohen_macaulay(delta, field, caps)
    shellable = is_shellable(delta, caps, field)
    vd = is_vertex_decomposable(delta, caps)
    implication_ladder(outcome, vd, shellable, cm, delta.is_pure())
    outcome.expect("vertex decomposable", structural, vd)
    outcome.expect("shellable", structural, shellable)
    outcome.expect("cohen-macaulay", structural, cm)
    return outcome


def suite_divposet(max_rank=DEFAULT_MAX_RANK, caps=None, field=RATIONALS, workers=1, progress=False):
    caps = (caps or Caps()).for_exhaustive()
    jobs = []
    for k, (lattice, ideal) in enumerate(divisor_instances(max_rank, caps)):
        instance = f"{lattice.kind}; {ideal.to_text()}"
        jobs.append(Job(f"{k:05d}", instance, divposet_instance, (lattice, ideal, caps, field)))
    logger.info("divposet: %d (lattice, ideal) pairs up to rank %d", len(jobs), max_rank)
    return run_jobs("divposet", jobs, suite_config(caps, field, max_rank=max_rank), workers, progress)
