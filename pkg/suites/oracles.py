"""
Cross-validation of the Betti oracles

  * Koszul and Hochster tables agree on random squarefree monomial quotients;
  * beta(S/in J_P) dominates beta(S/J_P), with equal pd and reg;
  * intervals with unique minimal upper bounds have smaller Betti numbers;
  * vertex decomposable => shellable => Cohen-Macaulay => pure on every sample.
"""
import logging
from functools import lru_cache

from core.betti import hochster_betti, koszul_betti
from core.complex import order_complex
from core.config import RATIONALS, Caps
from core.lattice import _minimal_upper_bound_positions
from core.topology import is_cohen_macaulay, is_shellable, is_vertex_decomposable
from data.data_generator import distributive_type_posets, sample_complexes, sample_intervals
from data.formats import facets_to_text
from suites.report import Job, Outcome, implication_ladder, run_jobs, suite_config

logger = logging.getLogger(__name__)

DEFAULT_MAX_P = 7
QUOTIENT_SAMPLES = 50
RESTRICT_SAMPLES = 100


@lru_cache(maxsize=256)
def _koszul(poset, caps):
    return koszul_betti(poset, caps)


def quotient_instance(complex_, caps, field):
    outcome = Outcome()
    koszul = koszul_betti(complex_, caps)
    hochster = hochster_betti(complex_, RATIONALS, caps)
    outcome.expect("koszul = hochster", hochster.entries, koszul.entries)
    cm = is_cohen_macaulay(complex_, field, caps)
    shellable = is_shellable(complex_, caps, field)
    vd = is_vertex_decomposable(complex_, caps)
    implication_ladder(outcome, vd, shellable, cm, complex_.is_pure())
    return outcome


def transfer_instance(poset, caps, field):
    """Semicontinuity and equal pd / reg for J_P and its initial ideal"""
    outcome = Outcome()
    koszul = _koszul(poset, caps)
    initial = hochster_betti(order_complex(poset), RATIONALS, caps)
    outcome.expect("initial dominates", True, koszul.dominated_by(initial))
    outcome.expect("pd", initial.pd, koszul.pd)
    outcome.expect("reg", initial.reg, koszul.reg)
    return outcome


def _unique_upper_bounds(poset):
    n = len(poset)
    return all(len(_minimal_upper_bound_positions(poset, i, j)) <= 1 for i in range(n) for j in range(i + 1, n))


def restrict_instance(poset, a, b, caps):
    outcome = Outcome()
    small = _koszul(poset.interval(a, b), caps)
    big = _koszul(poset, caps)
    outcome.expect("interval dominated", True, small.dominated_by(big))
    return outcome


def suite_oracles(max_p=DEFAULT_MAX_P, caps=None, field=RATIONALS, workers=1, progress=False, seed=None,
                  quotients=QUOTIENT_SAMPLES, restricts=RESTRICT_SAMPLES):
    caps = (caps or Caps()).for_exhaustive()
    seed = caps.seed if seed is None else seed
    jobs = []
    for k, complex_ in enumerate(sample_complexes(quotients, seed, caps.koszul_poset)):
        jobs.append(Job(f"0-{k:05d}", facets_to_text(complex_).strip().replace("\n", " | "), quotient_instance,
                        (complex_, caps, field)))
    posets = list(distributive_type_posets(max_p, caps))
    for k, poset in enumerate(posets):
        jobs.append(Job(f"1-{k:05d}", poset.to_text().strip().replace("\n", "; "), transfer_instance,
                        (poset, caps, field)))
    eligible = [p for p in posets if _unique_upper_bounds(p)]
    for k, (poset, a, b) in enumerate(sample_intervals(eligible, restricts, seed)):
        instance = f"[{a}, {b}] in {poset.to_text().strip().replace(chr(10), '; ')}"
        jobs.append(Job(f"2-{k:05d}", instance, restrict_instance, (poset, a, b, caps)))
    config = suite_config(caps, field, max_p=max_p, seed=seed, quotients=quotients, restricts=restricts)
    return run_jobs("oracles", jobs, config, workers, progress)
