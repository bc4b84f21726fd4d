"""
Gorenstein and level complements

  * boolean: R_K[B_n minus I], I rank-fixed, is Gorenstein exactly for I empty,
    I = {1}, complement {0} and empty complement; every such ring is level;
  * rank-del: for L = J(P) and rank(L minus I) <= 2 the Gorenstein property is
    decided by the rank sizes (rho_1, rho_2);
  * regularity: reg R_K[B_n minus I] = rank(B_n minus I) for cut-offs 1..n-2;
  * Boston: h_d of Δ((B_n minus I) minus {0}) is binomial(n - 1, d);
  * Hibi: R_K[J(P)] is Gorenstein iff P is pure.
"""
import logging
from math import comb

from core.betti import regularity_of_complement, ring_invariants
from core.complex import fh_vectors, order_complex
from core.config import RATIONALS, Caps
from core.lattice import DualOrderIdeal, birkhoff, boolean, remove_dual_ideal
from data.data_generator import all_posets, boolean_complements, rank_fixed_complements
from suites.report import Job, Outcome, run_jobs, suite_config

logger = logging.getLogger(__name__)

DEFAULT_MAX_N = 4
REGULARITY_MAX_N = 6
RANK_DEL_MAX_P = 5
HIBI_MAX_P = 3
# B_4 complements up to this size go through Koszul homology
BOOLEAN_KOSZUL_POSET = 12
GORENSTEIN_PAIRS = {(1, 1), (1, 2), (2, 1), (3, 3)}


def boolean_instance(n, ideal, rest, caps, field):
    """Gorenstein exactly in the four listed cases; level always"""
    outcome = Outcome()
    size = 2 ** n
    expected = len(ideal) in (0, 1) or len(rest) in (0, 1)
    inv = ring_invariants(rest, field, caps, cross_check=len(rest) <= caps.koszul_poset)
    outcome.expect("gorenstein", expected, inv.gorenstein)
    outcome.expect("level", True, inv.level)
    outcome.note(f"|B_{n} minus I| = {len(rest)} of {size}: type {inv.cm_type}, h = {list(inv.h_vector)}, via {inv.source}")
    return outcome


def asymmetric_instance(n, d, caps):
    """Large boolean complements: an asymmetric h-vector rules out Gorenstein"""
    outcome = Outcome()
    lattice = boolean(n, caps)
    rest = remove_dual_ideal(lattice, DualOrderIdeal.rank_fixed(lattice, d + 1))
    h = list(fh_vectors(order_complex(rest)).h)
    while len(h) > 1 and h[-1] == 0:
        h.pop()
    outcome.expect("h-vector asymmetric", True, h != h[::-1])
    return outcome


def boston_instance(n, d, caps):
    """h_d of the order complex of the proper part below rank d + 1"""
    outcome = Outcome()
    lattice = boolean(n, caps)
    rest = remove_dual_ideal(lattice, DualOrderIdeal.rank_fixed(lattice, d + 1))
    proper = rest.induced([i for i in range(len(rest)) if i != rest.bottom()])
    h = fh_vectors(order_complex(proper)).h
    outcome.expect("h_d", comb(n - 1, d), h[d])
    return outcome


def regularity_instance(n, d, caps, field):
    outcome = Outcome()
    lattice = boolean(n, caps)
    rest = remove_dual_ideal(lattice, DualOrderIdeal.rank_fixed(lattice, d + 1))
    reg = regularity_of_complement(rest, field, caps, cross_check=len(rest) <= 32)
    outcome.expect("reg = rank", rest.rank, reg)
    return outcome


def rank_del_instance(lattice, rest, caps, field):
    outcome = Outcome()
    r = rest.rank
    rho = [len(lattice.underlying.rank_level(k)) for k in range(r + 1)]
    if r == 0:
        expected = True
    elif r == 1:
        expected = rho[1] <= 2
    else:
        expected = (rho[1], rho[2]) in GORENSTEIN_PAIRS
    inv = ring_invariants(rest, field, caps)
    outcome.expect("gorenstein from rank sizes", expected, inv.gorenstein)
    if r == 2:
        proper = rest.induced([i for i in range(len(rest)) if i != rest.bottom()])
        h2 = 1 - len(proper) + len(proper.covers)
        outcome.expect("cm", True, inv.cm)
        outcome.expect("h-vector", (1, rho[1] + rho[2] - 2, h2), tuple(list(inv.h_vector) + [0] * 3)[:3])
    return outcome


def hibi_instance(poset, caps, field):
    outcome = Outcome()
    lattice = birkhoff(poset, caps)
    inv = ring_invariants(lattice.underlying, field, caps)
    outcome.expect("gorenstein iff P pure", poset.is_pure(), inv.gorenstein)
    return outcome


def _text(poset):
    return poset.to_text().strip().replace("\n", "; ")


def suite_gorenstein_level(max_n=DEFAULT_MAX_N, caps=None, field=RATIONALS, workers=1, progress=False,
                           max_p=RANK_DEL_MAX_P, regularity_n=REGULARITY_MAX_N):
    caps = caps or Caps()
    jobs = []
    koszul_caps = caps.with_overrides(koszul_poset=max(caps.koszul_poset, BOOLEAN_KOSZUL_POSET))
    for n in range(1, max_n + 1):
        for k, (ideal, rest) in enumerate(boolean_complements(n, caps)):
            jobs.append(Job(f"0-{n}-{k:03d}", f"boolean {n}; {ideal.to_text()}", boolean_instance,
                            (n, ideal, rest, koszul_caps, field)))
    for n in range(max_n + 1, regularity_n + 1):
        for d in range(1, n - 1):
            jobs.append(Job(f"1-{n}-{d}", f"boolean {n}; ranks >= {d + 1}", asymmetric_instance, (n, d, caps)))
    for n in range(3, regularity_n + 1):
        for d in range(1, n - 1):
            jobs.append(Job(f"2-{n}-{d}", f"boolean {n}; ranks >= {d + 1}", boston_instance, (n, d, caps)))
            jobs.append(Job(f"3-{n}-{d}", f"boolean {n}; ranks >= {d + 1}", regularity_instance, (n, d, caps, field)))
    for k, (poset, lattice, ideal, rest) in enumerate(rank_fixed_complements(max_p, 2, caps)):
        jobs.append(Job(f"4-{k:05d}", f"J({_text(poset)}); {ideal.to_text()}", rank_del_instance,
                        (lattice, rest, caps, field)))
    for k, poset in enumerate(all_posets(HIBI_MAX_P, caps)):
        jobs.append(Job(f"5-{k:05d}", f"J({_text(poset)})", hibi_instance, (poset, caps, field)))
    config = suite_config(caps, field, max_n=max_n, max_p=max_p, regularity_n=regularity_n)
    return run_jobs("gorenstein-level", jobs, config, workers, progress)
