"""
Data Generator Module for aslkit

Instance families for the verification suites: enumerated posets, Birkhoff and
divisor lattices with their dual order ideals, seeded random complexes, and the
bundled fixture files.
"""
import logging
import os

import numpy as np
import pandas as pd

from core.complex import SimplicialComplex
from core.config import Caps
from core.errors import AslkitError
from core.lattice import (
    DualOrderIdeal,
    birkhoff,
    boolean,
    divisor,
    enumerate_dual_ideals,
    is_distributive_type,
    remove_dual_ideal,
)
from core.poset import enumerate_posets
from data.formats import parse_facets, parse_poset, read_text

logger = logging.getLogger(__name__)

FIXTURE_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), "fixtures")


# --------------------------------------------------------------- fixtures

def fixture_path(name):
    return os.path.join(FIXTURE_DIR, name)


def load_poset_file(path):
    return parse_poset(read_text(path))


def load_facets_file(path):
    return parse_facets(read_text(path))


def nine_element_poset():
    """Nine-element example of distributive type"""
    return load_poset_file(fixture_path("nine_element.poset"))


def chordal18_poset():
    """Eighteen-element example whose J_P has a linear resolution"""
    return load_poset_file(fixture_path("chordal18.poset"))


def validate_poset(poset, require_distributive=False):
    """Check a loaded poset before it enters a computation"""
    if poset is None:
        return False, "No poset provided."
    if not len(poset):
        return False, "Poset is empty."
    if require_distributive and not is_distributive_type(poset):
        if poset.bottom() is None:
            return False, "Poset has no unique minimal element, so it is not of distributive type."
        return False, "Some interval [0, a] is not a distributive lattice."
    return True, f"Poset with {len(poset)} elements and {len(poset.covers)} covers."


# ----------------------------------------------------------- enumerations

def all_posets(max_p, caps=None):
    """Every poset with 1..max_p elements, one per isomorphism class"""
    caps = caps or Caps()
    for n in range(1, max_p + 1):
        yield from enumerate_posets(n, caps.enumerate_size)


def distributive_type_posets(max_p, caps=None):
    return (p for p in all_posets(max_p, caps) if is_distributive_type(p))


def divisor_shapes(max_rank):
    """(n, m) with 1 <= n + m <= max_rank"""
    return [(n, m) for n in range(max_rank + 1) for m in range(max_rank + 1 - n) if n + m >= 1]


def rank_fixed_ideals(lattice):
    """The empty ideal, then every rank cut-off from the top rank down to rank 0"""
    top = lattice.underlying.rank
    ideals = [DualOrderIdeal.empty(lattice)]
    ideals += [DualOrderIdeal.rank_fixed(lattice, r) for r in range(top, -1, -1)]
    return ideals


def boolean_complements(n, caps=None):
    """(I, B_n minus I) for every rank-fixed I, including I empty and I = B_n"""
    lattice = boolean(n, caps)
    for ideal in rank_fixed_ideals(lattice):
        yield ideal, remove_dual_ideal(lattice, ideal)


def rank_fixed_complements(max_p, max_rank, caps=None):
    """(P, L, I, L minus I) over L = J(P), |P| <= max_p, rank-fixed I with rank(L minus I) <= max_rank"""
    caps = caps or Caps()
    for p in all_posets(max_p, caps):
        lattice = birkhoff(p, caps)
        for ideal in rank_fixed_ideals(lattice):
            rest = remove_dual_ideal(lattice, ideal)
            if len(rest) and rest.rank <= max_rank:
                yield p, lattice, ideal, rest


def divisor_instances(max_rank, caps=None):
    """(lattice, ideal) for every divisor(n, m) with n + m <= max_rank and every dual ideal"""
    caps = caps or Caps()
    for n, m in divisor_shapes(max_rank):
        lattice = divisor(n, m, caps)
        for ideal in enumerate_dual_ideals(lattice, caps):
            yield lattice, ideal


# --------------------------------------------------------- random samples

def random_complex(rng, max_vertices=10, max_facets=6):
    """Random complex on 2..max_vertices vertices; every vertex lies in some facet"""
    m = int(rng.integers(2, max_vertices + 1))
    labels = [f"v{i}" for i in range(m)]
    facets = []
    for _ in range(int(rng.integers(1, max_facets + 1))):
        size = int(rng.integers(1, min(4, m) + 1))
        facets.append(frozenset(int(v) for v in rng.choice(m, size=size, replace=False)))
    covered = set().union(*facets)
    facets += [frozenset({v}) for v in range(m) if v not in covered]
    return SimplicialComplex(labels, facets)


def sample_complexes(count, seed=0, max_vertices=10):
    rng = np.random.default_rng(seed)
    return [random_complex(rng, max_vertices) for _ in range(count)]


def sample_intervals(posets, count, seed=0):
    """Random (a, b) interval endpoints, one draw per sample, from a list of posets"""
    rng = np.random.default_rng(seed)
    picks = []
    if not posets:
        return picks
    for _ in range(count):
        p = posets[int(rng.integers(len(posets)))]
        a = int(rng.integers(len(p)))
        above = p.up_set(a)
        b = above[int(rng.integers(len(above)))]
        picks.append((p, p.elements[a], p.elements[b]))
    return picks


def instance_frame(posets):
    """Summary table of a poset family"""
    rows = []
    for p in posets:
        try:
            rank = p.rank
            pure = p.is_pure()
        except AslkitError:
            rank, pure = None, None
        rows.append({
            "size": len(p),
            "covers": len(p.covers),
            "rank": rank,
            "pure": pure,
            "distributive_type": is_distributive_type(p),
        })
    return pd.DataFrame(rows)
