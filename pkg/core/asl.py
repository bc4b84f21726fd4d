"""
Straightening-law ideals

For a poset P of distributive type, J_P lives in the polynomial ring with one
variable per element. Ring generators are ordered by the reversed linear
extension, so sympy's grevlex is exactly the reverse order in which x_a < x_b
whenever a < b in P, and every generator f_{a,b} has leading monomial x_a x_b.
"""
import itertools
import logging
from math import comb

import networkx as nx
import numpy as np
from sympy import Symbol
from sympy.polys.domains import QQ
from sympy.polys.groebnertools import spoly
from sympy.polys.orderings import grevlex
from sympy.polys.rings import PolyRing

from core.complex import SimplicialComplex, order_complex
from core.config import Caps
from core.errors import (
    BadArguments,
    InternalMismatch,
    NotDistributiveType,
    SizeCapExceeded,
)
from core.lattice import _minimal_upper_bound_positions, is_distributive_type, meet_in_poset
from core.linalg import rank

logger = logging.getLogger(__name__)


class StraighteningIdeal:
    """Quadratic generators of J_P (or of a join-meet ideal) with their ring"""

    def __init__(self, poset, order, kind="straightening"):
        self.poset = poset
        self.order = list(order)
        self.kind = kind
        m = len(poset)
        self.ring = PolyRing([Symbol(f"x{k}") for k in range(m)], QQ, grevlex)
        # generator k of the ring is the (m-1-k)-th element of the linear extension
        self.position = {}
        for k, label in enumerate(reversed(self.order)):
            self.position[poset.index(label)] = k
        self.element_at = {k: i for i, k in self.position.items()}
        self.generators = []
        self.pairs = []
        self._product_cache = {}

    def __repr__(self):
        return f"StraighteningIdeal({self.kind}, {len(self.generators)} generators)"

    # -------------------------------------------------------------- monomials

    def exponents(self, elements):
        """Exponent tuple of the product of the given element positions"""
        exps = [0] * len(self.poset)
        for i in elements:
            exps[self.position[i]] += 1
        return tuple(exps)

    def support(self, exps):
        """Element positions of a monomial, with multiplicity, in linear-extension order"""
        out = []
        for k in reversed(range(len(exps))):
            out.extend([self.element_at[k]] * exps[k])
        return out

    def variable(self, label):
        return self.ring.gens[self.position[self.poset.index(label)]]

    def monomial(self, elements):
        return self.ring({self.exponents(elements): QQ(1)})

    def is_standard(self, exps):
        """Support is a multichain"""
        sup = self.support(exps)
        leq = self.poset.leq
        return all(leq[a, b] for a, b in zip(sup, sup[1:]))

    def add_generator(self, alpha, beta, poly):
        lead = self.exponents([alpha, beta])
        if poly.LM != lead:
            raise InternalMismatch(
                f"leading monomial of f({self.poset.elements[alpha]},{self.poset.elements[beta]}) is not x_a x_b"
            )
        self.pairs.append((self.poset.elements[alpha], self.poset.elements[beta]))
        self.generators.append(poly)

    # ------------------------------------------------------------- reduction

    def normal_form(self, f):
        return normal_form(f, self)

    def times_variable(self, i, exps):
        """Normal form of x_i times a standard monomial, as {exponents: coefficient}"""
        key = (i, exps)
        hit = self._product_cache.get(key)
        if hit is None:
            grown = list(exps)
            grown[self.position[i]] += 1
            grown = tuple(grown)
            if self.is_standard(grown):
                hit = {grown: QQ(1)}
            else:
                hit = dict(normal_form(self.ring({grown: QQ(1)}), self).items())
            self._product_cache[key] = hit
        return hit


def _check_order(poset, order):
    if sorted(order) != sorted(poset.elements):
        raise BadArguments("order must list every element exactly once")
    pos = {label: k for k, label in enumerate(order)}
    for i, j in poset.covers:
        if pos[poset.elements[i]] > pos[poset.elements[j]]:
            raise BadArguments("order does not refine the poset")


def _incomparable_pairs(poset):
    comp = poset.comparable
    n = len(poset)
    return [(i, j) for i in range(n) for j in range(i + 1, n) if not comp[i, j]]


def straightening_generators(poset, order=None):
    """J_P: x_a x_b - x_{a^b} * sum of minimal upper bounds, or x_a x_b without any"""
    if not is_distributive_type(poset):
        raise NotDistributiveType(repr(poset))
    order = order or poset.linear_extension()
    _check_order(poset, order)
    ideal = StraighteningIdeal(poset, order)
    for a, b in _incomparable_pairs(poset):
        f = ideal.monomial([a, b])
        bounds = _minimal_upper_bound_positions(poset, a, b)
        if bounds:
            low = meet_in_poset(poset, a, b)
            if low is None:
                raise NotDistributiveType(f"no meet for {poset.elements[a]}, {poset.elements[b]}")
            for g in bounds:
                f -= ideal.monomial([low, g])
        ideal.add_generator(a, b, f)
    logger.debug("J_P with %d generators on %d variables", len(ideal.generators), len(poset))
    return ideal


def leading_products(ideal):
    """Every generator leads with x_a x_b under the ideal's own extension"""
    poset = ideal.poset
    return all(
        g.LM == ideal.exponents([poset.index(a), poset.index(b)]) for (a, b), g in zip(ideal.pairs, ideal.generators)
    )


def join_meet_generators(lattice, order=None):
    """x_a x_b - x_{a v b} x_{a ^ b} for every incomparable pair of a lattice"""
    poset = lattice.underlying
    order = order or poset.linear_extension()
    _check_order(poset, order)
    ideal = StraighteningIdeal(poset, order, kind="join-meet")
    for a, b in _incomparable_pairs(poset):
        f = ideal.monomial([a, b]) - ideal.monomial([int(lattice.join[a, b]), int(lattice.meet[a, b])])
        ideal.add_generator(a, b, f)
    return ideal


def normal_form(f, ideal):
    """Remainder of f on division by the generators in the reverse order"""
    if not ideal.generators:
        return f
    return f.rem(ideal.generators)


def buchberger_check(ideal, strict=False, caps=None):
    """Every S-polynomial of the generators reduces to zero"""
    caps = caps or Caps()
    if len(ideal.poset) > caps.buchberger_poset:
        raise SizeCapExceeded("buchberger_poset", caps.buchberger_poset, len(ideal.poset))
    gens = ideal.generators
    for (p, f), (q, g) in itertools.combinations(enumerate(gens), 2):
        if not strict and all(a == 0 or b == 0 for a, b in zip(f.LM, g.LM)):
            continue  # coprime leading terms
        remainder = spoly(f, g, ideal.ring).rem(gens)
        if remainder:
            logger.warning("S-pair %s, %s leaves %s", ideal.pairs[p], ideal.pairs[q], remainder)
            return False
    return True


def asl2_violations(ideal):
    """Pairs whose straightened product has a standard term with least factor not below both"""
    poset = ideal.poset
    leq = poset.leq
    bad = []
    for a_label, b_label in ideal.pairs:
        a, b = poset.index(a_label), poset.index(b_label)
        nf = normal_form(ideal.monomial([a, b]), ideal)
        for exps, _ in nf.terms():
            if not ideal.is_standard(exps):
                bad.append((a_label, b_label, exps))
                continue
            least = ideal.support(exps)[0]
            if not (leq[least, a] and leq[least, b]):
                bad.append((a_label, b_label, exps))
    return bad


# ------------------------------------------------------ standard monomials

def standard_monomials(poset, d):
    """Yield every multichain g_1 <= ... <= g_d as a tuple of labels"""
    if d < 0:
        raise BadArguments("degree must be nonnegative")
    order = [poset.index(x) for x in poset.linear_extension()]
    leq = poset.leq

    def extend(start, chain):
        if len(chain) == d:
            yield tuple(poset.elements[i] for i in chain)
            return
        for k in range(start, len(order)):
            y = order[k]
            if not chain or leq[chain[-1], y]:
                yield from extend(k, chain + [y])

    yield from extend(0, [])


def count_standard_monomials(poset, d):
    """Number of multichains of length d, by a matrix recursion"""
    if d == 0:
        return 1
    if not len(poset):
        return 0
    up = poset.leq.T.astype(object)
    counts = np.ones(len(poset), dtype=object)
    for _ in range(d - 1):
        counts = up.dot(counts)
    return int(counts.sum())


def standard_basis(ideal, d):
    """Exponent tuples of the degree-d standard monomials"""
    return [
        ideal.exponents([ideal.poset.index(x) for x in chain])
        for chain in standard_monomials(ideal.poset, d)
    ]


def initial_ideal(ideal):
    """Stanley-Reisner complex of the leading-term ideal; must equal the order complex"""
    poset = ideal.poset
    graph = nx.Graph()
    graph.add_nodes_from(range(len(poset)))
    for g in ideal.generators:
        sup = [k for k, e in enumerate(g.LM) if e]
        if sum(g.LM) != 2 or len(sup) != 2:
            raise InternalMismatch(f"leading monomial {g.LM} is not squarefree quadratic")
        graph.add_edge(ideal.element_at[sup[0]], ideal.element_at[sup[1]])
    faces = [frozenset(c) for c in nx.find_cliques(nx.complement(graph))]
    result = SimplicialComplex(poset.elements, faces)
    if len(poset) and result != order_complex(poset):
        raise InternalMismatch("initial ideal is not the Stanley-Reisner ideal of the order complex")
    return result


def hilbert_function(poset, d, caps=None, ideal=None):
    """dim_K of the degree-d piece of K[P]/J_P, counted two ways"""
    caps = caps or Caps()
    if d > caps.hilbert_degree:
        raise SizeCapExceeded("hilbert_degree", caps.hilbert_degree, d)
    if d < 0:
        raise BadArguments("degree must be nonnegative")
    counted = count_standard_monomials(poset, d)
    m = len(poset)
    if d < 2 or not m:
        by_rank = comb(m + d - 1, d) if m else int(d == 0)
    else:
        ideal = ideal or straightening_generators(poset)
        monomials = {}
        for combo in itertools.combinations_with_replacement(range(m), d):
            exps = [0] * m
            for k in combo:
                exps[k] += 1
            monomials[tuple(exps)] = len(monomials)
        rows = []
        shifts = list(itertools.combinations_with_replacement(range(m), d - 2))
        for g in ideal.generators:
            for combo in shifts:
                row = {}
                for exps, coeff in g.items():
                    grown = list(exps)
                    for k in combo:
                        grown[k] += 1
                    row[monomials[tuple(grown)]] = coeff
                rows.append(row)
        by_rank = len(monomials) - rank(rows, len(monomials))
    if by_rank != counted:
        raise InternalMismatch(f"Hilbert function in degree {d}: {by_rank} by rank, {counted} by counting")
    return counted
