"""
Lattices, dual order ideals and posets of distributive type

Distributive lattices are built through the Birkhoff correspondence (down-sets of
a poset ordered by inclusion), or directly as boolean and two-prime divisor
lattices. The remaining helpers carve posets of distributive type out of them.
"""
import logging
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from core.config import Caps
from core.errors import (
    BadArguments,
    IdealNotUpwardClosed,
    InternalMismatch,
    NotALattice,
    SizeCapExceeded,
)
from core.poset import Poset

logger = logging.getLogger(__name__)

DISTRIBUTIVITY_CHECK_LIMIT = 512


def set_label(members):
    return "{" + ",".join(members) + "}"


class Lattice:
    """A poset together with its meet and join tables"""

    def __init__(self, underlying, meet, join, kind="explicit", distributive=None, coordinates=None):
        self.underlying = underlying
        self.meet = np.asarray(meet, dtype=np.int64)
        self.join = np.asarray(join, dtype=np.int64)
        self.kind = kind
        self.coordinates = coordinates
        self._distributive_hint = distributive

    @classmethod
    def from_poset(cls, poset, kind="explicit"):
        """Compute meet/join tables; NotALattice if some pair has no unique bound"""
        n = len(poset)
        if not n:
            raise NotALattice("the empty poset is not a lattice")
        leq = poset.leq
        meet = np.zeros((n, n), dtype=np.int64)
        join = np.zeros((n, n), dtype=np.int64)
        for i in range(n):
            for j in range(i, n):
                meet[i, j] = meet[j, i] = _extreme_bound(leq, leq[:, i] & leq[:, j], greatest=True, pair=(poset, i, j))
                join[i, j] = join[j, i] = _extreme_bound(leq, leq[i, :] & leq[j, :], greatest=False, pair=(poset, i, j))
        return cls(poset, meet, join, kind=kind)

    # delegation to the underlying poset
    def __len__(self):
        return len(self.underlying)

    def __repr__(self):
        return f"Lattice({self.kind}, {len(self)} elements)"

    @property
    def elements(self):
        return self.underlying.elements

    @property
    def leq(self):
        return self.underlying.leq

    def index(self, label):
        return self.underlying.index(label)

    @property
    def bottom(self):
        return self.underlying.bottom()

    @property
    def top(self):
        return self.underlying.top()

    def meet_of(self, a, b):
        return self.elements[self.meet[self.index(a), self.index(b)]]

    def join_of(self, a, b):
        return self.elements[self.join[self.index(a), self.index(b)]]

    @cached_property
    def distributive(self):
        n = len(self)
        if n > DISTRIBUTIVITY_CHECK_LIMIT and self._distributive_hint is not None:
            logger.debug("skipping triple check on %d-element lattice", n)
            return self._distributive_hint
        verdict = check_distributive_identity(self.meet, self.join)
        if self._distributive_hint is not None and verdict != self._distributive_hint:
            raise InternalMismatch(f"{self.kind}: distributivity identity gives {verdict}")
        return verdict

    def to_text(self):
        from data.formats import lattice_to_text
        return lattice_to_text(self)


def _extreme_bound(leq, mask, greatest, pair):
    idx = np.flatnonzero(mask)
    if idx.size:
        sub = leq[np.ix_(idx, idx)]
        # greatest: everything in the set lies below it; least: above it
        hits = idx[sub.all(axis=0)] if greatest else idx[sub.all(axis=1)]
        if hits.size == 1:
            return int(hits[0])
    poset, i, j = pair
    what = "meet" if greatest else "join"
    raise NotALattice(f"no {what} for {poset.elements[i]}, {poset.elements[j]}")


def check_distributive_identity(meet, join):
    """x ^ (y v z) == (x ^ y) v (x ^ z) for every triple"""
    for x in range(meet.shape[0]):
        mx = meet[x]
        lhs = mx[join]
        rhs = join[mx[:, None], mx[None, :]]
        if not np.array_equal(lhs, rhs):
            return False
    return True


def check_lattice_laws(lattice, sample=None, rng=None):
    """Commutativity, associativity and absorption; optionally on sampled triples"""
    m, j = lattice.meet, lattice.join
    n = len(lattice)
    if not (np.array_equal(m, m.T) and np.array_equal(j, j.T)):
        return False
    if sample is None:
        triples = ((x, y, z) for x in range(n) for y in range(n) for z in range(n))
    else:
        rng = rng or np.random.default_rng(0)
        triples = (tuple(int(v) for v in rng.integers(0, n, 3)) for _ in range(sample))
    for x, y, z in triples:
        if m[x, m[y, z]] != m[m[x, y], z] or j[x, j[y, z]] != j[j[x, y], z]:
            return False
        if m[x, j[x, y]] != x or j[x, m[x, y]] != x:
            return False
    return True


# ----------------------------------------------------------- constructors

def _ideal_masks(poset, cap):
    below = [sum(1 << k for k in poset.down_set(i) if k != i) for i in range(len(poset))]
    seen = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for mask in frontier:
            for x in range(len(poset)):
                if not mask >> x & 1 and below[x] & ~mask == 0:
                    grown = mask | (1 << x)
                    if grown not in seen:
                        seen.add(grown)
                        nxt.append(grown)
                        if len(seen) > cap:
                            raise SizeCapExceeded("ideal_count", cap, len(seen))
        frontier = nxt
    return sorted(seen, key=lambda m: (bin(m).count("1"), [k for k in range(len(poset)) if m >> k & 1]))


def birkhoff(poset, caps=None, kind=None):
    """Lattice J(P) of down-sets of P ordered by inclusion"""
    caps = caps or Caps()
    masks = _ideal_masks(poset, caps.ideal_count)
    n = len(poset)
    labels = [set_label([poset.elements[k] for k in range(n) if m >> k & 1]) for m in masks]
    arr = np.array(masks, dtype=np.int64)
    leq = (arr[:, None] & ~arr[None, :]) == 0
    position = {m: i for i, m in enumerate(masks)}
    covers = [
        (i, position[m | (1 << x)])
        for i, m in enumerate(masks)
        for x in range(n)
        if not m >> x & 1 and (m | (1 << x)) in position
    ]
    underlying = Poset(labels, covers, leq)
    order = np.argsort(arr)
    ranked = arr[order]
    meet = order[np.searchsorted(ranked, arr[:, None] & arr[None, :])]
    join = order[np.searchsorted(ranked, arr[:, None] | arr[None, :])]
    logger.debug("birkhoff lattice with %d ideals", len(masks))
    return Lattice(underlying, meet, join, kind=kind or "birkhoff", distributive=True)


def boolean(n, caps=None):
    """B_n: subsets of {1..n} under inclusion"""
    caps = caps or Caps()
    if 2 ** n > caps.lattice_elements:
        raise SizeCapExceeded("lattice_elements", caps.lattice_elements, 2 ** n)
    atoms = Poset.from_covers([str(i) for i in range(1, n + 1)], [])
    return birkhoff(atoms, caps, kind=f"boolean {n}")


def divisor(n, m, caps=None):
    """Divisors of 2^n * 3^m: pairs (a, b) ordered componentwise"""
    caps = caps or Caps()
    size = (n + 1) * (m + 1)
    if size > caps.lattice_elements:
        raise SizeCapExceeded("lattice_elements", caps.lattice_elements, size)
    coords = [(a, b) for a in range(n + 1) for b in range(m + 1)]
    labels = [str(2 ** a * 3 ** b) for a, b in coords]
    A = np.array([c[0] for c in coords])
    B = np.array([c[1] for c in coords])
    leq = (A[:, None] <= A[None, :]) & (B[:, None] <= B[None, :])
    position = {c: i for i, c in enumerate(coords)}
    covers = [(position[(a, b)], position[(a + 1, b)]) for a, b in coords if a < n]
    covers += [(position[(a, b)], position[(a, b + 1)]) for a, b in coords if b < m]
    meet = np.array([[position[(min(p[0], q[0]), min(p[1], q[1]))] for q in coords] for p in coords])
    join = np.array([[position[(max(p[0], q[0]), max(p[1], q[1]))] for q in coords] for p in coords])
    return Lattice(Poset(labels, covers, leq), meet, join, kind=f"divisor {n} {m}", distributive=True, coordinates=tuple(coords))


# ----------------------------------------------------- distributive type

def meet_in_poset(poset, i, j):
    """Greatest common lower bound of positions i, j, or None"""
    mask = poset.leq[:, i] & poset.leq[:, j]
    idx = np.flatnonzero(mask)
    if not idx.size:
        return None
    hits = idx[poset.leq[np.ix_(idx, idx)].all(axis=0)]
    return int(hits[0]) if hits.size == 1 else None


def minimal_upper_bounds(poset, alpha, beta):
    """Labels of the minimal common upper bounds of alpha and beta"""
    i, j = poset.index(alpha), poset.index(beta)
    return [poset.elements[k] for k in _minimal_upper_bound_positions(poset, i, j)]


def _minimal_upper_bound_positions(poset, i, j):
    idx = np.flatnonzero(poset.leq[i, :] & poset.leq[j, :])
    if not idx.size:
        return []
    strict = poset.strict[np.ix_(idx, idx)]
    return [int(k) for k in idx[~strict.any(axis=0)]]


def is_distributive_type(poset):
    """Unique minimal element and every [0, a] a distributive lattice"""
    if not len(poset):
        return False
    zero = poset.bottom()
    if zero is None:
        return False
    for a in range(len(poset)):
        mask = poset.leq[zero, :] & poset.leq[:, a]
        try:
            lat = Lattice.from_poset(poset.induced(np.flatnonzero(mask)))
        except NotALattice:
            return False
        if not lat.distributive:
            return False
    return True


def sub_l_a(lattice, a):
    """L_a: elements of L not above a"""
    ai = lattice.index(a)
    return lattice.underlying.induced(np.flatnonzero(~lattice.leq[ai, :]))


def is_simple(lattice):
    return not apices(lattice)


def apices(lattice):
    """Elements other than 0 and 1 comparable to every element"""
    comp = lattice.underlying.comparable
    ends = {lattice.bottom, lattice.top}
    return [lattice.elements[i] for i in range(len(lattice)) if i not in ends and comp[i].all()]


# ------------------------------------------------------- dual order ideals

@dataclass(frozen=True)
class DualOrderIdeal:
    """Upward-closed subset of a lattice, stored by its minimal elements"""
    lattice: Lattice = field(compare=False, repr=False)
    minimal: tuple

    @cached_property
    def carrier(self):
        if not self.minimal:
            return frozenset()
        up = self.lattice.leq[list(self.minimal), :].any(axis=0)
        return frozenset(int(i) for i in np.flatnonzero(up))

    def __len__(self):
        return len(self.carrier)

    def __contains__(self, label):
        return self.lattice.index(label) in self.carrier

    def labels(self):
        return [self.lattice.elements[i] for i in sorted(self.carrier)]

    def minimal_labels(self):
        return [self.lattice.elements[i] for i in self.minimal]

    @classmethod
    def generated_by(cls, lattice, labels):
        idx = {lattice.index(x) for x in labels}
        strict = lattice.underlying.strict
        mins = sorted(i for i in idx if not any(strict[j, i] for j in idx))
        return cls(lattice, tuple(mins))

    @classmethod
    def from_carrier(cls, lattice, labels):
        idx = {lattice.index(x) for x in labels}
        for t in idx:
            for s in np.flatnonzero(lattice.leq[t, :]):
                if int(s) not in idx:
                    raise IdealNotUpwardClosed(
                        f"{lattice.elements[t]} is in the set but {lattice.elements[s]} is not"
                    )
        return cls.generated_by(lattice, labels)

    @classmethod
    def rank_fixed(cls, lattice, r):
        """Everything of rank >= r"""
        return cls(lattice, tuple(lattice.underlying.rank_level(r)))

    @classmethod
    def empty(cls, lattice):
        return cls(lattice, ())

    def to_text(self):
        return "minimal: " + " ".join(self.minimal_labels())


def remove_dual_ideal(lattice, ideal):
    """Induced subposet on L minus I; always of distributive type"""
    if not isinstance(ideal, DualOrderIdeal):
        ideal = DualOrderIdeal.from_carrier(lattice, ideal)
    keep = [i for i in range(len(lattice)) if i not in ideal.carrier]
    if not keep:
        logger.warning("dual ideal covers the whole lattice; complement is empty")
        return Poset.empty()
    result = lattice.underlying.induced(keep)
    if not is_distributive_type(result):
        raise InternalMismatch("complement of a dual order ideal is not of distributive type")
    return result


def enumerate_dual_ideals(lattice, caps=None):
    """Every dual order ideal, one per antichain of minimal elements"""
    caps = caps or Caps()
    n = len(lattice)
    if n > caps.dual_ideal_lattice:
        raise SizeCapExceeded("dual_ideal_lattice", caps.dual_ideal_lattice, n)
    order = [lattice.index(x) for x in lattice.underlying.linear_extension()]
    comp = lattice.underlying.comparable
    comp_mask = {i: sum(1 << k for k in range(n) if comp[i, k]) for i in range(n)}

    def extend(start, chosen, blocked):
        yield DualOrderIdeal(lattice, tuple(sorted(chosen)))
        for pos in range(start, n):
            x = order[pos]
            if not blocked >> x & 1:
                yield from extend(pos + 1, chosen + [x], blocked | comp_mask[x])

    yield from extend(0, [], 0)


def is_rank_fixed(lattice, ideal):
    if not ideal.minimal:
        return True
    r = int(lattice.underlying.ranks[ideal.minimal[0]])
    return set(ideal.minimal) == set(lattice.underlying.rank_level(r))


# --------------------------------------------------- divisor lattice tests

def _require_divisor(lattice):
    if lattice.coordinates is None:
        raise BadArguments(f"{lattice.kind} is not a divisor lattice")
    return lattice.coordinates


def divisor_normal_form(lattice, ideal):
    """Strip pure powers of 2 and 3 from min(I)

    Returns (n', m', remaining minimal coordinates), or None when the complement
    is empty. L minus I equals divisor(n', m') minus the ideal generated by the
    remaining minimal elements.
    """
    coords = _require_divisor(lattice)
    n, m = max(c[0] for c in coords), max(c[1] for c in coords)
    mins = sorted(coords[i] for i in ideal.minimal)
    if (0, 0) in mins:
        return None
    rest = []
    for a, b in mins:
        if b == 0:
            n = a - 1
        elif a == 0:
            m = b - 1
        else:
            rest.append((a, b))
    return n, m, rest


def satisfies_divisor_condition(lattice, ideal):
    """L minus I is divisor(n', m') minus a rank-fixed ideal, for some n', m'"""
    form = divisor_normal_form(lattice, ideal)
    if form is None:
        return True
    n, m, rest = form
    if not rest:
        return True
    ranks = {a + b for a, b in rest}
    if len(ranks) != 1:
        return False
    r = ranks.pop()
    level = {(a, r - a) for a in range(max(0, r - m), min(n, r) + 1)}
    return set(rest) == level


def strip_pure_power(lattice, ideal):
    """Return (L', I') with L' a smaller divisor lattice and L minus I equal to L' minus I'

    Only applies when min(I) contains a pure power of 2 or 3; otherwise None.
    """
    coords = _require_divisor(lattice)
    n, m = max(c[0] for c in coords), max(c[1] for c in coords)
    mins = [coords[i] for i in ideal.minimal]
    for a, b in mins:
        if b == 0 and a > 0:
            smaller = divisor(a - 1, m)
            rest = [c for c in mins if c != (a, b)]
            break
        if a == 0 and b > 0:
            smaller = divisor(n, b - 1)
            rest = [c for c in mins if c != (a, b)]
            break
    else:
        return None
    index = {c: i for i, c in enumerate(smaller.coordinates)}
    return smaller, DualOrderIdeal(smaller, tuple(sorted(index[c] for c in rest)))


# --------------------------------------------------------- face posets

def face_poset(complex_):
    """All faces (including the empty face) ordered by inclusion"""
    faces = sorted(complex_.faces(), key=lambda f: (len(f), sorted(f)))
    labels = [set_label([complex_.vertices[v] for v in sorted(f)]) for f in faces]
    masks = np.array([sum(1 << v for v in f) for f in faces], dtype=object)
    position = {frozenset(f): i for i, f in enumerate(faces)}
    n = len(faces)
    leq = np.array([[masks[i] & ~masks[j] == 0 for j in range(n)] for i in range(n)], dtype=bool)
    covers = [
        (position[frozenset(f - {v})], i) for i, f in enumerate(faces) for v in f
    ]
    result = Poset(labels, covers, leq)
    if not is_distributive_type(result):
        raise InternalMismatch("face poset is not of distributive type")
    return result
