"""
Finite posets

A Poset keeps its elements as opaque string labels and works on their positions
internally. The order is stored as a closed boolean numpy matrix `leq` together
with the irredundant cover pairs.
"""
import itertools
import logging
from functools import cached_property, lru_cache

import networkx as nx
import numpy as np

from core.errors import (
    BadArguments,
    CycleDetected,
    EmptyPoset,
    InternalMismatch,
    NotComparable,
    SizeCapExceeded,
    UnknownLabel,
)

logger = logging.getLogger(__name__)

MAX_ENUMERATION_SIZE = 7


class Poset:
    """Immutable finite poset on labelled elements"""

    def __init__(self, elements, covers, leq):
        self.elements = tuple(elements)
        self.covers = tuple(sorted(covers))
        leq = np.asarray(leq, dtype=bool)
        if leq.shape != (len(self.elements), len(self.elements)):
            raise BadArguments("order matrix shape does not match element count")
        leq.setflags(write=False)
        self.leq = leq
        self._index = {label: i for i, label in enumerate(self.elements)}
        if len(self._index) != len(self.elements):
            raise BadArguments("element labels must be distinct")

    # ------------------------------------------------------------------ build

    @classmethod
    def from_covers(cls, elements, cover_pairs):
        """Build from labels and (lower, upper) label pairs; redundant pairs are dropped"""
        elements = tuple(str(e) for e in elements)
        index = {label: i for i, label in enumerate(elements)}
        if len(index) != len(elements):
            raise BadArguments("element labels must be distinct")
        n = len(elements)
        rel = np.eye(n, dtype=bool)
        for lo, hi in cover_pairs:
            if lo not in index:
                raise UnknownLabel(lo)
            if hi not in index:
                raise UnknownLabel(hi)
            if lo == hi:
                raise CycleDetected(f"{lo}<{hi}")
            rel[index[lo], index[hi]] = True
        # Warshall closure, one pivot at a time
        for k in range(n):
            rel |= np.outer(rel[:, k], rel[k, :])
        both = rel & rel.T
        np.fill_diagonal(both, False)
        if both.any():
            i, j = map(int, np.argwhere(both)[0])
            raise CycleDetected(f"{elements[i]} and {elements[j]} lie on a common cycle")
        return cls.from_relation(elements, rel)

    @classmethod
    def from_relation(cls, elements, leq):
        """Build from an already closed order matrix"""
        leq = np.asarray(leq, dtype=bool)
        n = leq.shape[0]
        strict = leq & ~np.eye(n, dtype=bool)
        if n:
            s = strict.astype(np.int64)
            implied = (s @ s) > 0
            cover = strict & ~implied
        else:
            cover = strict
        covers = [(int(i), int(j)) for i, j in np.argwhere(cover)]
        return cls(elements, covers, leq)

    @classmethod
    def empty(cls):
        return cls((), (), np.zeros((0, 0), dtype=bool))

    # ------------------------------------------------------------- accessors

    def __len__(self):
        return len(self.elements)

    def __contains__(self, label):
        return label in self._index

    def __iter__(self):
        return iter(self.elements)

    def __eq__(self, other):
        if not isinstance(other, Poset):
            return NotImplemented
        return self.elements == other.elements and np.array_equal(self.leq, other.leq)

    def __hash__(self):
        return hash((self.elements, self.covers))

    def __repr__(self):
        return f"Poset({len(self)} elements, {len(self.covers)} covers)"

    def index(self, label):
        try:
            return self._index[label]
        except KeyError:
            raise UnknownLabel(label) from None

    def label(self, i):
        return self.elements[i]

    def le(self, a, b):
        return bool(self.leq[self.index(a), self.index(b)])

    def lt(self, a, b):
        return a != b and self.le(a, b)

    @cached_property
    def strict(self):
        s = self.leq & ~np.eye(len(self), dtype=bool)
        s.setflags(write=False)
        return s

    @cached_property
    def comparable(self):
        c = self.leq | self.leq.T
        c.setflags(write=False)
        return c

    @cached_property
    def lower_covers(self):
        low = [[] for _ in self.elements]
        for i, j in self.covers:
            low[j].append(i)
        return tuple(tuple(x) for x in low)

    @cached_property
    def upper_covers(self):
        up = [[] for _ in self.elements]
        for i, j in self.covers:
            up[i].append(j)
        return tuple(tuple(x) for x in up)

    def minimal(self):
        return [i for i in range(len(self)) if not self.lower_covers[i]]

    def maximal(self):
        return [i for i in range(len(self)) if not self.upper_covers[i]]

    def bottom(self):
        """Index of the unique minimal element, or None"""
        mins = self.minimal()
        return mins[0] if len(mins) == 1 else None

    def top(self):
        maxs = self.maximal()
        return maxs[0] if len(maxs) == 1 else None

    # ----------------------------------------------------------------- ranks

    @cached_property
    def topological_order(self):
        below = self.leq.sum(axis=0)
        return tuple(int(i) for i in np.lexsort((np.arange(len(self)), below)))

    @cached_property
    def ranks(self):
        """Length of the longest chain ending at each element"""
        r = np.zeros(len(self), dtype=np.int64)
        for i in self.topological_order:
            low = self.lower_covers[i]
            if low:
                r[i] = max(r[c] for c in low) + 1
        r.setflags(write=False)
        return r

    def rank_of(self, label):
        return int(self.ranks[self.index(label)])

    @property
    def rank(self):
        if not len(self):
            raise EmptyPoset("rank of the empty poset")
        return int(self.ranks.max())

    def rank_level(self, r):
        return [i for i in range(len(self)) if self.ranks[i] == r]

    def rank_sizes(self):
        """Number of elements in each rank, from rank 0 upwards"""
        return [len(self.rank_level(r)) for r in range(self.rank + 1)]

    def is_pure(self):
        if not len(self):
            raise EmptyPoset("purity of the empty poset")
        shortest = np.zeros(len(self), dtype=np.int64)
        for i in self.topological_order:
            low = self.lower_covers[i]
            shortest[i] = 1 + (min(shortest[c] for c in low) if low else 0)
        tops = self.maximal()
        longest = [self.ranks[i] + 1 for i in tops]
        return bool(min(shortest[i] for i in tops) == max(longest))

    # ---------------------------------------------------------- subposets

    def induced(self, indices):
        """Induced subposet on the given positions, keeping element order"""
        idx = sorted(set(int(i) for i in indices))
        sub = self.leq[np.ix_(idx, idx)] if idx else np.zeros((0, 0), dtype=bool)
        return Poset.from_relation([self.elements[i] for i in idx], sub)

    def induced_labels(self, labels):
        return self.induced(self.index(x) for x in labels)

    def interval(self, a, b):
        i, j = self.index(a), self.index(b)
        if not self.leq[i, j]:
            raise NotComparable(f"{a} is not below {b}")
        mask = self.leq[i, :] & self.leq[:, j]
        return self.induced(np.flatnonzero(mask))

    def down_set(self, i):
        return [int(k) for k in np.flatnonzero(self.leq[:, i])]

    def up_set(self, i):
        return [int(k) for k in np.flatnonzero(self.leq[i, :])]

    def linear_extension(self):
        """Labels sorted by (rank, input position)"""
        order = sorted(range(len(self)), key=lambda i: (int(self.ranks[i]), i))
        return [self.elements[i] for i in order]

    def maximal_chains(self):
        """All maximal chains as ascending tuples of positions"""
        chains = []
        stack = [(m,) for m in reversed(self.minimal())]
        while stack:
            chain = stack.pop()
            ups = self.upper_covers[chain[-1]]
            if not ups:
                chains.append(chain)
                continue
            for u in reversed(ups):
                stack.append(chain + (u,))
        return sorted(chains)

    def relabel(self, labels):
        if len(labels) != len(self):
            raise BadArguments("relabel needs one label per element")
        return Poset(labels, self.covers, self.leq)

    def dual(self):
        return Poset.from_relation(self.elements, self.leq.T)

    # ----------------------------------------------------------- isomorphism

    @cached_property
    def canonical_code(self):
        code, _ = _canonical_form(self.strict.tolist())
        return (len(self), code)

    def is_isomorphic(self, other):
        return self.canonical_code == other.canonical_code

    def to_text(self):
        from data.formats import poset_to_text
        return poset_to_text(self)


# --------------------------------------------------------------- builders

def from_covers(elements, cover_pairs):
    return Poset.from_covers(elements, cover_pairs)


def chain_poset(n, prefix="c"):
    labels = [f"{prefix}{i}" for i in range(n)]
    return Poset.from_covers(labels, zip(labels, labels[1:]))


def antichain_poset(n, prefix="a"):
    return Poset.from_covers([f"{prefix}{i}" for i in range(n)], [])


def disjoint_union(p, q):
    """Disjoint union; labels of q are primed when they clash with p"""
    q_labels = [x if x not in p else x + "'" for x in q.elements]
    pairs = [(p.elements[i], p.elements[j]) for i, j in p.covers]
    pairs += [(q_labels[i], q_labels[j]) for i, j in q.covers]
    return Poset.from_covers(list(p.elements) + q_labels, pairs)


def ordinal_sum(p, q):
    """Every element of p placed below every element of q"""
    q_labels = [x if x not in p else x + "'" for x in q.elements]
    pairs = [(p.elements[i], p.elements[j]) for i, j in p.covers]
    pairs += [(q_labels[i], q_labels[j]) for i, j in q.covers]
    pairs += [(p.elements[i], q_labels[j]) for i in p.maximal() for j in q.minimal()]
    return Poset.from_covers(list(p.elements) + q_labels, pairs)


# ---------------------------------------------------------- plain queries

def rank_of(poset, x):
    return poset.rank_of(x)


def is_pure(poset):
    return poset.is_pure()


def interval(poset, a, b):
    return poset.interval(a, b)


def linear_extension(poset):
    return poset.linear_extension()


def _two_element_test(poset):
    comp = poset.comparable
    for p1, p2 in np.argwhere(poset.strict):
        if not np.all(comp[p1] | comp[p2]):
            return False
    return True


def _rank_level_test(poset):
    if not len(poset) or not poset.is_pure():
        return not len(poset)
    r = poset.ranks
    lower_rank = r[:, None] < r[None, :]
    return bool(np.all(poset.strict[lower_rank]))


def _ordinal_sum_test(poset):
    remaining = set(range(len(poset)))
    strict = poset.strict
    while remaining:
        level = [i for i in remaining if not any(strict[j, i] for j in remaining)]
        rest = remaining.difference(level)
        if not all(strict[i, j] for i in level for j in rest):
            return False
        remaining = rest
    return True


def is_sum_of_antichains(poset):
    """True iff the poset is an ordinal sum of antichains; three tests must agree"""
    verdicts = (_two_element_test(poset), _rank_level_test(poset), _ordinal_sum_test(poset))
    if len(set(verdicts)) != 1:
        raise InternalMismatch(f"antichain-sum tests disagree: {verdicts}")
    return verdicts[0]


def comparability_graph(poset):
    """networkx Graph on element labels joining comparable pairs"""
    g = nx.Graph()
    g.add_nodes_from(poset.elements)
    g.add_edges_from(
        (poset.elements[i], poset.elements[j]) for i, j in np.argwhere(poset.strict)
    )
    return g


# ------------------------------------------------------------ enumeration

def _canonical_form(strict):
    """Minimal encoding of a strict order over invariant-respecting relabellings

    Returns (code, ordering). Elements are first grouped by an isomorphism
    invariant (down/up counts, refined by the invariants of their neighbours),
    then every ordering that keeps the groups in invariant order is tried.
    """
    n = len(strict)
    down = [sum(strict[j][i] for j in range(n)) for i in range(n)]
    up = [sum(strict[i]) for i in range(n)]
    base = [(down[i], up[i]) for i in range(n)]
    refined = [
        (
            base[i],
            tuple(sorted(base[j] for j in range(n) if strict[j][i])),
            tuple(sorted(base[j] for j in range(n) if strict[i][j])),
        )
        for i in range(n)
    ]
    groups = {}
    for i in range(n):
        groups.setdefault(refined[i], []).append(i)
    blocks = [groups[key] for key in sorted(groups)]

    best_code, best_order = None, None
    for parts in itertools.product(*(itertools.permutations(b) for b in blocks)):
        order = [i for part in parts for i in part]
        code = 0
        for a in order:
            row = strict[a]
            for b in order:
                code = (code << 1) | row[b]
        if best_code is None or code < best_code:
            best_code, best_order = code, order
    return best_code, best_order


def _down_sets(strict):
    n = len(strict)
    below = [sum(1 << j for j in range(n) if strict[j][i]) for i in range(n)]
    for mask in range(1 << n):
        if all(below[i] & ~mask == 0 for i in range(n) if mask >> i & 1):
            yield mask


@lru_cache(maxsize=None)
def _canonical_level(n):
    """Canonical strict matrices of all n-element posets, sorted by code"""
    if n == 1:
        return (((0,),),)
    found = {}
    for smaller in _canonical_level(n - 1):
        for mask in _down_sets(smaller):
            grown = [list(row) + [0] for row in smaller]
            for i in range(n - 1):
                if mask >> i & 1:
                    grown[i][n - 1] = 1
            grown.append([0] * n)
            code, order = _canonical_form(grown)
            if code not in found:
                found[code] = tuple(tuple(grown[a][b] for b in order) for a in order)
    logger.debug("enumerated %d posets on %d elements", len(found), n)
    return tuple(found[c] for c in sorted(found))


def enumerate_posets(n, cap=MAX_ENUMERATION_SIZE):
    """Yield one representative of every isomorphism class of n-element posets"""
    if n < 1:
        raise BadArguments("enumerate_posets needs n >= 1")
    if n > cap:
        raise SizeCapExceeded("enumerate_size", cap, n)
    labels = [f"p{i}" for i in range(n)]
    for strict in _canonical_level(n):
        leq = np.array(strict, dtype=bool) | np.eye(n, dtype=bool)
        yield Poset.from_relation(labels, leq)


def count_posets(n, cap=MAX_ENUMERATION_SIZE):
    return sum(1 for _ in enumerate_posets(n, cap))


def random_linear_extension(poset, rng):
    """A uniformly chosen minimal element at every step; rng is a numpy Generator"""
    remaining = set(range(len(poset)))
    strict = poset.strict
    order = []
    while remaining:
        ready = sorted(i for i in remaining if not any(strict[j, i] for j in remaining))
        pick = ready[int(rng.integers(len(ready)))]
        order.append(poset.elements[pick])
        remaining.discard(pick)
    return order
