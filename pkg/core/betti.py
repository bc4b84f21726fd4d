"""
Betti tables and ring invariants

Two independent routes to graded Betti numbers:
  * Hochster's formula for Stanley-Reisner rings, summing reduced homology of
    induced subcomplexes;
  * Koszul homology, for Stanley-Reisner rings and for R_K[P] = K[P]/J_P, built
    from the standard-monomial basis and normal-form multiplication.
An Artinian reduction by the rank-sum linear forms gives a third route to the
last Betti column of a Cohen-Macaulay R_K[P].
"""
import itertools
import logging
from dataclasses import asdict, dataclass, field

import networkx as nx
import pandas as pd
from tqdm import tqdm

from core.asl import StraighteningIdeal, standard_basis, straightening_generators
from core.complex import SimplicialComplex, _maximal, fh_vectors, order_complex
from core.config import RATIONALS, Caps
from core.errors import (
    BadArguments,
    ConsistencyFailure,
    DegreeBoundExceeded,
    InternalMismatch,
    NotDistributiveType,
    SizeCapExceeded,
)
from core.lattice import is_distributive_type
from core.linalg import RowReducer, rank
from core.poset import comparability_graph
from core.topology import homology_of_facets, is_cm_poset

logger = logging.getLogger(__name__)


@dataclass
class BettiTable:
    """Graded Betti numbers beta_{i,j} of a quotient S/I"""
    entries: dict
    num_vars: int

    def __post_init__(self):
        self.entries = {(int(i), int(j)): int(b) for (i, j), b in self.entries.items() if b}
        for (i, j), b in self.entries.items():
            if b < 0 or j < i:
                raise InternalMismatch(f"invalid Betti entry beta_{i},{j} = {b}")

    def get(self, i, j):
        return self.entries.get((i, j), 0)

    @property
    def pd(self):
        return max((i for i, _ in self.entries), default=0)

    @property
    def reg(self):
        return max((j - i for i, j in self.entries), default=0)

    def column(self, i):
        """{j: beta_{i,j}} for a fixed homological degree"""
        return {j: b for (k, j), b in sorted(self.entries.items()) if k == i}

    def total(self, i):
        return sum(self.column(i).values())

    def dominated_by(self, other):
        """Entrywise <= another table"""
        return all(b <= other.get(i, j) for (i, j), b in self.entries.items())

    def is_linear(self):
        """Every syzygy of the ideal is linear: beta_{i,j} = 0 unless j = i + 1 (i >= 1)"""
        return all(j == i + 1 for (i, j) in self.entries if i >= 1)

    def to_json(self):
        return {
            "num_vars": self.num_vars,
            "entries": [{"i": i, "j": j, "beta": b} for (i, j), b in sorted(self.entries.items())],
        }

    @classmethod
    def from_json(cls, payload):
        return cls({(e["i"], e["j"]): e["beta"] for e in payload["entries"]}, payload["num_vars"])

    def to_frame(self):
        """Rows j - i, columns i, the usual Betti diagram layout"""
        frame = pd.DataFrame(0, index=range(self.reg + 1), columns=range(self.pd + 1))
        for (i, j), b in self.entries.items():
            frame.loc[j - i, i] = b
        frame.index.name = "j-i"
        frame.columns.name = "i"
        return frame


@dataclass
class RingInvariants:
    dim: int
    depth: int
    reg: int
    pd: int
    cm: bool
    cm_type: int
    gorenstein: bool
    level: bool
    h_vector: tuple
    num_vars: int = 0
    last_column: dict = field(default_factory=dict)
    source: str = "koszul"
    cm_over_field: bool = None

    def __post_init__(self):
        if self.depth != self.num_vars - self.pd:
            raise ConsistencyFailure("Auslander-Buchsbaum violated")
        if self.cm != (self.depth == self.dim):
            raise ConsistencyFailure("cm flag does not match depth == dim")
        if self.gorenstein and not self.level or self.level and not self.cm:
            raise ConsistencyFailure("gorenstein => level => cm violated")

    def to_json(self):
        payload = asdict(self)
        payload["h_vector"] = list(self.h_vector)
        payload["last_column"] = {str(j): b for j, b in sorted(self.last_column.items())}
        return payload


@dataclass(frozen=True)
class ArtinianReduction:
    hilbert: tuple      # dim_K A_k
    socle: tuple        # dim_K Soc(A)_k

    @property
    def length(self):
        return sum(self.hilbert)


# ------------------------------------------------------------------ Hochster

def _free_vertices(complex_, caps):
    cones = set(complex_.cone_vertices())
    free = [v for v in range(len(complex_.vertices)) if v not in cones]
    if len(free) > caps.hochster_vertices:
        raise SizeCapExceeded("hochster_vertices", caps.hochster_vertices, len(free))
    return free


def _induced_facets(complex_, subset):
    w = frozenset(subset)
    return _maximal(f & w for f in complex_.facets)


def hochster_betti(complex_, field=RATIONALS, caps=None, progress=False):
    """beta_{i,j}(S/I_Δ) = sum over |W| = j of dim H̃_{j-i-1}(Δ|_W)"""
    caps = caps or Caps()
    # induced subcomplexes through a cone vertex are cones, hence acyclic
    free = _free_vertices(complex_, caps)
    entries = {}
    subsets = itertools.chain.from_iterable(itertools.combinations(free, k) for k in range(len(free) + 1))
    for w in tqdm(subsets, total=2 ** len(free), disable=not progress, desc="hochster"):
        profile = homology_of_facets(_induced_facets(complex_, w), field, caps)
        if profile is None:
            continue
        j = len(w)
        for idx, dim in enumerate(profile.dims):
            if dim:
                i = j - idx
                entries[(i, j)] = entries.get((i, j), 0) + dim
    return BettiTable(entries, len(complex_.vertices))


def hochster_linear(complex_, field=RATIONALS, caps=None):
    """True iff no induced subcomplex has homology in degree >= 1 (linear syzygies)"""
    caps = caps or Caps()
    free = _free_vertices(complex_, caps)
    for k in range(3, len(free) + 1):
        for w in itertools.combinations(free, k):
            profile = homology_of_facets(_induced_facets(complex_, w), field, caps)
            if profile is not None and any(profile.dims[2:]):
                return False
    return True


def hochster_regularity(complex_, field=RATIONALS, caps=None):
    """reg(S/I_Δ), reading the top Hochster term first"""
    caps = caps or Caps()
    cones = set(complex_.cone_vertices())
    free = frozenset(v for v in range(len(complex_.vertices)) if v not in cones)
    base = _induced_facets(complex_, free)
    top = max(len(f) for f in base) - 1
    if top < 0:
        return 0
    # H̃_top of an induced subcomplex embeds in H̃_top of the whole complex
    profile = homology_of_facets(base, field, caps)
    if profile is not None and profile.degree(top):
        return top + 1
    return hochster_betti(complex_, field, caps).reg


# -------------------------------------------------------------------- Koszul

def _koszul_monomial_quotient(complex_, caps):
    """Koszul homology of S/I_Δ in squarefree multidegrees W"""
    m = len(complex_.vertices)
    if m > caps.koszul_poset:
        raise SizeCapExceeded("koszul_poset", caps.koszul_poset, m)
    entries = {}
    for size in range(m + 1):
        for w in itertools.combinations(range(m), size):
            wset = frozenset(w)
            chains = []
            for i in range(size + 1):
                chains.append([f for f in itertools.combinations(w, i) if complex_.contains(wset - frozenset(f))])
            ranks = [0] * (size + 2)
            for i in range(1, size + 1):
                cols = {f: k for k, f in enumerate(chains[i - 1])}
                rows = []
                for f in chains[i]:
                    row = {}
                    for t in range(len(f)):
                        face = f[:t] + f[t + 1:]
                        if face in cols:
                            row[cols[face]] = -1 if t % 2 else 1
                    rows.append(row)
                ranks[i] = rank(rows, len(cols))
            for i in range(size + 1):
                beta = len(chains[i]) - ranks[i] - ranks[i + 1]
                if beta:
                    entries[(i, size)] = entries.get((i, size), 0) + beta
    return BettiTable(entries, m)


def _join_irreducible_degrees(poset):
    leq = poset.leq
    ji = [i for i in range(len(poset)) if len(poset.lower_covers[i]) == 1]
    return {x: tuple(int(leq[g, x]) for g in ji) for x in range(len(poset))}


def _koszul_straightening(ideal, bound, caps):
    """Koszul homology of K[P]/J_P within j - i <= bound, split by multidegree

    J_P is homogeneous for deg x_a = (1, join-irreducibles below a), so the complex
    splits into finite blocks indexed by (total degree, join-irreducible vector).
    """
    poset = ideal.poset
    m = len(poset)
    if m > caps.koszul_poset:
        raise SizeCapExceeded("koszul_poset", caps.koszul_poset, m)
    vec = _join_irreducible_degrees(poset)
    width = len(next(iter(vec.values()))) if vec else 0

    def add(a, b):
        return tuple(x + y for x, y in zip(a, b))

    std = {}
    for d in range(bound + 2):
        std[d] = []
        for exps in standard_basis(ideal, d):
            v = (0,) * width
            for x in ideal.support(exps):
                v = add(v, vec[x])
            std[d].append((exps, v))

    # pieces[i][key] -> list of (F, u); key = (j, vector)
    pieces = [dict() for _ in range(m + 1)]
    for i in range(m + 1):
        for f in itertools.combinations(range(m), i):
            fv = (0,) * width
            for x in f:
                fv = add(fv, vec[x])
            for d in range(bound + 2):
                for exps, uv in std[d]:
                    pieces[i].setdefault((i + d, add(fv, uv)), []).append((f, exps))

    rank_cache = {}

    def boundary_rank(i, key):
        if i <= 0 or i > m:
            return 0
        if (i, key) in rank_cache:
            return rank_cache[(i, key)]
        rows_basis = pieces[i].get(key, [])
        cols_basis = pieces[i - 1].get(key, [])
        if not rows_basis or not cols_basis:
            rank_cache[(i, key)] = 0
            return 0
        cols = {b: k for k, b in enumerate(cols_basis)}
        rows = []
        for f, u in rows_basis:
            row = {}
            for t, x in enumerate(f):
                face = f[:t] + f[t + 1:]
                sign = -1 if t % 2 else 1
                for exps, coeff in ideal.times_variable(x, u).items():
                    k = cols[(face, exps)]
                    row[k] = row.get(k, 0) + sign * coeff
            rows.append(row)
        rank_cache[(i, key)] = r = rank(rows, len(cols))
        return r

    entries = {}
    for i in range(m + 1):
        for key, basis in pieces[i].items():
            j = key[0]
            if j - i > bound:
                continue
            beta = len(basis) - boundary_rank(i, key) - boundary_rank(i + 1, key)
            if beta:
                entries[(i, j)] = entries.get((i, j), 0) + beta
    return BettiTable(entries, m)


def koszul_betti(target, caps=None, degree_bound=None):
    """Betti table by Koszul homology of a poset's R_K[P] or of a face ring

    target: a Poset of distributive type, a StraighteningIdeal, or a
    SimplicialComplex (for S/I_Δ). The degree window for R_K[P] is the
    regularity of the initial ideal, which S/J_P shares.
    """
    caps = caps or Caps()
    if isinstance(target, SimplicialComplex):
        return _koszul_monomial_quotient(target, caps)
    ideal = target if isinstance(target, StraighteningIdeal) else None
    if ideal and ideal.kind != "straightening":
        raise BadArguments("the Koszul route needs the straightening ideal J_P")
    poset = ideal.poset if ideal else target
    if not len(poset):
        return BettiTable({(0, 0): 1}, 0)
    if len(poset) > caps.koszul_poset:
        raise SizeCapExceeded("koszul_poset", caps.koszul_poset, len(poset))
    ideal = ideal or straightening_generators(poset)
    needed = hochster_regularity(order_complex(poset), RATIONALS, caps)
    if degree_bound is None:
        return _koszul_straightening(ideal, needed, caps)
    table = _koszul_straightening(ideal, min(degree_bound, needed), caps)
    if degree_bound < needed:
        raise DegreeBoundExceeded(degree_bound, table)
    return table


# --------------------------------------------------------- Artinian reduction

def artinian_reduction(ideal, caps=None):
    """Hilbert function and socle of R/(theta_0, ..., theta_r), theta_t the rank-t sum"""
    caps = caps or Caps()
    poset = ideal.poset
    if not poset.is_pure():
        raise BadArguments("rank-sum parameters need a pure poset")
    m = len(poset)
    if m > caps.artinian_poset:
        raise SizeCapExceeded("artinian_poset", caps.artinian_poset, m)
    levels = [poset.rank_level(t) for t in range(poset.rank + 1)]
    max_degree = poset.rank + 1 + caps.hilbert_degree

    basis = [standard_basis(ideal, 0)]
    index = [{u: 0 for u in basis[0]}]
    reducers = [RowReducer([], 1)]
    hilbert = [1]
    k = 0
    while hilbert[-1]:
        k += 1
        if k > max_degree:
            raise SizeCapExceeded("hilbert_degree", max_degree, k)
        basis.append(standard_basis(ideal, k))
        index.append({u: c for c, u in enumerate(basis[k])})
        rows = []
        for u in basis[k - 1]:
            for level in levels:
                row = {}
                for v in level:
                    for exps, coeff in ideal.times_variable(v, u).items():
                        c = index[k][exps]
                        row[c] = row.get(c, 0) + coeff
                rows.append(row)
        reducers.append(RowReducer(rows, len(basis[k])))
        hilbert.append(len(basis[k]) - reducers[k].rank)
    hilbert.pop()

    socle = []
    for k, dim in enumerate(hilbert):
        target = reducers[k + 1]
        free = {c: n for n, c in enumerate(target.free)}
        rows = []
        for c in reducers[k].free:
            u = basis[k][c]
            row = {}
            for v in range(m):
                image = {index[k + 1][e]: q for e, q in ideal.times_variable(v, u).items()}
                for col, q in target.reduce(image).items():
                    row[v * len(free) + free[col]] = q
            rows.append(row)
        socle.append(dim - rank(rows, m * max(len(free), 1)))
    return ArtinianReduction(tuple(hilbert), tuple(socle))


# ------------------------------------------------------------- invariants

def _trimmed(h):
    h = list(h)
    while len(h) > 1 and h[-1] == 0:
        h.pop()
    return tuple(h)


def ring_invariants(poset, field=RATIONALS, caps=None, cross_check=False):
    """dim, depth, reg, pd, type, Gorenstein and level for R_K[P]"""
    caps = caps or Caps()
    if not len(poset):
        return RingInvariants(0, 0, 0, 0, True, 1, True, True, (1,), 0, {0: 1}, "empty", True)
    ideal = straightening_generators(poset)
    m = len(poset)
    dim = poset.rank + 1
    delta = order_complex(poset)
    h = _trimmed(fh_vectors(delta).h)
    cm_poset = is_cm_poset(poset, RATIONALS, caps)

    art = None
    if m <= caps.koszul_poset:
        table = koszul_betti(ideal, caps)
        source = "koszul"
        pd_, reg = table.pd, table.reg
        cm = m - pd_ == dim
        last = table.column(pd_)
        if cross_check and cm and poset.is_pure():
            art = artinian_reduction(ideal, caps)
    elif poset.is_pure() and m <= caps.artinian_poset:
        art = artinian_reduction(ideal, caps)
        cm = art.length == len(delta.facets)
        if cm:
            source = "artinian"
            pd_ = m - dim
            reg = max(k for k, v in enumerate(art.hilbert) if v)
            last = {pd_ + k: s for k, s in enumerate(art.socle) if s}
    else:
        cm = False
        art = None
    if m > caps.koszul_poset and not cm:
        # depth and regularity transfer from the squarefree initial ideal
        table = hochster_betti(delta, RATIONALS, caps)
        source = "hochster-initial"
        pd_, reg = table.pd, table.reg
        cm = m - pd_ == dim
        last = table.column(pd_)

    if cm != cm_poset:
        raise ConsistencyFailure(f"CM(R) = {cm} but CM(P) = {cm_poset}")
    if cm and art is not None:
        from_socle = {pd_ + k: s for k, s in enumerate(art.socle) if s}
        if from_socle != last or _trimmed(art.hilbert) != h:
            raise ConsistencyFailure("Artinian reduction disagrees with the Betti table")

    cm_type = sum(last.values())
    gorenstein = cm and cm_type == 1
    level = cm and len(last) == 1
    if gorenstein and h != tuple(reversed(h)):
        raise ConsistencyFailure(f"Gorenstein ring with asymmetric h-vector {h}")
    over_field = cm if field.is_rational else is_cm_poset(poset, field, caps)
    if over_field != cm:
        logger.warning("CM over %s differs from CM over Q for %r", field, poset)
    return RingInvariants(
        dim=dim, depth=m - pd_, reg=reg, pd=pd_, cm=cm, cm_type=cm_type,
        gorenstein=gorenstein, level=level, h_vector=h, num_vars=m,
        last_column=last, source=source, cm_over_field=over_field,
    )


# ------------------------------------------------------------- chordality

def maximum_cardinality_search(graph):
    """Visit order of maximum cardinality search; ties go to the earliest node"""
    nodes = list(graph.nodes)
    rank_of = {v: k for k, v in enumerate(nodes)}
    weight = {v: 0 for v in nodes}
    order = []
    while weight:
        v = max(weight, key=lambda u: (weight[u], -rank_of[u]))
        order.append(v)
        del weight[v]
        for u in graph[v]:
            if u in weight:
                weight[u] += 1
    return order


def is_chordal(graph):
    """Maximum cardinality search, then verify the reversed order eliminates perfectly"""
    peo = list(reversed(maximum_cardinality_search(graph)))
    position = {v: k for k, v in enumerate(peo)}
    for v in peo:
        later = [u for u in graph[v] if position[u] > position[v]]
        if not later:
            continue
        parent = min(later, key=position.get)
        if any(w != parent and not graph.has_edge(parent, w) for w in later):
            return False
    return True


def chordless_cycle_witness(graph):
    """A shortest induced cycle of length >= 4, or None"""
    for bound in range(4, graph.number_of_nodes() + 1):
        for cycle in nx.chordless_cycles(graph, length_bound=bound):
            if len(cycle) >= 4:
                return list(cycle)
    return None


def has_linear_resolution(poset):
    """J_P has a linear resolution iff Com(P) is chordal"""
    if not is_distributive_type(poset):
        raise NotDistributiveType(repr(poset))
    return is_chordal(comparability_graph(poset))


def regularity_of_complement(poset, field=RATIONALS, caps=None, cross_check=True):
    """reg(S/I_Δ(P)) by Hochster; compared with the h-vector when P is Cohen-Macaulay"""
    caps = caps or Caps()
    delta = order_complex(poset)
    reg = hochster_regularity(delta, field, caps)
    if cross_check:
        try:
            cm = is_cm_poset(poset, field, caps)
        except SizeCapExceeded:
            logger.debug("skipping h-vector cross-check on %r", poset)
            cm = False
        if cm:
            h = fh_vectors(delta).h
            top = max(i for i, v in enumerate(h) if v)
            if top != reg:
                raise ConsistencyFailure(f"Hochster regularity {reg} but top h-index {top}")
    return reg
