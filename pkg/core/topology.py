"""
Topological oracles

Exact reduced homology, Reisner's Cohen-Macaulay criterion, a shelling search and
the vertex-decomposability recursion. Searches that run out of budget raise
Inconclusive rather than answering False.
"""
import logging
from dataclasses import dataclass

import networkx as nx

from core.complex import SimplicialComplex, _maximal, order_complex
from core.config import RATIONALS, Caps
from core.errors import EmptyPoset, Inconclusive, SizeCapExceeded
from core.linalg import rank

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class HomologyProfile:
    field: str
    dims: tuple       # dims[k + 1] = dim H̃_k for k = -1 .. dim

    def degree(self, k):
        i = k + 1
        return self.dims[i] if 0 <= i < len(self.dims) else 0

    @property
    def euler(self):
        return sum((-1) ** (i + 1) * d for i, d in enumerate(self.dims))

    def vanishes_below(self, k):
        return all(self.degree(i) == 0 for i in range(-1, k))

    def is_acyclic(self):
        return not any(self.dims)


def _boundary_rows(upper, lower):
    pos = {f: i for i, f in enumerate(lower)}
    rows = []
    for face in upper:
        members = sorted(face)
        row = {}
        for t, v in enumerate(members):
            row[pos[face - {v}]] = -1 if t % 2 else 1
        rows.append(row)
    return rows


def reduced_homology(complex_, field=RATIONALS, caps=None):
    """dim H̃_k(Δ; K) for k = -1 .. dim Δ from boundary-matrix ranks"""
    caps = caps or Caps()
    total = complex_.face_count()
    if total > caps.homology_faces:
        raise SizeCapExceeded("homology_faces", caps.homology_faces, total)
    top = complex_.dim + 1
    by_size = [complex_.faces(s) for s in range(top + 1)]
    ranks = [0] * (top + 2)        # ranks[s] = rank of the boundary out of size-s faces
    for s in range(1, top + 1):
        ranks[s] = rank(_boundary_rows(by_size[s], by_size[s - 1]), len(by_size[s - 1]), field)
    dims = tuple(len(by_size[s]) - ranks[s] - ranks[s + 1] for s in range(top + 1))
    profile = HomologyProfile(str(field), dims)
    return profile


def strong_core(facets):
    """Remove dominated vertices until none is left

    A vertex v is dominated by w when every facet through v also contains w; its
    removal is a strong deformation retraction, so homology is unchanged.
    """
    facets = _maximal(facets)
    changed = True
    while changed and len(facets) > 1:
        changed = False
        vertices = sorted(set().union(*facets))
        for v in vertices:
            star = [f for f in facets if v in f]
            common = frozenset.intersection(*star) - {v}
            if common:
                facets = _maximal(f - {v} for f in facets)
                changed = True
                break
    return facets


def homology_of_facets(facets, field=RATIONALS, caps=None):
    """Reduced homology of the complex generated by the given facets, after collapsing"""
    core = strong_core(facets)
    if len(core) == 1 and core[0]:
        return None  # collapsible to a point
    used = sorted(set().union(*core))
    pos = {v: i for i, v in enumerate(used)}
    c = SimplicialComplex(used, [frozenset(pos[v] for v in f) for f in core])
    return reduced_homology(c, field, caps)


def is_cohen_macaulay(complex_, field=RATIONALS, caps=None):
    """Reisner: every link has vanishing homology below its dimension"""
    caps = caps or Caps()
    if not complex_.is_pure():
        return False
    if complex_.face_count() > caps.homology_faces:
        raise SizeCapExceeded("homology_faces", caps.homology_faces, complex_.face_count())
    seen = {}
    for face in complex_.faces():
        lk = complex_.link(face)
        if lk.is_simplex():
            continue
        key = lk.canonical_key()
        if key not in seen:
            seen[key] = reduced_homology(lk, field, caps).vanishes_below(lk.dim)
        if not seen[key]:
            logger.debug("link of %s fails Reisner", sorted(complex_.vertices[v] for v in face))
            return False
    return True


# ------------------------------------------------------------ shellability

class _Budget:
    def __init__(self, limit, name):
        self.limit = limit
        self.name = name
        self.used = 0

    def tick(self):
        self.used += 1
        if self.used > self.limit:
            raise Inconclusive(self.name, f"search exceeded {self.limit} nodes")


def _ridge_connected(facets):
    g = nx.Graph()
    g.add_nodes_from(range(len(facets)))
    for i in range(len(facets)):
        for j in range(i + 1, len(facets)):
            if len(facets[i] & facets[j]) == len(facets[i]) - 1:
                g.add_edge(i, j)
    return nx.is_connected(g)


def is_shellable(complex_, caps=None, field=RATIONALS):
    """Search for a shelling order of a pure complex"""
    caps = caps or Caps()
    if not complex_.is_pure():
        return False
    facets = list(complex_.facets)
    n = len(facets)
    if n == 1:
        return True
    if n > caps.shell_facets:
        raise SizeCapExceeded("shell_facets", caps.shell_facets, n)
    d = len(facets[0])
    if d == 1:
        return True
    # necessary conditions: ridge-connected, homology only in the top degree
    if not _ridge_connected(facets):
        return False
    if complex_.face_count() <= caps.homology_faces:
        if not reduced_homology(complex_, field, caps).vanishes_below(complex_.dim):
            return False

    ridges = [[f - {v} for v in sorted(f)] for f in facets]
    budget = _Budget(caps.node_budget, "node_budget")
    dead = set()

    def attachable(k, placed, placed_ridges):
        shared = [r for r in ridges[k] if r in placed_ridges]
        if not shared:
            return None
        for j in placed:
            meet = facets[k] & facets[j]
            if not any(meet <= r for r in shared):
                return None
        return len(shared)

    def search(placed, mask, placed_ridges):
        if len(placed) == n:
            return True
        if mask in dead:
            return False
        budget.tick()
        options = []
        for k in range(n):
            if mask >> k & 1:
                continue
            score = attachable(k, placed, placed_ridges)
            if score is not None:
                options.append((-score, k))
        for _, k in sorted(options):
            grown = placed_ridges | set(ridges[k])
            if search(placed + [k], mask | (1 << k), grown):
                return True
        dead.add(mask)
        return False

    for first in range(n):
        if search([first], 1 << first, set(ridges[first])):
            return True
    return False


# ------------------------------------------------------ vertex decomposable

def is_vertex_decomposable(complex_, caps=None):
    """Simplex, or a shedding vertex whose link and deletion are decomposable"""
    caps = caps or Caps()
    if len(complex_.facets) > caps.shell_facets:
        raise SizeCapExceeded("shell_facets", caps.shell_facets, len(complex_.facets))
    budget = _Budget(caps.node_budget, "node_budget")
    memo = {}

    def vd(c):
        if c.is_simplex():
            return True
        if not c.is_pure():
            return False
        key = c.canonical_key()
        if key in memo:
            return memo[key]
        budget.tick()
        result = False
        for x in range(len(c.vertices)):
            deleted = _maximal(f - {x} for f in c.facets)
            # no face of lk x may be a facet of the deletion
            if any(c.contains(g | {x}) for g in deleted):
                continue
            if vd(c.deletion(x)) and vd(c.link({x})):
                result = True
                break
        memo[key] = result
        return result

    return vd(complex_)


# ----------------------------------------------------------------- posets

def _open_intervals(poset):
    """Element sets of every nonempty open interval of P with 0 and 1 adjoined"""
    n = len(poset)
    strict = poset.strict
    yield list(range(n))
    for y in range(n):
        yield [z for z in range(n) if strict[z, y]]
    for x in range(n):
        yield [z for z in range(n) if strict[x, z]]
    for x in range(n):
        for y in range(n):
            if strict[x, y]:
                yield [z for z in range(n) if strict[x, z] and strict[z, y]]


def is_cm_poset(poset, field=RATIONALS, caps=None, method="intervals"):
    """Cohen-Macaulayness of the order complex

    method="intervals" tests every open interval of the bounded extension (the
    links of saturated chains); method="reisner" runs Reisner on every face.
    """
    if not len(poset):
        raise EmptyPoset("Cohen-Macaulay test of the empty poset")
    if method == "reisner":
        return is_cohen_macaulay(order_complex(poset), field, caps)
    if not poset.is_pure():
        return False
    for members in _open_intervals(poset):
        if not members:
            continue
        delta = order_complex(poset.induced(members))
        if delta.is_simplex():
            continue
        if not reduced_homology(delta, field, caps).vanishes_below(delta.dim):
            return False
    return True


def is_shellable_poset(poset, caps=None):
    return is_shellable(order_complex(poset), caps)


def is_vd_poset(poset, caps=None):
    return is_vertex_decomposable(order_complex(poset), caps)
