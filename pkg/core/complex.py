"""
Simplicial complexes

Complexes are stored by their facets (frozensets of vertex positions); faces are
generated on demand. The empty complex {∅} is a value, the void complex is not.
"""
import itertools
import logging
from dataclasses import dataclass
from functools import cached_property
from math import comb

from core.errors import BadArguments, EmptyPoset, FaceNotInComplex, UnknownLabel

logger = logging.getLogger(__name__)


def _maximal(sets):
    """Inclusion-maximal members of a family of frozensets"""
    ordered = sorted(set(sets), key=len, reverse=True)
    kept = []
    for s in ordered:
        if not any(s <= k for k in kept):
            kept.append(s)
    return kept


class SimplicialComplex:
    """Vertex labels plus inclusion-maximal facets"""

    def __init__(self, vertices, facets):
        self.vertices = tuple(str(v) for v in vertices)
        self._index = {v: i for i, v in enumerate(self.vertices)}
        if len(self._index) != len(self.vertices):
            raise BadArguments("vertex labels must be distinct")
        facets = [frozenset(f) for f in facets]
        if not facets:
            raise BadArguments("the void complex (no faces at all) is not supported")
        for f in facets:
            if any(not 0 <= v < len(self.vertices) for v in f):
                raise BadArguments("facet refers to a vertex outside the vertex list")
        kept = _maximal(facets)
        covered = set().union(*kept)
        if len(covered) != len(self.vertices):
            missing = [self.vertices[v] for v in range(len(self.vertices)) if v not in covered]
            raise BadArguments(f"vertices {missing} lie in no facet")
        self.facets = tuple(sorted(kept, key=lambda f: (len(f), sorted(f))))

    @classmethod
    def from_labels(cls, facets, vertices=None):
        """Build from facets given as label collections; vertex order by first occurrence"""
        facets = [tuple(str(v) for v in f) for f in facets]
        if vertices is None:
            seen = {}
            for f in facets:
                for v in f:
                    seen.setdefault(v, len(seen))
            vertices = list(seen)
        index = {v: i for i, v in enumerate(vertices)}
        try:
            return cls(vertices, [frozenset(index[v] for v in f) for f in facets])
        except KeyError as exc:
            raise UnknownLabel(exc.args[0]) from None

    @classmethod
    def empty(cls):
        """{∅}: only the empty face"""
        return cls((), [frozenset()])

    @classmethod
    def simplex(cls, labels):
        labels = list(labels)
        return cls(labels, [frozenset(range(len(labels)))])

    # ------------------------------------------------------------ basics

    def __repr__(self):
        return f"SimplicialComplex({len(self.vertices)} vertices, {len(self.facets)} facets, dim {self.dim})"

    def __eq__(self, other):
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self.labelled_facets() == other.labelled_facets()

    def __hash__(self):
        return hash(frozenset(self.labelled_facets()))

    def labelled_facets(self):
        return {frozenset(self.vertices[v] for v in f) for f in self.facets}

    def index(self, label):
        try:
            return self._index[label]
        except KeyError:
            raise UnknownLabel(label) from None

    @property
    def dim(self):
        return max(len(f) for f in self.facets) - 1

    def is_pure(self):
        return len({len(f) for f in self.facets}) == 1

    def is_simplex(self):
        return len(self.facets) == 1

    def contains(self, face):
        face = frozenset(face)
        return any(face <= f for f in self.facets)

    def face_of_labels(self, labels):
        return frozenset(self.index(v) for v in labels)

    @cached_property
    def _faces(self):
        faces = set()
        for f in self.facets:
            members = sorted(f)
            for k in range(len(members) + 1):
                faces.update(frozenset(c) for c in itertools.combinations(members, k))
        return tuple(sorted(faces, key=lambda f: (len(f), sorted(f))))

    def faces(self, size=None):
        """All faces, or those with the given number of vertices"""
        if size is None:
            return list(self._faces)
        return [f for f in self._faces if len(f) == size]

    def face_count(self):
        return len(self._faces)

    def cone_vertices(self):
        """Vertices lying in every facet"""
        return sorted(frozenset.intersection(*self.facets))

    # ------------------------------------------------------ constructions

    def _rebuild(self, facets):
        used = sorted(set().union(*facets)) if facets else []
        if not facets:
            facets = [frozenset()]
        pos = {v: i for i, v in enumerate(used)}
        return SimplicialComplex(
            [self.vertices[v] for v in used],
            [frozenset(pos[v] for v in f) for f in facets],
        )

    def link(self, face):
        """lk F = {G : G ∩ F = ∅, G ∪ F ∈ Δ}"""
        face = frozenset(face)
        if not self.contains(face):
            raise FaceNotInComplex(sorted(self.vertices[v] for v in face))
        return self._rebuild(_maximal(f - face for f in self.facets if face <= f))

    def deletion(self, x):
        """Δ - x: faces avoiding vertex position x"""
        if not 0 <= x < len(self.vertices):
            raise UnknownLabel(x)
        return self._rebuild(_maximal(f - {x} for f in self.facets))

    def induced(self, subset):
        """Δ|_W for a set of vertex positions W"""
        w = frozenset(subset)
        return self._rebuild(_maximal(f & w for f in self.facets))

    def canonical_key(self):
        """Sorted facet list after relabelling vertices by first occurrence"""
        ordered = sorted(sorted(f) for f in self.facets)
        relabel = {}
        for f in ordered:
            for v in f:
                relabel.setdefault(v, len(relabel))
        return tuple(sorted(tuple(sorted(relabel[v] for v in f)) for f in ordered))


# ------------------------------------------------------------ f and h

@dataclass(frozen=True)
class FHVectors:
    f: tuple          # f_0 .. f_{d-1}
    h: tuple          # h_0 .. h_d
    euler: int        # reduced Euler characteristic

    @property
    def d(self):
        return len(self.f)


def fh_vectors(complex_):
    """f-vector, h-vector and reduced Euler characteristic"""
    d = complex_.dim + 1
    counts = [0] * (d + 1)          # counts[i] = f_{i-1}
    for face in complex_.faces():
        counts[len(face)] += 1
    h = []
    for k in range(d + 1):
        h.append(sum((-1) ** (k - i) * comb(d - i, k - i) * counts[i] for i in range(k + 1)))
    euler = -sum((-1) ** i * counts[i] for i in range(d + 1))
    return FHVectors(f=tuple(counts[1:]), h=tuple(h), euler=euler)


def check_fh_identity(vectors):
    """Σ f_{i-1}(x-1)^{d-i} == Σ h_i x^{d-i}, compared coefficientwise"""
    d = vectors.d
    f = (1,) + vectors.f
    lhs = [0] * (d + 1)   # coefficient of x^e
    for i in range(d + 1):
        e_top = d - i
        for e in range(e_top + 1):
            lhs[e] += f[i] * comb(e_top, e) * (-1) ** (e_top - e)
    rhs = [0] * (d + 1)
    for i, hi in enumerate(vectors.h):
        rhs[d - i] += hi
    return lhs == rhs and vectors.h[d] == -((-1) ** d) * vectors.euler


# ----------------------------------------------------- standard complexes

def order_complex(poset):
    """Faces are the chains of the poset"""
    if not len(poset):
        raise EmptyPoset("order complex of the empty poset")
    return SimplicialComplex(poset.elements, [frozenset(c) for c in poset.maximal_chains()])


def barycentric_subdivision(complex_):
    """Order complex of the nonempty faces ordered by inclusion"""
    from core.lattice import face_poset

    proper = face_poset(complex_)
    nonempty = [i for i in range(len(proper)) if proper.elements[i] != "{}"]
    return order_complex(proper.induced(nonempty))


def skeleton_complex(n, subset):
    """Δ_{n,X}: (n-1)-subsets W of [n] that do not contain X"""
    x = frozenset(int(v) for v in subset)
    if n < 2 or not x or not x <= frozenset(range(1, n + 1)):
        raise BadArguments(f"need n >= 2 and nonempty X within 1..{n}, got n={n}, X={sorted(x)}")
    facets = [[str(v) for v in range(1, n + 1) if v != k] for k in sorted(x)]
    vertices = [str(v) for v in range(1, n + 1) if any(str(v) in f for f in facets)]
    return SimplicialComplex.from_labels(facets, vertices)


def disjoint_union(first, second):
    """Disjoint union; clashing labels of the second complex are primed"""
    labels = list(first.vertices) + [v if v not in first._index else v + "'" for v in second.vertices]
    shift = len(first.vertices)
    facets = [f for f in first.facets if f] + [frozenset(v + shift for v in f) for f in second.facets if f]
    return SimplicialComplex(labels, facets or [frozenset()])


def cone(complex_, apex="apex"):
    labels = list(complex_.vertices) + [apex]
    top = len(complex_.vertices)
    return SimplicialComplex(labels, [f | {top} for f in complex_.facets])
