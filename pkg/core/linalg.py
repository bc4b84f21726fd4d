"""
Exact linear algebra over Q and GF(p)

Thin helpers over sympy's DomainMatrix. Matrices are given as lists of sparse
rows (dict column -> coefficient); nothing here ever touches floating point.
"""
from sympy.polys.matrices import DomainMatrix

from core.config import RATIONALS


def _to_domain_matrix(rows, ncols, field):
    K = field.domain
    dod = {}
    for i, row in enumerate(rows):
        entries = {}
        for j, v in row.items():
            c = K.convert(v)
            if c:
                entries[j] = c
        if entries:
            dod[i] = entries
    return DomainMatrix(dod, (len(rows), ncols), K)


def rank(rows, ncols, field=RATIONALS):
    """Rank of a sparse row list over the given field"""
    if not rows or ncols == 0:
        return 0
    return _to_domain_matrix(rows, ncols, field).rank()


class RowReducer:
    """Reduced row echelon basis of a subspace, used to reduce vectors modulo it"""

    def __init__(self, rows, ncols, field=RATIONALS):
        self.field = field
        self.ncols = ncols
        self.pivot_rows = {}
        if rows and ncols:
            echelon, pivots = _to_domain_matrix(rows, ncols, field).rref()
            dod = echelon.to_dod()
            for k, p in enumerate(pivots):
                self.pivot_rows[p] = dod.get(k, {})
        self.free = [c for c in range(ncols) if c not in self.pivot_rows]

    @property
    def rank(self):
        return len(self.pivot_rows)

    def reduce(self, vector):
        """Reduce a sparse vector modulo the row space; only free columns survive"""
        K = self.field.domain
        w = {}
        for j, v in vector.items():
            c = K.convert(v)
            if c:
                w[j] = c
        # each pivot row vanishes on the other pivot columns, so one pass suffices
        for p, row in self.pivot_rows.items():
            c = w.get(p)
            if not c:
                continue
            for j, v in row.items():
                w[j] = w.get(j, K.zero) - c * v
        return {j: v for j, v in w.items() if v}
