import logging

from core.asl import buchberger_check, straightening_generators
from core.betti import (
    chordless_cycle_witness,
    has_linear_resolution,
    hochster_betti,
    is_chordal,
    koszul_betti,
    ring_invariants,
)
from core.complex import order_complex
from core.config import RATIONALS, Caps
from core.errors import BadArguments
from core.lattice import is_distributive_type
from core.poset import comparability_graph, is_sum_of_antichains
from core.topology import is_cm_poset, is_shellable_poset, is_vd_poset
from data.data_generator import validate_poset
from data.formats import load_poset

logger = logging.getLogger(__name__)

PROPERTIES = (
    "distributive-type",
    "pure",
    "sum-of-antichains",
    "cm",
    "shellable",
    "vd",
    "chordal",
    "linear-resolution",
    "groebner",
    "gorenstein",
    "level",
)


class ASLKitCore:
    """
    aslkit engine

    Holds the resource caps and the coefficient field, keeps the current poset and
    caches the expensive results (straightening ideal, ring invariants) so a CLI
    run or a suite instance computes each of them once.
    """

    def __init__(self, caps=None, field=RATIONALS):
        self.caps = caps or Caps.from_env()
        self.field = field
        self.poset = None
        self.source = None
        self.ideal = None
        self.invariants = None
        self.betti_tables = {}

    def load_poset(self, path):
        """Load a poset file and reset cached results"""
        self.set_poset(load_poset(path), source=path)
        ok, message = validate_poset(self.poset, require_distributive=True)
        if ok:
            logger.info("loaded %s: %s", path, message)
        else:
            logger.warning("loaded %s: %s", path, message)
        return self.poset

    def set_poset(self, poset, source=None):
        self.poset = poset
        self.source = source
        self.ideal = None
        self.invariants = None
        self.betti_tables = {}

    def _require_poset(self):
        if self.poset is None:
            raise BadArguments("no poset loaded")
        return self.poset

    # ------------------------------------------------------------- algebra

    def straightening_ideal(self):
        if self.ideal is None:
            self.ideal = straightening_generators(self._require_poset())
        return self.ideal

    def ring_invariants(self):
        if self.invariants is None:
            self.invariants = ring_invariants(self._require_poset(), self.field, self.caps)
        return self.invariants

    def betti(self, method="koszul"):
        """Koszul table of R_K[P], or the Hochster table of its initial ideal"""
        if method not in self.betti_tables:
            poset = self._require_poset()
            if method == "koszul":
                table = koszul_betti(self.straightening_ideal(), self.caps)
            elif method == "hochster":
                table = hochster_betti(order_complex(poset), self.field, self.caps)
            else:
                raise BadArguments(f"unknown Betti method {method!r}; use hochster or koszul")
            self.betti_tables[method] = table
        return self.betti_tables[method]

    # -------------------------------------------------------------- checks

    def check(self, prop):
        """Decide one named property of the loaded poset"""
        poset = self._require_poset()
        if prop not in PROPERTIES:
            raise BadArguments(f"unknown property {prop!r}; choose from {', '.join(PROPERTIES)}")
        if prop == "distributive-type":
            return is_distributive_type(poset)
        if prop == "pure":
            return poset.is_pure()
        if prop == "sum-of-antichains":
            return is_sum_of_antichains(poset)
        if prop == "cm":
            return is_cm_poset(poset, self.field, self.caps)
        if prop == "shellable":
            return is_shellable_poset(poset, self.caps)
        if prop == "vd":
            return is_vd_poset(poset, self.caps)
        if prop == "chordal":
            return is_chordal(comparability_graph(poset))
        if prop == "linear-resolution":
            return has_linear_resolution(poset)
        if prop == "groebner":
            return buchberger_check(self.straightening_ideal(), caps=self.caps)
        return getattr(self.ring_invariants(), prop)

    def chordless_cycle(self):
        return chordless_cycle_witness(comparability_graph(self._require_poset()))
