"""
Configuration for aslkit

Resource caps shared by the CLI, the engine and the suites; reports echo the
values used.
"""
import logging
import os
from dataclasses import asdict, dataclass, replace

from sympy.polys.domains import GF, QQ

from core.errors import BadArguments

logger = logging.getLogger(__name__)

BUDGET_ENV = "ASLKIT_BUDGET"


@dataclass(frozen=True)
class Caps:
    """Resource bounds for every exponential computation"""
    ideal_count: int = 4096          # Birkhoff lattice size
    lattice_elements: int = 4096     # boolean / divisor constructors
    dual_ideal_lattice: int = 25     # |L| for antichain enumeration
    shell_facets: int = 64           # facet count for shelling / VD search
    node_budget: int = 200_000       # backtracking nodes before Inconclusive
    buchberger_poset: int = 8
    hilbert_degree: int = 6
    koszul_poset: int = 10
    artinian_poset: int = 24
    homology_faces: int = 2 ** 16
    hochster_vertices: int = 17      # counted after removing cone vertices
    enumerate_size: int = 7
    seed: int = 0

    @classmethod
    def from_env(cls, **overrides):
        """Build caps from defaults, the ASLKIT_BUDGET variable and explicit overrides"""
        caps = cls()
        raw = os.environ.get(BUDGET_ENV)
        if raw:
            try:
                budget = int(raw)
            except ValueError:
                raise BadArguments(f"{BUDGET_ENV} must be a positive integer, got {raw!r}")
            if budget <= 0:
                raise BadArguments(f"{BUDGET_ENV} must be a positive integer, got {raw!r}")
            logger.info("Node budget overridden from %s: %d", BUDGET_ENV, budget)
            caps = replace(caps, node_budget=budget)
        overrides = {k: v for k, v in overrides.items() if v is not None}
        return replace(caps, **overrides) if overrides else caps

    def with_overrides(self, **overrides):
        return replace(self, **overrides)

    def for_exhaustive(self):
        """Larger search caps used by the exhaustive verification suites"""
        return replace(
            self,
            shell_facets=max(self.shell_facets, 720),
            node_budget=max(self.node_budget, 500_000),
        )

    def to_dict(self):
        return asdict(self)


@dataclass(frozen=True)
class Field:
    """Coefficient field: rationals (characteristic 0) or a prime field"""
    characteristic: int = 0

    def __post_init__(self):
        if self.characteristic not in (0, 2, 3, 5, 7):
            raise BadArguments(f"unsupported characteristic {self.characteristic}")

    @classmethod
    def parse(cls, text):
        """Parse the CLI spelling: q, f2, f3, f5"""
        key = (text or "q").strip().lower()
        if key in ("q", "qq", "rationals", "0"):
            return cls(0)
        if key.startswith("f") and key[1:].isdigit():
            return cls(int(key[1:]))
        raise BadArguments(f"unknown field {text!r}; use q, f2, f3 or f5")

    @property
    def domain(self):
        return QQ if self.characteristic == 0 else GF(self.characteristic)

    @property
    def is_rational(self):
        return self.characteristic == 0

    def __str__(self):
        return "q" if self.characteristic == 0 else f"f{self.characteristic}"


RATIONALS = Field(0)
