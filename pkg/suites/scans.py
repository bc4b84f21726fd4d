"""
Search primitives for questions left open

Neither scan asserts anything: they tabulate which small posets of distributive
type have linear resolutions, and where Cohen-Macaulayness and shellability of
complements L minus I could part ways.
"""
import logging

import pandas as pd
from tqdm import tqdm

from core.betti import has_linear_resolution
from core.complex import order_complex
from core.config import RATIONALS, Caps
from core.errors import Inconclusive, SizeCapExceeded
from core.lattice import birkhoff, enumerate_dual_ideals, remove_dual_ideal
from core.topology import is_cohen_macaulay, is_shellable
from data.data_generator import all_posets, distributive_type_posets

logger = logging.getLogger(__name__)


def scan_linear(max_p=6, caps=None, progress=False):
    """Posets of distributive type with at most max_p elements whose J_P is linear"""
    caps = caps or Caps()
    rows = []
    for poset in tqdm(list(distributive_type_posets(max_p, caps)), disable=not progress, desc="scan linear"):
        if has_linear_resolution(poset):
            rows.append({
                "size": len(poset),
                "rank": poset.rank,
                "lattice": poset.top() is not None,
                "poset": poset.to_text().strip().replace("\n", "; "),
            })
    logger.info("scan linear: %d posets with linear J_P", len(rows))
    return pd.DataFrame(rows, columns=["size", "rank", "lattice", "poset"])


def scan_cm_shellable(max_p=3, caps=None, field=RATIONALS, progress=False):
    """CM versus shellable on every L minus I for L = J(P), |P| <= max_p"""
    caps = (caps or Caps()).for_exhaustive()
    rows = []
    for poset in tqdm(list(all_posets(max_p, caps)), disable=not progress, desc="scan cm-shellable"):
        lattice = birkhoff(poset, caps)
        if len(lattice) > caps.dual_ideal_lattice:
            continue
        for ideal in enumerate_dual_ideals(lattice, caps):
            rest = remove_dual_ideal(lattice, ideal)
            if not len(rest):
                continue
            delta = order_complex(rest)
            cm = is_cohen_macaulay(delta, field, caps)
            try:
                shellable = is_shellable(delta, caps, field)
            except (Inconclusive, SizeCapExceeded) as exc:
                logger.warning("scan cm-shellable: %s", exc)
                shellable = None
            rows.append({
                "lattice": poset.to_text().strip().replace("\n", "; "),
                "ideal": ideal.to_text(),
                "size": len(rest),
                "cm": cm,
                "shellable": shellable,
                "agree": shellable is not None and cm == shellable,
            })
    frame = pd.DataFrame(rows, columns=["lattice", "ideal", "size", "cm", "shellable", "agree"])
    logger.info("scan cm-shellable: %d complements, %d disagreements", len(frame), int((~frame["agree"]).sum()) if len(frame) else 0)
    return frame
