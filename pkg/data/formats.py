"""
Text and JSON formats

Posets:
    elements: x0 x1 x2
    covers: x0<x1 x0<x2
Lattices add a `kind:` header; dual order ideals are `minimal: e1 e2`; facet
lists carry one facet per line. `#` starts a comment line everywhere.
"""
import json
import logging

from core.errors import AslkitError, FormatError

logger = logging.getLogger(__name__)


def _content_lines(text):
    for raw in text.splitlines():
        line = raw.strip()
        if line and not line.startswith("#"):
            yield line


def _check_label(label):
    if not label or any(c.isspace() for c in label) or "<" in label:
        raise FormatError(f"bad label {label!r}")
    return label


# ----------------------------------------------------------------- posets

def parse_poset(text):
    """Parse the `elements:` / `covers:` format; redundant covers are accepted"""
    from core.poset import Poset

    fields = {}
    for line in _content_lines(text):
        key, sep, rest = line.partition(":")
        key = key.strip().lower()
        if not sep:
            raise FormatError(f"expected 'key: value', got {line!r}")
        if key in ("kind", "minimal"):
            continue
        if key not in ("elements", "covers"):
            raise FormatError(f"unknown field {key!r}")
        fields.setdefault(key, []).extend(rest.split())
    if "elements" not in fields:
        raise FormatError("missing 'elements:' line")
    elements = [_check_label(x) for x in fields["elements"]]
    pairs = []
    for token in fields.get("covers", []):
        lo, sep, hi = token.partition("<")
        if not sep or not lo or not hi:
            raise FormatError(f"bad cover {token!r}; expected a<b")
        pairs.append((lo, hi))
    return Poset.from_covers(elements, pairs)


def poset_to_text(poset):
    covers = " ".join(f"{poset.elements[i]}<{poset.elements[j]}" for i, j in poset.covers)
    return f"elements: {' '.join(poset.elements)}\ncovers: {covers}\n".replace(": \n", ":\n")


# --------------------------------------------------------------- lattices

def lattice_to_text(lattice):
    return f"kind: {lattice.kind}\n" + poset_to_text(lattice.underlying)


def parse_lattice(text):
    """Rebuild a lattice; `boolean n` and `divisor n m` are regenerated from the header"""
    from core.lattice import Lattice, boolean, divisor

    kind = "explicit"
    for line in _content_lines(text):
        if line.lower().startswith("kind:"):
            kind = line.partition(":")[2].strip()
            break
    words = kind.split()
    try:
        if words[:1] == ["boolean"]:
            return boolean(int(words[1]))
        if words[:1] == ["divisor"]:
            return divisor(int(words[1]), int(words[2]))
    except (IndexError, ValueError):
        raise FormatError(f"bad kind header {kind!r}") from None
    return Lattice.from_poset(parse_poset(text), kind=kind)


def dual_ideal_to_text(ideal):
    return f"minimal: {' '.join(ideal.minimal_labels())}\n"


def parse_dual_ideal(text, lattice):
    from core.lattice import DualOrderIdeal

    labels = []
    for line in _content_lines(text):
        key, _, rest = line.partition(":")
        if key.strip().lower() == "minimal":
            labels.extend(rest.split())
    return DualOrderIdeal.generated_by(lattice, labels)


# ---------------------------------------------------------------- facets

def parse_facets(text):
    """One facet per line, vertices whitespace-separated; `{}` denotes the empty facet"""
    from core.complex import SimplicialComplex

    facets = []
    for line in _content_lines(text):
        facets.append([] if line == "{}" else [_check_label(v) for v in line.split()])
    if not facets:
        raise FormatError("facet list is empty")
    return SimplicialComplex.from_labels(facets)


def facets_to_text(complex_):
    lines = []
    for f in complex_.facets:
        lines.append(" ".join(complex_.vertices[v] for v in sorted(f)) or "{}")
    return "\n".join(lines) + "\n"


# ------------------------------------------------------------ polynomials

def polynomial_to_text(poly, ideal):
    """Terms as `coef * x_a*x_b`, sorted by label tuple"""
    labels = ideal.poset.elements
    terms = []
    for exps, coeff in poly.items():
        factors = [f"x_{labels[i]}" for i in ideal.support(exps)]
        terms.append((tuple(labels[i] for i in ideal.support(exps)), f"{coeff} * {'*'.join(factors) or '1'}"))
    if not terms:
        return "0"
    return " + ".join(text for _, text in sorted(terms))


def ideal_to_text(ideal):
    """One generator per line, in pair order"""
    lines = [f"# {ideal.kind} ideal, {len(ideal.generators)} generators"]
    for (a, b), g in sorted(zip(ideal.pairs, ideal.generators), key=lambda t: t[0]):
        lines.append(f"f({a},{b}) = {polynomial_to_text(g, ideal)}")
    return "\n".join(lines) + "\n"


# ------------------------------------------------------------------ JSON

def to_json(payload, path=None):
    """Deterministic JSON text; written to path when given"""
    text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if path:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text)
        logger.info("wrote %s", path)
    return text


def read_text(path):
    try:
        with open(path, encoding="utf-8") as handle:
            return handle.read()
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc.strerror}") from None


def load_poset(path):
    try:
        return parse_poset(read_text(path))
    except AslkitError as exc:
        logger.error("%s: %s", path, exc)
        raise
