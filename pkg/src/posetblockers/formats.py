"""Text formats: poset files, antichain strings and Graphviz DOT.

Poset file::

    # comment
    elements: 0 a b 1
    covers: 0<a 0<b a<1 b<1

Antichains are comma-separated labels, with ``-`` for the empty antichain.
"""
from __future__ import annotations

import re
from typing import Iterable

from .antichains import enumerate_antichains
from .blockers import BlockerImage
from .errors import BadSubset, ParseError
from .poset import Antichain, Poset

LABEL_RE = re.compile(r"[A-Za-z0-9_]+\Z")


def parse_poset(text: str, name: str | None = None) -> Poset:
    elements = None
    covers = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, rest = line.partition(":")
        key = key.strip()
        if not sep or key not in ("elements", "covers"):
            raise ParseError(f"line {lineno}: expected 'elements:' or 'covers:'")
        tokens = rest.split()
        if key == "elements":
            if elements is not None:
                raise ParseError(f"line {lineno}: duplicate 'elements:' line")
            for tok in tokens:
                if not LABEL_RE.match(tok):
                    raise ParseError(f"line {lineno}: bad label {tok!r}")
            elements = tokens
        else:
            for tok in tokens:
                lo, lt, hi = tok.partition("<")
                if not lt or not LABEL_RE.match(lo) or not LABEL_RE.match(hi):
                    raise ParseError(f"line {lineno}: bad cover {tok!r}, expected lo<hi")
                covers.append((lo, hi))
    if elements is None:
        raise ParseError("missing 'elements:' line")
    return Poset.from_cover_relations(elements, covers, name=name)


def read_poset(path: str) -> Poset:
    with open(path, encoding="utf-8") as fh:
        return parse_poset(fh.read(), name=path)


def format_poset(p: Poset) -> str:
    covers = " ".join(f"{p.names[a]}<{p.names[b]}" for a, b in p.covers())
    return f"elements: {' '.join(p.names)}\ncovers: {covers}\n"


def format_antichain(p: Poset, A: Iterable[int]) -> str:
    A = sorted(set(A))
    return ",".join(p.names[x] for x in A) if A else "-"


def parse_subset(p: Poset, text: str) -> frozenset:
    """Parse comma-separated labels (``-`` is empty) into element ids."""
    text = text.strip()
    if text == "-":
        return frozenset()
    out = set()
    for tok in text.split(","):
        tok = tok.strip()
        try:
            out.add(p.id_of(tok))
        except KeyError:
            raise BadSubset(f"unknown element {tok!r}") from None
    return frozenset(out)


# DOT -----------------------------------------------------------------------------

def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(title: str, labels: list, edges: Iterable[tuple]) -> str:
    """Hasse diagram drawn bottom-up; ``edges`` are ``(lower, upper)`` index pairs."""
    lines = [f"digraph {_quote(title)} {{", "  rankdir=BT;"]
    for i, label in enumerate(labels):
        lines.append(f"  n{i} [label={_quote(label)}];")
    for a, b in edges:
        lines.append(f"  n{a} -> n{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"


_NODE_RE = re.compile(r'^\s*n(\d+) \[label="((?:[^"\\]|\\.)*)"\];$')
_EDGE_RE = re.compile(r"^\s*n(\d+) -> n(\d+);$")


def read_dot(text: str) -> tuple:
    """Inverse of :func:`to_dot`: returns ``(labels, edges)``."""
    labels = {}
    edges = []
    for line in text.splitlines():
        m = _NODE_RE.match(line)
        if m:
            labels[int(m.group(1))] = re.sub(r"\\(.)", r"\1", m.group(2))
            continue
        m = _EDGE_RE.match(line)
        if m:
            edges.append((int(m.group(1)), int(m.group(2))))
    return [labels[i] for i in range(len(labels))], edges


def poset_dot(p: Poset) -> str:
    return to_dot(p.name or "P", list(p.names), p.covers())


def _antichain_covers(p: Poset, ants: list) -> list:
    filters = [p.up_mask(sum(1 << x for x in A)) for A in ants]
    k = len(ants)
    lt = [[filters[i] != filters[j] and filters[i] & ~filters[j] == 0 for j in range(k)]
          for i in range(k)]
    return [(i, j) for i in range(k) for j in range(k)
            if lt[i][j] and not any(lt[i][m] and lt[m][j] for m in range(k))]


def antichain_lattice_dot(p: Poset) -> str:
    ants = enumerate_antichains(p)
    return to_dot("Ant", [format_antichain(p, A) for A in ants], _antichain_covers(p, ants))


def blocker_lattice_dot(img: BlockerImage) -> str:
    labels = [format_antichain(img.poset, B) for B in img.blockers]
    return to_dot("Antb", labels, img.covers())


def format_blockers(p: Poset, blockers: Iterable[Antichain]) -> str:
    return " ".join("{" + format_antichain(p, B) + "}" for B in blockers)

