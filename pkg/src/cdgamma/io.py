"""Line-oriented text formats.

Poset files::

    poset cube3
    element <id>          (optional)
    cover <lower> <upper>

``bot`` and ``top`` name the bottom and top.  Incidence files hold one
``vertices ...`` line and one ``facet ...`` line per facet.  Colored complex
files hold ``colors k``, ``vertex <id> <color>`` and ``face <id> ...`` lines
(facets; the closure is taken on load).  Shelling files start with
``shelling <posetName>`` followed by one facet id per line.  ``#`` starts a
comment everywhere.
"""

from __future__ import annotations

from .colored import ColoredComplex
from .errors import ParseError
from .flags import FlagVector
from .poset import (
    GradedPoset,
    SimplicialComplex,
    VertexFacetIncidence,
    build_from_covers,
    face_lattice,
    sort_key,
)
from .shelling import ShellingOrder

__all__ = [
    "token",
    "element_tokens",
    "write_poset",
    "read_poset",
    "read_incidence",
    "write_incidence",
    "read_structure",
    "write_colored",
    "read_colored",
    "format_vector",
    "parse_vector",
    "format_flag_vector",
    "write_shelling",
    "read_shelling",
]

RESERVED = ("bot", "top")


def _records(text: str):
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if line:
            yield lineno, line.split()


def token(x) -> str:
    """Whitespace-free text form of an element or vertex id."""
    if isinstance(x, (frozenset, set)):
        return ".".join(token(v) for v in sorted(x, key=sort_key)) or "empty"
    if isinstance(x, tuple):
        return ":".join(token(v) for v in x)
    text = str(x)
    if not text or any(ch.isspace() for ch in text) or "#" in text:
        raise ValueError(f"id {x!r} has no clean token")
    return text


def element_tokens(p: GradedPoset) -> dict:
    """``id -> token``; falls back to ``e<k>`` numbering if tokens collide."""
    names = {p.bottom: "bot", p.top: "top"}
    ordered = sorted(p.proper_part(), key=lambda x: (p.rank[x], sort_key(x)))
    try:
        for x in ordered:
            names[x] = token(x)
        clean = len(set(names.values())) == len(names) and not any(
            names[x] in RESERVED for x in ordered)
    except ValueError:
        clean = False
    if not clean:
        names = {p.bottom: "bot", p.top: "top"}
        names.update({x: f"e{k}" for k, x in enumerate(ordered, start=1)})
    return names


def write_poset(p: GradedPoset, name: str | None = None) -> str:
    names = element_tokens(p)
    lines = [f"poset {name or p.name or 'P'}"]
    order = sorted(p.elements, key=lambda x: (p.rank[x], sort_key(x)))
    pos = {x: k for k, x in enumerate(order)}
    for x in order:
        lines.append(f"element {names[x]}")
    for a, b in sorted(p.covers, key=lambda c: (pos[c[1]], pos[c[0]])):
        lines.append(f"cover {names[a]} {names[b]}")
    return "\n".join(lines) + "\n"


def read_poset(text: str) -> GradedPoset:
    name = None
    elements, covers = set(), set()
    for lineno, rec in _records(text):
        head = rec[0]
        if head == "poset":
            name = " ".join(rec[1:]) or None
        elif head == "element" and len(rec) == 2:
            elements.add(rec[1])
        elif head == "cover" and len(rec) == 3:
            covers.add((rec[1], rec[2]))
        else:
            raise ParseError(f"line {lineno}: cannot parse {' '.join(rec)!r}")
    bottom = "bot" if "bot" in elements or any("bot" in c for c in covers) else None
    top = "top" if "top" in elements or any("top" in c for c in covers) else None
    return build_from_covers(elements, covers, bottom, top, name=name)


def read_incidence(text: str) -> VertexFacetIncidence:
    vertices, facets = None, []
    for lineno, rec in _records(text):
        if rec[0] == "vertices":
            vertices = rec[1:]
        elif rec[0] == "facet":
            facets.append(rec[1:])
        elif rec[0] == "poset":
            continue
        else:
            raise ParseError(f"line {lineno}: cannot parse {' '.join(rec)!r}")
    if vertices is None:
        raise ParseError("missing 'vertices' line")
    return VertexFacetIncidence(tuple(vertices), tuple(facets))


def write_incidence(inc: VertexFacetIncidence) -> str:
    lines = ["vertices " + " ".join(token(v) for v in inc.vertices)]
    for f in inc.facets:
        lines.append("facet " + " ".join(token(v) for v in sorted(f, key=sort_key)))
    return "\n".join(lines) + "\n"


def read_structure(text: str, name: str | None = None) -> GradedPoset:
    """Load either a poset file or an incidence file (face lattice)."""
    for _, rec in _records(text):
        if rec[0] == "vertices":
            return face_lattice(read_incidence(text), name=name)
        if rec[0] in ("element", "cover"):
            break
    return read_poset(text)


def write_colored(cc: ColoredComplex) -> str:
    lines = [f"colors {cc.k}"]
    for v in cc.complex.vertices:
        lines.append(f"vertex {token(v)} {cc.colors[v]}")
    for f in cc.complex.facets():
        if f:
            lines.append("face " + " ".join(token(v) for v in sorted(f, key=sort_key)))
    return "\n".join(lines) + "\n"


def read_colored(text: str) -> ColoredComplex:
    k, colors, facets = None, {}, []
    for lineno, rec in _records(text):
        if rec[0] == "colors" and len(rec) == 2:
            k = int(rec[1])
        elif rec[0] == "vertex" and len(rec) == 3:
            colors[rec[1]] = int(rec[2])
        elif rec[0] == "face":
            facets.append(rec[1:])
        else:
            raise ParseError(f"line {lineno}: cannot parse {' '.join(rec)!r}")
    if k is None:
        raise ParseError("missing 'colors' line")
    facets += [[v] for v in colors]
    return ColoredComplex(SimplicialComplex.from_facets(facets), colors, k)


def format_vector(vec) -> str:
    return ",".join(str(int(v)) for v in vec)


def parse_vector(text: str) -> list:
    try:
        return [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise ParseError(f"not a comma-separated integer list: {text!r}") from None


def format_flag_vector(fv: FlagVector) -> str:
    lines = []
    for s, v in fv.items():
        key = ",".join(map(str, sorted(s))) if s else "empty"
        lines.append(f"S={key} value={v}")
    return "\n".join(lines) + "\n"


def write_shelling(so: ShellingOrder, name: str | None = None) -> str:
    names = element_tokens(so.poset)
    lines = [f"shelling {name or so.poset.name or 'P'}"]
    lines += [names[f] for f in so.order]
    return "\n".join(lines) + "\n"


def read_shelling(text: str, poset: GradedPoset) -> ShellingOrder:
    by_token = {v: k for k, v in element_tokens(poset).items()}
    # posets read from files use the tokens themselves as ids
    by_token.update({x: x for x in poset.elements if isinstance(x, str)})
    order = []
    for lineno, rec in _records(text):
        if rec[0] == "shelling":
            continue
        if len(rec) != 1 or rec[0] not in by_token:
            raise ParseError(f"line {lineno}: unknown facet {' '.join(rec)!r}")
        order.append(by_token[rec[0]])
    return ShellingOrder(poset, tuple(order))
