"""Line-oriented text formats shared by the CLI.

Complex::

    # comment
    vertices: a b c
    facet: a b
    facet: b c

Graph: ``vertices:`` (optional) and ``edge: a b`` lines.
Presentation: ``gens: x1 x2`` and ``rel: x1^2 x2 x1^-2 x2^-1`` lines
(``rel: 1`` is the empty relator).  Character: ``chi: a=1 b=0 c=2``.
Polynomial list: one Laurent polynomial per line.  Epimorphism: one row
of integers per line.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .fpgroups import GroupPresentation
from .laurent import LaurentPolynomial, PolynomialSyntaxError, format_polynomial
from .simplicial import Graph, SimplicialComplex


class FormatError(ValueError):
    def __init__(self, message: str, line: int | None = None, source: str = "<input>"):
        self.line = line
        where = f"{source}:{line}: " if line is not None else f"{source}: "
        super().__init__(where + message)


@dataclass(frozen=True)
class _Line:
    number: int
    key: str
    value: str


def _lines(text: str, allowed: set[str], source: str) -> list[_Line]:
    out = []
    for k, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition(":")
        key = key.strip().lower()
        if not sep or key not in allowed:
            raise FormatError(f"expected one of {', '.join(sorted(k + ':' for k in allowed))}; got {raw.strip()!r}",
                              k, source)
        out.append(_Line(k, key, value.strip()))
    return out


_NAME = re.compile(r"^[A-Za-z0-9_.]+$")


def _names(ln: _Line, source: str) -> list[str]:
    names = ln.value.split()
    for v in names:
        if not _NAME.match(v):
            raise FormatError(f"bad vertex name {v!r}", ln.number, source)
    return names


# ------------------------------------------------------------- complexes


def parse_complex(text: str, source: str = "<complex>") -> SimplicialComplex:
    lines = _lines(text, {"vertices", "facet"}, source)
    declared = None
    facets = []
    for ln in lines:
        names = _names(ln, source)
        if ln.key == "vertices":
            if declared is not None:
                raise FormatError("duplicate vertices: line", ln.number, source)
            if len(set(names)) != len(names):
                raise FormatError("repeated vertex name", ln.number, source)
            declared = names
        else:
            if len(set(names)) != len(names):
                raise FormatError("repeated vertex in facet", ln.number, source)
            if declared is not None and not set(names) <= set(declared):
                raise FormatError(f"facet uses undeclared vertices {sorted(set(names) - set(declared))}",
                                  ln.number, source)
            facets.append(names)
    return SimplicialComplex.from_facets(facets, vertices=declared)


def emit_complex(K: SimplicialComplex) -> str:
    """Canonical text: vertices and facets sorted lexicographically."""
    if K.is_void:
        raise ValueError("the void complex has no text form")
    lines = ["vertices: " + " ".join(sorted(K.vertices))]
    facets = sorted(tuple(sorted(f)) for f in K.facets if f)
    lines += ["facet: " + " ".join(f) for f in facets]
    return "\n".join(lines) + "\n"


def parse_graph(text: str, source: str = "<graph>") -> Graph:
    lines = _lines(text, {"vertices", "edge"}, source)
    declared = None
    edges = []
    for ln in lines:
        names = _names(ln, source)
        if ln.key == "vertices":
            if declared is not None:
                raise FormatError("duplicate vertices: line", ln.number, source)
            declared = names
        else:
            if len(names) != 2 or names[0] == names[1]:
                raise FormatError("an edge needs two distinct vertices", ln.number, source)
            if declared is not None and not set(names) <= set(declared):
                raise FormatError(f"edge uses undeclared vertices {sorted(set(names) - set(declared))}",
                                  ln.number, source)
            edges.append(names)
    return Graph.from_edges(edges, vertices=declared)


def emit_graph(G: Graph) -> str:
    lines = ["vertices: " + " ".join(sorted(G.vertices))]
    lines += ["edge: " + " ".join(sorted(e)) for e in sorted(tuple(sorted(e)) for e in G.edges)]
    return "\n".join(lines) + "\n"


# --------------------------------------------------------- presentations


_LETTER = re.compile(r"^([A-Za-z][A-Za-z0-9_]*)(?:\^(-?\d+))?$")


def parse_presentation(text: str, source: str = "<presentation>") -> GroupPresentation:
    lines = _lines(text, {"gens", "rel"}, source)
    gens = None
    rels = []
    for ln in lines:
        if ln.key == "gens":
            if gens is not None:
                raise FormatError("duplicate gens: line", ln.number, source)
            gens = ln.value.split()
            if len(set(gens)) != len(gens):
                raise FormatError("repeated generator name", ln.number, source)
            continue
        if gens is None:
            raise FormatError("rel: before gens:", ln.number, source)
        pos = {g: k + 1 for k, g in enumerate(gens)}
        word = []
        tokens = ln.value.split()
        if tokens == ["1"]:
            tokens = []
        for tok in tokens:
            m = _LETTER.match(tok)
            if not m or m.group(1) not in pos:
                raise FormatError(f"bad letter {tok!r}", ln.number, source)
            e = int(m.group(2) or 1)
            j = pos[m.group(1)]
            word += [j if e > 0 else -j] * abs(e)
        rels.append(word)
    if gens is None:
        raise FormatError("missing gens: line", None, source)
    return GroupPresentation.from_words(len(gens), rels, gens)


def emit_presentation(P: GroupPresentation) -> str:
    lines = ["gens: " + " ".join(P.generators)]
    lines += ["rel: " + P.word_str(r) for r in P.relators]
    return "\n".join(lines) + "\n"


# ------------------------------------------------------------ characters


def parse_character(text: str, source: str = "<character>") -> dict[str, int]:
    """``a=1 b=0 c=2`` (commas also separate), optionally prefixed by ``chi:``."""
    body = text.strip()
    if body.lower().startswith("chi:"):
        body = body[4:]
    out: dict[str, int] = {}
    for tok in body.replace(",", " ").split():
        name, sep, val = tok.partition("=")
        if not sep or not _NAME.match(name):
            raise FormatError(f"expected name=value, got {tok!r}", 1, source)
        if name in out:
            raise FormatError(f"vertex {name!r} given twice", 1, source)
        try:
            out[name] = int(val)
        except ValueError:
            raise FormatError(f"value of {name!r} is not an integer: {val!r}", 1, source) from None
    if not out:
        raise FormatError("empty character", 1, source)
    return out


def emit_character(chi: dict) -> str:
    return "chi: " + " ".join(f"{v}={chi[v]}" for v in sorted(chi)) + "\n"


# ------------------------------------------------------------ polynomials


def parse_polynomials(text: str, source: str = "<polynomials>", *, n: int | None = None) -> list[LaurentPolynomial]:
    """One polynomial per nonblank line; all share the largest variable index."""
    raw = []
    for k, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if line:
            raw.append((k, line))
    if not raw:
        raise FormatError("no polynomials", None, source)
    idx = [int(m) for _, line in raw for m in re.findall(r"t(\d+)", line)]
    width = max([n or 0] + idx) or 1
    out = []
    for k, line in raw:
        try:
            out.append(LaurentPolynomial.parse(line, width))
        except PolynomialSyntaxError as exc:
            raise FormatError(str(exc), k, source) from None
    return out


def emit_polynomials(fs) -> str:
    return "".join(format_polynomial(f) + "\n" for f in fs)


def parse_matrix(text: str, source: str = "<matrix>") -> list[list[int]]:
    """Integer rows, whitespace or comma separated; ``;`` also separates rows."""
    rows = []
    for k, line in enumerate(text.replace(";", "\n").splitlines(), start=1):
        line = line.split("#", 1)[0].replace(",", " ").strip()
        if not line:
            continue
        try:
            rows.append([int(x) for x in line.split()])
        except ValueError:
            raise FormatError(f"expected integers, got {line!r}", k, source) from None
    if not rows:
        raise FormatError("empty matrix", None, source)
    if len({len(r) for r in rows}) != 1:
        raise FormatError("rows have different lengths", None, source)
    return rows


def emit_matrix(rows) -> str:
    return "".join(" ".join(str(x) for x in r) + "\n" for r in rows)
