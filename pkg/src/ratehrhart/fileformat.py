"""Polytope text format.

::

    dim 2
    kind polygon          # polygon | simplex | general
    1/2 -1/2              # one vertex per line
    -1/2 -1/2
    0 3/2

``general`` files continue with a ``halfspaces`` line followed by one
``a_1 ... a_n c`` line per facet, meaning ``a.x <= c``.  ``#`` starts a
comment.  :func:`dump_polytope` writes the canonical form, and parsing it
back gives an equal polytope.
"""
from __future__ import annotations

from pathlib import Path

from .arith import format_rational, parse_rational
from .errors import ParseError
from .polytope import (GENERAL, KINDS, POLYGON, SIMPLEX, Halfspace, Polytope,
                       build_general, build_polygon, build_simplex)


def _lines(text):
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield no, line.split()


def parse_polytope(text: str) -> Polytope:
    lines = list(_lines(text))
    if len(lines) < 2:
        raise ParseError("expected 'dim <n>' and 'kind <kind>' header lines",
                         lines[0][0] if lines else None)
    (head_no, head), (no2, kind_line) = lines[0], lines[1]
    if len(head) != 2 or head[0] != "dim" or not head[1].isdigit() or int(head[1]) < 1:
        raise ParseError("expected 'dim <n>' with n >= 1", head_no)
    n = int(head[1])
    if len(kind_line) != 2 or kind_line[0] != "kind" or kind_line[1] not in KINDS:
        raise ParseError(f"expected 'kind {'|'.join(KINDS)}'", no2)
    kind = kind_line[1]

    vertices, halfspaces = [], []
    section = "vertices"
    for no, toks in lines[2:]:
        if toks == ["halfspaces"]:
            if kind != GENERAL:
                raise ParseError("only general polytopes take a halfspaces section", no)
            if section == "halfspaces":
                raise ParseError("duplicate halfspaces section", no)
            section = "halfspaces"
            continue
        if section == "vertices":
            if len(toks) != n:
                raise ParseError(f"vertex needs {n} coordinates, got {len(toks)}", no)
            vertices.append(tuple(parse_rational(t, no) for t in toks))
        else:
            if len(toks) != n + 1:
                raise ParseError(f"halfspace needs {n} integers and an offset", no)
            try:
                normal = [int(t) for t in toks[:n]]
            except ValueError:
                raise ParseError("halfspace normal entries must be integers", no) from None
            if not any(normal):
                raise ParseError("halfspace normal must be nonzero", no)
            halfspaces.append(Halfspace.from_rational(normal, parse_rational(toks[n], no)))

    if not vertices:
        raise ParseError("no vertices given", lines[-1][0])
    if kind == POLYGON:
        if n != 2:
            raise ParseError("polygon files must have dim 2", head_no)
        return build_polygon(vertices)
    if kind == SIMPLEX:
        return build_simplex(vertices)
    if section != "halfspaces" or not halfspaces:
        raise ParseError("general polytopes need a halfspaces section", lines[-1][0])
    return build_general(vertices, halfspaces)


def load_polytope(path) -> Polytope:
    return parse_polytope(Path(path).read_text())


def dump_polytope(P: Polytope) -> str:
    out = [f"dim {P.ambient_dim}", f"kind {P.kind}"]
    out += [" ".join(format_rational(x) for x in v) for v in P.vertices]
    if P.kind == GENERAL:
        out.append("halfspaces")
        out += [" ".join([str(a) for a in h.normal] + [format_rational(h.offset)])
                for h in P.halfspaces]
    return "\n".join(out) + "\n"
