"""Text formats: algebra files, Cartan data files, JSON and DOT poset export.

Algebra file (line oriented, ``#`` starts a comment)::

    vertices 1 2
    arrow a 1 2
    arrow e1 1 1
    relation e1*e1
    relation e1*a - 2/3*a*e2
    nilbound 4

Cartan file::

    cartan 2 -1
    cartan -1 2
    symmetrizer 2 2
    orientation 1 2
"""
from __future__ import annotations

import json
import re
from fractions import Fraction

from .algebra import CartanData, RelationSpec, _validate_relation
from .errors import ParseError, RelationTooShort
from .quiver import Arrow, Quiver

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[*+-]))")


def _strip_comment(line: str) -> str:
    return line.split("#", 1)[0]


def _tokenize(text: str, lineno: int, offset: int):
    out = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            col = offset + len(text[pos:]) - len(text[pos:].lstrip()) + pos + 1
            raise ParseError(f"unexpected character {text[pos:].lstrip()[0]!r}", lineno, col)
        kind = m.lastgroup
        start = m.start(kind)
        out.append((kind, m.group(kind), offset + start + 1))
        pos = m.end()
    return out


def _parse_relation(body: str, lineno: int, offset: int) -> RelationSpec:
    tokens = _tokenize(body, lineno, offset)
    if not tokens:
        raise ParseError("empty relation", lineno, offset + 1)
    terms = []
    k = 0
    sign = 1
    if tokens[0][0] == "op" and tokens[0][1] in "+-":
        sign = -1 if tokens[0][1] == "-" else 1
        k = 1
    while True:
        if k >= len(tokens):
            raise ParseError("expected a term", lineno, tokens[-1][2] + len(tokens[-1][1]))
        coeff = Fraction(1)
        kind, val, col = tokens[k]
        if kind == "num":
            coeff = Fraction(val)
            if coeff == 0:
                raise ParseError("zero coefficient", lineno, col)
            k += 1
            if k >= len(tokens) or tokens[k][1] != "*":
                raise ParseError("expected '*' after coefficient", lineno, col + len(val))
            k += 1
        names = []
        while True:
            if k >= len(tokens) or tokens[k][0] != "name":
                where = tokens[k][2] if k < len(tokens) else tokens[-1][2] + len(tokens[-1][1])
                raise ParseError("expected an arrow name", lineno, where)
            names.append(tokens[k][1])
            k += 1
            if k < len(tokens) and tokens[k][1] == "*":
                k += 1
                continue
            break
        terms.append((sign * coeff, tuple(names)))
        if k == len(tokens):
            break
        kind, val, col = tokens[k]
        if val not in "+-" or kind != "op":
            raise ParseError(f"expected '+' or '-', found {val!r}", lineno, col)
        sign = -1 if val == "-" else 1
        k += 1
    return RelationSpec(tuple(terms))


def _int(word: str, lineno: int, col: int) -> int:
    try:
        return int(word)
    except ValueError:
        raise ParseError(f"expected an integer, found {word!r}", lineno, col) from None


def _words(line: str):
    """Words with their 1-based columns."""
    return [(m.group(), m.start() + 1) for m in re.finditer(r"\S+", line)]


def parse_algebra(text: str) -> tuple[Quiver, list[RelationSpec], int]:
    vertices = None
    arrows = []
    rels = []
    nilbound = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = _strip_comment(raw)
        words = _words(line)
        if not words:
            continue
        key, kcol = words[0]
        if key == "vertices":
            if vertices is not None:
                raise ParseError("vertices declared twice", lineno, kcol)
            if len(words) < 2:
                raise ParseError("no vertices listed", lineno, kcol)
            vertices = [_int(w, lineno, c) for w, c in words[1:]]
            for (w, c), v in zip(words[1:], vertices):
                if v <= 0:
                    raise ParseError("vertex ids must be positive", lineno, c)
            if len(set(vertices)) != len(vertices):
                raise ParseError("duplicate vertex id", lineno, words[1][1])
        elif key == "arrow":
            if len(words) != 4:
                raise ParseError("expected: arrow <name> <source> <target>", lineno, kcol)
            name, ncol = words[1]
            if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", name):
                raise ParseError(f"invalid arrow name {name!r}", lineno, ncol)
            src = _int(words[2][0], lineno, words[2][1])
            tgt = _int(words[3][0], lineno, words[3][1])
            arrows.append((Arrow(name, src, tgt), lineno, words))
        elif key == "relation":
            body = line[kcol - 1 + len(key):]
            rels.append((_parse_relation(body, lineno, kcol - 1 + len(key)), lineno, kcol))
        elif key == "nilbound":
            if len(words) != 2:
                raise ParseError("expected: nilbound <N>", lineno, kcol)
            if nilbound is not None:
                raise ParseError("nilbound declared twice", lineno, kcol)
            nilbound = _int(words[1][0], lineno, words[1][1])
            if nilbound < 2:
                raise ParseError("nilbound must be at least 2", lineno, words[1][1])
        else:
            raise ParseError(f"unknown keyword {key!r}", lineno, kcol)
    if vertices is None:
        raise ParseError("missing 'vertices' line")
    if nilbound is None:
        raise ParseError("missing 'nilbound' line")
    vset = set(vertices)
    seen = set()
    for arrow, lineno, words in arrows:
        if arrow.name in seen:
            raise ParseError(f"duplicate arrow name {arrow.name!r}", lineno, words[1][1])
        seen.add(arrow.name)
        for v, (w, c) in ((arrow.source, words[2]), (arrow.target, words[3])):
            if v not in vset:
                raise ParseError(f"undeclared vertex {v}", lineno, c)
    q = Quiver(tuple(vertices), tuple(a for a, _, _ in arrows))
    for rel, lineno, col in rels:
        try:
            _validate_relation(q, rel)
        except (ValueError, RelationTooShort) as exc:
            raise ParseError(str(exc), lineno, col) from None
    return q, [r for r, _, _ in rels], nilbound


def _format_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_relation(rel: RelationSpec) -> str:
    parts = []
    for k, (c, path) in enumerate(rel.terms):
        mag = abs(c)
        body = "*".join(path) if mag == 1 else f"{_format_coeff(mag)}*" + "*".join(path)
        if k == 0:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts)


def print_algebra(q: Quiver, rels, nilbound: int) -> str:
    lines = ["vertices " + " ".join(str(v) for v in q.vertices)]
    lines += [f"arrow {a.name} {a.source} {a.target}" for a in q.arrows]
    lines += ["relation " + format_relation(r) for r in rels]
    lines.append(f"nilbound {nilbound}")
    return "\n".join(lines) + "\n"


def parse_cartan(text: str) -> CartanData:
    rows, sym, omega = [], None, []
    for lineno, raw in enumerate(text.splitlines(), 1):
        words = _words(_strip_comment(raw))
        if not words:
            continue
        key, kcol = words[0]
        nums = [_int(w, lineno, c) for w, c in words[1:]]
        if key == "cartan":
            rows.append(tuple(nums))
        elif key == "symmetrizer":
            sym = tuple(nums)
        elif key == "orientation":
            if len(nums) != 2:
                raise ParseError("expected: orientation <i> <j>", lineno, kcol)
            omega.append(tuple(nums))
        else:
            raise ParseError(f"unknown keyword {key!r}", lineno, kcol)
    if not rows:
        raise ParseError("no 'cartan' rows")
    if sym is None:
        raise ParseError("missing 'symmetrizer' line")
    return CartanData(tuple(rows), sym, tuple(omega))


# -- poset export --------------------------------------------------------------


def poset_records(nodes) -> list[dict]:
    """``nodes`` yields (gmatrix, dim_vector, support, shifted) tuples."""
    return [
        {"id": i, "gmatrix": [list(g) for g in gm], "dim_vector": list(dv),
         "support": list(sup), "shifted": list(sh)}
        for i, (gm, dv, sup, sh) in enumerate(nodes)
    ]


def to_json(complete: bool, records: list[dict], hasse) -> str:
    """JSON document with one node record per line."""
    nodes = ",\n".join("    " + json.dumps(r) for r in records)
    arrows = json.dumps([list(a) for a in sorted(hasse)])
    return (f'{{\n  "complete": {json.dumps(complete)},\n  "nodes": [\n{nodes}\n  ],\n'
            f'  "hasse": {arrows}\n}}\n')


def to_dot(records: list[dict], hasse, name: str = "sttilt") -> str:
    lines = [f"digraph {name} {{"]
    for r in records:
        label = " ".join("(" + ",".join(str(x) for x in g) + ")" for g in r["gmatrix"])
        lines.append(f'  n{r["id"]} [label="{label}"];')
    for a, b in sorted(hasse):
        lines.append(f"  n{a} -> n{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"
