"""Readers for the plain-text input formats.

Matrix files: first non-comment line holds the labels, each following line
one row of rationals (``3``, ``-1/2``).  Graph files: one ``tail head label``
per line.  Automorphism files: one generator per line,
``perm: (a b c)(d e); scalars: a=-1,b=2`` with omitted scalars equal to 1.
``#`` starts a comment everywhere.
"""
from __future__ import annotations

import re
from pathlib import Path

from .errors import ParseError
from .exact import Mat, Rat, rat
from .space import LinearSpace, from_graph, make


def _lines(text: str) -> list[tuple[int, list[str]]]:
    out = []
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append((no, line.split()))
    return out


def parse_matrix(text: str) -> LinearSpace:
    lines = _lines(text)
    if not lines:
        raise ParseError("empty matrix file")
    labels = lines[0][1]
    rows = []
    for no, toks in lines[1:]:
        if len(toks) != len(labels):
            raise ParseError(f"line {no}: {len(toks)} entries for {len(labels)} labels")
        try:
            rows.append([rat(t) for t in toks])
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"line {no}: {exc}") from None
    return make(labels, Mat.from_rows(rows, ncols=len(labels)))


def parse_graph(text: str) -> list[tuple[str, str, str]]:
    edges = []
    for no, toks in _lines(text):
        if len(toks) != 3:
            raise ParseError(f"line {no}: expected 'tail head label'")
        edges.append(tuple(toks))
    labels = [e[2] for e in edges]
    if len(set(labels)) != len(labels):
        raise ParseError("duplicate edge labels")
    return edges


_CYCLE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str) -> dict[str, str]:
    perm: dict[str, str] = {}
    text = text.strip()
    if text in ("", "()", "id", "identity"):
        return perm
    if _CYCLE.sub("", text).strip():
        raise ParseError(f"bad cycle notation {text!r}")
    for body in _CYCLE.findall(text):
        items = body.replace(",", " ").split()
        for x, y in zip(items, items[1:] + items[:1]):
            if x in perm:
                raise ParseError(f"{x} appears twice in {text!r}")
            perm[x] = y
    return perm


def parse_automorphisms(text: str) -> list[tuple[dict[str, str], dict[str, Rat]]]:
    gens = []
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        perm: dict[str, str] = {}
        scalars: dict[str, Rat] = {}
        for part in line.split(";"):
            part = part.strip()
            if not part:
                continue
            key, _, val = part.partition(":")
            key = key.strip()
            if key == "perm":
                perm = parse_cycles(val)
            elif key == "scalars":
                for item in val.split(","):
                    if item.strip():
                        e, _, c = item.partition("=")
                        try:
                            scalars[e.strip()] = rat(c.strip())
                        except (ValueError, ZeroDivisionError):
                            raise ParseError(f"line {no}: bad scalar {item!r}") from None
            else:
                raise ParseError(f"line {no}: unknown field {key!r}")
        gens.append((perm, scalars))
    return gens


def load_space(path, mode: str | None = None) -> LinearSpace:
    """Read a matrix file, or a graph file when ``mode`` is given."""
    text = Path(path).read_text(encoding="utf-8")
    if mode is None and str(path).endswith(".graph"):
        mode = "cographical"
    if mode is None:
        return parse_matrix(text)
    return from_graph(parse_graph(text), mode)
