"""Text format for involutive posets and Graphviz export.

A structure file looks like::

    ilat 3
    names 0 h 1
    covers
    0 1
    1 2
    inv 2 1 0
    bottom 0
    top 2

``covers`` lists pairs ``i j`` with i covered by j, one per line, until the
next keyword.  ``names`` is optional.  ``#`` starts a comment.  The
canonical emit writes covers in sorted order, so emitting a parsed file
reproduces it byte for byte.
"""

from __future__ import annotations

from pathlib import Path
from typing import Union

import numpy as np

from .core import InvolutivePoset, transitive_closure, try_lattice, validate
from .errors import ParseError

_KEYWORDS = ("ilat", "names", "covers", "inv", "bottom", "top")


def _ints(tokens, line):
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError(f"expected integers, got {' '.join(tokens)!r}", line) from None


def parse(text: str) -> InvolutivePoset:
    """Parse a structure file and validate it.

    Syntax problems raise :class:`ParseError` with the line number; axiom
    failures raise the validation error of :func:`involat.core.validate`.
    """
    lines = []
    for no, raw in enumerate(text.splitlines(), 1):
        s = raw.split("#", 1)[0].strip()
        if s:
            lines.append((no, s.split()))
    if not lines or lines[0][1][0] != "ilat":
        raise ParseError("file must start with 'ilat <n>'", lines[0][0] if lines else 1)
    no, head = lines[0]
    if len(head) != 2:
        raise ParseError("header must be 'ilat <n>'", no)
    (n,) = _ints(head[1:], no)
    if n < 1:
        raise ParseError("size must be positive", no)
    names = inv = bottom = top = None
    covers: list[tuple[int, int]] = []
    seen = set()
    k = 1
    while k < len(lines):
        no, toks = lines[k]
        key = toks[0]
        if key not in _KEYWORDS or key == "ilat":
            raise ParseError(f"unexpected {key!r}", no)
        if key in seen:
            raise ParseError(f"duplicate {key!r} section", no)
        seen.add(key)
        if key == "names":
            names = toks[1:]
            if len(names) != n or len(set(names)) != n:
                raise ParseError(f"need {n} distinct names", no)
        elif key == "covers":
            if len(toks) != 1:
                raise ParseError("'covers' stands alone on its line", no)
            while k + 1 < len(lines) and lines[k + 1][1][0] not in _KEYWORDS:
                k += 1
                no2, pair = lines[k]
                if len(pair) != 2:
                    raise ParseError("cover lines hold two indices", no2)
                i, j = _ints(pair, no2)
                if not (0 <= i < n and 0 <= j < n):
                    raise ParseError(f"index out of range 0..{n - 1}", no2)
                covers.append((i, j))
        elif key == "inv":
            inv = _ints(toks[1:], no)
            if len(inv) != n or any(not 0 <= v < n for v in inv):
                raise ParseError(f"'inv' needs {n} indices in range", no)
        else:
            vals = _ints(toks[1:], no)
            if len(vals) != 1 or not 0 <= vals[0] < n:
                raise ParseError(f"'{key}' needs one index in range", no)
            if key == "bottom":
                bottom = vals[0]
            else:
                top = vals[0]
        k += 1
    for key, val in (("covers", "covers" in seen), ("inv", inv), ("bottom", bottom), ("top", top)):
        if val is None or val is False:
            if not (key == "covers" and n == 1):
                raise ParseError(f"missing '{key}' section", lines[-1][0])
    rel = np.eye(n, dtype=bool)
    for i, j in covers:
        rel[i, j] = True
    leq = transitive_closure(rel)
    return try_lattice(validate(leq, inv, bottom, top, names))


def read(path: Union[str, Path]) -> InvolutivePoset:
    return parse(Path(path).read_text())


def emit(p: InvolutivePoset) -> str:
    """Canonical text: names (if any), sorted covers, involution, bounds."""
    out = [f"ilat {p.n}"]
    if p.labels is not None:
        for lab in p.labels:
            if not lab or any(ch.isspace() for ch in lab) or "#" in lab:
                raise ValueError(f"label {lab!r} cannot be written")
        out.append("names " + " ".join(p.labels))
    out.append("covers")
    out += [f"{i} {j}" for i, j in sorted(p.covers())]
    out.append("inv " + " ".join(str(v) for v in p.inv))
    out.append(f"bottom {p.bottom}")
    out.append(f"top {p.top}")
    return "\n".join(out) + "\n"


def write(p: InvolutivePoset, path: Union[str, Path]) -> None:
    Path(path).write_text(emit(p))


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(p: InvolutivePoset, name: str = "ilat") -> str:
    """Hasse diagram, bottom to top; the involution as dashed undirected
    edges (a self-loop for each fixed point)."""
    out = [f"digraph {_quote(name)} {{", "  rankdir=BT;", "  node [shape=circle];"]
    for i in range(p.n):
        out.append(f"  n{i} [label={_quote(p.name(i))}];")
    for i, j in sorted(p.covers()):
        out.append(f"  n{i} -> n{j};")
    for i in range(p.n):
        j = p.inv[i]
        if i <= j:
            out.append(f"  n{i} -> n{j} [style=dashed, dir=none, constraint=false];")
    out.append("}")
    return "\n".join(out) + "\n"
