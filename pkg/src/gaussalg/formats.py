"""Plain-text algebra and graph files.

Algebra file::

    dim 4
    x1*x2
    1 0 1 0        # exponent vectors work too

Graph file::

    vertices 4
    edge 1 2
    loop 1

``#`` starts a comment; blank lines are ignored.
"""

from __future__ import annotations

from pathlib import Path

from .exactcore import Monomial, MonomialAlgebra
from .graphs import LoopedGraph


class InputError(ValueError):
    """Malformed input file; the message names the offending line."""


def _lines(text: str):
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield no, line


def _header(lines, keyword, source):
    try:
        no, line = next(lines)
    except StopIteration:
        raise InputError(f"{source}: empty file") from None
    parts = line.split()
    if len(parts) != 2 or parts[0] != keyword or not parts[1].isdigit() or int(parts[1]) < 1:
        raise InputError(f"{source}:{no}: expected '{keyword} <n>', got {line!r}")
    return int(parts[1])


def parse_monomial(line: str, d: int) -> Monomial:
    parts = line.split()
    if all(p.isdigit() for p in parts):
        if len(parts) != d:
            raise ValueError(f"expected {d} exponents, got {len(parts)}")
        return Monomial(tuple(int(p) for p in parts))
    return Monomial.parse(line, d)


def parse_algebra(text: str, source: str = "<input>") -> MonomialAlgebra:
    lines = _lines(text)
    d = _header(lines, "dim", source)
    gens = []
    degree = None
    for no, line in lines:
        try:
            m = parse_monomial(line, d)
        except ValueError as exc:
            raise InputError(f"{source}:{no}: {exc}") from None
        if degree is None:
            degree = m.degree
        elif m.degree != degree:
            raise InputError(f"{source}:{no}: degree {m.degree} differs from {degree}")
        gens.append(m)
    if not gens:
        raise InputError(f"{source}: no monomials")
    return MonomialAlgebra(d, tuple(gens))


def parse_graph(text: str, source: str = "<input>") -> LoopedGraph:
    lines = _lines(text)
    d = _header(lines, "vertices", source)
    edges, loops = [], set()
    seen = set()
    for no, line in lines:
        parts = line.split()
        try:
            if parts[0] == "edge" and len(parts) == 3:
                i, j = int(parts[1]), int(parts[2])
                if i == j:
                    raise ValueError("edge endpoints must differ; use 'loop'")
                key = (min(i, j), max(i, j))
                if key in seen:
                    raise ValueError(f"duplicate edge {i} {j}")
                seen.add(key)
                edges.append(key)
            elif parts[0] == "loop" and len(parts) == 2:
                loops.add(int(parts[1]))
            else:
                raise ValueError(f"expected 'edge i j' or 'loop i', got {line!r}")
            for v in parts[1:]:
                if not 1 <= int(v) <= d:
                    raise ValueError(f"vertex {v} outside 1..{d}")
        except ValueError as exc:
            raise InputError(f"{source}:{no}: {exc}") from None
    return LoopedGraph(d, tuple(edges), frozenset(loops))


def read_input(path: str | Path):
    """An algebra or a graph, depending on the header keyword."""
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None
    first = next(_lines(text), (0, ""))[1].split()[:1]
    if first == ["vertices"]:
        return parse_graph(text, str(path))
    return parse_algebra(text, str(path))


def format_monomial(m: Monomial, style: str = "string") -> str:
    if style == "expvec":
        return " ".join(map(str, m.exps))
    return str(m)


def write_algebra(A: MonomialAlgebra, style: str = "string") -> str:
    return "\n".join([f"dim {A.d}"] + [format_monomial(g, style) for g in A.gens]) + "\n"


def write_graph(G: LoopedGraph) -> str:
    lines = [f"vertices {G.d}"]
    lines += [f"edge {a} {b}" for a, b in G.edges]
    lines += [f"loop {v}" for v in sorted(G.loops)]
    return "\n".join(lines) + "\n"
