"""POLY text format: exact rational polytope data.

    POLY <d>
    # comment
    V <n>
    <n lines of d rationals>
    H <m>
    <m lines of d+1 rationals: offset then normal>

Rationals are "p" or "p/q" with integer p and positive integer q.  Both
sections are optional but at least one must be present, V before H.
Comments run from '#' to end of line; blank lines are ignored.  Writing is
canonical: lowest terms, single spaces, LF line endings, no comments, so
parse(write(x)) == x.

Triangulations travel in a companion format:

    TRIA <dim> <ncells>
    <ncells lines of dim+1 strictly increasing point indices>

where indices refer to the V section of the corresponding POLY file.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .geometry import Halfspace, Point, Triangulation

_RATIONAL = re.compile(r"^(-?\d+)(?:/(\d+))?$")


class PolyParseError(ValueError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass
class PolyData:
    """Parsed POLY file: dimension plus optional V/H sections.

    A section that is present but empty (e.g. "H 0") round-trips as an
    empty list, distinct from an absent section (None).
    """

    dim: int
    points: list[Point] | None = None
    halfspaces: list[Halfspace] | None = None


def _parse_rational(token: str, line: int) -> Fraction:
    m = _RATIONAL.match(token)
    if not m:
        raise PolyParseError(line, f"malformed rational {token!r}")
    num, den = m.group(1), m.group(2)
    if den is not None and int(den) == 0:
        raise PolyParseError(line, f"malformed rational {token!r} (zero denominator)")
    return Fraction(int(num), int(den) if den is not None else 1)


def _significant_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if body:
            yield lineno, body.split()


def parse_poly(text: str) -> PolyData:
    """Parse POLY text; raises PolyParseError with a line number."""
    lines = _significant_lines(text)
    try:
        lineno, tokens = next(lines)
    except StopIteration:
        raise PolyParseError(0, "empty file") from None
    if len(tokens) != 2 or tokens[0] != "POLY":
        raise PolyParseError(lineno, "expected header 'POLY <d>'")
    try:
        dim = int(tokens[1])
    except ValueError:
        raise PolyParseError(lineno, f"bad dimension {tokens[1]!r}") from None
    if dim < 0:
        raise PolyParseError(lineno, "dimension must be nonnegative")

    points: list[Point] | None = None
    halfspaces: list[Halfspace] | None = None

    def read_rows(count: int, width: int, what: str) -> list[tuple[Fraction, ...]]:
        rows = []
        for _ in range(count):
            try:
                ln, toks = next(lines)
            except StopIteration:
                raise PolyParseError(0, f"unexpected end of file in {what} section") from None
            if len(toks) != width:
                raise PolyParseError(ln, f"expected {width} rationals, got {len(toks)}")
            rows.append(tuple(_parse_rational(tk, ln) for tk in toks))
        return rows

    saw_section = False
    expected = ["V", "H"]
    for lineno, tokens in lines:
        if len(tokens) != 2 or tokens[0] not in ("V", "H"):
            raise PolyParseError(lineno, f"expected section header, got {' '.join(tokens)!r}")
        name = tokens[0]
        if name not in expected:
            raise PolyParseError(lineno, f"section {name} out of order or repeated")
        del expected[: expected.index(name) + 1]
        try:
            count = int(tokens[1])
        except ValueError:
            raise PolyParseError(lineno, f"bad count {tokens[1]!r}") from None
        if count < 0:
            raise PolyParseError(lineno, "section count must be nonnegative")
        saw_section = True
        if name == "V":
            points = read_rows(count, dim, "V")
        else:
            rows = read_rows(count, dim + 1, "H")
            halfspaces = []
            for r in rows:
                try:
                    halfspaces.append(Halfspace(r[0], r[1:]))
                except ValueError as exc:
                    raise PolyParseError(lineno, str(exc)) from None
    if not saw_section:
        raise PolyParseError(lineno, "file needs at least one of V, H")
    return PolyData(dim=dim, points=points, halfspaces=halfspaces)


def write_poly(data: PolyData) -> str:
    """Render canonical POLY text (inverse of parse_poly)."""
    out = [f"POLY {data.dim}"]
    if data.points is not None:
        out.append(f"V {len(data.points)}")
        for p in data.points:
            if len(p) != data.dim:
                raise ValueError(f"point {p} does not have dimension {data.dim}")
            out.append(" ".join(str(Fraction(c)) for c in p))
    if data.halfspaces is not None:
        out.append(f"H {len(data.halfspaces)}")
        for h in data.halfspaces:
            if h.dim != data.dim:
                raise ValueError(f"halfspace dimension {h.dim} != {data.dim}")
            out.append(" ".join(str(c) for c in h.coefficients()))
    if data.points is None and data.halfspaces is None:
        raise ValueError("POLY data needs at least one of V, H")
    return "\n".join(out) + "\n"


def parse_triangulation(text: str) -> tuple[int, list[tuple[int, ...]]]:
    """Parse TRIA text into (dim, cells)."""
    lines = _significant_lines(text)
    try:
        lineno, tokens = next(lines)
    except StopIteration:
        raise PolyParseError(0, "empty file") from None
    if len(tokens) != 3 or tokens[0] != "TRIA":
        raise PolyParseError(lineno, "expected header 'TRIA <dim> <ncells>'")
    try:
        dim, ncells = int(tokens[1]), int(tokens[2])
    except ValueError:
        raise PolyParseError(lineno, "bad TRIA header numbers") from None
    if dim < 0 or ncells < 0:
        raise PolyParseError(lineno, "TRIA header numbers must be nonnegative")
    cells = []
    for _ in range(ncells):
        try:
            ln, toks = next(lines)
        except StopIteration:
            raise PolyParseError(0, "unexpected end of file in TRIA") from None
        if len(toks) != dim + 1:
            raise PolyParseError(ln, f"expected {dim + 1} indices, got {len(toks)}")
        try:
            cell = tuple(int(tk) for tk in toks)
        except ValueError:
            raise PolyParseError(ln, "cell indices must be integers") from None
        if any(i < 0 for i in cell) or list(cell) != sorted(set(cell)):
            raise PolyParseError(ln, f"cell {cell} must be strictly increasing")
        cells.append(cell)
    leftover = next(lines, None)
    if leftover is not None:
        raise PolyParseError(leftover[0], "content after the declared cells")
    return dim, cells


def write_triangulation(t: Triangulation) -> str:
    """Render TRIA text for a triangulation's cells."""
    out = [f"TRIA {t.dim} {len(t.cells)}"]
    for cell in t.cells:
        out.append(" ".join(str(i) for i in cell))
    return "\n".join(out) + "\n"
