"""Independent verification oracles.

Everything here recomputes hull data by routes that share nothing with the
incremental engine's bookkeeping: facets by exhaustive hyperplane
enumeration, face lattices by closing vertex incidences under
intersection, volumes by a placing run under a fixed independent
insertion order.  Intended for desk-scale inputs; the brute-force hull
refuses sizes past its guard rails.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .geometry import (
    Halfspace,
    Point,
    Polytope,
    Triangulation,
    affine_basis,
    point,
    project_to_span,
    simplex_volume,
    triangulation_volume,
)
from .hull import InsertionOrder, convex_hull
from .linalg import kernel_basis

BRUTE_MAX_POINTS = 16
BRUTE_MAX_DIM = 6


def brute_force_hull(points) -> list[Halfspace]:
    """Facets of conv(points) by trying every d-subset: keep the subset's
    hyperplane iff it does not separate the point set.  Exponential;
    guarded to n <= 16, d <= 6.  Input must be full-dimensional."""
    pts = [point(p) for p in points]
    if not pts:
        raise ValueError("brute_force_hull of an empty point set")
    n = len(pts)
    d = len(pts[0])
    if n > BRUTE_MAX_POINTS or d > BRUTE_MAX_DIM:
        raise ValueError(
            f"brute force refused: n={n}, d={d} beyond guard "
            f"({BRUTE_MAX_POINTS}, {BRUTE_MAX_DIM})"
        )
    span, _ = affine_basis(pts)
    if span != d:
        raise ValueError("brute_force_hull requires full-dimensional input")
    found: dict[Halfspace, None] = {}
    for subset in combinations(range(n), d):
        rows = [(Fraction(1),) + pts[i] for i in subset]
        ker = kernel_basis(rows, d + 1)
        if len(ker) != 1:
            continue
        z = ker[0]
        h = Halfspace(z[0], z[1:])
        below = above = False
        for q in pts:
            v = h.value(q)
            if v < 0:
                below = True
            elif v > 0:
                above = True
            if below and above:
                break
        if below and above:
            continue
        if below:
            h = -h
        found[h.normalized()] = None
    return sorted(found, key=lambda h: h.coefficients())


@dataclass
class IncidenceMatrix:
    """Facet-vertex incidences: one frozenset of column ids per facet,
    with the column coordinates kept for geometric dimension checks."""

    rows: list[frozenset[int]]
    columns: list[Point]

    def __post_init__(self):
        if len(set(self.rows)) != len(self.rows):
            raise ValueError("duplicate facet rows")

    @classmethod
    def from_polytope(cls, poly: Polytope) -> "IncidenceMatrix":
        if poly.vertex_indices is None:
            raise ValueError("polytope has no computed vertex set")
        col_of = {v: c for c, v in enumerate(poly.vertex_indices)}
        rows = [
            frozenset(col_of[i] for i in fv if i in col_of)
            for fv in poly.facet_vertices
        ]
        for r in rows:
            if len(r) < poly.dim:
                raise ValueError("facet incident to fewer than dim vertices")
        return cls(rows=rows, columns=[poly.points[v] for v in poly.vertex_indices])


def enumerate_faces(inc: IncidenceMatrix, dim: int) -> tuple[int, ...]:
    """f-vector (f_0, ..., f_{dim-1}) of the proper faces.

    Every proper face's vertex set is an intersection of facet rows, so
    the rows are closed under pairwise intersection; each face's dimension
    is then computed geometrically from its vertex coordinates.
    """
    if dim == 0:
        return ()
    closed: set[frozenset[int]] = set(inc.rows)
    work = list(closed)
    while work:
        s = work.pop()
        for r in inc.rows:
            t = s & r
            if t and t not in closed:
                closed.add(t)
                work.append(t)
    counts = [0] * dim
    for face in closed:
        fdim, _ = affine_basis([inc.columns[c] for c in sorted(face)])
        if fdim >= dim:
            raise ValueError("face spans the whole polytope")
        counts[fdim] += 1
    return tuple(counts)


@dataclass
class ValidationReport:
    """Outcome of validate_triangulation: collected errors (empty means
    valid), the triangulation's exact volume against the independently
    computed hull volume, and how often each (d-1)-simplex occurs."""

    ok: bool
    volume: Fraction
    expected_volume: Fraction
    ridge_histogram: dict[int, int] = field(default_factory=dict)
    errors: list[str] = field(default_factory=list)


def validate_triangulation(t: Triangulation, p: Polytope) -> ValidationReport:
    """Check that t is a triangulation of p.

    Cells must be positive-volume dim-simplices over p's points; every
    (dim-1)-simplex must be shared by exactly two cells or lie in exactly
    one facet hyperplane; the cell volumes must sum to the hull volume
    computed from an independent (lexicographic) insertion order.  The
    cell-vertices check assumes convex-position input (placing keeps every
    point that was extreme when inserted)."""
    errors: list[str] = []
    pts = [point(q) for q in p.points]
    if len(t.points) != len(pts) or any(
        point(a) != b for a, b in zip(t.points, pts)
    ):
        errors.append("triangulation and polytope point lists differ")
    ambient = len(pts[0]) if pts else 0
    if t.dim == ambient:
        coords = pts
    else:
        coords, _ = project_to_span(pts)

    vertex_set = set(p.vertex_indices) if p.vertex_indices is not None else None
    face_count: dict[tuple[int, ...], int] = {}
    volume = Fraction(0)
    for cell in t.cells:
        if len(cell) != t.dim + 1 or list(cell) != sorted(set(cell)):
            errors.append(f"cell {cell} is not a strictly increasing (dim+1)-tuple")
            continue
        if cell[-1] >= len(pts) or cell[0] < 0:
            errors.append(f"cell {cell} references a missing point")
            continue
        vol = simplex_volume([coords[i] for i in cell])
        if vol == 0:
            errors.append(f"cell {cell} is degenerate")
        volume += vol
        if vertex_set is not None and not vertex_set.issuperset(cell):
            errors.append(f"cell {cell} uses a non-vertex point")
        for k in range(len(cell)):
            face = cell[:k] + cell[k + 1 :]
            face_count[face] = face_count.get(face, 0) + 1

    histogram: dict[int, int] = {}
    for face, count in face_count.items():
        histogram[count] = histogram.get(count, 0) + 1
        if count == 2:
            continue
        if count > 2:
            errors.append(f"face {face} shared by {count} cells")
            continue
        carriers = sum(
            1
            for h in p.facets
            if all(h.value(pts[i]) == 0 for i in face)
        )
        if carriers != 1:
            errors.append(
                f"boundary face {face} lies in {carriers} facet hyperplanes"
            )

    _, lex_tri, _ = convex_hull(pts, InsertionOrder("lexicographic"))
    expected = triangulation_volume(lex_tri)
    if volume != expected:
        errors.append(f"volume {volume} != hull volume {expected}")

    return ValidationReport(
        ok=not errors,
        volume=volume,
        expected_volume=expected,
        ridge_histogram=histogram,
        errors=errors,
    )


def hull_volume(points) -> Fraction:
    """Exact volume of conv(points) for full-dimensional input, via a
    placing triangulation under the lexicographic insertion order."""
    pts = [point(p) for p in points]
    if not pts:
        raise ValueError("hull_volume of an empty point set")
    span, _ = affine_basis(pts)
    if span != len(pts[0]):
        raise ValueError("hull_volume requires full-dimensional input")
    _, tri, _ = convex_hull(pts, InsertionOrder("lexicographic"))
    return triangulation_volume(tri)
