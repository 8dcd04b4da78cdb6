"""Incremental convex hulls by placing points one at a time.

Each new point is placed beyond or beneath the current hull: the facets it
strictly violates are found (one linear scan to hit the first, then a
breadth-first walk over facet adjacency, with a full-scan fallback that
guarantees completeness), the boundary cells of those facets are coned to
the new point, and the fresh boundary simplices are regrouped by their
supporting hyperplanes into facets.  The union of all cones is a placing
triangulation of the final hull; it only ever grows, and together with the
live facet list it gives exact facet/vertex output for rational input.

Points that land inside or on the current hull are absorbed: nothing is
coned, but points lying exactly on facet hyperplanes still join those
facets' incident sets.  All arithmetic is exact.
"""

from __future__ import annotations

import math
import random
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction

from .geometry import (
    Halfspace,
    Point,
    Polytope,
    Triangulation,
    hyperplane_through,
    point,
    project_to_span,
)
from .linalg import gauss_rank, kernel_basis, solve_linear

_ORDER_ALIASES = {"lex": "lexicographic"}
_ORDER_NAMES = ("given", "random", "lexicographic")


class PointOutsideHull(ValueError):
    """Raised with a separating halfspace as witness."""

    def __init__(self, witness: Halfspace):
        super().__init__(f"point lies outside the hull (witness {witness})")
        self.witness = witness


@dataclass(frozen=True)
class InsertionOrder:
    """Point insertion policy: given input order, seeded random shuffle,
    or ascending coordinate-lexicographic order (ties by index)."""

    strategy: str = "given"
    seed: int | None = None

    def __post_init__(self):
        s = _ORDER_ALIASES.get(self.strategy, self.strategy)
        if s not in _ORDER_NAMES:
            raise ValueError(f"unknown insertion order {self.strategy!r}")
        object.__setattr__(self, "strategy", s)

    def permutation(self, points) -> list[int]:
        idx = list(range(len(points)))
        if self.strategy == "lexicographic":
            idx.sort(key=lambda i: tuple(points[i]))
        elif self.strategy == "random":
            random.Random(self.seed).shuffle(idx)
        return idx


def _resolve_order(order, points) -> list[int]:
    if order is None:
        order = InsertionOrder()
    elif isinstance(order, str):
        order = InsertionOrder(order)
    if isinstance(order, InsertionOrder):
        return order.permutation(points)
    perm = [int(i) for i in order]
    if sorted(perm) != list(range(len(points))):
        raise ValueError("explicit order must be a permutation of range(n)")
    return perm


@dataclass
class HullStats:
    """Per-placement counters.

    `steps` holds one (points_processed, live_facets, cells) triple per
    placement, starting with the initial simplex.  `evaluations` counts
    halfspace-at-point evaluations performed by the engine (violation
    searches and incident-set scans).  `star_of_last` is the number of
    maximal cells containing the point placed last, filled by convex_hull.
    """

    steps: list[tuple[int, int, int]] = field(default_factory=list)
    evaluations: int = 0
    cells_created: int = 0
    star_of_last: int = 0


class Facet:
    """A live facet: its halfspace, the points incident to its hyperplane,
    and the boundary (d-1)-simplices currently tiling it."""

    __slots__ = ("halfspace", "vertices", "cells", "alive", "seq")

    def __init__(self, halfspace: Halfspace, seq: int):
        self.halfspace = halfspace
        self.vertices: set[int] = set()
        self.cells: set[tuple[int, ...]] = set()
        self.alive = True
        self.seq = seq

    def __repr__(self):
        state = "live" if self.alive else "dead"
        return f"<Facet {self.halfspace.coefficients()} {state}>"


class HullState:
    """Single-owner mutable state of one placing run.

    Points accumulate in insertion order; cells and facet incidences use
    these local indices.  `source` maps each local index back to the
    caller's index.  `pending` queues points deferred during simplex
    initialization plus the not-yet-placed remainder.
    """

    def __init__(self, dim: int):
        if dim < 1:
            raise ValueError("hull engine needs ambient dimension >= 1")
        self.dim = dim
        self.points: list[Point] = []
        self.source: list[int] = []
        self.pending: list[tuple[Point, int]] = []
        self.live: dict[Halfspace, Facet] = {}
        self.all_facets: list[Facet] = []
        self.cells: list[tuple[int, ...]] = []
        self.boundary: dict[tuple[int, ...], Facet] = {}
        self.ridges: dict[tuple[int, ...], list[tuple[int, ...]]] = {}
        self.anchor: Point | None = None
        self.stats = HullStats()
        self._int_rows: list[tuple[int, ...]] = []
        self._seq = 0

    def _next_seq(self) -> int:
        self._seq += 1
        return self._seq

    def _admit(self, p: Point, source: int | None) -> int:
        idx = len(self.points)
        self.points.append(p)
        self.source.append(idx if source is None else source)
        scale = math.lcm(*(c.denominator for c in p)) if p else 1
        self._int_rows.append((scale,) + tuple(int(c * scale) for c in p))
        return idx

    def _record_step(self):
        self.stats.steps.append((len(self.points), len(self.live), len(self.cells)))


def _ridge_add(state: HullState, cell: tuple[int, ...]):
    for k in range(len(cell)):
        r = cell[:k] + cell[k + 1 :]
        state.ridges.setdefault(r, []).append(cell)


def _ridge_remove(state: HullState, cell: tuple[int, ...]):
    for k in range(len(cell)):
        r = cell[:k] + cell[k + 1 :]
        entry = state.ridges[r]
        entry.remove(cell)
        if not entry:
            del state.ridges[r]


def _neighbors(state: HullState, facet: Facet) -> list[Facet]:
    """Facets whose boundary cells share a (d-2)-face with this one."""
    out = []
    seen = {facet.seq}
    for cell in facet.cells:
        for k in range(len(cell)):
            r = cell[:k] + cell[k + 1 :]
            for other in state.ridges.get(r, ()):
                if other == cell:
                    continue
                g = state.boundary.get(other)
                if g is not None and g.seq not in seen:
                    seen.add(g.seq)
                    out.append(g)
    return out


def _supporting_hyperplane(state: HullState, face: tuple[int, ...]) -> Halfspace:
    """Normalized hyperplane through a boundary (d-1)-simplex, oriented
    positive at the interior anchor."""
    rows = [state._int_rows[i] for i in face]
    ker = kernel_basis(rows, state.dim + 1)
    if len(ker) != 1:
        raise RuntimeError("boundary simplex is affinely degenerate")
    z = ker[0]
    h = Halfspace(z[0], z[1:])
    v = h.value(state.anchor)
    if v == 0:
        raise RuntimeError("interior anchor lies on a boundary hyperplane")
    if v < 0:
        h = -h
    return h.normalized()


def initial_simplex(points, order=None) -> HullState:
    """Start a placing run: admit the first d+1 affinely independent
    points of the insertion sequence as a simplex.

    Points skipped as affinely dependent during the scan are re-queued
    (ahead of the untouched remainder) for later placement via
    place_point.  Raises if the input does not span the ambient space;
    project_to_span first for degenerate inputs.
    """
    pts = [point(p) for p in points]
    if not pts:
        raise ValueError("initial_simplex of an empty point set")
    d = len(pts[0])
    if len(pts) < d + 1:
        raise ValueError(f"need at least {d + 1} points in dimension {d}")
    perm = _resolve_order(order, pts)

    chosen: list[int] = []
    deferred: list[int] = []
    reduced: list[tuple[int, list[Fraction]]] = []
    base = None
    last_pos = len(perm) - 1
    for pos, i in enumerate(perm):
        if not chosen:
            chosen.append(i)
            base = pts[i]
        else:
            v = [x - b for x, b in zip(pts[i], base, strict=True)]
            for pc, row in reduced:
                if v[pc]:
                    f = v[pc] / row[pc]
                    for j in range(pc, d):
                        if row[j]:
                            v[j] -= f * row[j]
            pivot = next((j for j, x in enumerate(v) if x), None)
            if pivot is None:
                deferred.append(i)
            else:
                reduced.append((pivot, v))
                reduced.sort(key=lambda r: r[0])
                chosen.append(i)
        if len(chosen) == d + 1:
            last_pos = pos
            break
    if len(chosen) < d + 1:
        raise ValueError(
            "points do not span the ambient space; project to their span first"
        )

    state = HullState(d)
    for i in chosen:
        state._admit(pts[i], i)
    state.pending = [(pts[i], i) for i in deferred + perm[last_pos + 1 :]]
    state.anchor = tuple(
        sum(p[j] for p in state.points) / (d + 1) for j in range(d)
    )

    cell = tuple(range(d + 1))
    state.cells.append(cell)
    state.stats.cells_created = 1
    for k in range(d + 1):
        face = cell[:k] + cell[k + 1 :]
        h = hyperplane_through([state.points[i] for i in face], state.anchor)
        facet = Facet(h, state._next_seq())
        facet.vertices = set(face)
        facet.cells.add(face)
        state.live[h] = facet
        state.all_facets.append(facet)
        state.boundary[face] = facet
        _ridge_add(state, face)
    state._record_step()
    return state


def _find_violated(state: HullState, x: Point):
    """Strictly violated facets plus the evaluation memo for this point.

    Scans until the first violated facet, walks the facet adjacency graph
    breadth-first from there, then sweeps the remaining facets so the
    result is complete even if the violated region is disconnected in the
    adjacency graph.  Each live facet is evaluated at most once.
    """
    values: dict[int, Fraction] = {}

    def val(f: Facet) -> Fraction:
        v = values.get(f.seq)
        if v is None:
            v = f.halfspace.value(x)
            values[f.seq] = v
            state.stats.evaluations += 1
        return v

    live = list(state.live.values())
    violated: dict[int, Facet] = {}
    seed = next((f for f in live if val(f) < 0), None)
    if seed is not None:
        violated[seed.seq] = seed
        queue = deque([seed])
        visited = {seed.seq}
        while queue:
            f = queue.popleft()
            for g in _neighbors(state, f):
                if g.seq in visited:
                    continue
                visited.add(g.seq)
                if val(g) < 0:
                    violated[g.seq] = g
                    queue.append(g)
        for f in live:
            if f.seq not in violated and val(f) < 0:
                violated[f.seq] = f
    ordered = [violated[s] for s in sorted(violated)]
    return ordered, values


def find_violated(state: HullState, x) -> list[Facet]:
    """Facets of the current hull strictly violated by x, in creation
    order.  Empty when x lies in the hull or on its boundary."""
    ordered, _ = _find_violated(state, point(x))
    return ordered


def place_point(state: HullState, x, source: int | None = None) -> HullState:
    """Place one point: absorb it, or cone the violated boundary region
    to it and regroup the new boundary simplices into facets."""
    x = point(x)
    if len(x) != state.dim:
        raise ValueError(f"point dimension {len(x)} != ambient {state.dim}")
    violated, values = _find_violated(state, x)
    idx = state._admit(x, source)

    if not violated:
        for f in state.live.values():
            if values[f.seq] == 0:
                f.vertices.add(idx)
        state.stats.star_of_last = 0
        state._record_step()
        return state

    new_bases: list[tuple[int, ...]] = []
    for f in violated:
        for base in sorted(f.cells):
            state.cells.append(base + (idx,))
            new_bases.append(base)
    state.stats.cells_created += len(new_bases)
    state.stats.star_of_last = len(new_bases)

    face_count: dict[tuple[int, ...], int] = {}
    for base in new_bases:
        for k in range(len(base)):
            face = base[:k] + base[k + 1 :] + (idx,)
            face_count[face] = face_count.get(face, 0) + 1
    if any(c > 2 for c in face_count.values()):
        raise RuntimeError("boundary bookkeeping corrupted")

    for f in violated:
        f.alive = False
        del state.live[f.halfspace]
        for cell in f.cells:
            del state.boundary[cell]
            _ridge_remove(state, cell)

    groups: dict[Halfspace, list[tuple[int, ...]]] = {}
    for face, count in face_count.items():
        if count == 1:
            groups.setdefault(_supporting_hyperplane(state, face), []).append(face)

    for h, faces in groups.items():
        facet = state.live.get(h)
        if facet is None:
            facet = Facet(h, state._next_seq())
            state.all_facets.append(facet)
            state.live[h] = facet
            for j, p in enumerate(state.points):
                state.stats.evaluations += 1
                if h.value(p) == 0:
                    facet.vertices.add(j)
        for face in faces:
            facet.cells.add(face)
            state.boundary[face] = facet
            _ridge_add(state, face)

    for f in state.live.values():
        v = values.get(f.seq)
        if v is not None and v == 0:
            f.vertices.add(idx)

    state._record_step()
    return state


def check_invariants(state: HullState):
    """Exhaustive consistency check of a hull state (test aid, O(m*n*d)).

    Verifies boundary soundness (every boundary cell's hyperplane vanishes
    on the cell and is nonnegative on every inserted point), incidence
    exactness, ridge counts, and the facet/cell count relation.
    """
    n, m, t = state.stats.steps[-1]
    assert n == len(state.points) and m == len(state.live) and t == len(state.cells)
    assert m <= (state.dim + 1) * t, "more live facets than cell faces"
    for cell, facet in state.boundary.items():
        assert facet.alive and cell in facet.cells
        h = facet.halfspace
        for i in cell:
            assert h.value(state.points[i]) == 0, "boundary cell off its hyperplane"
    for facet in state.live.values():
        assert facet.cells, "live facet with no boundary cells"
        expected = set()
        for j, p in enumerate(state.points):
            v = facet.halfspace.value(p)
            assert v >= 0, "inserted point strictly violates a live facet"
            if v == 0:
                expected.add(j)
        assert facet.vertices == expected, "incident set out of date"
    for ridge, cells in state.ridges.items():
        assert 1 <= len(cells) <= 2, "ridge shared by more than two boundary cells"


def _vertex_indices(facet_halfspaces, facet_vertices, pts, dim) -> tuple[int, ...]:
    """A point is a vertex iff it lies on at least dim facets whose
    normals span the (projected) ambient space.  Duplicate coordinates
    report only their first index, so the result is an irredundant
    V-description."""
    incident: dict[int, list] = {}
    for h, verts in zip(facet_halfspaces, facet_vertices, strict=True):
        for j in verts:
            incident.setdefault(j, []).append(h.normal)
    out = []
    seen: set[Point] = set()
    for j, p in enumerate(pts):
        if p in seen:
            continue
        normals = incident.get(j, ())
        if len(normals) >= dim and gauss_rank(normals)[0] == dim:
            out.append(j)
            seen.add(p)
    return tuple(out)


def _point_hull(pts, emb, perm) -> tuple[Polytope, Triangulation, HullStats]:
    """Zero-dimensional hull: every input point coincides."""
    stats = HullStats(steps=[(len(pts), 0, 1)], cells_created=1)
    first, last = perm[0], perm[-1]
    stats.star_of_last = 1 if last == first else 0
    poly = Polytope(
        points=pts,
        dim=0,
        affine_hull=list(emb.equations),
        vertex_indices=(0,),
    )
    tri = Triangulation(points=pts, cells=[(first,)], dim=0)
    return poly, tri, stats


def convex_hull(points, order=None) -> tuple[Polytope, Triangulation, HullStats]:
    """Exact convex hull of rational points by placing.

    Degenerate inputs are projected to their affine span first and the
    facets lifted back, with the span recorded as affine_hull equations.
    Returns (polytope, placing triangulation, stats).  The facet list is
    sorted canonically, so it is independent of the insertion order; the
    triangulation does depend on the order.
    """
    pts = [point(p) for p in points]
    if not pts:
        raise ValueError("convex hull of an empty point set")
    projected, emb = project_to_span(pts)
    perm = _resolve_order(order, pts)
    if emb.dim == 0:
        return _point_hull(pts, emb, perm)

    state = initial_simplex(projected, perm)
    while state.pending:
        p, src = state.pending.pop(0)
        place_point(state, p, src)

    last = len(state.points) - 1
    state.stats.star_of_last = sum(1 for c in state.cells if last in c)

    facet_list = sorted(
        state.live.values(), key=lambda f: f.halfspace.coefficients()
    )
    src = state.source
    proj_halfspaces = [f.halfspace for f in facet_list]
    facet_vertices = [
        frozenset(src[i] for i in f.vertices) for f in facet_list
    ]
    vertex_indices = _vertex_indices(
        proj_halfspaces, facet_vertices, pts, emb.dim
    )
    poly = Polytope(
        points=pts,
        dim=emb.dim,
        facets=[emb.lift_halfspace(h) for h in proj_halfspaces],
        facet_vertices=facet_vertices,
        affine_hull=list(emb.equations),
        vertex_indices=vertex_indices,
    )
    cells = [tuple(sorted(src[i] for i in cell)) for cell in state.cells]
    tri = Triangulation(points=pts, cells=cells, dim=emb.dim)
    return poly, tri, state.stats


def extract_facets(t: Triangulation, points) -> list[Halfspace]:
    """Read the facets of conv(points) off any triangulation of it.

    A (d-1)-face of a maximal cell supports a facet iff its hyperplane
    does not separate the point set; surviving hyperplanes are oriented
    inward, normalized and deduplicated.  This route never consults the
    incremental facet bookkeeping, so it cross-checks the engine.
    """
    pts = [point(p) for p in points]
    if not pts:
        raise ValueError("extract_facets of an empty point set")
    ambient = len(pts[0])
    emb = None
    if t.dim < ambient:
        use, emb = project_to_span(pts)
        if emb.dim != t.dim:
            raise ValueError("triangulation dimension does not match the span")
    else:
        use = pts

    faces = set()
    for cell in t.cells:
        for k in range(len(cell)):
            faces.add(cell[:k] + cell[k + 1 :])

    found: dict[Halfspace, None] = {}
    for face in sorted(faces):
        rows = [(Fraction(1),) + use[i] for i in face]
        ker = kernel_basis(rows, t.dim + 1)
        if len(ker) != 1:
            raise ValueError("degenerate (d-1)-face in triangulation")
        z = ker[0]
        h = Halfspace(z[0], z[1:])
        below = above = False
        for q in use:
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

    result = sorted(found, key=lambda h: h.coefficients())
    if emb is not None:
        result = [emb.lift_halfspace(h) for h in result]
    return result


def caratheodory(points, p):
    """Write p as a convex combination of affinely independent input
    points: returns (indices, barycentric coefficients), both of length
    hull dimension + 1, exact.

    The combination comes from the placing-triangulation cell containing
    p.  Raises PointOutsideHull with a separating halfspace if p is not in
    the hull.
    """
    pts = [point(q) for q in points]
    target = point(p)
    poly, tri, _ = convex_hull(pts)
    for eq in poly.affine_hull:
        v = eq.value(target)
        if v != 0:
            raise PointOutsideHull(eq if v < 0 else -eq)
    for h in poly.facets:
        if h.value(target) < 0:
            raise PointOutsideHull(h)

    if poly.dim == 0:
        return [tri.cells[0][0]], [Fraction(1)]

    projected, emb = project_to_span(pts)
    q = emb.project_point(target)
    ones = [Fraction(1)] * (poly.dim + 1)
    for cell in tri.cells:
        a = [ones] + [
            [projected[i][r] for i in cell] for r in range(poly.dim)
        ]
        lam = solve_linear(a, (Fraction(1),) + q)
        if all(c >= 0 for c in lam):
            return list(cell), list(lam)
    raise RuntimeError("interior point not located in any cell")
