"""Exact polyhedral geometry primitives.

Points are tuples of Fractions.  A halfspace with offset a0 and normal a
is the set {x : a0 + a.x >= 0}; the side containing the interior of a
polytope always evaluates positive.  An oriented hyperplane is identified
with its boundary halfspace, and two halfspaces describe the same oriented
hyperplane iff they agree after content normalization (coefficients scaled
to coprime integers; the sign is fixed by the orientation and never
flipped).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .linalg import det, gauss_rank, kernel_basis

Point = tuple[Fraction, ...]


def point(coords) -> Point:
    """Coerce a coordinate sequence to a Point (tuple of Fractions)."""
    return tuple(Fraction(c) for c in coords)


def _content_normalized(coeffs):
    """Scale a rational vector by the positive factor that makes its
    entries coprime integers.  The sign pattern is preserved."""
    fr = [Fraction(c) for c in coeffs]
    scale = math.lcm(*(f.denominator for f in fr))
    ints = [f.numerator * (scale // f.denominator) for f in fr]
    g = math.gcd(*ints)
    if g > 1:
        ints = [i // g for i in ints]
    return tuple(Fraction(i) for i in ints)


@dataclass(frozen=True)
class Halfspace:
    """Closed halfspace {x : offset + normal.x >= 0}."""

    offset: Fraction
    normal: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "offset", Fraction(self.offset))
        object.__setattr__(self, "normal", tuple(Fraction(c) for c in self.normal))
        if not any(self.normal):
            raise ValueError("halfspace normal must be nonzero")

    @property
    def dim(self) -> int:
        return len(self.normal)

    def value(self, p) -> Fraction:
        """offset + normal.p; positive inside, zero on the hyperplane."""
        s = self.offset
        for a, x in zip(self.normal, p, strict=True):
            if a:
                s += a * x
        return s

    def __neg__(self) -> "Halfspace":
        return Halfspace(-self.offset, tuple(-a for a in self.normal))

    def normalized(self) -> "Halfspace":
        """Canonical representative: coprime integer coefficients, same
        orientation."""
        c = _content_normalized((self.offset,) + self.normal)
        return Halfspace(c[0], c[1:])

    def coefficients(self) -> tuple[Fraction, ...]:
        return (self.offset,) + self.normal


def evaluate(h: Halfspace, p) -> Fraction:
    """Evaluate halfspace h at point p (positive strictly inside)."""
    return h.value(p)


def canonical_equation(h: Halfspace) -> Halfspace:
    """Canonical form for a hyperplane used as an equation (orientation
    carries no meaning): content-normalized with the first nonzero
    coefficient positive."""
    n = h.normalized()
    for c in n.coefficients():
        if c:
            return n if c > 0 else -n
    raise ValueError("zero equation")


def affine_basis(points) -> tuple[int, list[int]]:
    """Affine dimension of a point set and indices of a maximal affinely
    independent subset (greedy in input order, always starting at 0).

    Returns (dim, indices) with len(indices) == dim + 1.
    """
    if not points:
        raise ValueError("affine_basis of an empty point set")
    base = points[0]
    indices = [0]
    reduced: list[tuple[int, list[Fraction]]] = []
    for i in range(1, len(points)):
        v = [Fraction(x) - b for x, b in zip(points[i], base, strict=True)]
        for pc, row in reduced:
            if v[pc]:
                f = v[pc] / row[pc]
                for j in range(pc, len(v)):
                    if row[j]:
                        v[j] -= f * row[j]
        pivot = next((j for j, x in enumerate(v) if x), None)
        if pivot is not None:
            reduced.append((pivot, v))
            reduced.sort(key=lambda r: r[0])
            indices.append(i)
    return len(indices) - 1, indices


@dataclass(frozen=True)
class AffineEmbedding:
    """How a point set's affine span sits inside ambient space.

    Projection just selects the `coords` coordinates (injective on the
    span), so halfspace evaluations are preserved verbatim: lifting a
    halfspace scatters its normal back into the selected positions.
    `equations` cut out the span itself.
    """

    ambient_dim: int
    dim: int
    coords: tuple[int, ...]
    equations: tuple[Halfspace, ...]

    @property
    def is_identity(self) -> bool:
        return self.dim == self.ambient_dim

    def project_point(self, p) -> Point:
        return tuple(Fraction(p[c]) for c in self.coords)

    def lift_halfspace(self, h: Halfspace) -> Halfspace:
        if self.is_identity:
            return h
        normal = [Fraction(0)] * self.ambient_dim
        for c, a in zip(self.coords, h.normal, strict=True):
            normal[c] = a
        return Halfspace(h.offset, tuple(normal))


def project_to_span(points) -> tuple[list[Point], AffineEmbedding]:
    """Project points onto their affine span, dropping redundant
    coordinates.

    The selected coordinates are the pivot columns of the direction
    matrix of a greedy affine basis, so the choice depends only on the
    input list (not on any insertion order).  Evaluation signs of lifted
    halfspaces agree with the projected ones on every input point.
    """
    dim, idxs = affine_basis(points)
    ambient = len(points[0])
    if dim == ambient:
        emb = AffineEmbedding(ambient, dim, tuple(range(ambient)), ())
        return [point(p) for p in points], emb
    base = points[idxs[0]]
    directions = [
        [Fraction(x) - Fraction(b) for x, b in zip(points[i], base, strict=True)]
        for i in idxs[1:]
    ]
    _, piv = gauss_rank(directions)
    coords = tuple(piv)
    rows = [(Fraction(1),) + point(points[i]) for i in idxs]
    equations = tuple(
        canonical_equation(Halfspace(z[0], z[1:]))
        for z in kernel_basis(rows, ambient + 1)
    )
    emb = AffineEmbedding(ambient, dim, coords, equations)
    return [emb.project_point(p) for p in points], emb


def hyperplane_through(pts, inside) -> Halfspace:
    """Oriented hyperplane through d affinely independent points in
    dimension d, normalized, positive at `inside`.

    Raises if the points are affinely dependent or `inside` lies on the
    hyperplane (orientation undefined).
    """
    if not pts:
        raise ValueError("hyperplane_through needs d points")
    d = len(pts[0])
    if len(pts) != d:
        raise ValueError(f"expected {d} points in dimension {d}, got {len(pts)}")
    rows = [(Fraction(1),) + point(p) for p in pts]
    ker = kernel_basis(rows, d + 1)
    if len(ker) != 1:
        raise ValueError("points are affinely dependent")
    z = ker[0]
    h = Halfspace(z[0], z[1:])
    v = h.value(inside)
    if v == 0:
        raise ValueError("orientation point lies on the hyperplane")
    if v < 0:
        h = -h
    return h.normalized()


def simplex_volume(pts) -> Fraction:
    """Euclidean volume of a d-simplex given as d+1 points in dimension d:
    |det of edge matrix| / d!."""
    d = len(pts) - 1
    if d < 0:
        raise ValueError("simplex needs at least one point")
    if any(len(p) != d for p in pts):
        raise ValueError(f"{d}-simplex needs points of dimension {d}")
    base = pts[0]
    rows = [
        [Fraction(x) - Fraction(b) for x, b in zip(p, base, strict=True)]
        for p in pts[1:]
    ]
    return abs(det(rows)) / math.factorial(d)


@dataclass
class Triangulation:
    """Simplicial complex of maximal cells over a shared point list.

    Cells are strictly increasing tuples of point indices, each of length
    dim + 1.  The points keep their ambient coordinates even when dim is
    smaller than the ambient dimension.
    """

    points: list[Point]
    cells: list[tuple[int, ...]]
    dim: int


def triangulation_volume(t: Triangulation) -> Fraction:
    """Total volume of a triangulation's cells, exact.

    Full-dimensional cells are measured directly; lower-dimensional ones
    are measured in the canonical projected coordinates of
    project_to_span, which depend only on the point list.
    """
    if not t.cells:
        return Fraction(0)
    ambient = len(t.points[0]) if t.points else 0
    if t.dim == ambient:
        pts = [point(p) for p in t.points]
    else:
        pts, _ = project_to_span(t.points)
    return sum(simplex_volume([pts[i] for i in cell]) for cell in t.cells)


@dataclass
class Polytope:
    """Convex polytope: points with an optional exact facet description.

    `facets[i]` is a halfspace whose hyperplane supports the polytope;
    `facet_vertices[i]` lists the indices of all points lying on it.
    `affine_hull` equations cut out the span when dim < ambient dimension.
    `vertex_indices` is filled when the extreme points are known.
    """

    points: list[Point]
    dim: int
    facets: list[Halfspace] = field(default_factory=list)
    facet_vertices: list[frozenset[int]] = field(default_factory=list)
    affine_hull: list[Halfspace] = field(default_factory=list)
    vertex_indices: tuple[int, ...] | None = None

    @property
    def ambient_dim(self) -> int:
        if self.points:
            return len(self.points[0])
        if self.facets:
            return self.facets[0].dim
        raise ValueError("empty polytope has no ambient dimension")

    @property
    def n_vertices(self) -> int:
        if self.vertex_indices is None:
            raise ValueError("vertex set not computed")
        return len(self.vertex_indices)

    @property
    def n_facets(self) -> int:
        return len(self.facets)

    def contains(self, p) -> bool:
        """Exact membership test against the H-description."""
        return all(eq.value(p) == 0 for eq in self.affine_hull) and all(
            f.value(p) >= 0 for f in self.facets
        )


def polar(p: Polytope, interior) -> list[Point]:
    """Polar point set of a full-dimensional polytope from its facets.

    After translating `interior` to the origin, the facet
    a0 + a.x >= 0 (whose translated offset a0 + a.interior is positive)
    maps to the point a / (a0 + a.interior).  One point per facet, in
    facet order.  Raises if the polytope is not full-dimensional or
    `interior` is not strictly interior.
    """
    if not p.facets:
        raise ValueError("polar requires an H-representation")
    d = p.facets[0].dim
    if p.points:
        fdim, _ = affine_basis(p.points)
        if fdim != d:
            raise ValueError("polar requires a full-dimensional polytope")
    else:
        rank, _ = gauss_rank([f.normal for f in p.facets])
        if rank != d:
            raise ValueError("facet normals do not span the ambient space")
    c = point(interior)
    out = []
    for f in p.facets:
        v = f.value(c)
        if v <= 0:
            raise ValueError(
                f"interior point violates facet with offset {f.offset}: value {v}"
            )
        out.append(tuple(a / v for a in f.normal))
    return out
