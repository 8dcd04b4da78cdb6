"""Benchmark polytope families with exact rational data.

Every generator emits a V-representation; the facet list is filled in
whenever it is analytically known.  The dwarfed families list their
dwarfing halfspace last.  Interior points (needed by the polar map) are
analytic for all families that have an H-description.

rand_sphere draws Gaussian coordinates from random.Random.normalvariate
(Kinderman-Monahan ratio of uniforms, no Box-Muller), normalizes in
floating point, then rounds to 6 decimals, so coordinates are exact
rationals with denominator dividing 10**6.  Same seed, same points.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product

from .geometry import Halfspace, Point, Polytope, canonical_equation, point
from .hull import convex_hull
from .geometry import polar
from .linalg import LinAlgError, solve_linear

FAMILIES = (
    "cube",
    "cross",
    "dwarfed-cube",
    "simplex-product",
    "polygon-product",
    "dwarfed-polygon-product",
    "cyclic",
    "rand-sphere",
)


@dataclass(frozen=True)
class GeneratorSpec:
    """Which family to build and with what parameters.

    d: ambient dimension (most families); s: gons per polygon factor;
    n: point count (cyclic, rand-sphere); a, b: simplex factor dimensions;
    seed: PRNG seed (rand-sphere only).
    """

    family: str
    d: int | None = None
    s: int | None = None
    n: int | None = None
    a: int | None = None
    b: int | None = None
    seed: int = 0

    def label(self) -> str:
        parts = []
        for name in ("d", "s", "n", "a", "b"):
            v = getattr(self, name)
            if v is not None:
                parts.append(f"{name}={v}")
        if self.family == "rand-sphere":
            parts.append(f"seed={self.seed}")
        return f"{self.family}({','.join(parts)})"

    def param(self) -> int | None:
        """The varying size parameter (the s/n column of bench CSVs)."""
        if self.s is not None:
            return self.s
        return self.n


def _unit(d: int, i: int, value=1) -> Point:
    coords = [Fraction(0)] * d
    coords[i] = Fraction(value)
    return tuple(coords)


def _fill_incidences(poly: Polytope) -> Polytope:
    poly.facet_vertices = [
        frozenset(j for j, p in enumerate(poly.points) if h.value(p) == 0)
        for h in poly.facets
    ]
    return poly


def gen_cube(d: int) -> Polytope:
    """Unit cube [0,1]^d: 2^d vertices, 2d facets."""
    if d < 1:
        raise ValueError("cube needs d >= 1")
    pts = [point(bits) for bits in product((0, 1), repeat=d)]
    facets = [Halfspace(0, _unit(d, i)) for i in range(d)]
    facets += [Halfspace(1, _unit(d, i, -1)) for i in range(d)]
    poly = Polytope(
        points=pts, dim=d, facets=facets, vertex_indices=tuple(range(len(pts)))
    )
    return _fill_incidences(poly)


def gen_cross(d: int) -> Polytope:
    """Cross polytope conv{+-e_i}: 2d vertices, 2^d facets."""
    if d < 1:
        raise ValueError("cross needs d >= 1")
    pts = [_unit(d, i) for i in range(d)] + [_unit(d, i, -1) for i in range(d)]
    facets = [
        Halfspace(1, tuple(-Fraction(e) for e in signs))
        for signs in product((1, -1), repeat=d)
    ]
    poly = Polytope(
        points=pts, dim=d, facets=facets, vertex_indices=tuple(range(len(pts)))
    )
    return _fill_incidences(poly)


def gen_dwarfed_cube(d: int) -> Polytope:
    """Unit cube cut by sum(x) <= 3/2: d^2+1 vertices, 2d+1 facets.

    Vertices: the origin, the unit vectors, and e_i + e_j/2 for i != j.
    The dwarfing halfspace is listed last.
    """
    if d < 2:
        raise ValueError("dwarfed cube needs d >= 2")
    pts = [point([0] * d)]
    pts += [_unit(d, i) for i in range(d)]
    for i in range(d):
        for j in range(d):
            if i != j:
                coords = [Fraction(0)] * d
                coords[i] = Fraction(1)
                coords[j] = Fraction(1, 2)
                pts.append(tuple(coords))
    facets = [Halfspace(0, _unit(d, i)) for i in range(d)]
    facets += [Halfspace(1, _unit(d, i, -1)) for i in range(d)]
    facets.append(Halfspace(Fraction(3, 2), tuple([Fraction(-1)] * d)))
    poly = Polytope(
        points=pts, dim=d, facets=facets, vertex_indices=tuple(range(len(pts)))
    )
    return _fill_incidences(poly)


def gen_simplex_product(a: int, b: int) -> Polytope:
    """Product of standard simplices: (a+1)(b+1) vertices in R^{a+b+2},
    spanning an (a+b)-dimensional flat."""
    if a < 1 or b < 1:
        raise ValueError("simplex product needs a, b >= 1")
    pts = [
        _unit(a + 1, i) + _unit(b + 1, j)
        for i in range(a + 1)
        for j in range(b + 1)
    ]
    d = a + b + 2
    eq1 = canonical_equation(Halfspace(-1, tuple([1] * (a + 1) + [0] * (b + 1))))
    eq2 = canonical_equation(Halfspace(-1, tuple([0] * (a + 1) + [1] * (b + 1))))
    return Polytope(
        points=pts,
        dim=a + b,
        affine_hull=[eq1, eq2],
        vertex_indices=tuple(range(len(pts))),
    )


def _sgon(s: int) -> tuple[list[Halfspace], list[Point]]:
    """The planar s-gon factor: s edge inequalities and its s vertices.

    Edges: y >= 0; s*x - y >= 0; (2i+1)*x + y <= (2i+1)(s+i) - i^2 + s^2
    for i = 0..s-4; (2s-3)*x + y <= 2s(2s-3).  Vertices are recovered as
    the feasible pairwise edge-line intersections.
    """
    hs = [Halfspace(0, (Fraction(0), Fraction(1))), Halfspace(0, (Fraction(s), Fraction(-1)))]
    for i in range(s - 3):
        c = 2 * i + 1
        hs.append(Halfspace(c * (s + i) - i * i + s * s, (Fraction(-c), Fraction(-1))))
    hs.append(Halfspace(2 * s * (2 * s - 3), (Fraction(-(2 * s - 3)), Fraction(-1))))

    verts = set()
    for h1, h2 in combinations(hs, 2):
        try:
            v = solve_linear([h1.normal, h2.normal], [-h1.offset, -h2.offset])
        except LinAlgError:
            continue
        if all(h.value(v) >= 0 for h in hs):
            verts.add(v)
    if len(verts) != s:
        raise RuntimeError(f"s-gon construction produced {len(verts)} vertices")
    return hs, sorted(verts)


def gen_polygon_product(d: int, s: int) -> Polytope:
    """Product of d/2 copies of the s-gon: s^(d/2) vertices, d*s/2 facets.

    Coordinates interleave as (x_1, y_1, ..., x_delta, y_delta).
    """
    if d < 2 or d % 2:
        raise ValueError("polygon product needs even d >= 2")
    if s < 3:
        raise ValueError("polygon product needs s >= 3")
    delta = d // 2
    factor_hs, factor_verts = _sgon(s)
    pts = [
        tuple(c for v in combo for c in v)
        for combo in product(factor_verts, repeat=delta)
    ]
    facets = []
    for k in range(delta):
        for h in factor_hs:
            normal = [Fraction(0)] * d
            normal[2 * k] = h.normal[0]
            normal[2 * k + 1] = h.normal[1]
            facets.append(Halfspace(h.offset, tuple(normal)))
    poly = Polytope(
        points=pts, dim=d, facets=facets, vertex_indices=tuple(range(len(pts)))
    )
    return _fill_incidences(poly)


def _dwarfing_cut(d: int, s: int) -> Halfspace:
    """sum of the x-coordinates <= 2s-1 (x-coordinates only)."""
    normal = [Fraction(0)] * d
    for k in range(0, d, 2):
        normal[k] = Fraction(-1)
    return Halfspace(2 * s - 1, tuple(normal))


def gen_dwarfed_polygon_product(d: int, s: int) -> Polytope:
    """Polygon product cut by the dwarfing halfspace (listed last).

    The vertex set is computed exactly through polarity: polar points of
    the H-description about the analytic interior point, hull of those,
    polar back.  Facets: d*s/2 + 1.
    """
    base = gen_polygon_product(d, s)
    facets = base.facets + [_dwarfing_cut(d, s)]
    interior = analytic_interior(GeneratorSpec("dwarfed-polygon-product", d=d, s=s))
    shell = Polytope(points=[], dim=d, facets=facets)
    polar_pts = polar(shell, interior)
    polar_hull, _, _ = convex_hull(polar_pts)
    origin = tuple([Fraction(0)] * d)
    back = polar(polar_hull, origin)
    verts = sorted(tuple(ci + bi for ci, bi in zip(interior, b)) for b in back)
    poly = Polytope(
        points=verts, dim=d, facets=facets, vertex_indices=tuple(range(len(verts)))
    )
    return _fill_incidences(poly)


def gen_cyclic(d: int, n: int) -> Polytope:
    """Cyclic polytope: n points (t, t^2, ..., t^d) for t = 1..n."""
    if d < 2:
        raise ValueError("cyclic needs d >= 2")
    if n < d + 1:
        raise ValueError("cyclic needs n >= d+1")
    pts = [tuple(Fraction(t) ** k for k in range(1, d + 1)) for t in range(1, n + 1)]
    return Polytope(points=pts, dim=d, vertex_indices=tuple(range(n)))


def gen_rand_sphere(d: int, n: int, seed: int = 0) -> Polytope:
    """n pairwise distinct rational points near the unit sphere.

    Gaussian direction, float normalization, each coordinate rounded to 6
    decimals after normalizing; collisions and zero vectors are resampled.
    The vertex set is left for the hull engine to determine.
    """
    if d < 2:
        raise ValueError("rand-sphere needs d >= 2")
    if n < d + 1:
        raise ValueError("rand-sphere needs n >= d+1")
    rng = random.Random(seed)
    scale = 10**6
    pts: list[Point] = []
    seen = set()
    while len(pts) < n:
        v = [rng.normalvariate(0.0, 1.0) for _ in range(d)]
        norm = math.sqrt(sum(x * x for x in v))
        if norm == 0.0:
            continue
        q = tuple(Fraction(round(x / norm * scale), scale) for x in v)
        if not any(q) or q in seen:
            continue
        seen.add(q)
        pts.append(q)
    return Polytope(points=pts, dim=d)


def generate(spec: GeneratorSpec) -> Polytope:
    """Build the polytope described by a GeneratorSpec."""
    fam = spec.family
    if fam == "cube":
        return gen_cube(_req(spec, "d"))
    if fam == "cross":
        return gen_cross(_req(spec, "d"))
    if fam == "dwarfed-cube":
        return gen_dwarfed_cube(_req(spec, "d"))
    if fam == "simplex-product":
        return gen_simplex_product(_req(spec, "a"), _req(spec, "b"))
    if fam == "polygon-product":
        return gen_polygon_product(_req(spec, "d"), _req(spec, "s"))
    if fam == "dwarfed-polygon-product":
        return gen_dwarfed_polygon_product(_req(spec, "d"), _req(spec, "s"))
    if fam == "cyclic":
        return gen_cyclic(_req(spec, "d"), _req(spec, "n"))
    if fam == "rand-sphere":
        return gen_rand_sphere(_req(spec, "d"), _req(spec, "n"), spec.seed)
    raise ValueError(f"unknown family {fam!r} (choose from {', '.join(FAMILIES)})")


def analytic_interior(spec: GeneratorSpec) -> Point | None:
    """A point strictly inside the family instance, exact, or None when
    the family carries no H-description to be interior to."""
    fam = spec.family
    if fam == "cube":
        return tuple([Fraction(1, 2)] * _req(spec, "d"))
    if fam == "cross":
        return tuple([Fraction(0)] * _req(spec, "d"))
    if fam == "dwarfed-cube":
        d = _req(spec, "d")
        return tuple([Fraction(1, 2 * d)] * d)
    if fam in ("polygon-product", "dwarfed-polygon-product"):
        d, s = _req(spec, "d"), _req(spec, "s")
        delta = d // 2
        pair = (Fraction(1, delta), Fraction(s, 2 * delta))
        return pair * delta
    return None


def _req(spec: GeneratorSpec, name: str) -> int:
    v = getattr(spec, name)
    if v is None:
        raise ValueError(f"family {spec.family!r} needs parameter {name}")
    return v
