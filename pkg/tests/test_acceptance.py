"""Acceptance suite.

Each criterion prints one `criterion NN [PASS|FAIL] ...` line (run with
`pytest -s` to see them live) and then asserts, so a red run names the
failing criterion both in the line and in the pytest report.  Time
limits: 60s per dwarfed-cube instance, 120s per random-sphere instance.
"""

import random
import time
from fractions import Fraction as F
from math import comb

from bbhull.generators import GeneratorSpec, analytic_interior, generate
from bbhull.geometry import affine_basis, point, polar, triangulation_volume
from bbhull.hull import InsertionOrder, caratheodory, convex_hull
from bbhull.oracle import IncidenceMatrix, brute_force_hull, enumerate_faces

DWARFED_CUBE_LIMIT = 60.0
RAND_SPHERE_LIMIT = 120.0


def _criterion(num, ok, detail):
    line = f"criterion {num:02d} [{'PASS' if ok else 'FAIL'}] {detail}"
    print(line)
    assert ok, line


def normset(halfspaces):
    return sorted(h.normalized().coefficients() for h in halfspaces)


def test_criterion_01_dwarfed_cubes_exact_and_fast():
    worst = 0.0
    ok = True
    for d in range(2, 11):
        g = generate(GeneratorSpec(family="dwarfed-cube", d=d))
        t0 = time.perf_counter()
        poly, _, _ = convex_hull(g.points)
        dt = time.perf_counter() - t0
        worst = max(worst, dt)
        if dt >= DWARFED_CUBE_LIMIT:
            ok = False
        if poly.n_facets != 2 * d + 1:
            ok = False
        if len(poly.vertex_indices) != d * d + 1:
            ok = False
        if normset(poly.facets) != normset(g.facets):
            ok = False
    _criterion(
        1, ok,
        f"dwarfed cubes d=2..10: 2d+1 facets, d^2+1 vertices, exact "
        f"H-description, worst time {worst:.1f}s < {DWARFED_CUBE_LIMIT:.0f}s",
    )


def test_criterion_02_polar_dwarfed_cube_star():
    ok = True
    got = []
    for d in range(3, 9):
        spec = GeneratorSpec(family="dwarfed-cube", d=d)
        pts = polar(generate(spec), analytic_interior(spec))
        # facet order puts the dwarfing cut last, so the given insertion
        # order places its polar point last
        _, _, stats = convex_hull(pts)
        got.append(stats.star_of_last)
        if stats.star_of_last != 2**d - d - 1:
            ok = False
    _criterion(2, ok, f"polar dwarfed cube star d=3..8 = 2^d-d-1, got {got}")


def test_criterion_03_dwarfed_polygon_products():
    ok = True
    rows = []
    for d, s in [(4, 3), (4, 4), (4, 5), (4, 6), (6, 3), (6, 4)]:
        delta = d // 2
        spec = GeneratorSpec(family="dwarfed-polygon-product", d=d, s=s)
        g = generate(spec)
        poly, _, _ = convex_hull(g.points)
        base = generate(GeneratorSpec(family="polygon-product", d=d, s=s))
        shared = len(set(g.points) & set(base.points))
        _, _, pstats = convex_hull(polar(g, analytic_interior(spec)))
        checks = (
            poly.n_facets == delta * s + 1,
            len(poly.vertex_indices) == (d - 1) * (delta * s + 1 - d) + 2,
            shared == delta * (s - 2) + 1,
            pstats.star_of_last == s**delta - delta * s + 2 * delta - 1,
        )
        rows.append(f"({d},{s}):{'/'.join('y' if c else 'N' for c in checks)}")
        ok = ok and all(checks)
    _criterion(
        3, ok,
        "dwarfed polygon products: facet, vertex, shared-vertex and polar "
        "star formulas; " + " ".join(rows),
    )


def test_criterion_04_cross_polytopes():
    ok = True
    for d in range(3, 9):
        g = generate(GeneratorSpec(family="cross", d=d))
        poly, _, _ = convex_hull(g.points)
        if poly.n_facets != 2**d:
            ok = False
        if len(poly.vertex_indices) != 2 * d:
            ok = False
    _criterion(4, ok, "cross polytopes d=3..8 have 2^d facets and 2d vertices")


def test_criterion_05_simplex_face_lattice():
    ok = True
    for n in range(1, 7):
        if n == 1:
            pts = [(F(1),), (F(2),)]
        else:
            pts = generate(GeneratorSpec(family="cyclic", d=n, n=n + 1)).points
        poly, _, _ = convex_hull(pts)
        fvec = enumerate_faces(IncidenceMatrix.from_polytope(poly), poly.dim)
        if fvec != tuple(comb(n + 1, k + 1) for k in range(n)):
            ok = False
    _criterion(5, ok, "simplex f-vectors n=1..6 equal C(n+1,k+1)")


def test_criterion_06_random_instances_match_brute_force():
    rng = random.Random(20240817)
    checked = 0
    ok = True
    while checked < 50:
        d = rng.choice((2, 3, 4))
        n = rng.randint(d + 1, 12)
        pts = [
            tuple(F(rng.randint(-10, 10), rng.randint(1, 4)) for _ in range(d))
            for _ in range(n)
        ]
        if affine_basis([point(p) for p in pts])[0] < d:
            continue
        checked += 1
        poly, _, _ = convex_hull(pts)
        if normset(poly.facets) != normset(brute_force_hull(pts)):
            ok = False
    _criterion(6, ok, "50 random instances (d<=4, n<=12) match brute force")


def test_criterion_07_order_invariance_and_growth():
    instances = [
        GeneratorSpec(family="cube", d=3),
        GeneratorSpec(family="cross", d=3),
        GeneratorSpec(family="dwarfed-cube", d=4),
        GeneratorSpec(family="simplex-product", a=2, b=2),
        GeneratorSpec(family="polygon-product", d=4, s=3),
        GeneratorSpec(family="dwarfed-polygon-product", d=4, s=4),
        GeneratorSpec(family="cyclic", d=4, n=8),
        GeneratorSpec(family="rand-sphere", d=3, n=12, seed=5),
    ]
    ok = True
    for spec in instances:
        g = generate(spec)
        ref, rtri, _ = convex_hull(g.points)
        ref_facets = normset(ref.facets)
        ref_vol = triangulation_volume(rtri)
        for seed in range(20):
            poly, tri, stats = convex_hull(
                g.points, InsertionOrder("random", seed)
            )
            if normset(poly.facets) != ref_facets:
                ok = False
            if poly.vertex_indices != ref.vertex_indices:
                ok = False
            if triangulation_volume(tri) != ref_vol:
                ok = False
            ts = [t for _, _, t in stats.steps]
            if ts != sorted(ts):
                ok = False
            if any(m > (poly.dim + 1) * t for _, m, t in stats.steps):
                ok = False
    _criterion(
        7, ok,
        "8 families x 20 random orders: same facets, vertices and exact "
        "volume; cell count nondecreasing, facets <= (d+1)t at every step",
    )


def test_criterion_08_caratheodory():
    rng = random.Random(1123581321)
    ok = True
    for trial in range(100):
        d = rng.choice((2, 3, 4))
        fam = rng.choice(("cube", "cross", "dwarfed-cube"))
        g = generate(GeneratorSpec(family=fam, d=d))
        pts = g.points
        weights = [F(rng.randint(1, 20)) for _ in pts]
        total = sum(weights)
        target = tuple(
            sum(w * p[k] for w, p in zip(weights, pts)) / total
            for k in range(d)
        )
        idx, lam = caratheodory(pts, target)
        if len(idx) > d + 1 or len(idx) != len(lam):
            ok = False
        if any(l < 0 for l in lam) or sum(lam) != 1:
            ok = False
        chosen = [point(pts[i]) for i in idx]
        if affine_basis(chosen)[0] != len(idx) - 1:
            ok = False
        rec = tuple(
            sum(l * p[k] for l, p in zip(lam, chosen)) for k in range(d)
        )
        if rec != target:
            ok = False
    _criterion(
        8, ok,
        "100 interior points (d<=4): affinely independent support, "
        "nonnegative weights summing to 1, exact reconstruction",
    )


def test_criterion_09_random_sphere_hulls():
    ok = True
    times = []
    for n, seed in ((100, 1), (200, 2)):
        g = generate(GeneratorSpec(family="rand-sphere", d=3, n=n, seed=seed))
        for p in g.points:
            if any(10**6 % x.denominator for x in p):
                ok = False
        t0 = time.perf_counter()
        poly, _, _ = convex_hull(g.points)
        dt = time.perf_counter() - t0
        times.append(dt)
        if dt >= RAND_SPHERE_LIMIT:
            ok = False
        if any(len(fv) != 3 for fv in poly.facet_vertices):
            ok = False
        f0, f1, f2 = enumerate_faces(
            IncidenceMatrix.from_polytope(poly), poly.dim
        )
        if f0 - f1 + f2 != 2:
            ok = False
        if f0 != n:
            ok = False
    _criterion(
        9, ok,
        f"random sphere hulls n=100,200: simplicial, Euler f0-f1+f2=2, "
        f"denominators divide 10^6, times "
        f"{'/'.join(f'{t:.1f}s' for t in times)} < {RAND_SPHERE_LIMIT:.0f}s",
    )


def test_criterion_10_polar_polygon_product_growth():
    ok = True
    means = []
    stars = []
    for s in (3, 4, 5, 6):
        spec = GeneratorSpec(family="dwarfed-polygon-product", d=4, s=s)
        pts = polar(generate(spec), analytic_interior(spec))
        sizes = []
        for seed in range(10):
            _, tri, _ = convex_hull(pts, InsertionOrder("random", seed))
            sizes.append(len(tri.cells))
        means.append(sum(sizes) / len(sizes))
        _, _, stats = convex_hull(pts)
        stars.append(stats.star_of_last)
        if stats.star_of_last != s * s - 2 * s + 3:
            ok = False
    if not all(a < b for a, b in zip(means, means[1:])):
        ok = False
    _criterion(
        10, ok,
        f"polar dwarfed polygon products s=3..6: mean placing size "
        f"{[float(m) for m in means]} strictly increasing, star of last "
        f"point {stars} = s^2-2s+3",
    )
