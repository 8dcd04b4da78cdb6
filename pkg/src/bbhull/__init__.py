"""Exact convex hulls by incremental placing, plus benchmark generators."""

from .bench import RunRecord, StatsSummary, bench_spec, render_csv, run_bench, summarize
from .generators import FAMILIES, GeneratorSpec, analytic_interior, generate
from .geometry import (
    AffineEmbedding,
    Halfspace,
    Polytope,
    Triangulation,
    affine_basis,
    canonical_equation,
    evaluate,
    hyperplane_through,
    point,
    polar,
    project_to_span,
    simplex_volume,
    triangulation_volume,
)
from .hull import (
    HullStats,
    InsertionOrder,
    PointOutsideHull,
    caratheodory,
    check_invariants,
    convex_hull,
    extract_facets,
    find_violated,
    initial_simplex,
    place_point,
)
from .linalg import (
    LinAlgError,
    NoSolutionError,
    UnderdeterminedError,
    det,
    det_sign,
    gauss_rank,
    kernel_basis,
    solve_linear,
)
from .oracle import (
    IncidenceMatrix,
    ValidationReport,
    brute_force_hull,
    enumerate_faces,
    hull_volume,
    validate_triangulation,
)
from .polyfile import (
    PolyData,
    PolyParseError,
    parse_poly,
    parse_triangulation,
    write_poly,
    write_triangulation,
)

__version__ = "0.1.0"

__all__ = [
    "AffineEmbedding",
    "FAMILIES",
    "GeneratorSpec",
    "Halfspace",
    "HullStats",
    "IncidenceMatrix",
    "InsertionOrder",
    "LinAlgError",
    "NoSolutionError",
    "PointOutsideHull",
    "PolyData",
    "PolyParseError",
    "Polytope",
    "RunRecord",
    "StatsSummary",
    "Triangulation",
    "UnderdeterminedError",
    "ValidationReport",
    "affine_basis",
    "analytic_interior",
    "bench_spec",
    "brute_force_hull",
    "canonical_equation",
    "caratheodory",
    "check_invariants",
    "convex_hull",
    "det",
    "det_sign",
    "enumerate_faces",
    "evaluate",
    "extract_facets",
    "find_violated",
    "gauss_rank",
    "generate",
    "hull_volume",
    "hyperplane_through",
    "initial_simplex",
    "kernel_basis",
    "parse_poly",
    "parse_triangulation",
    "place_point",
    "point",
    "polar",
    "project_to_span",
    "render_csv",
    "run_bench",
    "simplex_volume",
    "solve_linear",
    "summarize",
    "triangulation_volume",
    "validate_triangulation",
    "write_poly",
    "write_triangulation",
]
