"""Count-based benchmark harness.

A benchmark run places one instance's points under one insertion order
and records structural counters (vertices, facets, final triangulation
size, star of the last point, halfspace evaluations) plus measured wall
time.  Counters are exact and reproducible from the master seed; the
wall-time column is measured, never asserted, and is the only
non-reproducible field.
"""

from __future__ import annotations

import csv
import io
import math
import random
import time
from dataclasses import dataclass, fields
from fractions import Fraction

from .generators import GeneratorSpec, generate
from .hull import InsertionOrder, convex_hull


@dataclass(frozen=True)
class RunRecord:
    instance: str
    d: int
    param: int | None
    order: str
    seed: int | None
    vertices: int
    facets: int
    t_final: int
    star_of_last: int
    evaluations: int
    millis: float


CSV_COLUMNS = tuple(f.name for f in fields(RunRecord))


@dataclass(frozen=True)
class StatsSummary:
    """avg/min/max and sample standard deviation (n-1 denominator;
    0.0 for a single value).  avg is exact for exact inputs."""

    avg: Fraction
    min: Fraction
    max: Fraction
    stddev: float


def summarize(values) -> StatsSummary:
    vals = [Fraction(v) if not isinstance(v, float) else v for v in values]
    if not vals:
        raise ValueError("summarize of an empty sequence")
    n = len(vals)
    avg = sum(vals) / n
    if n == 1:
        sd = 0.0
    else:
        var = sum((v - avg) ** 2 for v in vals) / (n - 1)
        sd = math.sqrt(var)
    return StatsSummary(avg=avg, min=min(vals), max=max(vals), stddev=sd)


def run_bench(
    points,
    *,
    instance: str,
    d: int,
    param: int | None = None,
    runs: int = 5,
    order: str = "random",
    seed: int = 0,
) -> tuple[list[RunRecord], dict[str, StatsSummary]]:
    """Hull the same points `runs` times and collect counters.

    With the random order policy each run gets its own permutation seed
    derived deterministically from the master seed; other policies repeat
    the identical run (only the timing can differ).
    """
    if runs < 1:
        raise ValueError("runs must be positive")
    rng = random.Random(seed)
    records = []
    for _ in range(runs):
        if order == "random":
            run_seed = rng.randrange(2**31)
            policy = InsertionOrder("random", run_seed)
        else:
            run_seed = None
            policy = InsertionOrder(order)
        start = time.perf_counter()
        poly, _, stats = convex_hull(points, policy)
        millis = (time.perf_counter() - start) * 1000.0
        records.append(
            RunRecord(
                instance=instance,
                d=d,
                param=param,
                order=policy.strategy,
                seed=run_seed,
                vertices=len(poly.vertex_indices),
                facets=len(poly.facets),
                t_final=stats.steps[-1][2],
                star_of_last=stats.star_of_last,
                evaluations=stats.evaluations,
                millis=millis,
            )
        )
    metrics = ("vertices", "facets", "t_final", "star_of_last", "evaluations", "millis")
    summaries = {
        m: summarize([getattr(r, m) for r in records]) for m in metrics
    }
    return records, summaries


def bench_spec(
    spec: GeneratorSpec, *, runs: int = 5, order: str = "random", seed: int = 0
):
    """run_bench for a generator family instance."""
    poly = generate(spec)
    return run_bench(
        poly.points,
        instance=spec.label(),
        d=poly.ambient_dim,
        param=spec.param(),
        runs=runs,
        order=order,
        seed=seed,
    )


def render_csv(records) -> str:
    """CSV text for run records: one row per run, fixed column order."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for r in records:
        writer.writerow(
            [
                r.instance,
                r.d,
                "" if r.param is None else r.param,
                r.order,
                "" if r.seed is None else r.seed,
                r.vertices,
                r.facets,
                r.t_final,
                r.star_of_last,
                r.evaluations,
                f"{r.millis:.3f}",
            ]
        )
    return buf.getvalue()


def format_summary(summaries: dict[str, StatsSummary]) -> str:
    """Human-readable avg/min/max/stddev table."""
    lines = [f"{'metric':<14}{'avg':>14}{'min':>12}{'max':>12}{'stddev':>12}"]
    for name, s in summaries.items():
        avg = float(s.avg)
        lines.append(
            f"{name:<14}{avg:>14.3f}{float(s.min):>12.3f}"
            f"{float(s.max):>12.3f}{s.stddev:>12.3f}"
        )
    return "\n".join(lines)
