"""Scaling benchmark: generate instances, build SEOs, time the solver.

Timing protocol: every instance is built and its SEO computed up front; the
solver is then run ``repeats`` times per instance, cycling through all sizes
on each round so that machine-level drift hits every size alike. The reported
``solve_ms`` is the fastest round, measured with the garbage collector off
(the same convention as :mod:`timeit`).
"""
from __future__ import annotations

import csv
import gc
import time
from dataclasses import astuple, dataclass
from typing import Iterable, TextIO

from .generators import GenSpec
from .ordering import find_seo
from .solver import solve

CSV_HEADER = ("n", "m", "family", "seed", "seo_ms", "solve_ms", "size")


@dataclass(frozen=True)
class BenchRow:
    n: int
    m: int
    family: str
    seed: int
    seo_ms: float
    solve_ms: float
    size: int


def _timed(fn, *args):
    gc.collect()
    was_enabled = gc.isenabled()
    gc.disable()
    try:
        t0 = time.perf_counter()
        out = fn(*args)
        return out, (time.perf_counter() - t0) * 1000.0
    finally:
        if was_enabled:
            gc.enable()


def run_bench(family: str, sizes: Iterable[int], seed: int, repeats: int = 21, **knobs) -> list[BenchRow]:
    sizes = list(sizes)
    if repeats < 1:
        raise ValueError("repeats must be positive")
    instances = []
    for n in sizes:
        g = GenSpec(family, n, seed, **knobs).generate()
        seo, seo_ms = _timed(find_seo, g)
        instances.append((g, seo, seo_ms))

    best = [float("inf")] * len(sizes)
    result_size = [0] * len(sizes)
    for _ in range(repeats):
        for k, (g, seo, _) in enumerate(instances):
            res, ms = _timed(solve, g, seo)
            best[k] = min(best[k], ms)
            result_size[k] = res.size
    return [
        BenchRow(g.n, g.m, family, seed, round(seo_ms, 3), round(best[k], 3), result_size[k])
        for k, (g, _, seo_ms) in enumerate(instances)
    ]


def write_csv(rows: list[BenchRow], fh: TextIO) -> None:
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for row in rows:
        w.writerow(astuple(row))


def read_csv(fh: TextIO) -> list[BenchRow]:
    reader = csv.DictReader(fh)
    if tuple(reader.fieldnames or ()) != CSV_HEADER:
        raise ValueError(f"unexpected header {reader.fieldnames}")
    return [
        BenchRow(int(r["n"]), int(r["m"]), r["family"], int(r["seed"]),
                 float(r["seo_ms"]), float(r["solve_ms"]), int(r["size"]))
        for r in reader
    ]


def doubling_ratios(rows: list[BenchRow]) -> list[float]:
    """``solve_ms`` ratio between consecutive rows (sizes assumed to double)."""
    return [b.solve_ms / a.solve_ms for a, b in zip(rows, rows[1:])]
