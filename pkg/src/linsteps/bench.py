"""Naive-vs-block-recursion crossover benchmark.

Only operation counts and harness properties are ever asserted; wall-clock
timings are reported because the crossover point is hardware-dependent.
Benchmark runs use the trace-free code paths and bypass the teaching-size
dimension cap.
"""

from __future__ import annotations

import csv
import io
import random
import statistics
import time
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import ConfigInvalid
from .limits import BENCH_SIZE_CAP
from .matmul import StrassenConfig, naive_product_counted, strassen_product_counted
from .matrix import Matrix
from .trace import OpCount

CSV_COLUMNS = ("size", "method", "variant", "threshold", "median_ns", "mults", "adds", "subs")


@dataclass(frozen=True)
class BenchConfig:
    sizes: tuple
    entry_bits: int = 32
    thresholds: tuple = (8,)
    repetitions: int = 3
    seed: int = 0
    variants: tuple = ("winograd",)

    def __post_init__(self):
        if not self.sizes:
            raise ConfigInvalid("sizes must be nonempty")
        if not self.thresholds:
            raise ConfigInvalid("thresholds must be nonempty")
        if not self.variants:
            raise ConfigInvalid("variants must be nonempty")
        if self.repetitions < 1:
            raise ConfigInvalid(f"repetitions must be >= 1, got {self.repetitions}")
        if self.entry_bits < 1:
            raise ConfigInvalid(f"entry_bits must be >= 1, got {self.entry_bits}")
        if any(s < 1 or s > BENCH_SIZE_CAP for s in self.sizes):
            raise ConfigInvalid(f"sizes must lie in 1..{BENCH_SIZE_CAP}")
        if any(t < 1 for t in self.thresholds):
            raise ConfigInvalid("thresholds must be >= 1")


@dataclass(frozen=True)
class BenchRow:
    size: int
    method: str          # "naive" or "strassen"
    variant: str         # "" for naive
    threshold: int       # 0 for naive
    median_ns: int
    ops: OpCount


@dataclass(frozen=True)
class BenchReport:
    config: BenchConfig
    rows: tuple
    crossover_by_config: dict = field(compare=False)
    crossover_size: int | None = None

    def to_csv(self) -> str:
        out = io.StringIO()
        writer = csv.writer(out)
        writer.writerow(CSV_COLUMNS)
        for r in self.rows:
            writer.writerow([r.size, r.method, r.variant,
                             r.threshold if r.method == "strassen" else "",
                             r.median_ns, r.ops.mults, r.ops.adds, r.ops.subs])
        return out.getvalue()


def random_rational_matrix(rng: random.Random, n: int, bits: int) -> Matrix:
    """Deterministic n x n matrix with numerators/denominators of ~bits bits."""
    entries = []
    for _ in range(n * n):
        num = rng.getrandbits(bits)
        if rng.random() < 0.5:
            num = -num
        den = rng.getrandbits(bits) or 1
        entries.append(Fraction(num, den))
    return Matrix(n, n, entries)


def bench_inputs(cfg: BenchConfig) -> dict:
    """The exact input pairs a run uses, keyed by size (seed-deterministic)."""
    rng = random.Random(cfg.seed)
    return {n: (random_rational_matrix(rng, n, cfg.entry_bits),
                random_rational_matrix(rng, n, cfg.entry_bits))
            for n in cfg.sizes}


def _time_runs(fn, reps: int) -> tuple:
    times = []
    result = None
    for _ in range(reps):
        start = time.perf_counter_ns()
        result = fn()
        times.append(time.perf_counter_ns() - start)
    return int(statistics.median(times)), result


def derive_crossovers(rows) -> tuple:
    """Recompute crossover sizes from the timing rows themselves."""
    naive_times = {r.size: r.median_ns for r in rows if r.method == "naive"}
    by_config: dict = {}
    for r in rows:
        if r.method != "strassen":
            continue
        key = (r.variant, r.threshold)
        if r.median_ns < naive_times[r.size]:
            current = by_config.get(key)
            if current is None or r.size < current:
                by_config[key] = r.size
        by_config.setdefault(key, None)
    hits = [s for s in by_config.values() if s is not None]
    return by_config, (min(hits) if hits else None)


def run_bench(cfg: BenchConfig) -> BenchReport:
    """Measure naive vs block-recursion products over the configured grid."""
    inputs = bench_inputs(cfg)
    rows = []
    for n in cfg.sizes:
        a, b = inputs[n]
        median_ns, outcome = _time_runs(lambda: naive_product_counted(a, b), cfg.repetitions)
        rows.append(BenchRow(n, "naive", "", 0, median_ns, outcome[1]))
        for variant in cfg.variants:
            for threshold in cfg.thresholds:
                sw_cfg = StrassenConfig(threshold=threshold, variant=variant)
                median_ns, outcome = _time_runs(
                    lambda: strassen_product_counted(a, b, sw_cfg), cfg.repetitions)
                rows.append(BenchRow(n, "strassen", variant, threshold, median_ns, outcome[1]))
    by_config, overall = derive_crossovers(rows)
    return BenchReport(cfg, tuple(rows), by_config, overall)
