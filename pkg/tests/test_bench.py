import csv
import io

import pytest

from linsteps import (BenchConfig, ConfigInvalid, StrassenConfig,
                      naive_product_counted, run_bench,
                      strassen_mult_count, strassen_product_counted)
from linsteps.bench import bench_inputs, derive_crossovers


def test_minimal_run_row_shape():
    report = run_bench(BenchConfig(sizes=(2,), entry_bits=8, thresholds=(1,),
                                   repetitions=1, seed=0))
    assert len(report.rows) == 2  # one naive + one strassen row
    naive = next(r for r in report.rows if r.method == "naive")
    assert naive.ops.mults == 8  # n^3 at n = 2


def test_threshold_one_counts():
    report = run_bench(BenchConfig(sizes=(4, 8), entry_bits=8, thresholds=(1,),
                                   repetitions=1, seed=3))
    by_size = {r.size: r for r in report.rows if r.method == "strassen"}
    assert by_size[4].ops.mults == 49 == strassen_mult_count(4)
    assert by_size[8].ops.mults == 343 == strassen_mult_count(8)


def test_reproducible_inputs_and_counts():
    cfg = BenchConfig(sizes=(2, 4), entry_bits=16, thresholds=(1, 2),
                      repetitions=1, seed=99)
    first, second = run_bench(cfg), run_bench(cfg)
    assert [r.ops for r in first.rows] == [r.ops for r in second.rows]
    assert bench_inputs(cfg) == bench_inputs(cfg)


def test_counts_match_standalone_runs():
    cfg = BenchConfig(sizes=(3, 4), entry_bits=8, thresholds=(2,),
                      repetitions=1, seed=7, variants=("winograd",))
    report = run_bench(cfg)
    inputs = bench_inputs(cfg)
    for row in report.rows:
        a, b = inputs[row.size]
        if row.method == "naive":
            _, ops = naive_product_counted(a, b)
        else:
            _, ops = strassen_product_counted(
                a, b, StrassenConfig(threshold=row.threshold, variant=row.variant))
        assert ops == row.ops


def test_crossover_consistent_with_rows():
    report = run_bench(BenchConfig(sizes=(2, 4, 8), entry_bits=16, thresholds=(1, 4),
                                   repetitions=1, seed=11))
    by_config, overall = derive_crossovers(report.rows)
    assert by_config == report.crossover_by_config
    assert overall == report.crossover_size


def test_every_configured_combination_appears_once():
    cfg = BenchConfig(sizes=(2, 3), entry_bits=8, thresholds=(1, 2),
                      repetitions=1, seed=5, variants=("strassen", "winograd"))
    report = run_bench(cfg)
    keys = [(r.size, r.method, r.variant, r.threshold) for r in report.rows]
    assert len(keys) == len(set(keys))
    for n in cfg.sizes:
        assert (n, "naive", "", 0) in keys
        for v in cfg.variants:
            for t in cfg.thresholds:
                assert (n, "strassen", v, t) in keys


def test_csv_columns():
    report = run_bench(BenchConfig(sizes=(2,), entry_bits=8, thresholds=(1,),
                                   repetitions=1, seed=0))
    rows = list(csv.reader(io.StringIO(report.to_csv())))
    assert rows[0] == ["size", "method", "variant", "threshold",
                       "median_ns", "mults", "adds", "subs"]
    assert len(rows) == 1 + len(report.rows)


@pytest.mark.parametrize("kwargs", [
    {"sizes": ()},
    {"sizes": (2,), "repetitions": 0},
    {"sizes": (2,), "thresholds": ()},
    {"sizes": (0,)},
    {"sizes": (512,)},
    {"sizes": (2,), "entry_bits": 0},
])
def test_config_validation(kwargs):
    with pytest.raises(ConfigInvalid):
        BenchConfig(**kwargs)


def test_large_entry_bits_completes():
    report = run_bench(BenchConfig(sizes=(4,), entry_bits=256, thresholds=(2,),
                                   repetitions=1, seed=1))
    assert all(r.median_ns >= 0 for r in report.rows)
